#pragma once
// SpectralField: a trigonometric polynomial held both as Fourier coefficients
// and as synchronized physical samples.  Fields are immutable after
// construction; every operation returns a new field.

#include <algorithm>
#include <complex>
#include <istream>
#include <ostream>
#include <vector>

#include "torus/fft.hpp"
#include "torus/grid.hpp"

namespace torus {

using cplx = std::complex<double>;

class SpectralField {
  public:
    static SpectralField from_coeffs(const TorusGrid& g, std::vector<cplx> coeffs,
                                     bool is_real = false) {
        if (coeffs.size() != g.total()) throw config_error("field: coefficient count mismatch");
        std::vector<cplx> samples = fft_inverse(dims_of(g), coeffs);
        if (is_real)
            for (auto& v : samples) v = cplx(v.real(), 0.0);
        return SpectralField(g, std::move(coeffs), std::move(samples), is_real);
    }

    static SpectralField from_samples(const TorusGrid& g, std::vector<cplx> samples,
                                      bool is_real = false) {
        if (samples.size() != g.total()) throw config_error("field: sample count mismatch");
        std::vector<cplx> coeffs = fft_forward(dims_of(g), samples);
        return SpectralField(g, std::move(coeffs), std::move(samples), is_real);
    }

    static SpectralField from_real_samples(const TorusGrid& g, const std::vector<double>& vals) {
        std::vector<cplx> s(vals.size());
        for (std::size_t i = 0; i < vals.size(); ++i) s[i] = vals[i];
        return from_samples(g, std::move(s), true);
    }

    static SpectralField zero(const TorusGrid& g) {
        return SpectralField(g, std::vector<cplx>(g.total(), 0.0),
                             std::vector<cplx>(g.total(), 0.0), true);
    }

    static SpectralField constant(const TorusGrid& g, cplx value) {
        std::vector<cplx> c(g.total(), 0.0);
        c[0] = value;
        return from_coeffs(g, std::move(c), value.imag() == 0.0);
    }

    // e_n(x) = e^{2 pi i (n/period) . x}: a single complex mode.
    static SpectralField single_mode(const TorusGrid& g, const Freq& n) {
        if (!g.holds(n)) throw config_error("field: mode outside lattice");
        std::vector<cplx> c(g.total(), 0.0);
        c[g.flat_of(n)] = 1.0;
        bool zero_mode = true;
        for (int a = 0; a < g.dim(); ++a) zero_mode = zero_mode && n[a] == 0;
        return from_coeffs(g, std::move(c), zero_mode);
    }

    static SpectralField cosine(const TorusGrid& g, const Freq& n) {
        std::vector<cplx> c(g.total(), 0.0);
        Freq neg{-n[0], -n[1], -n[2]};
        c[g.flat_of(n)] += 0.5;
        c[g.flat_of(neg)] += 0.5;
        return from_coeffs(g, std::move(c), true);
    }

    static SpectralField sine(const TorusGrid& g, const Freq& n) {
        std::vector<cplx> c(g.total(), 0.0);
        Freq neg{-n[0], -n[1], -n[2]};
        c[g.flat_of(n)] += cplx(0.0, -0.5);
        c[g.flat_of(neg)] += cplx(0.0, 0.5);
        return from_coeffs(g, std::move(c), true);
    }

    const TorusGrid& grid() const { return grid_; }
    bool is_real() const { return is_real_; }
    const std::vector<cplx>& coeffs() const { return coeffs_; }
    const std::vector<cplx>& samples() const { return samples_; }

    cplx coeff(const Freq& n) const {
        return grid_.holds(n) ? coeffs_[grid_.flat_of(n)] : cplx(0.0);
    }
    cplx mean() const { return coeffs_[0]; }

    // Largest occupied |n_i| over all axes (exact zero test on coefficients).
    int bandwidth() const {
        int bw = 0;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == cplx(0.0)) continue;
            Freq f = grid_.freq_at(i);
            for (int a = 0; a < grid_.dim(); ++a) bw = std::max(bw, std::abs(f[a]));
        }
        return bw;
    }

    // Same polynomial on an n_new-per-axis grid (zero-pad or truncate).
    // Truncation that would drop a nonzero coefficient is a configuration error.
    SpectralField resampled(int n_new) const {
        TorusGrid g2(grid_.dim(), n_new, grid_.period());
        std::vector<cplx> c2(g2.total(), 0.0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == cplx(0.0)) continue;
            Freq f = grid_.freq_at(i);
            if (!g2.holds(f))
                throw config_error("resample: target grid drops occupied mode");
            c2[g2.flat_of(f)] = coeffs_[i];
        }
        return from_coeffs(g2, std::move(c2), is_real_);
    }

    SpectralField operator+(const SpectralField& o) const { return combine(o, 1.0); }
    SpectralField operator-(const SpectralField& o) const { return combine(o, -1.0); }
    SpectralField operator*(double a) const {
        std::vector<cplx> c = coeffs_;
        for (auto& v : c) v *= a;
        return from_coeffs(grid_, std::move(c), is_real_);
    }

    void write(std::ostream& os) const {
        os << "torusfield 1 " << grid_.dim() << ' ' << grid_.n() << ' '
           << fmt(grid_.period()) << ' ' << (is_real_ ? 1 : 0) << '\n';
        // lexicographic frequency order
        for_lexicographic([&](const Freq& f) {
            cplx v = coeff(f);
            os << f[0];
            if (grid_.dim() > 1) os << ' ' << f[1];
            if (grid_.dim() > 2) os << ' ' << f[2];
            os << ' ' << fmt(v.real()) << ' ' << fmt(v.imag()) << '\n';
        });
    }

    static SpectralField read(std::istream& is) {
        std::string tag;
        int version = 0, dim = 0, n = 0, real_flag = 0;
        double period = 0.0;
        is >> tag >> version >> dim >> n >> period >> real_flag;
        if (tag != "torusfield" || version != 1)
            throw config_error("field: unrecognized serialization header");
        TorusGrid g(dim, n, period);
        std::vector<cplx> c(g.total(), 0.0);
        std::size_t count = g.total();
        for (std::size_t i = 0; i < count; ++i) {
            Freq f{0, 0, 0};
            for (int a = 0; a < dim; ++a) is >> f[a];
            double re, im;
            is >> re >> im;
            if (!is) throw config_error("field: truncated serialization");
            c[g.flat_of(f)] = cplx(re, im);
        }
        return from_coeffs(g, std::move(c), real_flag != 0);
    }

  private:
    SpectralField(const TorusGrid& g, std::vector<cplx> c, std::vector<cplx> s, bool r)
        : grid_(g), coeffs_(std::move(c)), samples_(std::move(s)), is_real_(r) {}

    static std::vector<int> dims_of(const TorusGrid& g) {
        return std::vector<int>(static_cast<std::size_t>(g.dim()), g.n());
    }

    SpectralField combine(const SpectralField& o, double sign) const {
        if (grid_ != o.grid_) throw config_error("field: grid mismatch in arithmetic");
        std::vector<cplx> c(coeffs_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] + sign * o.coeffs_[i];
        return from_coeffs(grid_, std::move(c), is_real_ && o.is_real_);
    }

    template <typename Fn>
    void for_lexicographic(Fn&& fn) const {
        const int lo = -grid_.n() / 2, hi = grid_.n() / 2;
        Freq f{0, 0, 0};
        if (grid_.dim() == 1) {
            for (f[0] = lo; f[0] < hi; ++f[0]) fn(f);
        } else if (grid_.dim() == 2) {
            for (f[0] = lo; f[0] < hi; ++f[0])
                for (f[1] = lo; f[1] < hi; ++f[1]) fn(f);
        } else {
            for (f[0] = lo; f[0] < hi; ++f[0])
                for (f[1] = lo; f[1] < hi; ++f[1])
                    for (f[2] = lo; f[2] < hi; ++f[2]) fn(f);
        }
    }

    TorusGrid grid_;
    std::vector<cplx> coeffs_;
    std::vector<cplx> samples_;
    bool is_real_;
};

}  // namespace torus
