#pragma once
// Test-only reference pipeline, kept independent of the FFT path: products
// by direct coefficient convolution, synthesis by explicit mode summation,
// norms by the rectangle rule over directly synthesized samples.  Used to
// cross-check fixture ratios; one-dimensional.

#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "torus/exponents.hpp"
#include "torus/field.hpp"

namespace oracle {

using torus::cplx;

using CoeffMap = std::map<int, cplx>;

inline CoeffMap coeffs_of(const torus::SpectralField& f) {
    CoeffMap m;
    const auto& g = f.grid();
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i] == cplx(0.0)) continue;
        m[g.freq_at(i)[0]] = f.coeffs()[i];
    }
    return m;
}

inline CoeffMap convolve(const CoeffMap& a, const CoeffMap& b) {
    CoeffMap out;
    for (const auto& [n, cn] : a)
        for (const auto& [m, cm] : b) out[n + m] += cn * cm;
    return out;
}

inline CoeffMap apply_symbol(const CoeffMap& a, const std::function<double(double)>& sym) {
    CoeffMap out;
    for (const auto& [n, c] : a) out[n] = c * sym(std::abs(double(n)));
    return out;
}

inline int bandwidth(const CoeffMap& a) {
    int bw = 0;
    for (const auto& [n, c] : a)
        if (c != cplx(0.0)) bw = std::max(bw, std::abs(n));
    return bw;
}

// Direct synthesis at x = k / m, k = 0..m-1.
inline std::vector<cplx> synthesize(const CoeffMap& a, int m) {
    std::vector<cplx> out(m, 0.0);
    for (const auto& [n, c] : a) {
        for (int k = 0; k < m; ++k) {
            double ph = 2.0 * torus::pi * n * k / double(m);
            out[k] += c * cplx(std::cos(ph), std::sin(ph));
        }
    }
    return out;
}

// Rectangle-rule norm over m points, summed high-index-first so the
// accumulation order differs from the library path.
inline double norm_at(const CoeffMap& a, int m, double p) {
    std::vector<cplx> s = synthesize(a, m);
    if (torus::is_inf(p)) {
        double mx = 0.0;
        for (const cplx& v : s) mx = std::max(mx, std::abs(v));
        return mx;
    }
    double acc = 0.0;
    for (int k = m - 1; k >= 0; --k) acc += std::pow(std::abs(s[k]), p);
    return std::pow(acc / m, 1.0 / p);
}

// Mirrors the library's grid-size policy (the discrete norms are defined on
// these grids) without sharing any evaluation code.
inline int padded_size(int bw) { return std::max(4, torus::next_pow2(2 * bw + 2)); }
inline int norm_grid(const CoeffMap& a, int base_n) {
    return torus::next_pow2(std::max({base_n, 8 * std::max(bandwidth(a), 1) + 2}));
}

inline std::function<double(double)> ds_sym(double s) {
    return [s](double r) {
        if (s == 0.0) return 1.0;
        return r == 0.0 ? 0.0 : std::pow(2.0 * torus::pi * r, s);
    };
}
inline std::function<double(double)> js_sym(double s) {
    return [s](double r) { return std::pow(1.0 + 4.0 * torus::pi * torus::pi * r * r, 0.5 * s); };
}

// Full independent Leibniz ratio (d = 1, unit period).
inline double leibniz_ratio(const torus::SpectralField& f, const torus::SpectralField& g,
                            const torus::ExponentTuple& t, bool bessel) {
    CoeffMap cf = coeffs_of(f), cg = coeffs_of(g);
    CoeffMap prod = convolve(cf, cg);
    auto op = bessel ? js_sym(t.s) : ds_sym(t.s);
    const int pm = padded_size(bandwidth(cf) + bandwidth(cg));
    double num = norm_at(apply_symbol(prod, op), norm_grid(prod, pm), t.r);
    double den =
        norm_at(apply_symbol(cf, op), norm_grid(cf, f.grid().n()), t.p1) *
            norm_at(cg, norm_grid(cg, g.grid().n()), t.q1) +
        norm_at(cf, norm_grid(cf, f.grid().n()), t.p2) *
            norm_at(apply_symbol(cg, op), norm_grid(cg, g.grid().n()), t.q2);
    return den == 0.0 ? 0.0 : num / den;
}

inline double product_ratio(const torus::SpectralField& f, const torus::SpectralField& g,
                            double s, double p, double q, double r) {
    CoeffMap cf = coeffs_of(f), cg = coeffs_of(g);
    CoeffMap prod = convolve(cf, cg);
    const int pm = padded_size(bandwidth(cf) + bandwidth(cg));
    double num = norm_at(apply_symbol(prod, js_sym(-s)), norm_grid(prod, pm), r);
    double den = norm_at(apply_symbol(cf, js_sym(-s)), norm_grid(cf, f.grid().n()), p) *
                 norm_at(apply_symbol(cg, js_sym(s)), norm_grid(cg, g.grid().n()), q);
    return den == 0.0 ? 0.0 : num / den;
}

}  // namespace oracle
