#pragma once
// Deterministic function families for the inequality sweeps: power-law
// random spectra, single modes, periodized concentrator bumps and
// phase-aligned resonant pairs.  Generation depends only on (seed, index),
// never on scheduling.

#include <cstdint>
#include <string>
#include <vector>

#include "torus/bump.hpp"
#include "torus/field.hpp"

namespace torus {

// Self-contained xorshift* generator.  Standard-library distributions are
// implementation-defined, which would break byte-identical reports.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next_u64() {
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545f4914f6cdd1dull;
    }
    double uniform01() { return (next_u64() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  private:
    std::uint64_t state_;
};

enum class FamilyKind { random_decay, single_modes, concentrator, product_resonant };

inline std::string family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::random_decay: return "random";
        case FamilyKind::single_modes: return "single_modes";
        case FamilyKind::concentrator: return "concentrator";
        default: return "product_resonant";
    }
}

struct FunctionFamily {
    FamilyKind kind = FamilyKind::random_decay;
    int bandwidth = 16;
    std::uint64_t seed = 1;
    int count = 8;
    bool mean_zero = true;
    double alpha = 2.0;     // spectral decay exponent for random_decay
    double lambda = 8.0;    // concentration scale
    double p_star = 2.0;    // concentrator amplitude normalization lambda^{d/p*}

    std::string describe() const {
        std::string s = family_kind_name(kind) + ":bw=" + std::to_string(bandwidth) +
                        ",seed=" + std::to_string(seed) + ",count=" + std::to_string(count);
        if (kind == FamilyKind::random_decay || kind == FamilyKind::product_resonant)
            s += ",alpha=" + fmt(alpha);
        if (kind == FamilyKind::concentrator) s += ",lambda=" + fmt(lambda);
        return s;
    }
};

namespace family_detail {

inline SpectralField random_decay_field(const TorusGrid& g, int bandwidth, double alpha,
                                        Rng& rng, bool mean_zero) {
    std::vector<cplx> c(g.total(), 0.0);
    const int bw = bandwidth;
    auto put_pair = [&](const Freq& n) {
        double r2 = 0.0;
        for (int a = 0; a < g.dim(); ++a) r2 += double(n[a]) * n[a];
        if (r2 == 0.0 || r2 > double(bw) * bw) return;
        double mag = std::pow(std::sqrt(r2), -alpha);
        double th = rng.uniform(0.0, 2.0 * pi);
        cplx v = std::polar(mag, th);
        Freq neg{-n[0], -n[1], -n[2]};
        c[g.flat_of(n)] = v;
        c[g.flat_of(neg)] = std::conj(v);
    };
    // canonical half lattice: first nonzero coordinate positive
    Freq n{0, 0, 0};
    if (g.dim() == 1) {
        for (n[0] = 1; n[0] <= bw; ++n[0]) put_pair(n);
    } else if (g.dim() == 2) {
        for (n[0] = 0; n[0] <= bw; ++n[0])
            for (n[1] = -bw; n[1] <= bw; ++n[1]) {
                if (n[0] == 0 && n[1] <= 0) continue;
                put_pair(n);
            }
    } else {
        for (n[0] = 0; n[0] <= bw; ++n[0])
            for (n[1] = -bw; n[1] <= bw; ++n[1])
                for (n[2] = -bw; n[2] <= bw; ++n[2]) {
                    if (n[0] == 0 && (n[1] < 0 || (n[1] == 0 && n[2] <= 0))) continue;
                    put_pair(n);
                }
    }
    if (!mean_zero) c[0] = rng.uniform(0.5, 1.5);
    return SpectralField::from_coeffs(g, std::move(c), true);
}

inline double wrap_centered(double u, double period) {
    double w = u - period * std::floor(u / period);
    return w >= 0.5 * period ? w - period : w;
}

// Smooth profile supported on [-1/2, 1/2] with value 1 at the center.
inline double concentrator_profile(double t) {
    return smooth_step(2.0 * (t + 0.5)) * smooth_step(2.0 * (0.5 - t));
}

// Bump of physical width 1/lambda (independent of the period, so the support
// stays inside a unit cube on large-period embeddings), amplitude
// lambda^{d/p*}, centered at the fraction `center` of the cell.
inline SpectralField concentrator_field(const TorusGrid& g, double lambda, double p_star,
                                        double center, bool mean_zero) {
    const double amp = std::pow(lambda, g.dim() / p_star);
    const double period = g.period();
    const int n = g.n();
    std::vector<double> v(g.total());
    for (std::size_t idx = 0; idx < g.total(); ++idx) {
        std::size_t rem = idx;
        double prod = amp;
        for (int a = g.dim() - 1; a >= 0; --a) {
            int k = static_cast<int>(rem % n);
            rem /= n;
            double offset = wrap_centered(g.coord(k) - center * period, period);
            prod *= concentrator_profile(lambda * offset);
        }
        v[idx] = prod;
    }
    SpectralField f = SpectralField::from_real_samples(g, v);
    if (!mean_zero) return f;
    std::vector<cplx> c = f.coeffs();
    c[0] = 0.0;
    return SpectralField::from_coeffs(g, std::move(c), true);
}

}  // namespace family_detail

inline std::vector<SpectralField> generate_family(const FunctionFamily& fam, const TorusGrid& g) {
    if (fam.bandwidth > g.nyquist() / 4)
        throw config_error("family: bandwidth above Nyquist/4 of the target grid");
    if (fam.kind == FamilyKind::concentrator && fam.lambda > fam.bandwidth / 4.0)
        throw config_error("family: concentrator scale above bandwidth/4");

    std::vector<SpectralField> out;
    out.reserve(fam.count);
    switch (fam.kind) {
        case FamilyKind::random_decay: {
            for (int i = 0; i < fam.count; ++i) {
                Rng rng(fam.seed * 0x100000001b3ull + static_cast<std::uint64_t>(i) + 1);
                out.push_back(family_detail::random_decay_field(g, fam.bandwidth, fam.alpha,
                                                                rng, fam.mean_zero));
            }
            break;
        }
        case FamilyKind::single_modes: {
            for (int k = 1; k <= fam.bandwidth && static_cast<int>(out.size()) < fam.count; ++k) {
                for (int a = 0; a < g.dim() && static_cast<int>(out.size()) < fam.count; ++a) {
                    Freq n{0, 0, 0};
                    n[a] = k;
                    out.push_back(SpectralField::cosine(g, n));
                    if (static_cast<int>(out.size()) < fam.count)
                        out.push_back(SpectralField::sine(g, n));
                }
            }
            break;
        }
        case FamilyKind::concentrator: {
            for (int i = 0; i < fam.count; ++i) {
                double center = 0.5 + (fam.count > 1 ? double(i) / (2.0 * fam.count) : 0.0);
                out.push_back(family_detail::concentrator_field(g, fam.lambda, fam.p_star,
                                                                center, fam.mean_zero));
            }
            break;
        }
        case FamilyKind::product_resonant: {
            // consecutive members are reflections of each other, so products
            // of a pair align phases at frequency zero
            for (int i = 0; i < fam.count; ++i) {
                Rng rng(fam.seed * 0x100000001b3ull + static_cast<std::uint64_t>(i / 2) + 1);
                SpectralField base = family_detail::random_decay_field(g, fam.bandwidth,
                                                                       fam.alpha, rng,
                                                                       fam.mean_zero);
                if (i % 2 == 0) {
                    out.push_back(base);
                } else {
                    std::vector<cplx> c(base.coeffs().size());
                    const TorusGrid& gg = base.grid();
                    for (std::size_t idx = 0; idx < c.size(); ++idx) {
                        Freq n = gg.freq_at(idx);
                        Freq neg{-n[0], -n[1], -n[2]};
                        if (!gg.holds(neg)) continue;  // Nyquist row stays empty
                        c[gg.flat_of(neg)] = base.coeffs()[idx];
                    }
                    out.push_back(SpectralField::from_coeffs(gg, std::move(c), true));
                }
            }
            break;
        }
    }
    return out;
}

}  // namespace torus
