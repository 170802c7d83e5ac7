#pragma once
// The weighted Littlewood-Paley commutator [2^{-js} D^s Q_j, f](g), its
// ratio sweep against the gradient bound, and the three-piece paraproduct
// decomposition of D^s(psi f) with the low-to-high frequency switch.

#include <optional>
#include <vector>

#include "torus/multiplier.hpp"
#include "torus/norms.hpp"
#include "torus/product.hpp"

namespace torus {

// Symbol of 2^{-js} D^s Q_j; at j = 0 this is (2 pi |xi|)^s bump(|xi|),
// bounded, and for s = 0 it reduces to the plain ring multiplier.
inline MultiplierSpec weighted_lp_symbol(double s, int j) {
    if (j < 0) throw domain_error("weighted LP symbol: j must be >= 0");
    const double w = std::ldexp(1.0, -j);  // 2^{-j}
    return {[s, j, w](double r) {
                double ds = s == 0.0 ? 1.0 : (r == 0.0 ? 0.0 : std::pow(2.0 * pi * r, s));
                return std::pow(w, s) * ds * dyadic_ring(j, r);
            },
            "2^{-" + std::to_string(j) + "s}D^sQ_" + std::to_string(j)};
}

inline SpectralField commutator_apply(const SpectralField& f, const SpectralField& g,
                                      double s, int j) {
    if (s < 0.0) throw domain_error("commutator: s must be >= 0");
    MultiplierSpec T = weighted_lp_symbol(s, j);
    SpectralField t1 = apply_multiplier(pointwise_product(f, g), T);
    SpectralField t2 = pointwise_product(f, apply_multiplier(g, T));
    int m = std::max(t1.grid().n(), t2.grid().n());
    return (t1.grid().n() == m ? t1 : t1.resampled(m)) -
           (t2.grid().n() == m ? t2 : t2.resampled(m));
}

// Pointwise Euclidean length of the spectral gradient, sampled on a grid
// oversampled enough for sup/quasi norms.
inline SpectralField gradient_length(const SpectralField& f, int factor = 4) {
    SpectralField fo = oversampled(f, factor);
    std::vector<SpectralField> comps = gradient(fo);
    std::vector<double> len(fo.samples().size(), 0.0);
    for (const auto& c : comps)
        for (std::size_t i = 0; i < len.size(); ++i)
            len[i] += std::norm(c.samples()[i]);
    for (auto& v : len) v = std::sqrt(v);
    return SpectralField::from_real_samples(fo.grid(), len);
}

struct CommutatorProbe {
    double s = 1.0;
    int j_min = 0, j_max = 12;
    double p = std::numeric_limits<double>::infinity();  // 1/r = 1/p + 1/q
    double q = 2.0;
    double r = 2.0;
    int samples = 50;

    void validate() const {
        if (s < 0.0 || j_min < 0 || j_max < j_min) throw config_error("probe: bad s/j range");
        if (std::abs(inv(r) - inv(p) - inv(q)) > 1e-12)
            throw config_error("probe: exponents must satisfy 1/r = 1/p + 1/q");
    }
};

struct CommutatorSweepRow {
    int j;
    int sample;
    double ratio;
};

struct CommutatorSweepResult {
    std::vector<CommutatorSweepRow> rows;
    std::vector<double> per_j_max;  // indexed by j - j_min
    double global_max = 0.0;
};

// Ratio table || [2^{-js} D^s Q_j, f](g) ||_r / (2^{-j} || |grad f| ||_p ||g||_q)
// over sample pairs supplied by the caller.
inline CommutatorSweepResult commutator_ratio_sweep(
    const CommutatorProbe& probe, const std::vector<SpectralField>& fs,
    const std::vector<SpectralField>& gs) {
    probe.validate();
    if (fs.size() != gs.size() || fs.empty())
        throw config_error("commutator sweep: need equally many f and g samples");
    CommutatorSweepResult out;
    out.per_j_max.assign(probe.j_max - probe.j_min + 1, 0.0);

    const std::size_t n = fs.size();
    std::vector<double> grad_norm(n), g_norm(n);
    for (std::size_t i = 0; i < n; ++i) {
        grad_norm[i] = lebesgue_norm(gradient_length(fs[i]), probe.p);
        g_norm[i] = lebesgue_norm(oversampled(gs[i]), probe.q);
    }
    for (int j = probe.j_min; j <= probe.j_max; ++j) {
        std::vector<double> ratios(n, 0.0);
        parallel_for(n, [&](std::size_t i) {
            SpectralField comm = commutator_apply(fs[i], gs[i], probe.s, j);
            double num = lebesgue_norm(oversampled(comm), probe.r);
            double den = std::ldexp(1.0, -j) * grad_norm[i] * g_norm[i];
            if (den == 0.0) {
                if (num > 1e-12)
                    throw numeric_error("commutator sweep: zero denominator, nonzero numerator", num);
                ratios[i] = 0.0;  // constant f: numerator vanishes too
            } else {
                ratios[i] = num / den;
            }
        });
        double& jmax = out.per_j_max[j - probe.j_min];
        for (std::size_t i = 0; i < n; ++i) {
            out.rows.push_back({j, static_cast<int>(i), ratios[i]});
            jmax = std::max(jmax, ratios[i]);
        }
        out.global_max = std::max(out.global_max, jmax);
    }
    return out;
}

// ---- paraproduct ----------------------------------------------------------

struct ParaproductPieces {
    SpectralField commutator_part;   // sum of near-diagonal commutators
    SpectralField low_high_part;     // sum S_{j2} psi . D^s Q_{j2} f (via the switch)
    SpectralField high_low_part;     // D^s of sum S-perp_{j2} psi . Q_{j2} f
};

// D^s Q_j as one multiplier (helper for the paraproduct commutators).
inline MultiplierSpec ds_then_ring(double s, int j) {
    return {[s, j](double r) {
                double ds = s == 0.0 ? 1.0 : (r == 0.0 ? 0.0 : std::pow(2.0 * pi * r, s));
                return ds * dyadic_ring(j, r);
            },
            "D^sQ_" + std::to_string(j)};
}

// Splits D^s(psi f) into the three pieces of the dyadic decomposition; their
// sum reconstructs D^s(psi f) exactly to rounding when truncation covers the
// occupied band.
inline ParaproductPieces paraproduct_split(const SpectralField& psi, const SpectralField& f,
                                           double s) {
    if (psi.grid().dim() != f.grid().dim() || psi.grid().period() != f.grid().period())
        throw config_error("paraproduct: incompatible grids");
    SpectralField psif = pointwise_product(psi, f);
    const int m = psif.grid().n();
    // levels covering both the factors and the product
    int J = std::max(lp_levels(psif.grid()), std::max(lp_levels(psi.grid()), lp_levels(f.grid())));

    SpectralField a11 = SpectralField::zero(psif.grid());
    SpectralField tail_switch = SpectralField::zero(psif.grid());
    SpectralField a2_pre = SpectralField::zero(psif.grid());

    for (int j2 = 0; j2 <= J; ++j2) {
        SpectralField qf = lp_project(f, j2);
        SpectralField slow = lp_low(psi, j2);
        SpectralField stail = lp_tail(psi, j2);

        if (j2 > 2) {  // S_{j2} psi vanishes identically otherwise
            SpectralField prod = pointwise_product(slow, qf).resampled(m);
            for (int j = std::max(0, j2 - 5); j <= j2 + 5; ++j) {
                MultiplierSpec T = ds_then_ring(s, j);
                SpectralField t1 = apply_multiplier(prod, T);
                SpectralField t2 =
                    pointwise_product(slow, apply_multiplier(qf, T)).resampled(m);
                a11 = a11 + (t1 - t2);
            }
        }
        SpectralField dqf = apply_multiplier(qf, ds_symbol(s));
        tail_switch = tail_switch + pointwise_product(stail, dqf).resampled(m);
        a2_pre = a2_pre + pointwise_product(stail, qf).resampled(m);
    }

    // low-to-high switch: A12 = psi . D^s f - sum S-perp_{j2} psi . D^s Q_{j2} f
    SpectralField a12 =
        pointwise_product(psi, apply_multiplier(f, ds_symbol(s))).resampled(m) - tail_switch;
    SpectralField a2 = apply_multiplier(a2_pre, ds_symbol(s));
    return {a11, a12, a2};
}

// || D^s (psi f) ||_p / || D^s f ||_p; empty when f has no D^s content.
inline std::optional<double> multiplier_localization_check(const SpectralField& psi,
                                                           const SpectralField& f, double s,
                                                           double p) {
    double den = lebesgue_norm(oversampled(apply_multiplier(f, ds_symbol(s))), p);
    if (den == 0.0) return std::nullopt;
    double num =
        lebesgue_norm(oversampled(apply_multiplier(pointwise_product(psi, f), ds_symbol(s))), p);
    return num / den;
}

}  // namespace torus
