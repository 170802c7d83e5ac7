#pragma once
// Periodization machinery (d = 1): embedding of unit-torus data into a
// large period-L torus, the localized pieces F, G_1, G_2, the Poisson
// summation check and the lattice-sum identity for D^s of a product.

#include <cmath>
#include <string>
#include <vector>

#include "torus/cutoffs.hpp"
#include "torus/multiplier.hpp"
#include "torus/norms.hpp"
#include "torus/product.hpp"

namespace torus {

struct EmbeddedField {
    SpectralField big;     // field on the period-L grid
    int per_unit;          // big-grid samples per unit length
};

struct EmbeddedTriple {
    EmbeddedField F;   // periodic extension of f
    EmbeddedField G1;  // 1_{[0,1]} phi1 g
    EmbeddedField G2;  // 1_{[-1/2,1/2]} phi2 g
};

// Samples f, g (period-1 fields) onto the period-L torus with per_unit
// points per unit length.  L must be an even integer so unit shifts land on
// grid points.
inline EmbeddedTriple periodize_and_localize(const SpectralField& f, const SpectralField& g,
                                             const CutoffFamily& cuts, int L,
                                             int per_unit) {
    if (f.grid().dim() != 1 || g.grid().dim() != 1)
        throw config_error("periodize: two-piece cutoff machinery is one-dimensional");
    if (L < 4 || L % 2 != 0) throw config_error("periodize: L must be an even integer >= 4");
    if (per_unit < f.grid().n() || per_unit < g.grid().n())
        throw config_error("periodize: big-grid resolution below base resolution");
    SpectralField fu = f.grid().n() == per_unit ? f : f.resampled(per_unit);
    SpectralField gu = g.grid().n() == per_unit ? g : g.resampled(per_unit);

    const int nb = L * per_unit;
    TorusGrid big(1, nb, static_cast<double>(L));
    std::vector<double> Fv(nb), G1v(nb, 0.0), G2v(nb, 0.0);
    for (int j = 0; j < nb; ++j) {
        const double x = static_cast<double>(j) / per_unit;
        const int ju = j % per_unit;  // unit-cell sample index
        Fv[j] = fu.samples()[ju].real();
        if (x <= 1.0) G1v[j] = cuts.phi1(x) * gu.samples()[ju].real();
        const double xc = x >= 0.5 * L ? x - L : x;
        if (std::abs(xc) <= 0.5) G2v[j] = cuts.phi2(xc) * gu.samples()[ju].real();
    }
    return {{SpectralField::from_real_samples(big, Fv), per_unit},
            {SpectralField::from_real_samples(big, G1v), per_unit},
            {SpectralField::from_real_samples(big, G2v), per_unit}};
}

// Product on the shared embedding grid.  The localized factors are smooth
// and well-resolved there, so sampling error sits at the spectral floor and
// the k-shift bookkeeping keeps exact grid alignment.
inline SpectralField sample_product(const SpectralField& a, const SpectralField& b) {
    if (a.grid() != b.grid()) throw config_error("sample product: grid mismatch");
    std::vector<cplx> v(a.samples().size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.samples()[i] * b.samples()[i];
    return SpectralField::from_samples(a.grid(), std::move(v), a.is_real() && b.is_real());
}

// Frequency-side agreement of the localization: the unit-torus transform of
// fg against the sum of the R-line transforms of F G_j at integer
// frequencies.  Returns the max absolute discrepancy over |n| <= nmax.
inline double fourier_agreement_check(const SpectralField& f, const SpectralField& g,
                                      const CutoffFamily& cuts, int L, int per_unit,
                                      int nmax) {
    EmbeddedTriple emb = periodize_and_localize(f, g, cuts, L, per_unit);
    SpectralField prod = pointwise_product(f, g);
    SpectralField H1 = sample_product(emb.F.big, emb.G1.big);
    SpectralField H2 = sample_product(emb.F.big, emb.G2.big);
    double worst = 0.0;
    for (int n = -nmax; n <= nmax; ++n) {
        cplx lhs = prod.coeff({n, 0, 0});
        // R-line transform at integer frequency n = L * big-grid coefficient
        // at lattice index nL
        cplx rhs = static_cast<double>(L) *
                   (H1.coeff({n * L, 0, 0}) + H2.coeff({n * L, 0, 0}));
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

enum class SumMode {
    truncated,      // sum x+k over |k| <= K
    complete_fold,  // sum over one full residue system k = -L/2 .. L/2-1
};

enum class CheckStatus { pass, fail, inconclusive };

inline std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "inconclusive";
    }
}

struct TransferenceResult {
    double max_rel_error = 0.0;
    double mean_rel_error = 0.0;
    double tail_bound = 0.0;  // sum over |k| > K of |k|^{-d-s}
    CheckStatus status = CheckStatus::fail;
};

inline double lattice_tail_bound(int K, double d_plus_s) {
    double acc = 0.0;
    const int direct = 100000;
    for (int k = K + direct; k > K; --k) acc += std::pow(double(k), -d_plus_s);
    // integral remainder past the direct window
    acc += std::pow(double(K + direct), 1.0 - d_plus_s) / (d_plus_s - 1.0);
    return 2.0 * acc;
}

// Compares the spectral D^s(fg) on the unit torus against the lattice sum
// sum_j sum_k D^s_R(F G_j)(x + k), with D^s_R realized on the period-L grid.
inline TransferenceResult transference_identity_check(
    const SpectralField& f, const SpectralField& g, const CutoffFamily& cuts, double s,
    int L, int K, int per_unit, double tolerance,
    SumMode mode = SumMode::truncated) {
    if (std::abs(f.mean()) > 1e-13 || std::abs(g.mean()) > 1e-13)
        throw domain_error("transference check: inputs must have mean zero");
    if (!(s > 0.0)) throw domain_error("transference check: s must be positive");

    // Resolution must hold the product content.
    SpectralField prod = pointwise_product(f, g);
    int rho = next_pow2(std::max(per_unit, prod.grid().n()));
    EmbeddedTriple emb = periodize_and_localize(f, g, cuts, L, rho);
    SpectralField H1 = sample_product(emb.F.big, emb.G1.big);
    SpectralField H2 = sample_product(emb.F.big, emb.G2.big);
    std::vector<cplx> dsum(H1.coeffs().size());
    {
        SpectralField D1 = fractional_laplacian(H1, s);
        SpectralField D2 = fractional_laplacian(H2, s);
        for (std::size_t i = 0; i < dsum.size(); ++i)
            dsum[i] = D1.samples()[i] + D2.samples()[i];
    }

    SpectralField lhs_field = fractional_laplacian(prod, s).resampled(rho);
    const int nb = L * rho;
    int k_lo = mode == SumMode::truncated ? -K : -L / 2;
    int k_hi = mode == SumMode::truncated ? K : L / 2 - 1;

    TransferenceResult res;
    double lhs_scale = 0.0, err_acc = 0.0;
    std::vector<double> errs(rho);
    for (int i = 0; i < rho; ++i) {
        double rhs = 0.0;
        for (int k = k_lo; k <= k_hi; ++k) {
            int idx = ((i + k * rho) % nb + nb) % nb;
            rhs += dsum[idx].real();
        }
        double lhs = lhs_field.samples()[i].real();
        lhs_scale = std::max(lhs_scale, std::abs(lhs));
        errs[i] = std::abs(rhs - lhs);
    }
    for (double e : errs) {
        res.max_rel_error = std::max(res.max_rel_error, e);
        err_acc += e;
    }
    if (lhs_scale > 0.0) {
        res.max_rel_error /= lhs_scale;
        err_acc /= lhs_scale;
    }
    res.mean_rel_error = err_acc / rho;
    res.tail_bound =
        mode == SumMode::truncated ? lattice_tail_bound(K, 1.0 + s) : 0.0;
    if (res.tail_bound > tolerance)
        res.status = CheckStatus::inconclusive;
    else
        res.status = res.max_rel_error <= tolerance ? CheckStatus::pass : CheckStatus::fail;
    return res;
}

// ---- Poisson summation ----------------------------------------------------

enum class PoissonProfile { gaussian, bessel2 };

struct PoissonResult {
    double max_residual = 0.0;
    double spatial_tail = 0.0;   // estimate of the omitted spatial terms
    double spectral_rem = 0.0;   // bound on the spectral summation remainder
};

namespace poisson_detail {

// Fourier-side sum taken to convergence for each profile.  For the Bessel
// profile the n^{-2} tail is summed in closed form (Sum cos(2 pi n x)/n^2 =
// pi^2 (1/6 - x + x^2) on [0,1]) and the n^{-4} remainder directly.
inline double spectral_sum(PoissonProfile prof, double x, double& rem_bound) {
    if (prof == PoissonProfile::gaussian) {
        double acc = 1.0;
        for (int n = 1; n <= 8; ++n)
            acc += 2.0 * std::exp(-pi * n * n) * std::cos(2.0 * pi * n * x);
        rem_bound = std::exp(-pi * 81.0);
        return acc;
    }
    const int n1 = 4000;
    double acc = 1.0;
    double partial_inv2 = 0.0;
    for (int n = 1; n <= n1; ++n) {
        double c = std::cos(2.0 * pi * n * x);
        acc += 2.0 * c / (1.0 + 4.0 * pi * pi * n * n);
        partial_inv2 += c / (double(n) * n);
    }
    double xf = x - std::floor(x);
    double closed = pi * pi * (1.0 / 6.0 - xf + xf * xf);  // sum_{n>=1} cos(2pi n x)/n^2
    acc += (closed - partial_inv2) / (2.0 * pi * pi);
    // remainder: -2 sum_{n>n1} cos / (4 pi^2 n^2 (1+4 pi^2 n^2))
    rem_bound = 1.0 / (24.0 * std::pow(pi, 4) * std::pow(double(n1), 3));
    return acc;
}

inline double h_value(PoissonProfile prof, double x) {
    if (prof == PoissonProfile::gaussian) return std::exp(-pi * x * x);
    return 0.5 * std::exp(-std::abs(x));  // closed form of the order-2 Bessel kernel
}

}  // namespace poisson_detail

// max over the test points of | sum_n h^(n) e^{2 pi i n x}  -  sum_{|n|<=R} h(x+n) |,
// the Fourier side summed to convergence, the spatial side truncated at R.
inline PoissonResult poisson_check(PoissonProfile prof, int R,
                                   const std::vector<double>& points = {0.0, 0.3, 0.7}) {
    PoissonResult res;
    for (double x : points) {
        double spatial = 0.0;
        for (int n = -R; n <= R; ++n) spatial += poisson_detail::h_value(prof, x + n);
        double rem = 0.0;
        double spectral = poisson_detail::spectral_sum(prof, x, rem);
        res.spectral_rem = std::max(res.spectral_rem, rem);
        res.max_residual = std::max(res.max_residual, std::abs(spectral - spatial));
        double tail = prof == PoissonProfile::gaussian
                          ? std::exp(-pi * std::pow(R - 1.0, 2))
                          : std::exp(-(R - 1.0));
        res.spatial_tail = std::max(res.spatial_tail, tail);
    }
    return res;
}

// ---- localization bound (A9 shape) ----------------------------------------

enum class LocalizationSide { psi_f, g_piece };

// || D^s_R (psi1 F) ||_{L^p(R)} / || D^s_T f ||_{L^p(T)} with the R-side
// realized on the period-L grid (companion mode uses the G_1 piece).
inline double localization_bound_check(const SpectralField& f, const CutoffFamily& cuts,
                                       double s, double p, int L, int per_unit,
                                       LocalizationSide side = LocalizationSide::psi_f) {
    if (std::abs(f.mean()) > 1e-13)
        throw domain_error("localization check: input must have mean zero");
    double denom = lebesgue_norm(oversampled(fractional_laplacian(f, s)), p);
    if (denom == 0.0) return 0.0;

    EmbeddedTriple emb = periodize_and_localize(f, f, cuts, L, per_unit);
    SpectralField localized = SpectralField::zero(emb.F.big.grid());
    if (side == LocalizationSide::psi_f) {
        const int nb = L * per_unit;
        std::vector<double> v(nb, 0.0);
        for (int j = 0; j < nb; ++j) {
            double x = static_cast<double>(j) / per_unit;
            double w = cuts.psi1(x);
            if (w != 0.0) v[j] = w * emb.F.big.samples()[j].real();
        }
        localized = SpectralField::from_real_samples(emb.F.big.grid(), v);
    } else {
        localized = emb.G1.big;
    }
    double numer = lebesgue_norm(fractional_laplacian(localized, s), p);
    return numer / denom;
}

}  // namespace torus
