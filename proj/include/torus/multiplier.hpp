#pragma once
// Radial Fourier multipliers and the operators built from them:
// fractional Laplacian D^s, Bessel operator J^s, mean/nonzero projectors,
// Littlewood-Paley projectors Q_j and the low/tail partial sums S, S-perp.

#include <cmath>
#include <functional>
#include <string>

#include "torus/bump.hpp"
#include "torus/field.hpp"

namespace torus {

// A radial symbol m(|xi|) acting on the physical frequency xi = n/period.
struct MultiplierSpec {
    std::function<double(double)> symbol;  // |xi| -> value
    std::string label;
};

inline SpectralField apply_multiplier(const SpectralField& f, const MultiplierSpec& m) {
    const TorusGrid& g = f.grid();
    std::vector<cplx> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = f.coeffs()[i] * m.symbol(g.xi_norm(g.freq_at(i)));
    // real, even symbols preserve realness
    return SpectralField::from_coeffs(g, std::move(c), f.is_real());
}

// D^s symbol (2 pi |xi|)^s.  s = 0 is the identity; for s > 0 the zero
// frequency is annihilated exactly.
inline MultiplierSpec ds_symbol(double s) {
    return {[s](double r) {
                if (s == 0.0) return 1.0;
                if (r == 0.0) return 0.0;
                return std::pow(2.0 * pi * r, s);
            },
            "D^" + fmt(s)};
}

// J^s symbol (1 + 4 pi^2 |xi|^2)^{s/2}; value exactly 1 at xi = 0.
inline MultiplierSpec js_symbol(double s) {
    return {[s](double r) { return std::pow(1.0 + 4.0 * pi * pi * r * r, 0.5 * s); },
            "J^" + fmt(s)};
}

inline SpectralField fractional_laplacian(const SpectralField& f, double s) {
    if (s < 0.0 && f.mean() != cplx(0.0))
        throw domain_error("Riesz potential undefined at zero frequency");
    SpectralField out = apply_multiplier(f, ds_symbol(s));
    return out;
}

inline SpectralField bessel_operator(const SpectralField& f, double s) {
    return apply_multiplier(f, js_symbol(s));
}

inline SpectralField project_mean(const SpectralField& f) {
    return SpectralField::constant(f.grid(), f.mean());
}

inline SpectralField project_nonzero(const SpectralField& f) {
    std::vector<cplx> c = f.coeffs();
    c[0] = 0.0;
    return SpectralField::from_coeffs(f.grid(), std::move(c), f.is_real());
}

// Littlewood-Paley ring multiplier Phi_j.
inline MultiplierSpec lp_symbol(int j) {
    if (j < 0) throw domain_error("Littlewood-Paley index must be >= 0");
    return {[j](double r) { return dyadic_ring(j, r); }, "Q_" + std::to_string(j)};
}

inline SpectralField lp_project(const SpectralField& f, int j) {
    return apply_multiplier(f, lp_symbol(j));
}

// S_{j2} = sum of Q_{j1} for j1 <= j2-3 telescopes to bump(|xi| / 2^{j2-3});
// the tail sums the complement (the full dyadic sum is 1 pointwise).
inline MultiplierSpec lp_low_symbol(int j2) {
    return {[j2](double r) {
                if (j2 <= 2) return 0.0;
                return bump(r * std::ldexp(1.0, -(j2 - 3)));
            },
            "S_" + std::to_string(j2)};
}

inline MultiplierSpec lp_tail_symbol(int j2) {
    MultiplierSpec low = lp_low_symbol(j2);
    return {[low](double r) { return 1.0 - low.symbol(r); },
            "Sperp_" + std::to_string(j2)};
}

inline SpectralField lp_low(const SpectralField& f, int j2) {
    if (j2 < 0) throw domain_error("lp_low: j2 must be >= 0");
    return apply_multiplier(f, lp_low_symbol(j2));
}

inline SpectralField lp_tail(const SpectralField& f, int j2) {
    if (j2 < 0) throw domain_error("lp_tail: j2 must be >= 0");
    return apply_multiplier(f, lp_tail_symbol(j2));
}

// Smallest J with sum_{j<=J} Phi_j = 1 on the whole lattice of g.
inline int lp_levels(const TorusGrid& g) {
    double max_xi = std::sqrt(double(g.dim())) * g.nyquist() / g.period();
    int J = 0;
    while (std::ldexp(1.25, J) < max_xi) ++J;  // bump == 1 once |xi|/2^J <= 5/4
    return J;
}

// Spectral gradient components (multiplier 2 pi i n_a / period).
inline std::vector<SpectralField> gradient(const SpectralField& f) {
    const TorusGrid& g = f.grid();
    std::vector<SpectralField> out;
    for (int a = 0; a < g.dim(); ++a) {
        std::vector<cplx> c(f.coeffs().size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            Freq n = g.freq_at(i);
            c[i] = f.coeffs()[i] * cplx(0.0, 2.0 * pi * n[a] / g.period());
        }
        out.push_back(SpectralField::from_coeffs(g, std::move(c), f.is_real()));
    }
    return out;
}

}  // namespace torus
