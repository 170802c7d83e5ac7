#pragma once
// Lebesgue (quasi-)norms over the physical grid.  Rectangle rule; exact for
// even integer p once the integrand is resolved, spectrally accurate for
// smooth integrands, p = infinity is the grid maximum.

#include <cmath>

#include "torus/field.hpp"

namespace torus {

inline double lebesgue_norm(const SpectralField& f, double p) {
    if (!(p >= 0.5)) throw domain_error("lebesgue_norm: p must lie in [1/2, inf]");
    if (is_inf(p)) {
        double mx = 0.0;
        for (const cplx& v : f.samples()) mx = std::max(mx, std::abs(v));
        return mx;
    }
    double acc = 0.0;
    for (const cplx& v : f.samples()) acc += std::pow(std::abs(v), p);
    return std::pow(acc * f.grid().cell_volume(), 1.0 / p);
}

// l^2 norm of the coefficient array (the Parseval partner of the L^2 norm
// on a period-1 torus).
inline double coefficient_l2(const SpectralField& f) {
    double acc = 0.0;
    for (const cplx& v : f.coeffs()) acc += std::norm(v);
    return std::sqrt(acc);
}

}  // namespace torus
