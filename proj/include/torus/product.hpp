#pragma once
// Alias-free pointwise products.  The product of two trigonometric
// polynomials is computed on a zero-padded grid large enough to hold the sum
// of the input bandwidths, so the result equals the exact coefficient
// convolution up to rounding.

#include <algorithm>

#include "torus/field.hpp"

namespace torus {

inline constexpr std::size_t default_padded_cap = std::size_t(1) << 26;

// Smallest power-of-two grid holding modes up to bandwidth bw per axis.
inline int padded_size(int bw) { return std::max(4, next_pow2(2 * bw + 2)); }

inline SpectralField pointwise_product(const SpectralField& f, const SpectralField& g,
                                       std::size_t max_total = default_padded_cap) {
    if (f.grid().dim() != g.grid().dim() || f.grid().period() != g.grid().period())
        throw config_error("product: incompatible grids");
    const int bw = f.bandwidth() + g.bandwidth();
    const int m = padded_size(bw);
    std::size_t total = 1;
    for (int a = 0; a < f.grid().dim(); ++a) total *= static_cast<std::size_t>(m);
    if (total > max_total)
        throw resource_error("product: padded grid of " + std::to_string(total) +
                             " samples exceeds cap");
    SpectralField fp = f.grid().n() == m ? f : f.resampled(m);
    SpectralField gp = g.grid().n() == m ? g : g.resampled(m);
    std::vector<cplx> prod(fp.samples().size());
    for (std::size_t i = 0; i < prod.size(); ++i)
        prod[i] = fp.samples()[i] * gp.samples()[i];
    SpectralField raw = SpectralField::from_samples(fp.grid(), std::move(prod),
                                                    f.is_real() && g.is_real());
    // modes beyond the combined bandwidth are transform rounding dust;
    // the true product is supported in |n| <= bw
    std::vector<cplx> c = raw.coeffs();
    const TorusGrid& pg = raw.grid();
    for (std::size_t i = 0; i < c.size(); ++i) {
        Freq n = pg.freq_at(i);
        for (int a = 0; a < pg.dim(); ++a)
            if (std::abs(n[a]) > bw) {
                c[i] = 0.0;
                break;
            }
    }
    return SpectralField::from_coeffs(pg, std::move(c), f.is_real() && g.is_real());
}

// Field resampled so its content occupies at most 1/factor of the Nyquist
// band (quasi-norm quadrature wants oversampled grids).
inline SpectralField oversampled(const SpectralField& f, int factor = 4, int min_n = 0) {
    int need = std::max({min_n, 2 * factor * std::max(f.bandwidth(), 1) + 2, f.grid().n()});
    int m = next_pow2(need);
    return f.grid().n() >= m ? f : f.resampled(m);
}

}  // namespace torus
