#pragma once
// Convolution kernels of D^s and J^s on R^d: the Riesz power law, the Bessel
// subordination integral, the fractional-Laplacian closed form, and the
// second-order Bessel kernel (1-Delta)G_{2-s}.  Includes the decay-bound
// fitter and the periodization-vs-symbol consistency check.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "torus/common.hpp"
#include "torus/fft.hpp"

namespace torus {

enum class KernelKind { riesz_potential, bessel_potential, frac_laplacian, bessel_derivative };

inline std::string kernel_kind_name(KernelKind k) {
    switch (k) {
        case KernelKind::riesz_potential: return "riesz";
        case KernelKind::bessel_potential: return "bessel";
        case KernelKind::frac_laplacian: return "frac_laplacian";
        default: return "bessel_derivative";
    }
}

struct KernelSpec {
    KernelKind kind;
    double order;  // sigma for the potentials, s for the derivative kernels
    int dim;
};

struct QuadratureConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 15;

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_subdivisions < 1)
            throw config_error("quadrature: tolerances must be positive");
    }
};

// Riesz potential kernel K_sigma(x) = C_{d,sigma} |x|^{sigma-d},
// C_{d,sigma} = Gamma((d-sigma)/2) / (pi^{d/2} 2^sigma Gamma(sigma/2)),
// normalized so the symbol is (2 pi |xi|)^{-sigma}.
inline double riesz_constant(int dim, double sigma) {
    if (!(sigma > 0.0 && sigma < dim))
        throw domain_error("riesz: sigma must lie in (0, d)");
    return std::exp(std::lgamma(0.5 * (dim - sigma)) - std::lgamma(0.5 * sigma)) /
           (std::pow(pi, 0.5 * dim) * std::pow(2.0, sigma));
}

inline double riesz_kernel_eval(double sigma, int dim, double r) {
    if (r == 0.0) throw domain_error("riesz: kernel singular at x = 0");
    return riesz_constant(dim, sigma) * std::pow(r, sigma - dim);
}

namespace kernel_detail {

// Integrand of the subordination integral after t = e^u:
//   exp(-e^u - (|x|^2/4) e^{-u} + c u), c = (sigma - d)/2,
// optionally multiplied by the (1 - Delta) bracket 1 + (d/2)e^{-u} - q e^{-2u}.
struct Subordination {
    double q;  // |x|^2 / 4
    double c;
    int dim;
    bool bracket;

    double exponent(double u) const { return -std::exp(u) - q * std::exp(-u) + c * u; }

    double log_bound(double u) const {
        if (!bracket) return exponent(u);
        double eu = std::exp(-u);
        return exponent(u) + std::log1p(0.5 * dim * eu + q * eu * eu);
    }

    double operator()(double u) const {
        double val = std::exp(exponent(u));
        if (!bracket) return val;
        double eu = std::exp(-u);
        return val * (1.0 + 0.5 * dim * eu - q * eu * eu);
    }
};

inline double integrate_subordination(double r, double sigma_eff, int dim, bool bracket,
                                      const QuadratureConfig& cfg) {
    cfg.validate();
    Subordination f{0.25 * r * r, 0.5 * (sigma_eff - dim), dim, bracket};
    const double ustar = f.q > 0.0 ? 0.5 * std::log(f.q) : 0.0;
    const double floor = f.log_bound(ustar) - 60.0;
    double lo = ustar, hi = ustar;
    for (int i = 0; i < 400 && f.log_bound(lo) > floor; ++i) lo -= 1.0;
    for (int i = 0; i < 400 && f.log_bound(hi) > floor; ++i) hi += 1.0;
    double err = 0.0, l1 = 0.0;
    double val = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, lo, hi, cfg.max_subdivisions, 0.1 * cfg.rel_tol, &err, &l1);
    if (err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(val)))
        throw numeric_error("subordination quadrature did not converge", err);
    return val;
}

}  // namespace kernel_detail

// Bessel potential kernel, symbol (1 + 4 pi^2 |xi|^2)^{-sigma/2}:
//   G_sigma(x) = (4 pi)^{-d/2} / Gamma(sigma/2) *
//                integral_0^inf e^{-t - |x|^2/4t} t^{(sigma-d)/2} dt/t
// The prefactor makes G_sigma a probability density (symbol 1 at xi = 0).
inline double bessel_kernel_eval(double sigma, int dim, double r,
                                 const QuadratureConfig& cfg = {}) {
    if (!(sigma > 0.0)) throw domain_error("bessel: sigma must be positive");
    if (r == 0.0) throw domain_error("bessel: evaluate away from x = 0");
    double pref = std::pow(4.0 * pi, -0.5 * dim) * std::exp(-std::lgamma(0.5 * sigma));
    return pref * kernel_detail::integrate_subordination(r, sigma, dim, false, cfg);
}

// Kernel of D^s for 0 < s < 2 via (-Delta) K_{2-s}; needs 2 - s < d so the
// Riesz kernel is genuine (d = 1 therefore restricts to s in (1, 2)).
inline double frac_laplacian_kernel_eval(double s, int dim, double r) {
    if (!(s > 0.0 && s < 2.0 && 2.0 - s < dim))
        throw domain_error("frac_laplacian kernel: need 0 < s < 2 and s > 2 - d");
    if (r == 0.0) throw domain_error("frac_laplacian kernel: singular at x = 0");
    // (-Delta)|x|^alpha = -alpha(alpha + d - 2)|x|^{alpha-2}, alpha = 2 - s - d
    return riesz_constant(dim, 2.0 - s) * s * (2.0 - s - dim) * std::pow(r, -dim - s);
}

// (1 - Delta) G_{2-s}, the kernel of J^s for 0 < s < 2.
inline double bessel_derivative_eval(double s, int dim, double r,
                                     const QuadratureConfig& cfg = {}) {
    if (!(s > 0.0 && s < 2.0))
        throw domain_error("bessel_derivative: need 0 < s < 2");
    if (r == 0.0) throw domain_error("bessel_derivative: evaluate away from x = 0");
    double pref = std::pow(4.0 * pi, -0.5 * dim) * std::exp(-std::lgamma(0.5 * (2.0 - s)));
    return pref * kernel_detail::integrate_subordination(r, 2.0 - s, dim, true, cfg);
}

inline double kernel_eval(const KernelSpec& spec, double r, const QuadratureConfig& cfg = {}) {
    switch (spec.kind) {
        case KernelKind::riesz_potential: return riesz_kernel_eval(spec.order, spec.dim, r);
        case KernelKind::bessel_potential: return bessel_kernel_eval(spec.order, spec.dim, r, cfg);
        case KernelKind::frac_laplacian: return frac_laplacian_kernel_eval(spec.order, spec.dim, r);
        default: return bessel_derivative_eval(spec.order, spec.dim, r, cfg);
    }
}

enum class BoundKind { power, exponential };

// Decay exponents: the derivative kernels obey |K(x)| <= C |x|^{-d-order},
// the potentials decay like their own law |x|^{-(d-order)} (used for the
// exact-homogeneity checks).
inline double decay_bound(const KernelSpec& spec, BoundKind kind, double r) {
    if (kind == BoundKind::exponential) return std::exp(-0.5 * r);
    bool derivative = spec.kind == KernelKind::frac_laplacian ||
                      spec.kind == KernelKind::bessel_derivative;
    double expo = derivative ? -(spec.dim + spec.order) : -(spec.dim - spec.order);
    return std::pow(r, expo);
}

struct DecayFitReport {
    KernelSpec spec;
    BoundKind bound_kind;
    double c0 = 0.0;
    double fitted_constant = 0.0;     // sup over samples of |kernel| / bound
    double max_ratio_location = 0.0;
    double sample_min = 0.0, sample_max = 0.0;
    bool growth_flag = false;         // ratios monotone increasing on the outer half
    std::vector<double> ratios;

    std::string csv_row() const {
        return kernel_kind_name(spec.kind) + "," + fmt(spec.order) + "," +
               std::to_string(spec.dim) + "," + fmt(c0) + "," + fmt(fitted_constant) +
               "," + fmt(max_ratio_location) + "," +
               (bound_kind == BoundKind::power ? "power" : "exponential") + "," +
               (growth_flag ? "growth" : "ok");
    }
    static std::string csv_header() {
        return "kind,sigma_or_s,dim,c0,fitted_constant,max_ratio_location,bound_kind,status";
    }
};

inline DecayFitReport decay_bound_check(const KernelSpec& spec, double c0,
                                        const std::vector<double>& samples,
                                        BoundKind kind = BoundKind::power,
                                        const QuadratureConfig& cfg = {}) {
    if (!(c0 > 0.0)) throw domain_error("decay check: c0 must be positive");
    DecayFitReport rep;
    rep.spec = spec;
    rep.bound_kind = kind;
    rep.c0 = c0;
    rep.sample_min = samples.front();
    rep.sample_max = samples.back();
    rep.ratios.resize(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        double r = samples[i];
        if (r < c0) throw domain_error("decay check: sample below c0");
        rep.ratios[i] = std::abs(kernel_eval(spec, r, cfg)) / decay_bound(spec, kind, r);
        if (rep.ratios[i] >= rep.fitted_constant) {
            rep.fitted_constant = rep.ratios[i];
            rep.max_ratio_location = r;
        }
    }
    // Violation only means unbounded growth: strictly increasing ratios over
    // the outer half of the sample range.
    std::size_t half = samples.size() / 2;
    bool increasing = samples.size() >= 4;
    for (std::size_t i = half; i + 1 < samples.size(); ++i)
        increasing = increasing && rep.ratios[i + 1] > rep.ratios[i];
    rep.growth_flag = increasing;
    return rep;
}

struct ConsistencyResult {
    double max_rel_error = 0.0;   // after step-halving extrapolation
    double raw_rel_error = 0.0;   // finest plain sampling, for diagnostics
    int levels = 0;
    int modes_compared = 0;
};

// Samples the L-periodization of G_sigma on midpoint grids N, 2N, ..., maps
// to Fourier coefficients and extrapolates the alias error (exact expansion
// in N^{-(sigma+2i)}) before comparing with the symbol on |n| <= N/4.
inline ConsistencyResult kernel_multiplier_consistency(double sigma, int dim, double period,
                                                       int grid_n, int levels = 4,
                                                       const QuadratureConfig& cfg = {}) {
    if (dim != 1)
        throw config_error("kernel consistency: implemented for dim = 1");
    if (grid_n < 64 || grid_n % 2 != 0)
        throw config_error("kernel consistency: grid_n must be even and >= 64");
    if (period < 10.0)
        throw numeric_error("kernel consistency: period too small for the periodization tail",
                            std::exp(-0.25 * period));
    const double L = period;
    const int nmax = grid_n / 4;
    std::vector<std::vector<double>> level_coeffs;

    for (int lev = 0; lev < levels; ++lev) {
        const int n = grid_n << lev;
        const double h = L / n;
        std::vector<double> p(n, 0.0);
        parallel_for(n / 2, [&](std::size_t jj) {
            int j = static_cast<int>(jj);
            double x = (j + 0.5) * h;
            double xc = x >= 0.5 * L ? x - L : x;
            double acc = 0.0;
            for (int k = -2; k <= 2; ++k) {
                double y = std::abs(xc + k * L);
                if (y > 45.0) continue;  // kernel below 1e-19 there
                acc += bessel_kernel_eval(sigma, 1, y, cfg);
            }
            p[j] = acc;
            p[n - 1 - j] = acc;  // periodization symmetric about L/2 on midpoints
        });
        std::vector<std::complex<double>> s(p.begin(), p.end());
        std::vector<std::complex<double>> c = fft_forward({n}, s);
        std::vector<double> vals(2 * nmax + 1);
        for (int m = -nmax; m <= nmax; ++m) {
            std::complex<double> phase = std::polar(1.0, -pi * m / n);  // midpoint offset
            std::complex<double> coeff = c[m >= 0 ? m : m + n] * phase;
            vals[m + nmax] = L * coeff.real();
        }
        level_coeffs.push_back(std::move(vals));
    }

    auto rel_error = [&](const std::vector<double>& v) {
        double worst = 0.0;
        for (int m = -nmax; m <= nmax; ++m) {
            double xi = m / L;
            double sym = std::pow(1.0 + 4.0 * pi * pi * xi * xi, -0.5 * sigma);
            worst = std::max(worst, std::abs(v[m + nmax] - sym) / sym);
        }
        return worst;
    };

    ConsistencyResult res;
    res.levels = levels;
    res.modes_compared = 2 * nmax + 1;
    res.raw_rel_error = rel_error(level_coeffs.back());

    // Neville elimination of the alias ladder sigma, sigma+2, ...
    std::vector<std::vector<double>> seq = level_coeffs;
    for (int round = 0; round + 1 < levels; ++round) {
        double ratio = std::pow(2.0, -(sigma + 2.0 * round));
        std::vector<std::vector<double>> next;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
            std::vector<double> v(seq[i].size());
            for (std::size_t k = 0; k < v.size(); ++k)
                v[k] = (seq[i + 1][k] - ratio * seq[i][k]) / (1.0 - ratio);
            next.push_back(std::move(v));
        }
        seq = std::move(next);
    }
    res.max_rel_error = rel_error(seq.front());
    return res;
}

}  // namespace torus
