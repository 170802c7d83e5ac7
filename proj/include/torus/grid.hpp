#pragma once
// Uniform grid on the d-dimensional torus of a given period.
//
// Sample points: x_k = k * period / n per axis, k = 0..n-1.
// Frequency lattice: integers in [-n/2, n/2), physical frequency n/period.
// Coefficient convention everywhere: coeff(n) = period^{-d} * integral of
// f(x) e^{-2 pi i (n/period) . x} over one cell, so synthesis reads
// f(x) = sum_n coeff(n) e^{2 pi i (n/period) . x}.

#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include "torus/common.hpp"

namespace torus {

using Freq = std::array<int, 3>;  // unused trailing axes are 0

class TorusGrid {
  public:
    TorusGrid(int dim, int n_per_axis, double period = 1.0)
        : dim_(dim), n_(n_per_axis), period_(period) {
        if (dim < 1 || dim > 3) throw config_error("grid: dim must be 1, 2 or 3");
        if (n_per_axis < 4 || n_per_axis % 2 != 0)
            throw config_error("grid: n_per_axis must be even and >= 4");
        if (!(period > 0.0)) throw config_error("grid: period must be positive");
    }

    int dim() const { return dim_; }
    int n() const { return n_; }
    double period() const { return period_; }
    int nyquist() const { return n_ / 2; }

    std::size_t total() const {
        std::size_t t = 1;
        for (int a = 0; a < dim_; ++a) t *= static_cast<std::size_t>(n_);
        return t;
    }

    double cell_volume() const { return std::pow(period_ / n_, dim_); }

    // FFT-order storage index -> signed lattice frequency per axis.
    int freq_of(int k) const { return k < n_ / 2 ? k : k - n_; }
    // Signed frequency in [-n/2, n/2) -> storage index.
    int index_of(int f) const { return f >= 0 ? f : f + n_; }

    Freq freq_at(std::size_t flat) const {
        Freq out{0, 0, 0};
        for (int a = dim_ - 1; a >= 0; --a) {
            out[a] = freq_of(static_cast<int>(flat % n_));
            flat /= n_;
        }
        return out;
    }

    std::size_t flat_of(const Freq& f) const {
        std::size_t idx = 0;
        for (int a = 0; a < dim_; ++a)
            idx = idx * n_ + static_cast<std::size_t>(index_of(f[a]));
        return idx;
    }

    bool holds(const Freq& f) const {
        for (int a = 0; a < dim_; ++a)
            if (f[a] < -n_ / 2 || f[a] >= n_ / 2) return false;
        return true;
    }

    // Physical frequency magnitude |n| / period.
    double xi_norm(const Freq& f) const {
        double s = 0.0;
        for (int a = 0; a < dim_; ++a) s += double(f[a]) * f[a];
        return std::sqrt(s) / period_;
    }

    // Sample coordinate along an axis.
    double coord(int k) const { return period_ * k / n_; }

    bool operator==(const TorusGrid& o) const {
        return dim_ == o.dim_ && n_ == o.n_ && period_ == o.period_;
    }
    bool operator!=(const TorusGrid& o) const { return !(*this == o); }

    std::string describe() const {
        return "d=" + std::to_string(dim_) + " n=" + std::to_string(n_) +
               " period=" + fmt(period_);
    }

    // Desk-scale defaults per dimension.
    static TorusGrid standard(int dim, double period = 1.0) {
        switch (dim) {
            case 1: return TorusGrid(1, 1024, period);
            case 2: return TorusGrid(2, 256, period);
            default: return TorusGrid(3, 64, period);
        }
    }

  private:
    int dim_;
    int n_;
    double period_;
};

}  // namespace torus
