#pragma once
// The fixed smooth bump underlying every frequency cutoff in the library.
//
//   step(u)  = B(u) / (B(u) + B(1-u)),  B(u) = exp(-1/u) for u > 0 else 0
//   bump(t)  = step((8/5 - |t|) / (8/5 - 5/4))
//
// bump is C^infinity, identically 1 on [-5/4, 5/4] and supported in
// [-8/5, 8/5].  Every constant measured downstream depends on this choice,
// so reports embed bump_provenance().

#include <cmath>
#include <cstdint>
#include <cstring>
#include <string>

#include "torus/common.hpp"

namespace torus {

inline double smooth_step(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / u);
    const double b = std::exp(-1.0 / (1.0 - u));
    return a / (a + b);
}

inline double bump(double t) {
    constexpr double outer = 8.0 / 5.0;
    constexpr double inner = 5.0 / 4.0;
    return smooth_step((outer - std::abs(t)) / (outer - inner));
}

// Dyadic ring functions: ring(0, xi) = bump(|xi|),
// ring(j, xi) = bump(|xi|/2^j) - bump(|xi|/2^(j-1)) for j >= 1.
inline double dyadic_ring(int j, double xi_norm) {
    if (j == 0) return bump(xi_norm);
    const double scale = std::ldexp(1.0, -j);  // 2^-j
    return bump(xi_norm * scale) - bump(xi_norm * scale * 2.0);
}

// FNV-1a over bump samples; identifies the cutoff generation across runs.
inline std::uint64_t bump_hash() {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](double v) {
        std::uint64_t bits;
        static_assert(sizeof(bits) == sizeof(v));
        std::memcpy(&bits, &v, sizeof(bits));
        for (int i = 0; i < 8; ++i) {
            h ^= (bits >> (8 * i)) & 0xffu;
            h *= 1099511628211ull;
        }
    };
    for (int i = 0; i <= 64; ++i) mix(bump(i * (1.7 / 64.0)));
    return h;
}

inline std::string bump_provenance() {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "bump[1,5/4,8/5,expstep]#%016llx",
                  static_cast<unsigned long long>(bump_hash()));
    return buf;
}

}  // namespace torus
