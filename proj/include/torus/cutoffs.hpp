#pragma once
// The space-side cutoff system used by the periodization machinery (d = 1):
//   phi1 + phi2 = 1, both 1-periodic,
//   supp phi1 in [1/8, 7/8] + Z,   supp phi2 in [-3/8, 3/8] + Z,
//   psi1 = 1 on [1/9, 8/9],   supp psi1 in [1/10, 9/10],
//   psi2 = psi1(. + 1/2).
// psi_j phi_j = phi_j on the respective cell, so F G_j = (psi_j F) G_j.

#include <cmath>
#include <functional>

#include "torus/bump.hpp"
#include "torus/common.hpp"

namespace torus {

struct CutoffFamily {
    std::function<double(double)> phi1;  // periodic
    std::function<double(double)> phi2;  // periodic, = 1 - phi1
    std::function<double(double)> psi1;  // compactly supported on R
    std::function<double(double)> psi2;
    double margin = 0.0;
};

// margin in [0, 0.4) narrows the phi transition bands inside their allowed
// windows ([1/8, 3/8] and [5/8, 7/8]); 0 uses the full window.
inline CutoffFamily build_cutoffs(double margin = 0.0) {
    if (!(margin >= 0.0 && margin < 0.4))
        throw config_error("cutoffs: margin must lie in [0, 0.4)");
    const double width = 0.25 * (1.0 - 2.0 * margin);
    const double rise = 0.125 + 0.25 * margin;   // start of the ascent
    const double fall = 0.875 - 0.25 * margin;   // end of the descent
    auto phi1 = [rise, fall, width](double x) {
        double t = x - std::floor(x);
        return smooth_step((t - rise) / width) * smooth_step((fall - t) / width);
    };
    auto phi2 = [phi1](double x) { return 1.0 - phi1(x); };
    auto psi1 = [](double x) {
        return smooth_step((x - 0.1) / (1.0 / 9.0 - 0.1)) *
               smooth_step((0.9 - x) / (0.9 - 8.0 / 9.0));
    };
    auto psi2 = [psi1](double x) { return psi1(x + 0.5); };
    return {phi1, phi2, psi1, psi2, margin};
}

}  // namespace torus
