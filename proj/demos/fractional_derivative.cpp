// Minimal tour of the spectral operators: build a field, differentiate it
// fractionally, and confirm the Bessel/Riesz symbols on a single mode.

#include <cstdio>

#include "torus/multiplier.hpp"
#include "torus/exponents.hpp"
#include "torus/norms.hpp"

using namespace torus;

int main() {
    TorusGrid grid(1, 256);

    SpectralField f = SpectralField::cosine(grid, {3, 0, 0});
    SpectralField half_lap = fractional_laplacian(f, 0.5);
    SpectralField bessel = bessel_operator(f, -1.0);

    std::printf("f = cos(6 pi x)\n");
    std::printf("||f||_2          = %.12f\n", lebesgue_norm(f, 2.0));
    std::printf("||D^{1/2} f||_2  = %.12f   (expected %.12f)\n",
                lebesgue_norm(half_lap, 2.0),
                std::sqrt(6.0 * pi) / std::sqrt(2.0));
    std::printf("||J^{-1} f||_2   = %.12f\n", lebesgue_norm(bessel, 2.0));

    SpectralField parts = lp_project(f, 0) + lp_project(f, 1) + lp_project(f, 2);
    std::printf("LP reconstruction error = %.3g\n",
                lebesgue_norm(parts - f, kInf));
    return 0;
}
