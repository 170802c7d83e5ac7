// Estimates the empirical constant of the derivative-of-product inequality
// for one exponent tuple over a small random family.

#include <cstdio>

#include "torus/harness.hpp"

using namespace torus;

int main() {
    TorusGrid grid(1, 512);
    ExponentTuple tuple(1.0, 4, 4, 4, 4, 2);
    ConditionCase verdict = check_leibniz_conditions(tuple);
    std::printf("tuple %s -> %s\n", tuple.describe().c_str(),
                verdict_name(verdict.verdict).c_str());

    FunctionFamily fam;
    fam.alpha = 2.0;
    fam.count = 20;
    fam.seed = 42;
    ConstantEstimate est = estimate_constant(tuple, LeibnizOperator::frac_laplacian_op, {fam},
                                             grid, {8, 16, 32});
    for (auto& [bw, v] : est.bandwidth_curve)
        std::printf("bandwidth %3d: running max ratio %.6f\n", bw, v);
    std::printf("best ratio %.6f from %s\n", est.best_ratio, est.argmax_desc.c_str());
    return 0;
}
