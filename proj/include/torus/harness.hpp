#pragma once
// Inequality ratio computation, empirical constant estimation over function
// families, and the sharpness scan near the quasi-norm regularity threshold.

#include <string>
#include <vector>

#include "torus/exponents.hpp"
#include "torus/families.hpp"
#include "torus/multiplier.hpp"
#include "torus/norms.hpp"
#include "torus/product.hpp"

namespace torus {

enum class LeibnizOperator { frac_laplacian_op, bessel_op };

inline std::string operator_name(LeibnizOperator op) {
    return op == LeibnizOperator::frac_laplacian_op ? "D^s" : "J^s";
}

struct RatioOutcome {
    double value = 0.0;
    bool degenerate = false;  // 0/0 convention applied
};

// Norms are taken on grids oversampled to 4x the occupied band.
inline double resolved_norm(const SpectralField& f, double p) {
    return lebesgue_norm(oversampled(f, 4), p);
}

inline SpectralField apply_op(const SpectralField& f, LeibnizOperator op, double s) {
    return op == LeibnizOperator::frac_laplacian_op ? fractional_laplacian(f, s)
                                                    : bessel_operator(f, s);
}

// ||Op(fg)||_r / ( ||Op f||_{p1} ||g||_{q1} + ||f||_{p2} ||Op g||_{q2} )
inline RatioOutcome leibniz_ratio(const SpectralField& f, const SpectralField& g,
                                  const ExponentTuple& t, LeibnizOperator op) {
    SpectralField fg = pointwise_product(f, g);
    double num = resolved_norm(apply_op(fg, op, t.s), t.r);
    double den = resolved_norm(apply_op(f, op, t.s), t.p1) * resolved_norm(g, t.q1) +
                 resolved_norm(f, t.p2) * resolved_norm(apply_op(g, op, t.s), t.q2);
    if (!std::isfinite(num) || !std::isfinite(den))
        throw numeric_error("leibniz ratio: non-finite norm", num);
    if (den == 0.0) {
        if (num > 1e-12)
            throw numeric_error("leibniz ratio: zero denominator with nonzero numerator", num);
        return {0.0, true};
    }
    return {num / den, false};
}

// ||J^{-s}(fg)||_r / ( ||J^{-s} f||_p ||J^{s} g||_q ).  Euclidean-case inputs
// are expected on a large-period grid; the symbols scale with the period
// automatically.
inline RatioOutcome product_ratio(const SpectralField& f, const SpectralField& g, double s,
                                  double p, double q, double r) {
    SpectralField fg = pointwise_product(f, g);
    double num = resolved_norm(bessel_operator(fg, -s), r);
    double den = resolved_norm(bessel_operator(f, -s), p) *
                 resolved_norm(bessel_operator(g, s), q);
    if (!std::isfinite(num) || !std::isfinite(den))
        throw numeric_error("product ratio: non-finite norm", num);
    if (den == 0.0) {
        if (num > 1e-12)
            throw numeric_error("product ratio: zero denominator with nonzero numerator", num);
        return {0.0, true};
    }
    return {num / den, false};
}

struct ConstantEstimate {
    std::string tuple_desc;
    std::string operator_label;
    double best_ratio = 0.0;
    std::string argmax_desc;
    std::vector<std::pair<int, double>> bandwidth_curve;  // (bandwidth, running max)

    double curve_spread() const {
        if (bandwidth_curve.empty()) return 1.0;
        double lo = bandwidth_curve.front().second, hi = lo;
        for (auto& [bw, v] : bandwidth_curve) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        return lo > 0.0 ? hi / lo : 1.0;
    }
};

namespace harness_detail {

// Zip-pairs members of every ordered family combination.
template <typename RatioFn>
void sweep_pairs(const std::vector<std::vector<SpectralField>>& lists,
                 const std::vector<std::string>& labels, RatioFn&& ratio_fn,
                 double& best, std::string& argmax) {
    for (std::size_t a = 0; a < lists.size(); ++a) {
        for (std::size_t b = 0; b < lists.size(); ++b) {
            std::size_t count = std::min(lists[a].size(), lists[b].size());
            std::vector<double> vals(count, 0.0);
            parallel_for(count, [&](std::size_t i) {
                vals[i] = ratio_fn(lists[a][i], lists[b][i]);
            });
            for (std::size_t i = 0; i < count; ++i) {
                if (vals[i] > best) {
                    best = vals[i];
                    argmax = labels[a] + "[" + std::to_string(i) + "] x " + labels[b] + "[" +
                             std::to_string(i) + "]";
                }
            }
        }
    }
}

}  // namespace harness_detail

// Running max of the ratio over every family pair, recorded per bandwidth.
template <typename RatioFn>
ConstantEstimate estimate_constant_impl(const std::vector<FunctionFamily>& fams,
                                        const TorusGrid& grid,
                                        const std::vector<int>& bandwidths,
                                        RatioFn&& ratio_fn, std::string tuple_desc,
                                        std::string op_label) {
    ConstantEstimate est;
    est.tuple_desc = std::move(tuple_desc);
    est.operator_label = std::move(op_label);
    for (int bw : bandwidths) {
        std::vector<std::vector<SpectralField>> lists;
        std::vector<std::string> labels;
        for (FunctionFamily fam : fams) {
            fam.bandwidth = bw;
            if (fam.kind == FamilyKind::concentrator)
                fam.lambda = std::min(fam.lambda, bw / 4.0);
            lists.push_back(generate_family(fam, grid));
            labels.push_back(fam.describe());
        }
        harness_detail::sweep_pairs(lists, labels, ratio_fn, est.best_ratio, est.argmax_desc);
        est.bandwidth_curve.emplace_back(bw, est.best_ratio);
    }
    return est;
}

inline ConstantEstimate estimate_constant(const ExponentTuple& t, LeibnizOperator op,
                                          const std::vector<FunctionFamily>& fams,
                                          const TorusGrid& grid,
                                          const std::vector<int>& bandwidths = {8, 16, 32, 64}) {
    return estimate_constant_impl(
        fams, grid, bandwidths,
        [&](const SpectralField& f, const SpectralField& g) {
            return leibniz_ratio(f, g, t, op).value;
        },
        t.describe(), operator_name(op));
}

inline ConstantEstimate estimate_product_constant(
    double s, double p, double q, double r, const std::vector<FunctionFamily>& fams,
    const TorusGrid& grid, const std::vector<int>& bandwidths = {8, 16, 32, 64}) {
    auto e = [](double v) { return is_inf(v) ? std::string("inf") : fmt(v); };
    return estimate_constant_impl(
        fams, grid, bandwidths,
        [&](const SpectralField& f, const SpectralField& g) {
            return product_ratio(f, g, s, p, q, r).value;
        },
        "s=" + fmt(s) + ",p=" + e(p) + ",q=" + e(q) + ",r=" + e(r), "J^{-s}");
}

struct SharpnessRow {
    double s;
    std::vector<std::pair<double, double>> per_lambda;  // (lambda, best ratio)
    double growth_factor = 0.0;                         // best(last) / best(first)
};

// Concentrator stress of the D^s Leibniz ratio for r < 1 at regularities
// straddling the threshold d/r - d.  Growth of the per-lambda best ratio is
// the reported finding; nothing is asserted here.
inline std::vector<SharpnessRow> sharpness_scan(const ExponentTuple& shape,
                                                const std::vector<double>& s_values,
                                                const TorusGrid& grid,
                                                const std::vector<double>& lambdas = {8, 16, 32,
                                                                                      64}) {
    if (!(shape.r < 1.0)) throw config_error("sharpness scan: needs r < 1");
    if (is_inf(shape.p1) || is_inf(shape.q1) || is_inf(shape.p2) || is_inf(shape.q2))
        throw config_error("sharpness scan: needs p_j, q_j < inf");
    std::vector<SharpnessRow> table;
    for (double s : s_values) {
        ExponentTuple t(s, shape.p1, shape.q1, shape.p2, shape.q2, shape.r, shape.d);
        SharpnessRow row;
        row.s = s;
        for (double lam : lambdas) {
            FunctionFamily fam;
            fam.kind = FamilyKind::concentrator;
            fam.lambda = lam;
            fam.bandwidth = static_cast<int>(4 * lam);
            fam.count = 3;
            fam.p_star = 2.0;
            std::vector<SpectralField> members = generate_family(fam, grid);
            double best = 0.0;
            for (const auto& f : members)
                for (const auto& g : members)
                    best = std::max(best, leibniz_ratio(f, g, t,
                                                        LeibnizOperator::frac_laplacian_op)
                                              .value);
            row.per_lambda.emplace_back(lam, best);
        }
        row.growth_factor = row.per_lambda.back().second / row.per_lambda.front().second;
        table.push_back(std::move(row));
    }
    return table;
}

}  // namespace torus
