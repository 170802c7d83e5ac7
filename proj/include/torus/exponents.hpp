#pragma once
// Exponent bookkeeping: the Leibniz tuple (s, p1, q1, p2, q2, r), the
// product-estimate triple (s, p, q, r), their admissibility cases, and the
// derived conjugate witnesses for the product estimate.

#include <cmath>
#include <string>
#include <vector>

#include "torus/common.hpp"

namespace torus {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline double holder_conjugate(double p) {
    if (p == 1.0) return kInf;
    if (is_inf(p)) return 1.0;
    return p / (p - 1.0);
}

inline bool nearly(double a, double b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

inline bool is_even_integer(double s) {
    if (!(s >= 2.0)) return false;
    double k = s / 2.0;
    return std::abs(k - std::round(k)) <= 1e-12;
}

enum class Verdict { case_i, case_ii, case_iii, case_iv, rejected };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::case_i: return "case_i";
        case Verdict::case_ii: return "case_ii";
        case Verdict::case_iii: return "case_iii";
        case Verdict::case_iv: return "case_iv";
        default: return "rejected";
    }
}

struct ConditionCase {
    Verdict verdict = Verdict::rejected;
    std::vector<std::string> reasons;
    double threshold = 0.0;        // d/r - d for the Leibniz tuple
    double witness_q_tilde = 0.0;  // product estimate only
    double witness_r_tilde_prime = 0.0;
    bool accepted() const { return verdict != Verdict::rejected; }
};

// (s, p1, q1, p2, q2, r) with both Holder relations 1/r = 1/p_j + 1/q_j.
struct ExponentTuple {
    double s;
    double p1, q1, p2, q2, r;
    int d = 1;

    ExponentTuple(double s_, double p1_, double q1_, double p2_, double q2_, double r_,
                  int d_ = 1)
        : s(s_), p1(p1_), q1(q1_), p2(p2_), q2(q2_), r(r_), d(d_) {
        if (!(s > 0.0)) throw config_error("tuple: s must be positive");
        for (double p : {p1, q1, p2, q2})
            if (!(p >= 1.0)) throw config_error("tuple: p_j, q_j must lie in [1, inf]");
        if (!(r >= 0.5)) throw config_error("tuple: r must lie in [1/2, inf]");
        if (!nearly(inv(r), inv(p1) + inv(q1)) || !nearly(inv(r), inv(p2) + inv(q2)))
            throw config_error("tuple: Holder relation 1/r = 1/p_j + 1/q_j violated");
        if (d < 1 || d > 3) throw config_error("tuple: d must be 1, 2 or 3");
    }

    std::string describe() const {
        auto e = [](double v) { return is_inf(v) ? std::string("inf") : fmt(v); };
        return "s=" + fmt(s) + ",p1=" + e(p1) + ",q1=" + e(q1) + ",p2=" + e(p2) +
               ",q2=" + e(q2) + ",r=" + e(r) + ",d=" + std::to_string(d);
    }
};

inline ConditionCase check_leibniz_conditions(const ExponentTuple& t) {
    ConditionCase out;
    out.threshold = t.d * inv(t.r) - t.d;

    const bool open_lower = t.p1 > 1.0 && t.q1 > 1.0 && t.p2 > 1.0 && t.q2 > 1.0;
    const bool r_window = t.r > 0.5 && !is_inf(t.r);
    const bool s_clause = t.s > out.threshold || is_even_integer(t.s);
    if (open_lower && r_window && s_clause) {
        out.verdict = Verdict::case_i;
        out.reasons.push_back("case (i): 1 < p_j, q_j, 1/2 < r < inf, s admissible");
        return out;
    }
    const bool all_inf = is_inf(t.p1) && is_inf(t.q1) && is_inf(t.p2) && is_inf(t.q2) && is_inf(t.r);
    if (all_inf) {
        out.verdict = Verdict::case_ii;
        out.reasons.push_back("case (ii): all exponents infinite");
        return out;
    }
    const bool ones = t.p1 == 1.0 && t.p2 == 1.0;
    const bool q_equal = t.q1 == t.q2;
    if (ones && q_equal && t.r <= 1.0) {
        out.verdict = Verdict::case_iii;
        out.reasons.push_back("case (iii): p_j = 1, q_1 = q_2, 1/r = 1 + 1/q_j");
        return out;
    }

    out.verdict = Verdict::rejected;
    if (!open_lower) out.reasons.push_back("(i) violated: some p_j or q_j equals 1");
    if (!r_window) out.reasons.push_back("(i) violated: r outside (1/2, inf)");
    if (!s_clause)
        out.reasons.push_back("(i) violated: s <= d/r - d = " + fmt(out.threshold) +
                              " and s not an even integer");
    if (!all_inf) out.reasons.push_back("(ii) violated: not the all-infinity tuple");
    if (!ones) out.reasons.push_back("(iii) violated: p_1, p_2 not both 1");
    else if (!q_equal) out.reasons.push_back("(iii) violated: q_1 != q_2");
    else if (t.r > 1.0) out.reasons.push_back("(iii) violated: r > 1");
    return out;
}

enum class Manifold { torus_manifold, euclidean };

// Product-estimate admissibility: the balance condition
// 1/p + 1/q <= 1/r + s/d with q, r' >= p' (plus 1/p + 1/q >= 1/r on R^d),
// then the case split (i)-(iv).  On acceptance the witnesses
// 1/qt = 1/p' - 1/r', 1/rt' = 1/p' - 1/q are emitted; with them both
// Sobolev gaps equal s/d - (1/p + 1/q - 1/r) >= 0.
inline ConditionCase check_product_conditions(double s, double p, double q, double r, int d,
                                              Manifold manifold) {
    if (!(s > 0.0)) throw config_error("product tuple: s must be positive");
    for (double v : {p, q, r})
        if (!(v >= 1.0)) throw config_error("product tuple: p, q, r must lie in [1, inf]");

    ConditionCase out;
    const double pc = holder_conjugate(p);
    const double rc = holder_conjugate(r);
    out.threshold = inv(p) + inv(q) - inv(r);  // must not exceed s/d

    bool ok = true;
    if (inv(p) + inv(q) > inv(r) + s / d + 1e-12) {
        ok = false;
        out.reasons.push_back("balance violated: 1/p + 1/q > 1/r + s/d");
    }
    if (inv(q) > inv(pc) + 1e-12) {
        ok = false;
        out.reasons.push_back("conjugate bound violated: q < p'");
    }
    if (inv(rc) > inv(pc) + 1e-12) {
        ok = false;
        out.reasons.push_back("conjugate bound violated: r' < p'");
    }
    if (manifold == Manifold::euclidean && inv(p) + inv(q) + 1e-12 < inv(r)) {
        ok = false;
        out.reasons.push_back("euclidean scaling violated: 1/p + 1/q < 1/r");
    }
    if (!ok) {
        out.verdict = Verdict::rejected;
        return out;
    }

    if (p > 1.0 && q > 1.0 && !is_inf(q) && r > 1.0 && !is_inf(r)) {
        out.verdict = Verdict::case_i;
        out.reasons.push_back("case (i): 1 < p <= inf, 1 < q, r < inf");
    } else if (p > 1.0 && p == r && is_inf(q)) {
        out.verdict = Verdict::case_ii;
        out.reasons.push_back("case (ii): 1 < p = r <= inf, q = inf");
    } else if (p > 1.0 && q >= 1.0 && !is_inf(q) && r == 1.0 && q == pc) {
        out.verdict = Verdict::case_iii;
        out.reasons.push_back("case (iii): r = 1, q = p'");
    } else if (p == 1.0 && r == 1.0 && is_inf(q)) {
        out.verdict = Verdict::case_iv;
        out.reasons.push_back("case (iv): p = r = 1, q = inf");
    } else {
        out.verdict = Verdict::rejected;
        out.reasons.push_back("no case of the product estimate matches");
        return out;
    }

    double iq = std::max(0.0, inv(pc) - inv(rc));
    double ir = std::max(0.0, inv(pc) - inv(q));
    out.witness_q_tilde = iq == 0.0 ? kInf : 1.0 / iq;
    out.witness_r_tilde_prime = ir == 0.0 ? kInf : 1.0 / ir;
    return out;
}

}  // namespace torus
