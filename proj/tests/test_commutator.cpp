#include <catch2/catch_amalgamated.hpp>

#include "torus/commutator.hpp"
#include "torus/cutoffs.hpp"
#include "torus/exponents.hpp"
#include "torus/families.hpp"

using namespace torus;

namespace {

SpectralField random_field(const TorusGrid& g, int bandwidth, std::uint64_t seed,
                           double alpha = 1.0) {
    FunctionFamily fam;
    fam.bandwidth = bandwidth;
    fam.seed = seed;
    fam.count = 1;
    fam.alpha = alpha;
    return generate_family(fam, g).front();
}

// closed two-mode form: [T, e_m](e_n) = (sym(m+n) - sym(n)) e_{m+n}
cplx two_mode_expect(double s, int j, int m, int n) {
    MultiplierSpec T = weighted_lp_symbol(s, j);
    return cplx(T.symbol(std::abs(double(m + n))) - T.symbol(std::abs(double(n))));
}

SpectralField psi1_field(const TorusGrid& g) {
    CutoffFamily cuts = build_cutoffs();
    std::vector<double> v(g.total());
    for (int i = 0; i < g.n(); ++i) v[i] = cuts.psi1(double(i) / g.n());
    return SpectralField::from_real_samples(g, v);
}

}  // namespace

TEST_CASE("commutator vanishes for constant f") {
    TorusGrid g(1, 128);
    SpectralField c = SpectralField::constant(g, 4.2);
    SpectralField gfield = random_field(g, 16, 9);
    SpectralField comm = commutator_apply(c, gfield, 1.0, 2);
    double worst = 0.0;
    for (const cplx& v : comm.coeffs()) worst = std::max(worst, std::abs(v));
    REQUIRE(worst < 1e-13);
}

TEST_CASE("two-mode closed form") {
    TorusGrid g(1, 512);

    SECTION("e_1, e_2 at s = 1, j = 2") {
        SpectralField f = SpectralField::single_mode(g, {1, 0, 0});
        SpectralField h = SpectralField::single_mode(g, {2, 0, 0});
        SpectralField comm = commutator_apply(f, h, 1.0, 2);
        REQUIRE(std::abs(comm.coeff({3, 0, 0}) - two_mode_expect(1.0, 2, 1, 2)) < 1e-12);
    }
    SECTION("exhaustive over |m|, |n| <= 8 and j <= 6") {
        for (double s : {1.0, 2.0}) {
            for (int j = 0; j <= 6; ++j) {
                for (int m = -8; m <= 8; ++m) {
                    for (int n = -8; n <= 8; ++n) {
                        SpectralField fm = SpectralField::single_mode(g, {m, 0, 0});
                        SpectralField gn = SpectralField::single_mode(g, {n, 0, 0});
                        SpectralField comm = commutator_apply(fm, gn, s, j);
                        cplx got = comm.coeff({m + n, 0, 0});
                        REQUIRE(std::abs(got - two_mode_expect(s, j, m, n)) < 1e-12);
                    }
                }
            }
        }
    }
}

TEST_CASE("commutator structure") {
    TorusGrid g(1, 256);
    SpectralField f = random_field(g, 12, 21, 2.0);
    SpectralField g1 = random_field(g, 24, 22);
    SpectralField g2 = random_field(g, 24, 23);

    SECTION("linear in g") {
        SpectralField lhs = commutator_apply(f, g1 * 2.0 + g2, 1.0, 3);
        SpectralField rhs = commutator_apply(f, g1, 1.0, 3) * 2.0 + commutator_apply(f, g2, 1.0, 3);
        int m = std::max(lhs.grid().n(), rhs.grid().n());
        SpectralField d = lhs.resampled(m) - rhs.resampled(m);
        double worst = 0.0;
        for (const cplx& v : d.coeffs()) worst = std::max(worst, std::abs(v));
        REQUIRE(worst < 1e-12);
    }
    SECTION("adding a constant to f changes nothing") {
        SpectralField shifted = f + SpectralField::constant(g, 3.0);
        SpectralField a = commutator_apply(f, g1, 1.0, 3);
        SpectralField b = commutator_apply(shifted, g1, 1.0, 3);
        int m = std::max(a.grid().n(), b.grid().n());
        SpectralField d = a.resampled(m) - b.resampled(m);
        double worst = 0.0;
        for (const cplx& v : d.coeffs()) worst = std::max(worst, std::abs(v));
        REQUIRE(worst < 1e-13);
    }
}

TEST_CASE("ratio sweep") {
    TorusGrid g(1, 512);
    CommutatorProbe probe;
    probe.s = 1.0;
    probe.j_min = 0;
    probe.j_max = 6;
    probe.samples = 6;

    FunctionFamily famf;
    famf.bandwidth = 8;
    famf.alpha = 2.0;
    famf.count = 6;
    famf.seed = 50;
    FunctionFamily famg;
    famg.bandwidth = 64;
    famg.alpha = 1.0;
    famg.count = 6;
    famg.seed = 60;

    SECTION("finite ratios over a random family") {
        auto fs = generate_family(famf, g);
        auto gs = generate_family(famg, g);
        CommutatorSweepResult res = commutator_ratio_sweep(probe, fs, gs);
        REQUIRE(res.global_max > 0.0);
        REQUIRE(std::isfinite(res.global_max));
        REQUIRE(res.rows.size() == 7 * 6);
    }
    SECTION("constant f reports zero ratios") {
        std::vector<SpectralField> fs(3, SpectralField::constant(g, 2.0));
        auto gs = generate_family(famg, g);
        gs.resize(3, gs.front());
        CommutatorSweepResult res = commutator_ratio_sweep(probe, fs, gs);
        REQUIRE(res.global_max == 0.0);
    }
    SECTION("doubling s keeps ratios finite") {
        probe.s = 2.0;
        auto fs = generate_family(famf, g);
        auto gs = generate_family(famg, g);
        CommutatorSweepResult res = commutator_ratio_sweep(probe, fs, gs);
        REQUIRE(std::isfinite(res.global_max));
    }
    SECTION("exponent validation") {
        probe.r = 3.0;
        REQUIRE_THROWS_AS(probe.validate(), config_error);
    }
}

TEST_CASE("paraproduct split") {
    TorusGrid g(1, 512);
    SpectralField psi = psi1_field(TorusGrid(1, 256)).resampled(512);

    SECTION("three pieces reconstruct D^s(psi f)") {
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            SpectralField f = random_field(g, 64, seed);
            ParaproductPieces pieces = paraproduct_split(psi, f, 1.0);
            SpectralField direct =
                apply_multiplier(pointwise_product(psi, f), ds_symbol(1.0));
            const int m = direct.grid().n();
            SpectralField sum = pieces.commutator_part.resampled(m) +
                                pieces.low_high_part.resampled(m) +
                                pieces.high_low_part.resampled(m);
            double scale = lebesgue_norm(direct, kInf);
            double err = lebesgue_norm(sum - direct, kInf);
            REQUIRE(err < 1e-10 * std::max(1.0, scale));
        }
    }
    SECTION("constant f has no commutator piece") {
        SpectralField c = SpectralField::constant(g, 1.7);
        ParaproductPieces pieces = paraproduct_split(psi, c, 1.0);
        REQUIRE(lebesgue_norm(pieces.commutator_part, kInf) < 1e-12);
        SpectralField expect = apply_multiplier(psi, ds_symbol(1.0)) * 1.7;
        const int m = pieces.low_high_part.grid().n();
        SpectralField total = pieces.low_high_part + pieces.high_low_part.resampled(m);
        double err = lebesgue_norm(total - expect.resampled(m), kInf);
        REQUIRE(err < 1e-11);
    }
    SECTION("commutator piece stays bounded relative to D^s f") {
        double worst = 0.0;
        for (std::uint64_t seed : {11u, 12u, 13u, 14u}) {
            SpectralField f = random_field(g, 64, seed);
            ParaproductPieces pieces = paraproduct_split(psi, f, 1.0);
            double num = lebesgue_norm(oversampled(pieces.commutator_part), 2.0);
            double den = lebesgue_norm(oversampled(fractional_laplacian(f, 1.0)), 2.0);
            worst = std::max(worst, num / den);
        }
        REQUIRE(worst < 50.0);
    }
}

TEST_CASE("multiplier localization ratio") {
    TorusGrid g(1, 256);
    SpectralField psi = psi1_field(g);

    SECTION("psi = 1 gives ratio one") {
        SpectralField one = SpectralField::constant(g, 1.0);
        SpectralField f = random_field(g, 16, 31);
        auto r = multiplier_localization_check(one, f, 1.0, 2.0);
        REQUIRE(r.has_value());
        REQUIRE(std::abs(*r - 1.0) < 1e-12);
    }
    SECTION("cos fixture") {
        SpectralField f = SpectralField::cosine(g, {1, 0, 0});
        auto r = multiplier_localization_check(psi, f, 1.0, 2.0);
        REQUIRE(r.has_value());
        REQUIRE(*r > 0.0);
        REQUIRE(*r < 10.0);
    }
    SECTION("zero field is skipped") {
        REQUIRE_FALSE(multiplier_localization_check(psi, SpectralField::zero(g), 1.0, 2.0)
                          .has_value());
    }
    SECTION("stable under bandwidth doubling") {
        double lo = 1e9, hi = 0.0;
        for (int bw : {16, 32}) {
            for (std::uint64_t seed = 1; seed <= 6; ++seed) {
                SpectralField f = random_field(g, bw, 700 + seed, 2.0);
                auto r = multiplier_localization_check(psi, f, 1.0, 2.0);
                REQUIRE(r.has_value());
                lo = std::min(lo, *r);
                hi = std::max(hi, *r);
            }
        }
        REQUIRE(hi / lo < 2.0);
    }
}
