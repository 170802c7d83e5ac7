// Batch driver for the inequality experiments: every check and sweep in the
// library is reachable as a subcommand, emitting a CSV body plus a .report.txt
// whose header records version, cutoff provenance and the timestamp.  CSV
// bodies are byte-identical across runs for a fixed config and seed.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <sstream>

#include "torus/torus.hpp"

using namespace torus;

namespace {

double parse_extended(const std::string& tok) {
    if (tok == "inf" || tok == "infty" || tok == "oo") return kInf;
    return std::stod(tok);
}

std::map<std::string, std::string> parse_kv(const std::string& text) {
    std::map<std::string, std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw config_error("expected key=value in '" + item + "'");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

double kv_num(const std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw config_error("missing tuple key '" + key + "'");
    return parse_extended(it->second);
}

ExponentTuple parse_leibniz_tuple(const std::string& text, int d) {
    auto kv = parse_kv(text);
    return ExponentTuple(kv_num(kv, "s"), kv_num(kv, "p1"), kv_num(kv, "q1"),
                         kv_num(kv, "p2"), kv_num(kv, "q2"), kv_num(kv, "r"), d);
}

struct ProductTuple {
    double s, p, q, r;
};

ProductTuple parse_product_tuple(const std::string& text) {
    auto kv = parse_kv(text);
    return {kv_num(kv, "s"), kv_num(kv, "p"), kv_num(kv, "q"), kv_num(kv, "r")};
}

// family spec: kind:key=value,...  e.g. "random:alpha=2,seed=7,count=100,bw=16"
FunctionFamily parse_family(const std::string& text) {
    FunctionFamily fam;
    std::string kind = text, args;
    if (auto colon = text.find(':'); colon != std::string::npos) {
        kind = text.substr(0, colon);
        args = text.substr(colon + 1);
    }
    if (kind == "random") fam.kind = FamilyKind::random_decay;
    else if (kind == "single") fam.kind = FamilyKind::single_modes;
    else if (kind == "concentrator") fam.kind = FamilyKind::concentrator;
    else if (kind == "resonant") fam.kind = FamilyKind::product_resonant;
    else throw config_error("unknown family kind '" + kind + "'");
    if (!args.empty()) {
        for (auto& [k, v] : parse_kv(args)) {
            if (k == "alpha") fam.alpha = std::stod(v);
            else if (k == "seed") fam.seed = std::stoull(v);
            else if (k == "count") fam.count = std::stoi(v);
            else if (k == "bw") fam.bandwidth = std::stoi(v);
            else if (k == "lambda") fam.lambda = std::stod(v);
            else if (k == "mean_zero") fam.mean_zero = v != "0";
            else throw config_error("unknown family key '" + k + "'");
        }
    }
    return fam;
}

std::string ext_str(double v) { return is_inf(v) ? "inf" : fmt(v); }

void print_case(const ConditionCase& c) {
    std::cout << "verdict: " << verdict_name(c.verdict) << '\n';
    for (const auto& r : c.reasons) std::cout << "  - " << r << '\n';
    if (c.accepted() && (c.witness_q_tilde != 0.0 || c.witness_r_tilde_prime != 0.0))
        std::cout << "  witnesses: q~=" << ext_str(c.witness_q_tilde)
                  << " r~'=" << ext_str(c.witness_r_tilde_prime) << '\n';
}

void write_estimate(const std::string& out, const ConstantEstimate& est,
                    const std::string& verdict, bool plotdata) {
    CsvWriter csv(out + ".csv", "bandwidth,running_max_ratio");
    for (auto& [bw, v] : est.bandwidth_curve) csv.row(std::to_string(bw) + "," + fmt(v));
    ReportWriter rep(out + ".report.txt");
    rep.line("tuple: " + est.tuple_desc);
    rep.line("operator: " + est.operator_label);
    rep.line("verdict: " + verdict);
    rep.line("best_ratio: " + fmt(est.best_ratio));
    rep.line("argmax: " + est.argmax_desc);
    rep.line("curve_spread: " + fmt(est.curve_spread()));
    if (plotdata) {
        PlotWriter plot(out + ".plotdata");
        plot.comment("bandwidth vs running max ratio");
        for (auto& [bw, v] : est.bandwidth_curve) plot.point(bw, v);
    }
    std::cout << "best_ratio " << fmt(est.best_ratio) << "  spread "
              << fmt(est.curve_spread()) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"torus-leibniz: spectral fractional-calculus verification harness"};
    app.require_subcommand(1);

    // shared options, bound per subcommand below
    int dim = 1;
    int grid_n = 0;  // 0 = per-dimension default
    std::string out;
    std::string tuple_text;
    std::vector<std::string> family_texts;
    std::vector<int> bandwidths = {8, 16, 32, 64};
    bool plotdata = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--dim", dim, "torus dimension");
        cmd->add_option("--grid", grid_n, "samples per axis");
        cmd->add_option("--out,-o", out, "output file prefix");
        cmd->add_flag("--plotdata", plotdata, "also write <out>.plotdata");
    };
    auto make_grid = [&](double period = 1.0) {
        return grid_n > 0 ? TorusGrid(dim, grid_n, period)
                          : TorusGrid(dim, TorusGrid::standard(dim).n(), period);
    };
    auto families_or_default = [&]() {
        std::vector<FunctionFamily> fams;
        for (const auto& t : family_texts) fams.push_back(parse_family(t));
        if (fams.empty()) {
            FunctionFamily a;
            a.alpha = 2.0;
            a.seed = 7;
            a.count = 50;
            fams.push_back(a);
            FunctionFamily b = a;
            b.seed = 1007;
            fams.push_back(b);
        }
        return fams;
    };

    // ---- exponent-check ----
    auto* cmd_exp = app.add_subcommand("exponent-check", "classify an exponent tuple");
    bool product_mode = false;
    bool euclidean = false;
    cmd_exp->add_option("--tuple", tuple_text, "tuple spec, e.g. s=1,p1=4,...,r=2")->required();
    cmd_exp->add_flag("--product", product_mode, "product-estimate triple (s,p,q,r)");
    cmd_exp->add_flag("--euclidean", euclidean, "euclidean-case clauses");
    cmd_exp->add_option("--dim", dim, "dimension");

    // ---- verify-leibniz / estimate-constant ----
    std::string op_name = "D";
    auto* cmd_leib = app.add_subcommand("verify-leibniz", "Leibniz-rule ratio sweep");
    add_common(cmd_leib);
    cmd_leib->add_option("--tuple", tuple_text)->required();
    cmd_leib->add_option("--family", family_texts, "family specs (repeatable)");
    cmd_leib->add_option("--operator", op_name, "D or J");
    cmd_leib->add_option("--bandwidths", bandwidths, "bandwidth ladder");

    auto* cmd_est = app.add_subcommand("estimate-constant", "empirical constant estimate");
    add_common(cmd_est);
    cmd_est->add_option("--tuple", tuple_text)->required();
    cmd_est->add_option("--family", family_texts);
    cmd_est->add_option("--operator", op_name, "D or J");
    cmd_est->add_option("--bandwidths", bandwidths);

    // ---- verify-product ----
    auto* cmd_prod = app.add_subcommand("verify-product", "negative-order product estimate sweep");
    add_common(cmd_prod);
    cmd_prod->add_option("--tuple", tuple_text)->required();
    cmd_prod->add_option("--family", family_texts);
    cmd_prod->add_option("--bandwidths", bandwidths);
    cmd_prod->add_flag("--euclidean", euclidean, "embed on a period-16 torus");

    // ---- sharpness-scan ----
    double scan_r = 0.55;
    std::vector<double> s_values;
    std::vector<double> lambdas = {8, 16, 32, 64};
    auto* cmd_sharp = app.add_subcommand("sharpness-scan", "concentrator stress near d/r - d");
    add_common(cmd_sharp);
    cmd_sharp->add_option("--r", scan_r, "target quasi-norm exponent (< 1)");
    cmd_sharp->add_option("--s-values", s_values, "regularities to probe");
    cmd_sharp->add_option("--lambdas", lambdas, "concentration scales");

    // ---- kernel-decay ----
    std::string kernel_kind = "bessel_derivative";
    double kernel_order = 0.5;
    double c0 = 1.0;
    std::string bound_name = "power";
    auto* cmd_decay = app.add_subcommand("kernel-decay", "fit kernel decay constants");
    add_common(cmd_decay);
    cmd_decay->add_option("--kind", kernel_kind, "riesz|bessel|frac_laplacian|bessel_derivative");
    cmd_decay->add_option("--order", kernel_order, "sigma or s");
    cmd_decay->add_option("--c0", c0, "inner cutoff");
    cmd_decay->add_option("--bound", bound_name, "power|exponential");

    // ---- kernel-consistency ----
    double sigma = 2.0;
    double period = 40.0;
    int levels = 4;
    auto* cmd_cons = app.add_subcommand("kernel-consistency",
                                        "periodized kernel vs exact symbol");
    add_common(cmd_cons);
    cmd_cons->add_option("--sigma", sigma, "Bessel order");
    cmd_cons->add_option("--period", period, "embedding period L");
    cmd_cons->add_option("--levels", levels, "step-halving levels");

    // ---- poisson-check ----
    std::string profile_name = "gaussian";
    int radius = 6;
    auto* cmd_poisson = app.add_subcommand("poisson-check", "lattice summation identity");
    add_common(cmd_poisson);
    cmd_poisson->add_option("--profile", profile_name, "gaussian|bessel2");
    cmd_poisson->add_option("--radius", radius, "spatial truncation radius");

    // ---- transference-check ----
    double ts = 1.0;
    int tL = 16, tK = 7, tres = 512;
    double ttol = 1e-5;
    bool fold = false;
    auto* cmd_trans = app.add_subcommand("transference-check",
                                         "lattice-sum identity for D^s of a product");
    add_common(cmd_trans);
    cmd_trans->add_option("--s", ts, "derivative order");
    cmd_trans->add_option("--L", tL, "embedding period");
    cmd_trans->add_option("--K", tK, "lattice cutoff");
    cmd_trans->add_option("--resolution", tres, "samples per unit length");
    cmd_trans->add_option("--tolerance", ttol, "target tolerance");
    cmd_trans->add_flag("--fold", fold, "sum a complete residue system instead of |k|<=K");

    // ---- commutator-sweep ----
    double cs = 1.0;
    int jmax = 12;
    int csamples = 50;
    int bw_f = 32, bw_g = 0;
    std::string exps = "p=inf,q=2,r=2";
    auto* cmd_comm = app.add_subcommand("commutator-sweep", "weighted LP commutator ratios");
    add_common(cmd_comm);
    cmd_comm->add_option("--s", cs, "derivative order");
    cmd_comm->add_option("--jmax", jmax, "largest dyadic level");
    cmd_comm->add_option("--samples", csamples, "sample pairs");
    cmd_comm->add_option("--exponents", exps, "p=..,q=..,r=..");
    cmd_comm->add_option("--bw-f", bw_f, "bandwidth of the multiplier factor");
    cmd_comm->add_option("--bw-g", bw_g, "bandwidth of the argument (0 = Nyquist/4)");

    // ---- paraproduct-check ----
    double ps = 1.0;
    int pcount = 50;
    int pbw = 64;
    auto* cmd_para = app.add_subcommand("paraproduct-check", "three-piece reconstruction");
    add_common(cmd_para);
    cmd_para->add_option("--s", ps, "derivative order");
    cmd_para->add_option("--count", pcount, "number of random fields");
    cmd_para->add_option("--bandwidth", pbw, "field bandwidth");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_exp->parsed()) {
            if (product_mode) {
                ProductTuple t = parse_product_tuple(tuple_text);
                ConditionCase c = check_product_conditions(
                    t.s, t.p, t.q, t.r, dim,
                    euclidean ? Manifold::euclidean : Manifold::torus_manifold);
                print_case(c);
            } else {
                ConditionCase c = check_leibniz_conditions(parse_leibniz_tuple(tuple_text, dim));
                print_case(c);
            }
            return 0;
        }

        if (cmd_leib->parsed() || cmd_est->parsed()) {
            if (out.empty()) out = cmd_leib->parsed() ? "verify-leibniz" : "estimate-constant";
            ExponentTuple t = parse_leibniz_tuple(tuple_text, dim);
            ConditionCase c = check_leibniz_conditions(t);
            print_case(c);
            LeibnizOperator op = op_name == "J" ? LeibnizOperator::bessel_op
                                                : LeibnizOperator::frac_laplacian_op;
            ConstantEstimate est =
                estimate_constant(t, op, families_or_default(), make_grid(), bandwidths);
            write_estimate(out, est, verdict_name(c.verdict), plotdata);
            return 0;
        }

        if (cmd_prod->parsed()) {
            if (out.empty()) out = "verify-product";
            ProductTuple t = parse_product_tuple(tuple_text);
            ConditionCase c = check_product_conditions(
                t.s, t.p, t.q, t.r, dim,
                euclidean ? Manifold::euclidean : Manifold::torus_manifold);
            print_case(c);
            std::vector<FunctionFamily> fams = families_or_default();
            TorusGrid g = euclidean ? TorusGrid(dim, 16 * 256, 16.0) : make_grid();
            if (euclidean)
                for (auto& f : fams) f.kind = FamilyKind::concentrator;
            ConstantEstimate est =
                estimate_product_constant(t.s, t.p, t.q, t.r, fams, g, bandwidths);
            write_estimate(out, est, verdict_name(c.verdict), plotdata);
            return 0;
        }

        if (cmd_sharp->parsed()) {
            if (out.empty()) out = "sharpness-scan";
            double pq = 2.0 * scan_r;  // symmetric Holder split of 1/r
            ExponentTuple shape(1.0, pq, pq, pq, pq, scan_r, dim);
            double sstar = dim / scan_r - dim;
            if (s_values.empty()) s_values = {sstar - 0.2, sstar + 0.5};
            auto table = sharpness_scan(shape, s_values, make_grid(), lambdas);
            CsvWriter csv(out + ".csv", "s,lambda,best_ratio");
            ReportWriter rep(out + ".report.txt");
            rep.line("threshold s* = d/r - d = " + fmt(sstar));
            for (const auto& row : table) {
                for (auto& [lam, v] : row.per_lambda)
                    csv.row(fmt(row.s) + "," + fmt(lam) + "," + fmt(v));
                rep.line("s=" + fmt(row.s) + " growth_factor=" + fmt(row.growth_factor));
                std::cout << "s=" << fmt(row.s) << "  growth " << fmt(row.growth_factor) << '\n';
            }
            return 0;
        }

        if (cmd_decay->parsed()) {
            if (out.empty()) out = "kernel-decay";
            KernelKind kind;
            if (kernel_kind == "riesz") kind = KernelKind::riesz_potential;
            else if (kernel_kind == "bessel") kind = KernelKind::bessel_potential;
            else if (kernel_kind == "frac_laplacian") kind = KernelKind::frac_laplacian;
            else if (kernel_kind == "bessel_derivative") kind = KernelKind::bessel_derivative;
            else throw config_error("unknown kernel kind '" + kernel_kind + "'");
            BoundKind bound =
                bound_name == "exponential" ? BoundKind::exponential : BoundKind::power;
            std::vector<double> samples;
            for (double x = c0; x <= 10.0; x += 0.5) samples.push_back(x);
            DecayFitReport repf = decay_bound_check({kind, kernel_order, dim}, c0, samples, bound);
            CsvWriter csv(out + ".csv", DecayFitReport::csv_header());
            csv.row(repf.csv_row());
            ReportWriter rep(out + ".report.txt");
            rep.line(repf.csv_row());
            std::cout << "fitted constant " << fmt(repf.fitted_constant) << " at |x|="
                      << fmt(repf.max_ratio_location) << '\n';
            return 0;
        }

        if (cmd_cons->parsed()) {
            if (out.empty()) out = "kernel-consistency";
            int n = grid_n > 0 ? grid_n : 4096;
            ConsistencyResult res = kernel_multiplier_consistency(sigma, dim, period, n, levels);
            CsvWriter csv(out + ".csv", "sigma,period,grid,levels,max_rel_error,raw_rel_error");
            csv.row(fmt(sigma) + "," + fmt(period) + "," + std::to_string(n) + "," +
                    std::to_string(levels) + "," + fmt(res.max_rel_error) + "," +
                    fmt(res.raw_rel_error));
            ReportWriter rep(out + ".report.txt");
            rep.line("max_rel_error: " + fmt(res.max_rel_error));
            std::cout << "max relative error " << fmt(res.max_rel_error) << '\n';
            return 0;
        }

        if (cmd_poisson->parsed()) {
            if (out.empty()) out = "poisson-check";
            PoissonProfile prof =
                profile_name == "bessel2" ? PoissonProfile::bessel2 : PoissonProfile::gaussian;
            PoissonResult res = poisson_check(prof, radius);
            CsvWriter csv(out + ".csv", "profile,radius,max_residual,spatial_tail,spectral_rem");
            csv.row(profile_name + "," + std::to_string(radius) + "," + fmt(res.max_residual) +
                    "," + fmt(res.spatial_tail) + "," + fmt(res.spectral_rem));
            ReportWriter rep(out + ".report.txt");
            rep.line("max_residual: " + fmt(res.max_residual));
            std::cout << "max residual " << fmt(res.max_residual) << '\n';
            return 0;
        }

        if (cmd_trans->parsed()) {
            if (out.empty()) out = "transference-check";
            TorusGrid g(1, 64);
            SpectralField f = SpectralField::cosine(g, {1, 0, 0});
            CutoffFamily cuts = build_cutoffs();
            TransferenceResult res = transference_identity_check(
                f, f, cuts, ts, tL, tK, tres, ttol,
                fold ? SumMode::complete_fold : SumMode::truncated);
            CsvWriter csv(out + ".csv",
                          "identity,s,L,K,max_error,mean_error,tail_bound,status");
            csv.row(std::string("lattice_sum,") + fmt(ts) + "," + std::to_string(tL) + "," +
                    std::to_string(tK) + "," + fmt(res.max_rel_error) + "," +
                    fmt(res.mean_rel_error) + "," + fmt(res.tail_bound) + "," +
                    status_name(res.status));
            ReportWriter rep(out + ".report.txt");
            rep.line("max_rel_error: " + fmt(res.max_rel_error));
            rep.line("tail_bound: " + fmt(res.tail_bound));
            rep.line("status: " + status_name(res.status));
            std::cout << "max rel error " << fmt(res.max_rel_error) << "  tail "
                      << fmt(res.tail_bound) << "  " << status_name(res.status) << '\n';
            return res.status == CheckStatus::fail ? 1 : 0;
        }

        if (cmd_comm->parsed()) {
            if (out.empty()) out = "commutator-sweep";
            auto kv = parse_kv(exps);
            CommutatorProbe probe;
            probe.s = cs;
            probe.j_max = jmax;
            probe.samples = csamples;
            probe.p = kv_num(kv, "p");
            probe.q = kv_num(kv, "q");
            probe.r = kv_num(kv, "r");
            TorusGrid g = grid_n > 0 ? TorusGrid(1, grid_n) : TorusGrid(1, 16384);
            FunctionFamily famf;
            famf.bandwidth = bw_f;
            famf.alpha = 2.0;
            famf.count = csamples;
            famf.seed = 101;
            FunctionFamily famg;
            famg.bandwidth = bw_g > 0 ? bw_g : g.nyquist() / 2;
            famg.alpha = 1.0;
            famg.count = csamples;
            famg.seed = 202;
            auto res = commutator_ratio_sweep(probe, generate_family(famf, g),
                                              generate_family(famg, g));
            CsvWriter csv(out + ".csv", "s,p,q,r,j,sample,ratio");
            for (const auto& row : res.rows)
                csv.row(fmt(cs) + "," + ext_str(probe.p) + "," + ext_str(probe.q) + "," +
                        ext_str(probe.r) + "," + std::to_string(row.j) + "," +
                        std::to_string(row.sample) + "," + fmt(row.ratio));
            ReportWriter rep(out + ".report.txt");
            for (std::size_t j = 0; j < res.per_j_max.size(); ++j)
                rep.line("j=" + std::to_string(j) + " max_ratio=" + fmt(res.per_j_max[j]));
            rep.line("global_max: " + fmt(res.global_max));
            std::cout << "global max ratio " << fmt(res.global_max) << '\n';
            return 0;
        }

        if (cmd_para->parsed()) {
            if (out.empty()) out = "paraproduct-check";
            TorusGrid g = grid_n > 0 ? TorusGrid(1, grid_n) : TorusGrid(1, 512);
            CutoffFamily cuts = build_cutoffs();
            std::vector<double> psis(g.total());
            for (int i = 0; i < g.n(); ++i) psis[i] = cuts.psi1(double(i) / g.n());
            SpectralField psi = SpectralField::from_real_samples(g, psis);
            FunctionFamily fam;
            fam.bandwidth = pbw;
            fam.count = pcount;
            fam.seed = 11;
            auto fields = generate_family(fam, g);
            CsvWriter csv(out + ".csv", "sample,reconstruction_error");
            double worst = 0.0;
            for (std::size_t i = 0; i < fields.size(); ++i) {
                ParaproductPieces pieces = paraproduct_split(psi, fields[i], ps);
                SpectralField direct =
                    apply_multiplier(pointwise_product(psi, fields[i]), ds_symbol(ps));
                const int m = direct.grid().n();
                SpectralField sum = pieces.commutator_part.resampled(m) +
                                    pieces.low_high_part.resampled(m) +
                                    pieces.high_low_part.resampled(m);
                double err = lebesgue_norm(sum - direct, kInf) /
                             std::max(1.0, lebesgue_norm(direct, kInf));
                worst = std::max(worst, err);
                csv.row(std::to_string(i) + "," + fmt(err));
            }
            ReportWriter rep(out + ".report.txt");
            rep.line("worst_reconstruction_error: " + fmt(worst));
            std::cout << "worst reconstruction error " << fmt(worst) << '\n';
            return 0;
        }
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
