#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "afmlab/io.hpp"
#include "afmlab/spectral.hpp"
#include "afmlab/verify.hpp"

using namespace afmlab;

namespace {

// scalar flags accept anything rational_from_decimal does ("1", "0.35", "1/3")
double scalar(const std::string& text) { return to_double(rational_from_decimal(text)); }

std::vector<double> broadcast_or_file(int n, const std::string& scalar_text,
                                      const std::string& file_path) {
    if (!file_path.empty()) {
        std::vector<Rational> r = parse_activity_file(file_path);
        if (int(r.size()) != n)
            throw InvalidParameter("expected " + std::to_string(n) + " activities in " +
                                   file_path + ", got " + std::to_string(r.size()));
        std::vector<double> out(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) out[i] = to_double(r[i]);
        return out;
    }
    return std::vector<double>(std::size_t(n), scalar(scalar_text));
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            out.push_back(std::stoi(tok));
        } catch (...) {
            throw ParseError("bad integer list entry '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw ParseError("empty integer list");
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact hard-core / semiproper-colouring partition functions, clique lower "
                 "bounds, and numerical verification of the related inequalities"};
    app.require_subcommand(1);

    std::string format = "json";
    double tolerance = kSlackTolerance;
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "tsv"}));
    auto* tol_opt = app.add_option("--tolerance", tolerance, "slack tolerance (>= 1e-12)")
                        ->check(CLI::Range(1e-12, 1e30));

    std::string graph_path, model_path, lambda_file, mu_file, acts_file;
    std::string lambda_text = "1", mu_text = "1", alpha_text = "1";
    std::string kind_text = "path", ds_text;
    int q = 2, length = 3;
    int delta = 2, delta_max = 6, d_max = 5, grid = 100, samples = 100;
    std::uint64_t points = 100000, trials = 1000, seed = kDefaultSeed;
    int n_max = 10, q_max = 3;
    double step = 1e-4;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate Z_G exactly");
    eval_cmd->add_option("--graph", graph_path)->required();
    eval_cmd->add_option("--lambda", lambda_text, "activity for every vertex");
    eval_cmd->add_option("--lambda-file", lambda_file, "per-vertex activities, one per line");

    auto* spectra_cmd = app.add_subcommand("spectra", "model eigenvalues and AFM classification");
    spectra_cmd->add_option("--model", model_path)->required();

    auto* check = app.add_subcommand("check", "single-instance inequality checks");
    check->require_subcommand(1);

    auto* c_main = check->add_subcommand("thm-main", "clique lower bound for Z_G");
    c_main->add_option("--graph", graph_path)->required();
    c_main->add_option("--lambda", lambda_text);
    c_main->add_option("--lambda-file", lambda_file);

    auto* c_2spin = check->add_subcommand("thm-2spin", "two-spin reduction bound");
    c_2spin->add_option("--graph", graph_path)->required();
    c_2spin->add_option("--lambda", lambda_text);
    c_2spin->add_option("--alpha", alpha_text);

    auto* c_semi = check->add_subcommand("thm-semiproper", "two-colour clique bound");
    c_semi->add_option("--graph", graph_path)->required();
    c_semi->add_option("--lambda", lambda_text);
    c_semi->add_option("--mu", mu_text);
    c_semi->add_option("--lambda-file", lambda_file);
    c_semi->add_option("--mu-file", mu_file);

    auto* c_deg2 = check->add_subcommand("deg2", "walk homomorphism bound for AFM models");
    c_deg2->add_option("--kind", kind_text)->check(CLI::IsMember({"path", "cycle"}));
    c_deg2->add_option("--length", length)->required();
    c_deg2->add_option("--model", model_path)->required();

    auto* c_weak = check->add_subcommand("weak-q", "weak q-colour bound (plus conjectured bound)");
    c_weak->add_option("--graph", graph_path)->required();
    c_weak->add_option("--q", q);
    c_weak->add_option("--lambda", lambda_text);
    c_weak->add_option("--acts-file", acts_file, "q rows of n activities");

    auto* c_bij = check->add_subcommand("bijection", "colouring count = product-graph Z, exactly");
    c_bij->add_option("--graph", graph_path)->required();
    c_bij->add_option("--q", q);
    c_bij->add_option("--lambda", lambda_text);
    c_bij->add_option("--acts-file", acts_file);

    auto* c_dk = check->add_subcommand("davies-kang", "occupancy-fraction lower bound");
    c_dk->add_option("--graph", graph_path)->required();
    c_dk->add_option("--lambda", lambda_text);

    auto* sweep = app.add_subcommand("sweep", "grid / randomized inequality sweeps");
    sweep->require_subcommand(1);

    auto* s_key = sweep->add_subcommand("lemma-key", "key inequality and its proof steps");
    s_key->add_option("--delta-max", delta_max);
    s_key->add_option("--points", points);
    s_key->add_option("--seed", seed);

    auto* s_chain = sweep->add_subcommand("chain", "symmetric chain inequalities");
    s_chain->add_option("--d-max", d_max);
    s_chain->add_option("--grid", grid);

    auto* s_dual = sweep->add_subcommand("dual-set", "dual-set membership and consistency");
    s_dual->add_option("--delta-max", delta_max)->default_val(5);
    s_dual->add_option("--samples", samples);
    s_dual->add_option("--seed", seed);

    auto* s_basic = sweep->add_subcommand("basic-ineq", "two-colour kernel power inequality");
    s_basic->add_option("--d-max", d_max)->default_val(6);
    s_basic->add_option("--grid", grid)->default_val(40);

    auto* s_neg = sweep->add_subcommand("neg-fugacity", "negative-activity probe");
    s_neg->add_option("--delta", delta)->required();
    s_neg->add_option("--ds", ds_text, "comma-separated degrees, delta of them")->required();
    s_neg->add_option("--step", step)->check(CLI::PositiveNumber);

    auto* explore = app.add_subcommand("explore", "randomized counterexample hunt");
    explore->add_option("--trials", trials);
    explore->add_option("--seed", seed);
    explore->add_option("--nmax", n_max);
    explore->add_option("--qmax", q_max);

    // let --format / --tolerance appear after the subcommand too
    auto all = [](CLI::App*) { return true; };
    for (auto* s1 : app.get_subcommands(all)) {
        s1->fallthrough();
        for (auto* s2 : s1->get_subcommands(all)) s2->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    ReportFormat fmt = format == "tsv" ? ReportFormat::tsv : ReportFormat::json;
    ReportStream stream(fmt);

    try {
        if (*eval_cmd) {
            SimpleGraph g = parse_graph_file(graph_path);
            std::vector<Rational> acts;
            if (!lambda_file.empty()) {
                acts = parse_activity_file(lambda_file);
                if (int(acts.size()) != g.vertex_count())
                    throw InvalidParameter("activity count does not match vertex count");
            } else {
                acts.assign(std::size_t(g.vertex_count()), rational_from_decimal(lambda_text));
            }
            for (const Rational& a : acts)
                if (a < 0) throw InvalidParameter("activities must be nonnegative");
            Rational z = z_recurrence<Rational>(g, std::span<const Rational>(acts));
            VerificationReport r;
            r.check = "eval";
            r.lhs_log = std::log(to_double(z));
            r.rhs_log = 0.0;
            r.slack = r.lhs_log;
            r.pass = true;
            r.witness = "z=" + rational_to_string(z);
            r.flags = {"exact"};
            stream.add(r);
        } else if (*spectra_cmd) {
            WeightedModel m = parse_model_file(model_path);
            AfmClassification c = classify_antiferromagnetic(m);
            VerificationReport r;
            r.check = "spectra";
            r.lhs_log = c.spectrum.eigenvalues.front();
            r.rhs_log = c.spectrum.eigenvalues.back();
            r.slack = 0.0;
            r.pass = true;
            std::string wit = "eig=";
            for (std::size_t i = 0; i < c.spectrum.eigenvalues.size(); ++i) {
                if (i) wit += ",";
                wit += format_double(c.spectrum.eigenvalues[i]);
            }
            wit += ";afm=";
            wit += c.antiferromagnetic ? "true" : "false";
            wit += ";zero_tol=" + format_double(c.spectrum.zero_tolerance);
            r.witness = wit;
            if (c.spectrum.has_near_zero()) r.flags.push_back("near-zero-eigenvalue");
            stream.add(r);
        } else if (*c_main) {
            SimpleGraph g = parse_graph_file(graph_path);
            std::vector<double> acts = broadcast_or_file(g.vertex_count(), lambda_text, lambda_file);
            stream.add(check_thm_main(g, acts, tolerance));
        } else if (*c_2spin) {
            SimpleGraph g = parse_graph_file(graph_path);
            stream.add(check_thm_2spin(g, scalar(lambda_text), scalar(alpha_text), tolerance));
        } else if (*c_semi) {
            SimpleGraph g = parse_graph_file(graph_path);
            std::vector<double> lam = broadcast_or_file(g.vertex_count(), lambda_text, lambda_file);
            std::vector<double> mu = broadcast_or_file(g.vertex_count(), mu_text, mu_file);
            stream.add(check_thm_semiproper(g, lam, mu, tolerance));
        } else if (*c_deg2) {
            WeightedModel m = parse_model_file(model_path);
            WalkKind kind = kind_text == "cycle" ? WalkKind::cycle : WalkKind::path_edges;
            stream.add(check_deg2_conjecture(kind, length, m, tolerance));
        } else if (*c_weak || *c_bij) {
            SimpleGraph g = parse_graph_file(graph_path);
            ActivityMatrix<Rational> acts;
            if (!acts_file.empty()) {
                acts = parse_activity_matrix_file(acts_file);
                if (acts.n != g.vertex_count())
                    throw InvalidParameter("activity matrix does not match vertex count");
            } else {
                acts = ActivityMatrix<Rational>::uniform(q, g.vertex_count(),
                                                         rational_from_decimal(lambda_text));
            }
            if (*c_bij) {
                stream.add(check_bijection(g, acts));
            } else {
                ActivityMatrix<double> d;
                d.q = acts.q;
                d.n = acts.n;
                d.v.resize(acts.v.size());
                for (std::size_t i = 0; i < acts.v.size(); ++i) d.v[i] = to_double(acts.v[i]);
                stream.add(check_weak_semiproper(g, d, tolerance));
            }
        } else if (*c_dk) {
            SimpleGraph g = parse_graph_file(graph_path);
            stream.add(check_davies_kang(g, scalar(lambda_text), tolerance));
        } else if (*s_key) {
            stream.add(sweep_lemma_key(delta_max, points, seed, tolerance));
        } else if (*s_chain) {
            stream.add(sweep_chain(d_max, grid, tol_opt->count() ? tolerance : 1e-10));
        } else if (*s_dual) {
            stream.add(sweep_dual_set(delta_max, samples, seed, tolerance));
        } else if (*s_basic) {
            stream.add(sweep_basic_ineq(d_max, grid, tol_opt->count() ? tolerance : 1e-12));
        } else if (*s_neg) {
            std::vector<int> ds = parse_int_list(ds_text);
            stream.add(sweep_negative_fugacity(delta, ds, step));
        } else if (*explore) {
            ExplorerConfig cfg;
            cfg.trials = trials;
            cfg.seed = seed;
            cfg.n_max = n_max;
            cfg.q_max = q_max;
            stream.add(exploration_reports(explore_conjecture(cfg)));
        }
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }

    stream.finish();
    std::fwrite(stream.text().data(), 1, stream.text().size(), stdout);
    return stream.ok() ? 0 : 1;
}
