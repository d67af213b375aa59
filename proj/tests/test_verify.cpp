#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "afmlab/rng.hpp"
#include "afmlab/verify.hpp"

using namespace afmlab;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

SimpleGraph random_graph(SplitMix64& rng, int n_max) {
    int n = rng.int_in(2, n_max);
    double p = rng.in(0.15, 0.85);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) edges.emplace_back(u, v);
    return SimpleGraph::from_edge_list(n, edges);
}

bool has_flag(const VerificationReport& r, const std::string& f) {
    return std::find(r.flags.begin(), r.flags.end(), f) != r.flags.end();
}

} // namespace

TEST_CASE("report assembly handles infinities, NaN, and tolerances") {
    VerificationReport ok = make_report("x", 1.0, 0.5, "w");
    CHECK(ok.slack == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(ok.pass);

    VerificationReport tight = make_report("x", -2e-9, 0.0, "w");
    CHECK_FALSE(tight.pass); // below the default 1e-9 tolerance
    VerificationReport loose = make_report("x", -2e-9, 0.0, "w", {}, 1e-8);
    CHECK(loose.pass);

    VerificationReport vac = make_report("x", -kInf, -kInf, "w");
    CHECK(vac.slack == 0.0);
    CHECK(vac.pass);
    CHECK(has_flag(vac, "both-degenerate"));

    VerificationReport bad = make_report("x", std::nan(""), 0.0, "w");
    CHECK_FALSE(bad.pass);
    CHECK(has_flag(bad, "nan"));

    VerificationReport sunk = make_report("x", -kInf, 0.0, "w");
    CHECK(sunk.slack == -kInf);
    CHECK_FALSE(sunk.pass);

    VerificationReport free_ = make_report("x", 0.0, -kInf, "w");
    CHECK(free_.slack == kInf);
    CHECK(free_.pass);
}

TEST_CASE("main bound on a path, frozen slack") {
    SimpleGraph p3 = SimpleGraph::from_edge_list(3, {{0, 1}, {1, 2}});
    std::vector<double> ones(3, 1.0);
    VerificationReport r = check_thm_main(p3, ones);
    CHECK(r.check == "thm-main");
    CHECK(r.pass);
    // log 5 - log 3 - log(4)/3
    CHECK(r.slack == doctest::Approx(0.048727503392693938).epsilon(1e-12));
    CHECK(r.witness.find("g=n3:0-1,1-2") != std::string::npos);
}

TEST_CASE("main bound holds on random instances") {
    SplitMix64 rng(909);
    for (int t = 0; t < 300; ++t) {
        SimpleGraph g = random_graph(rng, 10);
        std::vector<double> acts(std::size_t(g.vertex_count()));
        for (double& a : acts) a = rng.unit() < 0.1 ? 0.0 : rng.in(0.0, 10.0);
        VerificationReport r = check_thm_main(g, acts);
        CHECK(r.pass);
        CHECK(r.slack >= -kSlackTolerance);
    }
}

TEST_CASE("equality cases are classified per component") {
    std::vector<double> ones4(4, 1.0);
    EqualityClassification k4 =
        classify_equality(SimpleGraph::named(NamedKind::clique, 4), ones4);
    REQUIRE(k4.labels.size() == 1);
    CHECK(k4.labels[0] == ComponentLabel::constant_clique);
    CHECK_FALSE(k4.any_strict);
    CHECK(std::fabs(k4.slack) <= 1e-12);
    CHECK(k4.consistent);

    SimpleGraph p3 = SimpleGraph::from_edge_list(3, {{0, 1}, {1, 2}});
    std::vector<double> ones3(3, 1.0);
    EqualityClassification path = classify_equality(p3, ones3);
    CHECK(path.labels[0] == ComponentLabel::strict);
    CHECK(path.any_strict);
    CHECK(path.slack > 1e-10);
    CHECK(path.consistent);

    std::vector<double> zeros(3, 0.0);
    EqualityClassification zero = classify_equality(p3, zeros);
    CHECK(zero.labels[0] == ComponentLabel::zero);
    CHECK_FALSE(zero.any_strict);
    CHECK(zero.slack == 0.0);
    CHECK(zero.consistent);

    // two triangles at different constant levels: still an equality case
    SimpleGraph two_tri = SimpleGraph::from_edge_list(
        6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    std::vector<double> two_levels = {2, 2, 2, 0.5, 0.5, 0.5};
    EqualityClassification tt = classify_equality(two_tri, two_levels);
    REQUIRE(tt.labels.size() == 2);
    CHECK(tt.labels[0] == ComponentLabel::constant_clique);
    CHECK(tt.labels[1] == ComponentLabel::constant_clique);
    CHECK(std::fabs(tt.slack) <= 1e-10);
    CHECK(tt.consistent);

    // triangle plus a path: the path makes it strict
    SimpleGraph mixed = SimpleGraph::from_edge_list(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {4, 5}});
    std::vector<double> ones6(6, 1.0);
    EqualityClassification mx = classify_equality(mixed, ones6);
    CHECK(mx.labels[0] == ComponentLabel::constant_clique);
    CHECK(mx.labels[1] == ComponentLabel::strict);
    CHECK(mx.any_strict);
    CHECK(mx.slack > 1e-10);
    CHECK(mx.consistent);

    std::vector<double> short_acts(2, 1.0);
    CHECK_THROWS_AS(classify_equality(p3, short_acts), InvalidParameter);
}

TEST_CASE("degree-weighted two-spin bound") {
    SimpleGraph p3 = SimpleGraph::from_edge_list(3, {{0, 1}, {1, 2}});
    // alpha = 0 kills every activity on a graph with no isolated vertices
    VerificationReport r0 = check_thm_2spin(p3, 1.0, 0.0);
    CHECK(r0.check == "thm-2spin");
    CHECK(r0.pass);
    CHECK(r0.slack == 0.0);

    // alpha = 1 on a clique: the constant equality case
    VerificationReport rk = check_thm_2spin(SimpleGraph::named(NamedKind::clique, 4), 2.0, 1.0);
    CHECK(rk.pass);
    CHECK(std::fabs(rk.slack) <= 1e-12);

    CHECK_THROWS_AS(check_thm_2spin(p3, -1.0, 0.5), InvalidParameter);
    CHECK_THROWS_AS(check_thm_2spin(p3, 1.0, -0.5), InvalidParameter);

    SplitMix64 rng(1010);
    for (int t = 0; t < 100; ++t) {
        SimpleGraph g = random_graph(rng, 9);
        VerificationReport r = check_thm_2spin(g, rng.in(0.0, 5.0), rng.in(0.0, 2.0));
        CHECK(r.pass);
    }
}

TEST_CASE("two-colour bound on a path, frozen slack") {
    SimpleGraph p3 = SimpleGraph::from_edge_list(3, {{0, 1}, {1, 2}});
    std::vector<double> ones(3, 1.0);
    auto reports = check_thm_semiproper(p3, ones, ones);
    REQUIRE(reports.size() == 1); // max degree 2: no matching branch
    CHECK(reports[0].check == "thm-semiproper");
    CHECK(reports[0].pass);
    // log 17 - log 7 - log(13)/3
    CHECK(reports[0].slack == doctest::Approx(0.032320075847057428).epsilon(1e-12));
}

TEST_CASE("two-colour bound on matchings adds the degree-one branch") {
    SimpleGraph k2 = SimpleGraph::named(NamedKind::clique, 2);
    std::vector<double> lam = {0.7, 0.7}, mu = {1.3, 1.3};
    auto reports = check_thm_semiproper(k2, lam, mu);
    REQUIRE(reports.size() == 2);
    CHECK(reports[1].check == "thm-semiproper-deg1");
    CHECK(reports[1].pass);
    // equal endpoint activities: the branch is tight
    CHECK(std::fabs(reports[1].slack) <= 1e-12);
    CHECK(reports[1].witness.find(";edge=0-1") != std::string::npos);

    // two disjoint edges, distinct activities: branch takes the worse edge
    SimpleGraph m2 = SimpleGraph::from_edge_list(4, {{0, 1}, {2, 3}});
    std::vector<double> l4 = {0.5, 2.0, 1.0, 1.0}, m4 = {1.5, 0.2, 1.0, 1.0};
    auto rm = check_thm_semiproper(m2, l4, m4);
    REQUIRE(rm.size() == 2);
    CHECK(rm[0].pass);
    CHECK(rm[1].pass);

    SplitMix64 rng(1111);
    for (int t = 0; t < 100; ++t) {
        SimpleGraph g = random_graph(rng, 8);
        std::vector<double> l(std::size_t(g.vertex_count())), m(std::size_t(g.vertex_count()));
        for (auto& x : l) x = rng.in(0.0, 5.0);
        for (auto& x : m) x = rng.in(0.0, 5.0);
        for (const auto& r : check_thm_semiproper(g, l, m)) CHECK(r.pass);
    }
}

TEST_CASE("key lemma: frozen value, equality cases, validation") {
    std::vector<int> d1 = {1};
    std::vector<double> l1 = {1.0};
    auto reports = check_lemma_key(1, d1, 0.0, l1);
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].check == "lemma-key-main");
    CHECK(reports[1].check == "lemma-key-component");
    CHECK(reports[2].check == "lemma-key-amgm");
    // main: log 2 - log(3)/2
    CHECK(reports[0].slack ==
          doctest::Approx(std::log(2.0) - 0.5 * std::log(3.0)).epsilon(1e-13));
    for (const auto& r : reports) CHECK(r.pass);

    // all degrees at the top and all activities equal: every step is tight
    for (int delta = 1; delta <= 3; ++delta)
        for (double l : {0.5, 1.0, 5.0}) {
            std::vector<int> ds(std::size_t(delta), delta);
            std::vector<double> lam(std::size_t(delta), l);
            auto eq = check_lemma_key(delta, ds, l, lam);
            for (const auto& r : eq) {
                CHECK(r.pass);
                CHECK(std::fabs(r.slack) <= 1e-10);
            }
        }

    CHECK_THROWS_AS(check_lemma_key(0, {}, 1.0, {}), InvalidParameter);
    std::vector<int> wrong_size = {1};
    std::vector<double> l2 = {1.0, 1.0};
    CHECK_THROWS_AS(check_lemma_key(2, wrong_size, 1.0, l2), InvalidParameter);
    std::vector<int> bad_deg = {0, 1};
    CHECK_THROWS_AS(check_lemma_key(2, bad_deg, 1.0, l2), InvalidParameter);
    std::vector<int> high_deg = {3, 1};
    CHECK_THROWS_AS(check_lemma_key(2, high_deg, 1.0, l2), InvalidParameter);
    std::vector<int> d2 = {1, 2};
    CHECK_THROWS_AS(check_lemma_key(2, d2, -1.0, l2), InvalidParameter);
    std::vector<double> neg = {1.0, -1.0};
    CHECK_THROWS_AS(check_lemma_key(2, d2, 1.0, neg), InvalidParameter);

    SplitMix64 rng(1212);
    for (int t = 0; t < 1000; ++t) {
        int delta = rng.int_in(1, 6);
        std::vector<int> ds(static_cast<std::size_t>(delta));
        std::vector<double> lam(static_cast<std::size_t>(delta));
        for (int i = 0; i < delta; ++i) {
            ds[std::size_t(i)] = rng.int_in(1, delta);
            lam[std::size_t(i)] = rng.unit() < 0.1 ? 0.0 : rng.in(0.0, 10.0);
        }
        double l0 = rng.unit() < 0.1 ? 0.0 : rng.in(0.0, 10.0);
        for (const auto& r : check_lemma_key(delta, ds, l0, lam)) CHECK(r.pass);
    }
}

TEST_CASE("degree-two conjecture checks") {
    WeightedModel k3 = WeightedModel::from_flat(3, {0, 1, 1, 1, 0, 1, 1, 1, 0});
    VerificationReport c5 = check_deg2_conjecture(WalkKind::cycle, 5, k3);
    CHECK(c5.check == "deg2");
    CHECK(c5.pass);
    CHECK(c5.lhs_log == doctest::Approx(std::log(30.0)).epsilon(1e-13));
    CHECK(c5.rhs_log == doctest::Approx((5.0 / 3.0) * std::log(6.0)).epsilon(1e-13));
    CHECK(c5.witness.find("kind=cycle;length=5") != std::string::npos);

    // single edge into the pair model: bound is exactly attained
    WeightedModel k2 = WeightedModel::from_flat(2, {0, 1, 1, 0});
    VerificationReport p1 = check_deg2_conjecture(WalkKind::path_edges, 1, k2);
    CHECK(p1.pass);
    CHECK(p1.slack == 0.0);

    // longer path into the pair model: the middle vertex wants a triangle,
    // which the pair model cannot host — the bound degenerates
    VerificationReport p2 = check_deg2_conjecture(WalkKind::path_edges, 2, k2);
    CHECK(p2.pass);
    CHECK(has_flag(p2, "degenerate-bound"));
    CHECK(p2.slack == kInf);

    // the identity model is ferromagnetic: two positive eigenvalues
    WeightedModel ident = WeightedModel::from_flat(2, {1, 0, 0, 1});
    CHECK_THROWS_AS(check_deg2_conjecture(WalkKind::cycle, 4, ident), NotAntiferromagnetic);

    for (int len = 3; len <= 12; ++len)
        CHECK(check_deg2_conjecture(WalkKind::cycle, len, k3).pass);
    for (int len = 1; len <= 12; ++len)
        CHECK(check_deg2_conjecture(WalkKind::path_edges, len, k3).pass);
}

TEST_CASE("weak colouring bound and its conjectured strengthening") {
    SimpleGraph p3 = SimpleGraph::from_edge_list(3, {{0, 1}, {1, 2}});
    ActivityMatrix<double> acts = ActivityMatrix<double>::uniform(2, 3, 1.0);
    auto reports = check_weak_semiproper(p3, acts);
    REQUIRE(reports.size() == 2);

    CHECK(reports[0].check == "weak-q");
    CHECK(reports[0].asserted);
    CHECK(reports[0].pass);
    CHECK(reports[0].lhs_log == doctest::Approx(std::log(17.0)).epsilon(1e-13));
    CHECK(reports[0].rhs_log == doctest::Approx(2.6531114377102374).epsilon(1e-12));

    CHECK(reports[1].check == "weak-q-conjectured");
    CHECK_FALSE(reports[1].asserted);
    CHECK(has_flag(reports[1], "informational"));
    CHECK(has_flag(reports[1], "conjecture"));
    CHECK(reports[1].rhs_log == doctest::Approx(2.8008932682091587).epsilon(1e-12));
    // the conjectured bound is the sharper one
    CHECK(reports[1].rhs_log > reports[0].rhs_log);
    CHECK(reports[1].lhs_log > reports[1].rhs_log);

    SimpleGraph wide = SimpleGraph::named(NamedKind::empty, 33);
    ActivityMatrix<double> wacts = ActivityMatrix<double>::uniform(2, 33, 1.0);
    CHECK_THROWS_AS(check_weak_semiproper(wide, wacts), TooLarge);

    ActivityMatrix<double> neg = ActivityMatrix<double>::uniform(2, 3, 1.0);
    neg.at(1, 1) = -0.5;
    CHECK_THROWS_AS(check_weak_semiproper(p3, neg), InvalidParameter);

    SplitMix64 rng(1313);
    for (int t = 0; t < 40; ++t) {
        SimpleGraph g = random_graph(rng, 6);
        int q = rng.int_in(1, 3);
        ActivityMatrix<double> a = ActivityMatrix<double>::uniform(q, g.vertex_count(), 0.0);
        for (auto& x : a.v) x = rng.in(0.0, 3.0);
        auto rs = check_weak_semiproper(g, a);
        CHECK(rs[0].pass);
        // conjectured bound has no failures on record either
        CHECK(rs[1].pass);
    }
}

TEST_CASE("the two colouring-count routes agree exactly") {
    SplitMix64 rng(1414);
    for (int t = 0; t < 50; ++t) {
        SimpleGraph g = random_graph(rng, 7);
        int q = rng.int_in(1, 4);
        ActivityMatrix<Rational> acts =
            ActivityMatrix<Rational>::uniform(q, g.vertex_count(), Rational(0));
        for (auto& x : acts.v) x = Rational(int(rng.below(9)), int(rng.below(6)) + 1);
        VerificationReport r = check_bijection(g, acts);
        CHECK(r.check == "bijection");
        CHECK(r.pass);
        CHECK(r.slack == 0.0);
        CHECK(has_flag(r, "exact"));
        CHECK(r.witness.find(";value=") != std::string::npos);
    }
}

TEST_CASE("occupancy-fraction bound") {
    // triangle at unit fugacity: both sides are exactly 1/4
    VerificationReport k3 = check_davies_kang(SimpleGraph::named(NamedKind::clique, 3), 1.0);
    CHECK(k3.check == "davies-kang");
    CHECK(k3.asserted);
    CHECK(k3.pass);
    CHECK(k3.lhs_log == 0.25);
    CHECK(k3.rhs_log == 0.25);
    CHECK(has_flag(k3, "linear-scale"));

    // irregular graphs are reported, not asserted: the bound is open there
    SimpleGraph p3 = SimpleGraph::from_edge_list(3, {{0, 1}, {1, 2}});
    VerificationReport ir = check_davies_kang(p3, 1.0);
    CHECK_FALSE(ir.asserted);
    CHECK(has_flag(ir, "reported-only"));
    CHECK(has_flag(ir, "irregular"));

    CHECK_THROWS_AS(check_davies_kang(p3, -1.0), InvalidParameter);
    CHECK_THROWS_AS(check_davies_kang(SimpleGraph::named(NamedKind::empty, 0), 1.0),
                    InvalidParameter);

    SimpleGraph c5 = SimpleGraph::named(NamedKind::cycle, 5);
    for (double lam : {0.1, 0.5, 1.0, 2.0, 10.0}) {
        VerificationReport r = check_davies_kang(c5, lam);
        CHECK(r.asserted);
        CHECK(r.pass);
    }
}

TEST_CASE("key-lemma sweep returns four aggregated reports") {
    auto reports = sweep_lemma_key(3, 2000, 1);
    REQUIRE(reports.size() == 4);
    CHECK(reports[0].check == "lemma-key-main");
    CHECK(reports[1].check == "lemma-key-component");
    CHECK(reports[2].check == "lemma-key-amgm");
    CHECK(reports[3].check == "lemma-key-equality");
    for (const auto& r : reports) CHECK(r.pass);
    CHECK(has_flag(reports[3], "equality-case"));
    CHECK(reports[3].slack >= -1e-10);
    CHECK(reports[3].slack <= 0.0);

    CHECK_THROWS_AS(sweep_lemma_key(0, 10, 1), InvalidParameter);
    CHECK_THROWS_AS(sweep_lemma_key(17, 10, 1), InvalidParameter);
}

TEST_CASE("chain sweep covers five inequalities and flags the level-1 cap") {
    auto reports = sweep_chain(3, 40);
    REQUIRE(reports.size() == 5);
    CHECK(reports[0].check == "chain-growth");
    CHECK(reports[1].check == "chain-phi-monotone");
    CHECK(reports[2].check == "chain-floor");
    CHECK(reports[3].check == "chain-quadratic");
    CHECK(reports[4].check == "chain-level");
    for (const auto& r : reports) {
        CHECK(r.pass);
        CHECK(has_flag(r, "level-1-grid-capped-below-s=2"));
    }
    CHECK_THROWS_AS(sweep_chain(0, 40), InvalidParameter);
    CHECK_THROWS_AS(sweep_chain(3, 1), InvalidParameter);
}

TEST_CASE("dual-set sweep") {
    auto reports = sweep_dual_set(3, 10, 2);
    REQUIRE(reports.size() == 6);
    CHECK(reports[0].check == "dual-separate-margin");
    CHECK(reports[1].check == "dual-separate-phigap");
    CHECK(reports[2].check == "dual-tangent-margin");
    CHECK(reports[3].check == "dual-geometric-mean-margin");
    CHECK(reports[4].check == "dual-phi-psi-consistency");
    CHECK(reports[5].check == "dual-phi-upper-bound");
    for (const auto& r : reports) CHECK(r.pass);
    CHECK(has_flag(reports[4], "consistency-tolerance-1e-8"));

    CHECK_THROWS_AS(sweep_dual_set(1, 10, 2), InvalidParameter);
    CHECK_THROWS_AS(sweep_dual_set(3, 0, 2), InvalidParameter);
}

TEST_CASE("pairwise bound sweep with strictness report") {
    auto reports = sweep_basic_ineq(3, 20);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].check == "basic-ineq");
    CHECK(reports[0].pass);
    // the origin sits on the grid, so the minimum slack is exactly zero
    CHECK(reports[0].slack == 0.0);
    CHECK(reports[1].check == "basic-ineq-strict");
    CHECK(reports[1].pass);
    CHECK(reports[1].slack > 1e-12);
    CHECK(has_flag(reports[1], "strictness"));

    CHECK_THROWS_AS(sweep_basic_ineq(0, 20), InvalidParameter);
    CHECK_THROWS_AS(sweep_basic_ineq(3, 1), InvalidParameter);
}

TEST_CASE("negative-activity sweep is exploratory on both outcomes") {
    std::vector<int> reg = {2, 2};
    VerificationReport none = sweep_negative_fugacity(2, reg, 1e-3);
    CHECK(none.check == "neg-fugacity-probe");
    CHECK_FALSE(none.asserted);
    CHECK(none.pass);
    CHECK(has_flag(none, "exploratory"));
    CHECK(has_flag(none, "no-witness"));
    CHECK(none.witness.find("first_witness=none") != std::string::npos);
    // the expression is identically zero here, so the minimum is pure rounding
    CHECK(std::fabs(none.slack) < 1e-12);

    std::vector<int> mixed = {1, 2};
    VerificationReport found = sweep_negative_fugacity(2, mixed, 1e-4);
    CHECK_FALSE(found.asserted);
    CHECK(found.pass); // a found witness is a finding, not a failure
    CHECK(has_flag(found, "witness-found"));
    CHECK(found.witness.find("first_witness=-0.0013") != std::string::npos);
    CHECK(found.slack < -1e-3);
    CHECK(found.slack > -1e-2);
}

TEST_CASE("explorer is deterministic and self-reproducing") {
    ExplorerConfig cfg;
    cfg.trials = 100;
    cfg.seed = 42;
    cfg.n_max = 8;
    cfg.q_max = 3;

    ExplorationSummary a = explore_conjecture(cfg);
    ExplorationSummary b = explore_conjecture(cfg);

    CHECK(a.min_slack == b.min_slack);
    CHECK(a.near_tight == b.near_tight);
    CHECK(a.degenerate == b.degenerate);
    CHECK(a.afm_rejections == b.afm_rejections);
    CHECK(a.zero_row_exclusions == b.zero_row_exclusions);
    REQUIRE(a.worst.size() == b.worst.size());
    for (std::size_t i = 0; i < a.worst.size(); ++i) {
        CHECK(a.worst[i].trial_index == b.worst[i].trial_index);
        CHECK(a.worst[i].slack == b.worst[i].slack);
        CHECK(a.worst[i].n == b.worst[i].n);
        CHECK(a.worst[i].q == b.worst[i].q);
        CHECK(a.worst[i].edges == b.worst[i].edges);
        CHECK(a.worst[i].weights == b.worst[i].weights);
    }

    // deck is sorted ascending by slack, capped at ten
    CHECK(a.worst.size() <= 10);
    for (std::size_t i = 1; i < a.worst.size(); ++i)
        CHECK(a.worst[i - 1].slack <= a.worst[i].slack);

    // no counterexample: every recorded slack clears the tolerance line
    CHECK(a.min_slack >= -kSlackTolerance);

    // single-trial replay reproduces the worst record bit for bit
    REQUIRE(!a.worst.empty());
    ExplorationWitness replay = explore_single_trial(cfg.seed, a.worst[0].trial_index, cfg);
    CHECK(replay.slack == a.worst[0].slack);
    CHECK(replay.n == a.worst[0].n);
    CHECK(replay.q == a.worst[0].q);
    CHECK(replay.edges == a.worst[0].edges);
    CHECK(replay.weights == a.worst[0].weights);

    // worker count must not leak into results
    setenv("AFMLAB_THREADS", "3", 1);
    ExplorationSummary c = explore_conjecture(cfg);
    unsetenv("AFMLAB_THREADS");
    CHECK(c.min_slack == a.min_slack);
    CHECK(c.near_tight == a.near_tight);
    REQUIRE(c.worst.size() == a.worst.size());
    for (std::size_t i = 0; i < c.worst.size(); ++i) {
        CHECK(c.worst[i].trial_index == a.worst[i].trial_index);
        CHECK(c.worst[i].slack == a.worst[i].slack);
    }
}

TEST_CASE("explorer validates its configuration") {
    ExplorerConfig bad;
    bad.trials = 1;
    bad.n_max = 1;
    CHECK_THROWS_AS(explore_conjecture(bad), InvalidParameter);
    bad.n_max = 11;
    CHECK_THROWS_AS(explore_conjecture(bad), InvalidParameter);
    bad.n_max = 5;
    bad.q_max = 0;
    CHECK_THROWS_AS(explore_conjecture(bad), InvalidParameter);
    bad.q_max = 6;
    CHECK_THROWS_AS(explore_conjecture(bad), InvalidParameter);
}
