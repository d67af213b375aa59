#include "afmlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "afmlab/parallel.hpp"
#include "afmlab/rng.hpp"
#include "afmlab/spectral.hpp"

namespace afmlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_list(std::span<const double> xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += fmt(xs[i]);
    }
    return out;
}

std::string fmt_graph(const SimpleGraph& g) {
    std::string out = "n" + std::to_string(g.vertex_count()) + ":";
    auto edges = g.edge_list();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second);
    }
    return out;
}

std::string fmt_model(const WeightedModel& m) {
    std::string out = "q" + std::to_string(m.spin_count()) + ":";
    for (std::size_t i = 0; i < m.flat().size(); ++i) {
        if (i) out += ",";
        out += fmt(m.flat()[i]);
    }
    return out;
}

} // namespace

VerificationReport make_report(std::string check, double lhs_log, double rhs_log,
                               std::string witness, std::vector<std::string> flags,
                               double tolerance, bool asserted) {
    VerificationReport r;
    r.check = std::move(check);
    r.lhs_log = lhs_log;
    r.rhs_log = rhs_log;
    r.witness = std::move(witness);
    r.flags = std::move(flags);
    r.asserted = asserted;
    if (lhs_log == -kInf && rhs_log == -kInf) {
        r.slack = 0.0; // both sides vanished; the inequality holds vacuously
        r.flags.push_back("both-degenerate");
    } else {
        r.slack = lhs_log - rhs_log;
    }
    if (std::isnan(r.slack)) {
        r.pass = false;
        r.flags.push_back("nan");
    } else {
        r.pass = r.slack >= -tolerance;
    }
    return r;
}

VerificationReport check_thm_main(const SimpleGraph& g, std::span<const double> acts,
                                  double tolerance) {
    double rhs = clique_bound_log(g, acts); // validates sizes and signs
    double lhs = z_log(g, acts);
    return make_report("thm-main", lhs, rhs, "g=" + fmt_graph(g) + ";lam=" + fmt_list(acts), {},
                       tolerance);
}

EqualityClassification classify_equality(const SimpleGraph& g, std::span<const double> acts) {
    if (int(acts.size()) != g.vertex_count())
        throw InvalidParameter("expected one activity per vertex");
    EqualityClassification out;
    for (VertexMask comp : g.components()) {
        double lo = kInf, hi = 0.0;
        VertexMask rest = comp;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            lo = std::min(lo, acts[std::size_t(v)]);
            hi = std::max(hi, acts[std::size_t(v)]);
        }
        ComponentLabel label;
        if (hi <= 1e-12)
            label = ComponentLabel::zero;
        else if (hi - lo <= 1e-12 * hi && g.is_clique_set(comp))
            label = ComponentLabel::constant_clique;
        else
            label = ComponentLabel::strict;
        out.labels.push_back(label);
        out.any_strict = out.any_strict || label == ComponentLabel::strict;
    }
    out.slack = z_log(g, acts) - clique_bound_log(g, acts);
    out.consistent = (out.slack <= 1e-10) == !out.any_strict;
    return out;
}

VerificationReport check_thm_2spin(const SimpleGraph& g, double lambda, double alpha,
                                   double tolerance) {
    if (lambda < 0.0 || alpha < 0.0)
        throw InvalidParameter("two-spin check needs lambda >= 0 and alpha >= 0");
    std::vector<double> acts(std::size_t(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        acts[std::size_t(v)] = lambda * std::pow(alpha, double(g.degree(v)));
    double rhs = clique_bound_log(g, acts);
    double lhs = z_log(g, acts);
    return make_report("thm-2spin", lhs, rhs,
                       "g=" + fmt_graph(g) + ";lambda=" + fmt(lambda) + ";alpha=" + fmt(alpha), {},
                       tolerance);
}

std::vector<VerificationReport> check_thm_semiproper(const SimpleGraph& g,
                                                     std::span<const double> lam,
                                                     std::span<const double> mu,
                                                     double tolerance) {
    double rhs = clique_bound_z2_log(g, lam, mu); // validates
    double lhs = std::log(z2<double>(g, lam, mu));
    std::string base = "g=" + fmt_graph(g) + ";lam=" + fmt_list(lam) + ";mu=" + fmt_list(mu);
    std::vector<VerificationReport> out;
    out.push_back(make_report("thm-semiproper", lhs, rhs, base, {}, tolerance));

    if (g.max_degree() == 1 && g.edge_count() > 0) {
        // matching components: the degree-one branch is the two-vertex case,
        //   Z2_{K_2} >= A_2(lam_u, mu_u)^(1/2) A_2(lam_v, mu_v)^(1/2)
        double worst = kInf;
        int wu = -1, wv = -1;
        for (auto [u, v] : g.edge_list()) {
            double lu = lam[std::size_t(u)], mu_u = mu[std::size_t(u)];
            double lv = lam[std::size_t(v)], mv = mu[std::size_t(v)];
            double z = 1.0 + lu + lv + mu_u + mv + lu * mv + mu_u * lv;
            double s = std::log(z) - 0.5 * std::log(z2_clique(2, lu, mu_u)) -
                       0.5 * std::log(z2_clique(2, lv, mv));
            if (s < worst) {
                worst = s;
                wu = u;
                wv = v;
            }
        }
        out.push_back(make_report("thm-semiproper-deg1", worst, 0.0,
                                  base + ";edge=" + std::to_string(wu) + "-" + std::to_string(wv),
                                  {}, tolerance));
    }
    return out;
}

std::vector<VerificationReport> check_lemma_key(int delta, std::span<const int> ds,
                                                double lambda0, std::span<const double> lambdas,
                                                double tolerance) {
    if (delta < 1) throw InvalidParameter("key lemma needs delta >= 1");
    if (ds.size() != std::size_t(delta) || lambdas.size() != std::size_t(delta))
        throw InvalidParameter("key lemma needs exactly delta degrees and activities");
    if (lambda0 < 0.0) throw InvalidParameter("activities must be nonnegative");
    for (int d : ds)
        if (d < 1 || d > delta) throw InvalidParameter("degrees must lie in [1, delta]");
    for (double l : lambdas)
        if (l < 0.0) throw InvalidParameter("activities must be nonnegative");

    double logA = 0.0, logB = 0.0;
    for (int i = 0; i < delta; ++i) {
        logA += std::log1p(double(ds[std::size_t(i)]) * lambdas[std::size_t(i)]) /
                double(ds[std::size_t(i)]);
        logB += std::log1p(double(ds[std::size_t(i)] + 1) * lambdas[std::size_t(i)]) /
                double(ds[std::size_t(i)] + 1);
    }

    std::string wit = "delta=" + std::to_string(delta) + ";ds=";
    for (int i = 0; i < delta; ++i)
        wit += (i ? "," : "") + std::to_string(ds[std::size_t(i)]);
    wit += ";lam0=" + fmt(lambda0) + ";lam=" + fmt_list(lambdas);

    std::vector<VerificationReport> out;

    double main_lhs = std::log(std::exp(logA) + lambda0);
    double main_rhs = std::log1p(double(delta + 1) * lambda0) / double(delta + 1) + logB;
    out.push_back(make_report("lemma-key-main", main_lhs, main_rhs, wit, {}, tolerance));

    // per-degree step: (delta+1)(1 + d_i l_i)^(delta/d_i) >= 1 + delta B_i^(delta+1)
    double comp_lhs = kInf, comp_rhs = 0.0;
    int comp_arg = 0;
    for (int i = 0; i < delta; ++i) {
        int d = ds[std::size_t(i)];
        double l = lambdas[std::size_t(i)];
        double lhs_i = std::log(double(delta + 1)) + double(delta) / double(d) * std::log1p(double(d) * l);
        double bpow = std::exp(double(delta + 1) / double(d + 1) * std::log1p(double(d + 1) * l));
        double rhs_i = std::log1p(double(delta) * bpow);
        if (lhs_i - rhs_i < comp_lhs - comp_rhs) {
            comp_lhs = lhs_i;
            comp_rhs = rhs_i;
            comp_arg = i;
        }
    }
    out.push_back(make_report("lemma-key-component", comp_lhs, comp_rhs,
                              wit + ";i=" + std::to_string(comp_arg), {}, tolerance));

    // AM-GM step: prod (1 + delta B_i^(delta+1))^(1/delta) >= 1 + delta B^((delta+1)/delta)
    double am_lhs = 0.0;
    for (int i = 0; i < delta; ++i) {
        int d = ds[std::size_t(i)];
        double l = lambdas[std::size_t(i)];
        double bpow = std::exp(double(delta + 1) / double(d + 1) * std::log1p(double(d + 1) * l));
        am_lhs += std::log1p(double(delta) * bpow) / double(delta);
    }
    double am_rhs = std::log1p(double(delta) * std::exp(double(delta + 1) / double(delta) * logB));
    out.push_back(make_report("lemma-key-amgm", am_lhs, am_rhs, wit, {}, tolerance));

    return out;
}

VerificationReport check_deg2_conjecture(WalkKind kind, int length, const WeightedModel& model,
                                         double tolerance) {
    if (!classify_antiferromagnetic(model).antiferromagnetic)
        throw NotAntiferromagnetic("model fails the one-positive-eigenvalue test");
    SimpleGraph g = kind == WalkKind::path_edges ? SimpleGraph::named(NamedKind::path_edges, length)
                                                 : SimpleGraph::named(NamedKind::cycle, length);
    double hom = walk_homomorphisms(kind, length, model);
    double lhs = hom > 0.0 ? std::log(hom) : -kInf;
    HomCliqueBound bound = hom_clique_bound_log(g, model);
    std::vector<std::string> flags;
    if (bound.degenerate) flags.push_back("degenerate-bound");
    std::string kindname = kind == WalkKind::path_edges ? "path" : "cycle";
    return make_report("deg2", lhs, bound.log_value,
                       "kind=" + kindname + ";length=" + std::to_string(length) + ";" +
                           fmt_model(model),
                       std::move(flags), tolerance);
}

std::vector<VerificationReport> check_weak_semiproper(const SimpleGraph& g,
                                                      const ActivityMatrix<double>& acts,
                                                      double tolerance) {
    const int n = g.vertex_count(), q = acts.q;
    if (acts.n != n) throw InvalidParameter("activity matrix does not match vertex count");
    if (std::int64_t(n) * q > kMaxVertices)
        throw TooLarge("q*n exceeds the 64-vertex product budget");
    for (const double& a : acts.v)
        if (a < 0.0) throw InvalidParameter("activities must be nonnegative");

    double lhs = std::log(zq<double>(g, acts));

    double weak = 0.0;
    for (int v = 0; v < n; ++v) {
        int dq = g.degree(v) + q;
        for (int i = 0; i < q; ++i) weak += std::log1p(double(dq) * acts.at(i, v)) / double(dq);
    }

    double conj = 0.0;
    for (int v = 0; v < n; ++v) {
        std::vector<double> col(static_cast<std::size_t>(q));
        for (int i = 0; i < q; ++i) col[std::size_t(i)] = acts.at(i, v);
        conj += std::log(falling_factorial_kernel<double>(g.degree(v) + 1, col)) /
                double(g.degree(v) + 1);
    }

    std::string wit = "g=" + fmt_graph(g) + ";q=" + std::to_string(q) + ";acts=" + fmt_list(acts.v);
    std::vector<VerificationReport> out;
    out.push_back(make_report("weak-q", lhs, weak, wit, {}, tolerance));
    out.push_back(make_report("weak-q-conjectured", lhs, conj, wit,
                              {"informational", "conjecture"}, tolerance, false));
    return out;
}

VerificationReport check_bijection(const SimpleGraph& g, const ActivityMatrix<Rational>& acts) {
    Rational direct = zq_bruteforce<Rational>(g, acts);
    SimpleGraph prod = g.cartesian_with_clique(acts.q);
    std::vector<Rational> stacked = stack_activities(g, acts);
    Rational via_product = z_recurrence<Rational>(prod, std::span<const Rational>(stacked));

    std::string wit = "g=" + fmt_graph(g) + ";q=" + std::to_string(acts.q) + ";acts=";
    for (std::size_t i = 0; i < acts.v.size(); ++i)
        wit += (i ? "," : "") + rational_to_string(acts.v[i]);
    wit += ";value=" + rational_to_string(direct);

    VerificationReport r;
    r.check = "bijection";
    r.lhs_log = std::log(to_double(direct));
    r.rhs_log = std::log(to_double(via_product));
    bool equal = direct == via_product;
    r.slack = equal ? 0.0 : -1.0; // exactness flag: 0 = identical rationals
    r.pass = equal;
    r.witness = std::move(wit);
    r.flags.push_back("exact");
    return r;
}

VerificationReport check_davies_kang(const SimpleGraph& g, double lambda, double tolerance) {
    if (lambda < 0.0) throw InvalidParameter("fugacity must be nonnegative");
    if (g.vertex_count() == 0) throw InvalidParameter("occupancy needs at least one vertex");
    std::vector<double> ones(std::size_t(g.vertex_count()), 1.0);
    double lhs = occupancy_fraction(g, lambda, ones);
    double rhs = 0.0;
    for (int v = 0; v < g.vertex_count(); ++v)
        rhs += lambda / (1.0 + double(g.degree(v) + 1) * lambda);
    rhs /= double(g.vertex_count());
    bool regular = g.is_regular();
    std::vector<std::string> flags = {"linear-scale"};
    if (!regular) {
        flags.push_back("reported-only");
        flags.push_back("irregular");
    }
    return make_report("davies-kang", lhs, rhs, "g=" + fmt_graph(g) + ";lambda=" + fmt(lambda),
                       std::move(flags), tolerance, regular);
}

// ---------------------------------------------------------------------------
// sweeps

namespace {

struct WorstCase {
    double slack = kInf;
    double lhs = 0.0, rhs = 0.0;
    std::string witness = "none";

    void offer(const VerificationReport& r) {
        if (r.slack < slack) {
            slack = r.slack;
            lhs = r.lhs_log;
            rhs = r.rhs_log;
            witness = r.witness;
        }
    }
    void offer(double s, double l, double h, std::string w) {
        if (s < slack) {
            slack = s;
            lhs = l;
            rhs = h;
            witness = std::move(w);
        }
    }
    void merge(const WorstCase& o) {
        if (o.slack < slack) *this = o;
    }
    VerificationReport to_report(const std::string& name, double tol,
                                 std::vector<std::string> flags = {}) const {
        return make_report(name, lhs, rhs, witness, std::move(flags), tol);
    }
};

} // namespace

std::vector<VerificationReport> sweep_lemma_key(int delta_max, std::uint64_t points,
                                                std::uint64_t seed, double tolerance) {
    if (delta_max < 1 || delta_max > 16) throw InvalidParameter("delta_max must be in [1, 16]");
    struct Agg {
        WorstCase main, comp, amgm;
        double worst_eq = 0.0; // max |main slack| over enforced equality configs
        std::string eq_witness = "none";
    };
    std::uint64_t per_delta = std::max<std::uint64_t>(1, points / std::uint64_t(delta_max));

    Agg agg = parallel_reduce(
        std::uint64_t(delta_max) * per_delta, Agg{},
        [&](std::uint64_t b, std::uint64_t e) {
            Agg local;
            for (std::uint64_t k = b; k < e; ++k) {
                int delta = int(k / per_delta) + 1;
                std::uint64_t j = k % per_delta;
                SplitMix64 rng(seed ^ (std::uint64_t(delta) << 32) ^ j);
                std::vector<int> ds(static_cast<std::size_t>(delta));
                std::vector<double> lam(static_cast<std::size_t>(delta));
                for (int i = 0; i < delta; ++i) {
                    ds[std::size_t(i)] = rng.int_in(1, delta);
                    lam[std::size_t(i)] = rng.unit() < 0.1 ? 0.0 : rng.in(0.0, 10.0);
                }
                double lam0 = rng.unit() < 0.1 ? 0.0 : rng.in(0.0, 10.0);
                auto reports = check_lemma_key(delta, ds, lam0, lam, tolerance);
                local.main.offer(reports[0]);
                local.comp.offer(reports[1]);
                local.amgm.offer(reports[2]);
            }
            return local;
        },
        [](Agg a, Agg b) {
            a.main.merge(b.main);
            a.comp.merge(b.comp);
            a.amgm.merge(b.amgm);
            if (b.worst_eq > a.worst_eq) {
                a.worst_eq = b.worst_eq;
                a.eq_witness = b.eq_witness;
            }
            return a;
        });

    // enforced equality configurations: d_i = delta, all activities equal
    for (int delta = 1; delta <= delta_max; ++delta) {
        std::vector<int> ds(std::size_t(delta), delta);
        for (double l : {0.5, 1.0, 5.0}) {
            std::vector<double> lam(std::size_t(delta), l);
            auto reports = check_lemma_key(delta, ds, l, lam, tolerance);
            double dev = std::fabs(reports[0].slack);
            if (dev > agg.worst_eq) {
                agg.worst_eq = dev;
                agg.eq_witness = reports[0].witness;
            }
        }
    }

    std::vector<VerificationReport> out;
    out.push_back(agg.main.to_report("lemma-key-main", tolerance));
    out.push_back(agg.comp.to_report("lemma-key-component", tolerance));
    out.push_back(agg.amgm.to_report("lemma-key-amgm", tolerance));
    out.push_back(make_report("lemma-key-equality", -agg.worst_eq, 0.0, agg.eq_witness,
                              {"equality-case"}, 1e-10));
    return out;
}

std::vector<VerificationReport> sweep_chain(int d_max, int grid_points, double tolerance) {
    if (d_max < 1 || grid_points < 2) throw InvalidParameter("chain sweep needs d_max >= 1 and grid >= 2");
    WorstCase growth, mono, floor_, quad, level;
    bool capped = false;
    for (int d = 1; d <= d_max; ++d) {
        // level 1 tops out below s = 2 (H_1 < 2), so cap its grid
        double s_hi = d == 1 ? 1.95 : 3.0;
        capped = capped || d == 1;
        for (int k = 1; k <= grid_points; ++k) {
            double s = 1.0 + (s_hi - 1.0) * double(k) / double(grid_points);
            SymmetricChainState st = symmetric_chain(d, s);
            std::string wit = "d=" + std::to_string(d) + ";s=" + fmt(s);
            growth.offer(s * st.x_d - st.x_d1, s * st.x_d, st.x_d1, wit);
            mono.offer(st.phi_d - st.phi_d1, st.phi_d, st.phi_d1, wit);
            floor_.offer(st.x_d - (s - 1.0), st.x_d, s - 1.0, wit);
            quad.offer(chain_Q(d, s, st.x_d), chain_Q(d, s, st.x_d), 0.0, wit);
            double lev = std::log(chain_H(d + 1, s * st.x_d)) - double(d + 1) * std::log(s);
            level.offer(lev, lev, 0.0, wit);
        }
    }
    std::vector<std::string> flags;
    if (capped) flags.push_back("level-1-grid-capped-below-s=2");
    std::vector<VerificationReport> out;
    out.push_back(growth.to_report("chain-growth", tolerance, flags));
    out.push_back(mono.to_report("chain-phi-monotone", tolerance, flags));
    out.push_back(floor_.to_report("chain-floor", tolerance, flags));
    out.push_back(quad.to_report("chain-quadratic", tolerance, flags));
    out.push_back(level.to_report("chain-level", tolerance, flags));
    return out;
}

std::vector<VerificationReport> sweep_dual_set(int delta_max, int samples, std::uint64_t seed,
                                               double tolerance) {
    if (delta_max < 2 || samples < 1)
        throw InvalidParameter("dual-set sweep needs delta_max >= 2 and samples >= 1");

    WorstCase sep_margin, sep_phigap, tangent_margin, geo_margin, phi_upper;
    double worst_consistency = 0.0;
    std::string cons_witness = "none";

    for (int delta = 2; delta <= delta_max; ++delta) {
        for (int d = 1; d <= delta; ++d) {
            for (int j = 0; j < samples; ++j) {
                SplitMix64 rng(seed ^ (std::uint64_t(delta) << 40) ^ (std::uint64_t(d) << 32) ^
                               std::uint64_t(j));
                double lam = rng.in(0.0, 10.0), mu = rng.in(0.0, 10.0);
                DualPoint p = separate_membership_point(delta, d, lam, mu);
                MembershipResult r = s_membership(p);
                std::string wit = "delta=" + std::to_string(delta) + ";d=" + std::to_string(d) +
                                  ";lam=" + fmt(lam) + ";mu=" + fmt(mu) + ";x=" + fmt(r.witness_x) +
                                  ";y=" + fmt(r.witness_y);
                sep_margin.offer(r.min_margin, r.min_margin, 0.0, wit);
                sep_phigap.offer(r.phi_gap, p.a0, p.a0 - r.phi_gap, wit);
            }
        }

        for (int j = 0; j < samples; ++j) {
            SplitMix64 rng(seed ^ 0x7A00000000000000ull ^ (std::uint64_t(delta) << 32) ^
                           std::uint64_t(j));
            double lam = rng.in(0.0, 10.0), mu = rng.in(0.0, 10.0);
            DualPoint p = tangent_plane_point(delta, lam, mu);
            MembershipResult r = s_membership(p);
            std::string wit = "delta=" + std::to_string(delta) + ";tangent;lam=" + fmt(lam) +
                              ";mu=" + fmt(mu);
            tangent_margin.offer(r.min_margin, r.min_margin, 0.0, wit);

            // log-convexity: coordinatewise geometric mean of two members
            double lam2 = rng.in(0.0, 10.0), mu2 = rng.in(0.0, 10.0);
            int d2 = 1 + int(rng.below(std::uint64_t(delta)));
            DualPoint p2 = separate_membership_point(delta, d2, lam2, mu2);
            DualPoint gm;
            gm.delta = delta;
            gm.a0 = std::sqrt(p.a0 * p2.a0);
            gm.a1 = std::sqrt(p.a1 * p2.a1);
            gm.a2 = std::sqrt(p.a2 * p2.a2);
            MembershipResult rg = s_membership(gm);
            geo_margin.offer(rg.min_margin, rg.min_margin, 0.0,
                             wit + ";paired-d=" + std::to_string(d2) + ";lam2=" + fmt(lam2) +
                                 ";mu2=" + fmt(mu2));
        }

        for (int k = 1; k <= 19; ++k) {
            double s = 0.05 * double(k);
            double root_s = std::sqrt(s);
            double phi = phi_delta(delta, root_s, root_s);
            double via_psi = psi_delta(delta, s) + 2.0 * root_s / double(delta);
            double dev = std::fabs(phi - via_psi);
            std::string wit = "delta=" + std::to_string(delta) + ";s=" + fmt(s);
            if (dev > worst_consistency) {
                worst_consistency = dev;
                cons_witness = wit;
            }
            // phi never exceeds (a1+a2)/delta + psi(a1 a2)
            phi_upper.offer(via_psi - phi, via_psi, phi, wit);
        }
    }

    std::vector<VerificationReport> out;
    out.push_back(sep_margin.to_report("dual-separate-margin", tolerance));
    out.push_back(sep_phigap.to_report("dual-separate-phigap", tolerance));
    out.push_back(tangent_margin.to_report("dual-tangent-margin", tolerance));
    out.push_back(geo_margin.to_report("dual-geometric-mean-margin", tolerance));
    out.push_back(make_report("dual-phi-psi-consistency", -worst_consistency, 0.0, cons_witness,
                              {"consistency-tolerance-1e-8"}, 1e-8));
    out.push_back(phi_upper.to_report("dual-phi-upper-bound", tolerance));
    return out;
}

std::vector<VerificationReport> sweep_basic_ineq(int d_max, int grid_points, double tolerance) {
    if (d_max < 1 || grid_points < 2)
        throw InvalidParameter("basic-inequality sweep needs d_max >= 1 and grid >= 2");
    WorstCase all, strict;
    for (int d = 1; d <= d_max; ++d)
        for (int i = 0; i <= grid_points; ++i)
            for (int j = 0; j <= grid_points; ++j) {
                double x = 10.0 * double(i) / double(grid_points);
                double y = 10.0 * double(j) / double(grid_points);
                double lhs = double(d + 1) * (std::log(z_clique(d, x)) + std::log(z_clique(d, y)));
                double rhs = 2.0 * double(d) * std::log(z2_clique(d + 1, x, y));
                std::string wit = "d=" + std::to_string(d) + ";x=" + fmt(x) + ";y=" + fmt(y);
                all.offer(rhs - lhs, rhs, lhs, wit);
                if (i || j) strict.offer(rhs - lhs, rhs, lhs, wit);
            }
    std::vector<VerificationReport> out;
    out.push_back(all.to_report("basic-ineq", tolerance));
    // away from the origin the gap must be genuinely positive
    VerificationReport st = strict.to_report("basic-ineq-strict", 0.0, {"strictness"});
    st.pass = st.slack > tolerance;
    out.push_back(st);
    return out;
}

VerificationReport sweep_negative_fugacity(int delta, std::span<const int> ds, double step) {
    std::optional<double> first = negative_fugacity_probe(delta, ds, step);
    int dmax = 0;
    for (int d : ds) dmax = std::max(dmax, d);
    double floor = std::max(-0.5, -1.0 / double(dmax + 1));
    double worst = kInf, arg = 0.0;
    for (int k = 1;; ++k) {
        double lambda = -step * double(k);
        if (lambda <= floor) break;
        double v = probe_expression(delta, ds, lambda);
        if (v < worst) {
            worst = v;
            arg = lambda;
        }
    }
    std::string wit = "delta=" + std::to_string(delta) + ";ds=";
    for (std::size_t i = 0; i < ds.size(); ++i)
        wit += (i ? "," : "") + std::to_string(ds[i]);
    wit += ";min_at=" + fmt(arg) +
           ";first_witness=" + (first ? fmt(*first) : std::string("none"));
    std::vector<std::string> flags = {"exploratory"};
    flags.push_back(first ? "witness-found" : "no-witness");
    VerificationReport r = make_report("neg-fugacity-probe", worst, 0.0, wit, std::move(flags),
                                       kSlackTolerance, false);
    r.pass = true; // exploratory: a found witness is a finding, not a failure
    return r;
}

// ---------------------------------------------------------------------------
// explorer

namespace {

WeightedModel sample_blowup(SplitMix64& rng, int q) {
    bool looped = q == 1 ? true : rng.unit() < 0.5;
    int blocks = q == 1 ? 1 : (looped ? rng.int_in(1, q) : rng.int_in(2, q));
    std::vector<int> size(std::size_t(blocks), 1);
    for (int extra = q - blocks; extra > 0; --extra) ++size[rng.below(std::uint64_t(blocks))];
    std::vector<int> block_of(static_cast<std::size_t>(q));
    int spin = 0;
    for (int b = 0; b < blocks; ++b)
        for (int c = 0; c < size[std::size_t(b)]; ++c) block_of[std::size_t(spin++)] = b;

    std::vector<double> w(std::size_t(q) * std::size_t(q), 0.0);
    for (int i = 0; i < q; ++i)
        for (int j = i; j < q; ++j) {
            bool support = block_of[std::size_t(i)] != block_of[std::size_t(j)] ||
                           (looped && block_of[std::size_t(i)] == 0);
            if (!support) continue;
            double v = rng.log_uniform(0.1, 10.0);
            w[std::size_t(i) * std::size_t(q) + std::size_t(j)] = v;
            w[std::size_t(j) * std::size_t(q) + std::size_t(i)] = v;
        }
    return WeightedModel::from_flat(q, std::move(w));
}

WeightedModel sample_rejection(SplitMix64& rng, int q) {
    std::vector<double> w(std::size_t(q) * std::size_t(q), 0.0);
    for (int i = 0; i < q; ++i)
        for (int j = i; j < q; ++j) {
            double v = i == j ? (rng.unit() < 1.0 / 3.0 ? rng.unit() : 0.0) : rng.unit();
            w[std::size_t(i) * std::size_t(q) + std::size_t(j)] = v;
            w[std::size_t(j) * std::size_t(q) + std::size_t(i)] = v;
        }
    return WeightedModel::from_flat(q, std::move(w));
}

struct TrialOutcome {
    ExplorationWitness witness;
    double lhs = 0.0, rhs = 0.0;
    bool degenerate = false;
    std::uint64_t afm_rejections = 0, zero_row_exclusions = 0;
};

TrialOutcome run_trial(std::uint64_t seed, std::uint64_t idx, const ExplorerConfig& cfg) {
    static constexpr double kProbs[3] = {0.2, 0.5, 0.8};
    SplitMix64 rng(seed ^ idx);
    TrialOutcome out;

    int n = rng.int_in(2, cfg.n_max);
    double p = kProbs[idx % 3];
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) edges.emplace_back(u, v);
    SimpleGraph g = SimpleGraph::from_edge_list(n, edges);
    int q = rng.int_in(1, cfg.q_max);

    WeightedModel model;
    for (int attempt = 0;; ++attempt) {
        if (attempt > 10000)
            throw InternalInconsistency("model sampler failed to produce an AFM instance");
        model = rng.unit() < 0.5 ? sample_blowup(rng, q) : sample_rejection(rng, q);
        if (model.has_zero_row()) {
            ++out.zero_row_exclusions;
            continue;
        }
        if (!classify_antiferromagnetic(model).antiferromagnetic) {
            ++out.afm_rejections;
            continue;
        }
        break;
    }

    double hom = hom_count(g, model);
    HomCliqueBound bound = hom_clique_bound_log(g, model);

    out.witness.seed = seed;
    out.witness.trial_index = idx;
    out.witness.n = n;
    out.witness.edges = std::move(edges);
    out.witness.q = q;
    out.witness.weights = model.flat();
    if (bound.degenerate) {
        out.degenerate = true;
        out.witness.slack = kInf; // nothing to compare against
        out.lhs = hom > 0.0 ? std::log(hom) : -kInf;
        out.rhs = -kInf;
    } else {
        out.lhs = hom > 0.0 ? std::log(hom) : -kInf;
        out.rhs = bound.log_value;
        out.witness.slack = out.lhs - out.rhs;
    }
    return out;
}

} // namespace

ExplorationSummary explore_conjecture(const ExplorerConfig& cfg) {
    if (cfg.n_max < 2 || cfg.n_max > 10)
        throw InvalidParameter("explorer needs 2 <= n_max <= 10");
    if (cfg.q_max < 1 || cfg.q_max > 5) throw InvalidParameter("explorer needs 1 <= q_max <= 5");

    struct Agg {
        double min_slack = kInf;
        std::vector<ExplorationWitness> worst;
        std::uint64_t near_tight = 0, degenerate = 0, afm_rej = 0, zero_rows = 0;
    };
    auto squeeze = [](std::vector<ExplorationWitness>& deck) {
        std::sort(deck.begin(), deck.end(), [](const auto& a, const auto& b) {
            return a.slack != b.slack ? a.slack < b.slack : a.trial_index < b.trial_index;
        });
        if (deck.size() > 10) deck.resize(10);
    };

    Agg agg = parallel_reduce(
        cfg.trials, Agg{},
        [&](std::uint64_t b, std::uint64_t e) {
            Agg local;
            for (std::uint64_t i = b; i < e; ++i) {
                TrialOutcome t = run_trial(cfg.seed, i, cfg);
                local.afm_rej += t.afm_rejections;
                local.zero_rows += t.zero_row_exclusions;
                if (t.degenerate) {
                    ++local.degenerate;
                    continue;
                }
                local.min_slack = std::min(local.min_slack, t.witness.slack);
                if (t.witness.slack < 1e-6) ++local.near_tight;
                local.worst.push_back(std::move(t.witness));
                squeeze(local.worst);
            }
            return local;
        },
        [&](Agg a, Agg b) {
            a.min_slack = std::min(a.min_slack, b.min_slack);
            a.near_tight += b.near_tight;
            a.degenerate += b.degenerate;
            a.afm_rej += b.afm_rej;
            a.zero_rows += b.zero_rows;
            for (auto& w : b.worst) a.worst.push_back(std::move(w));
            squeeze(a.worst);
            return a;
        });

    ExplorationSummary s;
    s.config = cfg;
    s.min_slack = agg.min_slack;
    s.worst = std::move(agg.worst);
    s.near_tight = agg.near_tight;
    s.degenerate = agg.degenerate;
    s.afm_rejections = agg.afm_rej;
    s.zero_row_exclusions = agg.zero_rows;
    return s;
}

ExplorationWitness explore_single_trial(std::uint64_t seed, std::uint64_t trial_index,
                                        const ExplorerConfig& cfg) {
    return run_trial(seed, trial_index, cfg).witness;
}

} // namespace afmlab
