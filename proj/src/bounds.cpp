#include "afmlab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "afmlab/partition.hpp"

namespace afmlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double surface(int delta, double x, double y) {
    return std::pow(z2_clique(delta + 1, x, y), 1.0 / double(delta + 1));
}

// golden-section maximum of a unimodal function on [lo, hi]
template <class F>
double golden_max(F&& f, double lo, double hi, int iters = 90) {
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - invphi * (b - a), d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iters && b - a > 0.0; ++i) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return fc >= fd ? c : d;
}

} // namespace

CliqueKernels clique_kernels(int d, double lambda, double mu) {
    if (d < 1) throw InvalidParameter("clique kernels need d >= 1");
    CliqueKernels k;
    k.d = d;
    k.lambda = lambda;
    k.mu = mu;
    k.A = z2_clique(d, lambda, mu);
    k.B_mu = z_clique(d, mu);
    k.B_lambda = z_clique(d, lambda);
    k.D = z2_clique(d + 1, lambda, mu);
    return k;
}

double clique_bound_log(const SimpleGraph& g, std::span<const double> acts) {
    if (int(acts.size()) != g.vertex_count())
        throw InvalidParameter("expected one activity per vertex");
    double total = 0.0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        double lam = acts[std::size_t(v)];
        if (lam < 0.0) throw InvalidParameter("clique bound needs nonnegative activities");
        int dp1 = g.degree(v) + 1;
        total += std::log1p(double(dp1) * lam) / double(dp1);
    }
    return total;
}

double clique_bound_z2_log(const SimpleGraph& g, std::span<const double> lam,
                           std::span<const double> mu) {
    if (int(lam.size()) != g.vertex_count() || int(mu.size()) != g.vertex_count())
        throw InvalidParameter("expected one activity pair per vertex");
    double total = 0.0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        double l = lam[std::size_t(v)], m = mu[std::size_t(v)];
        if (l < 0.0 || m < 0.0) throw InvalidParameter("clique bound needs nonnegative activities");
        int dp1 = g.degree(v) + 1;
        total += std::log(z2_clique(dp1, l, m)) / double(dp1);
    }
    return total;
}

HomCliqueBound hom_clique_bound_log(const SimpleGraph& g, const WeightedModel& model) {
    HomCliqueBound out;
    std::vector<double> cache(std::size_t(g.vertex_count()) + 1,
                              std::numeric_limits<double>::quiet_NaN());
    double total = 0.0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int dp1 = g.degree(v) + 1;
        double& c = cache[std::size_t(dp1)];
        if (std::isnan(c)) c = hom_complete_log(dp1, model);
        if (c == -kInf) {
            out.degenerate = true;
            out.log_value = -kInf;
            return out;
        }
        total += c / double(dp1);
    }
    out.log_value = total;
    return out;
}

double xi_delta(int delta, double s) {
    if (delta < 2) throw InvalidParameter("xi needs delta >= 2");
    if (!(s > 0.0 && s < 1.0)) throw InvalidParameter("xi needs s strictly inside (0, 1)");
    auto f = [&](double x) {
        return double(delta + 1) * s * int_power(x, 2 * delta) -
               double(delta) * int_power(x, delta + 1) - 1.0;
    };
    double lo = 1.0, hi = 2.0;
    int doublings = 0;
    while (f(hi) <= 0.0) {
        lo = hi;
        hi *= 2.0;
        if (++doublings > 70) throw NumericalFailure("root bracketing for xi ran away");
    }
    for (int i = 0; i < 300; ++i) {
        double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    double xi = lo + 0.5 * (hi - lo);
    // residual scale: at the root the two leading terms have this magnitude
    double scale = std::max(1.0, double(delta + 1) * s * int_power(xi, 2 * delta));
    if (std::fabs(f(xi)) > 1e-12 * scale)
        throw NumericalFailure("xi residual out of tolerance at s = " + std::to_string(s));
    return xi;
}

double psi_delta(int delta, double s) {
    double xi = xi_delta(delta, s);
    return xi - (2.0 / double(delta)) * s * int_power(xi, delta);
}

double phi_delta(int delta, double a1, double a2) {
    if (delta < 2) throw InvalidParameter("phi needs delta >= 2");
    if (!(a1 > 0.0) || !(a2 > 0.0))
        throw InvalidParameter("phi needs strictly positive slope coefficients");

    auto g = [&](double x, double y) { return surface(delta, x, y) - a1 * x - a2 * y; };

    // box edge: beyond this the plane dominates the surface by a factor 2
    double box = 1.0;
    int doublings = 0;
    while (a1 * box <= 2.0 * surface(delta, box, box) ||
           a2 * box <= 2.0 * surface(delta, box, box)) {
        box *= 2.0;
        if (++doublings > 70)
            throw DivergenceSuspected("search box for phi grew without bound");
    }

    // projected coordinate ascent from the origin; g is concave on the quadrant
    double x = 0.0, y = 0.0, best = g(0.0, 0.0);
    int quiet = 0;
    for (int iter = 0; iter < 200 && quiet < 2; ++iter) {
        x = golden_max([&](double xx) { return g(xx, y); }, 0.0, box);
        y = golden_max([&](double yy) { return g(x, yy); }, 0.0, box);
        double val = g(x, y);
        quiet = val - best <= 1e-14 * std::max(1.0, std::fabs(best)) ? quiet + 1 : 0;
        best = std::max(best, val);
    }

    double numeric = best;
    bool numeric_far_out = x + y > 1e6;

    // interior stationary point: xi solves the criticality equation exactly
    double s = a1 * a2;
    if (s < 1.0) {
        double xi = xi_delta(delta, s);
        double xs = (a2 * int_power(xi, delta) - 1.0) / double(delta);
        double ys = (a1 * int_power(xi, delta) - 1.0) / double(delta);
        if (xs >= 0.0 && ys >= 0.0) {
            double closed = xi - a1 * xs - a2 * ys;
            if (std::fabs(closed - numeric) > 1e-6 * std::max(1.0, std::fabs(closed)))
                throw InternalInconsistency(
                    "phi: stationary-point value and coordinate ascent disagree");
            return closed;
        }
    }
    if (numeric_far_out)
        throw DivergenceSuspected("phi ascent wandered past x + y = 1e6 with no interior optimum");
    return numeric;
}

MembershipResult s_membership(const DualPoint& p, int grid) {
    if (p.delta < 2) throw InvalidParameter("membership needs delta >= 2");
    if (!(p.a0 > 0.0) || !(p.a1 > 0.0) || !(p.a2 > 0.0))
        throw InvalidParameter("membership needs strictly positive coefficients");
    if (grid < 2) throw InvalidParameter("membership grid needs at least 2 points per side");

    MembershipResult out;
    out.phi_gap = p.a0 - phi_delta(p.delta, p.a1, p.a2);

    auto margin = [&](double x, double y) {
        return p.a0 + p.a1 * x + p.a2 * y - surface(p.delta, x, y);
    };

    double box = 1.0;
    int doublings = 0;
    while (p.a1 * box <= 2.0 * surface(p.delta, box, box) ||
           p.a2 * box <= 2.0 * surface(p.delta, box, box)) {
        box *= 2.0;
        if (++doublings > 70)
            throw DivergenceSuspected("membership scan box grew without bound");
    }

    double worst = kInf, wx = 0.0, wy = 0.0;
    for (int i = 0; i <= grid; ++i)
        for (int j = 0; j <= grid; ++j) {
            double x = box * double(i) / double(grid), y = box * double(j) / double(grid);
            double m = margin(x, y);
            if (m < worst) {
                worst = m;
                wx = x;
                wy = y;
            }
        }

    // refine: violation = -margin is concave, polish with coordinate ascent
    double x = wx, y = wy;
    int quiet = 0;
    for (int iter = 0; iter < 60 && quiet < 2; ++iter) {
        x = golden_max([&](double xx) { return -margin(xx, y); }, 0.0, box, 70);
        y = golden_max([&](double yy) { return -margin(x, yy); }, 0.0, box, 70);
        double m = margin(x, y);
        quiet = worst - m <= 1e-14 * std::max(1.0, std::fabs(worst)) ? quiet + 1 : 0;
        if (m < worst) {
            worst = m;
            wx = x;
            wy = y;
        }
    }

    out.min_margin = worst;
    out.witness_x = wx;
    out.witness_y = wy;
    out.member = out.phi_gap >= -kSlackTolerance && out.min_margin >= -kSlackTolerance;
    return out;
}

DualPoint tangent_plane_point(int delta, double lambda, double mu) {
    if (delta < 2) throw InvalidParameter("tangent plane needs delta >= 2");
    if (lambda < 0.0 || mu < 0.0) throw InvalidParameter("tangent point must be in the quadrant");
    double D = z2_clique(delta + 1, lambda, mu);
    double k = std::pow(D, -double(delta) / double(delta + 1));
    DualPoint p;
    p.delta = delta;
    p.a0 = z2_clique(delta, lambda, mu) * k;
    p.a1 = z_clique(delta, mu) * k;
    p.a2 = z_clique(delta, lambda) * k;
    return p;
}

DualPoint separate_membership_point(int delta, int d, double lambda, double mu) {
    if (delta < 2) throw InvalidParameter("separate membership needs delta >= 2");
    if (d < 1 || d > delta) throw InvalidParameter("separate membership needs 1 <= d <= delta");
    if (lambda < 0.0 || mu < 0.0) throw InvalidParameter("base point must be in the quadrant");
    double D = z2_clique(d + 1, lambda, mu);
    double k = std::pow(D, -double(delta) / double(d + 1));
    double e = double(delta) / double(d);
    DualPoint p;
    p.delta = delta;
    p.a0 = std::pow(z2_clique(d, lambda, mu), e) * k;
    p.a1 = std::pow(z_clique(d, mu), e) * k;
    p.a2 = std::pow(z_clique(d, lambda), e) * k;
    return p;
}

double chain_H(int k, double x) {
    if (k < 1) throw InvalidParameter("chain level must be >= 1");
    if (x < 0.0) throw InvalidParameter("chain point must be nonnegative");
    return z2_clique(k, x, x) / z_clique(k, x);
}

double chain_x(int k, double s) {
    if (k < 1) throw InvalidParameter("chain level must be >= 1");
    if (s < 1.0) throw InvalidParameter("chain parameter must be >= 1");
    if (s == 1.0) return 0.0;
    auto val = [&](double x) { return std::pow(chain_H(k, x), 1.0 / double(k)); };
    // H_1 is bounded above by 2, so level 1 only reaches s < 2
    double hi = 1.0;
    int doublings = 0;
    while (val(hi) < s) {
        hi *= 2.0;
        if (++doublings > 80)
            throw InvalidParameter("chain level " + std::to_string(k) +
                                   " never reaches s = " + std::to_string(s));
    }
    double lo = 0.0;
    for (int i = 0; i < 300; ++i) {
        double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        (val(mid) < s ? lo : hi) = mid;
    }
    double x = lo + 0.5 * (hi - lo);
    if (std::fabs(val(x) - s) > 1e-12 * std::max(1.0, s))
        throw NumericalFailure("chain inversion residual out of tolerance");
    return x;
}

double chain_phi(int k, double s) {
    double x = chain_x(k, s);
    return std::pow(z_clique(k, x), 1.0 / double(k)) /
           std::pow(z2_clique(k + 1, x, x), 1.0 / double(k + 1));
}

double chain_Q(int d, double s, double x) {
    return 2.0 * d * s * x * x + (2.0 * s + d - s * s * d - s * s) * x - (s - 1.0);
}

SymmetricChainState symmetric_chain(int d, double s) {
    if (d < 1) throw InvalidParameter("chain needs d >= 1");
    SymmetricChainState st;
    st.d = d;
    st.s = s;
    st.x_d = chain_x(d, s);
    st.x_d1 = chain_x(d + 1, s);
    st.phi_d = chain_phi(d, s);
    st.phi_d1 = chain_phi(d + 1, s);
    return st;
}

double probe_expression(int delta, std::span<const int> ds, double lambda) {
    if (delta < 2) throw InvalidParameter("probe needs delta >= 2");
    if (ds.size() != std::size_t(delta))
        throw InvalidParameter("probe needs exactly delta degrees");
    double logA = 0.0, logB = 0.0;
    for (int d : ds) {
        if (d < 1 || d > delta) throw InvalidParameter("probe degrees must lie in [1, delta]");
        double a = 1.0 + double(d) * lambda, b = 1.0 + double(d + 1) * lambda;
        if (a <= 0.0 || b <= 0.0)
            throw InvalidParameter("probe activity outside the evaluable region");
        logA += std::log(a) / double(d);
        logB += std::log(b) / double(d + 1);
    }
    double A = std::exp(logA);
    double Bpow = std::exp(logB * double(delta + 1) / double(delta));
    return double(delta + 1) * A - double(delta) * Bpow - 1.0;
}

std::optional<double> negative_fugacity_probe(int delta, std::span<const int> ds, double step) {
    if (!(step > 0.0)) throw InvalidParameter("probe needs a positive step");
    if (delta < 2) throw InvalidParameter("probe needs delta >= 2");
    int dmax = 0;
    for (int d : ds) dmax = std::max(dmax, d);
    double floor = std::max(-0.5, -1.0 / double(dmax + 1));
    for (int k = 1;; ++k) {
        double lambda = -step * double(k);
        if (lambda <= floor) break;
        if (probe_expression(delta, ds, lambda) < -kSlackTolerance) return lambda;
    }
    return std::nullopt;
}

} // namespace afmlab
