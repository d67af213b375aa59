#pragma once

#include <optional>
#include <span>
#include <vector>

#include "afmlab/graph.hpp"
#include "afmlab/model.hpp"
#include "afmlab/rational.hpp"

namespace afmlab {

// Clique partition function at constant activity: B_d(x) = d x + 1.
template <class T>
T z_clique(int d, const T& x) {
    return T(d) * x + T(1);
}

// Two-colour clique partition function: A_d(x, y) = d(d-1) x y + d(x+y) + 1.
template <class T>
T z2_clique(int d, const T& x, const T& y) {
    return T(d) * T(d - 1) * x * y + T(d) * (x + y) + T(1);
}

// The quartet that drives the per-degree bounds. Satisfies the exact identity
//   d * D = (d+1) * B_lambda * B_mu - 1,   D = A_{d+1}(lambda, mu).
struct CliqueKernels {
    int d = 1;
    double lambda = 0, mu = 0;
    double A = 1, B_mu = 1, B_lambda = 1, D = 1;
};
CliqueKernels clique_kernels(int d, double lambda, double mu);

// log of prod_v (1 + (d_v+1) lambda_v)^(1/(d_v+1))
double clique_bound_log(const SimpleGraph& g, std::span<const double> acts);

// log of prod_v A_{d_v+1}(lambda_v, mu_v)^(1/(d_v+1))
double clique_bound_z2_log(const SimpleGraph& g, std::span<const double> lam,
                           std::span<const double> mu);

struct HomCliqueBound {
    double log_value = 0.0;  // log of prod_v hom(K_{d_v+1}, model)^(1/(d_v+1))
    bool degenerate = false; // some clique hom vanished; log_value is -inf
};
HomCliqueBound hom_clique_bound_log(const SimpleGraph& g, const WeightedModel& model);

// F_d(x_1..x_q) = sum_k (d)_k e_k(x), the q-colour clique partition function
// Z^(q)_{K_d} at per-colour constant activities.
template <class T>
T falling_factorial_kernel(int d, std::span<const T> xs) {
    if (d < 1) throw InvalidParameter("falling-factorial kernel needs d >= 1");
    for (const T& x : xs)
        if (x < T(0)) throw InvalidParameter("falling-factorial kernel needs nonnegative inputs");
    const int q = int(xs.size());
    // elementary symmetric polynomials by the product recurrence
    std::vector<T> e(std::size_t(q) + 1, T(0));
    e[0] = T(1);
    for (int i = 0; i < q; ++i)
        for (int k = i; k >= 0; --k) e[std::size_t(k) + 1] += e[std::size_t(k)] * xs[std::size_t(i)];
    T total(0), ff(1);
    for (int k = 0; k <= q && k <= d; ++k) {
        total += ff * e[std::size_t(k)];
        ff *= T(d - k); // falling factorial (d)_{k+1}
    }
    return total;
}

// Unique root above 1 of f(X) = (delta+1) s X^(2 delta) - delta X^(delta+1) - 1
// for s in (0,1); bisection to full double resolution.
double xi_delta(int delta, double s);

// xi - (2/delta) s xi^delta
double psi_delta(int delta, double s);

// value is ill-conditioned as s -> 1 (root collides with 1); callers flag it
inline bool psi_low_confidence(double s) { return s > 1.0 - 1e-6 && s < 1.0 + 1e-6; }

// sup over x, y >= 0 of A_{delta+1}(x,y)^(1/(delta+1)) - a1 x - a2 y.
// Closed-form stationary point (through xi_delta) when it lies in the
// quadrant, always cross-checked against projected coordinate ascent.
double phi_delta(int delta, double a1, double a2);

struct DualPoint {
    int delta = 2;
    double a0 = 1, a1 = 1, a2 = 1;
};

struct MembershipResult {
    bool member = false;
    double phi_gap = 0.0;    // a0 - phi_delta(a1, a2)
    double min_margin = 0.0; // min over the scanned quadrant of plane - surface
    double witness_x = 0.0, witness_y = 0.0;
};

// Does a0 + a1 x + a2 y dominate A_{delta+1}(x,y)^(1/(delta+1)) on the whole
// nonnegative quadrant? Checked via phi_delta plus a grid-and-ascent scan.
MembershipResult s_membership(const DualPoint& p, int grid = 64);

// Tangent plane of the surface at (lambda, mu) — always a member.
DualPoint tangent_plane_point(int delta, double lambda, double mu);

// Per-degree triple (w0, w1, w2) for 1 <= d <= delta — members one d at a time.
DualPoint separate_membership_point(int delta, int d, double lambda, double mu);

// ---- symmetric one-parameter chain ----

double chain_H(int k, double x); // A_k(x,x) / B_k(x)
double chain_x(int k, double s); // the x >= 0 with H_k(x)^(1/k) = s, s >= 1
double chain_phi(int k, double s); // B_k(x_k)^(1/k) / A_{k+1}(x_k, x_k)^(1/(k+1))
// quadratic controlling the chain step: 2 d s x^2 + (2s + d - s^2 d - s^2) x - (s - 1)
double chain_Q(int d, double s, double x);

struct SymmetricChainState {
    int d = 1;
    double s = 1;
    double x_d = 0, x_d1 = 0;     // chain points at levels d and d+1
    double phi_d = 1, phi_d1 = 1; // chain ratios at levels d and d+1
};
SymmetricChainState symmetric_chain(int d, double s);

// ---- negative-fugacity probe ----

// (delta+1) A - delta B^((delta+1)/delta) - 1 at uniform activity lambda,
// A = prod (1 + d_i lambda)^(1/d_i), B = prod (1 + (d_i+1) lambda)^(1/(d_i+1))
double probe_expression(int delta, std::span<const int> ds, double lambda);

// Scans lambda = -step, -2 step, ... in (-0.5, 0), staying inside the region
// where every base stays positive; returns the first lambda whose expression
// drops below -1e-9 (the shared slack tolerance — plain "< 0" would report
// rounding noise on configurations where the expression is identically zero).
std::optional<double> negative_fugacity_probe(int delta, std::span<const int> ds, double step);

constexpr double kSlackTolerance = 1e-9;

} // namespace afmlab
