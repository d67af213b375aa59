#pragma once

#include <cmath>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "afmlab/graph.hpp"
#include "afmlab/model.hpp"
#include "afmlab/rational.hpp"

namespace afmlab {

// hard cap on distinct memoized subproblems per evaluation
constexpr std::size_t kMemoCapacity = std::size_t(1) << 26;

// per-colour, per-vertex activities: q rows (colours) by n columns (vertices)
template <class T>
struct ActivityMatrix {
    int q = 0, n = 0;
    std::vector<T> v;

    static ActivityMatrix uniform(int q, int n, const T& val) {
        if (q < 1 || n < 0) throw InvalidParameter("activity matrix needs q >= 1, n >= 0");
        ActivityMatrix m;
        m.q = q;
        m.n = n;
        m.v.assign(std::size_t(q) * std::size_t(n), val);
        return m;
    }

    const T& at(int colour, int vertex) const {
        return v[std::size_t(colour) * std::size_t(n) + std::size_t(vertex)];
    }
    T& at(int colour, int vertex) {
        return v[std::size_t(colour) * std::size_t(n) + std::size_t(vertex)];
    }
};

// Memoized vertex-deletion evaluator for the multivariate independence
// polynomial restricted to induced sub-masks:
//   Z(S) = Z(S - w) + lambda_w * Z(S - N[w]),  w a max-degree vertex of G[S],
// with factorization over connected components of G[S].
template <class T>
class ZEvaluator {
public:
    ZEvaluator(const SimpleGraph& g, std::span<const T> acts) : g_(g) {
        if (int(acts.size()) != g.vertex_count())
            throw InvalidParameter("expected " + std::to_string(g.vertex_count()) +
                                   " activities, got " + std::to_string(acts.size()));
        acts_.assign(acts.begin(), acts.end());
        memo_.emplace(VertexMask(0), T(1));
    }

    T eval(VertexMask mask) {
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;

        T result;
        auto comps = g_.components_within(mask);
        if (comps.size() > 1) {
            result = T(1);
            for (VertexMask c : comps) result *= eval(c);
        } else {
            int w = pivot(mask);
            T without = eval(mask & ~bit(w));
            T closed = eval(mask & ~g_.closed_neighbourhood(w));
            result = without + acts_[std::size_t(w)] * closed;
        }
        if (memo_.size() >= kMemoCapacity)
            throw ResourceExhausted("partition-function memo exceeded capacity");
        memo_.emplace(mask, result);
        return result;
    }

    T full() { return eval(g_.full_mask()); }

private:
    const SimpleGraph& g_;
    std::vector<T> acts_;
    std::unordered_map<VertexMask, T> memo_;

    int pivot(VertexMask mask) const {
        int best = -1, best_deg = -1;
        VertexMask rest = mask;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            int d = popcount(g_.neighbours(v) & mask);
            if (d > best_deg) {
                best_deg = d;
                best = v;
            }
        }
        return best;
    }
};

// sum over independent sets by direct enumeration (oracle; n <= 24)
template <class T>
T z_bruteforce(const SimpleGraph& g, std::span<const T> acts) {
    if (int(acts.size()) != g.vertex_count())
        throw InvalidParameter("expected " + std::to_string(g.vertex_count()) +
                               " activities, got " + std::to_string(acts.size()));
    T total(0);
    g.for_each_independent_set([&](VertexMask m) {
        T w(1);
        VertexMask rest = m;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            w *= acts[std::size_t(v)];
        }
        total += w;
    });
    return total;
}

template <class T>
T z_recurrence(const SimpleGraph& g, std::span<const T> acts) {
    ZEvaluator<T> ev(g, acts);
    return ev.full();
}

// stacked activities for the product of g with a q-clique: (v, i) -> v*q + i
template <class T>
std::vector<T> stack_activities(const SimpleGraph& g, const ActivityMatrix<T>& acts) {
    if (acts.n != g.vertex_count())
        throw InvalidParameter("activity matrix does not match vertex count");
    std::vector<T> s(std::size_t(g.vertex_count()) * std::size_t(acts.q));
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int i = 0; i < acts.q; ++i) s[std::size_t(v) * std::size_t(acts.q) + std::size_t(i)] = acts.at(i, v);
    return s;
}

// q-colour semiproper partition function: sum over q-tuples of pairwise
// disjoint independent sets. Evaluated through the clique-product graph,
// whose independent sets are exactly those tuples.
template <class T>
T zq(const SimpleGraph& g, const ActivityMatrix<T>& acts) {
    SimpleGraph prod = g.cartesian_with_clique(acts.q);
    std::vector<T> s = stack_activities(g, acts);
    return z_recurrence<T>(prod, std::span<const T>(s));
}

template <class T>
T z2(const SimpleGraph& g, std::span<const T> lam, std::span<const T> mu) {
    if (int(lam.size()) != g.vertex_count() || int(mu.size()) != g.vertex_count())
        throw InvalidParameter("two-colour activities must match vertex count");
    ActivityMatrix<T> acts = ActivityMatrix<T>::uniform(2, g.vertex_count(), T(0));
    for (int v = 0; v < g.vertex_count(); ++v) {
        acts.at(0, v) = lam[std::size_t(v)];
        acts.at(1, v) = mu[std::size_t(v)];
    }
    return zq(g, acts);
}

// independent oracle for zq: direct enumeration of colourings, vertex by
// vertex, state in {none, colour 1..q}; n <= 16
template <class T>
T zq_bruteforce(const SimpleGraph& g, const ActivityMatrix<T>& acts) {
    const int n = g.vertex_count(), q = acts.q;
    if (acts.n != n) throw InvalidParameter("activity matrix does not match vertex count");
    if (n > 16) throw TooLarge("direct colouring enumeration limited to 16 vertices");
    double states = std::pow(double(q + 1), double(n));
    if (states > 1e9) throw TooLarge("direct colouring enumeration would exceed 1e9 states");

    std::vector<int> colour(std::size_t(n), 0);
    T total(0);
    auto rec = [&](auto&& self, int v, const T& weight) -> void {
        if (v == n) {
            total += weight;
            return;
        }
        colour[std::size_t(v)] = 0;
        self(self, v + 1, weight);
        for (int c = 1; c <= q; ++c) {
            bool ok = true;
            VertexMask nb = g.neighbours(v) & (bit(v) - 1);
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (colour[std::size_t(u)] == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            colour[std::size_t(v)] = c;
            self(self, v + 1, weight * acts.at(c - 1, v));
            colour[std::size_t(v)] = 0;
        }
    };
    rec(rec, 0, T(1));
    return total;
}

template <class T>
T int_power(const T& base, int exp) {
    if (exp < 0) throw InvalidParameter("negative integer power");
    T acc(1), b = base;
    while (exp > 0) {
        if (exp & 1) acc *= b;
        b *= b;
        exp >>= 1;
    }
    return acc;
}

// Z_G at activities lambda * alpha^deg(v) — the exact reduction of the
// two-spin antiferromagnetic model with edge weight alpha and fugacity lambda
// (for independent I, the boundary edge count e(I, V-I) is the degree sum of I).
template <class T>
T z_alpha(const SimpleGraph& g, const T& lambda, const T& alpha) {
    if (lambda < T(0) || alpha < T(0))
        throw InvalidParameter("two-spin reduction needs lambda >= 0 and alpha >= 0");
    std::vector<T> acts(std::size_t(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        acts[std::size_t(v)] = lambda * int_power(alpha, g.degree(v));
    return z_recurrence<T>(g, std::span<const T>(acts));
}

double hom_count(const SimpleGraph& g, const WeightedModel& m);

// log hom(K_m, model) via the colour-multiset expansion (log-sum-exp over
// C(m+q-1, q-1) terms); -inf when every term vanishes
double hom_complete_log(int m, const WeightedModel& model);
double hom_complete(int m, const WeightedModel& model);

struct OccupancyProfile {
    std::vector<double> marginal; // p_v = lambda_v Z_{G - N[v]} / Z_G
    double fraction = 0.0;        // average of marginals
    double t = 1.0;               // activity scale the profile was taken at
};

OccupancyProfile vertex_marginals(const SimpleGraph& g, std::span<const double> acts);
double occupancy_fraction(const SimpleGraph& g, double t, std::span<const double> acts);

double z_log(const SimpleGraph& g, std::span<const double> acts);

} // namespace afmlab
