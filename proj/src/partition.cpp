#include "afmlab/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "afmlab/spectral.hpp"

namespace afmlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// brute-force hom over one connected component, vertices visited in BFS order
// so every vertex after the root has an assigned neighbour to prune against
double hom_component_bruteforce(const SimpleGraph& g, const WeightedModel& m) {
    const int n = g.vertex_count(), q = m.spin_count();
    if (n * std::log(double(q)) > std::log(1e9))
        throw TooLarge("homomorphism enumeration would exceed 1e9 maps");

    std::vector<int> order;
    std::vector<bool> seen(std::size_t(n), false);
    order.push_back(0);
    seen[0] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
        VertexMask nb = g.neighbours(order[head]);
        while (nb) {
            int v = std::countr_zero(nb);
            nb &= nb - 1;
            if (!seen[std::size_t(v)]) {
                seen[std::size_t(v)] = true;
                order.push_back(v);
            }
        }
    }

    std::vector<int> spin(std::size_t(n), -1);
    double total = 0.0;
    auto rec = [&](auto&& self, std::size_t idx, double weight) -> void {
        if (idx == order.size()) {
            total += weight;
            return;
        }
        int v = order[idx];
        for (int s = 0; s < q; ++s) {
            double w = weight;
            VertexMask nb = g.neighbours(v);
            while (nb && w != 0.0) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (spin[std::size_t(u)] >= 0) w *= m.at(s, spin[std::size_t(u)]);
            }
            if (w == 0.0) continue;
            spin[std::size_t(v)] = s;
            self(self, idx + 1, w);
            spin[std::size_t(v)] = -1;
        }
    };
    rec(rec, 0, 1.0);
    return total;
}

} // namespace

double hom_count(const SimpleGraph& g, const WeightedModel& m) {
    if (g.vertex_count() == 0) return 1.0;
    double total = 1.0;
    for (VertexMask comp : g.components()) {
        SimpleGraph sub = g.induced(comp);
        const int cn = sub.vertex_count();
        double factor;
        if (cn == 1) {
            factor = double(m.spin_count());
        } else if (sub.max_degree() <= 2) {
            bool cycle = true;
            for (int v = 0; v < cn; ++v)
                if (sub.degree(v) != 2) {
                    cycle = false;
                    break;
                }
            // paths and cycles go through walk counting no matter how long
            factor = cycle ? walk_homomorphisms(WalkKind::cycle, cn, m)
                           : walk_homomorphisms(WalkKind::path_edges, cn - 1, m);
        } else {
            factor = hom_component_bruteforce(sub, m);
        }
        total *= factor;
    }
    return total;
}

double hom_complete_log(int m, const WeightedModel& model) {
    if (m < 1) throw InvalidParameter("complete graph needs at least 1 vertex");
    if (m > 64) throw TooLarge("complete-graph hom limited to 64 vertices");
    const int q = model.spin_count();

    // log-weights; -inf marks a zero weight
    std::vector<double> lw(std::size_t(q) * std::size_t(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            lw[std::size_t(i) * std::size_t(q) + std::size_t(j)] =
                model.at(i, j) > 0.0 ? std::log(model.at(i, j)) : -kInf;

    // hom(K_m) = sum over colour multiplicity vectors (c_1..c_q), sum c_i = m:
    //   m!/prod c_i! * prod_i w_ii^(C(c_i,2)) * prod_{i<j} w_ij^(c_i c_j)
    std::vector<double> terms;
    std::vector<int> c(std::size_t(q), 0);
    auto rec = [&](auto&& self, int colour, int left) -> void {
        if (colour == q - 1) {
            c[std::size_t(colour)] = left;
            double t = std::lgamma(double(m) + 1.0);
            for (int i = 0; i < q && t != -kInf; ++i) {
                int ci = c[std::size_t(i)];
                if (ci == 0) continue;
                t -= std::lgamma(double(ci) + 1.0);
                double own = lw[std::size_t(i) * std::size_t(q) + std::size_t(i)];
                long pairs = (long(ci) * (ci - 1)) / 2;
                if (pairs > 0) t = own == -kInf ? -kInf : t + double(pairs) * own;
                for (int j = i + 1; j < q && t != -kInf; ++j) {
                    int cj = c[std::size_t(j)];
                    if (cj == 0) continue;
                    double cross = lw[std::size_t(i) * std::size_t(q) + std::size_t(j)];
                    t = cross == -kInf ? -kInf : t + double(ci) * double(cj) * cross;
                }
            }
            if (t != -kInf) terms.push_back(t);
            return;
        }
        for (int take = 0; take <= left; ++take) {
            c[std::size_t(colour)] = take;
            self(self, colour + 1, left - take);
        }
    };
    if (q == 1) {
        c[0] = m;
        double own = lw[0];
        long pairs = (long(m) * (m - 1)) / 2;
        if (pairs == 0) return 0.0; // single vertex, single colour: hom = 1... weight-free
        return own == -kInf ? -kInf : double(pairs) * own;
    }
    rec(rec, 0, m);

    if (terms.empty()) return -kInf;
    double mx = *std::max_element(terms.begin(), terms.end());
    double s = 0.0;
    for (double t : terms) s += std::exp(t - mx);
    return mx + std::log(s);
}

double hom_complete(int m, const WeightedModel& model) {
    double lg = hom_complete_log(m, model);
    return lg == -kInf ? 0.0 : std::exp(lg);
}

OccupancyProfile vertex_marginals(const SimpleGraph& g, std::span<const double> acts) {
    ZEvaluator<double> ev(g, acts);
    double z = ev.full();
    OccupancyProfile out;
    out.t = 1.0;
    out.marginal.resize(std::size_t(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        out.marginal[std::size_t(v)] =
            acts[std::size_t(v)] * ev.eval(g.full_mask() & ~g.closed_neighbourhood(v)) / z;
    if (g.vertex_count() > 0) {
        double s = 0.0;
        for (double p : out.marginal) s += p;
        out.fraction = s / double(g.vertex_count());
    }
    return out;
}

double occupancy_fraction(const SimpleGraph& g, double t, std::span<const double> acts) {
    if (t < 0.0) throw InvalidParameter("activity scale must be nonnegative");
    std::vector<double> scaled(acts.begin(), acts.end());
    for (double& a : scaled) a *= t;
    OccupancyProfile prof = vertex_marginals(g, scaled);
    return prof.fraction;
}

double z_log(const SimpleGraph& g, std::span<const double> acts) {
    return std::log(z_recurrence<double>(g, acts));
}

} // namespace afmlab
