#include "afmlab/graph.hpp"

#include <algorithm>

namespace afmlab {

SimpleGraph SimpleGraph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw InvalidParameter("vertex count must be nonnegative, got " + std::to_string(n));
    if (n > kMaxVertices)
        throw TooLarge("at most " + std::to_string(kMaxVertices) + " vertices supported, got " +
                       std::to_string(n));
    SimpleGraph g;
    g.n_ = n;
    g.adj_.assign(std::size_t(n), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw VertexOutOfRange("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                   ") out of range for n = " + std::to_string(n));
        if (u == v) throw InvalidEdge("self-loop at vertex " + std::to_string(u));
        if (g.has_edge(u, v))
            throw DuplicateEdge("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        g.adj_[std::size_t(u)] |= bit(v);
        g.adj_[std::size_t(v)] |= bit(u);
    }
    return g;
}

SimpleGraph SimpleGraph::named(NamedKind kind, int size) {
    std::vector<std::pair<int, int>> edges;
    switch (kind) {
    case NamedKind::clique:
        if (size < 1) throw InvalidParameter("clique needs at least 1 vertex");
        for (int u = 0; u < size; ++u)
            for (int v = u + 1; v < size; ++v) edges.emplace_back(u, v);
        return from_edge_list(size, edges);
    case NamedKind::path_edges: // size counts edges, so size+1 vertices
        if (size < 0) throw InvalidParameter("path length must be nonnegative");
        for (int u = 0; u < size; ++u) edges.emplace_back(u, u + 1);
        return from_edge_list(size + 1, edges);
    case NamedKind::cycle:
        if (size < 3) throw InvalidParameter("cycle needs at least 3 vertices");
        for (int u = 0; u < size; ++u) edges.emplace_back(u, (u + 1) % size);
        return from_edge_list(size, edges);
    case NamedKind::empty:
        if (size < 0) throw InvalidParameter("vertex count must be nonnegative");
        return from_edge_list(size, {});
    }
    throw InvalidParameter("unknown named graph kind");
}

int SimpleGraph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

int SimpleGraph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> SimpleGraph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        VertexMask higher = adj_[std::size_t(u)] & ~(bit(u) | (bit(u) - 1));
        while (higher) {
            int v = std::countr_zero(higher);
            higher &= higher - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

bool SimpleGraph::is_regular() const {
    for (int v = 1; v < n_; ++v)
        if (degree(v) != degree(0)) return false;
    return true;
}

SimpleGraph SimpleGraph::induced(VertexMask keep) const {
    keep &= full_mask();
    std::vector<int> newindex(std::size_t(n_), -1);
    int m = 0;
    for (int v = 0; v < n_; ++v)
        if (keep & bit(v)) newindex[std::size_t(v)] = m++;
    SimpleGraph g;
    g.n_ = m;
    g.adj_.assign(std::size_t(m), 0);
    for (int v = 0; v < n_; ++v) {
        if (!(keep & bit(v))) continue;
        VertexMask nb = adj_[std::size_t(v)] & keep;
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            g.adj_[std::size_t(newindex[std::size_t(v)])] |= bit(newindex[std::size_t(u)]);
        }
    }
    return g;
}

SimpleGraph SimpleGraph::cartesian_with_clique(int q) const {
    if (q < 1) throw InvalidParameter("clique factor must have at least 1 vertex");
    if (std::int64_t(n_) * q > kMaxVertices)
        throw TooLarge("product graph would have " + std::to_string(std::int64_t(n_) * q) +
                       " vertices, limit is " + std::to_string(kMaxVertices));
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n_; ++v)
        for (int i = 0; i < q; ++i)
            for (int j = i + 1; j < q; ++j) edges.emplace_back(v * q + i, v * q + j);
    for (auto [u, v] : edge_list())
        for (int i = 0; i < q; ++i) edges.emplace_back(u * q + i, v * q + i);
    return from_edge_list(n_ * q, edges);
}

std::vector<VertexMask> SimpleGraph::components_within(VertexMask domain) const {
    domain &= full_mask();
    std::vector<VertexMask> out;
    VertexMask left = domain;
    while (left) {
        int s = std::countr_zero(left);
        VertexMask comp = bit(s), frontier = comp;
        while (frontier) {
            VertexMask next = 0;
            VertexMask f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= adj_[std::size_t(v)] & domain & ~comp;
            }
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

std::vector<VertexMask> SimpleGraph::components() const { return components_within(full_mask()); }

std::uint64_t SimpleGraph::independent_set_count() const {
    std::uint64_t count = 0;
    for_each_independent_set([&](VertexMask) { ++count; });
    return count;
}

bool SimpleGraph::is_clique_set(VertexMask m) const {
    VertexMask rest = m;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if ((m & ~bit(v) & ~adj_[std::size_t(v)]) != 0) return false;
    }
    return true;
}

} // namespace afmlab
