#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "afmlab/errors.hpp"

namespace afmlab {

using VertexMask = std::uint64_t;

constexpr int kMaxVertices = 64;
// exhaustive independent-set enumeration is only allowed up to this order
constexpr int kEnumerationLimit = 24;

inline int popcount(VertexMask m) { return std::popcount(m); }
inline VertexMask bit(int v) { return VertexMask(1) << v; }

enum class NamedKind { clique, path_edges, cycle, empty };

// Simple undirected graph on up to 64 vertices, adjacency kept as bitmasks.
class SimpleGraph {
public:
    SimpleGraph() = default; // the 0-vertex graph

    static SimpleGraph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);
    static SimpleGraph named(NamedKind kind, int size);

    int vertex_count() const { return n_; }
    int edge_count() const;
    VertexMask neighbours(int v) const { return adj_[std::size_t(v)]; }
    VertexMask closed_neighbourhood(int v) const { return adj_[std::size_t(v)] | bit(v); }
    int degree(int v) const { return popcount(adj_[std::size_t(v)]); }
    int max_degree() const;
    bool has_edge(int u, int v) const { return (adj_[std::size_t(u)] & bit(v)) != 0; }
    VertexMask full_mask() const { return n_ == 64 ? ~VertexMask(0) : bit(n_) - 1; }
    std::vector<std::pair<int, int>> edge_list() const;
    bool is_regular() const;

    // subgraph induced by the set bits of `keep`; vertices are relabelled in
    // increasing order of their original index
    SimpleGraph induced(VertexMask keep) const;

    // Cartesian product with a q-clique: vertex (v, i) -> index v*q + i;
    // (v,i) ~ (u,j) iff (v == u and i != j) or (vu is an edge and i == j).
    SimpleGraph cartesian_with_clique(int q) const;

    // connected components as vertex masks, ordered by smallest vertex
    std::vector<VertexMask> components() const;
    std::vector<VertexMask> components_within(VertexMask domain) const;

    // Visit every independent set (as a mask) exactly once, empty set included.
    // Guarded by kEnumerationLimit.
    template <class Fn>
    void for_each_independent_set(Fn&& fn) const {
        if (n_ > kEnumerationLimit)
            throw TooLarge("independent-set enumeration limited to " +
                           std::to_string(kEnumerationLimit) + " vertices, got " +
                           std::to_string(n_));
        enumerate_rec(0, full_mask(), fn);
    }

    std::uint64_t independent_set_count() const;

    bool is_clique_set(VertexMask m) const; // every pair inside m adjacent?

private:
    int n_ = 0;
    std::vector<VertexMask> adj_;

    template <class Fn>
    void enumerate_rec(VertexMask chosen, VertexMask avail, Fn&& fn) const {
        fn(chosen);
        while (avail) {
            int v = std::countr_zero(avail);
            avail &= avail - 1;
            enumerate_rec(chosen | bit(v), avail & ~adj_[std::size_t(v)], fn);
        }
    }
};

} // namespace afmlab
