#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "sparsity/error.hpp"

namespace sparsity {

using Vertex = int;
using EdgeId = int;
using Color = int;

inline constexpr EdgeId kNoEdge = -1;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    bool is_loop() const noexcept { return u == v; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph on vertices 0..n-1. Loops and parallel edges are
/// allowed; an edge id is its position in the edge list and never changes.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int n);
    Multigraph(int n, std::initializer_list<Edge> edges);
    Multigraph(int n, std::vector<Edge> edges);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId id) const { return edges_.at(static_cast<std::size_t>(id)); }

    EdgeId add_edge(Vertex u, Vertex v);

    int loop_count(Vertex v) const;
    Multigraph loopless_part() const;

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

/// The (k, l) pair. Only 0 <= l <= 2k-1 with k >= 1 can be constructed.
class SparsityParams {
public:
    SparsityParams(int k, int l);

    int k() const noexcept { return k_; }
    int l() const noexcept { return l_; }

    bool lower_range() const noexcept { return l_ <= k_; }
    bool upper_range() const noexcept { return k_ <= l_; }

    /// k*n - l; may be negative for tiny n.
    long long tight_edge_count(int n) const noexcept {
        return static_cast<long long>(k_) * n - l_;
    }

    friend bool operator==(const SparsityParams&, const SparsityParams&) = default;

private:
    int k_;
    int l_;
};

/// A set of vertex ids, kept sorted and duplicate free.
class VertexSubset {
public:
    VertexSubset() = default;
    VertexSubset(std::initializer_list<Vertex> members);
    explicit VertexSubset(std::vector<Vertex> members);

    static VertexSubset all(int n);
    static VertexSubset from_mask(std::uint64_t mask);

    const std::vector<Vertex>& members() const noexcept { return members_; }
    int size() const noexcept { return static_cast<int>(members_.size()); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(Vertex v) const;

    /// Dense membership vector of length n.
    std::vector<char> indicator(int n) const;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

private:
    std::vector<Vertex> members_;
};

/// Number of edges with both endpoints in `s`; a loop counts once.
/// Throws Error("empty subgraph undefined") for an empty subset.
int induced_edge_count(const Multigraph& g, const VertexSubset& s);

/// Same count for a bitmask subset (n <= 64).
int induced_edge_count(const Multigraph& g, std::uint64_t mask);

}  // namespace sparsity
