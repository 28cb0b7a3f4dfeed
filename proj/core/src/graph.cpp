#include "sparsity/graph.hpp"

#include <algorithm>
#include <string>

namespace sparsity {

namespace {

void check_endpoint(int n, Vertex x) {
    if (x < 0 || x >= n) {
        throw Error("vertex " + std::to_string(x) + " out of range for n=" + std::to_string(n));
    }
}

}  // namespace

Multigraph::Multigraph(int n) : n_(n) {
    if (n < 0) {
        throw Error("negative vertex count");
    }
}

Multigraph::Multigraph(int n, std::initializer_list<Edge> edges)
    : Multigraph(n, std::vector<Edge>(edges)) {}

Multigraph::Multigraph(int n, std::vector<Edge> edges) : Multigraph(n) {
    for (const Edge& e : edges) {
        check_endpoint(n_, e.u);
        check_endpoint(n_, e.v);
    }
    edges_ = std::move(edges);
}

EdgeId Multigraph::add_edge(Vertex u, Vertex v) {
    check_endpoint(n_, u);
    check_endpoint(n_, v);
    edges_.push_back({u, v});
    return static_cast<EdgeId>(edges_.size() - 1);
}

int Multigraph::loop_count(Vertex v) const {
    return static_cast<int>(
        std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.u == v && e.v == v; }));
}

Multigraph Multigraph::loopless_part() const {
    Multigraph out(n_);
    for (const Edge& e : edges_) {
        if (!e.is_loop()) {
            out.edges_.push_back(e);
        }
    }
    return out;
}

SparsityParams::SparsityParams(int k, int l) : k_(k), l_(l) {
    if (k < 1) {
        throw Error("k must be positive");
    }
    if (l < 0 || l > 2 * k - 1) {
        throw Error("l must satisfy 0 <= l <= 2k-1 (got k=" + std::to_string(k) + ", l=" + std::to_string(l) +
                    ")");
    }
}

VertexSubset::VertexSubset(std::initializer_list<Vertex> members)
    : VertexSubset(std::vector<Vertex>(members)) {}

VertexSubset::VertexSubset(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSubset VertexSubset::all(int n) {
    VertexSubset s;
    s.members_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        s.members_[static_cast<std::size_t>(i)] = i;
    }
    return s;
}

VertexSubset VertexSubset::from_mask(std::uint64_t mask) {
    VertexSubset s;
    for (int i = 0; mask != 0; ++i, mask >>= 1) {
        if (mask & 1U) {
            s.members_.push_back(i);
        }
    }
    return s;
}

bool VertexSubset::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<char> VertexSubset::indicator(int n) const {
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (Vertex v : members_) {
        check_endpoint(n, v);
        in[static_cast<std::size_t>(v)] = 1;
    }
    return in;
}

int induced_edge_count(const Multigraph& g, const VertexSubset& s) {
    if (s.empty()) {
        throw Error("empty subgraph undefined");
    }
    const auto in = s.indicator(g.vertex_count());
    int count = 0;
    for (const Edge& e : g.edges()) {
        if (in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)]) {
            ++count;
        }
    }
    return count;
}

int induced_edge_count(const Multigraph& g, std::uint64_t mask) {
    if (mask == 0) {
        throw Error("empty subgraph undefined");
    }
    int count = 0;
    for (const Edge& e : g.edges()) {
        if (((mask >> e.u) & 1U) && ((mask >> e.v) & 1U)) {
            ++count;
        }
    }
    return count;
}

}  // namespace sparsity
