#include "sparsity/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <random>

#include "sparsity/canonical.hpp"

namespace sparsity {

namespace {

std::vector<std::uint64_t> edge_masks(const Multigraph& g) {
    std::vector<std::uint64_t> masks;
    masks.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        masks.push_back((std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v));
    }
    return masks;
}

long long span_of(const std::vector<std::uint64_t>& masks, std::uint64_t subset) {
    long long span = 0;
    for (std::uint64_t m : masks) {
        span += static_cast<long long>((subset & m) == m);
    }
    return span;
}

}  // namespace

OracleReport brute_force_sparse(const Multigraph& g, SparsityParams params) {
    const int n = g.vertex_count();
    if (n > kOracleMaxVertices) {
        throw SizeLimit("brute_force_sparse: n = " + std::to_string(n) + " exceeds " +
                        std::to_string(kOracleMaxVertices));
    }
    OracleReport report;
    const auto masks = edge_masks(g);
    const std::uint64_t limit = std::uint64_t{1} << n;
    std::vector<std::uint64_t> tight_masks;
    int best_size = n + 1;
    std::uint64_t best_mask = 0;
    for (std::uint64_t s = 1; s < limit; ++s) {
        const int size = std::popcount(s);
        const long long bound = static_cast<long long>(params.k()) * size - params.l();
        const long long span = span_of(masks, s);
        if (span > 0 && span > bound) {
            if (size < best_size) {
                best_size = size;
                best_mask = s;
            }
        } else if (span == bound && span > 0) {
            tight_masks.push_back(s);
        }
    }
    if (best_mask != 0) {
        report.sparse = false;
        report.violating = VertexSubset::from_mask(best_mask);
        return report;
    }
    report.tight = static_cast<long long>(g.edge_count()) == params.tight_edge_count(n);
    for (std::uint64_t s : tight_masks) {
        report.blocks.push_back(VertexSubset::from_mask(s));
        const bool maximal = std::none_of(tight_masks.begin(), tight_masks.end(), [s](std::uint64_t t) {
            return t != s && (t & s) == s;
        });
        if (maximal) {
            report.components.push_back(VertexSubset::from_mask(s));
        }
    }
    return report;
}

int brute_force_max_sparse_subset(const Multigraph& g, SparsityParams params) {
    const int m = g.edge_count();
    const int n = g.vertex_count();
    if (m > 16 || n > kOracleMaxVertices) {
        throw SizeLimit("brute_force_max_sparse_subset: graph too large");
    }
    const auto masks = edge_masks(g);
    int best = 0;
    for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << m); ++pick) {
        const int size = std::popcount(pick);
        if (size <= best) {
            continue;
        }
        std::vector<std::uint64_t> chosen;
        for (int e = 0; e < m; ++e) {
            if ((pick >> e) & 1U) {
                chosen.push_back(masks[static_cast<std::size_t>(e)]);
            }
        }
        bool ok = true;
        for (std::uint64_t s = 1; s < (std::uint64_t{1} << n) && ok; ++s) {
            const long long span = span_of(chosen, s);
            ok = span == 0 || span <= static_cast<long long>(params.k()) * std::popcount(s) - params.l();
        }
        if (ok) {
            best = size;
        }
    }
    return best;
}

namespace {

/// Union-find over at most six vertices with per-root edge counts.
struct SmallForest {
    std::array<int, kPartitionMaxVertices> parent{};
    std::array<int, kPartitionMaxVertices> vertices{};
    std::array<int, kPartitionMaxVertices> edges{};
    std::array<char, kPartitionMaxVertices> touched{};
    int edge_count = 0;

    void reset(int n) {
        for (int i = 0; i < n; ++i) {
            parent[static_cast<std::size_t>(i)] = i;
            vertices[static_cast<std::size_t>(i)] = 1;
            edges[static_cast<std::size_t>(i)] = 0;
            touched[static_cast<std::size_t>(i)] = 0;
        }
        edge_count = 0;
    }
    int find(int x) const {
        while (parent[static_cast<std::size_t>(x)] != x) {
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    /// Adds edge uv; returns the root of the merged component.
    int add(int u, int v) {
        int a = find(u);
        int b = find(v);
        touched[static_cast<std::size_t>(u)] = 1;
        touched[static_cast<std::size_t>(v)] = 1;
        ++edge_count;
        if (a != b) {
            parent[static_cast<std::size_t>(b)] = a;
            vertices[static_cast<std::size_t>(a)] += vertices[static_cast<std::size_t>(b)];
            edges[static_cast<std::size_t>(a)] += edges[static_cast<std::size_t>(b)];
        }
        ++edges[static_cast<std::size_t>(a)];
        return a;
    }
};

class PartitionSearch {
public:
    PartitionSearch(const Multigraph& g, SparsityParams params, PartitionKind kind)
        : g_(g), params_(params), kind_(kind), n_(g.vertex_count()) {
        classes_ = kind == PartitionKind::MapsAndTrees ? params.k() : params.l();
        tree_classes_ = params.l();
        forests_.resize(static_cast<std::size_t>(classes_));
        for (auto& f : forests_) {
            f.reset(n_);
        }
        membership_.assign(static_cast<std::size_t>(n_), 0);
    }

    bool run() { return assign(0); }

private:
    bool is_tree_class(int c) const { return c < tree_classes_; }

    bool assign(int e) {
        if (e == g_.edge_count()) {
            return complete();
        }
        const Edge& edge = g_.edge(e);
        // Classes of the same role are interchangeable: an edge may open at
        // most the first unused class of each role.
        bool opened_tree = false;
        bool opened_map = false;
        for (int c = 0; c < classes_; ++c) {
            SmallForest& f = forests_[static_cast<std::size_t>(c)];
            if (f.edge_count == 0) {
                bool& opened = is_tree_class(c) ? opened_tree : opened_map;
                if (opened) {
                    continue;
                }
                opened = true;
            }
            if (!fits(c, edge)) {
                continue;
            }
            const SmallForest saved = f;
            const auto saved_membership = membership_;
            if (kind_ == PartitionKind::ProperLTk) {
                if (!touch(f, edge.u) || !touch(f, edge.v)) {
                    membership_ = saved_membership;
                    continue;
                }
            }
            f.add(edge.u, edge.v);
            if (assign(e + 1)) {
                return true;
            }
            f = saved;
            membership_ = saved_membership;
        }
        return false;
    }

    /// Records that a tree class now contains v; fails past k trees per vertex.
    bool touch(const SmallForest& f, Vertex v) {
        if (f.touched[static_cast<std::size_t>(v)]) {
            return true;
        }
        return ++membership_[static_cast<std::size_t>(v)] <= params_.k();
    }

    bool fits(int c, const Edge& edge) const {
        const SmallForest& f = forests_[static_cast<std::size_t>(c)];
        const int a = f.find(edge.u);
        const int b = f.find(edge.v);
        if (is_tree_class(c)) {
            return a != b && f.edge_count < n_ - 1;
        }
        // Map classes: every component may hold at most as many edges as vertices.
        const int verts = a == b ? f.vertices[static_cast<std::size_t>(a)]
                                 : f.vertices[static_cast<std::size_t>(a)] + f.vertices[static_cast<std::size_t>(b)];
        const int edges = a == b ? f.edges[static_cast<std::size_t>(a)] + 1
                                 : f.edges[static_cast<std::size_t>(a)] + f.edges[static_cast<std::size_t>(b)] + 1;
        return edges <= verts && f.edge_count < n_;
    }

    bool complete() const {
        if (kind_ == PartitionKind::MapsAndTrees) {
            for (int c = 0; c < classes_; ++c) {
                const int want = is_tree_class(c) ? n_ - 1 : n_;
                if (forests_[static_cast<std::size_t>(c)].edge_count != want) {
                    return false;
                }
            }
            return true;
        }
        // Every non-empty tree class must be connected on the vertices it touches.
        int nonempty = 0;
        for (const SmallForest& f : forests_) {
            if (f.edge_count == 0) {
                continue;
            }
            ++nonempty;
            int touched = 0;
            for (int v = 0; v < n_; ++v) {
                touched += f.touched[static_cast<std::size_t>(v)];
            }
            if (f.edge_count != touched - 1) {
                return false;
            }
        }
        int deficit = 0;
        for (int v = 0; v < n_; ++v) {
            deficit += params_.k() - membership_[static_cast<std::size_t>(v)];
        }
        if (deficit != params_.l() - nonempty) {
            return false;
        }
        // Tree-pieces in every induced subgraph: for each tree, vertices in s
        // minus its edges inside s; plus the single-vertex trees in s.
        const std::uint64_t limit = std::uint64_t{1} << n_;
        for (std::uint64_t s = 1; s < limit; ++s) {
            long long pieces = 0;
            for (int v = 0; v < n_; ++v) {
                if ((s >> v) & 1U) {
                    pieces += params_.k() - membership_[static_cast<std::size_t>(v)];
                }
            }
            for (const SmallForest& f : forests_) {
                for (int v = 0; v < n_; ++v) {
                    if (((s >> v) & 1U) && f.touched[static_cast<std::size_t>(v)]) {
                        ++pieces;
                    }
                }
            }
            int span = 0;
            for (EdgeId e = 0; e < g_.edge_count(); ++e) {
                const Edge& edge = g_.edge(e);
                if (((s >> edge.u) & 1U) && ((s >> edge.v) & 1U)) {
                    --pieces;
                    ++span;
                }
            }
            if (span > 0 && pieces < params_.l()) {
                return false;
            }
        }
        return true;
    }

    const Multigraph& g_;
    SparsityParams params_;
    PartitionKind kind_;
    int n_;
    int classes_ = 0;
    int tree_classes_ = 0;
    std::vector<SmallForest> forests_;
    std::vector<int> membership_;
};

}  // namespace

bool brute_force_partition(const Multigraph& g, SparsityParams params, PartitionKind kind) {
    if (g.vertex_count() > kPartitionMaxVertices || g.edge_count() > kPartitionMaxEdges) {
        throw SizeLimit("brute_force_partition: graph exceeds n = 6, m = 12");
    }
    if (kind == PartitionKind::MapsAndTrees && params.l() > params.k()) {
        return false;
    }
    if (kind == PartitionKind::ProperLTk && g.edge_count() > 0 && params.l() == 0) {
        return false;
    }
    return PartitionSearch(g, params, kind).run();
}

void for_each_small_multigraph(int n, const EnumerationLimits& limits,
                               const std::function<void(const Multigraph&)>& visit) {
    if (n < 0 || n > kEnumerateMaxVertices || limits.max_edges > kEnumerateMaxEdges) {
        throw SizeLimit("enumerate_small_multigraphs: limited to n <= 5 and 12 edges");
    }
    std::vector<Edge> types;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u; v < n; ++v) {
            if (u != v || limits.allow_loops) {
                types.push_back({u, v});
            }
        }
    }
    std::vector<Edge> current;
    std::vector<int> used(types.size(), 0);
    auto cap = [&](std::size_t t) {
        const int c = types[t].is_loop() ? limits.max_loop_multiplicity : limits.max_pair_multiplicity;
        return c < 0 ? limits.max_edges : c;
    };
    // Non-decreasing sequences of edge types = edge multisets.
    std::function<void(std::size_t)> extend = [&](std::size_t first) {
        visit(Multigraph(n, current));
        if (static_cast<int>(current.size()) == limits.max_edges) {
            return;
        }
        for (std::size_t t = first; t < types.size(); ++t) {
            if (used[t] >= cap(t)) {
                continue;
            }
            ++used[t];
            current.push_back(types[t]);
            extend(t);
            current.pop_back();
            --used[t];
        }
    };
    extend(0);
}

std::vector<Multigraph> enumerate_small_multigraphs(int n, int m_max) {
    std::vector<Multigraph> out;
    for_each_small_multigraph(n, EnumerationLimits{m_max}, [&](const Multigraph& g) { out.push_back(g); });
    return out;
}

Multigraph random_tight_graph(int n, SparsityParams params, std::uint64_t seed) {
    if (n < 1) {
        throw Error("random_tight_graph: n must be positive");
    }
    const long long target = params.tight_edge_count(n);
    if (target < 0) {
        throw Error("random_tight_graph: kn - l is negative");
    }
    const bool loops = params.l() < params.k();
    if (n == 1 && target > 0 && !loops) {
        throw Error("random_tight_graph: no tight graph on one vertex");
    }

    CanonicalGame game(n, params);
    Multigraph g(n);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    auto offer = [&](Vertex u, Vertex v) {
        if (game.try_add_edge(u, v)) {
            g.add_edge(u, v);
            return true;
        }
        return false;
    };

    // Random proposals first; a bounded budget keeps the tail of the
    // process from degenerating into coupon collecting.
    const long long budget = 4 * target + 64;
    for (long long attempt = 0; attempt < budget && g.edge_count() < target; ++attempt) {
        const Vertex u = pick(rng);
        const Vertex v = pick(rng);
        if (u == v && !loops) {
            continue;
        }
        offer(u, v);
    }
    if (g.edge_count() < target) {
        // Finish with one pass over all pairs in random order. Sparse edge
        // sets form a matroid, so greedily saturating each pair reaches a basis.
        std::vector<Edge> pairs;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = loops ? u : u + 1; v < n; ++v) {
                pairs.push_back({u, v});
            }
        }
        std::shuffle(pairs.begin(), pairs.end(), rng);
        for (const Edge& p : pairs) {
            while (g.edge_count() < target && offer(p.u, p.v)) {
            }
        }
    }
    if (g.edge_count() != target) {
        throw Error("random_tight_graph: no (" + std::to_string(params.k()) + "," + std::to_string(params.l()) +
                    ")-tight graph on " + std::to_string(n) + " vertices");
    }
    return g;
}

bool tight_graph_exists(int n, SparsityParams params) {
    if (n < 1 || params.tight_edge_count(n) < 0) {
        return false;
    }
    // The sparse edge sets of the complete multigraph form a matroid whose
    // rank is reached by offering every admissible edge once.
    CanonicalGame game(n, params);
    const int loop_copies = std::max(0, params.k() - params.l());
    const int pair_copies = std::max(0, 2 * params.k() - params.l());
    long long accepted = 0;
    for (Vertex u = 0; u < n; ++u) {
        for (int c = 0; c < loop_copies; ++c) {
            accepted += game.try_add_edge(u, u);
        }
        for (Vertex v = u + 1; v < n; ++v) {
            for (int c = 0; c < pair_copies; ++c) {
                accepted += game.try_add_edge(u, v);
            }
        }
    }
    return accepted == params.tight_edge_count(n);
}

bool brute_force_graded_tight(const Multigraph& g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.loop_count(v) > 2) {
            throw Error("malformed: vertex " + std::to_string(v) + " carries more than two loops");
        }
    }
    return brute_force_sparse(g.loopless_part(), SparsityParams(2, 3)).sparse &&
           brute_force_sparse(g, SparsityParams(2, 0)).tight;
}

bool brute_force_axis_parallel(const Multigraph& g, const std::vector<int>& loop_axis) {
    const int n = g.vertex_count();
    if (loop_axis.size() != g.edges().size()) {
        throw Error("malformed: one axis entry per edge expected");
    }
    std::array<std::vector<char>, 2> has_loop{std::vector<char>(static_cast<std::size_t>(n), 0),
                                              std::vector<char>(static_cast<std::size_t>(n), 0)};
    std::vector<Edge> base;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        if (!edge.is_loop()) {
            base.push_back(edge);
            continue;
        }
        const int axis = loop_axis[static_cast<std::size_t>(e)];
        if (axis != 0 && axis != 1) {
            throw Error("malformed: loop axis out of range");
        }
        char& slot = has_loop[static_cast<std::size_t>(axis)][static_cast<std::size_t>(edge.u)];
        if (slot) {
            throw Error("malformed: two loops of one axis on a vertex");
        }
        slot = 1;
    }
    if (base.size() > 16) {
        throw SizeLimit("brute_force_axis_parallel: more than 16 non-loop edges");
    }
    if (!brute_force_sparse(Multigraph(n, base), SparsityParams(2, 3)).sparse) {
        return false;
    }
    const auto m = static_cast<std::uint32_t>(base.size());
    for (std::uint32_t coloring = 0; coloring < (std::uint32_t{1} << m); ++coloring) {
        bool ok = true;
        for (std::uint32_t c = 0; c < 2 && ok; ++c) {
            // Union-find on the color class; each tree must hold exactly one c-loop.
            std::vector<int> parent(static_cast<std::size_t>(n));
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](int x) {
                while (parent[static_cast<std::size_t>(x)] != x) {
                    x = parent[static_cast<std::size_t>(x)];
                }
                return x;
            };
            for (std::uint32_t e = 0; e < m && ok; ++e) {
                if (((coloring >> e) & 1U) != c) {
                    continue;
                }
                const int a = find(base[e].u);
                const int b = find(base[e].v);
                ok = a != b;
                parent[static_cast<std::size_t>(a)] = b;
            }
            std::vector<int> loops_in_tree(static_cast<std::size_t>(n), 0);
            for (Vertex v = 0; v < n && ok; ++v) {
                loops_in_tree[static_cast<std::size_t>(find(v))] += has_loop[c][static_cast<std::size_t>(v)];
            }
            for (Vertex v = 0; v < n && ok; ++v) {
                ok = find(v) != v || loops_in_tree[static_cast<std::size_t>(v)] == 1;
            }
        }
        if (ok) {
            return true;
        }
    }
    return false;
}

}  // namespace sparsity
