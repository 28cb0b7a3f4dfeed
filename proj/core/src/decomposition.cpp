#include "sparsity/decomposition.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "detail/union_find.hpp"
#include "sparsity/sliders.hpp"

namespace sparsity {

using detail::UnionFind;

Multigraph game_graph(const GameState& state) {
    std::vector<Edge> edges;
    edges.reserve(state.edges().size());
    for (const DirectedEdge& e : state.edges()) {
        edges.push_back({e.tail, e.head});
    }
    return Multigraph(state.vertex_count(), std::move(edges));
}

Decomposition extract_coloring(const GameState& state) {
    Decomposition d;
    d.params = state.params();
    for (const DirectedEdge& e : state.edges()) {
        d.color.push_back(e.color);
        d.tail.push_back(e.tail);
    }
    return d;
}

Decomposition extract_coloring(const ConstructionResult& result, int input_edge_count) {
    if (!result.all_accepted() || static_cast<int>(result.accepted.size()) != input_edge_count) {
        throw Error("some input edges were rejected and carry no color");
    }
    Decomposition d;
    d.params = result.state.params();
    d.color.assign(static_cast<std::size_t>(input_edge_count), 0);
    d.tail.assign(static_cast<std::size_t>(input_edge_count), 0);
    for (std::size_t j = 0; j < result.accepted.size(); ++j) {
        const DirectedEdge& e = result.state.edge(static_cast<EdgeId>(j));
        const auto id = static_cast<std::size_t>(result.accepted[j]);
        d.color[id] = e.color;
        d.tail[id] = e.tail;
    }
    return d;
}

namespace {

void check_shape(const Decomposition& d, const Multigraph& g) {
    if (d.color.size() != g.edges().size() || d.tail.size() != g.edges().size()) {
        throw Error("decomposition does not cover the graph's edges");
    }
}

/// Counts monochromatic acyclic components inside the subset marked in `in`.
int count_pieces(const Decomposition& d, const Multigraph& g, const std::vector<char>& in, UnionFind& uf) {
    const int n = g.vertex_count();
    int pieces = 0;
    for (Color c = 0; c < d.params.k(); ++c) {
        uf.reset(n);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const Edge& edge = g.edge(e);
            if (d.color[static_cast<std::size_t>(e)] == c && in[static_cast<std::size_t>(edge.u)] &&
                in[static_cast<std::size_t>(edge.v)]) {
                uf.unite(edge.u, edge.v);
            }
        }
        for (Vertex v = 0; v < n; ++v) {
            if (in[static_cast<std::size_t>(v)] && uf.find(v) == v && uf.edges(v) == uf.size(v) - 1) {
                ++pieces;
            }
        }
    }
    return pieces;
}

std::vector<char> mask_indicator(std::uint64_t mask, int n) {
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        in[static_cast<std::size_t>(v)] = static_cast<char>((mask >> v) & 1U);
    }
    return in;
}

}  // namespace

std::vector<TreePiece> tree_pieces(const Decomposition& d, const Multigraph& g, const VertexSubset& s) {
    if (s.empty()) {
        throw Error("empty subgraph undefined");
    }
    check_shape(d, g);
    const int n = g.vertex_count();
    const std::vector<char> in = s.indicator(n);
    std::vector<TreePiece> pieces;
    UnionFind uf(n);
    for (Color c = 0; c < d.params.k(); ++c) {
        uf.reset(n);
        // Per vertex: whether it has an out-edge of color c at all, and one inside s.
        std::vector<char> has_out(static_cast<std::size_t>(n), 0);
        std::vector<char> has_inner_out(static_cast<std::size_t>(n), 0);
        std::vector<EdgeId> inner;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (d.color[static_cast<std::size_t>(e)] != c) {
                continue;
            }
            const Edge& edge = g.edge(e);
            const Vertex t = d.tail[static_cast<std::size_t>(e)];
            has_out[static_cast<std::size_t>(t)] = 1;
            if (in[static_cast<std::size_t>(edge.u)] && in[static_cast<std::size_t>(edge.v)]) {
                has_inner_out[static_cast<std::size_t>(t)] = 1;
                uf.unite(edge.u, edge.v);
                inner.push_back(e);
            }
        }
        std::map<int, TreePiece> by_root;
        for (Vertex v : s) {
            const int r = uf.find(v);
            if (uf.edges(r) != uf.size(r) - 1) {
                continue;
            }
            TreePiece& p = by_root[r];
            p.color = c;
            p.vertices.push_back(v);
        }
        for (EdgeId e : inner) {
            auto it = by_root.find(uf.find(g.edge(e).u));
            if (it != by_root.end()) {
                it->second.edges.push_back(e);
            }
        }
        for (auto& [r, p] : by_root) {
            (void)r;
            const auto root = std::find_if(p.vertices.begin(), p.vertices.end(), [&](Vertex v) {
                return !has_inner_out[static_cast<std::size_t>(v)];
            });
            p.root = root != p.vertices.end() ? *root : p.vertices.front();
            p.root_kind = has_out[static_cast<std::size_t>(p.root)] ? RootKind::OutEdge : RootKind::Pebble;
            pieces.push_back(std::move(p));
        }
    }
    std::stable_sort(pieces.begin(), pieces.end(), [](const TreePiece& a, const TreePiece& b) {
        if (a.root != b.root) {
            return a.root < b.root;
        }
        if (a.root_kind != b.root_kind) {
            return a.root_kind == RootKind::Pebble;
        }
        return a.color < b.color;
    });
    return pieces;
}

int tree_piece_count(const Decomposition& d, const Multigraph& g, std::uint64_t mask) {
    check_shape(d, g);
    UnionFind uf(g.vertex_count());
    return count_pieces(d, g, mask_indicator(mask, g.vertex_count()), uf);
}

Verdict certify_coloring(const Multigraph& g, const Decomposition& d, const CertifyOptions& options) {
    const int n = g.vertex_count();
    const int k = d.params.k();
    if (d.color.size() != g.edges().size() || d.tail.size() != g.edges().size()) {
        return Verdict::fail("malformed: decomposition does not cover the graph's edges");
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Color c = d.color[static_cast<std::size_t>(e)];
        const Vertex t = d.tail[static_cast<std::size_t>(e)];
        if (c < 0 || c >= k) {
            return Verdict::fail("malformed: edge " + std::to_string(e) + " has color " + std::to_string(c));
        }
        if (t != g.edge(e).u && t != g.edge(e).v) {
            return Verdict::fail("malformed: edge " + std::to_string(e) + " is oriented from a non-endpoint");
        }
    }

    // (1,0)-sparsity: no component of a color class has more edges than vertices.
    UnionFind uf(n);
    for (Color c = 0; c < k; ++c) {
        uf.reset(n);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (d.color[static_cast<std::size_t>(e)] == c) {
                uf.unite(g.edge(e).u, g.edge(e).v);
            }
        }
        for (Vertex v = 0; v < n; ++v) {
            if (uf.find(v) == v && uf.edges(v) > uf.size(v)) {
                return Verdict::fail("color " + std::to_string(c) + " is not (1,0)-sparse around vertex " +
                                     std::to_string(v));
            }
        }
    }

    Verdict verdict;
    const int l = d.params.l();
    auto check = [&](const std::vector<char>& in) {
        ++verdict.subsets_checked;
        const bool spans_edge = std::any_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
            return in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)];
        });
        if (!spans_edge) {
            return true;
        }
        const int pieces = count_pieces(d, g, in, uf);
        if (pieces < l) {
            std::vector<Vertex> members;
            for (Vertex v = 0; v < n; ++v) {
                if (in[static_cast<std::size_t>(v)]) {
                    members.push_back(v);
                }
            }
            std::string list;
            for (Vertex v : members) {
                list += (list.empty() ? "" : ",") + std::to_string(v);
            }
            verdict.ok = false;
            verdict.detail = "subset {" + list + "} has " + std::to_string(pieces) + " tree-pieces, fewer than " +
                             std::to_string(l);
            return false;
        }
        return true;
    };

    if (n <= options.exhaustive_limit && n < 63) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            if (!check(mask_indicator(mask, n))) {
                return verdict;
            }
        }
        return verdict;
    }

    verdict.exhaustive = false;
    std::vector<std::vector<char>> subsets;
    subsets.emplace_back(static_cast<std::size_t>(n), 1);
    for (Color c = 0; c < k; ++c) {
        uf.reset(n);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (d.color[static_cast<std::size_t>(e)] == c) {
                uf.unite(g.edge(e).u, g.edge(e).v);
            }
        }
        std::map<int, std::vector<char>> comps;
        for (Vertex v = 0; v < n; ++v) {
            auto [it, inserted] = comps.try_emplace(uf.find(v), static_cast<std::size_t>(n), 0);
            (void)inserted;
            it->second[static_cast<std::size_t>(v)] = 1;
        }
        for (auto& [root, in] : comps) {
            (void)root;
            subsets.push_back(std::move(in));
        }
    }
    std::mt19937_64 rng(options.seed);
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < options.samples; ++i) {
        std::vector<char> in(static_cast<std::size_t>(n), 0);
        for (auto& b : in) {
            b = static_cast<char>(coin(rng));
        }
        if (std::find(in.begin(), in.end(), 1) == in.end()) {
            in[0] = 1;
        }
        subsets.push_back(std::move(in));
    }
    for (const auto& in : subsets) {
        if (!check(in)) {
            return verdict;
        }
    }
    return verdict;
}

const char* to_string(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::Coloring:
            return "coloring";
        case CertificateKind::MapsAndTrees:
            return "maps-and-trees";
        case CertificateKind::ProperLTk:
            return "proper-ltk";
        case CertificateKind::GradedTight:
            return "graded-tight";
    }
    return "coloring";
}

std::optional<CertificateKind> certificate_kind_from_string(const std::string& name) {
    for (CertificateKind kind : {CertificateKind::Coloring, CertificateKind::MapsAndTrees,
                                 CertificateKind::ProperLTk, CertificateKind::GradedTight}) {
        if (name == to_string(kind)) {
            return kind;
        }
    }
    return std::nullopt;
}

Decomposition Certificate::decomposition() const {
    Decomposition d;
    d.params = params;
    d.color.assign(edges.size(), -1);
    d.tail.assign(edges.size(), -1);
    for (const CertificateEdge& e : edges) {
        if (e.id < 0 || static_cast<std::size_t>(e.id) >= edges.size() || d.color[static_cast<std::size_t>(e.id)] >= 0) {
            throw Error("certificate edge ids are not 0..m-1 each once");
        }
        d.color[static_cast<std::size_t>(e.id)] = e.color;
        d.tail[static_cast<std::size_t>(e.id)] = e.oriented_from;
    }
    return d;
}

namespace {

void require_tight(const Multigraph& g, const ConstructionResult& result) {
    if (!result.tight() || static_cast<int>(result.accepted.size()) != g.edge_count()) {
        throw Error("input not tight");
    }
}

Certificate base_certificate(const Multigraph& g, const ConstructionResult& result, CertificateKind kind) {
    const Decomposition d = extract_coloring(result, g.edge_count());
    Certificate cert;
    cert.kind = kind;
    cert.params = result.state.params();
    cert.n = g.vertex_count();
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        cert.edges.push_back({id, e.u, e.v, d.color[static_cast<std::size_t>(id)], d.tail[static_cast<std::size_t>(id)]});
    }
    return cert;
}

std::vector<EdgeId> edges_of_color(const Certificate& cert, Color c) {
    std::vector<EdgeId> out;
    for (const CertificateEdge& e : cert.edges) {
        if (e.color == c) {
            out.push_back(e.id);
        }
    }
    return out;
}

}  // namespace

Certificate make_coloring_certificate(const Multigraph& g, const ConstructionResult& result) {
    return base_certificate(g, result, CertificateKind::Coloring);
}

Certificate extract_maps_and_trees(const Multigraph& g, const ConstructionResult& result) {
    const SparsityParams params = result.state.params();
    if (!params.lower_range()) {
        throw Error("maps-and-trees requires l <= k");
    }
    require_tight(g, result);
    Certificate cert = base_certificate(g, result, CertificateKind::MapsAndTrees);
    for (Color c = 0; c < params.k(); ++c) {
        int pebbles = 0;
        for (Vertex v = 0; v < result.state.vertex_count(); ++v) {
            pebbles += result.state.pebbles(v, c);
        }
        if (pebbles > 1) {
            throw Error("color " + std::to_string(c) + " keeps " + std::to_string(pebbles) + " pebbles");
        }
        (pebbles == 1 ? cert.trees : cert.maps).push_back(edges_of_color(cert, c));
    }
    return cert;
}

Certificate extract_proper_ltk(const Multigraph& g, const ConstructionResult& result) {
    const SparsityParams params = result.state.params();
    if (!params.upper_range()) {
        throw Error("proper lTk requires l >= k");
    }
    require_tight(g, result);
    Certificate cert = base_certificate(g, result, CertificateKind::ProperLTk);
    const Decomposition d = cert.decomposition();
    const auto pieces = tree_pieces(d, g, VertexSubset::all(g.vertex_count()));
    const int covered = static_cast<int>(pieces.size());
    int piece_edges = 0;
    for (const TreePiece& p : pieces) {
        piece_edges += static_cast<int>(p.edges.size());
        std::vector<EdgeId> ids = p.edges;
        std::sort(ids.begin(), ids.end());
        cert.trees.push_back(std::move(ids));
    }
    if (piece_edges != g.edge_count() || covered != params.l()) {
        throw Error("some color class contains a cycle");
    }
    return cert;
}

namespace {

/// Structural checks shared by all kinds: ids, endpoints, colors, tails.
Verdict check_edges(const Multigraph& g, const Certificate& cert) {
    if (cert.n != g.vertex_count() || static_cast<int>(cert.edges.size()) != g.edge_count()) {
        return Verdict::fail("certificate size does not match the graph");
    }
    std::vector<char> seen(cert.edges.size(), 0);
    for (const CertificateEdge& e : cert.edges) {
        if (e.id < 0 || e.id >= g.edge_count() || seen[static_cast<std::size_t>(e.id)]) {
            return Verdict::fail("edge ids are not 0..m-1 each once");
        }
        seen[static_cast<std::size_t>(e.id)] = 1;
        const Edge& ge = g.edge(e.id);
        if (!((ge.u == e.u && ge.v == e.v) || (ge.u == e.v && ge.v == e.u))) {
            return Verdict::fail("edge " + std::to_string(e.id) + " endpoints differ from the graph");
        }
        if (e.color < 0 || e.color >= cert.params.k()) {
            return Verdict::fail("edge " + std::to_string(e.id) + " has color out of range");
        }
        if (e.oriented_from != e.u && e.oriented_from != e.v) {
            return Verdict::fail("edge " + std::to_string(e.id) + " is oriented from a non-endpoint");
        }
    }
    return {};
}

/// Role lists must partition the edge ids, each list being monochromatic.
Verdict check_roles(const Certificate& cert, const Decomposition& d) {
    std::vector<char> used(cert.edges.size(), 0);
    std::vector<char> color_used(static_cast<std::size_t>(cert.params.k()), 0);
    for (const auto* group : {&cert.trees, &cert.maps}) {
        for (const auto& role : *group) {
            for (EdgeId id : role) {
                if (id < 0 || static_cast<std::size_t>(id) >= used.size() || used[static_cast<std::size_t>(id)]) {
                    return Verdict::fail("role lists do not partition the edges");
                }
                used[static_cast<std::size_t>(id)] = 1;
            }
            const Color c = role.empty() ? -1 : d.color[static_cast<std::size_t>(role.front())];
            for (EdgeId id : role) {
                if (d.color[static_cast<std::size_t>(id)] != c) {
                    return Verdict::fail("a role mixes colors");
                }
            }
            // Upper-range trees share colors; maps-and-trees roles are whole color classes.
            if (cert.kind == CertificateKind::MapsAndTrees) {
                if (c >= 0 && color_used[static_cast<std::size_t>(c)]) {
                    return Verdict::fail("two roles share color " + std::to_string(c));
                }
                if (c >= 0) {
                    color_used[static_cast<std::size_t>(c)] = 1;
                }
            }
        }
    }
    if (std::find(used.begin(), used.end(), 0) != used.end()) {
        return Verdict::fail("role lists do not partition the edges");
    }
    return {};
}

Verdict validate_maps_and_trees(const Multigraph& g, const Certificate& cert, const Decomposition& d) {
    const SparsityParams p = cert.params;
    const int n = g.vertex_count();
    if (!p.lower_range()) {
        return Verdict::fail("maps-and-trees requires l <= k");
    }
    if (static_cast<int>(cert.trees.size()) != p.l() || static_cast<int>(cert.maps.size()) != p.k() - p.l()) {
        return Verdict::fail("expected " + std::to_string(p.l()) + " trees and " + std::to_string(p.k() - p.l()) +
                             " maps");
    }
    if (g.edge_count() != p.tight_edge_count(n)) {
        return Verdict::fail("graph is not tight: " + std::to_string(g.edge_count()) + " edges");
    }
    if (Verdict v = check_roles(cert, d); !v) {
        return v;
    }
    UnionFind uf(n);
    for (std::size_t t = 0; t < cert.trees.size(); ++t) {
        const auto& tree = cert.trees[t];
        if (static_cast<int>(tree.size()) != n - 1) {
            return Verdict::fail("tree " + std::to_string(t) + " has " + std::to_string(tree.size()) + " edges");
        }
        uf.reset(n);
        for (EdgeId id : tree) {
            if (!uf.unite(g.edge(id).u, g.edge(id).v)) {
                return Verdict::fail("tree " + std::to_string(t) + " contains a cycle");
            }
        }
    }
    for (std::size_t m = 0; m < cert.maps.size(); ++m) {
        std::vector<int> out(static_cast<std::size_t>(n), 0);
        std::vector<char> support(static_cast<std::size_t>(n), 0);
        for (EdgeId id : cert.maps[m]) {
            const Edge& e = g.edge(id);
            support[static_cast<std::size_t>(e.u)] = 1;
            support[static_cast<std::size_t>(e.v)] = 1;
            ++out[static_cast<std::size_t>(d.tail[static_cast<std::size_t>(id)])];
        }
        for (Vertex v = 0; v < n; ++v) {
            if (support[static_cast<std::size_t>(v)] && out[static_cast<std::size_t>(v)] != 1) {
                return Verdict::fail("map " + std::to_string(m) + " has out-degree " +
                                     std::to_string(out[static_cast<std::size_t>(v)]) + " at vertex " +
                                     std::to_string(v));
            }
        }
    }
    return {};
}

/// Per-vertex count of non-empty trees containing it.
struct TreeLayout {
    std::vector<std::vector<Vertex>> vertices;  // per tree, sorted
    std::vector<int> membership;
    int empty_trees = 0;
};

Verdict layout_trees(const Multigraph& g, const Certificate& cert, TreeLayout& layout) {
    const int n = g.vertex_count();
    layout.membership.assign(static_cast<std::size_t>(n), 0);
    UnionFind uf(n);
    for (std::size_t t = 0; t < cert.trees.size(); ++t) {
        const auto& tree = cert.trees[t];
        std::vector<Vertex> verts;
        if (tree.empty()) {
            ++layout.empty_trees;
            layout.vertices.push_back({});
            continue;
        }
        uf.reset(n);
        for (EdgeId id : tree) {
            const Edge& e = g.edge(id);
            if (e.is_loop() || !uf.unite(e.u, e.v)) {
                return Verdict::fail("tree " + std::to_string(t) + " contains a cycle");
            }
            verts.push_back(e.u);
            verts.push_back(e.v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        if (static_cast<std::size_t>(uf.size(verts.front())) != verts.size()) {
            return Verdict::fail("tree " + std::to_string(t) + " is disconnected");
        }
        for (Vertex v : verts) {
            ++layout.membership[static_cast<std::size_t>(v)];
        }
        layout.vertices.push_back(std::move(verts));
    }
    int deficit = 0;
    for (Vertex v = 0; v < n; ++v) {
        const int d = cert.params.k() - layout.membership[static_cast<std::size_t>(v)];
        if (d < 0) {
            return Verdict::fail("vertex " + std::to_string(v) + " lies in more than k trees");
        }
        deficit += d;
    }
    if (deficit != layout.empty_trees) {
        return Verdict::fail("single-vertex trees cannot bring every vertex into exactly k trees");
    }
    return {};
}

/// Tree-pieces of the layout inside the subset marked by `in`, and m(s).
std::pair<long long, long long> layout_pieces(const Multigraph& g, const Certificate& cert, const TreeLayout& layout,
                                              const std::vector<char>& in) {
    long long pieces = 0;
    const int k = cert.params.k();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (in[static_cast<std::size_t>(v)]) {
            pieces += k - layout.membership[static_cast<std::size_t>(v)];
        }
    }
    for (std::size_t t = 0; t < cert.trees.size(); ++t) {
        for (Vertex v : layout.vertices[t]) {
            pieces += in[static_cast<std::size_t>(v)];
        }
        for (EdgeId id : cert.trees[t]) {
            const Edge& e = g.edge(id);
            pieces -= static_cast<long long>(in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)]);
        }
    }
    long long span = 0;
    for (const Edge& e : g.edges()) {
        span += static_cast<long long>(in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)]);
    }
    return {pieces, span};
}

Verdict validate_proper_ltk(const Multigraph& g, const Certificate& cert, const Decomposition& d,
                            const CertifyOptions& options) {
    const SparsityParams p = cert.params;
    const int n = g.vertex_count();
    if (!p.upper_range()) {
        return Verdict::fail("proper lTk requires l >= k");
    }
    if (static_cast<int>(cert.trees.size()) != p.l() || !cert.maps.empty()) {
        return Verdict::fail("expected " + std::to_string(p.l()) + " trees and no maps");
    }
    if (Verdict v = check_roles(cert, d); !v) {
        return v;
    }
    TreeLayout layout;
    if (Verdict v = layout_trees(g, cert, layout); !v) {
        return v;
    }
    Verdict verdict;
    auto check = [&](const std::vector<char>& in) {
        ++verdict.subsets_checked;
        const auto [pieces, span] = layout_pieces(g, cert, layout, in);
        const long long size = std::count(in.begin(), in.end(), 1);
        if (span > 0 && pieces < p.l()) {
            verdict = Verdict::fail("an induced subgraph has only " + std::to_string(pieces) + " tree-pieces");
            return false;
        }
        if (size >= 2 && pieces != p.k() * size - span) {
            verdict = Verdict::fail("tree-piece count differs from kn' - m'");
            return false;
        }
        return true;
    };
    if (n <= options.exhaustive_limit && n < 63) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            if (!check(mask_indicator(mask, n))) {
                return verdict;
            }
        }
        return verdict;
    }
    verdict.exhaustive = false;
    std::mt19937_64 rng(options.seed);
    std::bernoulli_distribution coin(0.5);
    if (!check(std::vector<char>(static_cast<std::size_t>(n), 1))) {
        return verdict;
    }
    for (int i = 0; i < options.samples; ++i) {
        std::vector<char> in(static_cast<std::size_t>(n), 0);
        for (auto& b : in) {
            b = static_cast<char>(coin(rng));
        }
        if (std::find(in.begin(), in.end(), 1) == in.end()) {
            in[0] = 1;
        }
        if (!check(in)) {
            return verdict;
        }
    }
    return verdict;
}

}  // namespace

Verdict validate_certificate(const Multigraph& g, const Certificate& cert, const CertifyOptions& options) {
    if (Verdict v = check_edges(g, cert); !v) {
        return v;
    }
    const Decomposition d = cert.decomposition();
    switch (cert.kind) {
        case CertificateKind::Coloring:
            return certify_coloring(g, d, options);
        case CertificateKind::MapsAndTrees:
            return validate_maps_and_trees(g, cert, d);
        case CertificateKind::ProperLTk:
            return validate_proper_ltk(g, cert, d, options);
        case CertificateKind::GradedTight: {
            if (cert.params != SparsityParams(2, 0)) {
                return Verdict::fail("graded-tight certificates use k = 2, l = 0");
            }
            if (Verdict v = certify_coloring(g, d, options); !v) {
                return v;
            }
            const SliderVerdict s = graded_tight_check(g);
            return s.ok ? Verdict{} : Verdict::fail(s.detail);
        }
    }
    return Verdict::fail("unknown certificate kind");
}

int count_tree_pieces_exact(const Certificate& cert, const Multigraph& g, const VertexSubset& s) {
    if (s.size() < 2) {
        throw Error("tree-piece identity needs at least two vertices");
    }
    TreeLayout layout;
    if (Verdict v = layout_trees(g, cert, layout); !v) {
        throw Error("certificate invalid: " + v.detail);
    }
    const auto [pieces, span] = layout_pieces(g, cert, layout, s.indicator(g.vertex_count()));
    const long long expected = static_cast<long long>(cert.params.k()) * s.size() - span;
    if (pieces != expected) {
        throw Error("certificate invalid: " + std::to_string(pieces) + " tree-pieces, expected " +
                    std::to_string(expected));
    }
    return static_cast<int>(pieces);
}

}  // namespace sparsity
