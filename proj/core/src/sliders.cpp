#include "sparsity/sliders.hpp"

#include <array>
#include <deque>
#include <optional>

#include "sparsity/canonical.hpp"

namespace sparsity {

namespace {

void check_loop_counts(const Multigraph& g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.loop_count(v) > 2) {
            throw Error("malformed: vertex " + std::to_string(v) + " carries more than two loops");
        }
    }
}

struct GradedRun {
    SliderVerdict verdict;
    std::optional<GameState> state;
    /// order[j] is the input id of game edge j.
    std::vector<EdgeId> order;
};

GradedRun run_graded(const Multigraph& g) {
    check_loop_counts(g);
    const int n = g.vertex_count();
    if (n == 0) {
        return {{true, "empty graph"}, std::nullopt, {}};
    }
    std::vector<EdgeId> order;
    Multigraph base(n);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!g.edge(e).is_loop()) {
            base.add_edge(g.edge(e).u, g.edge(e).v);
            order.push_back(e);
        }
    }
    ConstructionResult result = run_canonical_game(base, SparsityParams(2, 3));
    if (!result.all_accepted()) {
        return {{false, "loopless part is not (2,3)-sparse"}, std::nullopt, {}};
    }
    if (g.edge_count() != 2 * n) {
        return {{false, "edge and loop count " + std::to_string(g.edge_count()) + " differs from 2n"}, std::nullopt, {}};
    }
    // A (2,3) game is also a legal (2,0) game; the loops take the remaining pebbles.
    GameState& state = result.state;
    state.relax_l(0);
    SearchWorkspace ws;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        if (!edge.is_loop()) {
            continue;
        }
        if (!collect_pebbles_canonically(state, edge.u, edge.u, 1, &ws)) {
            return {{false, "loop at vertex " + std::to_string(edge.u) + " breaks (2,0)-sparsity"}, std::nullopt, {}};
        }
        canonical_add_edge(state, edge.u, edge.u);
        order.push_back(e);
    }
    return {{true, "graded-tight"}, std::move(state), std::move(order)};
}

}  // namespace

SliderVerdict graded_tight_check(const Multigraph& g) { return run_graded(g).verdict; }

std::optional<Certificate> graded_tight_certificate(const Multigraph& g) {
    GradedRun run = run_graded(g);
    if (!run.verdict.ok) {
        return std::nullopt;
    }
    Certificate cert;
    cert.kind = CertificateKind::GradedTight;
    cert.params = SparsityParams(2, 0);
    cert.n = g.vertex_count();
    cert.edges.resize(static_cast<std::size_t>(g.edge_count()));
    for (std::size_t j = 0; j < run.order.size(); ++j) {
        const EdgeId id = run.order[j];
        const DirectedEdge& de = run.state->edge(static_cast<EdgeId>(j));
        cert.edges[static_cast<std::size_t>(id)] = {id, g.edge(id).u, g.edge(id).v, de.color, de.tail};
    }
    return cert;
}

namespace {

/// Graph on the non-loop edges where every vertex carrying a loop of the
/// given axis is merged into one node.
struct ContractedGraph {
    std::vector<int> node;  // vertex -> node id
    int nodes = 0;
};

ContractedGraph contract(int n, const std::vector<char>& has_loop) {
    ContractedGraph cg;
    cg.node.assign(static_cast<std::size_t>(n), -1);
    int merged = -1;
    for (Vertex v = 0; v < n; ++v) {
        if (has_loop[static_cast<std::size_t>(v)]) {
            if (merged < 0) {
                merged = cg.nodes++;
            }
            cg.node[static_cast<std::size_t>(v)] = merged;
        } else {
            cg.node[static_cast<std::size_t>(v)] = cg.nodes++;
        }
    }
    return cg;
}

/// Edmonds' matroid partition for two graphic matroids: places every edge
/// into one of two forests, or reports that no such placement exists.
class TwoForestPartition {
public:
    TwoForestPartition(std::vector<std::array<int, 2>> ends_x, std::vector<std::array<int, 2>> ends_y, int nodes_x,
                       int nodes_y)
        : nodes_{nodes_x, nodes_y}, owner_(ends_x.size(), -1) {
        ends_[0] = std::move(ends_x);
        ends_[1] = std::move(ends_y);
    }

    bool run() {
        for (std::size_t e = 0; e < owner_.size(); ++e) {
            if (!augment(static_cast<int>(e))) {
                return false;
            }
        }
        return true;
    }

    int owner(int e) const { return owner_[static_cast<std::size_t>(e)]; }

private:
    /// Edges of forest c on the path between a and b, or nullopt when a and
    /// b lie in different trees of forest c.
    std::optional<std::vector<int>> forest_path(int c, int a, int b) const {
        const auto& ends = ends_[static_cast<std::size_t>(c)];
        const int nodes = nodes_[static_cast<std::size_t>(c)];
        if (a == b) {
            return std::vector<int>{};
        }
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(nodes));
        for (std::size_t e = 0; e < owner_.size(); ++e) {
            if (owner_[e] == c) {
                adj[static_cast<std::size_t>(ends[e][0])].push_back(static_cast<int>(e));
                adj[static_cast<std::size_t>(ends[e][1])].push_back(static_cast<int>(e));
            }
        }
        std::vector<int> via(static_cast<std::size_t>(nodes), -2);
        via[static_cast<std::size_t>(a)] = -1;
        std::deque<int> queue{a};
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            if (x == b) {
                break;
            }
            for (int e : adj[static_cast<std::size_t>(x)]) {
                const auto& en = ends[static_cast<std::size_t>(e)];
                const int y = en[0] == x ? en[1] : en[0];
                if (via[static_cast<std::size_t>(y)] == -2) {
                    via[static_cast<std::size_t>(y)] = e;
                    queue.push_back(y);
                }
            }
        }
        if (via[static_cast<std::size_t>(b)] == -2) {
            return std::nullopt;
        }
        std::vector<int> path;
        for (int x = b; x != a;) {
            const int e = via[static_cast<std::size_t>(x)];
            path.push_back(e);
            const auto& en = ends[static_cast<std::size_t>(e)];
            x = en[0] == x ? en[1] : en[0];
        }
        return path;
    }

    bool augment(int start) {
        // BFS over edges; parent[f] = edge that displaces f from its forest.
        const std::size_t m = owner_.size();
        std::vector<int> parent(m, -2);
        parent[static_cast<std::size_t>(start)] = -1;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            const int f = queue.front();
            queue.pop_front();
            for (int c = 0; c < 2; ++c) {
                if (owner_[static_cast<std::size_t>(f)] == c) {
                    continue;
                }
                const auto& en = ends_[static_cast<std::size_t>(c)][static_cast<std::size_t>(f)];
                const auto cycle = forest_path(c, en[0], en[1]);
                if (!cycle) {
                    apply(f, c, parent);
                    return true;
                }
                for (int g : *cycle) {
                    if (parent[static_cast<std::size_t>(g)] == -2) {
                        parent[static_cast<std::size_t>(g)] = f;
                        queue.push_back(g);
                    }
                }
            }
        }
        return false;
    }

    /// f joins forest c; each predecessor takes the place of the edge it displaced.
    void apply(int f, int c, const std::vector<int>& parent) {
        while (f >= 0) {
            const int displaced_from = owner_[static_cast<std::size_t>(f)];
            owner_[static_cast<std::size_t>(f)] = c;
            c = displaced_from;
            f = parent[static_cast<std::size_t>(f)];
        }
    }

    std::array<int, 2> nodes_;
    std::array<std::vector<std::array<int, 2>>, 2> ends_;
    std::vector<int> owner_;
};

}  // namespace

SliderVerdict axis_parallel_slider_check(const Multigraph& g, const std::vector<int>& loop_axis) {
    const int n = g.vertex_count();
    if (loop_axis.size() != g.edges().size()) {
        throw Error("malformed: one axis entry per edge expected");
    }
    std::array<std::vector<char>, 2> has_loop{std::vector<char>(static_cast<std::size_t>(n), 0),
                                              std::vector<char>(static_cast<std::size_t>(n), 0)};
    std::array<int, 2> loops{0, 0};
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!g.edge(e).is_loop()) {
            continue;
        }
        const int axis = loop_axis[static_cast<std::size_t>(e)];
        if (axis != kAxisX && axis != kAxisY) {
            throw Error("malformed: loop " + std::to_string(e) + " has axis " + std::to_string(axis));
        }
        char& slot = has_loop[static_cast<std::size_t>(axis)][static_cast<std::size_t>(g.edge(e).u)];
        if (slot) {
            throw Error("malformed: vertex " + std::to_string(g.edge(e).u) + " has two loops of one axis");
        }
        slot = 1;
        ++loops[static_cast<std::size_t>(axis)];
    }
    if (n == 0) {
        return {true, "empty graph"};
    }

    const Multigraph base = g.loopless_part();
    if (!run_canonical_game(base, SparsityParams(2, 3)).all_accepted()) {
        return {false, "loopless part is not (2,3)-sparse"};
    }
    if (g.edge_count() != 2 * n) {
        return {false, "edge and loop count " + std::to_string(g.edge_count()) + " differs from 2n"};
    }
    if (loops[0] == 0 || loops[1] == 0) {
        return {false, "some axis has no loop, so its trees cannot each span one"};
    }

    // Each c-forest whose trees hold exactly one c-loop is a spanning tree of
    // the graph with all c-loop vertices merged.
    std::array<ContractedGraph, 2> cg{contract(n, has_loop[0]), contract(n, has_loop[1])};
    std::array<std::vector<std::array<int, 2>>, 2> ends;
    for (const Edge& e : base.edges()) {
        for (int c = 0; c < 2; ++c) {
            const auto& node = cg[static_cast<std::size_t>(c)].node;
            ends[static_cast<std::size_t>(c)].push_back(
                {node[static_cast<std::size_t>(e.u)], node[static_cast<std::size_t>(e.v)]});
        }
    }
    TwoForestPartition partition(ends[0], ends[1], cg[0].nodes, cg[1].nodes);
    if (!partition.run()) {
        return {false, "no split into two forests with one loop per tree"};
    }
    return {true, "axis-parallel slider pinned"};
}

}  // namespace sparsity
