#include "sparsity/canonical.hpp"

#include <algorithm>

namespace sparsity {

Color canonical_edge_color(const GameState& state, Vertex v, Vertex w) {
    const int k = state.k();
    if (v != w) {
        for (Color c = 0; c < k; ++c) {
            if (state.pebbles(v, c) > 0 && state.pebbles(w, c) > 0) {
                return c;
            }
        }
    }
    for (Color c = k - 1; c >= 0; --c) {
        if (state.pebbles(v, c) > 0 || state.pebbles(w, c) > 0) {
            return c;
        }
    }
    return -1;
}

MoveRecord canonical_add_edge(GameState& state, Vertex v, Vertex w) {
    if (state.pebbles_on(v, w) < state.l() + 1) {
        throw IllegalMove("insufficient pebbles");
    }
    return state.add_edge(v, w, canonical_edge_color(state, v, w));
}

bool creates_monochromatic_cycle(const GameState& state, EdgeId e, Color cover) {
    const DirectedEdge& edge = state.edge(e);
    if (edge.color == cover) {
        return false;
    }
    // The slide leaves the cover-colored structure intact except for the new
    // edge head -> tail; a cycle closes iff the tail already reaches the head.
    Vertex x = edge.tail;
    for (int steps = 0; steps <= state.vertex_count(); ++steps) {
        if (x == edge.head) {
            return true;
        }
        const EdgeId next = state.out_edge(x, cover);
        if (next == kNoEdge) {
            return false;
        }
        x = state.edge(next).head;
    }
    return false;
}

namespace {

/// Whether the cover-colored path from x ends at root. Results are memoized
/// in the workspace for the current memo epoch.
bool reaches_root(const GameState& state, Vertex x, Color color, Vertex root, SearchWorkspace& ws,
                  std::vector<Vertex>& trail) {
    trail.clear();
    bool result = false;
    while (true) {
        const auto xi = static_cast<std::size_t>(x);
        if (x == root) {
            result = true;
            break;
        }
        if (ws.memo_mark[xi] == ws.memo_epoch) {
            // value 2 marks a vertex on the current trail: a cycle.
            result = ws.memo_value[xi] == 1;
            break;
        }
        ws.memo_mark[xi] = ws.memo_epoch;
        ws.memo_value[xi] = 2;
        trail.push_back(x);
        const EdgeId next = state.out_edge(x, color);
        if (next == kNoEdge) {
            break;
        }
        x = state.edge(next).head;
    }
    for (Vertex t : trail) {
        ws.memo_value[static_cast<std::size_t>(t)] = result ? 1 : 0;
    }
    return result;
}

std::uint32_t next_memo_epoch(SearchWorkspace& ws) {
    if (++ws.memo_epoch == 0) {
        std::fill(ws.memo_mark.begin(), ws.memo_mark.end(), 0);
        ws.memo_epoch = 1;
    }
    return ws.memo_epoch;
}

}  // namespace

std::optional<CanonicalPathPlan> canonical_bring_pebble(GameState& state, Vertex source,
                                                        const VertexSubset& forbidden,
                                                        SearchWorkspace* workspace) {
    SearchWorkspace local;
    SearchWorkspace& ws = workspace != nullptr ? *workspace : local;
    ws.prepare(state.vertex_count());

    const PebbleSearch search = find_pebble(state, source, forbidden, &ws);
    if (!search.path) {
        return std::nullopt;
    }
    const PebblePath& path = *search.path;
    CanonicalPathPlan plan;
    plan.source = source;
    plan.target = path.end(state);
    if (path.empty()) {
        return plan;
    }

    // vertices[i] is the tail of path.edges[i]; vertices.back() holds the pebble.
    std::vector<Vertex> vertices;
    vertices.reserve(path.edges.size() + 1);
    vertices.push_back(source);
    for (EdgeId e : path.edges) {
        vertices.push_back(state.edge(e).head);
    }

    const Vertex end = vertices.back();
    const Color last_color = state.edge(path.edges.back()).color;
    Color carried = state.pebbles(end, last_color) > 0 ? last_color : state.lowest_pebble_color(end);

    auto slide = [&](EdgeId e, Color c) {
        state.pebble_slide(e, c);
        plan.slides.push_back({e, c});
    };

    std::vector<Vertex> trail;
    auto i = static_cast<std::ptrdiff_t>(path.edges.size()) - 1;
    while (i >= 0) {
        const EdgeId e = path.edges[static_cast<std::size_t>(i)];
        if (!creates_monochromatic_cycle(state, e, carried)) {
            const Color displaced = state.edge(e).color;
            slide(e, carried);
            carried = displaced;
            --i;
            continue;
        }

        // The tail of e sits in the carried-color tree rooted at the head.
        // Cut the path at its first vertex z inside that tree and bring the
        // pebble from the root down to z along tree edges; those slides keep
        // their color, so no cycle can close.
        ++plan.shortcuts;
        const Vertex root = vertices[static_cast<std::size_t>(i) + 1];
        next_memo_epoch(ws);
        std::ptrdiff_t cut = 0;
        while (!reaches_root(state, vertices[static_cast<std::size_t>(cut)], carried, root, ws, trail)) {
            ++cut;
        }
        std::vector<EdgeId> tree_path;
        for (Vertex x = vertices[static_cast<std::size_t>(cut)]; x != root;) {
            const EdgeId te = state.out_edge(x, carried);
            tree_path.push_back(te);
            x = state.edge(te).head;
        }
        for (auto it = tree_path.rbegin(); it != tree_path.rend(); ++it) {
            slide(*it, carried);
        }
        i = cut - 1;
    }
    return plan;
}

std::optional<CanonicalPathPlan> canonical_find_pebble(const GameState& state, Vertex source,
                                                       const VertexSubset& forbidden) {
    GameState scratch = state;
    scratch.clear_observers();
    return canonical_bring_pebble(scratch, source, forbidden);
}

std::vector<MoveRecord> execute_plan(GameState& state, const CanonicalPathPlan& plan) {
    std::vector<MoveRecord> moves;
    moves.reserve(plan.slides.size());
    for (const PlannedSlide& s : plan.slides) {
        moves.push_back(state.pebble_slide(s.edge, s.color));
    }
    return moves;
}

bool collect_pebbles_canonically(GameState& state, Vertex v, Vertex w, int target, SearchWorkspace* workspace) {
    SearchWorkspace local;
    SearchWorkspace& ws = workspace != nullptr ? *workspace : local;
    const VertexSubset forbidden{v, w};
    for (Vertex x : {v, w}) {
        while (state.pebbles_on(v, w) < target) {
            if (!canonical_bring_pebble(state, x, forbidden, &ws)) {
                break;
            }
        }
        if (v == w) {
            break;
        }
    }
    return state.pebbles_on(v, w) >= target;
}

std::optional<VertexSubset> canonical_update_components(GameState& state, Vertex v, Vertex w,
                                                        SearchWorkspace* workspace) {
    if (collect_pebbles_canonically(state, v, w, state.l() + 1, workspace)) {
        return std::nullopt;
    }
    return detect_block(state, v, w);
}

CanonicalGame::CanonicalGame(int n, SparsityParams params, GameOptions options)
    : state_(n, params), options_(std::move(options)) {
    for (MoveObserver* o : options_.observers) {
        state_.add_observer(o);
    }
    if (options_.record_trace) {
        state_.add_observer(&recorder_);
    }
    workspace_.prepare(n);
}

bool CanonicalGame::try_add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= state_.vertex_count() || v >= state_.vertex_count()) {
        throw Error("edge endpoint out of range");
    }
    // A loop spans one vertex, which allows at most k - l edges.
    if (u == v && state_.l() >= state_.k()) {
        return false;
    }
    if (options_.use_components && reject_fast(state_, u, v)) {
        ++fast_rejections_;
        return false;
    }
    const int target = state_.l() + 1;
    if (!collect_pebbles_canonically(state_, u, v, target, &workspace_)) {
        return false;
    }
    canonical_add_edge(state_, u, v);
    if (options_.use_components) {
        canonical_update_components(state_, u, v, &workspace_);
    }
    return true;
}

ConstructionResult run_canonical_game(const Multigraph& g, SparsityParams params, const GameOptions& options) {
    CanonicalGame game(std::max(g.vertex_count(), 1), params, options);
    std::vector<EdgeId> accepted;
    std::vector<EdgeId> rejected;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        (game.try_add_edge(e.u, e.v) ? accepted : rejected).push_back(id);
    }
    std::vector<MoveRecord> trace = game.take_trace();
    GameState state = game.state();
    state.clear_observers();
    return ConstructionResult{std::move(state), std::move(accepted), std::move(rejected), std::move(trace)};
}

ConstructionResult run_pebble_game(const Multigraph& g, SparsityParams params, const GameOptions& options) {
    GameState state(std::max(g.vertex_count(), 1), params);
    MoveRecorder recorder;
    for (MoveObserver* o : options.observers) {
        state.add_observer(o);
    }
    if (options.record_trace) {
        state.add_observer(&recorder);
    }
    SearchWorkspace ws;
    std::vector<EdgeId> accepted;
    std::vector<EdgeId> rejected;
    const int target = params.l() + 1;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        if ((e.is_loop() && params.l() >= params.k()) ||
            (options.use_components && reject_fast(state, e.u, e.v)) ||
            !collect_pebbles(state, e.u, e.v, target, &ws)) {
            rejected.push_back(id);
            continue;
        }
        Color c = state.lowest_pebble_color(e.u);
        if (c < 0) {
            c = state.lowest_pebble_color(e.v);
        }
        state.add_edge(e.u, e.v, c);
        accepted.push_back(id);
        if (options.use_components) {
            update_components(state, e.u, e.v, &ws);
        }
    }
    state.clear_observers();
    return ConstructionResult{std::move(state), std::move(accepted), std::move(rejected), std::move(recorder.moves)};
}

bool has_monochromatic_cycle(const GameState& state, std::optional<Color> only_color) {
    const int n = state.vertex_count();
    std::vector<int> mark(static_cast<std::size_t>(n));
    for (Color c = 0; c < state.k(); ++c) {
        if (only_color && *only_color != c) {
            continue;
        }
        std::fill(mark.begin(), mark.end(), 0);
        int walk = 0;
        for (Vertex start = 0; start < n; ++start) {
            if (mark[static_cast<std::size_t>(start)] != 0) {
                continue;
            }
            ++walk;
            Vertex x = start;
            while (true) {
                auto& m = mark[static_cast<std::size_t>(x)];
                if (m == walk) {
                    return true;
                }
                if (m != 0) {
                    break;
                }
                m = walk;
                const EdgeId e = state.out_edge(x, c);
                if (e == kNoEdge) {
                    break;
                }
                x = state.edge(e).head;
            }
        }
    }
    return false;
}

}  // namespace sparsity
