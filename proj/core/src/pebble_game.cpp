#include "sparsity/pebble_game.hpp"

#include <algorithm>
#include <string>

namespace sparsity {

GameState::GameState(int n, SparsityParams params)
    : n_(n),
      params_(params),
      pebbles_(static_cast<std::size_t>(std::max(n, 0)) * static_cast<std::size_t>(params.k()), 1),
      out_(pebbles_.size(), kNoEdge),
      component_(static_cast<std::size_t>(std::max(n, 0)), 0) {
    if (n < 1) {
        throw Error("a game needs at least one vertex");
    }
}

GameState init_game(int n, SparsityParams params) { return GameState(n, params); }

void GameState::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) {
        throw IllegalMove("vertex " + std::to_string(v) + " out of range");
    }
}

void GameState::check_color(Color c) const {
    if (c < 0 || c >= params_.k()) {
        throw IllegalMove("color " + std::to_string(c) + " out of range");
    }
}

int GameState::pebbles(Vertex v) const {
    int total = 0;
    for (Color c = 0; c < k(); ++c) {
        total += pebbles_[slot(v, c)];
    }
    return total;
}

int GameState::total_pebbles() const {
    int total = 0;
    for (int p : pebbles_) {
        total += p;
    }
    return total;
}

Color GameState::lowest_pebble_color(Vertex v) const {
    for (Color c = 0; c < k(); ++c) {
        if (pebbles_[slot(v, c)] > 0) {
            return c;
        }
    }
    return -1;
}

int GameState::out_edges(Vertex v, EdgeId* buffer) const {
    int count = 0;
    for (Color c = 0; c < k(); ++c) {
        const EdgeId e = out_[slot(v, c)];
        if (e != kNoEdge) {
            buffer[count++] = e;
        }
    }
    std::sort(buffer, buffer + count);
    return count;
}

std::vector<EdgeId> GameState::out_edges(Vertex v) const {
    std::vector<EdgeId> out(static_cast<std::size_t>(k()));
    out.resize(static_cast<std::size_t>(out_edges(v, out.data())));
    return out;
}

void GameState::notify_before(const MoveRecord& move) const {
    for (MoveObserver* o : observers_) {
        o->before_move(*this, move);
    }
}

void GameState::notify_after(const MoveRecord& move) const {
    for (MoveObserver* o : observers_) {
        o->after_move(*this, move);
    }
}

MoveRecord GameState::add_edge(Vertex v, Vertex w, Color color) {
    check_vertex(v);
    check_vertex(w);
    check_color(color);
    if (pebbles_on(v, w) < l() + 1) {
        throw IllegalMove("insufficient pebbles");
    }
    Vertex tail = v;
    Vertex head = w;
    if (pebbles_[slot(v, color)] == 0) {
        if (pebbles_[slot(w, color)] == 0) {
            throw IllegalMove("color not available");
        }
        std::swap(tail, head);
    }
    if (out_[slot(tail, color)] != kNoEdge) {
        throw IllegalMove("vertex already has an out-edge of that color");
    }
    const MoveRecord move = AddEdgeMove{v, w, color};
    notify_before(move);
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({tail, head, color});
    pebbles_[slot(tail, color)] -= 1;
    out_[slot(tail, color)] = id;
    notify_after(move);
    return move;
}

MoveRecord GameState::pebble_slide(EdgeId e, Color color) {
    if (e < 0 || e >= edge_count()) {
        throw IllegalMove("edge " + std::to_string(e) + " does not exist");
    }
    check_color(color);
    const DirectedEdge old = edges_[static_cast<std::size_t>(e)];
    if (pebbles_[slot(old.head, color)] == 0) {
        throw IllegalMove("no pebble of color " + std::to_string(color) + " on vertex " + std::to_string(old.head));
    }
    if (old.tail != old.head && out_[slot(old.head, color)] != kNoEdge) {
        throw IllegalMove("vertex already has an out-edge of that color");
    }
    const MoveRecord move = SlideMove{e, old.tail, old.head, color};
    notify_before(move);
    out_[slot(old.tail, old.color)] = kNoEdge;
    pebbles_[slot(old.tail, old.color)] += 1;
    pebbles_[slot(old.head, color)] -= 1;
    out_[slot(old.head, color)] = e;
    edges_[static_cast<std::size_t>(e)] = {old.head, old.tail, color};
    notify_after(move);
    return move;
}

void GameState::apply(const MoveRecord& move) {
    if (const auto* add = std::get_if<AddEdgeMove>(&move)) {
        add_edge(add->v, add->w, add->color);
        return;
    }
    const auto& slide = std::get<SlideMove>(move);
    if (slide.edge < 0 || slide.edge >= edge_count()) {
        throw IllegalMove("edge " + std::to_string(slide.edge) + " does not exist");
    }
    const DirectedEdge& cur = edges_[static_cast<std::size_t>(slide.edge)];
    if (cur.tail != slide.tail || cur.head != slide.head) {
        throw IllegalMove("edge " + std::to_string(slide.edge) + " is not oriented as recorded");
    }
    pebble_slide(slide.edge, slide.color);
}

int GameState::assign_component(const std::vector<Vertex>& members) {
    const int id = next_component_++;
    for (Vertex v : members) {
        component_[static_cast<std::size_t>(v)] = id;
    }
    return id;
}

void GameState::relax_l(int new_l) {
    if (new_l > params_.l()) {
        throw Error("relax_l can only lower l");
    }
    params_ = SparsityParams(params_.k(), new_l);
    // Blocks under the old l are not blocks under the new one.
    std::fill(component_.begin(), component_.end(), 0);
}

void GameState::add_observer(MoveObserver* observer) { observers_.push_back(observer); }

std::uint64_t GameState::fingerprint() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::int64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= static_cast<std::uint64_t>((x >> (8 * i)) & 0xff);
            h *= 1099511628211ULL;
        }
    };
    mix(n_);
    mix(params_.k());
    mix(params_.l());
    mix(edge_count());
    for (const DirectedEdge& e : edges_) {
        mix(e.tail);
        mix(e.head);
        mix(e.color);
    }
    for (int p : pebbles_) {
        mix(p);
    }
    return h;
}

bool operator==(const GameState& a, const GameState& b) {
    return a.n_ == b.n_ && a.params_ == b.params_ && a.edges_ == b.edges_ && a.pebbles_ == b.pebbles_ &&
           a.out_ == b.out_;
}

void SearchWorkspace::prepare(int n) {
    const auto size = static_cast<std::size_t>(n);
    if (mark.size() < size) {
        mark.assign(size, 0);
        parent.assign(size, kNoEdge);
        memo_mark.assign(size, 0);
        memo_value.assign(size, 0);
        epoch = 0;
        memo_epoch = 0;
    }
}

std::uint32_t SearchWorkspace::next_epoch() {
    if (++epoch == 0) {
        std::fill(mark.begin(), mark.end(), 0);
        epoch = 1;
    }
    return epoch;
}

PebbleSearch find_pebble(const GameState& state, Vertex source, const VertexSubset& forbidden,
                         SearchWorkspace* workspace) {
    SearchWorkspace local;
    SearchWorkspace& ws = workspace != nullptr ? *workspace : local;
    ws.prepare(state.vertex_count());
    const std::uint32_t epoch = ws.next_epoch();

    const auto& banned = forbidden.members();
    auto is_target = [&](Vertex x) {
        return state.pebbles(x) > 0 && std::find(banned.begin(), banned.end(), x) == banned.end();
    };

    PebbleSearch result;
    struct Frame {
        Vertex vertex;
        int next;
        int count;
        EdgeId out[8];
    };
    // Out-degree is at most k; fall back to a heap buffer for very large k.
    std::vector<Frame> stack;
    std::vector<EdgeId> wide;
    const bool use_wide = state.k() > 8;

    auto push = [&](Vertex x) {
        ws.mark[static_cast<std::size_t>(x)] = epoch;
        result.reached.push_back(x);
        Frame f{x, 0, 0, {}};
        if (!use_wide) {
            f.count = state.out_edges(x, f.out);
        }
        stack.push_back(f);
    };

    if (is_target(source)) {
        result.reached.push_back(source);
        result.path = PebblePath{source, {}};
        return result;
    }
    push(source);
    while (!stack.empty()) {
        Frame& top = stack.back();
        EdgeId next_edge = kNoEdge;
        if (use_wide) {
            wide = state.out_edges(top.vertex);
            if (top.next < static_cast<int>(wide.size())) {
                next_edge = wide[static_cast<std::size_t>(top.next)];
            }
        } else if (top.next < top.count) {
            next_edge = top.out[top.next];
        }
        if (next_edge == kNoEdge) {
            stack.pop_back();
            continue;
        }
        ++top.next;
        const Vertex head = state.edge(next_edge).head;
        if (ws.mark[static_cast<std::size_t>(head)] == epoch) {
            continue;
        }
        ws.parent[static_cast<std::size_t>(head)] = next_edge;
        if (is_target(head)) {
            result.reached.push_back(head);
            PebblePath path{source, {}};
            Vertex x = head;
            while (x != source) {
                const EdgeId pe = ws.parent[static_cast<std::size_t>(x)];
                path.edges.push_back(pe);
                x = state.edge(pe).tail;
            }
            std::reverse(path.edges.begin(), path.edges.end());
            result.path = std::move(path);
            return result;
        }
        push(head);
    }
    return result;
}

std::vector<MoveRecord> bring_pebble(GameState& state, const PebblePath& path) {
    std::vector<MoveRecord> moves;
    if (path.edges.empty()) {
        return moves;
    }
    Vertex at = path.source;
    for (EdgeId e : path.edges) {
        if (e < 0 || e >= state.edge_count()) {
            throw IllegalMove("stale path: edge " + std::to_string(e) + " does not exist");
        }
        const DirectedEdge& de = state.edge(e);
        if (de.tail != at) {
            throw IllegalMove("stale path: edge " + std::to_string(e) + " is not oriented as listed");
        }
        at = de.head;
    }
    Color carried = state.lowest_pebble_color(at);
    if (carried < 0) {
        throw IllegalMove("stale path: no pebble at the end of the path");
    }
    for (auto it = path.edges.rbegin(); it != path.edges.rend(); ++it) {
        const Color displaced = state.edge(*it).color;
        moves.push_back(state.pebble_slide(*it, carried));
        carried = displaced;
    }
    return moves;
}

bool collect_pebbles(GameState& state, Vertex v, Vertex w, int target, SearchWorkspace* workspace) {
    SearchWorkspace local;
    SearchWorkspace& ws = workspace != nullptr ? *workspace : local;
    const VertexSubset forbidden{v, w};
    for (Vertex x : {v, w}) {
        while (state.pebbles_on(v, w) < target) {
            const auto found = find_pebble(state, x, forbidden, &ws);
            if (!found.path) {
                break;
            }
            bring_pebble(state, *found.path);
        }
        if (v == w) {
            break;
        }
    }
    return state.pebbles_on(v, w) >= target;
}

std::optional<VertexSubset> detect_block(GameState& state, Vertex v, Vertex w) {
    if (state.pebbles_on(v, w) != state.l()) {
        return std::nullopt;
    }
    const int n = state.vertex_count();
    // Vertices that can reach a pebble off {v, w} are outside every block
    // containing v and w; the rest form the maximal such block.
    std::vector<std::vector<EdgeId>> incoming(static_cast<std::size_t>(n));
    for (EdgeId e = 0; e < state.edge_count(); ++e) {
        const DirectedEdge& de = state.edge(e);
        if (de.tail != de.head) {
            incoming[static_cast<std::size_t>(de.head)].push_back(e);
        }
    }
    std::vector<char> escapes(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> queue;
    for (Vertex x = 0; x < n; ++x) {
        if (x != v && x != w && state.pebbles(x) > 0) {
            escapes[static_cast<std::size_t>(x)] = 1;
            queue.push_back(x);
        }
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (EdgeId e : incoming[static_cast<std::size_t>(queue[i])]) {
            const Vertex t = state.edge(e).tail;
            if (!escapes[static_cast<std::size_t>(t)]) {
                escapes[static_cast<std::size_t>(t)] = 1;
                queue.push_back(t);
            }
        }
    }
    if (escapes[static_cast<std::size_t>(v)] || escapes[static_cast<std::size_t>(w)]) {
        return std::nullopt;
    }
    std::vector<Vertex> members;
    for (Vertex x = 0; x < n; ++x) {
        if (!escapes[static_cast<std::size_t>(x)]) {
            members.push_back(x);
        }
    }
    state.assign_component(members);
    return VertexSubset(std::move(members));
}

std::optional<VertexSubset> update_components(GameState& state, Vertex v, Vertex w, SearchWorkspace* workspace) {
    if (collect_pebbles(state, v, w, state.l() + 1, workspace)) {
        return std::nullopt;
    }
    return detect_block(state, v, w);
}

bool reject_fast(const GameState& state, Vertex v, Vertex w) {
    const int c = state.component(v);
    return c != 0 && c == state.component(w);
}

GameState replay(int n, SparsityParams params, const std::vector<MoveRecord>& moves) {
    GameState state(n, params);
    for (std::size_t i = 0; i < moves.size(); ++i) {
        try {
            state.apply(moves[i]);
        } catch (const IllegalMove& e) {
            throw IllegalMove("move " + std::to_string(i) + ": " + e.what());
        }
    }
    return state;
}

}  // namespace sparsity
