#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "sparsity/graph.hpp"

namespace sparsity {

/// An edge of the directed game graph H; `color` is the pebble covering it.
struct DirectedEdge {
    Vertex tail = 0;
    Vertex head = 0;
    Color color = 0;

    friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

/// Add-edge: v and w as requested; the tail is v when v holds `color`, else w.
struct AddEdgeMove {
    Vertex v = 0;
    Vertex w = 0;
    Color color = 0;

    friend bool operator==(const AddEdgeMove&, const AddEdgeMove&) = default;
};

/// Pebble-slide on `edge`, which pointed tail -> head before the move and is
/// covered afterwards by the pebble of `color` taken from head.
struct SlideMove {
    EdgeId edge = 0;
    Vertex tail = 0;
    Vertex head = 0;
    Color color = 0;

    friend bool operator==(const SlideMove&, const SlideMove&) = default;
};

using MoveRecord = std::variant<AddEdgeMove, SlideMove>;

class GameState;

/// Hooks called around every move applied to a GameState.
class MoveObserver {
public:
    virtual ~MoveObserver() = default;
    virtual void before_move(const GameState& /*state*/, const MoveRecord& /*move*/) {}
    virtual void after_move(const GameState& /*state*/, const MoveRecord& /*move*/) {}
};

/// Configuration of the pebble game with colors: the directed graph H, the
/// colored pebbles on vertices and the pebble on every edge.
///
/// Every vertex starts with one pebble of each color 0..k-1. For each vertex
/// and color exactly one of "pebble present" and "out-edge of that color"
/// holds, so the out-edge of color c at v is stored directly.
class GameState {
public:
    GameState(int n, SparsityParams params);

    const SparsityParams& params() const noexcept { return params_; }
    int k() const noexcept { return params_.k(); }
    int l() const noexcept { return params_.l(); }
    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    const std::vector<DirectedEdge>& edges() const noexcept { return edges_; }
    const DirectedEdge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }

    int pebbles(Vertex v, Color c) const { return pebbles_[slot(v, c)]; }
    int pebbles(Vertex v) const;
    int pebbles_on(Vertex v, Vertex w) const { return v == w ? pebbles(v) : pebbles(v) + pebbles(w); }
    int total_pebbles() const;
    /// Lowest color with a pebble on v, or -1.
    Color lowest_pebble_color(Vertex v) const;

    /// Out-edge of color c leaving v (loops included), or kNoEdge.
    EdgeId out_edge(Vertex v, Color c) const { return out_[slot(v, c)]; }
    /// Out-edges of v in ascending id order.
    std::vector<EdgeId> out_edges(Vertex v) const;
    /// Writes out-edges of v in ascending id order; returns the count.
    int out_edges(Vertex v, EdgeId* buffer) const;

    /// Throws IllegalMove("insufficient pebbles") or ("color not available").
    MoveRecord add_edge(Vertex v, Vertex w, Color color);
    /// Throws IllegalMove when `head` has no pebble of `color`.
    MoveRecord pebble_slide(EdgeId e, Color color);
    /// Re-applies a recorded move; throws IllegalMove if it does not fit.
    void apply(const MoveRecord& move);

    int component(Vertex v) const { return component_[static_cast<std::size_t>(v)]; }
    int component_count() const noexcept { return next_component_ - 1; }
    /// Tags every member with a fresh component id.
    int assign_component(const std::vector<Vertex>& members);

    /// Lowers l for the same k: a game played under (k, l) is also a legal
    /// game under (k, l') for every l' <= l.
    void relax_l(int new_l);

    void add_observer(MoveObserver* observer);
    void clear_observers() { observers_.clear(); }

    /// Raw pebble mutation without bookkeeping; only for building corrupt
    /// states when testing the invariant checker.
    void set_pebble_count_unchecked(Vertex v, Color c, int count) { pebbles_[slot(v, c)] = count; }

    /// Order-sensitive FNV-1a hash of edges and pebble placement.
    std::uint64_t fingerprint() const;

    friend bool operator==(const GameState& a, const GameState& b);

private:
    std::size_t slot(Vertex v, Color c) const {
        return static_cast<std::size_t>(v) * static_cast<std::size_t>(params_.k()) + static_cast<std::size_t>(c);
    }
    void check_vertex(Vertex v) const;
    void check_color(Color c) const;
    void notify_before(const MoveRecord& move) const;
    void notify_after(const MoveRecord& move) const;

    int n_;
    SparsityParams params_;
    std::vector<DirectedEdge> edges_;
    std::vector<int> pebbles_;
    std::vector<EdgeId> out_;
    std::vector<int> component_;
    int next_component_ = 1;
    std::vector<MoveObserver*> observers_;
};

/// init_game: n vertices, no edges, one pebble of each color per vertex.
GameState init_game(int n, SparsityParams params);

/// Scratch space for repeated searches; reuse it to keep searches
/// proportional to the explored region.
class SearchWorkspace {
public:
    void prepare(int n);
    std::uint32_t next_epoch();

    std::vector<std::uint32_t> mark;
    std::vector<EdgeId> parent;
    std::vector<std::uint32_t> memo_mark;
    std::vector<char> memo_value;
    std::uint32_t epoch = 0;
    std::uint32_t memo_epoch = 0;
};

/// A directed path in H starting at `source`.
struct PebblePath {
    Vertex source = 0;
    std::vector<EdgeId> edges;

    bool empty() const noexcept { return edges.empty(); }
    Vertex end(const GameState& state) const { return edges.empty() ? source : state.edge(edges.back()).head; }
};

struct PebbleSearch {
    std::optional<PebblePath> path;
    /// Vertices visited by the search; the full reachable set on failure.
    std::vector<Vertex> reached;
};

/// Depth-first search from `source` along out-edges (ascending edge id) for a
/// vertex outside `forbidden` that carries a pebble.
PebbleSearch find_pebble(const GameState& state, Vertex source, const VertexSubset& forbidden,
                         SearchWorkspace* workspace = nullptr);

/// Reverses `path` with pebble-slides, last edge first, carrying one pebble
/// from the end of the path to its source. The first slide uses the lowest
/// color present at the end; later slides reuse the pebble just delivered.
std::vector<MoveRecord> bring_pebble(GameState& state, const PebblePath& path);

/// Plain (non-canonical) collection of `target` pebbles on {v, w}: fills v
/// first, then w. Pebbles already on {v, w} never leave. Returns whether the
/// target was reached.
bool collect_pebbles(GameState& state, Vertex v, Vertex w, int target, SearchWorkspace* workspace = nullptr);

/// Tags the maximal block containing v and w, if one exists in the current
/// configuration: requires exactly l pebbles on {v, w} and none reachable
/// elsewhere. Returns the block.
std::optional<VertexSubset> detect_block(GameState& state, Vertex v, Vertex w);

/// After an accepted edge vw: collects l+1 pebbles on {v, w} and, if that
/// fails, tags the block found.
std::optional<VertexSubset> update_components(GameState& state, Vertex v, Vertex w,
                                              SearchWorkspace* workspace = nullptr);

/// True when v and w share a component, so vw can be rejected without search.
bool reject_fast(const GameState& state, Vertex v, Vertex w);

/// Collects move records, optionally for a replayable trace.
class MoveRecorder : public MoveObserver {
public:
    void after_move(const GameState&, const MoveRecord& move) override { moves.push_back(move); }
    std::vector<MoveRecord> moves;
};

/// Replays `moves` from init_game; throws IllegalMove with the move index on failure.
GameState replay(int n, SparsityParams params, const std::vector<MoveRecord>& moves);

}  // namespace sparsity
