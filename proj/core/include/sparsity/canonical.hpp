#pragma once

#include <optional>
#include <vector>

#include "sparsity/pebble_game.hpp"

namespace sparsity {

/// Canonical add-edge: a color present on both endpoints if one exists
/// (lowest such), otherwise the highest color present on {v, w}. A loop
/// always takes the highest color on its vertex.
MoveRecord canonical_add_edge(GameState& state, Vertex v, Vertex w);

/// The color canonical_add_edge would pick, or -1 when no pebble is present.
Color canonical_edge_color(const GameState& state, Vertex v, Vertex w);

/// Whether sliding `e` (tail -> head) with the pebble of color `cover` from
/// its head would close a monochromatic cycle: the tail lies in the cover-colored
/// tree rooted at the head.
bool creates_monochromatic_cycle(const GameState& state, EdgeId e, Color cover);

/// One slide of a canonical plan, in execution order.
struct PlannedSlide {
    EdgeId edge = 0;
    Color color = 0;

    friend bool operator==(const PlannedSlide&, const PlannedSlide&) = default;
};

/// A sequence of slides that brings one pebble to `source` from `target`
/// without closing any monochromatic cycle.
struct CanonicalPathPlan {
    Vertex source = 0;
    Vertex target = 0;
    std::vector<PlannedSlide> slides;
    /// Number of times a slide would have closed a cycle and was rerouted.
    int shortcuts = 0;
};

/// Plans a canonical pebble-bring for `source` on a copy of the state.
/// Returns nullopt exactly when find_pebble fails.
std::optional<CanonicalPathPlan> canonical_find_pebble(const GameState& state, Vertex source,
                                                       const VertexSubset& forbidden);

/// Executes a plan produced for the current state.
std::vector<MoveRecord> execute_plan(GameState& state, const CanonicalPathPlan& plan);

/// In-place version used by the engine: finds a path by depth-first search
/// and reverses it from the pebble end. Whenever the next slide would close a
/// cycle in the carried color, the path is cut at its first vertex inside
/// that color's tree and the pebble is walked down the tree instead.
std::optional<CanonicalPathPlan> canonical_bring_pebble(GameState& state, Vertex source,
                                                        const VertexSubset& forbidden,
                                                        SearchWorkspace* workspace = nullptr);

/// Gathers `target` pebbles on {v, w} with canonical slides only: v is
/// filled first, then w.
bool collect_pebbles_canonically(GameState& state, Vertex v, Vertex w, int target,
                                 SearchWorkspace* workspace = nullptr);

/// Canonical counterpart of update_components.
std::optional<VertexSubset> canonical_update_components(GameState& state, Vertex v, Vertex w,
                                                        SearchWorkspace* workspace = nullptr);

struct ConstructionResult {
    GameState state;
    /// accepted[j] is the input edge id that became edge j of the game graph.
    std::vector<EdgeId> accepted;
    std::vector<EdgeId> rejected;
    std::vector<MoveRecord> trace;

    bool all_accepted() const noexcept { return rejected.empty(); }
    bool tight() const noexcept { return all_accepted() && state.total_pebbles() == state.l(); }
};

struct GameOptions {
    bool record_trace = false;
    /// Use component tags to reject edges without a search.
    bool use_components = true;
    /// Extra hooks (invariant monitors, move counters).
    std::vector<MoveObserver*> observers;
};

/// Incremental canonical pebble game.
class CanonicalGame {
public:
    CanonicalGame(int n, SparsityParams params, GameOptions options = {});

    /// Attempts to insert edge uv; returns whether it was accepted.
    bool try_add_edge(Vertex u, Vertex v);

    const GameState& state() const noexcept { return state_; }
    GameState& mutable_state() noexcept { return state_; }
    std::vector<MoveRecord> take_trace() { return std::move(recorder_.moves); }
    int fast_rejections() const noexcept { return fast_rejections_; }

private:
    GameState state_;
    GameOptions options_;
    SearchWorkspace workspace_;
    MoveRecorder recorder_;
    int fast_rejections_ = 0;
};

/// Plays the canonical game over the edges of g in input order.
ConstructionResult run_canonical_game(const Multigraph& g, SparsityParams params, const GameOptions& options = {});

/// Plays the plain game (lowest available color, plain depth-first slides).
ConstructionResult run_pebble_game(const Multigraph& g, SparsityParams params, const GameOptions& options = {});

/// Whether some color class of the game graph contains a cycle (loops count).
bool has_monochromatic_cycle(const GameState& state, std::optional<Color> only_color = std::nullopt);

}  // namespace sparsity
