#pragma once

#include "sparsity/pebble_game.hpp"

namespace sparsity::testing {

inline constexpr Color kGray = 0;
inline constexpr Color kBlack = 1;

/// K4 under (2,2): a black 3-cycle on {1,2,3} and a gray star centered at 0.
inline GameState k4_star_and_cycle() {
    GameState s(4, SparsityParams(2, 2));
    s.add_edge(1, 2, kBlack);
    s.add_edge(2, 3, kBlack);
    s.add_edge(3, 1, kBlack);
    s.add_edge(1, 0, kGray);
    s.add_edge(2, 0, kGray);
    s.add_edge(3, 0, kGray);
    return s;
}

inline Multigraph k4() { return Multigraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

}  // namespace sparsity::testing
