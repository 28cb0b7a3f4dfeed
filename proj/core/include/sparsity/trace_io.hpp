#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "sparsity/pebble_game.hpp"

namespace sparsity {

// Trace files are JSON lines: a header {"type":"header","n":..,"k":..,"l":..},
// one object per move ({"op":"add_edge","v","w","color"} or
// {"op":"slide","edge","tail","head","color"}), and a footer
// {"type":"footer","moves":..,"hash":"<16 hex digits>"} holding the
// fingerprint of the final state.

struct Trace {
    int n = 1;
    SparsityParams params{1, 0};
    std::vector<MoveRecord> moves;
    std::optional<std::uint64_t> final_hash;
};

void write_trace(std::ostream& out, const Trace& trace);

/// Throws ParseError with the offending line number.
Trace parse_trace(std::istream& in);

}  // namespace sparsity
