#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sparsity/pebble_game.hpp"

namespace sparsity {

struct InvariantCheck {
    bool ok = true;
    std::optional<VertexSubset> witness;
    std::string detail;
};

/// Result of evaluating the five game invariants on one configuration.
struct InvariantReport {
    InvariantCheck i1;  // at least l pebbles on V
    InvariantCheck i2;  // span(v) + out(v) + peb(v) = k
    InvariantCheck i3;  // span(S) + out(S) + peb(S) = k|S|
    InvariantCheck i4;  // out_c(v) + peb_c(v) = 1
    InvariantCheck i5;  // maximal monochromatic paths end at a pebble or cycle
    bool i3_exhaustive = false;
    int i3_subsets_checked = 0;

    bool ok() const noexcept { return i1.ok && i2.ok && i3.ok && i4.ok && i5.ok; }
    std::string summary() const;
};

struct InvariantOptions {
    /// I3 is checked over all subsets when n <= this, otherwise on samples.
    int exhaustive_limit = 8;
    int samples = 256;
    std::uint64_t seed = 0x5eed;
    bool check_i3 = true;
};

/// Evaluates every invariant directly from the edge list and pebble counts,
/// independently of the state's own bookkeeping.
InvariantReport check_invariants(const GameState& state, const InvariantOptions& options = {});

/// Observer that checks invariants after every move and counts failures.
class InvariantMonitor : public MoveObserver {
public:
    explicit InvariantMonitor(InvariantOptions options = {}) : options_(options) {}

    void after_move(const GameState& state, const MoveRecord& move) override;

    std::uint64_t moves_checked() const noexcept { return moves_checked_; }
    std::uint64_t violations() const noexcept { return violations_; }
    const std::optional<std::string>& first_violation() const noexcept { return first_violation_; }

private:
    InvariantOptions options_;
    std::uint64_t moves_checked_ = 0;
    std::uint64_t violations_ = 0;
    std::optional<std::string> first_violation_;
};

}  // namespace sparsity
