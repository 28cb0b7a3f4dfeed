#pragma once

#include <string>
#include <vector>

#include "sparsity/decomposition.hpp"

namespace sparsity {

struct SliderVerdict {
    bool ok = false;
    std::string detail;

    explicit operator bool() const noexcept { return ok; }
};

/// Loops model sliders. True iff the loopless part is (2,3)-sparse and the
/// whole graph is (2,0)-tight. Throws Error for more than two loops on a vertex.
SliderVerdict graded_tight_check(const Multigraph& g);

/// For a graded-tight graph, a (2,0) coloring certificate whose loops hold
/// the pebbles left by the (2,3) game; nullopt otherwise.
std::optional<Certificate> graded_tight_certificate(const Multigraph& g);

/// Axis of a loop in axis_parallel_slider_check.
inline constexpr int kAxisX = 0;
inline constexpr int kAxisY = 1;

/// loop_axis[e] gives the axis of loop e (entries of non-loop edges are
/// ignored). True iff the loopless part is (2,3)-sparse and its edges split
/// into two forests, x and y, where every tree of the c forest (single
/// vertices included) spans exactly one loop of axis c. Throws Error when a
/// vertex carries two loops of one axis or an axis is out of range.
SliderVerdict axis_parallel_slider_check(const Multigraph& g, const std::vector<int>& loop_axis);

}  // namespace sparsity
