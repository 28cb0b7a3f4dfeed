#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sparsity/graph.hpp"

namespace sparsity {

/// Exhaustive sparsity verdict for a small multigraph.
struct OracleReport {
    bool sparse = true;
    bool tight = false;
    /// Smallest subset with more than k|s| - l induced edges.
    std::optional<VertexSubset> violating;
    /// Every vertex subset inducing at least one edge with exactly k|s| - l
    /// edges. Filled only for sparse graphs.
    std::vector<VertexSubset> blocks;
    /// Blocks maximal under inclusion.
    std::vector<VertexSubset> components;
};

inline constexpr int kOracleMaxVertices = 20;

/// Scans every vertex subset; only subsets inducing at least one edge are
/// bound by k|s| - l. Throws SizeLimit for n > 20.
OracleReport brute_force_sparse(const Multigraph& g, SparsityParams params);

/// Size of a largest (k, l)-sparse edge subset, by exhaustive search over
/// edge subsets. Throws SizeLimit for m > 16 or n > 20.
int brute_force_max_sparse_subset(const Multigraph& g, SparsityParams params);

enum class PartitionKind { MapsAndTrees, ProperLTk };

inline constexpr int kPartitionMaxVertices = 6;
inline constexpr int kPartitionMaxEdges = 12;

/// Whether g splits into l spanning trees and k - l spanning map-graphs
/// (MapsAndTrees), or into l edge-disjoint trees with every vertex in exactly
/// k of them and at least l tree-pieces in every induced subgraph
/// (ProperLTk). Backtracking search; throws SizeLimit beyond n = 6, m = 12.
bool brute_force_partition(const Multigraph& g, SparsityParams params, PartitionKind kind);

/// Bounds for multigraph enumeration.
struct EnumerationLimits {
    int max_edges = 0;
    /// Maximum copies of each loop / each non-loop pair; negative = unbounded.
    int max_loop_multiplicity = -1;
    int max_pair_multiplicity = -1;
    bool allow_loops = true;
};

inline constexpr int kEnumerateMaxVertices = 5;
inline constexpr int kEnumerateMaxEdges = 12;

/// Calls `visit` once for every multigraph on n vertices with at most
/// max_edges edges, each as a sorted edge multiset. Throws SizeLimit beyond
/// n = 5 or 12 edges.
void for_each_small_multigraph(int n, const EnumerationLimits& limits,
                               const std::function<void(const Multigraph&)>& visit);

/// All multigraphs on n vertices with at most m_max edges.
std::vector<Multigraph> enumerate_small_multigraphs(int n, int m_max);

/// A (k, l)-tight multigraph on n vertices built by offering random vertex
/// pairs to the canonical game. Deterministic per seed. Throws Error when
/// kn - l < 0 or when no tight graph exists on n vertices.
Multigraph random_tight_graph(int n, SparsityParams params, std::uint64_t seed);

/// Whether some (k, l)-tight multigraph on n vertices exists.
bool tight_graph_exists(int n, SparsityParams params);

/// Graded-tight verdict from subset scans alone. Throws Error for more than
/// two loops on a vertex.
bool brute_force_graded_tight(const Multigraph& g);

/// Axis-parallel slider verdict by trying every 2-coloring of the non-loop
/// edges (at most 16 of them).
bool brute_force_axis_parallel(const Multigraph& g, const std::vector<int>& loop_axis);

}  // namespace sparsity
