#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sparsity/canonical.hpp"

namespace sparsity {

/// Edge coloring with an orientation: edge e of the described graph has
/// color[e] in 0..k-1 and leaves tail[e].
struct Decomposition {
    SparsityParams params{1, 0};
    std::vector<Color> color;
    std::vector<Vertex> tail;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// The undirected graph of H, edge ids preserved.
Multigraph game_graph(const GameState& state);

/// Colors and tails of H, indexed by H edge id.
Decomposition extract_coloring(const GameState& state);

/// Colors and tails indexed by input edge id. Throws Error when some input
/// edge was rejected, since it would have no color.
Decomposition extract_coloring(const ConstructionResult& result, int input_edge_count);

enum class RootKind { Pebble, OutEdge };

/// A monochromatic tree inside the subgraph induced by a vertex subset.
struct TreePiece {
    Color color = 0;
    Vertex root = 0;
    RootKind root_kind = RootKind::Pebble;
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edges;
};

/// Monochromatic acyclic components of the subgraph induced by s, including
/// single-vertex trees. The root is the vertex whose out-edge of the piece's
/// color is absent (pebble-rooted) or leaves s (out-edge-rooted). Ordered by
/// root, pebble-rooted first, then color. Throws Error on an empty subset.
std::vector<TreePiece> tree_pieces(const Decomposition& d, const Multigraph& g, const VertexSubset& s);

/// Number of tree-pieces in the subgraph induced by a bitmask (n <= 64).
int tree_piece_count(const Decomposition& d, const Multigraph& g, std::uint64_t mask);

struct Verdict {
    bool ok = true;
    std::string detail;
    /// Subsets examined by subset-quantified checks.
    long long subsets_checked = 0;
    bool exhaustive = true;

    explicit operator bool() const noexcept { return ok; }
    static Verdict fail(std::string why) { return Verdict{false, std::move(why), 0, true}; }
};

struct CertifyOptions {
    /// Every subset is examined when n <= this; otherwise random subsets,
    /// every monochromatic component and the full vertex set.
    int exhaustive_limit = 8;
    int samples = 512;
    std::uint64_t seed = 0x7ee5;
};

/// Checks that every color class is (1,0)-sparse and every induced subgraph
/// with at least one edge contains at least l tree-pieces.
Verdict certify_coloring(const Multigraph& g, const Decomposition& d, const CertifyOptions& options = {});

enum class CertificateKind { Coloring, MapsAndTrees, ProperLTk, GradedTight };

const char* to_string(CertificateKind kind);
std::optional<CertificateKind> certificate_kind_from_string(const std::string& name);

struct CertificateEdge {
    EdgeId id = 0;
    Vertex u = 0;
    Vertex v = 0;
    Color color = 0;
    Vertex oriented_from = 0;

    friend bool operator==(const CertificateEdge&, const CertificateEdge&) = default;
};

/// A decomposition of an input graph together with the role of each color
/// class. Edge ids refer to the input graph. An empty list in `trees`
/// denotes a single-vertex tree.
struct Certificate {
    CertificateKind kind = CertificateKind::Coloring;
    SparsityParams params{1, 0};
    int n = 0;
    std::vector<CertificateEdge> edges;
    std::vector<std::vector<EdgeId>> trees;
    std::vector<std::vector<EdgeId>> maps;

    bool has_roles() const noexcept {
        return kind == CertificateKind::MapsAndTrees || kind == CertificateKind::ProperLTk;
    }
    /// The certificate's coloring, indexed by edge id.
    Decomposition decomposition() const;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Coloring certificate for any sparse result whose edges were all accepted.
Certificate make_coloring_certificate(const Multigraph& g, const ConstructionResult& result);

/// Lower range, tight input: the colors still holding a pebble are spanning
/// trees and the others are spanning map-graphs. Throws Error("input not
/// tight") or Error on a range mismatch.
Certificate extract_maps_and_trees(const Multigraph& g, const ConstructionResult& result);

/// Upper range, tight input: every color class is a forest; its components,
/// including single vertices, are the l trees.
Certificate extract_proper_ltk(const Multigraph& g, const ConstructionResult& result);

/// Validates a certificate against g according to its kind.
Verdict validate_certificate(const Multigraph& g, const Certificate& cert, const CertifyOptions& options = {});

/// Tree-pieces of a proper lTk certificate inside the subgraph induced by s
/// (|s| >= 2). Throws Error unless the count equals k|s| - m(s).
int count_tree_pieces_exact(const Certificate& cert, const Multigraph& g, const VertexSubset& s);

}  // namespace sparsity
