#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "sparsity/decomposition.hpp"
#include "sparsity/oracle.hpp"

using namespace sparsity;
using namespace sparsity::testing;

namespace {

int count_color(const std::vector<TreePiece>& pieces, Color c) {
    return static_cast<int>(std::count_if(pieces.begin(), pieces.end(), [c](const TreePiece& p) { return p.color == c; }));
}

}  // namespace

TEST(TreePieces, FixtureSubsetWithCenter) {
    const GameState s = k4_star_and_cycle();
    const auto pieces = tree_pieces(extract_coloring(s), game_graph(s), VertexSubset{0, 1, 2});
    EXPECT_EQ(count_color(pieces, kBlack), 2);
    EXPECT_EQ(count_color(pieces, kGray), 1);
    // The gray piece holds both star edges inside the subset and is rooted at 0's pebble.
    const auto gray = std::find_if(pieces.begin(), pieces.end(), [](const TreePiece& p) { return p.color == kGray; });
    EXPECT_EQ(gray->root, 0);
    EXPECT_EQ(gray->root_kind, RootKind::Pebble);
    EXPECT_EQ(gray->edges.size(), 2u);
}

TEST(TreePieces, FixtureSubsetWithoutCenter) {
    const GameState s = k4_star_and_cycle();
    const auto pieces = tree_pieces(extract_coloring(s), game_graph(s), VertexSubset{1, 2, 3});
    ASSERT_EQ(pieces.size(), 3u);
    for (const TreePiece& p : pieces) {
        EXPECT_EQ(p.color, kGray);
        EXPECT_TRUE(p.edges.empty());
        EXPECT_EQ(p.root_kind, RootKind::OutEdge);
    }
    EXPECT_EQ(tree_piece_count(extract_coloring(s), game_graph(s), 0b1110), 3);
}

TEST(TreePieces, RejectsEmptySubset) {
    const GameState s = k4_star_and_cycle();
    EXPECT_THROW(tree_pieces(extract_coloring(s), game_graph(s), VertexSubset{}), Error);
}

TEST(CertifyColoring, AcceptsFixture) {
    const GameState s = k4_star_and_cycle();
    const Verdict v = certify_coloring(game_graph(s), extract_coloring(s));
    EXPECT_TRUE(v) << v.detail;
    EXPECT_TRUE(v.exhaustive);
}

TEST(CertifyColoring, RejectsTwoCyclesInOneColor) {
    const GameState s = k4_star_and_cycle();
    Decomposition d = extract_coloring(s);
    d.color[3] = kBlack;  // five black edges on four vertices
    d.color[4] = kBlack;
    EXPECT_FALSE(certify_coloring(game_graph(s), d));
}

TEST(Certificates, MapsAndTreesOnDoubledK4) {
    Multigraph g = k4();
    g.add_edge(0, 1);
    const ConstructionResult r = run_canonical_game(g, SparsityParams(2, 1));
    const Certificate cert = extract_maps_and_trees(g, r);
    ASSERT_EQ(cert.trees.size(), 1u);
    ASSERT_EQ(cert.maps.size(), 1u);
    EXPECT_EQ(cert.trees[0].size(), 3u);
    EXPECT_EQ(cert.maps[0].size(), 4u);
    EXPECT_TRUE(validate_certificate(g, cert));
    EXPECT_TRUE(brute_force_partition(g, SparsityParams(2, 1), PartitionKind::MapsAndTrees));
}

TEST(Certificates, ProperLTkOnKFourMinusEdge) {
    // K4 - e is (2,3)-tight: it splits into 3 trees with every vertex in 2.
    const Multigraph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    const ConstructionResult r = run_canonical_game(g, SparsityParams(2, 3));
    const Certificate cert = extract_proper_ltk(g, r);
    EXPECT_EQ(cert.trees.size(), 3u);
    EXPECT_TRUE(cert.maps.empty());
    const Verdict v = validate_certificate(g, cert);
    EXPECT_TRUE(v) << v.detail;
    EXPECT_EQ(count_tree_pieces_exact(cert, g, VertexSubset{0, 1, 2}), 3);
    EXPECT_EQ(count_tree_pieces_exact(cert, g, VertexSubset{0, 1, 2, 3}), 3);
    EXPECT_EQ(count_tree_pieces_exact(cert, g, VertexSubset{2, 3}), 4);
    EXPECT_THROW(count_tree_pieces_exact(cert, g, VertexSubset{1}), Error);
    EXPECT_TRUE(brute_force_partition(g, SparsityParams(2, 3), PartitionKind::ProperLTk));
}

TEST(Certificates, ExtractionNeedsTightInput) {
    const Multigraph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    const ConstructionResult r = run_canonical_game(g, SparsityParams(2, 3));
    EXPECT_THROW(extract_proper_ltk(g, r), Error);
    EXPECT_THROW(extract_maps_and_trees(g, run_canonical_game(g, SparsityParams(2, 1))), Error);
}

TEST(Certificates, ValidationCatchesTampering) {
    const Multigraph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    const Certificate good = extract_proper_ltk(g, run_canonical_game(g, SparsityParams(2, 3)));

    Certificate recolored = good;
    recolored.edges[0].color = (recolored.edges[0].color + 1) % 2;
    EXPECT_FALSE(validate_certificate(g, recolored));

    Certificate bad_tail = good;
    bad_tail.edges[0].oriented_from = 3;  // not an endpoint of 0-1
    EXPECT_FALSE(validate_certificate(g, bad_tail));

    Certificate wrong_edge = good;
    wrong_edge.edges[4].v = 0;
    EXPECT_FALSE(validate_certificate(g, wrong_edge));
}

TEST(Certificates, KindNames) {
    for (auto kind : {CertificateKind::Coloring, CertificateKind::MapsAndTrees, CertificateKind::ProperLTk,
                      CertificateKind::GradedTight}) {
        EXPECT_EQ(certificate_kind_from_string(to_string(kind)), kind);
    }
    EXPECT_FALSE(certificate_kind_from_string("forest"));
}
