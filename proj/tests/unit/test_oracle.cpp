#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "sparsity/canonical.hpp"
#include "sparsity/oracle.hpp"

using namespace sparsity;
using namespace sparsity::testing;

TEST(BruteForceSparse, KFour) {
    const OracleReport laman = brute_force_sparse(k4(), SparsityParams(2, 3));
    EXPECT_FALSE(laman.sparse);
    ASSERT_TRUE(laman.violating);
    EXPECT_EQ(*laman.violating, (VertexSubset{0, 1, 2, 3}));

    const OracleReport two_two = brute_force_sparse(k4(), SparsityParams(2, 2));
    EXPECT_TRUE(two_two.tight);
    ASSERT_EQ(two_two.components.size(), 1u);
    EXPECT_EQ(two_two.components[0], (VertexSubset{0, 1, 2, 3}));

    const OracleReport trees = brute_force_sparse(k4(), SparsityParams(1, 1));
    ASSERT_TRUE(trees.violating);
    EXPECT_EQ(*trees.violating, (VertexSubset{0, 1, 2}));

    EXPECT_TRUE(brute_force_sparse(k4(), SparsityParams(2, 1)).sparse);
    EXPECT_FALSE(brute_force_sparse(k4(), SparsityParams(2, 1)).tight);
}

TEST(BruteForceSparse, EdgelessSubsetsAreUnconstrained) {
    // A lone vertex would allow 2 - 3 < 0 edges; it induces none, so no violation.
    const OracleReport r = brute_force_sparse(Multigraph(3), SparsityParams(2, 3));
    EXPECT_TRUE(r.sparse);
    EXPECT_TRUE(r.blocks.empty());
}

TEST(BruteForceSparse, SizeLimit) { EXPECT_THROW(brute_force_sparse(Multigraph(21), SparsityParams(1, 0)), SizeLimit); }

TEST(BruteForceMaxSparseSubset, MatchesGameCount) {
    EXPECT_EQ(brute_force_max_sparse_subset(k4(), SparsityParams(2, 3)), 5);
    EXPECT_EQ(brute_force_max_sparse_subset(k4(), SparsityParams(1, 1)), 3);
    EXPECT_EQ(brute_force_max_sparse_subset(k4(), SparsityParams(3, 3)), 6);
    // The game is greedy over a matroid, so it keeps a maximum sparse subset.
    Multigraph g = k4();
    g.add_edge(0, 0);
    g.add_edge(1, 2);
    for (int l = 0; l <= 3; ++l) {
        const SparsityParams p(2, l);
        EXPECT_EQ(static_cast<int>(run_canonical_game(g, p).accepted.size()), brute_force_max_sparse_subset(g, p));
    }
}

TEST(Enumeration, FrozenCounts) {
    EXPECT_EQ(enumerate_small_multigraphs(2, 2).size(), 10u);
    const int expected_sparse[] = {1, 2, 8};
    const int expected_total[] = {5, 35, 210};
    for (int n = 1; n <= 3; ++n) {
        int total = 0;
        int sparse = 0;
        for_each_small_multigraph(n, EnumerationLimits{4}, [&](const Multigraph& g) {
            ++total;
            sparse += brute_force_sparse(g, SparsityParams(2, 3)).sparse ? 1 : 0;
        });
        EXPECT_EQ(total, expected_total[n - 1]) << "n=" << n;
        EXPECT_EQ(sparse, expected_sparse[n - 1]) << "n=" << n;
    }
    EXPECT_THROW(for_each_small_multigraph(6, EnumerationLimits{2}, [](const Multigraph&) {}), SizeLimit);
}

TEST(Enumeration, MultiplicityCaps) {
    EnumerationLimits limits{3};
    limits.allow_loops = false;
    limits.max_pair_multiplicity = 1;
    int count = 0;
    for_each_small_multigraph(3, limits, [&](const Multigraph& g) {
        EXPECT_EQ(g.loopless_part().edge_count(), g.edge_count());
        ++count;
    });
    EXPECT_EQ(count, 8);  // subsets of the three pairs
}

TEST(RandomTightGraph, IsTightAndDeterministic) {
    const SparsityParams p(3, 4);
    const Multigraph a = random_tight_graph(7, p, 42);
    EXPECT_EQ(a, random_tight_graph(7, p, 42));
    EXPECT_EQ(a.edge_count(), 17);
    EXPECT_TRUE(brute_force_sparse(a, p).tight);
}

TEST(RandomTightGraph, ReportsImpossibleSizes) {
    EXPECT_FALSE(tight_graph_exists(1, SparsityParams(2, 3)));
    EXPECT_FALSE(tight_graph_exists(3, SparsityParams(3, 5)));
    EXPECT_FALSE(tight_graph_exists(4, SparsityParams(3, 5)));
    EXPECT_TRUE(tight_graph_exists(5, SparsityParams(3, 5)));
    EXPECT_THROW(random_tight_graph(3, SparsityParams(3, 5), 1), Error);
}

TEST(BruteForcePartition, AgreesOnSmallCases) {
    Multigraph doubled = k4();
    doubled.add_edge(0, 1);
    EXPECT_TRUE(brute_force_partition(doubled, SparsityParams(2, 1), PartitionKind::MapsAndTrees));
    // A triangle is a map-graph but not a spanning tree.
    const Multigraph tri(3, {{0, 1}, {1, 2}, {2, 0}});
    EXPECT_TRUE(brute_force_partition(tri, SparsityParams(1, 0), PartitionKind::MapsAndTrees));
    EXPECT_FALSE(brute_force_partition(tri, SparsityParams(1, 1), PartitionKind::MapsAndTrees));
}
