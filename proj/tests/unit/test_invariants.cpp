#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "sparsity/canonical.hpp"
#include "sparsity/invariants.hpp"

using namespace sparsity;
using namespace sparsity::testing;

TEST(Invariants, HoldOnFixture) {
    const InvariantReport report = check_invariants(k4_star_and_cycle());
    EXPECT_TRUE(report.ok()) << report.summary();
    EXPECT_TRUE(report.i3_exhaustive);
    EXPECT_EQ(report.i3_subsets_checked, 15);
}

TEST(Invariants, DetectsMissingPebble) {
    GameState s = k4_star_and_cycle();
    s.set_pebble_count_unchecked(0, kGray, 0);
    const InvariantReport report = check_invariants(s);
    EXPECT_FALSE(report.i1.ok);
    EXPECT_FALSE(report.i2.ok);
    EXPECT_FALSE(report.i4.ok);
    ASSERT_TRUE(report.i3.witness);
    EXPECT_TRUE(report.i3.witness->contains(0));
}

TEST(Invariants, DetectsDuplicatePebble) {
    GameState s = k4_star_and_cycle();
    s.set_pebble_count_unchecked(1, kGray, 1);  // 1 also has a gray out-edge
    const InvariantReport report = check_invariants(s);
    EXPECT_TRUE(report.i1.ok);
    EXPECT_FALSE(report.i4.ok);
    EXPECT_FALSE(report.ok());
}

TEST(InvariantMonitor, ChecksEveryMove) {
    InvariantMonitor monitor;
    GameOptions options;
    options.observers.push_back(&monitor);
    const Multigraph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {1, 3}, {2, 4}});
    const ConstructionResult r = run_canonical_game(g, SparsityParams(2, 3), options);
    EXPECT_EQ(r.accepted.size(), 7u);
    EXPECT_GE(monitor.moves_checked(), 7u);
    EXPECT_EQ(monitor.violations(), 0u);
    EXPECT_FALSE(monitor.first_violation());
}
