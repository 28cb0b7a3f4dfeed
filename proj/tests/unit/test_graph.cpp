#include <gtest/gtest.h>

#include <sstream>

#include "sparsity/graph.hpp"
#include "sparsity/graph_io.hpp"

using namespace sparsity;

TEST(Multigraph, KeepsLoopsAndParallelEdges) {
    Multigraph g(3, {{0, 1}, {0, 1}, {2, 2}});
    EXPECT_EQ(g.vertex_count(), 3);
    EXPECT_EQ(g.edge_count(), 3);
    EXPECT_EQ(g.loop_count(2), 1);
    EXPECT_EQ(g.loop_count(0), 0);
    EXPECT_EQ(g.loopless_part().edge_count(), 2);
    EXPECT_EQ(g.add_edge(1, 2), 3);
}

TEST(Multigraph, RejectsOutOfRangeVertices) {
    Multigraph g(2);
    EXPECT_THROW(g.add_edge(0, 2), Error);
    EXPECT_THROW(g.add_edge(-1, 0), Error);
}

TEST(SparsityParams, RangeAndTightCount) {
    EXPECT_THROW(SparsityParams(0, 0), Error);
    EXPECT_THROW(SparsityParams(2, 4), Error);
    EXPECT_THROW(SparsityParams(2, -1), Error);
    const SparsityParams laman(2, 3);
    EXPECT_FALSE(laman.lower_range());
    EXPECT_TRUE(laman.upper_range());
    EXPECT_EQ(laman.tight_edge_count(5), 7);
    EXPECT_EQ(laman.tight_edge_count(1), -1);
    EXPECT_TRUE(SparsityParams(2, 2).lower_range());
    EXPECT_TRUE(SparsityParams(2, 2).upper_range());
}

TEST(VertexSubset, SortedAndDeduplicated) {
    const VertexSubset s{3, 1, 3, 0};
    EXPECT_EQ(s.members(), (std::vector<Vertex>{0, 1, 3}));
    EXPECT_TRUE(s.contains(3));
    EXPECT_FALSE(s.contains(2));
    EXPECT_EQ(VertexSubset::from_mask(0b1011), s);
    EXPECT_EQ(VertexSubset::all(3), (VertexSubset{0, 1, 2}));
}

TEST(InducedEdgeCount, CountsLoopsOnce) {
    const Multigraph g(4, {{0, 1}, {0, 1}, {1, 2}, {2, 2}, {2, 3}});
    EXPECT_EQ(induced_edge_count(g, VertexSubset{0, 1}), 2);
    EXPECT_EQ(induced_edge_count(g, VertexSubset{2}), 1);
    EXPECT_EQ(induced_edge_count(g, VertexSubset{0, 2}), 1);
    EXPECT_EQ(induced_edge_count(g, 0b1111u), 5);
    EXPECT_THROW(induced_edge_count(g, VertexSubset{}), Error);
}

TEST(GraphIo, ParsesCommentsAndBlankLines) {
    const Multigraph g = parse_graph("# triangle\n\n3 3\n0 1\n1 2\n# closing edge\n2 0\n");
    EXPECT_EQ(g, Multigraph(3, {{0, 1}, {1, 2}, {2, 0}}));
}

TEST(GraphIo, RoundTrip) {
    const Multigraph g(4, {{0, 1}, {0, 1}, {3, 3}, {2, 1}});
    std::ostringstream out;
    write_graph(out, g);
    EXPECT_EQ(parse_graph(out.str()), g);
}

TEST(GraphIo, ReportsLineNumbers) {
    auto line_of = [](std::string_view text) -> std::size_t {
        try {
            parse_graph(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    EXPECT_EQ(line_of("2 1\n0 5\n"), 2u);
    EXPECT_EQ(line_of("# c\n2 2\n0 1\n"), 3u);
    EXPECT_EQ(line_of("2 x\n"), 1u);
    EXPECT_EQ(line_of("2 1\n0 1\n1 0\n"), 3u);
    EXPECT_EQ(line_of("2 1\n0\n"), 2u);
}
