// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "sparsity/canonical.hpp"
#include "sparsity/decomposition.hpp"
#include "sparsity/invariants.hpp"
#include "sparsity/oracle.hpp"
#include "sparsity/sliders.hpp"

using namespace sparsity;

namespace {

std::vector<SparsityParams> all_params(int k_max) {
    std::vector<SparsityParams> out;
    for (int k = 1; k <= k_max; ++k) {
        for (int l = 0; l <= 2 * k - 1; ++l) {
            out.emplace_back(k, l);
        }
    }
    return out;
}

std::string name(SparsityParams p) { return "(" + std::to_string(p.k()) + "," + std::to_string(p.l()) + ")"; }

struct Outcome {
    bool pass = true;
    std::string detail;
    std::string first_failure;

    void fail(const std::string& why) {
        if (pass) {
            first_failure = why;
        }
        pass = false;
    }
};

// Shared across criteria 1-5 and reported by criterion 6.
InvariantMonitor g_monitor;

GameOptions monitored() {
    GameOptions options;
    options.observers.push_back(&g_monitor);
    return options;
}

/// Union-find independent of the library's own.
struct Dsu {
    std::vector<int> parent, verts, edges;
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)), verts(static_cast<std::size_t>(n), 1), edges(static_cast<std::size_t>(n), 0) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[static_cast<std::size_t>(b)] = a;
            verts[static_cast<std::size_t>(a)] += verts[static_cast<std::size_t>(b)];
            edges[static_cast<std::size_t>(a)] += edges[static_cast<std::size_t>(b)];
        }
        ++edges[static_cast<std::size_t>(a)];
    }
};

/// Per color: union-find over the subset; returns false if a component has
/// more edges than vertices, else adds acyclic components to `pieces`.
bool count_pieces(const Multigraph& g, const Decomposition& d, std::uint32_t mask, int& pieces) {
    const int n = g.vertex_count();
    pieces = 0;
    for (Color c = 0; c < d.params.k(); ++c) {
        Dsu dsu(n);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            if (d.color[static_cast<std::size_t>(e)] == c && (mask >> ed.u & 1u) && (mask >> ed.v & 1u)) {
                dsu.unite(ed.u, ed.v);
            }
        }
        for (Vertex v = 0; v < n; ++v) {
            if ((mask >> v & 1u) && dsu.find(v) == v) {
                const auto i = static_cast<std::size_t>(v);
                if (dsu.edges[i] > dsu.verts[i]) {
                    return false;
                }
                pieces += dsu.edges[i] == dsu.verts[i] - 1 ? 1 : 0;
            }
        }
    }
    return true;
}

int induced(const Multigraph& g, std::uint32_t mask) {
    int m = 0;
    for (const Edge& e : g.edges()) {
        m += (mask >> e.u & 1u) && (mask >> e.v & 1u) ? 1 : 0;
    }
    return m;
}

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

// 1. Game verdict equals the subset-scan verdict on every multigraph with n <= 4, m <= 8.
Outcome criterion1() {
    Outcome o;
    long long graphs = 0;
    for (SparsityParams p : all_params(3)) {
        for (int n = 1; n <= 4; ++n) {
            for_each_small_multigraph(n, EnumerationLimits{8}, [&](const Multigraph& g) {
                ++graphs;
                const ConstructionResult r = run_canonical_game(g, p, monitored());
                const OracleReport oracle = brute_force_sparse(g, p);
                if (r.all_accepted() != oracle.sparse) {
                    o.fail(name(p) + " n=" + std::to_string(n) + " m=" + std::to_string(g.edge_count()));
                }
                if (oracle.sparse && r.tight() != oracle.tight) {
                    o.fail("tightness " + name(p) + " n=" + std::to_string(n));
                }
            });
        }
    }
    o.detail = std::to_string(graphs) + " (graph, k, l) cases";
    return o;
}

// 2. 500 random tight graphs per pair: colors (1,0)-sparse, >= l pieces in every subset spanning an edge.
Outcome criterion2() {
    Outcome o;
    long long subsets = 0;
    int graphs = 0;
    for (SparsityParams p : all_params(3)) {
        std::vector<int> sizes;
        for (int n = 1; n <= 8; ++n) {
            if (tight_graph_exists(n, p)) {
                sizes.push_back(n);
            }
        }
        for (int i = 0; i < 500; ++i) {
            const int n = sizes[static_cast<std::size_t>(i) % sizes.size()];
            const Multigraph g = random_tight_graph(n, p, 1000003ull * static_cast<std::uint64_t>(i) + 17);
            const ConstructionResult r = run_canonical_game(g, p, monitored());
            ++graphs;
            if (!r.tight()) {
                o.fail(name(p) + " generated graph not recognized as tight");
                continue;
            }
            const Decomposition d = extract_coloring(r, g.edge_count());
            for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
                ++subsets;
                int pieces = 0;
                if (!count_pieces(g, d, mask, pieces)) {
                    o.fail(name(p) + " color class not (1,0)-sparse");
                } else if (induced(g, mask) > 0 && pieces < p.l()) {
                    o.fail(name(p) + " subset with " + std::to_string(pieces) + " tree-pieces");
                }
            }
            if (!certify_coloring(g, d)) {
                o.fail(name(p) + " library certifier disagrees");
            }
        }
    }
    o.detail = std::to_string(graphs) + " graphs, " + std::to_string(subsets) + " subsets";
    return o;
}

/// Every multigraph on n vertices with exactly kn - l edges whose loop and
/// pair multiplicities admit sparsity. Tight graphs always satisfy the caps.
void for_each_candidate(int n, SparsityParams p, const std::function<void(const Multigraph&)>& visit) {
    EnumerationLimits limits;
    limits.max_edges = static_cast<int>(p.tight_edge_count(n));
    limits.max_loop_multiplicity = p.k() - p.l();
    limits.allow_loops = p.k() > p.l();
    limits.max_pair_multiplicity = 2 * p.k() - p.l();
    for_each_small_multigraph(n, limits, [&](const Multigraph& g) {
        if (g.edge_count() == limits.max_edges) {
            visit(g);
        }
    });
}

bool check_spanning_tree(const Multigraph& g, const std::vector<EdgeId>& ids) {
    const int n = g.vertex_count();
    if (static_cast<int>(ids.size()) != n - 1) {
        return false;
    }
    Dsu dsu(n);
    for (EdgeId id : ids) {
        const Edge& e = g.edge(id);
        if (dsu.find(e.u) == dsu.find(e.v)) {
            return false;
        }
        dsu.unite(e.u, e.v);
    }
    return true;
}

bool check_map_graph(const Certificate& cert, const std::vector<EdgeId>& ids) {
    std::vector<int> out(static_cast<std::size_t>(cert.n), 0);
    std::vector<char> support(static_cast<std::size_t>(cert.n), 0);
    for (EdgeId id : ids) {
        const CertificateEdge& e = cert.edges[static_cast<std::size_t>(id)];
        ++out[static_cast<std::size_t>(e.oriented_from)];
        support[static_cast<std::size_t>(e.u)] = support[static_cast<std::size_t>(e.v)] = 1;
    }
    for (int v = 0; v < cert.n; ++v) {
        if (support[static_cast<std::size_t>(v)] && out[static_cast<std::size_t>(v)] != 1) {
            return false;
        }
    }
    return true;
}

// 3. Lower range, n <= 5, m <= 12: maps-and-trees emitted for every tight graph, existence matches search.
Outcome criterion3() {
    Outcome o;
    long long tight = 0;
    long long candidates = 0;
    int skipped = 0;
    for (SparsityParams p : all_params(3)) {
        if (!p.lower_range()) {
            continue;
        }
        for (int n = 1; n <= 5; ++n) {
            if (p.tight_edge_count(n) > kPartitionMaxEdges) {
                ++skipped;
                continue;
            }
            if (p.tight_edge_count(n) < 0) {
                continue;
            }
            for_each_candidate(n, p, [&](const Multigraph& g) {
                ++candidates;
                const ConstructionResult r = run_canonical_game(g, p, monitored());
                const bool exists = brute_force_partition(g, p, PartitionKind::MapsAndTrees);
                if (r.tight() != exists) {
                    o.fail(name(p) + " n=" + std::to_string(n) + " engine and search disagree");
                    return;
                }
                if (!r.tight()) {
                    return;
                }
                ++tight;
                const Certificate cert = extract_maps_and_trees(g, r);
                if (static_cast<int>(cert.trees.size()) != p.l() || static_cast<int>(cert.maps.size()) != p.k() - p.l()) {
                    o.fail(name(p) + " wrong role counts");
                    return;
                }
                for (const auto& t : cert.trees) {
                    if (!check_spanning_tree(g, t)) {
                        o.fail(name(p) + " tree is not spanning and acyclic");
                    }
                }
                for (const auto& m : cert.maps) {
                    if (!check_map_graph(cert, m)) {
                        o.fail(name(p) + " map out-degree differs from 1");
                    }
                }
                if (!validate_certificate(g, cert)) {
                    o.fail(name(p) + " validator rejects engine certificate");
                }
            });
        }
    }
    o.detail = std::to_string(tight) + " tight of " + std::to_string(candidates) + " candidates; " +
               std::to_string(skipped) + " (k,l,n) cells beyond 12 edges skipped";
    return o;
}

// 4. Upper range k < l, n <= 5: proper lTk, every vertex in k trees, exactly kn'-m' pieces for |s| >= 2.
Outcome criterion4() {
    Outcome o;
    long long tight = 0;
    long long candidates = 0;
    for (SparsityParams p : all_params(3)) {
        if (p.l() <= p.k()) {
            continue;
        }
        for (int n = 1; n <= 5; ++n) {
            if (p.tight_edge_count(n) < 0) {
                continue;
            }
            for_each_candidate(n, p, [&](const Multigraph& g) {
                ++candidates;
                const ConstructionResult r = run_canonical_game(g, p, monitored());
                const bool exists = brute_force_partition(g, p, PartitionKind::ProperLTk);
                if (r.tight() != exists) {
                    o.fail(name(p) + " n=" + std::to_string(n) + " engine and search disagree");
                    return;
                }
                if (!r.tight()) {
                    return;
                }
                ++tight;
                const Certificate cert = extract_proper_ltk(g, r);
                if (static_cast<int>(cert.trees.size()) != p.l()) {
                    o.fail(name(p) + " wrong tree count");
                    return;
                }
                std::vector<int> membership(static_cast<std::size_t>(n), 0);
                for (const auto& t : cert.trees) {
                    std::vector<char> in(static_cast<std::size_t>(n), 0);
                    for (EdgeId id : t) {
                        in[static_cast<std::size_t>(g.edge(id).u)] = in[static_cast<std::size_t>(g.edge(id).v)] = 1;
                    }
                    for (int v = 0; v < n; ++v) {
                        membership[static_cast<std::size_t>(v)] += in[static_cast<std::size_t>(v)];
                    }
                }
                // Single-vertex trees carry no edges; they must fill exactly the missing memberships.
                const auto empty_trees = std::count_if(cert.trees.begin(), cert.trees.end(), [](const auto& t) { return t.empty(); });
                const int deficit = std::accumulate(membership.begin(), membership.end(), 0,
                                                    [&](int acc, int m) { return acc + (p.k() - m); });
                if (std::any_of(membership.begin(), membership.end(), [&](int m) { return m > p.k(); }) ||
                    deficit != empty_trees) {
                    o.fail(name(p) + " vertex not in exactly k trees");
                }
                const Decomposition d = cert.decomposition();
                for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
                    if (std::popcount(mask) < 2) {
                        continue;
                    }
                    int pieces = 0;
                    if (!count_pieces(g, d, mask, pieces) || pieces != p.k() * std::popcount(mask) - induced(g, mask)) {
                        o.fail(name(p) + " piece count differs from kn'-m'");
                    }
                }
                if (!validate_certificate(g, cert)) {
                    o.fail(name(p) + " validator rejects engine certificate");
                }
            });
        }
    }
    o.detail = std::to_string(tight) + " tight of " + std::to_string(candidates) + " candidates";
    return o;
}

/// Counts cycle-closing slides before they happen and, when asked, checks
/// for monochromatic cycles after every move.
class CanonicalWatch : public MoveObserver {
public:
    void before_move(const GameState& state, const MoveRecord& move) override {
        if (const auto* s = std::get_if<SlideMove>(&move)) {
            if (creates_monochromatic_cycle(state, s->edge, s->color)) {
                ++m2_slides;
            }
        }
    }
    void after_move(const GameState& state, const MoveRecord&) override {
        ++states;
        if (check_cycles && has_monochromatic_cycle(state)) {
            ++cycles;
        }
    }
    bool check_cycles = false;
    long long states = 0;
    long long m2_slides = 0;
    long long cycles = 0;
};

// 5. 1e5 sampled states, n <= 7: no cycle-closing slide in any canonical plan, no cycles in the upper range.
Outcome criterion5() {
    Outcome o;
    CanonicalWatch watch;
    long long plans = 0;
    std::mt19937_64 rng(20261016);
    const auto params = all_params(3);
    while (watch.states < 100000) {
        const SparsityParams p = params[rng() % params.size()];
        const int n = 2 + static_cast<int>(rng() % 6);
        watch.check_cycles = p.upper_range();
        GameOptions options = monitored();
        options.observers.push_back(&watch);
        CanonicalGame game(n, p, options);
        const int attempts = p.k() * n + 4;
        for (int i = 0; i < attempts; ++i) {
            const Vertex u = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
            const Vertex v = rng() % 5 == 0 ? u : static_cast<Vertex>(rng() % static_cast<unsigned>(n));
            game.try_add_edge(u, v);
            // Plan a pebble-bring from the sampled state and execute it on a copy.
            GameState copy = game.state();
            copy.clear_observers();
            copy.add_observer(&watch);
            copy.add_observer(&g_monitor);
            const Vertex source = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
            if (copy.pebbles(source) < copy.k()) {
                if (const auto plan = canonical_find_pebble(copy, source, VertexSubset{source})) {
                    execute_plan(copy, *plan);
                    ++plans;
                }
            }
        }
    }
    if (watch.m2_slides != 0) {
        o.fail(std::to_string(watch.m2_slides) + " cycle-closing slides");
    }
    if (watch.cycles != 0) {
        o.fail(std::to_string(watch.cycles) + " upper-range states with a monochromatic cycle");
    }
    o.detail = std::to_string(watch.states) + " states, " + std::to_string(plans) + " extra plans";
    return o;
}

// 6. Invariant monitor over every move made in criteria 1-5.
Outcome criterion6() {
    Outcome o;
    if (g_monitor.violations() != 0) {
        o.fail(g_monitor.first_violation().value_or("violation"));
    }
    if (g_monitor.moves_checked() == 0) {
        o.fail("no moves checked");
    }
    o.detail = std::to_string(g_monitor.moves_checked()) + " moves checked, " + std::to_string(g_monitor.violations()) +
               " violations";
    return o;
}

// 7. cmd_bench on (2,3): each doubling costs 3.0x-5.5x and n = 2000 takes under 60 s.
Outcome criterion7() {
    Outcome o;
    cli::CliConfig config;
    config.subcommand = "bench";
    config.k = 2;
    config.l = 3;
    config.sizes = {250, 500, 1000, 2000};
    config.format = "json";
    config.repeats = 5;
    std::ostringstream out;
    std::ostringstream err;
    if (cli::run(config, out, err) != 0) {
        o.fail("bench failed: " + err.str());
        return o;
    }
    const auto rows = nlohmann::json::parse(out.str());
    std::ostringstream detail;
    for (const auto& row : rows) {
        detail << "n=" << row["n"].get<int>() << " " << row["seconds"].get<double>() << "s";
        if (!row["ratio"].is_null()) {
            const double ratio = row["ratio"].get<double>();
            detail << " x" << ratio;
            if (ratio < 3.0 || ratio > 5.5) {
                o.fail("ratio " + std::to_string(ratio) + " at n=" + std::to_string(row["n"].get<int>()));
            }
        }
        detail << "; ";
        if (row["n"].get<int>() == 2000 && row["seconds"].get<double>() >= 60.0) {
            o.fail("n=2000 took 60 s or more");
        }
    }
    o.detail = detail.str();
    return o;
}

// 8. Slider checks equal the brute-force searches on every loopless base with n <= 4.
Outcome criterion8() {
    Outcome o;
    long long graded = 0;
    long long axis = 0;
    long long graded_true = 0;
    long long axis_true = 0;
    for (int n = 1; n <= 4; ++n) {
        EnumerationLimits limits;
        limits.max_edges = 2 * n;
        limits.allow_loops = false;
        limits.max_pair_multiplicity = 2;
        for_each_small_multigraph(n, limits, [&](const Multigraph& base) {
            // Graded: 0..2 loops per vertex.
            int placements = 1;
            for (int i = 0; i < n; ++i) {
                placements *= 3;
            }
            for (int code = 0; code < placements; ++code) {
                Multigraph g = base;
                for (int v = 0, c = code; v < n; ++v, c /= 3) {
                    for (int j = 0; j < c % 3; ++j) {
                        g.add_edge(v, v);
                    }
                }
                ++graded;
                const bool fast = graded_tight_check(g).ok;
                graded_true += fast ? 1 : 0;
                if (fast != brute_force_graded_tight(g)) {
                    o.fail("graded n=" + std::to_string(n) + " m=" + std::to_string(g.edge_count()));
                }
            }
            // Axis-parallel: each vertex carries a subset of {x, y}.
            if (base.edge_count() > 16) {
                return;
            }
            const int subsets = 1 << (2 * n);
            for (int code = 0; code < subsets; ++code) {
                Multigraph g = base;
                std::vector<int> loop_axis(static_cast<std::size_t>(base.edge_count()), 0);
                for (int v = 0; v < n; ++v) {
                    for (int a = 0; a < 2; ++a) {
                        if (code >> (2 * v + a) & 1) {
                            g.add_edge(v, v);
                            loop_axis.push_back(a);
                        }
                    }
                }
                ++axis;
                const bool fast = axis_parallel_slider_check(g, loop_axis).ok;
                axis_true += fast ? 1 : 0;
                if (fast != brute_force_axis_parallel(g, loop_axis)) {
                    o.fail("axis-parallel n=" + std::to_string(n) + " m=" + std::to_string(g.edge_count()));
                }
            }
        });
    }
    o.detail = std::to_string(graded) + " graded cases (" + std::to_string(graded_true) + " pinned), " +
               std::to_string(axis) + " axis cases (" + std::to_string(axis_true) + " pinned)";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
        {"1 recognition matches subset scan", criterion1},
        {"2 tight colorings have enough tree-pieces", criterion2},
        {"3 lower range maps-and-trees", criterion3},
        {"4 upper range proper lTk", criterion4},
        {"5 canonical moves avoid cycles", criterion5},
        {"6 invariants hold on every move", criterion6},
        {"7 quadratic scaling", criterion7},
        {"8 slider pinning checks", criterion8},
    };
    bool all = true;
    for (const auto& [label, run] : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        all = all && o.pass;
        std::printf("%s criterion %s: %s (%.1f s)", o.pass ? "PASS" : "FAIL", label, o.detail.c_str(), since(start));
        if (!o.pass) {
            std::printf(" first failure: %s", o.first_failure.c_str());
        }
        std::printf("\n");
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
