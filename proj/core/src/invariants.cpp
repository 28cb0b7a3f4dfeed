#include "sparsity/invariants.hpp"

#include <random>
#include <sstream>

namespace sparsity {

namespace {

struct SubsetCounts {
    long long span = 0;
    long long out = 0;
    long long peb = 0;
};

SubsetCounts count_subset(const GameState& state, const std::vector<char>& in) {
    SubsetCounts c;
    for (const DirectedEdge& e : state.edges()) {
        const bool t = in[static_cast<std::size_t>(e.tail)] != 0;
        const bool h = in[static_cast<std::size_t>(e.head)] != 0;
        if (t && h) {
            ++c.span;
        } else if (t) {
            ++c.out;
        }
    }
    for (Vertex v = 0; v < state.vertex_count(); ++v) {
        if (in[static_cast<std::size_t>(v)]) {
            c.peb += state.pebbles(v);
        }
    }
    return c;
}

VertexSubset indicator_subset(const std::vector<char>& in) {
    std::vector<Vertex> members;
    for (std::size_t i = 0; i < in.size(); ++i) {
        if (in[i]) {
            members.push_back(static_cast<Vertex>(i));
        }
    }
    return VertexSubset(std::move(members));
}

}  // namespace

std::string InvariantReport::summary() const {
    std::ostringstream out;
    auto line = [&out](const char* name, const InvariantCheck& c) {
        out << name << ": " << (c.ok ? "ok" : "FAIL");
        if (!c.ok) {
            out << " (" << c.detail;
            if (c.witness) {
                out << "; witness {";
                bool first = true;
                for (Vertex v : *c.witness) {
                    out << (first ? "" : ",") << v;
                    first = false;
                }
                out << "}";
            }
            out << ")";
        }
        out << '\n';
    };
    line("I1", i1);
    line("I2", i2);
    line("I3", i3);
    line("I4", i4);
    line("I5", i5);
    return out.str();
}

InvariantReport check_invariants(const GameState& state, const InvariantOptions& options) {
    InvariantReport report;
    const int n = state.vertex_count();
    const int k = state.k();

    const int total = state.total_pebbles();
    if (total < state.l()) {
        report.i1 = {false, VertexSubset::all(n), std::to_string(total) + " pebbles < l"};
    }

    // Per-vertex tallies straight from the edge list.
    std::vector<int> loops(static_cast<std::size_t>(n), 0);
    std::vector<int> outdeg(static_cast<std::size_t>(n), 0);
    std::vector<int> out_color(static_cast<std::size_t>(n) * static_cast<std::size_t>(k), 0);
    for (const DirectedEdge& e : state.edges()) {
        if (e.tail == e.head) {
            ++loops[static_cast<std::size_t>(e.tail)];
        } else {
            ++outdeg[static_cast<std::size_t>(e.tail)];
        }
        ++out_color[static_cast<std::size_t>(e.tail) * static_cast<std::size_t>(k) + static_cast<std::size_t>(e.color)];
    }

    for (Vertex v = 0; v < n && report.i2.ok; ++v) {
        const int sum = loops[static_cast<std::size_t>(v)] + outdeg[static_cast<std::size_t>(v)] + state.pebbles(v);
        if (sum != k) {
            report.i2 = {false, VertexSubset{v}, "span+out+peb = " + std::to_string(sum)};
        }
    }

    for (Vertex v = 0; v < n && report.i4.ok; ++v) {
        for (Color c = 0; c < k; ++c) {
            const int sum =
                out_color[static_cast<std::size_t>(v) * static_cast<std::size_t>(k) + static_cast<std::size_t>(c)] +
                state.pebbles(v, c);
            if (sum != 1) {
                report.i4 = {false, VertexSubset{v},
                             "color " + std::to_string(c) + ": out+peb = " + std::to_string(sum)};
                break;
            }
        }
    }

    // I5: walk the monochromatic path from every vertex in every color.
    std::vector<EdgeId> first_out(static_cast<std::size_t>(n) * static_cast<std::size_t>(k), kNoEdge);
    for (EdgeId id = 0; id < state.edge_count(); ++id) {
        const DirectedEdge& e = state.edge(id);
        auto& slot = first_out[static_cast<std::size_t>(e.tail) * static_cast<std::size_t>(k) +
                               static_cast<std::size_t>(e.color)];
        if (slot == kNoEdge) {
            slot = id;
        }
    }
    std::vector<int> seen(static_cast<std::size_t>(n), -1);
    int stamp = 0;
    for (Color c = 0; c < k && report.i5.ok; ++c) {
        for (Vertex start = 0; start < n; ++start) {
            ++stamp;
            Vertex x = start;
            bool ok = true;
            while (true) {
                if (state.pebbles(x, c) > 0) {
                    break;
                }
                if (seen[static_cast<std::size_t>(x)] == stamp) {
                    break;
                }
                seen[static_cast<std::size_t>(x)] = stamp;
                const EdgeId e = first_out[static_cast<std::size_t>(x) * static_cast<std::size_t>(k) +
                                           static_cast<std::size_t>(c)];
                if (e == kNoEdge) {
                    ok = false;
                    break;
                }
                x = state.edge(e).head;
            }
            if (!ok) {
                report.i5 = {false, VertexSubset{start, x},
                             "color " + std::to_string(c) + " path dead-ends without a pebble"};
                break;
            }
        }
    }

    if (options.check_i3) {
        auto check_mask = [&](const std::vector<char>& in) {
            const SubsetCounts sc = count_subset(state, in);
            long long size = 0;
            for (char b : in) {
                size += b;
            }
            ++report.i3_subsets_checked;
            if (sc.span + sc.out + sc.peb != static_cast<long long>(k) * size) {
                report.i3 = {false, indicator_subset(in),
                             "span+out+peb = " + std::to_string(sc.span + sc.out + sc.peb) + " != k|S|"};
                return false;
            }
            return true;
        };
        if (n <= options.exhaustive_limit && n < 63) {
            report.i3_exhaustive = true;
            std::vector<int> peb(static_cast<std::size_t>(n));
            for (Vertex v = 0; v < n; ++v) {
                peb[static_cast<std::size_t>(v)] = state.pebbles(v);
            }
            const std::uint64_t limit = std::uint64_t{1} << n;
            for (std::uint64_t mask = 1; mask < limit; ++mask) {
                long long sum = 0;
                long long size = 0;
                for (Vertex v = 0; v < n; ++v) {
                    if ((mask >> v) & 1U) {
                        sum += peb[static_cast<std::size_t>(v)];
                        ++size;
                    }
                }
                // Every edge with its tail inside counts once: spanned or out.
                for (const DirectedEdge& e : state.edges()) {
                    sum += static_cast<long long>((mask >> e.tail) & 1U);
                }
                ++report.i3_subsets_checked;
                if (sum != static_cast<long long>(k) * size) {
                    report.i3 = {false, VertexSubset::from_mask(mask),
                                 "span+out+peb = " + std::to_string(sum) + " != k|S|"};
                    break;
                }
            }
        } else {
            std::mt19937_64 rng(options.seed);
            std::bernoulli_distribution coin(0.5);
            for (int s = 0; s < options.samples; ++s) {
                std::vector<char> in(static_cast<std::size_t>(n), 0);
                bool any = false;
                for (auto& b : in) {
                    b = coin(rng) ? 1 : 0;
                    any = any || b;
                }
                if (!any) {
                    in[0] = 1;
                }
                if (!check_mask(in)) {
                    break;
                }
            }
        }
    }
    return report;
}

void InvariantMonitor::after_move(const GameState& state, const MoveRecord&) {
    ++moves_checked_;
    const InvariantReport report = check_invariants(state, options_);
    if (!report.ok()) {
        ++violations_;
        if (!first_violation_) {
            first_violation_ = report.summary();
        }
    }
}

}  // namespace sparsity
