#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sparsity/canonical.hpp"
#include "sparsity/certificate_io.hpp"
#include "sparsity/decomposition.hpp"
#include "sparsity/dot.hpp"
#include "sparsity/graph_io.hpp"
#include "sparsity/invariants.hpp"
#include "sparsity/oracle.hpp"
#include "sparsity/sliders.hpp"
#include "sparsity/trace_io.hpp"

namespace sparsity::cli {

namespace {

/// Raised for bad flags or unreadable files; maps to exit code 1.
class UsageError : public Error {
public:
    using Error::Error;
};

Multigraph read_graph(const std::string& path) {
    if (path == "-") {
        return parse_graph(std::cin);
    }
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    return parse_graph(in);
}

/// Writes to a file or to `out` for "-".
template <typename Fn>
void emit(const std::string& path, std::ostream& out, Fn&& write) {
    if (path == "-") {
        write(out);
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw UsageError("cannot write " + path);
    }
    write(file);
}

void check_format(const std::string& format) {
    if (format != "text" && format != "json" && format != "dot") {
        throw UsageError("unknown format " + format);
    }
}

/// Runs the canonical game with the requested hooks and reports invariant failures.
struct GameRun {
    ConstructionResult result;
    std::uint64_t violations = 0;
    std::optional<std::string> first_violation;
};

GameRun play(const Multigraph& g, SparsityParams params, const CliConfig& config) {
    InvariantMonitor monitor;
    GameOptions options;
    options.record_trace = !config.trace.empty();
    if (config.debug_invariants) {
        options.observers.push_back(&monitor);
    }
    GameRun run{run_canonical_game(g, params, options), monitor.violations(), monitor.first_violation()};
    if (!config.trace.empty()) {
        Trace trace{std::max(g.vertex_count(), 1), params, run.result.trace, run.result.state.fingerprint()};
        emit(config.trace, std::cerr, [&](std::ostream& os) { write_trace(os, trace); });
    }
    return run;
}

int report_violations(const GameRun& run, std::ostream& err) {
    if (run.violations == 0) {
        return kOk;
    }
    err << "invariant violations: " << run.violations << '\n' << run.first_violation.value_or("");
    return kInvariantViolation;
}

const char* verdict_name(const Multigraph& g, const ConstructionResult& r) {
    if (!r.all_accepted()) {
        return "not-sparse";
    }
    return g.edge_count() == r.state.params().tight_edge_count(g.vertex_count()) ? "tight" : "sparse";
}

void write_text_certificate(std::ostream& out, const Certificate& cert) {
    out << to_string(cert.kind) << " k=" << cert.params.k() << " l=" << cert.params.l() << " n=" << cert.n
        << " m=" << cert.edges.size() << '\n';
    for (const CertificateEdge& e : cert.edges) {
        const Vertex head = e.oriented_from == e.u ? e.v : e.u;
        out << "edge " << e.id << ": " << e.oriented_from << " -> " << head << " color " << e.color << '\n';
    }
    auto list = [&out](const char* name, const std::vector<std::vector<EdgeId>>& roles) {
        for (std::size_t i = 0; i < roles.size(); ++i) {
            out << name << ' ' << i << ':';
            for (EdgeId id : roles[i]) {
                out << ' ' << id;
            }
            out << (roles[i].empty() ? " (single vertex)\n" : "\n");
        }
    };
    list("tree", cert.trees);
    list("map", cert.maps);
}

}  // namespace

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SPARSITY_KIT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            return 1;
        }
    }
    return 1;
}

int cmd_recognize(const CliConfig& config, std::ostream& out, std::ostream& err) {
    check_format(config.format);
    const SparsityParams params(config.k, config.l);
    const Multigraph g = read_graph(config.input);
    const GameRun run = play(g, params, config);
    const ConstructionResult& r = run.result;
    const char* verdict = verdict_name(g, r);
    emit(config.output, out, [&](std::ostream& os) {
        if (config.format == "json") {
            os << "{\"verdict\": \"" << verdict << "\", \"accepted\": " << r.accepted.size()
               << ", \"rejected\": " << r.rejected.size() << ", \"pebbles\": " << r.state.total_pebbles() << "}\n";
        } else if (config.format == "dot") {
            write_dot(os, g);
        } else {
            os << verdict << '\n' << "accepted " << r.accepted.size() << '\n' << "rejected " << r.rejected.size()
               << '\n';
        }
    });
    if (const int code = report_violations(run, err); code != kOk) {
        return code;
    }
    return r.all_accepted() ? kOk : kNotSparse;
}

int cmd_decompose(const CliConfig& config, std::ostream& out, std::ostream& err) {
    check_format(config.format);
    const SparsityParams params(config.k, config.l);
    const Multigraph g = read_graph(config.input);

    CertificateKind kind = params.lower_range() ? CertificateKind::MapsAndTrees : CertificateKind::ProperLTk;
    if (config.kind) {
        const auto parsed = certificate_kind_from_string(*config.kind);
        if (!parsed) {
            throw UsageError("unknown kind " + *config.kind);
        }
        kind = *parsed;
    }
    if (kind == CertificateKind::MapsAndTrees && !params.lower_range()) {
        throw UsageError("maps-and-trees needs l <= k");
    }
    if (kind == CertificateKind::ProperLTk && !params.upper_range()) {
        throw UsageError("proper-ltk needs l >= k");
    }

    Certificate cert;
    int code = kOk;
    if (kind == CertificateKind::GradedTight) {
        auto graded = graded_tight_certificate(g);
        if (!graded) {
            err << "not tight: " << graded_tight_check(g).detail << '\n';
            return kNotTight;
        }
        cert = std::move(*graded);
    } else {
        const GameRun run = play(g, params, config);
        code = report_violations(run, err);
        if (!run.result.all_accepted()) {
            err << "not-sparse: " << run.result.rejected.size() << " edges rejected\n";
            return kNotSparse;
        }
        if (kind == CertificateKind::Coloring) {
            cert = make_coloring_certificate(g, run.result);
        } else if (!run.result.tight()) {
            err << "not tight\n";
            return kNotTight;
        } else {
            cert = kind == CertificateKind::MapsAndTrees ? extract_maps_and_trees(g, run.result)
                                                         : extract_proper_ltk(g, run.result);
        }
    }
    emit(config.output, out, [&](std::ostream& os) {
        if (config.format == "json") {
            write_certificate(os, cert);
        } else if (config.format == "dot") {
            write_dot(os, g, cert);
        } else {
            write_text_certificate(os, cert);
        }
    });
    return code;
}

int cmd_certify(const CliConfig& config, std::ostream& out, std::ostream& err) {
    check_format(config.format);
    if (config.certificate.empty()) {
        throw UsageError("certify needs --certificate");
    }
    const Multigraph g = read_graph(config.input);
    Certificate cert;
    if (config.certificate == "-") {
        cert = parse_certificate(std::cin);
    } else {
        std::ifstream in(config.certificate);
        if (!in) {
            throw UsageError("cannot open " + config.certificate);
        }
        cert = parse_certificate(in);
    }
    if (cert.n != g.vertex_count() || static_cast<int>(cert.edges.size()) != g.edge_count()) {
        err << "error: certificate has n=" << cert.n << ", m=" << cert.edges.size() << " but the graph has n="
            << g.vertex_count() << ", m=" << g.edge_count() << '\n';
        return kUsage;
    }
    const Verdict verdict = validate_certificate(g, cert);
    emit(config.output, out, [&](std::ostream& os) {
        if (config.format == "json") {
            os << "{\"valid\": " << (verdict.ok ? "true" : "false") << ", \"kind\": \"" << to_string(cert.kind)
               << "\", \"subsets_checked\": " << verdict.subsets_checked
               << ", \"exhaustive\": " << (verdict.exhaustive ? "true" : "false") << "}\n";
        } else {
            os << (verdict.ok ? "valid" : "invalid") << ' ' << to_string(cert.kind) << '\n';
        }
    });
    if (!verdict.ok) {
        err << "invalid: " << verdict.detail << '\n';
        return kInvalid;
    }
    return kOk;
}

int cmd_generate(const CliConfig& config, std::ostream& out, std::ostream& /*err*/) {
    const SparsityParams params(config.k, config.l);
    if (config.n < 1) {
        throw UsageError("generate needs --n >= 1");
    }
    const Multigraph g = random_tight_graph(config.n, params, config.seed);
    emit(config.output, out, [&](std::ostream& os) {
        if (config.format == "dot") {
            write_dot(os, g);
        } else {
            os << "# random (" << params.k() << "," << params.l() << ")-tight graph, seed " << config.seed << '\n';
            write_graph(os, g);
        }
    });
    return kOk;
}

int cmd_replay(const CliConfig& config, std::ostream& out, std::ostream& err) {
    Trace trace;
    if (config.input == "-") {
        trace = parse_trace(std::cin);
    } else {
        std::ifstream in(config.input);
        if (!in) {
            throw UsageError("cannot open " + config.input);
        }
        trace = parse_trace(in);
    }
    if (trace.n < 1) {
        throw UsageError("trace header has n < 1");
    }
    GameState state(trace.n, trace.params);
    InvariantMonitor monitor;
    state.add_observer(&monitor);
    for (std::size_t i = 0; i < trace.moves.size(); ++i) {
        try {
            state.apply(trace.moves[i]);
        } catch (const IllegalMove& e) {
            err << "illegal move " << i << ": " << e.what() << '\n';
            return kInvalid;
        }
    }
    if (monitor.violations() > 0) {
        err << "invariant violations: " << monitor.violations() << '\n' << monitor.first_violation().value_or("");
        return kInvalid;
    }
    const std::uint64_t hash = state.fingerprint();
    emit(config.output, out, [&](std::ostream& os) {
        os << "moves " << trace.moves.size() << '\n'
           << "hash " << std::hex << std::setw(16) << std::setfill('0') << hash << std::dec << '\n';
    });
    if (!trace.final_hash) {
        err << "trace has no final hash\n";
        return kInvalid;
    }
    if (*trace.final_hash != hash) {
        err << "final state hash differs from the trace footer\n";
        return kInvalid;
    }
    return kOk;
}

int cmd_bench(const CliConfig& config, std::ostream& out, std::ostream& /*err*/) {
    const SparsityParams params(config.k, config.l);
    if (config.sizes.empty()) {
        throw UsageError("bench needs --sizes");
    }
    for (std::size_t i = 0; i < config.sizes.size(); ++i) {
        if (config.sizes[i] < 1 || (i > 0 && config.sizes[i] <= config.sizes[i - 1])) {
            throw UsageError("--sizes must be positive and strictly increasing");
        }
    }
    if (config.repeats < 1) {
        throw UsageError("--repeats must be positive");
    }
    struct Row {
        int n;
        int edges;
        double seconds;
    };
    std::vector<Row> rows;
    for (int n : config.sizes) {
        const Multigraph g = random_tight_graph(n, params, config.seed);
        double best = 0;
        for (int rep = 0; rep < config.repeats; ++rep) {
            const auto start = std::chrono::steady_clock::now();
            const ConstructionResult r = run_canonical_game(g, params);
            const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (!r.tight()) {
                throw Error("bench: generated graph was not recognized as tight");
            }
            best = rep == 0 ? t : std::min(best, t);
        }
        rows.push_back({n, g.edge_count(), best});
    }
    // ratio compares each row with the row for half its size, when present.
    auto ratio = [&rows](std::size_t i) -> std::optional<double> {
        for (std::size_t j = 0; j < i; ++j) {
            if (2 * rows[j].n == rows[i].n && rows[j].seconds > 0) {
                return rows[i].seconds / rows[j].seconds;
            }
        }
        return std::nullopt;
    };
    emit(config.output, out, [&](std::ostream& os) {
        if (config.format == "json") {
            os << "[";
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const auto r = ratio(i);
                os << (i ? ", " : "") << "{\"n\": " << rows[i].n << ", \"edges\": " << rows[i].edges
                   << ", \"seconds\": " << rows[i].seconds << ", \"ratio\": ";
                if (r) {
                    os << *r;
                } else {
                    os << "null";
                }
                os << '}';
            }
            os << "]\n";
            return;
        }
        os << std::left << std::setw(10) << "n" << std::setw(10) << "edges" << std::setw(14) << "seconds"
           << "ratio\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto r = ratio(i);
            std::ostringstream secs;
            secs << std::fixed << std::setprecision(6) << rows[i].seconds;
            os << std::setw(10) << rows[i].n << std::setw(10) << rows[i].edges << std::setw(14) << secs.str();
            if (r) {
                os << std::fixed << std::setprecision(3) << *r << std::defaultfloat;
            } else {
                os << '-';
            }
            os << '\n';
        }
    });
    return kOk;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.subcommand == "recognize") {
            return cmd_recognize(config, out, err);
        }
        if (config.subcommand == "decompose") {
            return cmd_decompose(config, out, err);
        }
        if (config.subcommand == "certify") {
            return cmd_certify(config, out, err);
        }
        if (config.subcommand == "generate") {
            return cmd_generate(config, out, err);
        }
        if (config.subcommand == "replay") {
            return cmd_replay(config, out, err);
        }
        if (config.subcommand == "bench") {
            return cmd_bench(config, out, err);
        }
        err << "error: unknown subcommand " << config.subcommand << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Recognize (k,l)-sparse multigraphs and certify their decompositions"};
    app.require_subcommand(1);
    CliConfig config;
    config.seed = default_seed();

    auto add_params = [&config](CLI::App* sub) {
        sub->add_option("--k", config.k, "Sparsity parameter k")->capture_default_str();
        sub->add_option("--l", config.l, "Sparsity parameter l")->capture_default_str();
    };
    auto add_output = [&config](CLI::App* sub) {
        sub->add_option("-o,--output", config.output, "Output path, '-' for stdout")->capture_default_str();
        sub->add_option("--format", config.format, "json, text or dot")
            ->check(CLI::IsMember({"json", "text", "dot"}))
            ->capture_default_str();
    };

    CLI::App* recognize = app.add_subcommand("recognize", "Decide sparse / tight / not sparse");
    add_params(recognize);
    add_output(recognize);
    recognize->add_option("input", config.input, "Graph file, '-' for stdin")->capture_default_str();
    recognize->add_flag("--debug-invariants", config.debug_invariants, "Check invariants after every move");
    recognize->add_option("--trace", config.trace, "Write the move trace to this file");

    CLI::App* decompose = app.add_subcommand("decompose", "Emit a decomposition certificate");
    add_params(decompose);
    add_output(decompose);
    decompose->add_option("input", config.input, "Graph file, '-' for stdin")->capture_default_str();
    decompose->add_option("--kind", config.kind, "coloring, maps-and-trees, proper-ltk or graded-tight");
    decompose->add_flag("--debug-invariants", config.debug_invariants, "Check invariants after every move");
    decompose->add_option("--trace", config.trace, "Write the move trace to this file");

    CLI::App* certify = app.add_subcommand("certify", "Validate a certificate against a graph");
    add_output(certify);
    certify->add_option("input", config.input, "Graph file, '-' for stdin")->capture_default_str();
    certify->add_option("--certificate", config.certificate, "Certificate JSON file")->required();

    CLI::App* generate = app.add_subcommand("generate", "Write a random tight graph");
    add_params(generate);
    add_output(generate);
    generate->add_option("--n", config.n, "Vertex count")->required();
    generate->add_option("--seed", config.seed, "Random seed (default: SPARSITY_KIT_SEED or 1)");

    CLI::App* replay = app.add_subcommand("replay", "Replay a trace and compare its final hash");
    replay->add_option("input", config.input, "Trace file, '-' for stdin")->capture_default_str();
    replay->add_option("-o,--output", config.output, "Output path, '-' for stdout")->capture_default_str();
    replay->add_flag("--debug-invariants", config.debug_invariants, "Accepted for symmetry; replay always checks");

    CLI::App* bench = app.add_subcommand("bench", "Time the canonical game on random tight graphs");
    add_params(bench);
    add_output(bench);
    bench->add_option("--sizes", config.sizes, "Vertex counts, strictly increasing")->delimiter(',')->required();
    bench->add_option("--seed", config.seed, "Random seed (default: SPARSITY_KIT_SEED or 1)");
    bench->add_option("--repeats", config.repeats, "Runs per size; the fastest counts")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }
    for (CLI::App* sub : app.get_subcommands()) {
        config.subcommand = sub->get_name();
    }
    return run(config, out, err);
}

}  // namespace sparsity::cli
