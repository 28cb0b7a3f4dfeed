#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sparsity::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kNotSparse = 2,
    kNotTight = 3,
    kInvalid = 4,
    kInvariantViolation = 5,
};

struct CliConfig {
    std::string subcommand;
    int k = 2;
    int l = 3;
    /// Graph file, or trace file for replay; "-" reads stdin.
    std::string input = "-";
    /// Certificate file for certify.
    std::string certificate;
    /// "-" writes stdout.
    std::string output = "-";
    std::string format = "text";
    std::optional<std::string> kind;
    std::uint64_t seed = 1;
    bool debug_invariants = false;
    std::vector<int> sizes;
    /// Optional trace output for recognize and decompose.
    std::string trace;
    /// Vertex count for generate.
    int n = 0;
    int repeats = 3;
};

/// Default seed: SPARSITY_KIT_SEED if set and numeric, else 1.
std::uint64_t default_seed();

int cmd_recognize(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_decompose(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_certify(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_generate(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_replay(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_bench(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches on config.subcommand.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs; used by main and by tests.
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sparsity::cli
