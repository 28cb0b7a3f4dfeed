#include "sparsity/graph_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace sparsity {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
            ++j;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

long long to_integer(std::string_view token, std::size_t line_no) {
    long long value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ParseError(line_no, "non-integer token '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

Multigraph parse_graph(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    long long n = 0;
    long long m = 0;
    Multigraph g;

    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = split_tokens(line);
        if (tokens.empty() || tokens.front().front() == '#') {
            continue;
        }
        if (tokens.size() != 2) {
            throw ParseError(line_no, have_header ? "expected 'u v'" : "malformed header, expected 'n m'");
        }
        const long long a = to_integer(tokens[0], line_no);
        const long long b = to_integer(tokens[1], line_no);
        if (!have_header) {
            if (a < 0 || b < 0 || a > (1LL << 30) || b > (1LL << 30)) {
                throw ParseError(line_no, "malformed header, expected 'n m'");
            }
            n = a;
            m = b;
            g = Multigraph(static_cast<int>(n));
            have_header = true;
            continue;
        }
        if (g.edge_count() >= m) {
            throw ParseError(line_no, "more edges than declared in header");
        }
        if (a < 0 || a >= n || b < 0 || b >= n) {
            throw ParseError(line_no, "vertex id out of range (n=" + std::to_string(n) + ")");
        }
        g.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (!have_header) {
        throw ParseError(line_no, "missing header");
    }
    if (g.edge_count() != m) {
        throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " +
                                      std::to_string(g.edge_count()));
    }
    return g;
}

Multigraph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

void write_graph(std::ostream& out, const Multigraph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
}

}  // namespace sparsity
