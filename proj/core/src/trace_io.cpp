#include "sparsity/trace_io.hpp"

#include <cstdio>
#include <iostream>
#include <string>

#include <json.hpp>

namespace sparsity {

namespace {

std::string hex64(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

int field(const nlohmann::json& obj, const char* key, std::size_t line) {
    const auto it = obj.find(key);
    if (it == obj.end() || !it->is_number_integer()) {
        throw ParseError(line, std::string("missing integer \"") + key + "\"");
    }
    return it->get<int>();
}

}  // namespace

void write_trace(std::ostream& out, const Trace& trace) {
    nlohmann::ordered_json header{{"type", "header"}, {"n", trace.n}, {"k", trace.params.k()}, {"l", trace.params.l()}};
    out << header.dump() << '\n';
    for (const MoveRecord& move : trace.moves) {
        nlohmann::ordered_json line;
        if (const auto* add = std::get_if<AddEdgeMove>(&move)) {
            line = {{"op", "add_edge"}, {"v", add->v}, {"w", add->w}, {"color", add->color}};
        } else {
            const auto& slide = std::get<SlideMove>(move);
            line = {{"op", "slide"}, {"edge", slide.edge}, {"tail", slide.tail}, {"head", slide.head},
                    {"color", slide.color}};
        }
        out << line.dump() << '\n';
    }
    nlohmann::ordered_json footer{{"type", "footer"}, {"moves", trace.moves.size()}};
    if (trace.final_hash) {
        footer["hash"] = hex64(*trace.final_hash);
    }
    out << footer.dump() << '\n';
}

Trace parse_trace(std::istream& in) {
    Trace trace;
    bool have_header = false;
    bool have_footer = false;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        if (text.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        if (have_footer) {
            throw ParseError(line, "content after footer");
        }
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error&) {
            throw ParseError(line, "malformed JSON");
        }
        if (!obj.is_object()) {
            throw ParseError(line, "expected a JSON object");
        }
        const std::string type = obj.value("type", std::string{});
        if (!have_header) {
            if (type != "header") {
                throw ParseError(line, "trace must start with a header");
            }
            trace.n = field(obj, "n", line);
            try {
                trace.params = SparsityParams(field(obj, "k", line), field(obj, "l", line));
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                throw ParseError(line, e.what());
            }
            have_header = true;
            continue;
        }
        if (type == "footer") {
            const int moves = field(obj, "moves", line);
            if (moves != static_cast<int>(trace.moves.size())) {
                throw ParseError(line, "footer announces " + std::to_string(moves) + " moves, found " +
                                           std::to_string(trace.moves.size()));
            }
            if (const auto h = obj.find("hash"); h != obj.end()) {
                if (!h->is_string()) {
                    throw ParseError(line, "hash must be a hex string");
                }
                try {
                    trace.final_hash = std::stoull(h->get<std::string>(), nullptr, 16);
                } catch (const std::exception&) {
                    throw ParseError(line, "hash must be a hex string");
                }
            }
            have_footer = true;
            continue;
        }
        const std::string op = obj.value("op", std::string{});
        if (op == "add_edge") {
            trace.moves.emplace_back(AddEdgeMove{field(obj, "v", line), field(obj, "w", line), field(obj, "color", line)});
        } else if (op == "slide") {
            trace.moves.emplace_back(SlideMove{field(obj, "edge", line), field(obj, "tail", line),
                                               field(obj, "head", line), field(obj, "color", line)});
        } else {
            throw ParseError(line, "unknown op \"" + op + "\"");
        }
    }
    if (!have_header) {
        throw ParseError(line + 1, "empty trace");
    }
    return trace;
}

}  // namespace sparsity
