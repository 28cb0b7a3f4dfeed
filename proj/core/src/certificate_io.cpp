#include "sparsity/certificate_io.hpp"

#include <algorithm>
#include <iostream>
#include <iterator>
#include <sstream>

#include <json.hpp>

namespace sparsity {

namespace {

void write_id_lists(std::ostream& out, const std::vector<std::vector<EdgeId>>& lists) {
    out << '[';
    for (std::size_t i = 0; i < lists.size(); ++i) {
        out << (i ? ", [" : "[");
        for (std::size_t j = 0; j < lists[i].size(); ++j) {
            out << (j ? ", " : "") << lists[i][j];
        }
        out << ']';
    }
    out << ']';
}

std::size_t line_of(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

int get_int(const nlohmann::json& obj, const char* key, const char* where) {
    const auto it = obj.find(key);
    if (it == obj.end() || !it->is_number_integer()) {
        throw ParseError(1, std::string(where) + ": missing integer \"" + key + "\"");
    }
    return it->get<int>();
}

std::vector<std::vector<EdgeId>> get_id_lists(const nlohmann::json& roles, const char* key) {
    std::vector<std::vector<EdgeId>> lists;
    const auto it = roles.find(key);
    if (it == roles.end()) {
        return lists;
    }
    if (!it->is_array()) {
        throw ParseError(1, std::string("roles: \"") + key + "\" must be an array");
    }
    for (const auto& list : *it) {
        if (!list.is_array()) {
            throw ParseError(1, std::string("roles: \"") + key + "\" must hold arrays of edge ids");
        }
        std::vector<EdgeId> ids;
        for (const auto& id : list) {
            if (!id.is_number_integer()) {
                throw ParseError(1, "roles: edge ids must be integers");
            }
            ids.push_back(id.get<EdgeId>());
        }
        lists.push_back(std::move(ids));
    }
    return lists;
}

}  // namespace

void write_certificate(std::ostream& out, const Certificate& cert) {
    out << "{\n";
    out << "  \"k\": " << cert.params.k() << ",\n";
    out << "  \"l\": " << cert.params.l() << ",\n";
    out << "  \"n\": " << cert.n << ",\n";
    out << "  \"kind\": \"" << to_string(cert.kind) << "\",\n";
    out << "  \"edges\": [";
    for (std::size_t i = 0; i < cert.edges.size(); ++i) {
        const CertificateEdge& e = cert.edges[i];
        out << (i ? ",\n    " : "\n    ") << "{\"id\": " << e.id << ", \"u\": " << e.u << ", \"v\": " << e.v
            << ", \"color\": " << e.color << ", \"oriented_from\": " << e.oriented_from << '}';
    }
    out << (cert.edges.empty() ? "]" : "\n  ]");
    if (cert.has_roles()) {
        out << ",\n  \"roles\": {\"trees\": ";
        write_id_lists(out, cert.trees);
        out << ", \"maps\": ";
        write_id_lists(out, cert.maps);
        out << '}';
    }
    out << "\n}\n";
}

std::string certificate_to_json(const Certificate& cert) {
    std::ostringstream out;
    write_certificate(out, cert);
    return out.str();
}

Certificate parse_certificate(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(line_of(text, e.byte), "malformed JSON");
    }
    if (!doc.is_object()) {
        throw ParseError(1, "certificate must be a JSON object");
    }
    Certificate cert;
    try {
        cert.params = SparsityParams(get_int(doc, "k", "certificate"), get_int(doc, "l", "certificate"));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(1, e.what());
    }
    cert.n = get_int(doc, "n", "certificate");
    const auto kind = doc.find("kind");
    if (kind == doc.end() || !kind->is_string() || !certificate_kind_from_string(kind->get<std::string>())) {
        throw ParseError(1, "certificate: unknown or missing \"kind\"");
    }
    cert.kind = *certificate_kind_from_string(kind->get<std::string>());
    const auto edges = doc.find("edges");
    if (edges == doc.end() || !edges->is_array()) {
        throw ParseError(1, "certificate: missing \"edges\" array");
    }
    for (const auto& e : *edges) {
        if (!e.is_object()) {
            throw ParseError(1, "certificate: edges must be objects");
        }
        cert.edges.push_back({get_int(e, "id", "edge"), get_int(e, "u", "edge"), get_int(e, "v", "edge"),
                              get_int(e, "color", "edge"), get_int(e, "oriented_from", "edge")});
    }
    const auto roles = doc.find("roles");
    if (cert.has_roles()) {
        if (roles == doc.end() || !roles->is_object()) {
            throw ParseError(1, std::string("certificate: kind ") + to_string(cert.kind) + " needs \"roles\"");
        }
        cert.trees = get_id_lists(*roles, "trees");
        cert.maps = get_id_lists(*roles, "maps");
    }
    return cert;
}

Certificate parse_certificate(std::istream& in) {
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_certificate(text);
}

}  // namespace sparsity
