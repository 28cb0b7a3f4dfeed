#include "sparsity/dot.hpp"

#include <array>
#include <iostream>

namespace sparsity {

namespace {

constexpr std::array<const char*, 8> kPalette{"gray40", "black", "firebrick", "royalblue",
                                              "darkgreen", "darkorange", "purple", "goldenrod"};

const char* color_name(Color c) { return kPalette[static_cast<std::size_t>(c) % kPalette.size()]; }

}  // namespace

void write_dot(std::ostream& out, const Multigraph& g, const Certificate& cert) {
    out << "digraph decomposition {\n";
    out << "  label=\"" << to_string(cert.kind) << " k=" << cert.params.k() << " l=" << cert.params.l();
    if (cert.has_roles()) {
        out << " trees=" << cert.trees.size() << " maps=" << cert.maps.size();
    }
    out << "\";\n";
    out << "  node [shape=circle];\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v << ";\n";
    }
    for (const CertificateEdge& e : cert.edges) {
        const Vertex head = e.oriented_from == e.u ? e.v : e.u;
        out << "  " << e.oriented_from << " -> " << head << " [color=" << color_name(e.color) << ", label=\"e"
            << e.id << ":c" << e.color << "\"];\n";
    }
    out << "}\n";
}

void write_dot(std::ostream& out, const Multigraph& g) {
    out << "graph input {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v << ";\n";
    }
    for (const Edge& e : g.edges()) {
        out << "  " << e.u << " -- " << e.v << ";\n";
    }
    out << "}\n";
}

}  // namespace sparsity
