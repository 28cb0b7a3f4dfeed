#pragma once

#include <iosfwd>

#include "sparsity/decomposition.hpp"

namespace sparsity {

/// Graphviz output of a certificate: edges point away from their tail and
/// are drawn in a per-color palette. Tree and map roles go into the label.
void write_dot(std::ostream& out, const Multigraph& g, const Certificate& cert);

/// Plain undirected Graphviz output.
void write_dot(std::ostream& out, const Multigraph& g);

}  // namespace sparsity
