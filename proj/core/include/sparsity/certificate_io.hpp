#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "sparsity/decomposition.hpp"

namespace sparsity {

// Certificate JSON:
//
//   {"k":2,"l":2,"n":4,"kind":"maps-and-trees",
//    "edges":[{"id":0,"u":0,"v":1,"color":0,"oriented_from":0}, ...],
//    "roles":{"trees":[[0,2,4]],"maps":[]}}
//
// "roles" appears only for maps-and-trees and proper-ltk. Output is
// deterministic, so parse followed by write reproduces the bytes.

std::string certificate_to_json(const Certificate& cert);
void write_certificate(std::ostream& out, const Certificate& cert);

/// Throws ParseError for malformed JSON or a schema mismatch.
Certificate parse_certificate(std::string_view text);
Certificate parse_certificate(std::istream& in);

}  // namespace sparsity
