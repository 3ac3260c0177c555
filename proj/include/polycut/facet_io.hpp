#ifndef POLYCUT_FACET_IO_HPP
#define POLYCUT_FACET_IO_HPP

#include <filesystem>
#include <istream>
#include <string>

#include "polycut/complex.hpp"

namespace polycut {

// Facet-list text format:
//
//   dim <d>
//   1 2 3
//   1 2 4      # comments run to end of line
//
// Blank lines are ignored. Serialization emits facets in lexicographic order.

/// Throws InvalidInput on a missing header or non-integer tokens.
SimplicialComplex parse_facet_list(std::istream& in);
SimplicialComplex read_facet_file(const std::filesystem::path& path);

std::string serialize_facet_list(const SimplicialComplex& complex);
void write_facet_file(const std::filesystem::path& path, const SimplicialComplex& complex);

}  // namespace polycut

#endif  // POLYCUT_FACET_IO_HPP
