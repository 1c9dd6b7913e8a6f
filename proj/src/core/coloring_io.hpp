#pragma once

#include <iosfwd>
#include <string>
#include <utility>

#include "coloring.hpp"
#include "field.hpp"

namespace rtri {

// Coloring text format, decimal ASCII, LF line endings:
//   field p=<p> k=<k> [modulus=<c0,...,ck>]
//   colors <count>
//   <point-index> <color-id>      (q^2 lines, each index exactly once)
// '#' comment lines are permitted before the data block.
void save_coloring(const Field& field, const Coloring& c, std::ostream& out);
void save_coloring_file(const Field& field, const Coloring& c, const std::string& path);

std::pair<Field, Coloring> load_coloring(std::istream& in);
std::pair<Field, Coloring> load_coloring_file(const std::string& path);

} // namespace rtri
