#pragma once

// Text formats. All point and vertex indices in files are 1-based; '#' starts
// a comment that runs to the end of the line.
//
//   group:   "degree g", then g lines with `degree` images each
//   digraph: "n m", then m lines "u v"
//   design:  "v b", then b lines listing the points of a block
//
// Scheme files and group tables are handled by parse_scheme / parse_group_table.

#include <string>
#include <string_view>

#include "dsrg/designs.hpp"
#include "dsrg/digraph.hpp"
#include "dsrg/perm.hpp"

namespace dsrg {

PermGroup parse_group(std::string_view text);
std::string format_group(const PermGroup& group);

Digraph parse_digraph(std::string_view text);
std::string format_digraph(const Digraph& g);

BlockDesign parse_design(std::string_view text);
std::string format_design(const BlockDesign& design);

// Whole file contents; throws InputError if the file cannot be read.
std::string read_file(const std::string& path);
// Throws InputError if the file cannot be written.
void write_file(const std::string& path, std::string_view contents);

}  // namespace dsrg
