#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ryser/hypergraph.hpp"

namespace ryser {

// .rhg text format:
//   rhg 1 <num_sides>
//   # name: <name>                       (optional)
//   s <side_index> <vertex_label> ...    (one per side, in order)
//   e ["<label>"] <side.pos> ...         (one per edge)
// Blank lines and lines starting with '#' are ignored otherwise.

std::string format_rhg(const PartiteHypergraph& h);
PartiteHypergraph parse_rhg(std::string_view text);

PartiteHypergraph read_rhg(const std::filesystem::path& path);
/// Writes through a temporary file and renames it into place.
void write_rhg(const PartiteHypergraph& h, const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace ryser
