#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "posetope/poset.hpp"

namespace posetope {

// Poset text format:
//
//   # comment
//   elements: a b c d      (optional; required for isolated elements)
//   a < c
//   b < c
//
// Relations may be covers or implied pairs. Without an "elements:" line the
// element order is the order of first appearance.

/// Throws ParseError (with line and column) or CycleDetected.
Poset parse_poset(std::string_view text);

Poset read_poset_file(const std::filesystem::path& path);

/// Elements line followed by the cover relations.
std::string format_poset(const Poset& p);

}  // namespace posetope
