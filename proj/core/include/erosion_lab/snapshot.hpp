#pragma once

#include <string>
#include <utility>

#include "erosion_lab/coloring.hpp"

namespace elab {

/// Snapshot text format: header "n=<n> alpha=<alpha> t=<t>", then n+1 rows
/// of n characters, top row (row = n) first, 'B' blue / 'R' red. alpha is
/// printed as a decimal when exact in decimal, else as "p/q".
std::string render_snapshot(const Coloring& state, long t);

struct ParsedSnapshot {
  Coloring state;
  long t = 0;
};

ParsedSnapshot parse_snapshot(const std::string& text);

/// Region grid: the snapshot layout with '1' marking membership and '0'
/// non-membership. Used by the `potential` subcommand.
std::string render_region_grid(const std::vector<std::uint8_t>& members, int n);

std::pair<std::vector<std::uint8_t>, int> parse_region_grid(const std::string& text);

}  // namespace elab
