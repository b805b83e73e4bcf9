#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "atsp/geometry.h"

namespace atsp {

// Ordered list of regions plus generator metadata; the unit of I/O.
struct Instance {
  std::vector<Region> regions;
  std::string label;
  std::optional<double> epsilon_meta;
  // Reference visiting sequences recorded by a generator (e.g. "row_snake").
  std::map<std::string, std::vector<std::size_t>> named_orderings;

  std::size_t size() const { return regions.size(); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Compiled candidate sets, one per region, in region order.
using CandidateSets = std::vector<std::vector<Point>>;

CandidateSets compile_all(const Instance& instance);

}  // namespace atsp
