#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "atsp/instance.h"
#include "atsp/matrix.h"

namespace atsp {

// Complete graph on regions; w(i, j) is the largest distance between a
// candidate of region i and a candidate of region j.
struct HatGraph {
  WeightMatrix w;

  std::size_t size() const { return w.size(); }
};

HatGraph build_hatgraph(const Instance& instance);
HatGraph build_hatgraph(const CandidateSets& cands);

// Continuous max distance between two disks: |c1 c2| + r1 + r2.
// Throws InvalidArgument unless both regions are disks.
double disk_w_exact(const Region& d1, const Region& d2);

inline constexpr double kMetricTolerance = 1e-9;

struct MetricViolation {
  enum class Kind { Asymmetric, Negative, NonzeroDiagonal, NonFinite, Triangle };

  Kind kind;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;  // intermediate vertex for Triangle
  double excess = 0.0;

  std::string describe() const;
};

struct MetricReport {
  std::vector<MetricViolation> violations;

  bool is_metric() const { return violations.empty(); }
};

// Checks symmetry, nonnegativity, zero diagonal, finiteness and, for every
// unordered pair {i, j} with i < j and every other k,
// w(i, j) <= w(i, k) + w(k, j) + kMetricTolerance.
MetricReport verify_metric(const WeightMatrix& w);
inline MetricReport verify_metric(const HatGraph& g) { return verify_metric(g.w); }

}  // namespace atsp
