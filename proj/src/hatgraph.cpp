#include "atsp/hatgraph.h"

#include <cmath>

#include "atsp/error.h"

namespace atsp {

HatGraph build_hatgraph(const CandidateSets& cands) {
  const std::size_t n = cands.size();
  WeightMatrix w(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double best = 0.0;
      for (const auto& s : cands[i]) {
        for (const auto& t : cands[j]) best = std::max(best, distance(s, t));
      }
      w(i, j) = w(j, i) = best;
    }
  }
  return HatGraph{std::move(w)};
}

HatGraph build_hatgraph(const Instance& instance) {
  return build_hatgraph(compile_all(instance));
}

double disk_w_exact(const Region& d1, const Region& d2) {
  if (d1.kind() != RegionKind::Disk || d2.kind() != RegionKind::Disk) {
    throw InvalidArgument("disk_w_exact requires two disk regions");
  }
  const auto& a = d1.as<Disk>();
  const auto& b = d2.as<Disk>();
  return distance(a.center, b.center) + a.radius + b.radius;
}

std::string MetricViolation::describe() const {
  const auto ij = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  switch (kind) {
    case Kind::Asymmetric:
      return "asymmetric entry " + ij;
    case Kind::Negative:
      return "negative entry " + ij;
    case Kind::NonzeroDiagonal:
      return "nonzero diagonal at " + std::to_string(i);
    case Kind::NonFinite:
      return "non-finite entry " + ij;
    case Kind::Triangle:
      return "triangle inequality fails for " + ij + " via " +
             std::to_string(k) + " by " + std::to_string(excess);
  }
  return {};
}

MetricReport verify_metric(const WeightMatrix& w) {
  using Kind = MetricViolation::Kind;
  MetricReport report;
  auto& out = report.violations;
  const std::size_t n = w.size();
  bool finite = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (w(i, i) != 0.0) out.push_back({Kind::NonzeroDiagonal, i, i, 0, w(i, i)});
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(w(i, j))) {
        out.push_back({Kind::NonFinite, i, j, 0, 0.0});
        finite = false;
      } else if (w(i, j) < 0.0) {
        out.push_back({Kind::Negative, i, j, 0, -w(i, j)});
      }
      if (j > i && std::abs(w(i, j) - w(j, i)) > kMetricTolerance) {
        out.push_back({Kind::Asymmetric, i, j, 0, std::abs(w(i, j) - w(j, i))});
      }
    }
  }
  if (!finite) return report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double excess = w(i, j) - (w(i, k) + w(k, j));
        if (excess > kMetricTolerance) {
          out.push_back({Kind::Triangle, i, j, k, excess});
        }
      }
    }
  }
  return report;
}

}  // namespace atsp
