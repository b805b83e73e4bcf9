#include "atsp/adversary.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "atsp/error.h"

namespace atsp {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr std::size_t kFree = static_cast<std::size_t>(-1);

double tie_tolerance(double best) { return 1e-12 * std::max(1.0, best); }

void check_evaluable(const CandidateSets& cands,
                     std::span<const std::size_t> seq, bool closed) {
  if (seq.size() != cands.size()) {
    throw InvalidInstance("ordering has " + std::to_string(seq.size()) +
                          " entries but the instance has " +
                          std::to_string(cands.size()) + " regions");
  }
  if (closed && seq.size() < 2) {
    throw InvalidInstance("a closed tour needs at least 2 regions");
  }
  if (!closed && seq.empty()) {
    throw InvalidInstance("an open path needs at least 1 region");
  }
  for (std::size_t r = 0; r < cands.size(); ++r) {
    if (cands[r].empty()) {
      throw InvalidInstance("region " + std::to_string(r) +
                            " has an empty candidate set");
    }
  }
}

// Max-plus DP over the sequence. `fixed[r]` restricts region r to a single
// candidate unless it is kFree.
double constrained_max(const CandidateSets& cands,
                       std::span<const std::size_t> seq, bool closed,
                       std::span<const std::size_t> fixed) {
  const auto allowed = [&](std::size_t region, std::size_t c) {
    return fixed.empty() || fixed[region] == kFree || fixed[region] == c;
  };
  const std::size_t n = seq.size();
  std::vector<double> cur;
  std::vector<double> next;

  const auto advance = [&](std::size_t from_region, std::size_t to_region) {
    const auto& from = cands[from_region];
    const auto& to = cands[to_region];
    next.assign(to.size(), kNegInf);
    for (std::size_t j = 0; j < to.size(); ++j) {
      if (!allowed(to_region, j)) continue;
      double best = kNegInf;
      for (std::size_t i = 0; i < from.size(); ++i) {
        if (cur[i] == kNegInf) continue;
        best = std::max(best, cur[i] + distance(from[i], to[j]));
      }
      next[j] = best;
    }
    cur.swap(next);
  };

  if (!closed) {
    const auto first = seq[0];
    cur.assign(cands[first].size(), kNegInf);
    for (std::size_t j = 0; j < cur.size(); ++j) {
      if (allowed(first, j)) cur[j] = 0.0;
    }
    for (std::size_t t = 1; t < n; ++t) advance(seq[t - 1], seq[t]);
    return *std::max_element(cur.begin(), cur.end());
  }

  const auto first = seq[0];
  const auto& anchors = cands[first];
  double overall = kNegInf;
  for (std::size_t a = 0; a < anchors.size(); ++a) {
    if (!allowed(first, a)) continue;
    const auto second = seq[1];
    cur.assign(cands[second].size(), kNegInf);
    for (std::size_t j = 0; j < cur.size(); ++j) {
      if (allowed(second, j)) cur[j] = distance(anchors[a], cands[second][j]);
    }
    for (std::size_t t = 2; t < n; ++t) advance(seq[t - 1], seq[t]);
    const auto& last = cands[seq[n - 1]];
    for (std::size_t j = 0; j < last.size(); ++j) {
      if (cur[j] == kNegInf) continue;
      overall = std::max(overall, cur[j] + distance(last[j], anchors[a]));
    }
  }
  return overall;
}

Ordering normalized(const Ordering& ordering, bool closed) {
  return closed ? Ordering::cycle(ordering.sequence())
                : Ordering::path(ordering.sequence());
}

}  // namespace

bool is_permutation_of_range(std::span<const std::size_t> perm) {
  std::vector<bool> seen(perm.size(), false);
  for (auto v : perm) {
    if (v >= perm.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Ordering Ordering::cycle(std::vector<std::size_t> perm) {
  if (!is_permutation_of_range(perm)) {
    throw InvalidArgument("ordering is not a permutation of 0..n-1");
  }
  if (perm.size() >= 2) {
    std::rotate(perm.begin(), std::min_element(perm.begin(), perm.end()),
                perm.end());
    if (perm.back() < perm[1]) std::reverse(perm.begin() + 1, perm.end());
  }
  return Ordering(std::move(perm), true);
}

Ordering Ordering::path(std::vector<std::size_t> perm) {
  if (!is_permutation_of_range(perm)) {
    throw InvalidArgument("ordering is not a permutation of 0..n-1");
  }
  if (perm.size() >= 2 && perm.front() > perm.back()) {
    std::reverse(perm.begin(), perm.end());
  }
  return Ordering(std::move(perm), false);
}

Ordering Ordering::identity(std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  return Ordering(std::move(perm), true);
}

double tour_length(const CandidateSets& cands, const Ordering& ordering,
                   std::span<const std::size_t> choice, bool closed) {
  const auto& seq = ordering.sequence();
  if (seq.empty()) return 0.0;
  const auto at = [&](std::size_t t) -> const Point& {
    return cands[seq[t]][choice[seq[t]]];
  };
  double sum = 0.0;
  for (std::size_t t = 1; t < seq.size(); ++t) sum += distance(at(t - 1), at(t));
  if (closed) sum += distance(at(seq.size() - 1), at(0));
  return sum;
}

double adversarial_length(const CandidateSets& cands,
                          std::span<const std::size_t> sequence, bool closed) {
  check_evaluable(cands, sequence, closed);
  return constrained_max(cands, sequence, closed, {});
}

AdversarialTour adversarial_value(const CandidateSets& cands,
                                  const Ordering& ordering, bool closed) {
  const Ordering ord = normalized(ordering, closed);
  const auto& seq = ord.sequence();
  check_evaluable(cands, seq, closed);

  const double best = constrained_max(cands, seq, closed, {});
  const double floor = best - tie_tolerance(best);

  // Fix regions in id order to the smallest candidate that still admits a
  // selection within tolerance of the optimum.
  std::vector<std::size_t> fixed(cands.size(), kFree);
  for (std::size_t r = 0; r < cands.size(); ++r) {
    for (std::size_t c = 0; c < cands[r].size(); ++c) {
      fixed[r] = c;
      if (constrained_max(cands, seq, closed, fixed) >= floor) break;
    }
  }

  AdversarialTour tour;
  tour.ordering = ord;
  tour.choice = std::move(fixed);
  tour.closed = closed;
  tour.length = tour_length(cands, ord, tour.choice, closed);
  return tour;
}

AdversarialTour adversarial_value(const Instance& instance,
                                  const Ordering& ordering, bool closed) {
  return adversarial_value(compile_all(instance), ordering, closed);
}

AdversarialTour adversarial_value_bruteforce(const Instance& instance,
                                             const Ordering& ordering,
                                             bool closed,
                                             std::uint64_t* enumerated) {
  const CandidateSets cands = compile_all(instance);
  const Ordering ord = normalized(ordering, closed);
  check_evaluable(cands, ord.sequence(), closed);

  std::uint64_t combos = 1;
  for (const auto& c : cands) {
    if (combos > kBruteForceLimit / c.size()) {
      throw TooLarge("brute-force guard: more than " +
                     std::to_string(kBruteForceLimit) +
                     " candidate combinations");
    }
    combos *= c.size();
  }
  if (combos > kBruteForceLimit) {
    throw TooLarge("brute-force guard: more than " +
                   std::to_string(kBruteForceLimit) + " candidate combinations");
  }

  // Odometer in region-id order (last region fastest): visits choice vectors
  // in lexicographic order.
  const auto for_each_choice = [&](auto&& visit) {
    std::vector<std::size_t> choice(cands.size(), 0);
    while (true) {
      if (!visit(choice)) return;
      std::size_t r = cands.size();
      while (r > 0) {
        --r;
        if (++choice[r] < cands[r].size()) break;
        choice[r] = 0;
        if (r == 0) return;
      }
      if (cands.empty()) return;
    }
  };

  double best = kNegInf;
  std::uint64_t count = 0;
  for_each_choice([&](const std::vector<std::size_t>& choice) {
    ++count;
    best = std::max(best, tour_length(cands, ord, choice, closed));
    return true;
  });
  if (enumerated != nullptr) *enumerated = count;

  const double floor = best - tie_tolerance(best);
  AdversarialTour tour;
  tour.ordering = ord;
  tour.closed = closed;
  for_each_choice([&](const std::vector<std::size_t>& choice) {
    const double len = tour_length(cands, ord, choice, closed);
    if (len >= floor) {
      tour.choice = choice;
      tour.length = len;
      return false;
    }
    return true;
  });
  return tour;
}

double segment_pair_route_max(double x, double y) {
  return std::max({3.0 - x - y, x + y, x + 1.0 - y});
}

double segment_pair_minmax() {
  constexpr int kGrid = 2001;
  constexpr int kRefineRounds = 20;
  constexpr int kLocal = 21;

  double best = std::numeric_limits<double>::infinity();
  double bx = 0.0;
  double by = 0.0;
  for (int i = 0; i < kGrid; ++i) {
    const double x = static_cast<double>(i) / (kGrid - 1);
    for (int j = 0; j < kGrid; ++j) {
      const double y = static_cast<double>(j) / (kGrid - 1);
      const double v = segment_pair_route_max(x, y);
      if (v < best) {
        best = v;
        bx = x;
        by = y;
      }
    }
  }

  double half = 1.0 / (kGrid - 1);
  for (int round = 0; round < kRefineRounds; ++round) {
    const double cx = bx;
    const double cy = by;
    for (int i = 0; i < kLocal; ++i) {
      const double x = std::clamp(cx - half + 2.0 * half * i / (kLocal - 1), 0.0, 1.0);
      for (int j = 0; j < kLocal; ++j) {
        const double y =
            std::clamp(cy - half + 2.0 * half * j / (kLocal - 1), 0.0, 1.0);
        const double v = segment_pair_route_max(x, y);
        if (v < best) {
          best = v;
          bx = x;
          by = y;
        }
      }
    }
    half *= 0.5;
  }
  return best;
}

}  // namespace atsp
