#include "atsp/solvers.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "atsp/error.h"
#include "atsp/hatgraph.h"
#include "atsp/parallel.h"

namespace atsp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_cycle_size(const Instance& instance) {
  if (instance.size() < 2) {
    throw InvalidInstance("a tour needs at least 2 regions");
  }
}

// Index of the smallest (length, ordering) pair; a total order, so the result
// does not depend on how lengths were computed in parallel.
std::size_t argmin_ordering(const std::vector<double>& lengths,
                            const std::vector<Ordering>& orderings) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < lengths.size(); ++i) {
    if (lengths[i] < lengths[best] ||
        (lengths[i] == lengths[best] && orderings[i] < orderings[best])) {
      best = i;
    }
  }
  return best;
}

SolveResult evaluate(const CandidateSets& cands, const Ordering& ordering,
                     Method method, std::optional<double> aux) {
  SolveResult r;
  r.tour = adversarial_value(cands, ordering, true);
  r.ordering = r.tour.ordering;
  r.method = method;
  r.aux_weight = aux;
  return r;
}

// Min-plus DP over candidate selections for one cyclic sequence. When
// `choice_out` is non-null the argmin selection is written there.
double min_tour(const CandidateSets& cands, std::span<const std::size_t> seq,
                std::vector<std::size_t>* choice_out) {
  const std::size_t n = seq.size();
  double overall = kInf;
  const auto& anchors = cands[seq[0]];
  std::vector<double> cur;
  std::vector<double> next;
  // back[t][j]: predecessor candidate of candidate j at sequence step t.
  std::vector<std::vector<std::size_t>> back(n);
  for (std::size_t a = 0; a < anchors.size(); ++a) {
    const auto& second = cands[seq[1]];
    cur.resize(second.size());
    for (std::size_t j = 0; j < second.size(); ++j) {
      cur[j] = distance(anchors[a], second[j]);
    }
    if (choice_out) back[1].assign(second.size(), a);
    for (std::size_t t = 2; t < n; ++t) {
      const auto& from = cands[seq[t - 1]];
      const auto& to = cands[seq[t]];
      next.assign(to.size(), kInf);
      if (choice_out) back[t].assign(to.size(), 0);
      for (std::size_t j = 0; j < to.size(); ++j) {
        for (std::size_t i = 0; i < from.size(); ++i) {
          const double c = cur[i] + distance(from[i], to[j]);
          if (c < next[j]) {
            next[j] = c;
            if (choice_out) back[t][j] = i;
          }
        }
      }
      cur.swap(next);
    }
    const auto& last = cands[seq[n - 1]];
    for (std::size_t j = 0; j < last.size(); ++j) {
      const double c = cur[j] + distance(last[j], anchors[a]);
      if (c < overall) {
        overall = c;
        if (choice_out) {
          auto& choice = *choice_out;
          choice.assign(n, 0);
          std::size_t k = j;
          for (std::size_t t = n - 1; t >= 1; --t) {
            choice[seq[t]] = k;
            k = back[t][k];
          }
          choice[seq[0]] = a;
        }
      }
    }
  }
  return overall;
}

}  // namespace

std::string_view method_tag(Method m) {
  switch (m) {
    case Method::ExactAtsp:
      return "EXACT_ATSP";
    case Method::HatgraphExact:
      return "HATGRAPH_EXACT";
    case Method::HatgraphChristofides:
      return "HATGRAPH_CHRISTOFIDES";
    case Method::HatgraphMst2:
      return "HATGRAPH_MST2";
    case Method::CenterTsp:
      return "CENTER_TSP";
    case Method::TspnOrder:
      return "TSPN_ORDER";
  }
  return "UNKNOWN";
}

std::vector<Ordering> canonical_cycles(std::size_t n) {
  std::vector<Ordering> out;
  if (n < 2) return out;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (n < 3 || perm[1] < perm[n - 1]) out.push_back(Ordering::cycle(perm));
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return out;
}

SolveResult exact_atsp(const Instance& instance) {
  if (instance.size() > kExactAtspMaxRegions) {
    throw TooLarge("exact ATSP guard: " + std::to_string(instance.size()) +
                   " regions exceeds " + std::to_string(kExactAtspMaxRegions));
  }
  require_cycle_size(instance);
  const CandidateSets cands = compile_all(instance);
  const auto orderings = canonical_cycles(instance.size());
  std::vector<double> lengths(orderings.size());
  // Validate once on the calling thread so errors surface here.
  (void)adversarial_length(cands, orderings.front().sequence(), true);
  parallel_for(orderings.size(), [&](std::size_t i) {
    lengths[i] = adversarial_length(cands, orderings[i].sequence(), true);
  });
  const auto best = argmin_ordering(lengths, orderings);
  return evaluate(cands, orderings[best], Method::ExactAtsp, std::nullopt);
}

SolveResult atsp_2approx(const Instance& instance) {
  require_cycle_size(instance);
  const CandidateSets cands = compile_all(instance);
  const auto tsp = held_karp_tsp(build_hatgraph(cands).w);
  return evaluate(cands, tsp.ordering, Method::HatgraphExact, tsp.weight);
}

SolveResult atsp_3approx(const Instance& instance) {
  require_cycle_size(instance);
  const CandidateSets cands = compile_all(instance);
  const auto tsp = christofides_tsp(build_hatgraph(cands).w);
  return evaluate(cands, tsp.ordering, Method::HatgraphChristofides, tsp.weight);
}

SolveResult atsp_mst2(const Instance& instance) {
  require_cycle_size(instance);
  const CandidateSets cands = compile_all(instance);
  const auto tsp = mst_double_tsp(build_hatgraph(cands).w);
  return evaluate(cands, tsp.ordering, Method::HatgraphMst2, tsp.weight);
}

SolveResult center_tsp_ordering(const Instance& instance, bool exact) {
  require_cycle_size(instance);
  std::vector<Point> centers;
  centers.reserve(instance.size());
  for (const auto& r : instance.regions) centers.push_back(center(r));
  const auto w = WeightMatrix::euclidean(centers);
  const auto tsp = exact ? held_karp_tsp(w) : christofides_tsp(w);
  return evaluate(compile_all(instance), tsp.ordering, Method::CenterTsp,
                  tsp.weight);
}

TspnResult tspn_exact(const Instance& instance) {
  if (instance.size() > kTspnMaxRegions) {
    throw TooLarge("TSPN guard: " + std::to_string(instance.size()) +
                   " regions exceeds " + std::to_string(kTspnMaxRegions));
  }
  require_cycle_size(instance);
  const CandidateSets cands = compile_all(instance);
  for (std::size_t r = 0; r < cands.size(); ++r) {
    if (cands[r].size() > kTspnMaxCandidates) {
      throw TooLarge("TSPN guard: region " + std::to_string(r) + " has " +
                     std::to_string(cands[r].size()) + " candidates");
    }
  }
  const auto orderings = canonical_cycles(instance.size());
  std::vector<double> lengths(orderings.size());
  parallel_for(orderings.size(), [&](std::size_t i) {
    lengths[i] = min_tour(cands, orderings[i].sequence(), nullptr);
  });
  const auto best = argmin_ordering(lengths, orderings);

  TspnResult r;
  r.ordering = orderings[best];
  min_tour(cands, r.ordering.sequence(), &r.choice);
  r.length = tour_length(cands, r.ordering, r.choice, true);
  return r;
}

SolveResult tspn_ordering(const Instance& instance) {
  const auto tspn = tspn_exact(instance);
  return evaluate(compile_all(instance), tspn.ordering, Method::TspnOrder,
                  tspn.length);
}

}  // namespace atsp
