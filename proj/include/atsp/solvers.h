#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "atsp/adversary.h"
#include "atsp/instance.h"
#include "atsp/tsp.h"

namespace atsp {

enum class Method {
  ExactAtsp,             // exhaustive over orderings
  HatgraphExact,         // Held-Karp on the max-distance graph
  HatgraphChristofides,  // Christofides on the max-distance graph
  HatgraphMst2,          // tree doubling on the max-distance graph
  CenterTsp,             // TSP on region centers
  TspnOrder,             // ordering of an optimal one-of-a-set tour
};

std::string_view method_tag(Method m);

struct SolveResult {
  Ordering ordering;
  AdversarialTour tour;
  Method method = Method::ExactAtsp;
  // Graph cycle weight for the hat-graph pipelines, center-tour length for
  // CenterTsp, TSPN length for TspnOrder.
  std::optional<double> aux_weight;
};

inline constexpr std::size_t kExactAtspMaxRegions = 9;
inline constexpr std::size_t kTspnMaxRegions = 8;
inline constexpr std::size_t kTspnMaxCandidates = 64;

// Every canonical cyclic ordering of n >= 2 regions, in lexicographic order.
std::vector<Ordering> canonical_cycles(std::size_t n);

// Minimizes the adversarial value over all (n-1)!/2 canonical orderings.
// Ties go to the lexicographically smallest ordering. Throws TooLarge for
// n > 9.
SolveResult exact_atsp(const Instance& instance);

// Optimal TSP on the max-distance graph; at most twice the optimum.
SolveResult atsp_2approx(const Instance& instance);

// Christofides on the max-distance graph; at most three times the optimum.
SolveResult atsp_3approx(const Instance& instance);

// Tree-doubling tour on the max-distance graph (scalable fallback).
SolveResult atsp_mst2(const Instance& instance);

// TSP on region centers: Held-Karp if `exact`, otherwise Christofides.
SolveResult center_tsp_ordering(const Instance& instance, bool exact);

struct TspnResult {
  Ordering ordering;
  std::vector<std::size_t> choice;  // indexed by region id
  double length = 0.0;
};

// Shortest closed tour visiting one candidate per region (the adversary's
// min-min dual), by a minimizing DP per canonical ordering. Throws TooLarge
// for n > 8 or more than 64 candidates in a region.
TspnResult tspn_exact(const Instance& instance);

// Adversarial evaluation of the TSPN ordering.
SolveResult tspn_ordering(const Instance& instance);

}  // namespace atsp
