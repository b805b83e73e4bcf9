#pragma once

#include <cstddef>
#include <vector>

#include "atsp/adversary.h"
#include "atsp/matrix.h"

namespace atsp {

struct TspTour {
  Ordering ordering;  // canonical cycle
  double weight = 0.0;
};

inline constexpr std::size_t kHeldKarpMaxNodes = 16;
inline constexpr std::size_t kMatchingMaxOdd = 22;

// Exact minimum Hamiltonian cycle by subset DP, O(2^n n^2).
// Throws TooLarge for n > 16 and InvalidArgument for an asymmetric matrix.
TspTour held_karp_tsp(const WeightMatrix& w);

// Prim MST rooted at 0 (ties to the smaller index) as a parent array;
// parent[0] == 0.
std::vector<std::size_t> prim_mst(const WeightMatrix& w);

// Tree doubling with preorder shortcut. Throws InvalidArgument if the matrix
// is not a metric.
TspTour mst_double_tsp(const WeightMatrix& w);

// Exact minimum-weight perfect matching on `vertices` (even count) by DP over
// subsets, O(2^q q). Returns pairs of vertex ids. Throws TooLarge past
// kMatchingMaxOdd vertices.
std::vector<std::pair<std::size_t, std::size_t>> min_weight_perfect_matching(
    const WeightMatrix& w, const std::vector<std::size_t>& vertices);

// MST + exact matching on odd-degree vertices + Euler circuit + shortcut.
// Throws InvalidArgument for a non-metric matrix and TooLarge when the MST
// has more than kMatchingMaxOdd odd vertices.
TspTour christofides_tsp(const WeightMatrix& w);

}  // namespace atsp
