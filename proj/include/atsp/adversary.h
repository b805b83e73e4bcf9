#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "atsp/instance.h"

namespace atsp {

// A visiting sequence of region indices. Cyclic orderings are stored in
// canonical form: rotated so the smallest index comes first, and oriented so
// the second element is the smaller neighbour of the first. Path orderings
// keep their sequence, oriented so that front() < back().
class Ordering {
 public:
  Ordering() = default;

  // Throws InvalidArgument unless `perm` is a permutation of 0..n-1.
  static Ordering cycle(std::vector<std::size_t> perm);
  static Ordering path(std::vector<std::size_t> perm);
  static Ordering identity(std::size_t n);

  const std::vector<std::size_t>& sequence() const { return perm_; }
  std::size_t size() const { return perm_.size(); }
  bool is_cycle() const { return cyclic_; }
  std::size_t operator[](std::size_t i) const { return perm_[i]; }

  friend bool operator==(const Ordering&, const Ordering&) = default;
  friend auto operator<=>(const Ordering& a, const Ordering& b) {
    return a.perm_ <=> b.perm_;
  }

 private:
  Ordering(std::vector<std::size_t> perm, bool cyclic)
      : perm_(std::move(perm)), cyclic_(cyclic) {}

  std::vector<std::size_t> perm_;
  bool cyclic_ = true;
};

bool is_permutation_of_range(std::span<const std::size_t> perm);

struct AdversarialTour {
  Ordering ordering;
  // choice[r] indexes the candidate picked in region r.
  std::vector<std::size_t> choice;
  double length = 0.0;
  bool closed = true;
};

// Length of the tour through `choice` along `ordering`, summed from the
// first region of the sequence onward.
double tour_length(const CandidateSets& cands, const Ordering& ordering,
                   std::span<const std::size_t> choice, bool closed);

// Exact adversary: the maximum over all candidate selections of the tour
// length through the regions in `ordering`. For a cycle the first region's
// candidate is fixed in turn and a forward max-plus DP runs over the rest,
// O(n k^3). Among selections within 1e-12 (relative) of the optimum the
// lexicographically smallest choice vector (by region id) is returned.
//
// Throws InvalidInstance if a cycle has fewer than 2 regions, a path has
// none, or the ordering does not match the instance size.
AdversarialTour adversarial_value(const Instance& instance,
                                  const Ordering& ordering, bool closed);
AdversarialTour adversarial_value(const CandidateSets& cands,
                                  const Ordering& ordering, bool closed);

// Value-only fast path used inside exhaustive ordering searches.
double adversarial_length(const CandidateSets& cands,
                          std::span<const std::size_t> sequence, bool closed);

inline constexpr std::uint64_t kBruteForceLimit = 10'000'000;

// Exhaustive oracle over every candidate combination; throws TooLarge if the
// product of candidate-set sizes exceeds kBruteForceLimit. Uses the same
// tie rule as adversarial_value. If `enumerated` is non-null it receives the
// number of combinations visited.
AdversarialTour adversarial_value_bruteforce(const Instance& instance,
                                             const Ordering& ordering,
                                             bool closed,
                                             std::uint64_t* enumerated = nullptr);

// Worst-case route cost for the two-segment gadget: with x = |b1 a| and
// y = |c2 b1|, the adversary takes the longest of 3-x-y, x+y and x+1-y.
double segment_pair_route_max(double x, double y);

// min over [0,1]^2 of segment_pair_route_max, by a 2001x2001 grid followed
// by 20 rounds of local window-halving refinement.
double segment_pair_minmax();

}  // namespace atsp
