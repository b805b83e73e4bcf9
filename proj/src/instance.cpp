#include "atsp/instance.h"

namespace atsp {

CandidateSets compile_all(const Instance& instance) {
  CandidateSets out;
  out.reserve(instance.regions.size());
  for (const auto& r : instance.regions) out.push_back(compile_candidates(r));
  return out;
}

}  // namespace atsp
