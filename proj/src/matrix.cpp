#include "atsp/matrix.h"

#include <cmath>

#include "atsp/error.h"

namespace atsp {

WeightMatrix::WeightMatrix(std::size_t n, std::vector<double> data)
    : n_(n), data_(std::move(data)) {
  if (data_.size() != n * n) {
    throw InvalidArgument("weight matrix needs n*n entries");
  }
}

WeightMatrix WeightMatrix::euclidean(std::span<const Point> pts) {
  WeightMatrix m(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      m(i, j) = m(j, i) = distance(pts[i], pts[j]);
    }
  }
  return m;
}

bool WeightMatrix::is_symmetric(double tol) const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    }
  }
  return true;
}

double cycle_weight(const WeightMatrix& w, std::span<const std::size_t> seq) {
  if (seq.size() < 2) return 0.0;
  double sum = 0.0;
  for (std::size_t t = 1; t < seq.size(); ++t) sum += w(seq[t - 1], seq[t]);
  return sum + w(seq.back(), seq.front());
}

}  // namespace atsp
