#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "atsp/geometry.h"

namespace atsp {

// Dense square matrix of edge weights, row-major.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  explicit WeightMatrix(std::size_t n, double fill = 0.0)
      : n_(n), data_(n * n, fill) {}
  // Throws InvalidArgument if data.size() != n*n.
  WeightMatrix(std::size_t n, std::vector<double> data);

  static WeightMatrix euclidean(std::span<const Point> pts);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  bool is_symmetric(double tol = 0.0) const;

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

// Weight of the closed cycle visiting `seq` in order.
double cycle_weight(const WeightMatrix& w, std::span<const std::size_t> seq);

}  // namespace atsp
