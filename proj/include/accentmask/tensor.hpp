#pragma once

#include "accentmask/errors.hpp"

#include <Eigen/Dense>

#include <numeric>
#include <string>
#include <vector>

namespace accentmask::nn {

using Index = Eigen::Index;
using RowMatd = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MatMap = Eigen::Map<RowMatd>;
using ConstMatMap = Eigen::Map<const RowMatd>;

/// Dense row-major tensor: shape metadata over a flat Eigen array.
struct Tensor {
  std::vector<Index> shape;
  Eigen::ArrayXd data;

  Tensor() = default;
  explicit Tensor(std::vector<Index> s) : shape(std::move(s)) {
    data = Eigen::ArrayXd::Zero(numel(shape));
  }

  static Tensor zeros(std::vector<Index> s) { return Tensor(std::move(s)); }

  static Index numel(const std::vector<Index>& s) {
    Index n = 1;
    for (Index d : s) {
      if (d < 0) throw ShapeError("negative tensor dimension");
      n *= d;
    }
    return n;
  }

  Index size() const { return data.size(); }
  int rank() const { return static_cast<int>(shape.size()); }
  Index dim(int i) const { return shape.at(static_cast<size_t>(i)); }

  bool same_shape(const Tensor& other) const { return shape == other.shape; }

  MatMap as_matrix(Index rows, Index cols) {
    if (rows * cols != size()) throw ShapeError("matrix view size mismatch");
    return MatMap(data.data(), rows, cols);
  }
  ConstMatMap as_matrix(Index rows, Index cols) const {
    if (rows * cols != size()) throw ShapeError("matrix view size mismatch");
    return ConstMatMap(data.data(), rows, cols);
  }

  std::string shape_str() const;
};

}  // namespace accentmask::nn
