#pragma once

#include "accentmask/tensor.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace accentmask::nn {

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

/// Named trainable tensor.
struct NamedParam {
  std::string name;
  Tensor* value = nullptr;
};

/// Adam with bias correction. Moment buffers are allocated on the first
/// step and must be fed the same parameter list (same order, same shapes)
/// on every step.
class Adam {
 public:
  explicit Adam(AdamConfig cfg = {}) : cfg_(cfg) {}

  /// Applies one update. Throws TrainingError naming the parameter if its
  /// gradient contains a non-finite value.
  void step(std::span<const NamedParam> params, std::span<const Tensor* const> grads);

  std::int64_t step_count() const { return t_; }
  const AdamConfig& config() const { return cfg_; }

 private:
  AdamConfig cfg_;
  std::int64_t t_ = 0;
  std::vector<Tensor> m_;
  std::vector<Tensor> v_;
};

}  // namespace accentmask::nn
