#pragma once

#include "accentmask/classifier.hpp"
#include "accentmask/errors.hpp"
#include "accentmask/grid.hpp"
#include "accentmask/spectrogram.hpp"
#include "accentmask/tape.hpp"

namespace accentmask {

/// Target sentinel: differentiate the model's own predicted class.
inline constexpr int kPredictedClass = -1;

/// Align-corners bilinear interpolation to an (out_rows x out_cols) grid.
/// Constant inputs stay constant; 1x1 inputs broadcast.
template <typename Scalar>
Grid<Scalar> upsample_bilinear(const Grid<Scalar>& in, Eigen::Index out_rows,
                               Eigen::Index out_cols) {
  const Eigen::Index h = in.rows(), w = in.cols();
  if (h < 1 || w < 1) throw ArgumentError("upsample_bilinear: empty input");
  if (out_rows < 1 || out_cols < 1) throw ArgumentError("upsample_bilinear: empty target");
  const double ry = out_rows > 1 ? static_cast<double>(h - 1) / (out_rows - 1) : 0.0;
  const double rx = out_cols > 1 ? static_cast<double>(w - 1) / (out_cols - 1) : 0.0;
  Grid<Scalar> out(out_rows, out_cols);
  for (Eigen::Index i = 0; i < out_rows; ++i) {
    const double y = i * ry;
    const Eigen::Index y0 = std::min<Eigen::Index>(static_cast<Eigen::Index>(y), h - 1);
    const Eigen::Index y1 = std::min<Eigen::Index>(y0 + 1, h - 1);
    const double fy = y - y0;
    for (Eigen::Index j = 0; j < out_cols; ++j) {
      const double x = j * rx;
      const Eigen::Index x0 = std::min<Eigen::Index>(static_cast<Eigen::Index>(x), w - 1);
      const Eigen::Index x1 = std::min<Eigen::Index>(x0 + 1, w - 1);
      const double fx = x - x0;
      const double top = (1.0 - fx) * in(y0, x0) + fx * in(y0, x1);
      const double bot = (1.0 - fx) * in(y1, x0) + fx * in(y1, x1);
      out(i, j) = static_cast<Scalar>((1.0 - fy) * top + fy * bot);
    }
  }
  return out;
}

/// Intermediate quantities of a saliency computation, exposed for
/// verification.
struct SaliencyDetail {
  nn::Tensor feature_maps;         // A^k, [C,h,w]
  nn::Tensor feature_grads;        // dy_target / dA^k, [C,h,w]
  Eigen::ArrayXd channel_weights;  // w_k
  Gridd raw_map;                   // ReLU(sum_k w_k A^k), pre-upsample
  int resolved_target = -1;
};

/// Shared engine: resolve the target class, backpropagate its logit to the
/// marked feature-map node, reduce per the method, ReLU-gate, upsample to
/// (out_rows x out_cols) and min-max normalize into [0, 1]. A constant raw
/// map (including all-zero) normalizes to the all-zero map.
SaliencyMap saliency_from_tape(nn::Tape& tape, nn::Tape::Id last_conv,
                               nn::Tape::Id logits, int target,
                               SaliencyMethod method, Eigen::Index out_rows,
                               Eigen::Index out_cols,
                               SaliencyDetail* detail = nullptr);

/// Grad-CAM: channel weights are the spatial means of the target-class
/// gradients over the final conv-stage feature maps.
SaliencyMap grad_cam(const ClassifierModel& model, const Spectrogram& spec,
                     int target = kPredictedClass, SaliencyDetail* detail = nullptr);

/// Grad-CAM++: per-location weights alpha = g^2 / (2 g^2 + sum(A) g^3)
/// (gradients taken on the exponential of the class score, under which the
/// exp factors cancel), channel weights w_k = sum alpha * ReLU(g).
/// Zero-denominator locations contribute alpha = 0.
SaliencyMap grad_cam_pp(const ClassifierModel& model, const Spectrogram& spec,
                        int target = kPredictedClass, SaliencyDetail* detail = nullptr);

}  // namespace accentmask
