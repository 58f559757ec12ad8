#pragma once

#include <Eigen/Dense>

#include <cstdint>

namespace accentmask {

/// Dense row-major 2-D grid. Throughout the library rows index mel bins and
/// columns index time frames, matching the on-disk layout of the SPEC/SMAP
/// file formats (mel-major).
template <typename Scalar>
using Grid = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using Gridf = Grid<float>;
using Gridd = Grid<double>;
using Gridb = Grid<std::uint8_t>;

/// Spectrogram geometry used by the classifier input.
inline constexpr int kNumMels = 80;
inline constexpr int kNumFrames = 3000;

}  // namespace accentmask
