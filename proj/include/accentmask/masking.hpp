#pragma once

#include "accentmask/grid.hpp"
#include "accentmask/spectrogram.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

namespace accentmask {

/// Probabilistic masking policy. Scores at or below t_enter are always kept;
/// scores at or above t_high are always suppressed; the two middle bands are
/// suppressed with probability drawn from [mid_lo, mid_hi] and
/// [low_lo, low_hi] respectively.
struct MaskPolicy {
  double t_enter = 0.3;
  double t_mid = 0.5;
  double t_high = 0.7;
  double mid_lo = 0.7;
  double mid_hi = 0.9;
  double low_lo = 0.0;
  double low_hi = 0.05;

  /// Whether the band probability u is drawn independently per pixel or once
  /// per utterance. The per-pixel random field R is per-pixel either way.
  enum class Granularity { kPerPixel, kPerUtterance };
  Granularity granularity = Granularity::kPerPixel;

  /// Throws ArgumentError unless 0 <= t_enter < t_mid < t_high <= 1 and both
  /// probability ranges are ordered sub-intervals of [0, 1].
  void validate() const;

  /// Stable hex digest of all policy fields (recorded in manifests so masked
  /// rows can be traced back to the exact policy).
  std::string hash() const;
};

/// Keep/suppress decision grid; 1 = keep the pixel, 0 = zero it.
struct BinaryMask {
  Gridb values;
  MaskPolicy policy;
  std::uint64_t seed = 0;

  int n_mels() const { return static_cast<int>(values.rows()); }
  int n_frames() const { return static_cast<int>(values.cols()); }
};

/// Grid of i.i.d. uniform [0,1) draws; R(i,j) as used by build_mask for the
/// same seed (exposed for verification).
Gridd random_field(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed);

/// Binary candidate gate: 1 iff score > t_enter (strict).
Gridb threshold_mask(const SaliencyMap& sal, const MaskPolicy& policy);

/// Full masking decision per pixel:
///   score <= t_enter          -> keep
///   score >= t_high           -> suppress
///   t_mid <= score < t_high   -> suppress with probability u ~ U(mid_lo, mid_hi)
///   t_enter < score < t_mid   -> suppress with probability u ~ U(low_lo, low_hi)
/// All draws are counter-addressed from the seed, so a pixel's decision does
/// not depend on other pixels' band membership.
BinaryMask build_mask(const SaliencyMap& sal, const MaskPolicy& policy,
                      std::uint64_t seed);

/// Element-wise product: kept cells are preserved bit-exactly, suppressed
/// cells become exactly 0.
Spectrogram apply_mask(const Spectrogram& spec, const BinaryMask& mask);

struct SpecAugmentParams {
  int n_freq_masks = 2;
  int max_freq_width = 27;   // widths drawn uniformly from {0..max}
  int n_time_masks = 2;
  int max_time_width = 100;
};

/// Zero n_freq_masks random full row bands and n_time_masks random full
/// column bands. Width ~ U{0..max}, start ~ U{0..extent-width}.
Spectrogram spec_augment(const Spectrogram& spec, const SpecAugmentParams& params,
                         std::uint64_t seed);

/// Empirical suppression rates of a mask, bucketed by the saliency bands of
/// the policy: [0, t_enter], (t_enter, t_mid), [t_mid, t_high), [t_high, 1].
struct MaskStats {
  double keep_fraction = 0.0;
  std::array<std::int64_t, 4> band_pixels{};
  std::array<double, 4> band_masked_rate{};  // NaN for empty bands
};

MaskStats mask_stats(const SaliencyMap& sal, const BinaryMask& mask);

// MASK file format: magic "MASK", version u32 LE (=1), n_mels u32 LE,
// n_frames u32 LE, then one byte per cell (0/1), mel-major.
void write_mask(const BinaryMask& mask, std::ostream& out);
void write_mask(const BinaryMask& mask, const std::filesystem::path& path);
BinaryMask read_mask(std::istream& in);
BinaryMask read_mask(const std::filesystem::path& path);

}  // namespace accentmask
