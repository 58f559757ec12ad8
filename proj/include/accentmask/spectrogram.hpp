#pragma once

#include "accentmask/grid.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>

namespace accentmask {

/// Normalized log-mel spectrogram, mel-major (rows = mel bins).
struct Spectrogram {
  Gridf values;

  int n_mels() const { return static_cast<int>(values.rows()); }
  int n_frames() const { return static_cast<int>(values.cols()); }
};

enum class SaliencyMethod { kGradCam, kGradCamPP };

/// Per-pixel accent-relevance scores C(i, j) in [0, 1] on the spectrogram
/// grid, plus the class and method that produced them.
struct SaliencyMap {
  Gridf scores;
  std::optional<int> target_class;
  std::optional<SaliencyMethod> method;

  int n_mels() const { return static_cast<int>(scores.rows()); }
  int n_frames() const { return static_cast<int>(scores.cols()); }
};

// SPEC file format: magic "SPEC", version u32 LE (=1), n_mels u32 LE,
// n_frames u32 LE, then n_mels*n_frames IEEE-754 32-bit LE floats, mel-major.
// SMAP files are identical except for the magic; scores are validated to
// [0, 1] on read.

void write_spectrogram(const Spectrogram& spec, std::ostream& out);
void write_spectrogram(const Spectrogram& spec, const std::filesystem::path& path);
Spectrogram read_spectrogram(std::istream& in);
Spectrogram read_spectrogram(const std::filesystem::path& path);

void write_saliency(const SaliencyMap& map, std::ostream& out);
void write_saliency(const SaliencyMap& map, const std::filesystem::path& path);
SaliencyMap read_saliency(std::istream& in);
SaliencyMap read_saliency(const std::filesystem::path& path);

}  // namespace accentmask
