#pragma once

#include "accentmask/audio.hpp"
#include "accentmask/grid.hpp"
#include "accentmask/spectrogram.hpp"

namespace accentmask {

// STFT geometry: 25 ms Hann window, 10 ms hop at 16 kHz, FFT zero-padded
// to 512 points.
inline constexpr int kSampleRate = 16000;
inline constexpr int kWindowSize = 400;
inline constexpr int kHopSize = 160;
inline constexpr int kFftSize = 512;

/// Power floor applied before the log, i.e. log10 values never fall
/// below -10.
inline constexpr double kPowerFloor = 1e-10;

/// Per-utterance dynamic range kept after log compression (log10 units).
inline constexpr double kDynamicRange = 8.0;

/// Triangular mel filterbank over the one-sided FFT bins.
struct MelFilterbank {
  int n_fft = kFftSize;
  int sample_rate = kSampleRate;
  double min_hz = 0.0;
  double max_hz = 8000.0;
  Gridd weights;             // n_mels x (n_fft/2 + 1), all non-negative
  Eigen::ArrayXd center_hz;  // filter center frequencies

  int n_mels() const { return static_cast<int>(weights.rows()); }
  int n_bins() const { return n_fft / 2 + 1; }
};

double hz_to_mel(double hz);
double mel_to_hz(double mel);

/// Build an n_mels-filter triangular bank with centers equally spaced on the
/// mel scale between min_hz and max_hz. Every filter is guaranteed at least
/// one non-zero weight.
MelFilterbank make_mel_filterbank(int n_mels = kNumMels, int n_fft = kFftSize,
                                  int sample_rate = kSampleRate,
                                  double min_hz = 0.0, double max_hz = 8000.0);

/// Number of full analysis windows in a clip of the given length.
inline Eigen::Index stft_frame_count(Eigen::Index n_samples) {
  return n_samples >= kWindowSize ? 1 + (n_samples - kWindowSize) / kHopSize : 0;
}

/// Mel-domain power spectrogram of the real frames (no padding, no log).
Gridd mel_power(const AudioClip& clip, const MelFilterbank& fb);

/// log10 of the mel power, floored at kPowerFloor, no clamping or padding.
Gridd mel_log_power(const AudioClip& clip, const MelFilterbank& fb);

/// Full frontend: STFT -> mel power -> log10 -> pad/truncate to n_frames
/// columns -> clamp each utterance to [max - kDynamicRange, max] ->
/// affine map (x + 4) / 4. Short clips are padded in the log domain with the
/// silence level, which the clamp raises to the per-utterance floor, so the
/// final values lie in [(max - 4) / 4, (max + 4) / 4]. Requires 16 kHz input.
Spectrogram featurize(const AudioClip& clip, const MelFilterbank& fb,
                      int n_frames = kNumFrames);

}  // namespace accentmask
