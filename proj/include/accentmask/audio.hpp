#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <filesystem>
#include <span>

namespace accentmask {

/// Mono audio clip with amplitudes in [-1, 1].
struct AudioClip {
  Eigen::ArrayXd samples;
  int sample_rate = 16000;

  double duration_s() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate : 0.0;
  }
};

/// Decode a RIFF/WAVE file containing signed 16-bit PCM, mono or stereo.
/// Stereo frames are averaged to mono; samples are scaled by 1/32768.
/// Throws FormatError on malformed containers and UnsupportedFormatError on
/// non-PCM or non-16-bit encodings.
AudioClip decode_wav(std::span<const std::uint8_t> bytes);
AudioClip decode_wav_file(const std::filesystem::path& path);

/// Windowed-sinc resampler (Kaiser window, beta 8.6, 64 taps). The output
/// length is round(len * target_rate / sample_rate), which keeps the duration
/// within one sample of the input. Identical rates pass the samples through.
AudioClip resample(const AudioClip& clip, int target_rate);

}  // namespace accentmask
