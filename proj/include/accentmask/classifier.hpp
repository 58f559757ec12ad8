#pragma once

#include "accentmask/adam.hpp"
#include "accentmask/grid.hpp"
#include "accentmask/masking.hpp"
#include "accentmask/rng.hpp"
#include "accentmask/spectrogram.hpp"
#include "accentmask/tape.hpp"
#include "accentmask/tensor.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace accentmask {

/// Four conv stages (32/64/128/256 filters of 3x3), each followed by ReLU,
/// 2x2 max pooling and dropout, then fc(128)+ReLU+dropout and a linear head.
struct ClassifierConfig {
  int n_classes = 2;
  std::array<int, 4> conv_channels{32, 64, 128, 256};
  int kernel = 3;
  int fc_hidden = 128;
  double dropout_conv = 0.25;
  double dropout_fc = 0.5;
  int in_mels = kNumMels;
  int in_frames = kNumFrames;
  std::array<bool, 4> pool_after{true, true, true, true};

  void validate() const;

  /// Spatial size of the conv tower output.
  std::pair<int, int> feature_map_hw() const;
  int flatten_dim() const;
};

struct ClassifierModel {
  ClassifierConfig config;
  std::vector<std::string> labels;  // class index -> accent name (bijective)

  nn::Tensor conv_w[4];
  nn::Tensor conv_b[4];
  nn::Tensor fc1_w, fc1_b;
  nn::Tensor fc2_w, fc2_b;

  /// Stable-ordered parameter registry (conv1..4, fc1, fc2; weight, bias).
  std::vector<nn::NamedParam> parameters();
  std::vector<std::pair<std::string, const nn::Tensor*>> parameters() const;

  /// Index of an accent label, or nullopt when absent.
  std::optional<int> label_index(const std::string& accent) const;
};

/// He-normal initialized model; identical seeds give bit-identical
/// parameters (stream label "init").
ClassifierModel build_classifier(const ClassifierConfig& config,
                                 std::vector<std::string> labels,
                                 std::uint64_t seed);

struct ForwardHooks {
  nn::Tape::Id input = -1;
  nn::Tape::Id last_conv = -1;  // final conv-stage output (gradients retained)
  nn::Tape::Id logits = -1;
  std::vector<std::pair<std::string, nn::Tape::Id>> params;
};

/// Build one forward pass on the tape. `batch` is [N,1,H,W]; dropout draws
/// from `dropout_rng` only when training.
ForwardHooks classifier_forward(nn::Tape& tape, const ClassifierModel& model,
                                const nn::Tensor& batch, bool training,
                                CounterRng* dropout_rng);

/// Labeled training example.
struct Sample {
  Gridf features;
  int label = 0;
};

struct TrainOptions {
  int epochs = 5;
  int batch_size = 16;
  double lr = 1e-3;
  bool specaugment = false;
  SpecAugmentParams specaugment_params;
  std::uint64_t seed = 42;
};

struct EpochStats {
  double train_loss = 0.0;
  double train_accuracy = 0.0;
  double val_accuracy = 0.0;  // NaN when no validation set
  std::uint64_t input_hash = 0;  // FNV-1a over the augmented input batches
};

struct TrainReport {
  std::vector<EpochStats> epochs;
  Eigen::MatrixXi confusion;  // on the validation set (rows = true class)
  double wall_clock_s = 0.0;
  std::vector<std::string> warnings;
};

/// Shuffled mini-batch Adam on cross-entropy. Randomness (shuffle, dropout,
/// SpecAugment) derives from opts.seed via the documented stream labels
/// "shuffle", "dropout" and "specaugment"; identical seeds give bit-identical
/// parameter trajectories. Throws TrainingError on non-finite loss and
/// ValidationError on labels outside the model vocabulary.
TrainReport train_classifier(ClassifierModel& model,
                             const std::vector<Sample>& train_set,
                             const std::vector<Sample>& val_set,
                             const TrainOptions& opts);

/// Inference (dropout disabled). Returns the argmax class and the softmax
/// distribution. Throws ShapeError when spec dims disagree with the config.
std::pair<int, Eigen::ArrayXd> predict(const ClassifierModel& model,
                                       const Spectrogram& spec);

struct EvalResult {
  double accuracy = 0.0;
  Eigen::MatrixXi confusion;  // rows = true class, cols = predicted
};

EvalResult evaluate(const ClassifierModel& model, const std::vector<Sample>& dataset);

// Checkpoint format: magic "ACMK", version u32 LE (=1), n_classes u32,
// label table (count u32, then length-prefixed UTF-8 names in index order),
// tensor count u32, then per tensor: length-prefixed name, rank u32,
// dims u32[], IEEE-754 64-bit LE payload. Besides the 12 parameter tensors,
// three meta tensors (meta/input_hw, meta/dropout_rates, meta/pool_after)
// record the architecture hyperparameters.
void save_checkpoint(const ClassifierModel& model, std::ostream& out);
void save_checkpoint(const ClassifierModel& model, const std::filesystem::path& path);
ClassifierModel load_checkpoint(std::istream& in);
ClassifierModel load_checkpoint(const std::filesystem::path& path);

}  // namespace accentmask
