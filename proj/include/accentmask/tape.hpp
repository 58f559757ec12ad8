#pragma once

#include "accentmask/rng.hpp"
#include "accentmask/tensor.hpp"

#include <string>
#include <vector>

namespace accentmask::nn {

enum class OpKind {
  kLeaf,
  kConv2d,
  kRelu,
  kMaxPool2d,
  kDropout,
  kLinear,
  kFlatten,
  kSoftmaxXent,
};

/// Reverse-mode tape for the closed set of ops the classifier needs.
/// Forward values are computed eagerly as nodes are added; node ids are a
/// topological order, so backward() is one reverse sweep that visits each
/// node exactly once. Gradients flow only into subgraphs that contain a
/// gradient-requiring leaf or a mark()-ed intermediate.
///
/// A tape instance is single-threaded; leaves reference external tensors
/// (parameters are never copied), so any number of tapes may share one
/// read-only model concurrently.
class Tape {
 public:
  using Id = int;

  /// Add a leaf referencing `value`. The caller keeps `value` alive for the
  /// lifetime of the tape.
  Id leaf(const Tensor& value, bool requires_grad = false, std::string name = {});

  /// 3x3 cross-correlation, stride 1, zero padding 1 (same-size output).
  /// input [N,Cin,H,W], weight [Cout,Cin,3,3], bias [Cout] -> [N,Cout,H,W].
  Id conv2d(Id input, Id weight, Id bias);

  Id relu(Id input);

  /// 2x2 max pooling, stride 2; odd trailing row/column dropped. Argmax
  /// indices are saved for backward; ties go to the first cell in row-major
  /// scan order.
  Id maxpool2d(Id input);

  /// Inverted dropout. In training mode each element is kept with
  /// probability keep_prob and scaled by 1/keep_prob; in inference mode (or
  /// with keep_prob == 1) this is the identity and consumes no randomness.
  Id dropout(Id input, double keep_prob, CounterRng* rng, bool training);

  /// [N, d1, d2, ...] -> [N, d1*d2*...]
  Id flatten(Id input);

  /// input [N,Fin], weight [Fout,Fin], bias [Fout] -> [N,Fout].
  Id linear(Id input, Id weight, Id bias);

  /// Mean over the batch of -log softmax(logits)[label]; returns a scalar
  /// (shape [1]) node. Numerically stabilized by row-max subtraction.
  Id softmax_xent(Id logits, std::vector<int> labels);

  /// Request that gradients be retained for this (possibly intermediate)
  /// node. Must be called before dependent ops are added.
  void mark(Id node);

  const Tensor& value(Id node) const;

  /// Gradient of the last backward seed w.r.t. this node.
  /// Throws StateError if no gradient reached it (or backward never ran).
  const Tensor& grad(Id node) const;
  bool has_grad(Id node) const;

  /// Softmax probabilities saved by a softmax_xent node.
  const Tensor& softmax_probs(Id xent_node) const;

  /// Reverse sweep seeding d(node)/d(node) = 1 (node must be scalar).
  void backward(Id seed);

  /// Reverse sweep from an arbitrary node with an explicit seed gradient
  /// (e.g. a one-hot over logits to differentiate a single class score).
  void backward(Id seed, const Tensor& seed_grad);

  int size() const { return static_cast<int>(nodes_.size()); }

 private:
  struct Node {
    OpKind kind = OpKind::kLeaf;
    Id in[3] = {-1, -1, -1};
    int n_in = 0;
    const Tensor* value = nullptr;  // points at `owned` or an external leaf
    Tensor owned;
    Tensor grad;
    bool has_grad = false;
    bool requires = false;
    std::string name;
    // op context
    std::vector<Index> argmax;  // maxpool
    Tensor ctx;                 // dropout mask / softmax probabilities
    std::vector<int> labels;    // softmax_xent
  };

  Node& node(Id id);
  const Node& node(Id id) const;
  Id push(Node n);
  Tensor& grad_buffer(Id id);
  void check_id(Id id) const;

  void backward_op(Id id);
  void backward_conv2d(Node& n);
  void backward_relu(Node& n);
  void backward_maxpool(Node& n);
  void backward_dropout(Node& n);
  void backward_linear(Node& n);
  void backward_flatten(Node& n);
  void backward_softmax_xent(Node& n);

  std::vector<Node> nodes_;
  bool ran_backward_ = false;
};

}  // namespace accentmask::nn
