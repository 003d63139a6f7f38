#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "msamp/rng.hpp"

namespace msamp {

enum class Activation : std::uint8_t { Linear = 0, Tanh = 1, Sigmoid = 2 };

/// Fully-connected network: ReLU hidden layers, configurable output
/// activation. Weights are (out x in); batches are stored one sample per
/// row throughout.
struct Mlp {
  std::vector<int> layer_sizes;
  std::vector<Eigen::MatrixXd> weights;
  std::vector<Eigen::VectorXd> biases;
  Activation output_activation = Activation::Linear;

  int input_dim() const { return layer_sizes.front(); }
  int output_dim() const { return layer_sizes.back(); }
  int num_layers() const { return static_cast<int>(weights.size()); }

  /// He-uniform weights, zero biases; deterministic for a given stream.
  static Mlp make(const std::vector<int>& layer_sizes, Activation output,
                  Rng& rng);
};

struct ParamGrads {
  std::vector<Eigen::MatrixXd> weights;
  std::vector<Eigen::VectorXd> biases;

  static ParamGrads zeros_like(const Mlp& net);
};

Eigen::VectorXd forward(const Mlp& net, const Eigen::VectorXd& x);
Eigen::MatrixXd forward_batch(const Mlp& net, const Eigen::MatrixXd& x);

/// Intermediate activations of one batched pass; `pre_output` is the last
/// layer's pre-activation, which loss code can use directly (e.g. logits
/// for a stable cross-entropy).
struct ForwardCache {
  std::vector<Eigen::MatrixXd> acts;  // acts[0] = input, post-activation after
  Eigen::MatrixXd pre_output;

  const Eigen::MatrixXd& output() const { return acts.back(); }
};

ForwardCache forward_cache(const Mlp& net, const Eigen::MatrixXd& x);

struct BatchBackward {
  ParamGrads grads;            // summed over the batch
  Eigen::MatrixXd input_grads;  // one row per sample
};

/// Reverse pass from d(loss)/d(output). Gradients are exact; the ReLU
/// subgradient at 0 is taken as 0.
BatchBackward backward_batch(const Mlp& net, const ForwardCache& cache,
                             const Eigen::MatrixXd& upstream);

/// Reverse pass from d(loss)/d(pre_output), skipping the output activation
/// derivative. Used by losses formulated on logits.
BatchBackward backward_batch_pre(const Mlp& net, const ForwardCache& cache,
                                 const Eigen::MatrixXd& upstream_pre);

struct BackwardResult {
  ParamGrads grads;
  Eigen::VectorXd input_grad;
};

/// Single-sample convenience wrapper: recomputes the forward pass at x.
BackwardResult backward(const Mlp& net, const Eigen::VectorXd& x,
                        const Eigen::VectorXd& upstream);

struct SgdOptions {
  double learning_rate = 1e-3;
  double momentum = 0.0;
};

/// Plain SGD with optional momentum buffering:
/// v <- momentum * v + g, theta <- theta - lr * v.
class Sgd {
 public:
  explicit Sgd(SgdOptions opts) : opts_(opts) {}

  void step(Mlp& net, const ParamGrads& grads);

  const SgdOptions& options() const { return opts_; }

 private:
  SgdOptions opts_;
  std::vector<Eigen::MatrixXd> vel_w_;
  std::vector<Eigen::VectorXd> vel_b_;
};

/// Momentum-free single step, matching Sgd with momentum = 0.
void sgd_step(Mlp& net, const ParamGrads& grads, const SgdOptions& opts);

/// Binary model file: magic "MSMLP1", layer count and sizes, activation
/// codes, then parameters as little-endian 64-bit floats, weights row-major
/// per layer followed by the bias. Round-trips are bit exact.
std::vector<std::uint8_t> save(const Mlp& net);
Mlp load(const std::vector<std::uint8_t>& bytes);

void save_file(const Mlp& net, const std::string& path);
Mlp load_file(const std::string& path);

}  // namespace msamp
