#ifndef RFADV_NEURAL_HPP
#define RFADV_NEURAL_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rfadv/types.hpp"

namespace rfadv::neural {

struct ModelConfig {
  int input_len = 1024;
  int num_classes = 16;
  std::vector<int> conv_channels = {16, 24, 32};  // each block: conv -> ReLU -> maxpool(2)
  int kernel = 8;
  int dense_units = 64;
  double dropout = 0.5;
};

struct Tensor {
  std::vector<int> shape;
  std::vector<double> v;

  int64_t size() const { return static_cast<int64_t>(v.size()); }
};

struct Prediction {
  std::vector<double> scores;  // pre-softmax, length C
  std::vector<double> probs;   // softmax(scores)
  int label = 0;               // argmax, lowest index wins ties
};

// Plain CNN over the 2 x L real view of an IQ frame: conv blocks
// (kernel `kernel`, stride 1, same padding, ReLU, maxpool 2) feeding a dense
// ReLU layer with dropout and a final dense layer of width num_classes.
// Forward and both gradients are exact and deterministic; dropout is active
// only inside train().
class Model {
 public:
  Model() = default;

  static Model init(const ModelConfig& cfg, uint64_t seed);

  Prediction forward(const IQFrame& x) const;

  // d loss(x, label) / dx as a complex vector: real part dL/dI, imag dL/dQ.
  IQFrame grad_input(const IQFrame& x, int label) const;

  // d loss / d theta, same shapes as parameters().
  std::vector<Tensor> grad_params(const IQFrame& x, int label) const;

  std::vector<Tensor>& parameters() { return params_; }
  const std::vector<Tensor>& parameters() const { return params_; }
  const ModelConfig& config() const { return cfg_; }
  int num_classes() const { return cfg_.num_classes; }
  int input_len() const { return cfg_.input_len; }

 private:
  ModelConfig cfg_;
  std::vector<Tensor> params_;

  friend struct Pass;
};

// Cross-entropy: -log probs[label].
double loss(const Prediction& pred, int label);

struct TrainConfig {
  int epochs = 30;
  int batch_size = 64;
  double learning_rate = 1e-3;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double dropout_rate = 0.5;
  double aug_snr_db_lo = 0.0;   // per-sample AWGN, SNR ~ U[lo, hi]
  double aug_snr_db_hi = 30.0;
  double aug_phase_lo = -3.14159265358979323846;  // per-sample rotation
  double aug_phase_hi = 3.14159265358979323846;
  uint64_t seed = 1;
  int threads = 2;
};

struct EpochStats {
  int epoch = 0;
  double mean_loss = 0.0;
  double train_accuracy = 0.0;
  double eval_accuracy = -1.0;  // -1 when no eval set given
};

// Mini-batch Adam with the batch augmentation above. Throws if the loss goes
// non-finite. eval_frames may be empty.
std::vector<EpochStats> train(Model& model, std::span<const IQFrame> frames,
                              std::span<const int> labels,
                              std::span<const IQFrame> eval_frames,
                              std::span<const int> eval_labels, const TrainConfig& cfg);

// Clean accuracy, frames evaluated in parallel chunks.
double evaluate_accuracy(const Model& model, std::span<const IQFrame> frames,
                         std::span<const int> labels, int threads);

// "RFADVM1" format: layer count, then per layer a kind tag, shape dims and a
// little-endian float64 payload. load reproduces forward outputs bit-exactly.
void save_model(const Model& model, const std::string& path);
Model load_model(const std::string& path);

}  // namespace rfadv::neural

#endif
