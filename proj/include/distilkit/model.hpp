#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <vector>

#include "distilkit/dataset.hpp"
#include "distilkit/numerics.hpp"

namespace distilkit {

// Fully connected net: ReLU on hidden layers, identity on the output layer.
// forward() returns pre-softmax logits.
struct MlpParams {
  std::vector<std::size_t> layer_sizes;  // [D, H..., C]
  std::vector<Mat64> weights;            // weights[l]: layer_sizes[l+1] x layer_sizes[l]
  std::vector<Vec64> biases;
};

struct Gradients {
  std::vector<Mat64> weights;
  std::vector<Vec64> biases;
};

struct AdamState {
  std::vector<Mat64> m_weights, v_weights;
  std::vector<Vec64> m_biases, v_biases;
  long t = 0;
  static constexpr double kBeta1 = 0.9;
  static constexpr double kBeta2 = 0.999;
  static constexpr double kEps = 1e-8;
};

struct TrainConfig {
  double lr_max = 1e-3;
  std::size_t epochs = 200;
  std::size_t batch_size = 128;
  std::uint64_t seed = 1;
  std::size_t mask_width = 4;
  bool shuffle = true;

  bool operator==(const TrainConfig&) const = default;
};

// Called before every batch; lets a labeling policy redraw targets mid-run.
// batch_samples holds indices into data/targets for the coming batch.
using RefreshHook = std::function<void(
    std::size_t epoch, std::size_t batch_index,
    const std::vector<std::size_t>& batch_samples, std::vector<Vec64>& targets,
    Rng64& rng)>;

struct TrainResult {
  MlpParams params;
  std::vector<double> epoch_loss;  // mean cross-entropy per epoch
};

// He-normal weights, zero biases; deterministic in the rng stream.
MlpParams init_params(const std::vector<std::size_t>& layer_sizes, Rng64& rng);

void validate_shapes(const MlpParams& params);

Vec64 forward(const MlpParams& params, const Vec64& features);

// Gradient of cross_entropy(target, softmax(forward(x))) w.r.t. all
// parameters; the output-layer delta is softmax(logits) - target.
Gradients backward(const MlpParams& params, const Vec64& features,
                   const Vec64& target);

AdamState init_adam(const MlpParams& params);

// Bias-corrected Adam update, in place.
void adam_step(MlpParams& params, const Gradients& grads, AdamState& state,
               double lr);

// lr(t) = 0.5 * lr_max * (1 + cos(pi * t / total)); decays to exactly 0.
double cosine_lr(std::size_t t, std::size_t total, double lr_max);

// Runs epochs * ceil(n / batch_size) Adam steps under the cosine schedule.
// Targets are arbitrary per-sample distributions; hard labels are just the
// one-hot special case of the same path. Shuffling re-seeds per epoch from
// cfg.seed so reruns are bitwise identical.
TrainResult train(const MlpParams& init, const std::vector<SampleRecord>& data,
                  std::vector<Vec64> targets, const TrainConfig& cfg,
                  const RefreshHook& refresh = {});

// Versioned JSON checkpoint; values round-trip bit-identically.
void save_checkpoint(const MlpParams& params, const TrainConfig& cfg,
                     const std::filesystem::path& path);
struct Checkpoint {
  MlpParams params;
  TrainConfig train_config;
};
Checkpoint load_checkpoint(const std::filesystem::path& path);

Vec64 one_hot(int label, std::size_t classes = kClassCount);

}  // namespace distilkit
