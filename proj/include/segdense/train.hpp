#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "segdense/dataset.hpp"
#include "segdense/model.hpp"

namespace segdense {

enum class TrainPhase { kPretrain, kFinetune };

const char* to_string(TrainPhase phase);
TrainPhase train_phase_from_string(const std::string& text);

struct TrainConfig {
  double learning_rate = 0.001;
  double momentum = 0.9;
  int epochs = 500;
  int batch_size = 8;
  std::uint64_t seed = 0;
  TrainPhase phase = TrainPhase::kPretrain;
  int checkpoint_interval = 0;  // 0 = final checkpoint only

  void validate() const;
};

// Mean over pixels and batch of -[t*log(p) + (1-t)*log(1-p)], with p clamped
// to [eps, 1-eps].
constexpr double kLossEps = 1e-7;
double pixel_loss(const Tensor& probs, const Tensor& targets);
Tensor pixel_loss_grad(const Tensor& probs, const Tensor& targets);

// Momentum-SGD: v <- momentum*v - lr*g; theta <- theta + v.
class SgdOptimizer {
 public:
  SgdOptimizer(double learning_rate, double momentum)
      : lr_(learning_rate), momentum_(momentum) {}

  void step(const std::vector<Param*>& params);

 private:
  double lr_;
  double momentum_;
  std::vector<std::vector<double>> velocity_;
};

struct EpochStats {
  double mean_loss = 0.0;
  int sample_count = 0;
};

// One pass over the samples (all with masks, uniform size divisible by 32).
// Batch order is a deterministic function of (config.seed, epoch_index).
EpochStats train_epoch(SegDenseNet& model, const std::vector<Sample>& samples,
                       const TrainConfig& config, int epoch_index,
                       SgdOptimizer& optimizer);

// Full training run per the configured phase. Finetune requires an initial
// checkpoint and starts from its parameters bit-exactly. Writes checkpoints
// at config.checkpoint_interval (if nonzero) and at the end, plus a
// `train_log.txt` with one `epoch<TAB>mean_loss<TAB>samples` line per epoch.
// Returns the final checkpoint path.
std::string run_training(SegDenseNet& model, const std::vector<Sample>& dataset,
                         const TrainConfig& config,
                         const std::string& checkpoint_dir,
                         const std::optional<std::string>& init_checkpoint = {});

// Nearest-neighbor downscale of ground-truth masks to the model input size,
// as [N,1,H,W] 0/1 targets.
Tensor masks_to_targets(const std::vector<Sample>& samples, int width,
                        int height);

}  // namespace segdense
