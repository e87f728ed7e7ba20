#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "segdense/checkpoint.hpp"
#include "segdense/image.hpp"
#include "segdense/layers.hpp"
#include "segdense/model_types.hpp"
#include "segdense/tensor.hpp"

namespace segdense {

// Per-pixel iris probability at model input resolution.
struct ConfidenceMap {
  int width = 0;
  int height = 0;
  std::vector<double> values;  // row-major, all in [0, 1]

  double at(int x, int y) const {
    return values[static_cast<std::size_t>(y) * width + x];
  }
};

// Feature maps tapped after each dense block; spatial strides 4, 8, 16, 32.
struct BlockTaps {
  std::array<Tensor, 4> taps;
};

// Elementwise weighted sum of 1..4 single-channel maps (the fusion layer).
Tensor fuse(const std::vector<Tensor>& maps, const std::vector<double>& weights);

// Dense backbone with four block taps, one prediction branch per tap
// (1x1 channel reduction + transposed-conv upsampling to stride 4), a
// weighted-sum fusion layer, and a final x4 transposed convolution with
// logistic output at input resolution.
//
// Inference is const-safe on disjoint batches; training mutates parameters
// and requires exclusive access (single writer).
class SegDenseNet {
 public:
  // branches in 1..4 attach to the deepest `branches` taps (branch 1 is the
  // deepest, stride-32 tap).  When config.pretrained_init is set, a source
  // checkpoint with matching backbone shapes must be supplied.
  SegDenseNet(const BackboneConfig& config, int branches,
              const FusionWeights& fusion, std::uint64_t seed,
              const PreprocessConstants& preprocess = PreprocessConstants{},
              const Checkpoint* pretrained = nullptr);

  // [N,3,H,W] normalized tensor from grayscale images (all same size,
  // H and W divisible by 32).
  Tensor preprocess(const std::vector<const IrisImage*>& batch) const;
  Tensor preprocess(const IrisImage& image) const;

  BlockTaps backbone_forward(const Tensor& batch, bool train_mode = false);

  // Runs branch `index` (0 = deepest) on its tap; output is single-channel
  // at stride 4.
  Tensor branch_forward(int index, const Tensor& tap, bool train_mode = false);

  // Full pipeline: backbone -> branches -> fusion -> x4 upsample -> logistic.
  Tensor forward(const Tensor& batch, bool train_mode = false);

  // Backprop from dLoss/dProbabilities; forward(train_mode=true) must have
  // run on this model immediately before.
  void backward(const Tensor& grad_probs);

  std::vector<Param*> params();  // canonical (checkpoint) order
  void zero_grads();

  int branch_count() const { return branches_; }
  const BackboneConfig& config() const { return config_; }
  const FusionWeights& fusion_weights() const { return fusion_; }
  const PreprocessConstants& preprocess_constants() const { return preprocess_; }
  int tap_channels(int block_index) const { return tap_channels_[block_index]; }

  Checkpoint to_checkpoint() const;
  static SegDenseNet from_checkpoint(const Checkpoint& checkpoint);
  // Copies values for identically named/shaped params; throws on mismatch.
  void load_params(const Checkpoint& checkpoint);

  static ConfidenceMap slice_confidence(const Tensor& probs, int batch_index);

 private:
  struct DenseLayer {
    DenseLayer(const std::string& name, int in_c, int growth);
    ReLU relu1;
    Conv2d conv1;  // 1x1 bottleneck to 4*growth
    ReLU relu2;
    Conv2d conv2;  // 3x3 to growth
  };

  struct TransitionLayer {
    TransitionLayer(const std::string& name, int in_c);
    ReLU relu;
    Conv2d conv;  // 1x1 halving channels
    AvgPool2d pool{2, 2};
    int out_c;
  };

  struct BranchHead {
    Conv2d reduce;  // 1x1 to a single channel
    std::unique_ptr<ConvTranspose2d> up;  // absent for the stride-4 tap
  };

  Tensor block_forward(int block_index, const Tensor& input, bool train_mode);
  Tensor block_backward(int block_index, const Tensor& grad_out);
  void init_params(std::uint64_t seed);
  void load_pretrained_backbone(const Checkpoint& source);

  BackboneConfig config_;
  int branches_;
  FusionWeights fusion_;
  PreprocessConstants preprocess_;

  Conv2d stem_;
  ReLU stem_relu_;
  MaxPool2d stem_pool_{3, 2, 1};
  std::vector<std::vector<DenseLayer>> blocks_;
  std::vector<TransitionLayer> transitions_;
  std::vector<BranchHead> branch_heads_;  // deepest-first
  ConvTranspose2d final_up_;
  Sigmoid output_act_;

  std::array<int, 4> tap_channels_{};

  // forward caches for backward
  struct ForwardCache {
    std::vector<std::vector<Tensor>> block_features;  // per block, per feature
    std::array<Tensor, 4> taps;
    std::vector<Tensor> branch_maps;
    bool valid = false;
  };
  ForwardCache cache_;
};

}  // namespace segdense
