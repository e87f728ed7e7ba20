#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace segdense {

enum class BackboneVariant { kFull, kTiny };

const char* to_string(BackboneVariant variant);
BackboneVariant backbone_variant_from_string(const std::string& text);

// Four dense blocks with stride schedule {4, 8, 16, 32}. The full variant is
// the DenseNet-121 layout; tiny keeps the block/stride structure with small
// layer counts so tests and desk-scale training stay cheap.
struct BackboneConfig {
  BackboneVariant variant = BackboneVariant::kTiny;
  int growth_rate = 4;
  std::array<int, 4> block_layer_counts{2, 2, 2, 2};
  int stem_channels = 8;
  bool pretrained_init = false;

  static BackboneConfig full();
  static BackboneConfig tiny();

  void validate() const;
};

struct FusionWeights {
  std::array<double, 4> w{1.0, 1.0, 1.0, 1.0};

  void validate() const;
};

// The single NIR channel is replicated x3, scaled to [0,1], then normalized
// with these constants (3-channel pretraining convention).
struct PreprocessConstants {
  std::array<double, 3> mean{0.485, 0.456, 0.406};
  std::array<double, 3> stddev{0.229, 0.224, 0.225};
};

}  // namespace segdense
