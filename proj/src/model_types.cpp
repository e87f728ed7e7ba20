#include "segdense/model_types.hpp"

#include <cmath>
#include <stdexcept>

namespace segdense {

const char* to_string(BackboneVariant variant) {
  return variant == BackboneVariant::kFull ? "full" : "tiny";
}

BackboneVariant backbone_variant_from_string(const std::string& text) {
  if (text == "full") return BackboneVariant::kFull;
  if (text == "tiny") return BackboneVariant::kTiny;
  throw std::invalid_argument("unknown backbone variant: " + text);
}

BackboneConfig BackboneConfig::full() {
  BackboneConfig config;
  config.variant = BackboneVariant::kFull;
  config.growth_rate = 32;
  config.block_layer_counts = {6, 12, 24, 16};
  config.stem_channels = 64;
  return config;
}

BackboneConfig BackboneConfig::tiny() {
  BackboneConfig config;
  config.variant = BackboneVariant::kTiny;
  config.growth_rate = 4;
  config.block_layer_counts = {2, 2, 2, 2};
  config.stem_channels = 8;
  return config;
}

void BackboneConfig::validate() const {
  if (growth_rate <= 0 || stem_channels <= 0) {
    throw std::invalid_argument("backbone channel parameters must be positive");
  }
  for (int count : block_layer_counts) {
    if (count <= 0) {
      throw std::invalid_argument("every dense block needs at least one layer");
    }
  }
  if (variant == BackboneVariant::kFull) {
    const std::array<int, 4> dense121{6, 12, 24, 16};
    if (block_layer_counts != dense121 || growth_rate != 32 ||
        stem_channels != 64) {
      throw std::invalid_argument(
          "full variant is pinned to the DenseNet-121 layout "
          "(blocks 6/12/24/16, growth 32, stem 64)");
    }
  }
}

void FusionWeights::validate() const {
  for (double v : w) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("fusion weights must be finite");
    }
  }
}

}  // namespace segdense
