#pragma once

#include <cstdint>
#include <string>

#include "segdense/augment.hpp"
#include "segdense/model_types.hpp"
#include "segdense/synth.hpp"
#include "segdense/train.hpp"

namespace segdense {

// Whole-pipeline configuration; file format is a flat key/value text
// document with dotted section prefixes, e.g. `train.learning_rate = 0.001`.
// '#' starts a comment. Unknown keys are rejected.
struct PipelineConfig {
  std::uint64_t seed = 0;

  BackboneConfig backbone;
  int branches = 4;
  FusionWeights fusion;
  PreprocessConstants preprocess;
  std::string pretrained_path;

  AugmentConfig augment;

  TrainConfig train;

  double binarize_threshold = 0.5;
  double band_low = 0.5;
  double band_high = 0.9;

  SynthConfig synth;
  bool synth_phase_mix = true;  // cycle pre/post/healthy unless pinned
  int synth_images_per_subject = 2;

  double train_fraction = 0.7;

  void validate() const;
};

PipelineConfig load_pipeline_config(const std::string& path);
PipelineConfig parse_pipeline_config(const std::string& text,
                                     const std::string& origin);

}  // namespace segdense
