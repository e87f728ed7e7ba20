#pragma once

#include <string>
#include <vector>

#include "segdense/model_types.hpp"

namespace segdense {

struct NamedArray {
  std::string name;
  std::vector<int> shape;
  std::vector<double> values;
};

// Self-describing binary container; parameter order is the model's canonical
// order so save(load(x)) round-trips bit-exactly.
struct Checkpoint {
  BackboneConfig backbone;
  int branches = 4;
  FusionWeights fusion;
  PreprocessConstants preprocess;
  std::vector<NamedArray> params;

  const NamedArray* find(const std::string& name) const;
};

void save_checkpoint(const Checkpoint& checkpoint, const std::string& path);
Checkpoint load_checkpoint(const std::string& path);

}  // namespace segdense
