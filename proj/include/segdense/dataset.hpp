#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "segdense/image.hpp"

namespace segdense {

enum class Eye { kLeft, kRight };
enum class Phase { kPreSurgery, kPostSurgery, kHealthy };

const char* to_string(Eye eye);
const char* to_string(Phase phase);
Eye eye_from_string(const std::string& text);
Phase phase_from_string(const std::string& text);

struct Sample {
  IrisImage image;
  std::optional<SegmentationMask> mask;
  std::string subject_id;
  Eye eye = Eye::kLeft;
  Phase phase = Phase::kHealthy;
  std::string sensor;

  void validate() const;
};

struct ManifestEntry {
  std::string image_path;
  std::string mask_path;  // empty when the entry has no ground truth
  std::string subject_id;
  Eye eye = Eye::kLeft;
  Phase phase = Phase::kHealthy;
  std::string sensor;
};

struct DatasetManifest {
  std::vector<ManifestEntry> entries;

  bool empty() const { return entries.empty(); }
  std::size_t size() const { return entries.size(); }
};

// Manifest file format: UTF-8 text, one entry per line,
//   image_path<TAB>mask_path_or_dash<TAB>subject_id<TAB>eye<TAB>phase<TAB>sensor
// '#' begins a comment line. Order is preserved.
DatasetManifest load_manifest(const std::string& path);
void save_manifest(const DatasetManifest& manifest, const std::string& path);

struct SplitResult {
  DatasetManifest train;
  DatasetManifest test;
};

// Subject-disjoint split: shuffles the distinct subjects with the given seed
// and assigns round(train_fraction * subject_count) of them to train, then
// takes all their images.
SplitResult split_by_subject(const DatasetManifest& manifest,
                             double train_fraction, std::uint64_t seed);

// Loads pixels for one manifest entry; relative paths resolve against
// base_dir (normally the directory containing the manifest file).
Sample load_sample(const ManifestEntry& entry, const std::string& base_dir);

std::vector<Sample> load_samples(const DatasetManifest& manifest,
                                 const std::string& base_dir);

}  // namespace segdense
