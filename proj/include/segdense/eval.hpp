#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "segdense/image.hpp"

namespace segdense {

struct SegScore {
  std::vector<std::pair<std::string, double>> per_image_errors;
  double average_error = 0.0;
};

// NICE-I protocol: per-image error = fraction of disagreeing pixels
// (XOR of the binary masks), averaged over images.
SegScore nice1_error(const std::vector<SegmentationMask>& predicted,
                     const std::vector<SegmentationMask>& truth,
                     const std::vector<std::string>* ids = nullptr);

enum class ScorePolarity { kHigherIsMatch, kLowerIsMatch };

// Genuine/impostor match scores from an external matcher; polarity is
// explicit because matchers disagree on score direction.
struct ScoreSet {
  std::vector<double> genuine;
  std::vector<double> impostor;
  ScorePolarity polarity = ScorePolarity::kHigherIsMatch;
};

struct GarResult {
  double gar = 0.0;
  double threshold = 0.0;
};

// Most permissive threshold with empirical FAR <= far_target; equal scores
// count as accepted. gar = fraction of genuine scores accepted there.
GarResult gar_at_far(const ScoreSet& scores, double far_target = 0.001);

struct RocPoint {
  double far = 0.0;
  double gar = 0.0;
};

// One point per distinct threshold (all score values plus +/-inf sentinels),
// ordered by increasing permissiveness; consecutive duplicate points are
// collapsed. far and gar are each monotone nondecreasing along the list.
std::vector<RocPoint> roc_points(const ScoreSet& scores);

struct RocReport {
  std::vector<RocPoint> points;
  double far_target = 0.0;
  GarResult gar;
};

// One score per line, UTF-8 text.
std::vector<double> read_score_file(const std::string& path);

// Deterministic tab-separated report; re-running on the same inputs yields a
// byte-identical file.
void write_report(const SegScore* seg, const RocReport* roc,
                  const std::string& path);

}  // namespace segdense
