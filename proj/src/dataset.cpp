#include "segdense/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "segdense/io.hpp"
#include "segdense/rng.hpp"

namespace segdense {

const char* to_string(Eye eye) {
  return eye == Eye::kLeft ? "left" : "right";
}

const char* to_string(Phase phase) {
  switch (phase) {
    case Phase::kPreSurgery: return "pre_surgery";
    case Phase::kPostSurgery: return "post_surgery";
    case Phase::kHealthy: return "healthy";
  }
  return "healthy";
}

Eye eye_from_string(const std::string& text) {
  if (text == "left") return Eye::kLeft;
  if (text == "right") return Eye::kRight;
  throw std::invalid_argument("unknown eye value: " + text);
}

Phase phase_from_string(const std::string& text) {
  if (text == "pre_surgery") return Phase::kPreSurgery;
  if (text == "post_surgery") return Phase::kPostSurgery;
  if (text == "healthy") return Phase::kHealthy;
  throw std::invalid_argument("unknown phase value: " + text);
}

void Sample::validate() const {
  image.validate();
  if (subject_id.empty()) {
    throw std::invalid_argument("sample subject_id must be non-empty");
  }
  if (mask) {
    mask->validate();
    if (mask->width != image.width || mask->height != image.height) {
      throw std::invalid_argument("mask dimensions must equal image dimensions");
    }
  }
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find('\t', start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

}  // namespace

DatasetManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest: " + path);

  DatasetManifest manifest;
  std::unordered_set<std::string> seen_paths;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    const auto fields = split_tabs(line);
    if (fields.size() != 6) {
      throw std::runtime_error("malformed manifest line " +
                               std::to_string(line_number) + " in " + path +
                               ": expected 6 tab-separated fields, got " +
                               std::to_string(fields.size()));
    }
    ManifestEntry entry;
    entry.image_path = fields[0];
    entry.mask_path = fields[1] == "-" ? std::string{} : fields[1];
    entry.subject_id = fields[2];
    try {
      entry.eye = eye_from_string(fields[3]);
      entry.phase = phase_from_string(fields[4]);
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("malformed manifest line " +
                               std::to_string(line_number) + " in " + path +
                               ": " + e.what());
    }
    entry.sensor = fields[5];
    if (entry.image_path.empty() || entry.subject_id.empty()) {
      throw std::runtime_error("malformed manifest line " +
                               std::to_string(line_number) + " in " + path +
                               ": empty image_path or subject_id");
    }
    if (!seen_paths.insert(entry.image_path).second) {
      throw std::runtime_error("duplicate image_path in manifest: " +
                               entry.image_path);
    }
    manifest.entries.push_back(std::move(entry));
  }
  return manifest;
}

void save_manifest(const DatasetManifest& manifest, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write manifest: " + path);
  out << "# image_path\tmask_path\tsubject_id\teye\tphase\tsensor\n";
  for (const auto& e : manifest.entries) {
    out << e.image_path << '\t' << (e.mask_path.empty() ? "-" : e.mask_path)
        << '\t' << e.subject_id << '\t' << to_string(e.eye) << '\t'
        << to_string(e.phase) << '\t' << e.sensor << '\n';
  }
}

SplitResult split_by_subject(const DatasetManifest& manifest,
                             double train_fraction, std::uint64_t seed) {
  if (manifest.empty()) {
    throw std::invalid_argument("cannot split an empty manifest");
  }
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw std::invalid_argument("train_fraction must be in (0, 1)");
  }

  std::vector<std::string> subjects;
  std::unordered_set<std::string> seen;
  for (const auto& e : manifest.entries) {
    if (seen.insert(e.subject_id).second) subjects.push_back(e.subject_id);
  }
  if (subjects.size() < 2) {
    throw std::invalid_argument(
        "subject-disjoint split needs at least 2 subjects, got " +
        std::to_string(subjects.size()));
  }

  Rng rng(seed);
  rng.shuffle(subjects);

  auto train_count = static_cast<std::size_t>(
      std::llround(train_fraction * static_cast<double>(subjects.size())));
  // Both sides must stay non-empty for the split to be meaningful.
  train_count = std::clamp<std::size_t>(train_count, 1, subjects.size() - 1);

  std::unordered_set<std::string> train_subjects(
      subjects.begin(), subjects.begin() + static_cast<long>(train_count));

  SplitResult result;
  for (const auto& e : manifest.entries) {
    if (train_subjects.count(e.subject_id)) {
      result.train.entries.push_back(e);
    } else {
      result.test.entries.push_back(e);
    }
  }
  return result;
}

Sample load_sample(const ManifestEntry& entry, const std::string& base_dir) {
  namespace fs = std::filesystem;
  const auto resolve = [&](const std::string& p) {
    fs::path path(p);
    if (path.is_absolute() || base_dir.empty()) return path;
    return fs::path(base_dir) / path;
  };

  Sample sample;
  sample.image = read_image_png(resolve(entry.image_path).string());
  if (!entry.mask_path.empty()) {
    sample.mask = read_mask_png(resolve(entry.mask_path).string());
  }
  sample.subject_id = entry.subject_id;
  sample.eye = entry.eye;
  sample.phase = entry.phase;
  sample.sensor = entry.sensor;
  sample.validate();
  return sample;
}

std::vector<Sample> load_samples(const DatasetManifest& manifest,
                                 const std::string& base_dir) {
  std::vector<Sample> samples;
  samples.reserve(manifest.size());
  for (const auto& e : manifest.entries) {
    samples.push_back(load_sample(e, base_dir));
  }
  return samples;
}

}  // namespace segdense
