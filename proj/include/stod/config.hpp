#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stod/detector.hpp"

namespace stod {

// Flat `section.key = value` text. '#' starts a comment; blank lines
// ignored. Unknown keys are rejected by name when typed.
using ConfigMap = std::map<std::string, std::string>;

ConfigMap parse_config_text(const std::string& text, const std::string& origin);
ConfigMap parse_config_file(const std::string& path);
void apply_override(ConfigMap& map, const std::string& key_equals_value);

// FNV-1a 64 over the sorted `key=value` lines, skipping `paths.*`:
// relocating artifacts must not invalidate them.
std::uint64_t config_hash(const ConfigMap& map);
std::string config_hash_hex(const ConfigMap& map);

struct PipelineConfig {
  // paths
  std::string topology;
  std::string train_stream = "out/train.csv";
  std::string test_stream = "out/test.csv";
  std::string train_scenarios;  // empty = attack-free
  std::string test_scenarios;
  std::string stream_map;  // column-map file for foreign CSV streams
  std::string checkpoint_dir = "out/checkpoint";
  std::string report_dir = "out/report";

  long simulate_train_records = 20000;
  long simulate_test_records = 8000;
  double simulate_noise_std = 0.01;

  int k = 10;

  int temporal_d_t = 8;
  int temporal_epochs = 30;
  double temporal_learning_rate = 1e-3;
  int temporal_batch = 32;
  bool temporal_concat_states = false;
  long temporal_max_segments = 0;  // 0 = all

  int spatial_d_h = 16;
  int spatial_d_z = 8;
  int spatial_epochs = 60;
  double spatial_learning_rate = 1e-3;
  int spatial_batch = 16;
  double spatial_kl_weight = 1.0;
  double spatial_rec_weight = 1.0;
  long spatial_max_segments = 0;

  double detector_nu = 0.1;
  KernelConfig detector_kernel;
  long detector_max_iterations = 0;  // 0 = solver default

  std::vector<std::string> evaluate_variants = {"STOD",         "STODP1",      "STODP2",
                                                "STODP3",       "kernel:linear", "kernel:poly",
                                                "kernel:rbf",   "kernel:sigmoid"};
  int evaluate_folds = 6;
  long project_max_per_class = 3000;

  std::uint64_t seed = 1;
  bool parallel = true;
  bool allow_hash_mismatch = false;  // CLI flag, not a config key

  ConfigMap raw;  // exactly the keys that were set, for hashing/persistence

  std::uint64_t hash() const { return config_hash(raw); }
  std::string hash_hex() const { return config_hash_hex(raw); }
};

// Builds the typed config; throws naming any unknown key or bad value.
PipelineConfig make_pipeline_config(const ConfigMap& map);

}  // namespace stod
