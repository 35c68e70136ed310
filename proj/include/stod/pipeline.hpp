#pragma once

#include <string>

#include "stod/config.hpp"

namespace stod {

// Variant chosen with --variant; empty string = use config. Not part of
// the config hash.
struct RunOptions {
  std::string variant;
};

// Executes one subcommand: simulate, segment, train-temporal,
// train-spatial, fit-detector, detect, evaluate, project, or all. Takes
// the checkpoint-directory lock, validates the stored config hash, and
// throws on any failure (naming missing prerequisites by stage).
void run_subcommand(const std::string& name, const PipelineConfig& cfg,
                    const RunOptions& opts = {});

}  // namespace stod
