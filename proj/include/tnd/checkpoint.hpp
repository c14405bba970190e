// File: include/tnd/checkpoint.hpp
//
// Bit-stable model persistence and trajectory directories (one checkpoint
// per scheduled training step, filename carries the step).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tnd/model.hpp"

namespace tnd {

struct TrajectoryCheckpoint {
  std::int64_t step = 0;
  std::string path;
};

struct Checkpoint {
  TransformerLM model;
  std::int64_t step = 0;
  std::string rng_state;
};

void save_checkpoint(const TransformerLM& model, std::int64_t step,
                     const std::string& rng_state, const std::string& path);

// Verifies magic, checksum, and parameter table layout before returning.
Checkpoint load_checkpoint(const std::string& path);

std::string trajectory_path(const std::string& dir, std::int64_t step);

// All checkpoints under `dir`, sorted by step (strictly increasing by
// construction of the filenames).
std::vector<TrajectoryCheckpoint> list_trajectory(const std::string& dir);

// Geometric (dense-early, sparse-late) schedule from 1 to total_steps,
// deduplicated, always ending at total_steps.
std::vector<std::int64_t> checkpoint_schedule(std::int64_t total_steps,
                                              int count);

}  // namespace tnd
