// File: include/tnd/pretrain.hpp
//
// Teacher pretraining: plain next-token CLM over shuffled corpus batches,
// saving a checkpoint trajectory along the way. The final checkpoint is
// the teacher used downstream.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tnd/bpe.hpp"
#include "tnd/checkpoint.hpp"
#include "tnd/model.hpp"

namespace tnd {

struct PretrainConfig {
  int steps = 2000;
  int batch_size = 32;
  double lr = 1e-4;
  std::vector<std::int64_t> schedule;  // saved steps, must end at `steps`
  std::uint64_t seed = 0;
};

struct PretrainResult {
  double first_loss = 0.0;
  double final_loss = 0.0;
  std::vector<TrajectoryCheckpoint> saved;
};

// <s> tokens </s>, truncated to the model context.
std::vector<int> frame_sentence(const Vocabulary& vocab,
                                const std::string& line, int context_len);

// Pre-tokenizes `train_lines` once and cycles a reshuffled order each
// epoch. `on_step(step, loss)` fires after every optimizer step.
PretrainResult pretrain_teacher(
    TransformerLM& model, const Vocabulary& vocab,
    const std::vector<std::string>& train_lines, const PretrainConfig& cfg,
    const std::string& out_dir,
    const std::function<void(std::int64_t, double)>& on_step = {});

}  // namespace tnd
