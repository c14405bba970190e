// File: include/tnd/orchestrator.hpp
//
// The student training loop: an alternating cycle of plain next-token
// steps on corpus sentences and interactive steps in which the student
// tries a continuation, optionally sees the frozen teacher demonstrate
// the same prompt, and updates its policy on age-conditioned rewards.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tnd/ledger.hpp"
#include "tnd/mask.hpp"
#include "tnd/model.hpp"
#include "tnd/ppo.hpp"
#include "tnd/reward.hpp"

namespace tnd {

// Trial  = policy updates from student rollouts only.
// Demo   = policy updates from teacher demonstrations only.
// TnD    = both, sharing each prompt.
// CLMOnGenerated = rollouts are collected as in TnD but consumed by a
// plain next-token step instead of a policy update.
enum class RunMode { kCLM, kTrial, kDemo, kTnD, kCLMOnGenerated };

RunMode run_mode_from_string(const std::string& name);
std::string to_string(RunMode mode);

// Cycle layout: positions 1..clm of each cycle are next-token steps,
// positions clm+1..clm+rl are interactive. Steps are numbered from 1.
struct Schedule {
  int clm = 3;
  int rl = 1;

  void validate() const;
  bool is_interactive(std::int64_t step) const;
};

struct StudentRunConfig {
  RunMode mode = RunMode::kTnD;
  Schedule schedule;
  std::int64_t steps = 1000;
  std::uint64_t seed = 0;
  int clm_batch_size = 8;
  int prompts_per_step = 8;
  int prompt_tokens = 5;
  double clm_lr = 1e-3;
  PPOConfig ppo;
  std::vector<std::int64_t> checkpoint_schedule;  // must end at `steps`
  std::vector<std::string> tracked_words;         // ledger vocabulary

  void validate() const;
};

struct RunSummary {
  std::string dir;
  std::string final_checkpoint;
  std::int64_t steps_done = 0;
  double final_clm_loss = 0.0;
  std::int64_t resumed_from = 0;  // 0 when the run started fresh
};

// Observer for the interactive steps (testing hook): fires with the
// collected rollouts before the update consumes them.
using InteractiveObserver =
    std::function<void(std::int64_t step, const std::vector<Rollout>&)>;

// Trains a fresh student (seeded from config.seed) over `train_lines`,
// writing run_config.json, metrics.jsonl, ledger.jsonl, and checkpoints/
// under `run_dir`. The teacher is required by the demonstration modes
// (Demo, TnD, CLMOnGenerated) and must share the student's vocabulary;
// the predictor is required by every mode except CLM. A decode mask is
// accepted only by modes that generate demonstrations.
//
// With resume=false any existing content of `run_dir` is replaced. With
// resume=true the run continues from its latest checkpoint (model and
// optimizer state), replays the ledger, truncates logs past that step,
// and reproduces exactly what the uninterrupted run would have written.
RunSummary run_student(const std::vector<std::string>& train_lines,
                       const Vocabulary& vocab, const ModelConfig& model_config,
                       const TransformerLM* teacher,
                       const AgePredictor* predictor,
                       const StudentRunConfig& config,
                       const std::string& run_dir, const MaskSet* mask = nullptr,
                       bool resume = false,
                       const InteractiveObserver& on_interactive = {});

// Teacher decoding with the mask veto; an empty mask optional makes it
// identical to plain top-k sampling under the same rng stream.
std::vector<int> masked_decode(const TransformerLM& teacher,
                               const std::vector<int>& prompt,
                               const MaskSet* mask, int k, int max_len,
                               Rng& rng);

struct SuiteCellResult {
  RunMode mode = RunMode::kCLM;
  std::uint64_t seed = 0;
  std::string status;  // "ok" or "failed"
  std::string dir;
  std::string final_checkpoint;
  std::string error;  // empty on success
};

struct SuiteResult {
  std::string dir;
  std::vector<SuiteCellResult> cells;
};

// Runs every (mode, seed) cell under `suite_dir`, one subdirectory per
// cell, and writes manifest.json indexing them. A failing cell is
// recorded and the suite continues. `jobs` bounds worker threads; cells
// share only immutable inputs.
SuiteResult run_ablation_suite(const std::vector<std::string>& train_lines,
                               const Vocabulary& vocab,
                               const ModelConfig& model_config,
                               const TransformerLM* teacher,
                               const AgePredictor* predictor,
                               const StudentRunConfig& base,
                               const std::vector<RunMode>& modes,
                               const std::vector<std::uint64_t>& seeds,
                               const std::string& suite_dir, int jobs = 1,
                               const MaskSet* mask = nullptr);

// Manifest round trip for downstream aggregation.
void write_suite_manifest(const SuiteResult& suite);
SuiteResult load_suite_manifest(const std::string& suite_dir);

}  // namespace tnd
