// File: include/tnd/harness.hpp
//
// Experiment plumbing: the config file that is the single source of
// truth for a study, the staged pipeline (tokenizer, teacher, age
// predictor, student runs), and the evaluation/analysis passes over a
// finished suite. Every artifact is a pure function of config + seed.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tnd/eval.hpp"
#include "tnd/orchestrator.hpp"
#include "tnd/reward.hpp"
#include "tnd/stats.hpp"

namespace tnd {

struct TeacherStageConfig {
  std::int64_t steps = 1200;
  int checkpoints = 25;
  int batch_size = 8;
  double lr = 1e-3;
  std::uint64_t seed = 2024;
};

struct RewardStageConfig {
  AgePredictorConfig predictor;
  int contexts_per_checkpoint = 40;
  int context_tokens = 5;
  int top_k = 5;
  std::uint64_t dataset_seed = 91;
};

struct EvalStageConfig {
  int min_occurrences = 8;
  int max_samples = 512;
};

struct ExperimentConfig {
  // inputs (resolved against the config file's directory)
  std::string corpus_path;
  std::string tracked_words_path;
  std::string pos_map_path;   // optional: "word<TAB>category" lines
  std::string mask_words_path;  // optional, required by mask runs
  std::string output_root;

  double eval_fraction = 0.2;
  std::uint64_t split_seed = 17;
  int target_vocab = 160;

  ModelConfig model;
  TeacherStageConfig teacher;
  RewardStageConfig reward;
  StudentRunConfig student;  // mode and seed overridden per run
  int student_checkpoints = 25;
  EvalStageConfig eval;
  std::vector<RunMode> suite_modes;
  std::vector<std::uint64_t> suite_seeds;
  std::vector<std::uint64_t> mask_seeds;

  void validate() const;
};

// Parses the JSON config; relative paths are resolved against the file's
// directory, and the TND_OUTPUT_ROOT environment variable overrides
// output_root when set.
ExperimentConfig load_experiment_config(const std::string& path);

// Artifact layout under output_root.
struct Workspace {
  std::string root;
  std::string vocab_path;       // <root>/vocab.bin
  std::string teacher_dir;      // <root>/teacher
  std::string dataset_path;     // <root>/trajectory_dataset.jsonl
  std::string predictor_path;   // <root>/predictor.bin
  std::string scatter_path;     // <root>/predictor_scatter.csv
  std::string suite_dir;        // <root>/suite
  std::string masked_suite_dir;  // <root>/masked_suite
  std::string runs_dir;         // <root>/runs (single train-student calls)
};
Workspace workspace(const ExperimentConfig& cfg);

struct CorpusBundle {
  std::vector<std::string> lines;
  std::vector<std::string> train;
  std::vector<std::string> eval;
  std::vector<std::string> tracked_words;
  std::map<std::string, std::string> pos_map;
  std::vector<std::string> mask_words;
};
CorpusBundle load_corpus_bundle(const ExperimentConfig& cfg);

// ---- pipeline stages --------------------------------------------------

struct TeacherStageResult {
  std::string trajectory_dir;
  double final_loss = 0.0;
  int checkpoints = 0;
};
// Trains the tokenizer (saved to vocab.bin) and the teacher trajectory.
TeacherStageResult stage_train_teacher(const ExperimentConfig& cfg);

struct RewardStageResult {
  std::string predictor_path;
  AgePredictorReport report;
};
// Samples the developmental-trajectory dataset from the saved teacher
// checkpoints and fits the age predictor; also writes a true-vs-predicted
// scatter CSV for the held-out split.
RewardStageResult stage_build_reward(const ExperimentConfig& cfg);

// One student run. `masked` loads the mask word list; the run directory
// is <runs_dir>/<mode>_seed<seed> (masked_ prefix when masked) unless
// overridden.
RunSummary stage_train_student(const ExperimentConfig& cfg, RunMode mode,
                               std::uint64_t seed, bool masked, bool resume,
                               const std::string& dir_override = "");

SuiteResult stage_run_suite(const ExperimentConfig& cfg, int jobs);
// TnD across mask_seeds with the decode mask applied.
SuiteResult stage_mask_experiment(const ExperimentConfig& cfg, int jobs);

// ---- evaluation over a finished suite ----------------------------------

struct RunEvaluation {
  RunMode mode = RunMode::kCLM;
  std::uint64_t seed = 0;
  std::string dir;
  std::vector<std::int64_t> grid;  // checkpoint steps
  std::vector<AoAReport> reports;  // one per usable word
  // per-word mean surprisal at the final checkpoint, aligned with reports
  std::vector<double> final_surprisal;
  double mean_naoa50 = 0.0;  // unacquired words imputed at range end
  double final_mean_surprisal = 0.0;
  std::vector<int> vocab_growth;  // effective vocabulary on the grid
};

struct ModeAggregate {
  RunMode mode = RunMode::kCLM;
  int n_runs = 0;
  double mean_naoa50 = 0.0;
  double se_naoa50 = 0.0;  // standard error across seeds
  double mean_final_surprisal = 0.0;
  double se_final_surprisal = 0.0;
};

struct SuiteEvaluation {
  std::vector<RunEvaluation> runs;  // ok cells only
  std::vector<ModeAggregate> aggregates;
  std::vector<std::string> words;          // usable tracked words
  std::vector<std::string> skipped_words;  // multi-token or too rare
};

// Per-word surprisal across every checkpoint of every ok run, curve fits,
// acquisition ages, and per-mode aggregates. With write_reports, emits
// aoa.csv, learning_curves.csv, aggregate.csv, vocab_growth.csv and the
// SVG plots under <suite_dir>/eval.
SuiteEvaluation evaluate_suite(const ExperimentConfig& cfg,
                               const std::string& suite_dir,
                               bool write_reports = true);

// Restricted variant used by the mask experiment: only `words` are
// probed (they must be tracked), reports are not written.
SuiteEvaluation evaluate_suite_words(const ExperimentConfig& cfg,
                                     const std::string& suite_dir,
                                     const std::vector<std::string>& words);

// ---- frequency-predictor analysis ---------------------------------------

struct RunAnalysis {
  RunMode mode = RunMode::kCLM;
  std::uint64_t seed = 0;
  std::vector<stats::PairedBetaRow> rows;  // one per word group
};
// Regresses final-checkpoint word surprisal on cumulative trial, demo,
// and corpus frequencies from the run ledgers; one row per
// part-of-speech group with enough words, plus an "all" row. Writes
// analysis.csv under <suite_dir>/eval.
std::vector<RunAnalysis> analyze_suite(const ExperimentConfig& cfg,
                                       const std::string& suite_dir);

// Redraws the SVG plots from a fresh evaluation pass; fails loudly on a
// suite with no successful runs.
void plot_suite(const ExperimentConfig& cfg, const std::string& suite_dir);

}  // namespace tnd
