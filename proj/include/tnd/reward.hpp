// File: include/tnd/reward.hpp
//
// Developmental-trajectory dataset, the age predictor R(S), and the
// age-conditioned reward r = R(S) - ln(step). The predictor regresses
// the natural log of the training step that produced a text.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tnd/bpe.hpp"
#include "tnd/checkpoint.hpp"
#include "tnd/model.hpp"
#include "tnd/rng.hpp"

namespace tnd {

struct TrajectorySample {
  std::string text;
  std::int64_t step = 0;
};

// For each checkpoint, draws held-out sentences, keeps their first
// `context_tokens` framed tokens as a prompt, and lets the checkpointed
// model continue with top-k sampling. Returns (decoded text, step) pairs.
std::vector<TrajectorySample> generate_trajectory_dataset(
    const std::vector<TrajectoryCheckpoint>& trajectory,
    const Vocabulary& vocab, const std::vector<std::string>& eval_lines,
    int contexts_per_checkpoint, int context_tokens, int top_k, Rng& rng);

void save_trajectory_dataset(const std::vector<TrajectorySample>& samples,
                             const std::string& path);
std::vector<TrajectorySample> load_trajectory_dataset(const std::string& path);

// First `n` framed tokens (begin marker + leading text tokens), never the
// terminal end marker, so generation has room to continue.
std::vector<int> prompt_tokens(const Vocabulary& vocab, const std::string& line,
                               int n, int context_len);

struct AgePredictorConfig {
  std::string backbone = "ngram-ridge";  // or "transformer"
  // ngram-ridge settings
  int hash_dim = 1 << 14;
  int max_order = 3;  // char and word n-grams of orders 1..max_order
  double ridge_lambda = 1.0;
  int cg_max_iters = 400;
  double cg_tol = 1e-10;
  // transformer settings
  int tf_d_model = 32;
  int tf_layers = 2;
  int tf_heads = 4;
  int tf_epochs = 3;
  double tf_lr = 1e-3;
  // shared
  double holdout_fraction = 0.1;
  std::uint64_t seed = 0;

  void validate() const;
};

struct AgePredictorReport {
  double holdout_mse = 0.0;
  double holdout_spearman = 0.0;
  int train_samples = 0;
  int holdout_samples = 0;
};

class AgePredictor {
 public:
  // Predicted natural-log training step; pure function of the text.
  double predict(const std::string& text) const;

  const AgePredictorConfig& config() const { return config_; }
  const AgePredictorReport& report() const { return report_; }

  void save(const std::string& path) const;
  static AgePredictor load(const std::string& path);

  friend AgePredictor train_age_predictor(
      const std::vector<TrajectorySample>& dataset,
      const AgePredictorConfig& config, const Vocabulary* vocab);

 private:
  AgePredictorConfig config_;
  AgePredictorReport report_;
  // ngram-ridge state: weights over hash_dim counts + bias + length
  Eigen::VectorXd weights_;
  // transformer state
  std::shared_ptr<TransformerLM> backbone_;
  std::shared_ptr<Vocabulary> backbone_vocab_;

  std::vector<std::pair<int, double>> features(const std::string& text) const;
};

// Fits the configured backbone to (text, ln step) pairs. The dataset must
// cover at least 5 distinct steps. `vocab` is required by the transformer
// backbone and ignored by the ridge one.
AgePredictor train_age_predictor(const std::vector<TrajectorySample>& dataset,
                                 const AgePredictorConfig& config,
                                 const Vocabulary* vocab = nullptr);

struct Reward {
  double value = 0.0;
  double predicted_log_step = 0.0;
  std::int64_t actual_step = 0;
};

// value = predict(text) - ln(step), exactly; step must be >= 1.
Reward compute_reward(const AgePredictor& predictor, const std::string& text,
                      std::int64_t step);

}  // namespace tnd
