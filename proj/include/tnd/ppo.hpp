// File: include/tnd/ppo.hpp
//
// Policy-gradient machinery: rollout collection for trials and teacher
// demonstrations, generalized advantage estimation, and the clipped
// surrogate + value-loss update. There is deliberately no KL term and no
// reference policy anywhere in these interfaces.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tnd/mask.hpp"
#include "tnd/model.hpp"
#include "tnd/reward.hpp"

namespace tnd {

enum class RolloutSource { kTrial, kDemonstration };

struct Rollout {
  std::vector<int> prompt;
  std::vector<int> generated;  // action tokens; ends with eos when emitted
  // Log-probabilities of the generated tokens under the student at
  // collection time (its own samples for trials; its scores of the
  // teacher's tokens for demonstrations).
  std::vector<double> behavior_logprobs;
  std::vector<double> values;  // V(state before each action)
  double terminal_reward = 0.0;
  double predicted_log_step = 0.0;
  RolloutSource source = RolloutSource::kTrial;
  std::string text;  // decoded prompt + continuation
};

struct PPOConfig {
  double clip_epsilon = 0.2;
  double gamma = 1.0;
  double lambda = 0.95;
  double value_coef = 0.1;
  double lr = 2e-5;
  int epochs_per_batch = 1;
  bool whiten_advantages = true;
  int top_k = 20;

  void validate() const;
};

struct AdvantageSet {
  std::vector<double> advantages;
  std::vector<double> value_targets;  // A_i + V(s_i)
};

// Backward recursion of delta_i = r_i + gamma*V(s_{i+1}) - V(s_i) with a
// zero terminal bootstrap; A_i = sum_k (gamma*lambda)^k delta_{i+k}.
AdvantageSet compute_gae(const std::vector<double>& rewards,
                         const std::vector<double>& values, double gamma,
                         double lambda);

// GAE per rollout (terminal reward on the last action) plus, when
// configured, advantage whitening jointly across the batch: subtract the
// mean, divide by the population std unless it is numerically zero.
// Value targets are always computed from the raw advantages.
std::vector<AdvantageSet> batch_advantages(const std::vector<Rollout>& batch,
                                           const PPOConfig& config);

// The student continues `prompt` with top-k sampling, recording its own
// per-token log-probs and values; the finished sentence is scored with
// the age reward at training step `step`. An immediate end token is
// still a valid one-action rollout.
Rollout collect_trial(const TransformerLM& student,
                      const std::vector<int>& prompt,
                      const AgePredictor& predictor, const Vocabulary& vocab,
                      std::int64_t step, int k, Rng& rng);

// The frozen teacher produces the continuation (optionally under a decode
// mask); the student's log-probs and values over the teacher's tokens are
// recorded as the behavior data.
Rollout collect_demonstration(const TransformerLM& teacher,
                              const TransformerLM& student,
                              const std::vector<int>& prompt,
                              const AgePredictor& predictor,
                              const Vocabulary& vocab, std::int64_t step,
                              int k, Rng& rng, MaskSet* mask = nullptr);

struct ScoredRollout {
  const Rollout* rollout = nullptr;
  std::vector<double> advantages;
  std::vector<double> value_targets;
};

// -L_pg + value_coef * L_value, averaged per token across the batch.
// Ratios are exp(new - behavior), clamped to [1e-4, 1e4]; clamp and clip
// event counts land in `stats` when given.
struct PPOLossStats {
  long clip_events = 0;
  long clamp_events = 0;
  long tokens = 0;
};
ad::Tensor ppo_loss(ad::Tape& tape, const TransformerLM& policy,
                    const std::vector<ScoredRollout>& batch,
                    const PPOConfig& config, PPOLossStats* stats = nullptr);

struct PPOUpdateStats {
  double mean_trial_reward = 0.0;
  double mean_demo_reward = 0.0;
  double loss = 0.0;  // first-epoch pre-step loss
  double clip_fraction = 0.0;
  long clamp_events = 0;
  int n_trials = 0;
  int n_demos = 0;
};

// batch_advantages followed by epochs_per_batch optimizer passes on
// ppo_loss. Loss and clip statistics come from the first epoch, before
// any step.
PPOUpdateStats ppo_update(TransformerLM& student, ad::Adam& adam,
                          const std::vector<Rollout>& batch,
                          const PPOConfig& config);

// Shared sampling core: top-k inverse-CDF draw (one engine value per
// token), optional mask veto with deterministic replacement by the best
// unmasked candidate. Exposed for the decode-mask experiment.
struct SampledSequence {
  std::vector<int> generated;
  std::vector<double> logprobs;  // under the generating model
  std::vector<double> values;
};
SampledSequence sample_with_scores(const TransformerLM& model,
                                   const std::vector<int>& prompt, int k,
                                   int max_len, Rng& rng, MaskSet* mask);

// Student log-probs and state values over a fixed continuation.
struct ActionScores {
  std::vector<double> logprobs;
  std::vector<double> values;
};
ActionScores score_actions(const TransformerLM& model,
                           const std::vector<int>& prompt,
                           const std::vector<int>& generated);

}  // namespace tnd
