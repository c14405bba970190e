// File: include/tnd/model.hpp
//
// Tiny decoder-only transformer with a language-modeling head and a scalar
// value head, plus the training step, incremental sampling, and top-k
// decoding built on it.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tnd/optim.hpp"
#include "tnd/ops.hpp"
#include "tnd/rng.hpp"
#include "tnd/tensor.hpp"

namespace tnd {

struct ModelConfig {
  int d_model = 64;
  int n_heads = 4;
  int n_layers = 2;
  int context_len = 64;
  int vocab_size = 512;

  void validate() const;
  bool operator==(const ModelConfig&) const = default;
};

struct LayerParams {
  ad::Tensor ln1_g, ln1_b;
  ad::Tensor wq, bq, wk, bk, wv, bv, wo, bo;
  ad::Tensor ln2_g, ln2_b;
  ad::Tensor w1, b1, w2, b2;
};

struct ForwardOut {
  ad::Tensor logits;  // T x V
  ad::Tensor values;  // T x 1
};

struct PlainForwardOut {
  ad::Matrix logits;
  ad::Matrix values;
};

class TransformerLM {
 public:
  TransformerLM(ModelConfig config, std::uint64_t init_seed);

  const ModelConfig& config() const { return config_; }
  ad::ParameterSet& params() { return params_; }
  const ad::ParameterSet& params() const { return params_; }

  // Tape-recorded forward over one sequence (2 <= T <= context_len).
  ForwardOut forward(ad::Tape& tape, const std::vector<int>& ids) const;

  // Same math without gradient bookkeeping, for scoring and evaluation.
  PlainForwardOut forward_plain(const std::vector<int>& ids) const;

  ad::Tensor tok_emb, pos_emb;
  std::vector<LayerParams> layers;
  ad::Tensor lnf_g, lnf_b;
  ad::Tensor lm_w, lm_b;
  ad::Tensor val_w, val_b;

 private:
  ModelConfig config_;
  ad::ParameterSet params_;
};

// Mean next-token NLL over positions 0..T-2 predicting 1..T-1.
ad::Tensor clm_loss(ad::Tape& tape, const TransformerLM& model,
                    const std::vector<int>& ids);

// One optimizer step on the mean of per-sequence losses; returns the
// pre-step loss value.
double clm_step(TransformerLM& model, ad::Adam& adam,
                const std::vector<std::vector<int>>& batch, double lr);

// Incremental decoder: feeds one token at a time against cached keys and
// values, numerically identical to the full forward at every prefix.
class InferenceSession {
 public:
  explicit InferenceSession(const TransformerLM& model);

  // Appends `id` at the next position and returns that position's logits
  // row (1 x V) and value.
  struct StepOut {
    Eigen::RowVectorXd logits;
    double value = 0.0;
  };
  StepOut step(int id);

  int length() const { return pos_; }

 private:
  const TransformerLM& model_;
  std::vector<ad::Matrix> k_cache_, v_cache_;  // per layer, grows by rows
  int pos_ = 0;
};

// Renormalized top-k ancestral sampling (ties in the logit sort broken
// toward lower ids). Draws exactly one engine value per generated token.
// Stops after eos or when the sequence reaches max_len. k above the
// vocabulary is clamped to the vocabulary.
std::vector<int> sample_top_k(const TransformerLM& model,
                              const std::vector<int>& prompt, int k,
                              int max_len, Rng& rng,
                              int eos_id);

// The candidate set ordering used by sample_top_k, exposed for decoders
// that need to veto entries: indices of the top-k logits, highest first.
std::vector<int> top_k_ids(const Eigen::RowVectorXd& logits, int k);

}  // namespace tnd
