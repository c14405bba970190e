// File: include/tnd/eval.hpp
//
// Word-level evaluation: per-checkpoint mean surprisal of tracked words
// on the held-out split, double-sigmoid learning-curve fits, acquisition
// ages derived from the fits, and the vocabulary growth curve.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tnd/bpe.hpp"
#include "tnd/model.hpp"

namespace tnd {

struct WordSurprisalRecord {
  std::string word;
  std::int64_t step = 0;
  double mean_surprisal = 0.0;  // bits
  int occurrence_count = 0;     // samples used (capped)
};

// Pre-tokenized evaluation plan: which lines to forward and where the
// tracked words sit. Built once, run against every checkpoint. Words
// that are not a single token, or occur fewer than min_occurrences
// times within the model's context window, are excluded and reported.
class SurprisalProbe {
 public:
  SurprisalProbe(const Vocabulary& vocab,
                 const std::vector<std::string>& eval_lines,
                 const std::vector<std::string>& words, int min_occurrences,
                 int max_samples, int context_len);

  const std::vector<std::string>& words() const { return words_; }
  const std::vector<std::string>& skipped_multi_token() const {
    return skipped_multi_;
  }
  const std::vector<std::string>& skipped_rare() const {
    return skipped_rare_;
  }

  // One forward per retained line; surprisal = -log2 softmax(logits at
  // the preceding position)[word id], averaged per word.
  std::vector<WordSurprisalRecord> run(const TransformerLM& model,
                                       std::int64_t step) const;

 private:
  struct Hit {
    int line = 0;
    int pos = 0;   // position of the word token within the framed line
    int word = 0;  // index into words_
  };
  std::vector<std::string> words_;
  std::vector<std::string> skipped_multi_;
  std::vector<std::string> skipped_rare_;
  std::vector<std::vector<int>> framed_;  // retained framed lines
  std::vector<Hit> hits_;
};

struct LearningCurve {
  std::string word;
  std::vector<double> x;  // log10 step, strictly increasing
  std::vector<double> y;  // mean surprisal, bits
};

// Pivots per-checkpoint surprisal records (checkpoints in increasing
// step order, steps >= 1) into one curve per word on the log10 axis.
std::vector<LearningCurve> build_curves(
    const std::vector<std::vector<WordSurprisalRecord>>& per_checkpoint);

// f(x) = b + a1*sigmoid(-k1(x-m1)) + a2*sigmoid(-k2(x-m2)); amplitudes
// and slopes are kept nonnegative by construction, so f is nonincreasing.
struct SigmoidFit {
  double b = 0.0;
  double a1 = 0.0, a2 = 0.0;
  double k1 = 0.0, k2 = 0.0;
  double m1 = 0.0, m2 = 0.0;
  double rmse = 0.0;
  bool converged = false;
  bool single = false;  // fell back to the one-sigmoid family
};

double sigmoid_curve_value(const SigmoidFit& fit, double x);

// Damped Gauss-Newton least squares over a deterministic multi-start
// grid (8 starts); needs >= 8 points. If no double-sigmoid start
// converges, refits the single-sigmoid family and flags it.
SigmoidFit fit_double_sigmoid(const LearningCurve& curve);

// First x in [x_lo, x_hi] where the fitted curve falls to
// f(x_lo) - threshold * (f(x_lo) - f(x_hi)), by bisection. Empty when
// the fit is flat over the range.
std::optional<double> naoa_at(const SigmoidFit& fit, double threshold,
                              double x_lo, double x_hi);

struct AoAReport {
  std::string word;
  SigmoidFit fit;
  // threshold percent (50, 55, .., 95) -> crossing; unacquired ones are
  // imputed at x_hi and flagged here
  std::map<int, double> naoa;
  std::map<int, bool> acquired;
  double naoa_range_avg = 0.0;
  double x_lo = 0.0, x_hi = 0.0;
};

AoAReport analyze_curve(const LearningCurve& curve);

// Words acquired (nAoA@0.50 crossed, not imputed) at or before each grid
// point, in grid order.
std::vector<int> effective_vocab(const std::vector<AoAReport>& reports,
                                 const std::vector<double>& grid_log10_steps);

struct PlateauRegression {
  double slope = 0.0;
  double intercept = 0.0;
  double r = 0.0;
  int n = 0;
};

// OLS of the fitted plateau b against unigram surprisal
// -log2(count/total) over words with converged fits; needs >= 20 such
// words.
PlateauRegression plateau_vs_unigram(
    const std::vector<AoAReport>& reports,
    const std::map<std::string, long>& unigram_counts, long total_tokens);

// Whitespace unigram counts of the tracked words over corpus lines.
std::map<std::string, long> unigram_table(
    const std::vector<std::string>& lines,
    const std::vector<std::string>& words, long* total_tokens);

}  // namespace tnd
