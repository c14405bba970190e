// File: include/tnd/stats.hpp
//
// Correlation, regression, and diagnostic statistics used by the reward
// model and the post-hoc analyses.
#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace tnd::stats {

double mean(const std::vector<double>& x);
// population standard deviation (divide by n)
double stddev(const std::vector<double>& x);
// (x - mean) / population std; throws on zero variance
std::vector<double> zscore(const std::vector<double>& x);

double pearson(const std::vector<double>& x, const std::vector<double>& y);

// Rank correlation with average ranks on ties.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

// Ranks with ties averaged (1-based).
std::vector<double> ranks_average_ties(const std::vector<double>& x);

// I_x(a, b), continued-fraction evaluation.
double regularized_incomplete_beta(double a, double b, double x);

// Upper tail P(F > f) of the F(df1, df2) distribution.
double f_test_p_value(double f, double df1, double df2);

struct RegressionResult {
  std::vector<std::string> names;
  std::vector<double> betas;      // coefficients on z-scored variables
  std::vector<double> pearson_r;  // per predictor, against y
  std::vector<double> vif;
  std::vector<double> p_values;   // drop-one nested F-tests
  double r_squared = 0.0;
  int n_points = 0;
};

// OLS with response and predictors z-scored (no intercept; standardized
// variables have mean zero). Needs >= 10 points. A singular design
// raises an analysis error naming the most collinear predictor pair.
RegressionResult standardized_ols(const std::vector<double>& y,
                                  const std::vector<std::vector<double>>& X,
                                  const std::vector<std::string>& names);

// VIF_j = 1 / (1 - R^2 of predictor j regressed on the others).
// Perfect collinearity reports infinity. A single predictor reports 1.
std::vector<double> vif(const std::vector<std::vector<double>>& X);

// The pairwise-predictor regression of cumulative word frequencies
// against group surprisal. Counts are log(1+count)-transformed, then
// standardized_ols runs on the (trial, demo) and (trial, corpus) pairs;
// the demo beta comes from the first pair, the corpus beta from the
// second, and the trial beta (and its p-value) is averaged over both.
// Constant predictors are dropped with a flag; a constant response
// returns an all-dropped row.
struct PairedBetaRow {
  std::string group;
  int n_points = 0;
  double beta_trial = 0.0, beta_demo = 0.0, beta_corpus = 0.0;
  double r_trial = 0.0, r_demo = 0.0, r_corpus = 0.0;
  double p_trial = 1.0, p_demo = 1.0, p_corpus = 1.0;
  double vif_trial_demo = 1.0, vif_trial_corpus = 1.0;
  bool trial_dropped = false, demo_dropped = false, corpus_dropped = false;
  bool collinearity_flag = false;  // a pair VIF exceeded the bound
};
PairedBetaRow paired_beta_analysis(const std::vector<double>& trial_counts,
                                   const std::vector<double>& demo_counts,
                                   const std::vector<double>& corpus_counts,
                                   const std::vector<double>& surprisal,
                                   double vif_bound = 10.0);

}  // namespace tnd::stats
