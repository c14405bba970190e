// File: include/tnd/optim.hpp
#pragma once

#include <cstdint>
#include <iosfwd>

#include "tnd/tensor.hpp"

namespace tnd::ad {

struct AdamConfig {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

// Adam with bias correction. One optimizer instance owns the moment state
// for a parameter set across all training phases; the learning rate is a
// per-call argument because the phases use different rates.
class Adam {
 public:
  explicit Adam(ParameterSet& params, AdamConfig cfg = {});

  // One update from the grads currently stored on the parameters.
  // Every parameter must have a populated gradient.
  void step(double lr);

  std::int64_t step_count() const { return step_count_; }

  // Binary round trip of moments + step counter (resume support).
  void save_state(std::ostream& os) const;
  void load_state(std::istream& is);

 private:
  ParameterSet* params_;
  AdamConfig cfg_;
  std::int64_t step_count_ = 0;
  std::vector<Matrix> m_;
  std::vector<Matrix> v_;
};

}  // namespace tnd::ad
