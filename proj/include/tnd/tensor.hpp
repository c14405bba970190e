// File: include/tnd/tensor.hpp
//
// Reverse-mode autodiff over dense Eigen matrices. A Tensor is a shared
// handle to value + gradient storage; a Tape records operations in
// execution order and replays their backward rules in reverse.
//
// Everything is 64-bit. Tensors are 2-D (vectors are n x 1, scalars 1 x 1),
// which covers the whole model; no broadcasting beyond row vectors.
#pragma once

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tnd/error.hpp"

namespace tnd::ad {

using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

struct TensorData {
  Matrix value;
  Matrix grad;  // empty until first touched by backward (or ensure_grad)
  bool requires_grad = false;

  Index rows() const { return value.rows(); }
  Index cols() const { return value.cols(); }
  bool is_scalar() const { return value.rows() == 1 && value.cols() == 1; }
  double scalar() const {
    TND_CHECK(is_scalar(), "scalar() on non-scalar tensor");
    return value(0, 0);
  }

  bool has_grad() const { return grad.size() == value.size() && grad.size() > 0; }
  void ensure_grad() {
    if (!has_grad()) grad = Matrix::Zero(value.rows(), value.cols());
  }
  void zero_grad() {
    if (has_grad()) grad.setZero();
  }
};

using Tensor = std::shared_ptr<TensorData>;

inline Tensor make_tensor(Matrix value, bool requires_grad = false) {
  auto t = std::make_shared<TensorData>();
  t->value = std::move(value);
  t->requires_grad = requires_grad;
  return t;
}

inline Tensor make_scalar(double v, bool requires_grad = false) {
  return make_tensor(Matrix::Constant(1, 1, v), requires_grad);
}

// Records one operation per node, in execution order: inputs of a node are
// always created before the node itself, so a reverse scan is a valid
// topological backward traversal visiting each node exactly once.
class Tape {
 public:
  // `pull` receives the output tensor (with grad populated) and must
  // accumulate into the inputs' grads. It captures its inputs itself.
  Tensor record(Matrix value, std::function<void(const TensorData&)> pull) {
    Tensor out = make_tensor(std::move(value));
    nodes_.push_back(Node{out, std::move(pull)});
    return out;
  }

  // Seeds d(loss)/d(loss) = 1 and runs every backward rule in reverse
  // order. Nodes whose output grad was never touched are skipped (their
  // contribution is identically zero). Repeated calls accumulate into leaf
  // grads; tape-owned intermediates are reset each pass so every call
  // contributes exactly one gradient.
  void backward(const Tensor& loss) {
    TND_CHECK(loss != nullptr, "backward: null loss");
    TND_CHECK(loss->is_scalar(), "backward: loss is not scalar");
    for (auto& node : nodes_) node.out->zero_grad();
    loss->ensure_grad();
    loss->grad(0, 0) += 1.0;
    for (auto it = nodes_.rbegin(); it != nodes_.rend(); ++it) {
      if (!it->out->has_grad()) continue;
      it->pull(*it->out);
    }
  }

  std::size_t size() const { return nodes_.size(); }
  void clear() { nodes_.clear(); }

 private:
  struct Node {
    Tensor out;
    std::function<void(const TensorData&)> pull;
  };
  std::vector<Node> nodes_;
};

// A named, ordered parameter set. Order is the serialization order of
// checkpoints, so it must stay stable across construction paths.
struct ParameterSet {
  std::vector<std::pair<std::string, Tensor>> items;

  Tensor add(const std::string& name, Matrix value) {
    Tensor t = make_tensor(std::move(value), /*requires_grad=*/true);
    items.emplace_back(name, t);
    return t;
  }

  // Materializes zeroed grads for every parameter, so objectives that
  // touch only part of the model still satisfy the optimizer contract.
  void zero_grad() {
    for (auto& [name, t] : items) {
      t->ensure_grad();
      t->grad.setZero();
    }
  }

  std::size_t total_size() const {
    std::size_t n = 0;
    for (const auto& [name, t] : items) n += static_cast<std::size_t>(t->value.size());
    return n;
  }
};

}  // namespace tnd::ad
