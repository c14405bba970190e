// File: include/tnd/ops.hpp
//
// Recorded primitives. Each op computes its forward value eagerly and
// registers a backward rule on the tape. Backward rules accumulate
// (in->grad += ...), so summed losses and repeated backward calls compose.
#pragma once

#include <vector>

#include "tnd/tensor.hpp"

namespace tnd::ad {

// C = A * B.  dA = dC * B^T, dB = A^T * dC.
Tensor matmul(Tape& tape, const Tensor& a, const Tensor& b);

// Elementwise; shapes must match.
Tensor add(Tape& tape, const Tensor& a, const Tensor& b);
Tensor sub(Tape& tape, const Tensor& a, const Tensor& b);
Tensor mul(Tape& tape, const Tensor& a, const Tensor& b);

// a + b with b a 1 x n row vector broadcast over a's rows.
Tensor add_rowvec(Tape& tape, const Tensor& a, const Tensor& b);

Tensor scale(Tape& tape, const Tensor& a, double s);
Tensor exp_elem(Tape& tape, const Tensor& a);

// Clamp to [lo, hi]; gradient is zero outside the interval.
Tensor clamp_elem(Tape& tape, const Tensor& a, double lo, double hi);

// Elementwise min; gradient flows to the smaller operand (ties go to a).
Tensor min_elem(Tape& tape, const Tensor& a, const Tensor& b);

// Mean over all entries -> scalar.
Tensor mean_all(Tape& tape, const Tensor& a);

// Rows [start, start+count) as a view-copy; gradient scatters back.
Tensor row_block(Tape& tape, const Tensor& a, Index start, Index count);

// Exact GELU: 0.5 x (1 + erf(x / sqrt(2))).
Tensor gelu(Tape& tape, const Tensor& a);

// Row-wise layer normalization with learned gain/bias (1 x d row vectors).
Tensor layer_norm(Tape& tape, const Tensor& x, const Tensor& gamma,
                  const Tensor& beta, double eps = 1e-5);

// Row t of the output is table.row(ids[t]); gradient scatter-adds rows.
Tensor embedding_lookup(Tape& tape, const Tensor& table,
                        const std::vector<int>& ids);

// Multi-head scaled dot-product attention over q, k, v of shape T x d,
// head h owning the column block [h*d/H, (h+1)*d/H). Position i attends
// to positions <= i only, so output row i never depends on rows > i.
Tensor causal_masked_attention(Tape& tape, const Tensor& q, const Tensor& k,
                               const Tensor& v, int n_heads);

// Mean over rows of -log softmax(logits)[t, targets[t]], max-stabilized.
Tensor softmax_cross_entropy(Tape& tape, const Tensor& logits,
                             const std::vector<int>& targets);

// Per-row log softmax evaluated at ids[t]; returns T x 1.
Tensor log_softmax_gather(Tape& tape, const Tensor& logits,
                          const std::vector<int>& ids);

}  // namespace tnd::ad
