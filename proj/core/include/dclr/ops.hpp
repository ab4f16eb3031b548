#pragma once

#include <cstdint>
#include <vector>

#include "dclr/graph.hpp"

namespace dclr::ops {

// Elementwise / scalar plumbing ------------------------------------------------

Var add(Graph& g, Var a, Var b);
Var sub(Graph& g, Var a, Var b);
Var mul(Graph& g, Var a, Var b);
Var neg(Graph& g, Var a);
Var scale(Graph& g, Var a, double c);
Var relu(Graph& g, Var a);
Var sum_all(Graph& g, Var a);
Var mean_all(Graph& g, Var a);
Var reshape(Graph& g, Var a, std::vector<std::int64_t> shape);

// Cuts the tape: value copy that never propagates gradient.
Var detach(Graph& g, Var a);

// Linear algebra ---------------------------------------------------------------

// x [B,C] * w^T [C,O] + b -> [B,O]
Var linear(Graph& g, Var x, Var w, Var b);
// A [M,K] * B^T [N,K] -> [M,N]
Var matmul_nt(Graph& g, Var a, Var b);
// Rows scaled to unit L2 norm; rejects zero rows.
Var l2_normalize_rows(Graph& g, Var x);
// X [R,D] -> [M,D] selecting rows; backward scatter-adds.
Var gather_rows(Graph& g, Var x, std::vector<std::int64_t> indices);
// Stack [Mi,D] blocks vertically.
Var concat_rows(Graph& g, const std::vector<Var>& blocks);

// Convolution / normalization ---------------------------------------------------

struct Conv3dSpec {
  int stride_t = 1, stride_h = 1, stride_w = 1;
  int pad_t = 0, pad_h = 0, pad_w = 0;
};

// x [B,Ci,T,H,W], w [Co,Ci,kt,kh,kw], b [Co] -> [B,Co,T',H',W']
Var conv3d(Graph& g, Var x, Var w, Var b, const Conv3dSpec& spec);

// Per-sample group normalization over (C/groups, spatial...) with per-channel
// affine. gamma/beta are [C].
Var group_norm(Graph& g, Var x, Var gamma, Var beta, int groups, double eps = 1e-5);

// Pooling / activation maps ------------------------------------------------------

// [B,C,T,H,W] -> [B,C]
Var global_avg_pool(Graph& g, Var x);
// A[b,t,h,w] = sum_c |x[b,c,t,h,w]| : [B,C,T,H,W] -> [B,T,H,W]
Var channel_abs_sum(Graph& g, Var x);
// Per-sample (x - min) / (max - min) over all non-batch dims; constant maps
// normalize to zero.
Var minmax_normalize(Graph& g, Var x);
// f[b,c] = sum_p F[b,c,p] A[b,p] / sum_p A[b,p]; A must be nonnegative. A
// samples with zero total weight fall back to the unweighted mean (logged).
Var weighted_pool(Graph& g, Var f, Var a);
// mean |a - b| over all elements.
Var mean_abs_diff(Graph& g, Var a, Var b);

// Contrastive core ----------------------------------------------------------------

// Row-wise temperature softmax cross-entropy over a similarity matrix with a
// per-row candidate mask, one positive column per row, and per-row weights:
//   loss = sum_r w[r] * ( logsumexp_{k in mask_r}(S[r,k]/tau) - S[r,pos_r]/tau ) / norm
// mask is row-major [M*K], nonzero = candidate allowed; pos[r] must be allowed.
Var masked_xent(Graph& g, Var s, std::vector<std::int64_t> pos, std::vector<std::uint8_t> mask,
                std::vector<double> row_weights, double tau, double norm);

// Mean positive / mean allowed-negative similarity of a masked similarity
// matrix (diagnostics; reads values only).
struct SimDiag {
  double pos_mean = 0.0;
  double neg_mean = 0.0;
  std::int64_t pos_count = 0;
  std::int64_t neg_count = 0;
};
SimDiag sim_diagnostics(const Tensor& s, const std::vector<std::int64_t>& pos,
                        const std::vector<std::uint8_t>& mask);

}  // namespace dclr::ops
