#pragma once

#include <vector>

#include "ruijops/diffop.hpp"

namespace ruijops {

// Shared data of one operator family: variable count, shift step of the
// difference operators, coupling shift entering every numerator bracket.
struct ModelParams {
    int n;
    Cplx delta;
    Cplx kappa;
    BracketFunction bracket;
};

// Coefficient of T^{eps_I * delta} in the order-r operator:
//   A_I(x) = prod_{i in I, j not in I} [x_i - x_j + kappa] / [x_i - x_j]
Cplx coeff_A(const std::vector<int>& subset, const Point& x, const ModelParams& p);

// Coefficient of T^{mu * delta} in the degree-l commuting family:
//   H_mu(x) = prod_{i<j} [x_i - x_j + (mu_i - mu_j) delta] / [x_i - x_j]
//             * prod_{i,j} [x_i - x_j + kappa]_{mu_i} / [x_i - x_j + delta]_{mu_i}
// where the double product runs over all ordered pairs including i == j.
Cplx coeff_H(const MultiIndex& mu, const Point& x, const ModelParams& p);

// Order-r factorized operator D_r = sum_{|I|=r} A_I(x) T^{eps_I delta}.
// D_0 is the identity; r > n gives the zero operator.
DiffOperator build_D(int r, const ModelParams& p);

// Degree-l member H_l = sum_{|mu|=l} H_mu(x) T^{mu delta} of the commuting
// family extending the D_r.  H_0 is the identity.
DiffOperator build_H(int l, const ModelParams& p);

// Deliberately corrupted variant of build_H for negative controls: when
// mu_1 >= 1, the first numerator bracket of the (1,2) pair factor is evaluated
// at kappa + eps instead of kappa.  Requires n >= 2.
DiffOperator build_H_perturbed(int l, const ModelParams& p, const Cplx& eps);

// [r kappa + s delta]
Cplx wronski_weight(int r, int s, const ModelParams& p);

// sum_{r+s=l} (-1)^r [r kappa + s delta] D_r H_s, which must vanish for l >= 1.
DiffOperator wronski_residual_op(int l, const ModelParams& p);

// Pointwise form of the same alternating sum, resolved at a single
// coefficient: for a fixed multi-index lambda with |lambda| >= 1,
//   sum_{I subset supp(lambda)} (-1)^{|I|} [|I| kappa + (|lambda|-|I|) delta]
//       A_I(x) H_{lambda - eps_I}(x + eps_I delta) = 0.
Residual coefficient_identity_residual(const MultiIndex& lambda, const Point& x,
                                       const ModelParams& p);

// Source identity behind the coefficient cancellation: for points z_1..z_n,
// w_1..w_m and a shift a,
//   sum_{I subset {1..n}} (-1)^{|I|} ([|w|-|z|+|I|a] / [|w|-|z|])
//     prod_{i in I, j not in I} [z_j - z_i + a] / [z_j - z_i]
//     prod_{i in I, k} [w_k - z_i] / [w_k - z_i + a]   = 0,
// where |z|, |w| are coordinate sums.
Residual key_identity_residual(std::span<const Cplx> z, std::span<const Cplx> w, const Cplx& a,
                               const BracketFunction& bracket);

enum class DetOrder { row_major, column_major };

// H_l as the l x l operator determinant with entries
// ([r kappa + (i-r) delta] / [i delta]) D_r at r = i - j + 1 (zero for r < 0),
// expanded over permutations; factor order in each product follows `order`.
DiffOperator h_via_determinant(int l, const ModelParams& p,
                               DetOrder order = DetOrder::row_major);

// Converse determinant: D_l from entries ([r delta + (i-r) kappa] / [i kappa]) H_r.
DiffOperator d_via_determinant(int l, const ModelParams& p,
                               DetOrder order = DetOrder::row_major);

// H_l as the signed sum over compositions (r_1,...,r_d) of l:
//   (-1)^{l-d} prod_i ([ (r_1+..+r_{i-1}) delta + r_i kappa ] / [ (r_1+..+r_i) delta ])
//   D_{r_1} o ... o D_{r_d}
DiffOperator h_via_compositions(int l, const ModelParams& p);

enum class CommutatorKind { dd, dh, hh };

// First operator minus reversed composition: [X_r, Y_s] with X, Y drawn from
// the D or H family according to `kind`.
DiffOperator commutator_op(CommutatorKind kind, int r, int s, const ModelParams& p);

OpComparison commutator_residual(CommutatorKind kind, int r, int s, const ModelParams& p,
                                 int num_samples, const Real& tol, Sampler& sampler);

}  // namespace ruijops
