#pragma once

#include <vector>

#include "ruijops/ruijsenaars.hpp"

namespace ruijops {

// prod_{i,k} [x_i - y_k]
Cplx dual_cauchy_psi(std::span<const Cplx> x, std::span<const Cplx> y,
                     const BracketFunction& bracket);

// Kernel identity of the commuting family against the dual Cauchy product at
// the balanced coupling kappa = -|y| delta / |x|:
//   sum_{|mu|=r} H_mu(x) Psi(x + mu delta, y)
//     = (-1)^r sum_{|K|=r} prod_{k in K, l not in K} ([y_k-y_l+delta]/[y_k-y_l])
//         Psi(x, y + eps_K kappa)
// Returns lhs - rhs with the largest contributing term as scale.
Residual hd_identity_residual(int r, std::span<const Cplx> x, std::span<const Cplx> y,
                              const Cplx& delta, const BracketFunction& bracket);

// Parameters of the two-sided duality sum: shift step, per-variable couplings
// a (paired with x) and b (paired with y) subject to sum(a) == sum(b).
struct DualityParams {
    Cplx delta;
    std::vector<Cplx> a;
    std::vector<Cplx> b;
    BracketFunction bracket;
};

// Symmetric degree-r sum evaluated on both variable families:
//   sum_{|mu|=r} (Delta(x+mu delta)/Delta(x))
//       prod_{i,j} [x_i-x_j+a_j]_{mu_i} / [x_i-x_j+delta]_{mu_i}
//       prod_{i,k} [x_i+y_k-b_k]_{mu_i} / [x_i+y_k]_{mu_i}
// minus the same expression with (x,a) and (y,b) exchanged.
Residual duality_sum_residual(int r, std::span<const Cplx> x, std::span<const Cplx> y,
                              const DualityParams& dp);

// (a; q)_k = prod_{s<k} (1 - a q^s)
Cplx qpochhammer(const Cplx& a, const Cplx& q, int k);

// (a; q)_infinity, truncated once |a q^j| < 10^-(digits+10); requires |q| < 1.
Cplx qpochhammer_inf(const Cplx& a, const Cplx& q, unsigned digits);

// Cauchy-type kernel prod_{i,k} (t z_i w_k; q)_inf / (z_i w_k; q)_inf.
Cplx trig_cauchy_pi(std::span<const Cplx> z, std::span<const Cplx> w, const Cplx& q,
                    const Cplx& t, unsigned digits);

// Coefficient of the multiplicative-shift term T_{q,z}^{eps_I} in the
// order-|I| multiplicative operator:
//   t^{binom(|I|,2)} prod_{i in I, j not in I} (t z_i - z_j)/(z_i - z_j)
Cplx mult_D_coeff(const std::vector<int>& subset, std::span<const Cplx> z, const Cplx& t);

// Coefficient of T_{q,z}^{mu} in the degree-|mu| multiplicative family:
//   prod_{i<j} (q^{mu_i} z_i - q^{mu_j} z_j)/(z_i - z_j)
//   * prod_{i,j} (t z_i/z_j; q)_{mu_i} / (q z_i/z_j; q)_{mu_i}
Cplx mult_H_coeff(const MultiIndex& mu, std::span<const Cplx> z, const Cplx& q, const Cplx& t);

// u-series coefficients of (c u; q)_inf.
std::vector<Cplx> euler_series(const Cplx& c, const Cplx& q, int order);

// u-series coefficients of (a u; q)_inf / (u; q)_inf.
std::vector<Cplx> qbinomial_series(const Cplx& a, const Cplx& q, int order);

// u-series coefficients of (u; t)_M for any integer M (a polynomial when
// M >= 0, the reciprocal series when M < 0).
std::vector<Cplx> tpoch_series(const Cplx& t, int M, int order);

enum class TrigKernelKind { dd, hh, hd };

struct SeriesResidual {
    std::vector<Real> per_order;  // relative residual of each u-order
    Real max_rel;

    bool pass(const Real& tol) const { return max_rel <= tol; }
};

// Generating-function kernel identities of the multiplicative families,
// compared order by order in u after normalizing both sides by the kernel:
//   dd:  D^z(u) Pi  = (u; t)_{m-n} D^w(t^{m-n} u) Pi
//   hh:  H^z(u) Pi  = ((t^{m-n} u; q)_inf / (u; q)_inf) H^w(t^{m-n} u) Pi
//   hd:  (u; q)_inf H^z(u) Psi = (t^m q^n u; q)_inf Dhat^w(u) Psi
// where m = |z|, n = |w|, D(u) = sum (-u)^r D_r, H(u) = sum u^l H_l, Dhat is
// the q <-> t swap of D acting on w, and Psi = prod (z_i - w_k).  Orders are
// weighted by powers of u; for dd the full polynomial evaluation at u is
// folded into the result as well.
SeriesResidual trig_kernel_residuals(TrigKernelKind kind, const Cplx& u,
                                     std::span<const Cplx> z, std::span<const Cplx> w,
                                     const Cplx& q, const Cplx& t, int series_order);

// One side of the hypergeometric duality transformation, as u-series
// coefficients through the requested order: with alpha = prod a_j,
//   coeff_N = sum_{j+s=N} ((1/alpha; q)_j / (q; q)_j) alpha^{-s} S_s(z, a, w, b)
// where S_s sums the degree-s multiplicative family coefficients with
// per-variable couplings a and cross factors against (w, b).
std::vector<Cplx> kajihara_side_coeffs(std::span<const Cplx> z, std::span<const Cplx> a,
                                       std::span<const Cplx> w, std::span<const Cplx> b,
                                       const Cplx& q, int order);

// Relative residuals of side(z,a,w,b) minus side(w,b,z,a) per u-order.
SeriesResidual kajihara_residual(int order, std::span<const Cplx> z, std::span<const Cplx> w,
                                 std::span<const Cplx> a, std::span<const Cplx> b,
                                 const Cplx& q);

enum class KajiharaPreset { dd, hh, hd };

// Parameter specializations recovering the three kernel identities:
// dd: a_j = b_l = 1/q;  hh: a_j = b_l = t;  hd: a_j = t, b_l = 1/q.
SeriesResidual kajihara_preset_residual(KajiharaPreset preset, int order,
                                        std::span<const Cplx> z, std::span<const Cplx> w,
                                        const Cplx& q, const Cplx& t);

// Normalization bridge between the additive trigonometric coefficients (unit
// period, no gaussian factor) and the multiplicative ones under
// z_i = e(x_i), q = e(delta), t = e(kappa):
//   A_I(x)  = t^{-r(n-1)/2} (multiplicative order-r coefficient at I)
//   H_mu(x) = q^{l/2} t^{-l n/2} (multiplicative degree-l coefficient at mu)
// Returns the worst relative deviation over all subsets / multi-indices.
Real bridge_residual_D(int r, std::span<const Cplx> x, const Cplx& delta, const Cplx& kappa,
                       unsigned digits = 64);
Real bridge_residual_H(int l, std::span<const Cplx> x, const Cplx& delta, const Cplx& kappa,
                       unsigned digits = 64);

}  // namespace ruijops
