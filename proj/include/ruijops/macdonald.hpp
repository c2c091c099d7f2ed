#pragma once

#include "ruijops/sympoly.hpp"

namespace ruijops {

// Exact rational deformation parameters of the multiplicative family.
struct QTPair {
    Rat q;
    Rat t;
};

// (a; q)_k over the rationals.
Rat qpoch_rat(const Rat& a, const Rat& q, int k);

// Validates q, t for degree-l symbolic work: both nonzero, and q^s != 1 for
// s = 1..max(l,1) so the shifted denominators stay invertible.
void validate_qt(const QTPair& qt, int l);

// Exact action of the order-r multiplicative operator
//   sum_{|I|=r} t^{binom(r,2)} prod_{i in I, j not in I} (t z_i - z_j)/(z_i - z_j) T_{q}^{eps_I}
// on a symmetric polynomial; the quotient by the Vandermonde denominator is
// exact by symmetry, anything else throws exactness_violation.
SymPoly apply_calD(int r, const SymPoly& f, const QTPair& qt);

// Exact action of the degree-l member of the commuting multiplicative family
//   sum_{|mu|=l} prod_{i<j} (q^{mu_i} z_i - q^{mu_j} z_j)/(z_i - z_j)
//       prod_{i,j} (t z_i/z_j; q)_{mu_i} / (q z_i/z_j; q)_{mu_i}  T_q^{mu}
// on a symmetric polynomial.
SymPoly apply_calH(int l, const SymPoly& f, const QTPair& qt);

// Spectral point xi_i = t^{n-i} q^{lam_i}.
std::vector<Rat> spectral_point(const Partition& lam, int n, const QTPair& qt);

Rat elementary_eval(int r, std::span<const Rat> xi);

// Degree-l one-row sum g_l(xi) = sum_{|nu|=l} prod_i ((t;q)_{nu_i}/(q;q)_{nu_i}) xi^nu.
Rat g_eval(int l, std::span<const Rat> xi, const QTPair& qt);

// (t;q)_l / (q;q)_l, the leading normalization of g_l.
Rat g_factor(int l, const QTPair& qt);

// Monic symmetric eigenfunction P_lambda = m_lambda + lower dominance terms,
// found by the triangular solve against the order-1 operator; colliding
// eigenvalues throw degenerate_spectrum.
SymPoly macdonald_poly(const Partition& lam, int n, const QTPair& qt);

// Exact eigenvalue checks: order-r operator has eigenvalue e_r(xi_lambda),
// degree-l family member has eigenvalue g_l(xi_lambda).
bool eigen_check_D(const Partition& lam, int r, int n, const QTPair& qt);
bool eigen_check_H(const Partition& lam, int l, int n, const QTPair& qt);

// g_l equals ((t;q)_l/(q;q)_l) P_(l) as symmetric polynomials.
bool g_matches_one_row(int l, int n, const QTPair& qt);

// sum_{r+s=l} (-1)^r (1 - t^r q^s) e_r(xi) g_s(xi) = 0 at a spectral point.
bool scalar_wronski_check(int lmax, int n, const QTPair& qt, const Partition& lam);

// Same alternating sum as exact operators applied to test polynomials.
bool operator_wronski_trig_check(int lmax, int n, const QTPair& qt);

// The generating-function eigenvalue: through order R in u, the degree-l
// family member acts on P_lambda by the u^l coefficient of
// prod_i (u t xi_i; q)_inf / (u xi_i; q)_inf.
bool genfun_check(const Partition& lam, int n, const QTPair& qt, int R);

}  // namespace ruijops
