#pragma once

// Independent reference implementations used only by tests.  Each one is a
// deliberately different computation of a library result, so agreement is
// meaningful evidence rather than a tautology.

#include "ruijops/kernels.hpp"
#include "ruijops/ruijsenaars.hpp"

namespace ruijops::oracles {

// Elliptic bracket via the triple-product representation instead of the
// alternating series: with v = z/omega1, p = e(omega2/omega1),
//   [z] = e^{c z^2} (e(v/2) - e(-v/2)) prod_{k>=1} (1-p^k)(1-p^k e(v))(1-p^k e(-v)).
inline Cplx elliptic_product_form(const Cplx& z, const Cplx& omega1, const Cplx& omega2,
                                  const Cplx& gauss_c, unsigned digits) {
    using boost::multiprecision::exp;
    using boost::multiprecision::pow;
    Cplx v = z / omega1;
    Cplx p = e2pi(omega2 / omega1);
    Cplx ev = e2pi(v);
    Cplx ev_inv = inverse(ev);
    Cplx out = e2pi(v / Cplx(2)) - e2pi(-v / Cplx(2));
    Real eps = pow(Real(10), -static_cast<int>(digits) - 10);
    Real grow = abs(ev);
    if (abs(ev_inv) > grow) grow = abs(ev_inv);
    if (grow < 1) grow = 1;
    Cplx pk(1);
    Real bound = abs(p) * grow;
    Real shrink = abs(p);
    for (int k = 1; k < 100000 && bound > eps; ++k) {
        pk *= p;
        out *= (Cplx(1) - pk) * (Cplx(1) - pk * ev) * (Cplx(1) - pk * ev_inv);
        bound *= shrink;
    }
    if (!gauss_c.is_zero()) out *= ruijops::exp(gauss_c * z * z);
    return out;
}

// The extending-family coefficient written with the roles of the two product
// indices exchanged (exponents attached to the second index).
inline Cplx coeff_H_relabelled(const MultiIndex& mu, const Point& x, const ModelParams& p) {
    const auto& br = p.bracket;
    Cplx prod(1);
    for (int i = 0; i < p.n; ++i)
        for (int j = i + 1; j < p.n; ++j)
            prod *= br.eval(x[i] - x[j] + Cplx(mu[i] - mu[j]) * p.delta) /
                    br.eval_denominator(x[i] - x[j]);
    for (int j = 0; j < p.n; ++j) {
        if (mu[j] == 0) continue;
        for (int i = 0; i < p.n; ++i) {
            prod *= br.shifted_factorial(x[j] - x[i] + p.kappa, mu[j], p.delta);
            prod /= br.shifted_factorial_denominator(x[j] - x[i] + p.delta, mu[j], p.delta);
        }
    }
    return prod;
}

// log of the Cauchy-type kernel through the power-sum expansion:
//   log Pi = sum_{r>=1} (1 - t^r) / (r (1 - q^r)) p_r(z) p_r(w)
// valid for |z_i w_k| < 1; truncated at `terms`.
inline Cplx cauchy_kernel_log_series(std::span<const Cplx> z, std::span<const Cplx> w,
                                     const Cplx& q, const Cplx& t, int terms) {
    Cplx out(0);
    for (int r = 1; r <= terms; ++r) {
        Cplx pz(0), pw(0);
        for (const auto& zi : z) pz += pow_int(zi, r);
        for (const auto& wk : w) pw += pow_int(wk, r);
        out += (Cplx(1) - pow_int(t, r)) / (Cplx(r) * (Cplx(1) - pow_int(q, r))) * pz * pw;
    }
    return out;
}

}  // namespace ruijops::oracles
