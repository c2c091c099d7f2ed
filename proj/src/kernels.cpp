#include "ruijops/kernels.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include "ruijops/errors.hpp"

namespace ruijops {

namespace {

Real kernel_guard() {
    using boost::multiprecision::pow;
    return pow(Real(10), -6);
}

Cplx guarded(const Cplx& v) {
    if (abs(v) < kernel_guard()) throw pole_proximity("kernel denominator below guard");
    return v;
}

Real order_scale(const Cplx& lhs, const Cplx& rhs) {
    Real s(1);
    Real a = abs(lhs);
    Real b = abs(rhs);
    if (a > s) s = a;
    if (b > s) s = b;
    return s;
}

SeriesResidual collect_orders(const std::vector<Cplx>& lhs, const std::vector<Cplx>& rhs,
                              const Cplx& u) {
    SeriesResidual res;
    res.max_rel = Real(0);
    Cplx upow(1);
    for (std::size_t N = 0; N < lhs.size(); ++N) {
        Cplx l = lhs[N] * upow;
        Cplx r = rhs[N] * upow;
        Real rel = abs(l - r) / order_scale(l, r);
        res.per_order.push_back(rel);
        if (rel > res.max_rel) res.max_rel = rel;
        upow *= u;
    }
    return res;
}

}  // namespace

Cplx dual_cauchy_psi(std::span<const Cplx> x, std::span<const Cplx> y,
                     const BracketFunction& bracket) {
    Cplx out(1);
    for (const auto& xi : x)
        for (const auto& yk : y) out *= bracket.eval(xi - yk);
    return out;
}

Residual hd_identity_residual(int r, std::span<const Cplx> x, std::span<const Cplx> y,
                              const Cplx& delta, const BracketFunction& bracket) {
    int m = static_cast<int>(x.size());
    int n = static_cast<int>(y.size());
    if (m < 1 || n < 1) throw invalid_parameters("kernel identity needs nonempty families");
    if (r < 0) throw invalid_parameters("kernel identity degree must be nonnegative");
    Cplx kappa = -(Cplx(n) * delta) / Cplx(m);
    ModelParams p{m, delta, kappa, bracket};
    Point xv(x.begin(), x.end());

    Cplx sum(0);
    Real scale(0);
    auto fold = [&](Cplx term) {
        Real a = abs(term);
        if (a > scale) scale = a;
        sum += term;
    };

    for (const auto& mu : enumerate_multiindices(m, r)) {
        Point xs = xv;
        for (int i = 0; i < m; ++i) xs[i] += Cplx(mu[i]) * delta;
        fold(coeff_H(mu, xv, p) * dual_cauchy_psi(xs, y, bracket));
    }
    for (const auto& K : enumerate_subsets(n, r)) {
        std::vector<char> in(n, 0);
        for (int k : K) in[k] = 1;
        Cplx c(1);
        for (int k : K)
            for (int l = 0; l < n; ++l) {
                if (in[l]) continue;
                c *= bracket.ratio(y[k] - y[l] + delta, y[k] - y[l]);
            }
        Point ys(y.begin(), y.end());
        for (int k : K) ys[k] += kappa;
        Cplx term = c * dual_cauchy_psi(x, ys, bracket);
        if (r % 2 != 0) term = -term;
        fold(-term);
    }
    return {sum, scale};
}

namespace {

// One side of the duality sum: variables v with couplings c, cross family u
// with couplings d.
Cplx duality_side(int r, std::span<const Cplx> v, std::span<const Cplx> cpl,
                  std::span<const Cplx> u, std::span<const Cplx> dpl, const Cplx& delta,
                  const BracketFunction& br, Real& scale) {
    int m = static_cast<int>(v.size());
    Cplx total(0);
    for (const auto& mu : enumerate_multiindices(m, r)) {
        Cplx term(1);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                term *= br.eval(v[i] - v[j] + Cplx(mu[i] - mu[j]) * delta) /
                        br.eval_denominator(v[i] - v[j]);
        for (int i = 0; i < m; ++i) {
            if (mu[i] == 0) continue;
            for (int j = 0; j < m; ++j) {
                term *= br.shifted_factorial(v[i] - v[j] + cpl[j], mu[i], delta);
                term /= br.shifted_factorial_denominator(v[i] - v[j] + delta, mu[i], delta);
            }
            for (std::size_t k = 0; k < u.size(); ++k) {
                term *= br.shifted_factorial(v[i] + u[k] - dpl[k], mu[i], delta);
                term /= br.shifted_factorial_denominator(v[i] + u[k], mu[i], delta);
            }
        }
        Real a = abs(term);
        if (a > scale) scale = a;
        total += term;
    }
    return total;
}

}  // namespace

Residual duality_sum_residual(int r, std::span<const Cplx> x, std::span<const Cplx> y,
                              const DualityParams& dp) {
    if (r < 0) throw invalid_parameters("duality sum degree must be nonnegative");
    if (x.empty() || y.empty()) throw invalid_parameters("duality sum needs nonempty families");
    if (dp.a.size() != x.size() || dp.b.size() != y.size())
        throw invalid_parameters("coupling lists must match variable counts");
    Cplx bal(0);
    for (const auto& c : dp.a) bal += c;
    for (const auto& c : dp.b) bal -= c;
    using boost::multiprecision::pow;
    if (abs(bal) > pow(Real(10), -static_cast<int>(dp.bracket.digits())))
        throw invalid_parameters("coupling sums must balance");

    Real scale(0);
    Cplx lhs = duality_side(r, x, dp.a, y, dp.b, dp.delta, dp.bracket, scale);
    Cplx rhs = duality_side(r, y, dp.b, x, dp.a, dp.delta, dp.bracket, scale);
    return {lhs - rhs, scale};
}

Cplx qpochhammer(const Cplx& a, const Cplx& q, int k) {
    if (k < 0) throw invalid_parameters("pochhammer length must be nonnegative");
    Cplx out(1);
    Cplx aq = a;
    for (int s = 0; s < k; ++s) {
        out *= Cplx(1) - aq;
        aq *= q;
    }
    return out;
}

Cplx qpochhammer_inf(const Cplx& a, const Cplx& q, unsigned digits) {
    if (!(abs(q) < 1)) throw invalid_parameters("infinite product needs |q| < 1");
    using boost::multiprecision::pow;
    Real eps = pow(Real(10), -static_cast<int>(digits) - 10);
    Cplx out(1);
    Cplx aq = a;
    Real bound = abs(a);
    Real absq = abs(q);
    constexpr int cap = 100000;
    for (int j = 0;; ++j) {
        if (bound < eps) break;
        if (j >= cap) throw precision_unreachable("infinite product needs too many factors");
        out *= Cplx(1) - aq;
        aq *= q;
        bound *= absq;
    }
    return out;
}

Cplx trig_cauchy_pi(std::span<const Cplx> z, std::span<const Cplx> w, const Cplx& q,
                    const Cplx& t, unsigned digits) {
    Cplx out(1);
    for (const auto& zi : z)
        for (const auto& wk : w) {
            Cplx zw = zi * wk;
            out *= qpochhammer_inf(t * zw, q, digits) / guarded(qpochhammer_inf(zw, q, digits));
        }
    return out;
}

Cplx mult_D_coeff(const std::vector<int>& subset, std::span<const Cplx> z, const Cplx& t) {
    int m = static_cast<int>(z.size());
    int r = static_cast<int>(subset.size());
    std::vector<char> in(m, 0);
    for (int i : subset) in[i] = 1;
    Cplx out = pow_int(t, static_cast<long>(r) * (r - 1) / 2);
    for (int i : subset)
        for (int j = 0; j < m; ++j) {
            if (in[j]) continue;
            out *= (t * z[i] - z[j]) / guarded(z[i] - z[j]);
        }
    return out;
}

Cplx mult_H_coeff(const MultiIndex& mu, std::span<const Cplx> z, const Cplx& q, const Cplx& t) {
    int m = static_cast<int>(z.size());
    if (static_cast<int>(mu.size()) != m)
        throw invalid_parameters("multi-index length does not match variable count");
    Cplx out(1);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            out *= (pow_int(q, mu[i]) * z[i] - pow_int(q, mu[j]) * z[j]) / guarded(z[i] - z[j]);
    for (int i = 0; i < m; ++i) {
        if (mu[i] == 0) continue;
        for (int j = 0; j < m; ++j) {
            Cplx ratio = z[i] / guarded(z[j]);
            out *= qpochhammer(t * ratio, q, mu[i]) / guarded(qpochhammer(q * ratio, q, mu[i]));
        }
    }
    return out;
}

std::vector<Cplx> euler_series(const Cplx& c, const Cplx& q, int order) {
    if (order < 0) throw invalid_parameters("series order must be nonnegative");
    std::vector<Cplx> out;
    out.reserve(order + 1);
    for (int k = 0; k <= order; ++k) {
        Cplx v = pow_int(-c, k) * pow_int(q, static_cast<long>(k) * (k - 1) / 2) /
                 guarded(qpochhammer(q, q, k));
        out.push_back(v);
    }
    return out;
}

std::vector<Cplx> qbinomial_series(const Cplx& a, const Cplx& q, int order) {
    if (order < 0) throw invalid_parameters("series order must be nonnegative");
    std::vector<Cplx> out;
    out.reserve(order + 1);
    for (int k = 0; k <= order; ++k)
        out.push_back(qpochhammer(a, q, k) / guarded(qpochhammer(q, q, k)));
    return out;
}

std::vector<Cplx> tpoch_series(const Cplx& t, int M, int order) {
    if (order < 0) throw invalid_parameters("series order must be nonnegative");
    std::vector<Cplx> out(order + 1, Cplx(0));
    out[0] = Cplx(1);
    if (M >= 0) {
        // multiply out prod_{i=0}^{M-1} (1 - t^i u)
        for (int i = 0; i < M; ++i) {
            Cplx ti = pow_int(t, i);
            for (int k = order; k >= 1; --k) out[k] -= ti * out[k - 1];
        }
        return out;
    }
    // (u;t)_{-k} = 1 / prod_{j=1}^{k} (1 - t^{-j} u): invert the polynomial
    int k = -M;
    std::vector<Cplx> poly(order + 1, Cplx(0));
    poly[0] = Cplx(1);
    for (int j = 1; j <= k; ++j) {
        Cplx tj = pow_int(guarded(t), -j);
        for (int s = order; s >= 1; --s) poly[s] -= tj * poly[s - 1];
    }
    for (int N = 1; N <= order; ++N) {
        Cplx acc(0);
        for (int j = 1; j <= N; ++j) acc += poly[j] * out[N - j];
        out[N] = -acc;
    }
    return out;
}

namespace {

// (order-r multiplicative operator acting on Pi) / Pi via the finite ratio
// Pi(q^{eps_I} z; w)/Pi(z; w) = prod_{i in I, k} (1 - z_i w_k)/(1 - t z_i w_k)
std::vector<Cplx> d_kernel_coeffs(std::span<const Cplx> z, std::span<const Cplx> w,
                                  const Cplx& q, const Cplx& t, int rmax) {
    (void)q;
    int m = static_cast<int>(z.size());
    std::vector<Cplx> out;
    for (int r = 0; r <= rmax; ++r) {
        if (r > m) {
            out.push_back(Cplx(0));
            continue;
        }
        Cplx s(0);
        for (const auto& I : enumerate_subsets(m, r)) {
            Cplx v = mult_D_coeff(I, z, t);
            for (int i : I)
                for (const auto& wk : w)
                    v *= (Cplx(1) - z[i] * wk) / guarded(Cplx(1) - t * z[i] * wk);
            s += v;
        }
        out.push_back(s);
    }
    return out;
}

// Pi(q^mu z; w)/Pi(z; w) = prod_{i,k} (z_i w_k; q)_{mu_i} / (t z_i w_k; q)_{mu_i}
std::vector<Cplx> h_kernel_coeffs(std::span<const Cplx> z, std::span<const Cplx> w,
                                  const Cplx& q, const Cplx& t, int lmax) {
    int m = static_cast<int>(z.size());
    std::vector<Cplx> out;
    for (int l = 0; l <= lmax; ++l) {
        Cplx s(0);
        for (const auto& mu : enumerate_multiindices(m, l)) {
            Cplx v = mult_H_coeff(mu, z, q, t);
            for (int i = 0; i < m; ++i) {
                if (mu[i] == 0) continue;
                for (const auto& wk : w)
                    v *= qpochhammer(z[i] * wk, q, mu[i]) /
                         guarded(qpochhammer(t * z[i] * wk, q, mu[i]));
            }
            s += v;
        }
        out.push_back(s);
    }
    return out;
}

// Psi(q^mu z; w)/Psi(z; w)
std::vector<Cplx> h_psi_coeffs(std::span<const Cplx> z, std::span<const Cplx> w, const Cplx& q,
                               const Cplx& t, int lmax) {
    int m = static_cast<int>(z.size());
    std::vector<Cplx> out;
    for (int l = 0; l <= lmax; ++l) {
        Cplx s(0);
        for (const auto& mu : enumerate_multiindices(m, l)) {
            Cplx v = mult_H_coeff(mu, z, q, t);
            for (int i = 0; i < m; ++i) {
                if (mu[i] == 0) continue;
                Cplx qi = pow_int(q, mu[i]);
                for (const auto& wk : w) v *= (qi * z[i] - wk) / guarded(z[i] - wk);
            }
            s += v;
        }
        out.push_back(s);
    }
    return out;
}

// q <-> t swapped operator acting on w against Psi, normalized by Psi
std::vector<Cplx> dhat_psi_coeffs(std::span<const Cplx> z, std::span<const Cplx> w,
                                  const Cplx& q, const Cplx& t, int rmax) {
    int n = static_cast<int>(w.size());
    std::vector<Cplx> out;
    for (int r = 0; r <= rmax; ++r) {
        if (r > n) {
            out.push_back(Cplx(0));
            continue;
        }
        Cplx s(0);
        for (const auto& K : enumerate_subsets(n, r)) {
            Cplx v = mult_D_coeff(K, w, q);  // swapped roles: coupling q
            for (int k : K)
                for (const auto& zi : z) v *= (zi - t * w[k]) / guarded(zi - w[k]);
            s += v;
        }
        out.push_back(s);
    }
    return out;
}

}  // namespace

SeriesResidual trig_kernel_residuals(TrigKernelKind kind, const Cplx& u,
                                     std::span<const Cplx> z, std::span<const Cplx> w,
                                     const Cplx& q, const Cplx& t, int series_order) {
    if (series_order < 0) throw invalid_parameters("series order must be nonnegative");
    if (z.empty() || w.empty()) throw invalid_parameters("kernel needs nonempty families");
    int m = static_cast<int>(z.size());
    int n = static_cast<int>(w.size());
    int R = series_order;
    std::vector<Cplx> lhs(R + 1, Cplx(0)), rhs(R + 1, Cplx(0));

    switch (kind) {
        case TrigKernelKind::dd: {
            auto dz = d_kernel_coeffs(z, w, q, t, R);
            auto dw = d_kernel_coeffs(w, z, q, t, R);
            auto pref = tpoch_series(t, m - n, R);
            Cplx tmn = pow_int(t, m - n);
            for (int N = 0; N <= R; ++N) {
                lhs[N] = (N % 2 == 0 ? dz[N] : -dz[N]);
                for (int j = 0; j <= N; ++j) {
                    int r = N - j;
                    Cplx v = pref[j] * pow_int(tmn, r) * dw[r];
                    rhs[N] += (r % 2 == 0 ? v : -v);
                }
            }
            SeriesResidual res = collect_orders(lhs, rhs, u);
            if (R >= m && m >= n) {
                // both sides are genuine degree-m polynomials in u here, so
                // the pointwise evaluation at u is also exact
                Cplx lf(0), rf(0), upow(1);
                for (int N = 0; N <= R; ++N) {
                    lf += lhs[N] * upow;
                    rf += rhs[N] * upow;
                    upow *= u;
                }
                Real rel = abs(lf - rf) / order_scale(lf, rf);
                res.per_order.push_back(rel);
                if (rel > res.max_rel) res.max_rel = rel;
            }
            return res;
        }
        case TrigKernelKind::hh: {
            auto hz = h_kernel_coeffs(z, w, q, t, R);
            auto hw = h_kernel_coeffs(w, z, q, t, R);
            Cplx a = pow_int(t, m - n);
            auto bin = qbinomial_series(a, q, R);
            for (int N = 0; N <= R; ++N) {
                lhs[N] = hz[N];
                for (int j = 0; j <= N; ++j) rhs[N] += bin[j] * pow_int(a, N - j) * hw[N - j];
            }
            return collect_orders(lhs, rhs, u);
        }
        case TrigKernelKind::hd: {
            auto hzp = h_psi_coeffs(z, w, q, t, R);
            auto dwp = dhat_psi_coeffs(z, w, q, t, R);
            auto e1 = euler_series(Cplx(1), q, R);
            auto e2 = euler_series(pow_int(t, m) * pow_int(q, n), q, R);
            for (int N = 0; N <= R; ++N) {
                for (int j = 0; j <= N; ++j) {
                    int s = N - j;
                    lhs[N] += e1[j] * hzp[s];
                    Cplx v = e2[j] * dwp[s];
                    rhs[N] += (s % 2 == 0 ? v : -v);
                }
            }
            return collect_orders(lhs, rhs, u);
        }
    }
    throw invalid_parameters("unknown kernel kind");
}

std::vector<Cplx> kajihara_side_coeffs(std::span<const Cplx> z, std::span<const Cplx> a,
                                       std::span<const Cplx> w, std::span<const Cplx> b,
                                       const Cplx& q, int order) {
    if (order < 0) throw invalid_parameters("series order must be nonnegative");
    if (z.size() != a.size() || w.size() != b.size())
        throw invalid_parameters("coupling lists must match variable counts");
    int m = static_cast<int>(z.size());
    Cplx alpha(1);
    for (const auto& av : a) alpha *= av;
    Cplx inv_alpha = inverse(guarded(alpha));

    std::vector<Cplx> pref;
    for (int k = 0; k <= order; ++k)
        pref.push_back(qpochhammer(inv_alpha, q, k) / guarded(qpochhammer(q, q, k)));

    std::vector<Cplx> sums;
    for (int s = 0; s <= order; ++s) {
        Cplx tot(0);
        for (const auto& mu : enumerate_multiindices(m, s)) {
            Cplx term(1);
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    term *= (pow_int(q, mu[i]) * z[i] - pow_int(q, mu[j]) * z[j]) /
                            guarded(z[i] - z[j]);
            for (int i = 0; i < m; ++i) {
                if (mu[i] == 0) continue;
                for (int j = 0; j < m; ++j) {
                    Cplx ratio = z[i] / guarded(z[j]);
                    term *= qpochhammer(a[j] * ratio, q, mu[i]) /
                            guarded(qpochhammer(q * ratio, q, mu[i]));
                }
                for (std::size_t l = 0; l < w.size(); ++l) {
                    Cplx cross = z[i] * w[l];
                    term *= qpochhammer(cross / guarded(b[l]), q, mu[i]) /
                            guarded(qpochhammer(cross, q, mu[i]));
                }
            }
            tot += term;
        }
        sums.push_back(tot);
    }

    std::vector<Cplx> out;
    for (int N = 0; N <= order; ++N) {
        Cplx v(0);
        for (int j = 0; j <= N; ++j) v += pref[j] * pow_int(inv_alpha, N - j) * sums[N - j];
        out.push_back(v);
    }
    return out;
}

SeriesResidual kajihara_residual(int order, std::span<const Cplx> z, std::span<const Cplx> w,
                                 std::span<const Cplx> a, std::span<const Cplx> b,
                                 const Cplx& q) {
    auto lhs = kajihara_side_coeffs(z, a, w, b, q, order);
    auto rhs = kajihara_side_coeffs(w, b, z, a, q, order);
    return collect_orders(lhs, rhs, Cplx(1));
}

SeriesResidual kajihara_preset_residual(KajiharaPreset preset, int order,
                                        std::span<const Cplx> z, std::span<const Cplx> w,
                                        const Cplx& q, const Cplx& t) {
    Cplx invq = inverse(guarded(q));
    Cplx az, bw;
    switch (preset) {
        case KajiharaPreset::dd: az = invq; bw = invq; break;
        case KajiharaPreset::hh: az = t; bw = t; break;
        case KajiharaPreset::hd: az = t; bw = invq; break;
    }
    std::vector<Cplx> a(z.size(), az), b(w.size(), bw);
    return kajihara_residual(order, z, w, a, b, q);
}

Real bridge_residual_D(int r, std::span<const Cplx> x, const Cplx& delta, const Cplx& kappa,
                       unsigned digits) {
    int n = static_cast<int>(x.size());
    if (r < 1 || r > n) throw invalid_parameters("bridge order out of range");
    auto br = BracketFunction::trigonometric(Cplx(1), Cplx(0), digits);
    ModelParams p{n, delta, kappa, br};
    Point xv(x.begin(), x.end());
    std::vector<Cplx> z;
    for (const auto& xi : x) z.push_back(e2pi(xi));
    Cplx t = e2pi(kappa);
    Cplx th = e2pi(kappa / Cplx(2));  // square root of t consistent with e()
    Cplx pref = pow_int(th, -static_cast<long>(r) * (n - 1));

    Real worst(0);
    for (const auto& I : enumerate_subsets(n, r)) {
        Cplx add = coeff_A(I, xv, p);
        Cplx mult = pref * mult_D_coeff(I, z, t);
        Real scale(1);
        Real a = abs(add);
        if (a > scale) scale = a;
        Real rel = abs(add - mult) / scale;
        if (rel > worst) worst = rel;
    }
    return worst;
}

Real bridge_residual_H(int l, std::span<const Cplx> x, const Cplx& delta, const Cplx& kappa,
                       unsigned digits) {
    int n = static_cast<int>(x.size());
    if (l < 1) throw invalid_parameters("bridge degree must be positive");
    auto br = BracketFunction::trigonometric(Cplx(1), Cplx(0), digits);
    ModelParams p{n, delta, kappa, br};
    Point xv(x.begin(), x.end());
    std::vector<Cplx> z;
    for (const auto& xi : x) z.push_back(e2pi(xi));
    Cplx q = e2pi(delta);
    Cplx t = e2pi(kappa);
    Cplx qh = e2pi(delta / Cplx(2));
    Cplx th = e2pi(kappa / Cplx(2));
    Cplx pref = pow_int(qh, l) * pow_int(th, -static_cast<long>(l) * n);

    Real worst(0);
    for (const auto& mu : enumerate_multiindices(n, l)) {
        Cplx add = coeff_H(mu, xv, p);
        Cplx mult = pref * mult_H_coeff(mu, z, q, t);
        Real scale(1);
        Real a = abs(add);
        if (a > scale) scale = a;
        Real rel = abs(add - mult) / scale;
        if (rel > worst) worst = rel;
    }
    return worst;
}

}  // namespace ruijops
