#include "ruijops/bracket.hpp"

#include <boost/multiprecision/mpfr.hpp>

namespace ruijops {

std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::rational: return "rational";
        case Flavor::trigonometric: return "trig";
        case Flavor::elliptic: return "elliptic";
    }
    return "?";
}

Flavor parse_flavor(const std::string& name) {
    if (name == "rational") return Flavor::rational;
    if (name == "trig" || name == "trigonometric") return Flavor::trigonometric;
    if (name == "elliptic") return Flavor::elliptic;
    throw invalid_parameters("unknown flavor: " + name);
}

namespace {

Real ten_pow(int e) {
    using boost::multiprecision::pow;
    return pow(Real(10), e);
}

}  // namespace

BracketFunction BracketFunction::rational(const Cplx& gauss_c, unsigned digits) {
    if (digits < 16) throw invalid_parameters("bracket precision below 16 digits");
    set_working_precision(digits + 15);
    BracketFunction b;
    b.flavor_ = Flavor::rational;
    b.digits_ = digits;
    b.gauss_c_ = gauss_c;
    b.has_gauss_ = !gauss_c.is_zero();
    b.guard_ = ten_pow(-6);
    return b;
}

BracketFunction BracketFunction::trigonometric(const Cplx& omega, const Cplx& gauss_c,
                                               unsigned digits) {
    if (digits < 16) throw invalid_parameters("bracket precision below 16 digits");
    if (omega.is_zero()) throw invalid_parameters("trigonometric period must be nonzero");
    set_working_precision(digits + 15);
    BracketFunction b;
    b.flavor_ = Flavor::trigonometric;
    b.digits_ = digits;
    b.gauss_c_ = gauss_c;
    b.has_gauss_ = !gauss_c.is_zero();
    b.omega1_ = omega;
    b.inv_omega1_ = inverse(omega);
    b.guard_ = ten_pow(-6);
    return b;
}

BracketFunction BracketFunction::elliptic(const Cplx& omega1, const Cplx& omega2,
                                          const Cplx& gauss_c, unsigned digits) {
    if (digits < 16) throw invalid_parameters("bracket precision below 16 digits");
    if (omega1.is_zero()) throw invalid_parameters("first period must be nonzero");
    set_working_precision(digits + 15);
    BracketFunction b;
    b.flavor_ = Flavor::elliptic;
    b.digits_ = digits;
    b.gauss_c_ = gauss_c;
    b.has_gauss_ = !gauss_c.is_zero();
    b.omega1_ = omega1;
    b.inv_omega1_ = inverse(omega1);
    Cplx tau = omega2 / omega1;
    if (!(tau.im > 0)) throw invalid_parameters("period ratio must have positive imaginary part");
    b.p_ = e2pi(tau);
    b.abs_p_ = abs(b.p_);
    if (!(b.abs_p_ < 1)) throw invalid_parameters("elliptic nome must satisfy |p| < 1");
    b.eps_stop_ = ten_pow(-static_cast<int>(digits) - 10);
    b.guard_ = ten_pow(-6);
    return b;
}

// Odd theta sum over k >= 0 of (-1)^k p^{k(k+1)/2} (e((k+1/2)v) - e(-(k+1/2)v))
// with v = z / omega1.  Terms are added until the magnitude bound
// |p|^{k(k+1)/2} exp(2 pi (k+1/2) |Im v|) drops below 10^-(digits+10).
Cplx BracketFunction::theta_series(const Cplx& z) const {
    using boost::multiprecision::abs;
    using boost::multiprecision::exp;

    Cplx v = z * inv_omega1_;
    Real two_pi = 2 * pi_value();
    Real em = exp(two_pi * abs(v.im));         // growth factor per unit k
    Real em_half = exp(pi_value() * abs(v.im));

    Cplx a = e2pi(Cplx(v.re / 2, v.im / 2));   // e(v/2)
    Cplx b = a * a;                            // e(v)
    Cplx binv = inverse(b);

    Cplx phase = a;                            // e((k+1/2) v)
    Cplx phase_inv = inverse(a);
    Cplx nome_pow(1);                          // p^{k(k+1)/2}
    Cplx nome_step(1);                         // p^k
    Real bound_nome(1);                        // |p|^{k(k+1)/2}
    Real bound_step(1);                        // |p|^k
    Real bound_phase = em_half;                // em^{k+1/2}

    Cplx sum(0);
    int sign = 1;
    constexpr int k_cap = 10000;
    for (int k = 0;; ++k) {
        if (bound_nome * bound_phase < eps_stop_) break;
        if (k >= k_cap)
            throw precision_unreachable("theta series needs more than 10000 terms");
        Cplx term = nome_pow * (phase - phase_inv);
        if (sign > 0)
            sum += term;
        else
            sum -= term;
        sign = -sign;
        nome_step *= p_;
        nome_pow *= nome_step;
        bound_step *= abs_p_;
        bound_nome *= bound_step;
        phase *= b;
        phase_inv *= binv;
        bound_phase *= em;
    }
    return sum;
}

Cplx BracketFunction::eval(const Cplx& z) const {
    Cplx core;
    switch (flavor_) {
        case Flavor::rational:
            core = z;
            break;
        case Flavor::trigonometric:
            core = sin(pi_value() * (z * inv_omega1_));
            break;
        case Flavor::elliptic:
            core = theta_series(z);
            break;
    }
    if (has_gauss_) core *= exp(gauss_c_ * z * z);
    return core;
}

Cplx BracketFunction::eval_denominator(const Cplx& z) const {
    Cplx v = eval(z);
    if (abs(v) < guard_) throw pole_proximity("denominator bracket below pole guard");
    return v;
}

Cplx BracketFunction::ratio(const Cplx& num, const Cplx& den) const {
    return eval(num) / eval_denominator(den);
}

Cplx BracketFunction::shifted_factorial(const Cplx& z, int k, const Cplx& delta) const {
    if (k < 0) throw invalid_parameters("shifted factorial length must be nonnegative");
    Cplx prod(1);
    Cplx arg = z;
    for (int j = 0; j < k; ++j) {
        prod *= eval(arg);
        arg += delta;
    }
    return prod;
}

Cplx BracketFunction::shifted_factorial_denominator(const Cplx& z, int k,
                                                    const Cplx& delta) const {
    if (k < 0) throw invalid_parameters("shifted factorial length must be nonnegative");
    Cplx prod(1);
    Cplx arg = z;
    for (int j = 0; j < k; ++j) {
        prod *= eval_denominator(arg);
        arg += delta;
    }
    return prod;
}

Cplx BracketFunction::delta_product(std::span<const Cplx> x) const {
    Cplx prod(1);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) prod *= eval(x[i] - x[j]);
    return prod;
}

Residual BracketFunction::hirota_residual(const Cplx& z, const Cplx& a, const Cplx& b,
                                          const Cplx& g) const {
    auto pm = [this](const Cplx& u, const Cplx& w) { return eval(u + w) * eval(u - w); };
    Cplx t1 = pm(z, a) * pm(b, g);
    Cplx t2 = pm(z, b) * pm(g, a);
    Cplx t3 = pm(z, g) * pm(a, b);
    Real scale = abs(t1);
    Real s2 = abs(t2);
    Real s3 = abs(t3);
    if (s2 > scale) scale = s2;
    if (s3 > scale) scale = s3;
    return {t1 + t2 + t3, scale};
}

std::string to_string(const Cplx& z, unsigned digits) {
    std::string s = to_decimal_string(z.re, digits);
    if (!z.im.is_zero()) {
        s += (z.im < 0 ? " - " : " + ") +
             to_decimal_string(boost::multiprecision::abs(z.im), digits) + "i";
    }
    return s;
}

}  // namespace ruijops
