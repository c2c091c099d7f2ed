#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <utility>
#include <vector>

namespace ruijops {

// Arbitrary-precision real with runtime-selectable precision.  Expression
// templates are disabled so temporaries behave like values everywhere.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

// Exact rational, used by the symbolic (Macdonald) layer.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

// Sets the number of decimal digits carried by every subsequently created
// Real.  Never lowers the current setting, so independently constructed
// components can only raise the working precision.
inline void set_working_precision(unsigned decimal_digits) {
    if (decimal_digits > Real::default_precision()) {
        Real::default_precision(decimal_digits);
    }
}

inline unsigned working_precision() { return Real::default_precision(); }

// Raises the precision of an existing value to the working precision.  mpfr
// pads with zero bits, so the stored value is preserved exactly; this makes
// arithmetic results independent of when an operand was created.
inline void pad_to_working(Real& v) {
    unsigned wp = Real::default_precision();
    if (v.precision() < wp) v.precision(wp);
}

namespace detail {

// Raised before any namespace-scope constants in translation units that
// include this header, so values parsed at static-initialization time do not
// get stuck at the tiny library default.
struct PrecisionBoot {
    PrecisionBoot() { set_working_precision(94); }
};
inline PrecisionBoot precision_boot{};

}  // namespace detail

inline Real pi_value() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

// Complex number over Real.  Only the operations the library needs are
// provided; in particular there is no general pow/log.
struct Cplx {
    Real re;
    Real im;

    Cplx() : re(0), im(0) {}
    Cplx(int v) : re(v), im(0) {}
    Cplx(long v) : re(v), im(0) {}
    Cplx(double v) : re(v), im(0) {}
    Cplx(const Real& r) : re(r), im(0) {}
    Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    // Parses decimal strings at the current working precision.
    static Cplx parse(const std::string& real_part, const std::string& imag_part = "0") {
        return {Real(real_part), Real(imag_part)};
    }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    Cplx& pad() {
        pad_to_working(re);
        pad_to_working(im);
        return *this;
    }
    bool below_working() const {
        unsigned wp = Real::default_precision();
        return re.precision() < wp || im.precision() < wp;
    }

    Cplx operator-() const { return {-re, -im}; }

    Cplx& operator+=(const Cplx& o) {
        pad();
        re += o.re;
        im += o.im;
        return *this;
    }
    Cplx& operator-=(const Cplx& o) {
        pad();
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Cplx& operator*=(const Cplx& o) {
        pad();
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Cplx& operator/=(const Cplx& o) {
        if (o.below_working()) return *this /= Cplx(o).pad();
        pad();
        Real d = o.re * o.re + o.im * o.im;
        Real r = (re * o.re + im * o.im) / d;
        im = (im * o.re - re * o.im) / d;
        re = std::move(r);
        return *this;
    }

    friend Cplx operator+(Cplx a, const Cplx& b) { return a += b; }
    friend Cplx operator-(Cplx a, const Cplx& b) { return a -= b; }
    friend Cplx operator*(Cplx a, const Cplx& b) { return a *= b; }
    friend Cplx operator/(Cplx a, const Cplx& b) { return a /= b; }
    friend bool operator==(const Cplx& a, const Cplx& b) { return a.re == b.re && a.im == b.im; }
};

inline Cplx conj(const Cplx& z) { return {z.re, -z.im}; }

inline Real norm(const Cplx& z) {
    if (z.below_working()) return norm(Cplx(z).pad());
    return z.re * z.re + z.im * z.im;
}

inline Real abs(const Cplx& z) {
    using boost::multiprecision::sqrt;
    return sqrt(norm(z));
}

inline Cplx inverse(const Cplx& z) {
    if (z.below_working()) return inverse(Cplx(z).pad());
    Real d = norm(z);
    return {z.re / d, -z.im / d};
}

inline Cplx exp(const Cplx& z) {
    if (z.below_working()) return exp(Cplx(z).pad());
    using boost::multiprecision::cos;
    using boost::multiprecision::exp;
    using boost::multiprecision::sin;
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

inline Cplx sin(const Cplx& z) {
    if (z.below_working()) return sin(Cplx(z).pad());
    using boost::multiprecision::cos;
    using boost::multiprecision::cosh;
    using boost::multiprecision::sin;
    using boost::multiprecision::sinh;
    return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

// exp(2*pi*i*u); the workhorse phase map of all multiplicative-variable code.
inline Cplx e2pi(const Cplx& u) {
    Real two_pi = 2 * pi_value();
    using boost::multiprecision::cos;
    using boost::multiprecision::exp;
    using boost::multiprecision::sin;
    Real m = exp(-two_pi * u.im);
    Real a = two_pi * u.re;
    return {m * cos(a), m * sin(a)};
}

// z^k for integer k by binary powering; k may be negative.
inline Cplx pow_int(const Cplx& z, long k) {
    if (k < 0) return pow_int(inverse(z), -k);
    Cplx acc(1);
    Cplx base = z;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

inline Cplx rat_to_cplx(const Rat& r) {
    return Cplx(Real(boost::multiprecision::numerator(r)) /
                Real(boost::multiprecision::denominator(r)));
}

// Short scientific decimal rendering for reports.
inline std::string to_decimal_string(const Real& x, unsigned digits = 6) {
    return x.str(digits, std::ios_base::scientific);
}

std::string to_string(const Cplx& z, unsigned digits = 6);

using Point = std::vector<Cplx>;

inline Point operator+(Point x, const Point& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return x;
}

}  // namespace ruijops
