#pragma once

#include <span>
#include <string>

#include "ruijops/errors.hpp"
#include "ruijops/mpcomplex.hpp"

namespace ruijops {

enum class Flavor { rational, trigonometric, elliptic };

std::string flavor_name(Flavor f);
Flavor parse_flavor(const std::string& name);

// A signed sum together with the magnitude of its largest contribution, so
// cancellation can be measured relative to the size of what cancelled.
struct Residual {
    Cplx value;
    Real scale;

    Real rel() const {
        Real a = abs(value);
        if (scale.is_zero()) return a;
        return a / scale;
    }
};

// Odd building block [z] of all operator coefficients.  The three flavors are
//   rational:        exp(c z^2) * z
//   trigonometric:   exp(c z^2) * sin(pi z / omega)
//   elliptic:        exp(c z^2) * (odd theta series in z / omega1, nome from
//                    omega2 / omega1)
// All brackets satisfy [-z] = -[z] and the three-term relation checked by
// hirota_residual.  Every identity this library verifies is homogeneous of
// matching bracket degree per term, so the representatives' overall
// normalization constants are immaterial and fixed as above.
class BracketFunction {
  public:
    static BracketFunction rational(const Cplx& gauss_c = Cplx(0), unsigned digits = 64);
    static BracketFunction trigonometric(const Cplx& omega, const Cplx& gauss_c = Cplx(0),
                                         unsigned digits = 64);
    static BracketFunction elliptic(const Cplx& omega1, const Cplx& omega2,
                                    const Cplx& gauss_c = Cplx(0), unsigned digits = 64);

    Flavor flavor() const { return flavor_; }
    unsigned digits() const { return digits_; }
    const Real& pole_guard() const { return guard_; }

    Cplx eval(const Cplx& z) const;
    Cplx operator()(const Cplx& z) const { return eval(z); }

    // Evaluates a denominator occurrence: values with |[z]| below the pole
    // guard throw pole_proximity instead of being returned.
    Cplx eval_denominator(const Cplx& z) const;

    // [num] / [den] with the guard applied to the denominator.
    Cplx ratio(const Cplx& num, const Cplx& den) const;

    // [z]_k = [z][z+delta]...[z+(k-1)delta]; k must be nonnegative.
    Cplx shifted_factorial(const Cplx& z, int k, const Cplx& delta) const;
    Cplx shifted_factorial_denominator(const Cplx& z, int k, const Cplx& delta) const;

    // prod_{i<j} [x_i - x_j]
    Cplx delta_product(std::span<const Cplx> x) const;

    // [z+a][z-a][b+g][b-g] + [z+b][z-b][g+a][g-a] + [z+g][z-g][a+b][a-b]
    Residual hirota_residual(const Cplx& z, const Cplx& a, const Cplx& b, const Cplx& g) const;

  private:
    BracketFunction() = default;

    Cplx theta_series(const Cplx& z) const;

    Flavor flavor_ = Flavor::rational;
    unsigned digits_ = 64;
    Cplx gauss_c_;
    bool has_gauss_ = false;
    Cplx omega1_;   // trigonometric period / first elliptic period
    Cplx inv_omega1_;
    Cplx p_;        // elliptic nome e(omega2 / omega1)
    Real abs_p_;
    Real eps_stop_; // theta truncation threshold 10^-(digits+10)
    Real guard_;
};

}  // namespace ruijops
