#pragma once

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "ruijops/bracket.hpp"
#include "ruijops/multiindex.hpp"
#include "ruijops/sampling.hpp"

namespace ruijops {

using CoeffFn = std::function<Cplx(const Point&)>;
using ScalarFn = std::function<Cplx(const Point&)>;

// A finite sum of evaluation closures.  The summands are kept separate so
// that comparisons can measure cancellation against the largest contribution.
class Coefficient {
  public:
    void add(CoeffFn f) { parts_.push_back(std::move(f)); }

    Cplx eval(const Point& x) const;

    // (sum, magnitude of the largest summand)
    std::pair<Cplx, Real> eval_scaled(const Point& x) const;

    std::size_t parts() const { return parts_.size(); }

  private:
    std::vector<CoeffFn> parts_;
};

// Analytic difference operator sum_mu c_mu(x) T^{mu * step}, where T^{mu*step}
// shifts x_i by mu_i * step.  Coefficients are closures, so operators stay
// exact compositions of their building blocks rather than sampled tables.
class DiffOperator {
  public:
    DiffOperator(int n, Cplx step);

    static DiffOperator identity(int n, const Cplx& step);
    static DiffOperator zero(int n, const Cplx& step);

    int n() const { return n_; }
    const Cplx& step() const { return step_; }

    void add_term(const MultiIndex& mu, CoeffFn f);

    const std::map<MultiIndex, Coefficient>& terms() const { return terms_; }
    std::size_t support_size() const { return terms_.size(); }
    std::vector<MultiIndex> support() const;

    // Totals |mu| occurring in the support.
    std::vector<int> degrees() const;

    Point shifted(const Point& x, const MultiIndex& mu) const;

    Cplx apply(const ScalarFn& f, const Point& x) const;

  private:
    int n_;
    Cplx step_;
    std::map<MultiIndex, Coefficient> terms_;
};

DiffOperator op_compose(const DiffOperator& a, const DiffOperator& b);
DiffOperator op_scale(const Cplx& c, const DiffOperator& a);
DiffOperator op_linear(std::span<const Cplx> coeffs, std::span<const DiffOperator> ops);

struct OpComparison {
    Real max_rel_dev;
    MultiIndex worst_term;
    int samples = 0;
    bool pass = false;
};

// Compares coefficients of two operators at sampled admissible points.  For
// each multi-index in the union of supports, both coefficients are evaluated
// at num_samples fresh points; the deviation is |a - b| relative to the
// largest individual summand on either side (floored at 1).
OpComparison op_equal_at(const DiffOperator& a, const DiffOperator& b, int num_samples,
                         const Real& tol, Sampler& sampler);

// Specialization of op_equal_at against the zero operator.
OpComparison op_zero_at(const DiffOperator& a, int num_samples, const Real& tol,
                        Sampler& sampler);

// Default comparison tolerance for a given bracket precision.
Real default_op_tol(unsigned digits);

}  // namespace ruijops
