#include "ruijops/diffop.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include "ruijops/errors.hpp"

namespace ruijops {

Cplx Coefficient::eval(const Point& x) const {
    Cplx sum(0);
    for (const auto& f : parts_) sum += f(x);
    return sum;
}

std::pair<Cplx, Real> Coefficient::eval_scaled(const Point& x) const {
    Cplx sum(0);
    Real scale(0);
    for (const auto& f : parts_) {
        Cplx v = f(x);
        Real a = abs(v);
        if (a > scale) scale = a;
        sum += v;
    }
    return {sum, scale};
}

DiffOperator::DiffOperator(int n, Cplx step) : n_(n), step_(std::move(step)) {
    if (n < 1) throw invalid_parameters("operator needs at least one variable");
}

DiffOperator DiffOperator::identity(int n, const Cplx& step) {
    DiffOperator op(n, step);
    op.add_term(MultiIndex(n, 0), [](const Point&) { return Cplx(1); });
    return op;
}

DiffOperator DiffOperator::zero(int n, const Cplx& step) { return DiffOperator(n, step); }

void DiffOperator::add_term(const MultiIndex& mu, CoeffFn f) {
    if (static_cast<int>(mu.size()) != n_)
        throw invalid_parameters("multi-index length does not match variable count");
    terms_[mu].add(std::move(f));
}

std::vector<MultiIndex> DiffOperator::support() const {
    std::vector<MultiIndex> s;
    s.reserve(terms_.size());
    for (const auto& [mu, c] : terms_) s.push_back(mu);
    return s;
}

std::vector<int> DiffOperator::degrees() const {
    std::vector<int> d;
    for (const auto& [mu, c] : terms_) {
        int t = mi_total(mu);
        bool seen = false;
        for (int v : d) seen = seen || (v == t);
        if (!seen) d.push_back(t);
    }
    return d;
}

Point DiffOperator::shifted(const Point& x, const MultiIndex& mu) const {
    Point y = x;
    for (int i = 0; i < n_; ++i)
        if (mu[i] != 0) y[i] += Cplx(mu[i]) * step_;
    return y;
}

Cplx DiffOperator::apply(const ScalarFn& f, const Point& x) const {
    if (static_cast<int>(x.size()) != n_)
        throw invalid_parameters("point dimension does not match operator");
    Cplx sum(0);
    for (const auto& [mu, coef] : terms_) sum += coef.eval(x) * f(shifted(x, mu));
    return sum;
}

DiffOperator op_compose(const DiffOperator& a, const DiffOperator& b) {
    if (a.n() != b.n() || !(a.step() == b.step()))
        throw invalid_parameters("composed operators must share variables and shift step");
    DiffOperator out(a.n(), a.step());
    Cplx step = a.step();
    for (const auto& [mu, ca] : a.terms()) {
        for (const auto& [nu, cb] : b.terms()) {
            MultiIndex lam = mi_sum(mu, nu);
            // one closure per term pair: a_mu(x) * b_nu(x + mu*step)
            out.add_term(lam, [step, mu, ca, cb](const Point& x) {
                Point y = x;
                for (std::size_t i = 0; i < y.size(); ++i)
                    if (mu[i] != 0) y[i] += Cplx(mu[i]) * step;
                return ca.eval(x) * cb.eval(y);
            });
        }
    }
    return out;
}

DiffOperator op_scale(const Cplx& c, const DiffOperator& a) {
    DiffOperator out(a.n(), a.step());
    for (const auto& [mu, coef] : a.terms()) {
        out.add_term(mu, [c, coef](const Point& x) { return c * coef.eval(x); });
    }
    return out;
}

DiffOperator op_linear(std::span<const Cplx> coeffs, std::span<const DiffOperator> ops) {
    if (coeffs.size() != ops.size() || ops.empty())
        throw invalid_parameters("linear combination needs matching, nonempty lists");
    for (const auto& op : ops) {
        if (op.n() != ops[0].n() || !(op.step() == ops[0].step()))
            throw invalid_parameters("combined operators must share variables and shift step");
    }
    DiffOperator out(ops[0].n(), ops[0].step());
    for (std::size_t k = 0; k < ops.size(); ++k) {
        Cplx c = coeffs[k];
        for (const auto& [mu, coef] : ops[k].terms()) {
            out.add_term(mu, [c, coef](const Point& x) { return c * coef.eval(x); });
        }
    }
    return out;
}

namespace {

OpComparison compare_impl(const DiffOperator& a, const DiffOperator* b, int num_samples,
                          const Real& tol, Sampler& sampler) {
    if (b != nullptr && (a.n() != b->n() || !(a.step() == b->step())))
        throw invalid_parameters("compared operators must share variables and shift step");
    std::map<MultiIndex, int> grid;
    for (const auto& [mu, c] : a.terms()) grid[mu] = 1;
    if (b != nullptr)
        for (const auto& [mu, c] : b->terms()) grid[mu] = 1;

    OpComparison cmp;
    cmp.max_rel_dev = Real(0);
    cmp.worst_term = MultiIndex(a.n(), 0);
    static const Coefficient empty_coef;
    for (const auto& [mu, unused] : grid) {
        const Coefficient* ca = &empty_coef;
        const Coefficient* cb = &empty_coef;
        if (auto it = a.terms().find(mu); it != a.terms().end()) ca = &it->second;
        if (b != nullptr)
            if (auto it = b->terms().find(mu); it != b->terms().end()) cb = &it->second;
        for (int s = 0; s < num_samples; ++s) {
            Real dev = sampler.admissible([&] {
                Point x = sampler.box_point(a.n());
                auto [va, sa] = ca->eval_scaled(x);
                auto [vb, sb] = cb->eval_scaled(x);
                Real scale(1);
                if (sa > scale) scale = sa;
                if (sb > scale) scale = sb;
                return abs(va - vb) / scale;
            });
            if (dev > cmp.max_rel_dev) {
                cmp.max_rel_dev = dev;
                cmp.worst_term = mu;
            }
            ++cmp.samples;
        }
    }
    cmp.pass = cmp.max_rel_dev <= tol;
    return cmp;
}

}  // namespace

OpComparison op_equal_at(const DiffOperator& a, const DiffOperator& b, int num_samples,
                         const Real& tol, Sampler& sampler) {
    return compare_impl(a, &b, num_samples, tol, sampler);
}

OpComparison op_zero_at(const DiffOperator& a, int num_samples, const Real& tol,
                        Sampler& sampler) {
    return compare_impl(a, nullptr, num_samples, tol, sampler);
}

Real default_op_tol(unsigned digits) {
    using boost::multiprecision::pow;
    int e = static_cast<int>(digits) - 25;
    if (e < 10) e = 10;
    return pow(Real(10), -e);
}

}  // namespace ruijops
