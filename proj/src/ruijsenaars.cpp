#include "ruijops/ruijsenaars.hpp"

#include <algorithm>
#include <numeric>

#include "ruijops/errors.hpp"

namespace ruijops {

namespace {

void check_params(const ModelParams& p) {
    if (p.n < 1) throw invalid_parameters("need at least one variable");
}

}  // namespace

Cplx coeff_A(const std::vector<int>& subset, const Point& x, const ModelParams& p) {
    const auto& br = p.bracket;
    std::vector<char> in(p.n, 0);
    for (int i : subset) in[i] = 1;
    Cplx prod(1);
    for (int i : subset) {
        for (int j = 0; j < p.n; ++j) {
            if (in[j]) continue;
            Cplx d = x[i] - x[j];
            prod *= br.eval(d + p.kappa) / br.eval_denominator(d);
        }
    }
    return prod;
}

Cplx coeff_H(const MultiIndex& mu, const Point& x, const ModelParams& p) {
    const auto& br = p.bracket;
    Cplx prod(1);
    for (int i = 0; i < p.n; ++i) {
        for (int j = i + 1; j < p.n; ++j) {
            Cplx d = x[i] - x[j];
            prod *= br.eval(d + Cplx(mu[i] - mu[j]) * p.delta) / br.eval_denominator(d);
        }
    }
    for (int i = 0; i < p.n; ++i) {
        if (mu[i] == 0) continue;
        for (int j = 0; j < p.n; ++j) {
            Cplx d = x[i] - x[j];
            prod *= br.shifted_factorial(d + p.kappa, mu[i], p.delta);
            prod /= br.shifted_factorial_denominator(d + p.delta, mu[i], p.delta);
        }
    }
    return prod;
}

DiffOperator build_D(int r, const ModelParams& p) {
    check_params(p);
    if (r < 0) throw invalid_parameters("operator order must be nonnegative");
    if (r == 0) return DiffOperator::identity(p.n, p.delta);
    DiffOperator op(p.n, p.delta);
    if (r > p.n) return op;
    for (const auto& subset : enumerate_subsets(p.n, r)) {
        op.add_term(mi_from_subset(p.n, subset),
                    [subset, p](const Point& x) { return coeff_A(subset, x, p); });
    }
    return op;
}

DiffOperator build_H(int l, const ModelParams& p) {
    check_params(p);
    if (l < 0) throw invalid_parameters("operator degree must be nonnegative");
    if (l == 0) return DiffOperator::identity(p.n, p.delta);
    DiffOperator op(p.n, p.delta);
    for (const auto& mu : enumerate_multiindices(p.n, l)) {
        op.add_term(mu, [mu, p](const Point& x) { return coeff_H(mu, x, p); });
    }
    return op;
}

DiffOperator build_H_perturbed(int l, const ModelParams& p, const Cplx& eps) {
    check_params(p);
    if (p.n < 2) throw invalid_parameters("perturbed family needs at least two variables");
    if (l < 1) throw invalid_parameters("perturbed family needs positive degree");
    DiffOperator op(p.n, p.delta);
    for (const auto& mu : enumerate_multiindices(p.n, l)) {
        op.add_term(mu, [mu, p, eps](const Point& x) {
            Cplx v = coeff_H(mu, x, p);
            if (mu[0] >= 1) {
                Cplx d = x[0] - x[1];
                // swap one numerator bracket: [d + kappa] -> [d + kappa + eps]
                v *= p.bracket.eval(d + p.kappa + eps) / p.bracket.eval_denominator(d + p.kappa);
            }
            return v;
        });
    }
    return op;
}

Cplx wronski_weight(int r, int s, const ModelParams& p) {
    return p.bracket.eval(Cplx(r) * p.kappa + Cplx(s) * p.delta);
}

DiffOperator wronski_residual_op(int l, const ModelParams& p) {
    check_params(p);
    if (l < 1) throw invalid_parameters("alternating sum needs positive degree");
    std::vector<DiffOperator> ops;
    std::vector<Cplx> coeffs;
    for (int r = 0; r <= l; ++r) {
        int s = l - r;
        ops.push_back(op_compose(build_D(r, p), build_H(s, p)));
        Cplx c = wronski_weight(r, s, p);
        coeffs.push_back(r % 2 == 0 ? c : -c);
    }
    return op_linear(coeffs, ops);
}

Residual coefficient_identity_residual(const MultiIndex& lambda, const Point& x,
                                       const ModelParams& p) {
    check_params(p);
    if (static_cast<int>(lambda.size()) != p.n)
        throw invalid_parameters("multi-index length does not match variable count");
    int total = mi_total(lambda);
    if (total < 1) throw invalid_parameters("coefficient identity needs |lambda| >= 1");
    std::vector<int> supp = mi_support(lambda);
    int ns = static_cast<int>(supp.size());

    Cplx sum(0);
    Real scale(0);
    for (int r = 0; r <= ns; ++r) {
        for (const auto& pick : enumerate_subsets(ns, r)) {
            std::vector<int> subset;
            subset.reserve(pick.size());
            for (int q : pick) subset.push_back(supp[q]);

            MultiIndex rest = lambda;
            Point shifted = x;
            for (int i : subset) {
                rest[i] -= 1;
                shifted[i] += p.delta;
            }
            Cplx term = wronski_weight(r, total - r, p) * coeff_A(subset, x, p) *
                        coeff_H(rest, shifted, p);
            if (r % 2 != 0) term = -term;
            Real a = abs(term);
            if (a > scale) scale = a;
            sum += term;
        }
    }
    return {sum, scale};
}

Residual key_identity_residual(std::span<const Cplx> z, std::span<const Cplx> w, const Cplx& a,
                               const BracketFunction& bracket) {
    if (z.empty()) throw invalid_parameters("key identity needs at least one z variable");
    if (z.size() != w.size())
        throw invalid_parameters("key identity pairs equally many z and w variables");
    int n = static_cast<int>(z.size());
    Cplx diff_sums(0);
    for (const auto& v : w) diff_sums += v;
    for (const auto& v : z) diff_sums -= v;

    Cplx sum(0);
    Real scale(0);
    for (const auto& subset : enumerate_all_subsets(n)) {
        std::vector<char> in(n, 0);
        for (int i : subset) in[i] = 1;
        int r = static_cast<int>(subset.size());

        Cplx term = bracket.eval(diff_sums + Cplx(r) * a) / bracket.eval_denominator(diff_sums);
        for (int i : subset) {
            for (int j = 0; j < n; ++j) {
                if (in[j]) continue;
                term *= bracket.ratio(z[j] - z[i] + a, z[j] - z[i]);
            }
            for (const auto& wk : w) {
                term *= bracket.eval(wk - z[i]) / bracket.eval_denominator(wk - z[i] + a);
            }
        }
        if (r % 2 != 0) term = -term;
        Real m = abs(term);
        if (m > scale) scale = m;
        sum += term;
    }
    return {sum, scale};
}

namespace {

// Entries of the operator determinants: scaled(r, i) * Family_r with
// scaled(r, i) = [r * first + (i - r) * second] / [i * first] evaluated in the
// bracket; r = 0 must give the identity with unit scalar.
DiffOperator det_expand(int l, const ModelParams& p, DetOrder order, bool h_from_d) {
    check_params(p);
    if (l < 1) throw invalid_parameters("determinant expansion needs positive size");

    const Cplx& first = h_from_d ? p.delta : p.kappa;
    const Cplx& second = h_from_d ? p.kappa : p.delta;

    std::vector<DiffOperator> family;
    for (int r = 0; r <= l; ++r)
        family.push_back(h_from_d ? build_D(r, p) : build_H(r, p));

    auto scalar = [&](int r, int i) {
        Cplx num = Cplx(r) * second + Cplx(i - r) * first;
        Cplx den = Cplx(i) * first;
        return p.bracket.ratio(num, den);
    };

    std::vector<int> perm(l);
    std::iota(perm.begin(), perm.end(), 0);

    std::vector<DiffOperator> terms;
    std::vector<Cplx> weights;
    do {
        bool vanishes = false;
        for (int i = 0; i < l && !vanishes; ++i)
            if (i - perm[i] + 1 < 0) vanishes = true;
        if (vanishes) continue;

        int inversions = 0;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                if (perm[i] > perm[j]) ++inversions;

        Cplx weight(inversions % 2 == 0 ? 1 : -1);
        DiffOperator prod = DiffOperator::identity(p.n, p.delta);
        for (int step = 0; step < l; ++step) {
            int i = step;
            // column-major walks column indices; the row holding column
            // `step` is its preimage under the permutation
            if (order == DetOrder::column_major) {
                i = 0;
                while (perm[i] != step) ++i;
            }
            int j = perm[i];
            int r = i - j + 1;
            weight *= scalar(r, i + 1);
            prod = op_compose(prod, family[r]);
        }
        terms.push_back(std::move(prod));
        weights.push_back(weight);
    } while (std::next_permutation(perm.begin(), perm.end()));

    return op_linear(weights, terms);
}

}  // namespace

DiffOperator h_via_determinant(int l, const ModelParams& p, DetOrder order) {
    return det_expand(l, p, order, true);
}

DiffOperator d_via_determinant(int l, const ModelParams& p, DetOrder order) {
    return det_expand(l, p, order, false);
}

DiffOperator h_via_compositions(int l, const ModelParams& p) {
    check_params(p);
    if (l < 1) throw invalid_parameters("composition expansion needs positive degree");
    std::vector<DiffOperator> terms;
    std::vector<Cplx> weights;
    for (const auto& comp : enumerate_compositions(l)) {
        int d = static_cast<int>(comp.size());
        Cplx weight((l - d) % 2 == 0 ? 1 : -1);
        DiffOperator prod = DiffOperator::identity(p.n, p.delta);
        int partial = 0;
        for (int ri : comp) {
            Cplx num = Cplx(partial) * p.delta + Cplx(ri) * p.kappa;
            partial += ri;
            Cplx den = Cplx(partial) * p.delta;
            weight *= p.bracket.ratio(num, den);
            prod = op_compose(prod, build_D(ri, p));
        }
        terms.push_back(std::move(prod));
        weights.push_back(weight);
    }
    return op_linear(weights, terms);
}

DiffOperator commutator_op(CommutatorKind kind, int r, int s, const ModelParams& p) {
    auto first = (kind == CommutatorKind::hh) ? build_H(r, p) : build_D(r, p);
    auto second = (kind == CommutatorKind::dd) ? build_D(s, p) : build_H(s, p);
    std::vector<DiffOperator> ops;
    ops.push_back(op_compose(first, second));
    ops.push_back(op_compose(second, first));
    std::vector<Cplx> coeffs{Cplx(1), Cplx(-1)};
    return op_linear(coeffs, ops);
}

OpComparison commutator_residual(CommutatorKind kind, int r, int s, const ModelParams& p,
                                 int num_samples, const Real& tol, Sampler& sampler) {
    return op_zero_at(commutator_op(kind, r, s, p), num_samples, tol, sampler);
}

}  // namespace ruijops
