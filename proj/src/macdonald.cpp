#include "ruijops/macdonald.hpp"

#include <algorithm>

#include "ruijops/errors.hpp"
#include "ruijops/multiindex.hpp"

namespace ruijops {

Rat qpoch_rat(const Rat& a, const Rat& q, int k) {
    if (k < 0) throw invalid_parameters("pochhammer length must be nonnegative");
    Rat out(1);
    Rat aq = a;
    for (int s = 0; s < k; ++s) {
        out *= Rat(1) - aq;
        aq *= q;
    }
    return out;
}

void validate_qt(const QTPair& qt, int l) {
    if (qt.q == 0 || qt.t == 0) throw invalid_parameters("deformation parameters must be nonzero");
    Rat qs(1);
    for (int s = 1; s <= std::max(l, 1); ++s) {
        qs *= qt.q;
        if (qs == 1) throw invalid_parameters("q must not be a root of unity up to the degree");
    }
}

namespace {

// Divides by each binomial factor of the Vandermonde in turn; exactness of
// every step certifies the symmetry-based cancellation.
Poly divide_by_vandermonde(Poly num, int n) {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            num = divide_exact(num, Poly::variable(n, i) - Poly::variable(n, j));
    return num;
}

// sign flips when the cross product prod_{i in I, j notin I} (z_i - z_j) is
// rewritten with every factor in canonical i<j order
int crossing_sign(const std::vector<int>& subset, int n) {
    std::vector<char> in(n, 0);
    for (int i : subset) in[i] = 1;
    int flips = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (in[j] && !in[i]) ++flips;
    return flips % 2 == 0 ? 1 : -1;
}

}  // namespace

SymPoly apply_calD(int r, const SymPoly& f, const QTPair& qt) {
    validate_qt(qt, 1);
    int n = f.nvars();
    if (r < 0) throw invalid_parameters("operator order must be nonnegative");
    if (r == 0) return f;
    if (r > n) return SymPoly(n);

    Poly fx = f.expand();
    Rat tpre = rat_pow(qt.t, r * (r - 1) / 2);
    Poly num(n);
    for (const auto& subset : enumerate_subsets(n, r)) {
        std::vector<char> in(n, 0);
        for (int i : subset) in[i] = 1;

        Poly term = Poly::constant(n, tpre * crossing_sign(subset, n));
        for (int i : subset)
            for (int j = 0; j < n; ++j) {
                if (in[j]) continue;
                term *= qt.t * Poly::variable(n, i) - Poly::variable(n, j);
            }
        // non-crossing part of the Vandermonde
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (in[i] == in[j]) term *= Poly::variable(n, i) - Poly::variable(n, j);

        std::vector<int> mu(n, 0);
        for (int i : subset) mu[i] = 1;
        num += term * fx.shift_q(mu, qt.q);
    }
    return SymPoly::symmetrize(divide_by_vandermonde(std::move(num), n));
}

SymPoly apply_calH(int l, const SymPoly& f, const QTPair& qt) {
    validate_qt(qt, l);
    int n = f.nvars();
    if (l < 0) throw invalid_parameters("operator degree must be nonnegative");
    if (l == 0) return f;

    Poly fx = f.expand();
    Poly num(n);
    for (const auto& mu : enumerate_multiindices(n, l)) {
        Rat scal(1);
        for (int i = 0; i < n; ++i)
            scal *= qpoch_rat(qt.t, qt.q, mu[i]) / qpoch_rat(qt.q, qt.q, mu[i]);

        Poly term = Poly::constant(n, scal);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                term *= rat_pow(qt.q, mu[i]) * Poly::variable(n, i) -
                        rat_pow(qt.q, mu[j]) * Poly::variable(n, j);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                // off-diagonal pochhammers over the common denominator
                // prod_{s=1..l} (z_j - q^s z_i)
                for (int s = 0; s < mu[i]; ++s)
                    term *= Poly::variable(n, j) -
                            rat_pow(qt.q, s) * qt.t * Poly::variable(n, i);
                for (int s = mu[i] + 1; s <= l; ++s)
                    term *= Poly::variable(n, j) - rat_pow(qt.q, s) * Poly::variable(n, i);
            }
        }
        num += term * fx.shift_q(mu, qt.q);
    }

    Poly out = divide_by_vandermonde(std::move(num), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int s = 1; s <= l; ++s)
                out = divide_exact(out, Poly::variable(n, j) -
                                            rat_pow(qt.q, s) * Poly::variable(n, i));
        }
    return SymPoly::symmetrize(out);
}

std::vector<Rat> spectral_point(const Partition& lam, int n, const QTPair& qt) {
    if (!is_partition(lam)) throw invalid_parameters("not a partition");
    if (partition_length(lam) > n) throw invalid_parameters("partition longer than variable count");
    std::vector<Rat> xi;
    for (int i = 0; i < n; ++i) {
        int part = i < static_cast<int>(lam.size()) ? lam[i] : 0;
        xi.push_back(rat_pow(qt.t, n - 1 - i) * rat_pow(qt.q, part));
    }
    return xi;
}

Rat elementary_eval(int r, std::span<const Rat> xi) {
    int n = static_cast<int>(xi.size());
    if (r < 0) throw invalid_parameters("elementary degree must be nonnegative");
    if (r > n) return Rat(0);
    Rat out(0);
    for (const auto& subset : enumerate_subsets(n, r)) {
        Rat prod(1);
        for (int i : subset) prod *= xi[i];
        out += prod;
    }
    return out;
}

Rat g_eval(int l, std::span<const Rat> xi, const QTPair& qt) {
    if (l < 0) throw invalid_parameters("degree must be nonnegative");
    int n = static_cast<int>(xi.size());
    Rat out(0);
    for (const auto& nu : enumerate_multiindices(n, l)) {
        Rat term(1);
        for (int i = 0; i < n; ++i) {
            if (nu[i] == 0) continue;
            term *= qpoch_rat(qt.t, qt.q, nu[i]) / qpoch_rat(qt.q, qt.q, nu[i]);
            term *= rat_pow(xi[i], nu[i]);
        }
        out += term;
    }
    return out;
}

Rat g_factor(int l, const QTPair& qt) {
    return qpoch_rat(qt.t, qt.q, l) / qpoch_rat(qt.q, qt.q, l);
}

SymPoly macdonald_poly(const Partition& lam, int n, const QTPair& qt) {
    validate_qt(qt, std::max(partition_weight(lam), 1));
    Partition top = trim(lam);
    if (!is_partition(top)) throw invalid_parameters("not a partition");
    if (partition_length(top) > n)
        throw invalid_parameters("partition longer than variable count");
    int k = partition_weight(top);
    if (k == 0) return SymPoly::constant(n, Rat(1));

    // dominance down-set of the target, descending lex (a linear extension)
    std::vector<Partition> basis;
    for (const auto& mu : partitions_of(k, n))
        if (dominates(top, mu)) basis.push_back(mu);

    // columns of the order-1 operator on the m-basis
    std::map<Partition, SymPoly> action;
    for (const auto& mu : basis) action.emplace(mu, apply_calD(1, SymPoly::msym(mu, n), qt));

    Rat target_ev = elementary_eval(1, spectral_point(top, n, qt));

    std::map<Partition, Rat> c;
    c[top] = Rat(1);
    for (std::size_t idx = 1; idx < basis.size(); ++idx) {
        const Partition& mu = basis[idx];
        Rat diag = action.at(mu).coeff(mu);
        if (diag == target_ev)
            throw degenerate_spectrum("order-1 eigenvalues collide inside the dominance cone");
        Rat acc(0);
        for (std::size_t prev = 0; prev < idx; ++prev) {
            const Partition& nu = basis[prev];
            acc += action.at(nu).coeff(mu) * c.at(nu);
        }
        c[mu] = acc / (target_ev - diag);
    }

    SymPoly P(n);
    for (const auto& [mu, coeff] : c) P.add(mu, coeff);
    return P;
}

bool eigen_check_D(const Partition& lam, int r, int n, const QTPair& qt) {
    SymPoly P = macdonald_poly(lam, n, qt);
    Rat ev = elementary_eval(r, spectral_point(lam, n, qt));
    return apply_calD(r, P, qt) == P * ev;
}

bool eigen_check_H(const Partition& lam, int l, int n, const QTPair& qt) {
    SymPoly P = macdonald_poly(lam, n, qt);
    Rat ev = g_eval(l, spectral_point(lam, n, qt), qt);
    return apply_calH(l, P, qt) == P * ev;
}

bool g_matches_one_row(int l, int n, const QTPair& qt) {
    if (l < 1) throw invalid_parameters("needs positive degree");
    Poly raw(n);
    for (const auto& nu : enumerate_multiindices(n, l)) {
        Rat coeff(1);
        for (int i = 0; i < n; ++i)
            coeff *= qpoch_rat(qt.t, qt.q, nu[i]) / qpoch_rat(qt.q, qt.q, nu[i]);
        raw.add_term(nu, coeff);
    }
    SymPoly g = SymPoly::symmetrize(raw);
    SymPoly rhs = macdonald_poly(Partition{l}, n, qt) * g_factor(l, qt);
    return g == rhs;
}

bool scalar_wronski_check(int lmax, int n, const QTPair& qt, const Partition& lam) {
    auto xi = spectral_point(lam, n, qt);
    for (int l = 1; l <= lmax; ++l) {
        Rat acc(0);
        for (int r = 0; r <= l; ++r) {
            int s = l - r;
            Rat scal = Rat(1) - rat_pow(qt.t, r) * rat_pow(qt.q, s);
            Rat term = scal * elementary_eval(r, xi) * g_eval(s, xi, qt);
            acc += (r % 2 == 0) ? term : -term;
        }
        if (acc != 0) return false;
    }
    return true;
}

bool operator_wronski_trig_check(int lmax, int n, const QTPair& qt) {
    std::vector<SymPoly> probes;
    probes.push_back(SymPoly::constant(n, Rat(1)));
    probes.push_back(SymPoly::msym(Partition{1}, n));
    probes.push_back(SymPoly::msym(Partition{2, 1}, n));
    for (const auto& f : probes) {
        for (int l = 1; l <= lmax; ++l) {
            SymPoly acc(n);
            for (int r = 0; r <= l; ++r) {
                int s = l - r;
                Rat scal = Rat(1) - rat_pow(qt.t, r) * rat_pow(qt.q, s);
                if (r % 2 != 0) scal = -scal;
                acc += apply_calD(r, apply_calH(s, f, qt), qt) * scal;
            }
            if (!acc.is_zero()) return false;
        }
    }
    return true;
}

bool genfun_check(const Partition& lam, int n, const QTPair& qt, int R) {
    if (R < 0) throw invalid_parameters("series order must be nonnegative");
    SymPoly P = macdonald_poly(lam, n, qt);
    auto xi = spectral_point(lam, n, qt);

    // u-series of prod_i (u t xi_i; q)_inf / (u xi_i; q)_inf over the rationals
    std::vector<Rat> series{Rat(1)};
    series.resize(R + 1, Rat(0));
    for (int i = 0; i < n; ++i) {
        std::vector<Rat> factor;
        for (int k = 0; k <= R; ++k)
            factor.push_back(qpoch_rat(qt.t, qt.q, k) / qpoch_rat(qt.q, qt.q, k) *
                             rat_pow(xi[i], k));
        std::vector<Rat> next(R + 1, Rat(0));
        for (int a = 0; a <= R; ++a)
            for (int b = 0; a + b <= R; ++b) next[a + b] += series[a] * factor[b];
        series = std::move(next);
    }

    for (int l = 0; l <= R; ++l) {
        if (g_eval(l, xi, qt) != series[l]) return false;
        if (!(apply_calH(l, P, qt) == P * series[l])) return false;
    }
    return true;
}

}  // namespace ruijops
