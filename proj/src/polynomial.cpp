#include "ruijops/polynomial.hpp"

#include "ruijops/errors.hpp"

namespace ruijops {

Rat rat_pow(const Rat& base, int k) {
    if (k < 0) {
        if (base == 0) throw invalid_parameters("zero base with negative exponent");
        return rat_pow(Rat(1) / base, -k);
    }
    Rat acc(1);
    Rat b = base;
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

Poly::Poly(int nvars) : n_(nvars) {
    if (nvars < 1) throw invalid_parameters("polynomial needs at least one variable");
}

Poly Poly::constant(int nvars, const Rat& c) {
    Poly p(nvars);
    p.add_term(Expo(nvars, 0), c);
    return p;
}

Poly Poly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw invalid_parameters("variable index out of range");
    Poly p(nvars);
    Expo e(nvars, 0);
    e[i] = 1;
    p.add_term(e, Rat(1));
    return p;
}

Poly Poly::monomial(Expo e, const Rat& c) {
    Poly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

int Poly::total_degree() const {
    int deg = 0;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int v : e) d += v;
        if (d > deg) deg = d;
    }
    return deg;
}

void Poly::add_term(const Expo& e, const Rat& c) {
    if (static_cast<int>(e.size()) != n_)
        throw invalid_parameters("exponent length does not match variable count");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly Poly::operator-() const {
    Poly p(n_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out(a.n_);
    Expo e(a.n_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

bool operator==(const Poly& a, const Poly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
}

Poly Poly::shift_q(const std::vector<int>& mu, const Rat& q) const {
    if (static_cast<int>(mu.size()) != n_)
        throw invalid_parameters("shift length does not match variable count");
    Poly out(n_);
    for (const auto& [e, c] : terms_) {
        int exponent = 0;
        for (int i = 0; i < n_; ++i) exponent += e[i] * mu[i];
        out.add_term(e, c * rat_pow(q, exponent));
    }
    return out;
}

Rat Poly::eval(std::span<const Rat> z) const {
    if (static_cast<int>(z.size()) != n_)
        throw invalid_parameters("evaluation point does not match variable count");
    Rat out(0);
    for (const auto& [e, c] : terms_) {
        Rat m = c;
        for (int i = 0; i < n_; ++i) m *= rat_pow(z[i], e[i]);
        out += m;
    }
    return out;
}

Poly divide_exact(const Poly& num, const Poly& div) {
    if (div.is_zero()) throw invalid_parameters("division by zero polynomial");
    if (num.nvars() != div.nvars())
        throw invalid_parameters("operands must share the variable count");
    int n = num.nvars();
    const auto& dlead = *div.terms().begin();
    Poly quot(n);
    Poly rem = num;
    Expo qe(n);
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().begin();
        for (int i = 0; i < n; ++i) {
            qe[i] = rlead.first[i] - dlead.first[i];
            if (qe[i] < 0) throw exactness_violation("polynomial division left a remainder");
        }
        Rat qc = rlead.second / dlead.second;
        quot.add_term(qe, qc);
        rem -= Poly::monomial(qe, qc) * div;
    }
    return quot;
}

Poly vandermonde_poly(int nvars) {
    Poly out = Poly::constant(nvars, Rat(1));
    for (int i = 0; i < nvars; ++i)
        for (int j = i + 1; j < nvars; ++j)
            out *= Poly::variable(nvars, i) - Poly::variable(nvars, j);
    return out;
}

}  // namespace ruijops
