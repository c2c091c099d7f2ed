#pragma once

#include <map>
#include <span>
#include <vector>

#include "ruijops/errors.hpp"
#include "ruijops/mpcomplex.hpp"

namespace ruijops {

// Exponent vector of a monomial, fixed length = variable count.
using Expo = std::vector<int>;

// Descending lexicographic order, so map::begin() is the leading term.
struct ExpoLexGreater {
    bool operator()(const Expo& a, const Expo& b) const {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] > b[i];
        }
        return false;
    }
};

Rat rat_pow(const Rat& base, int k);

// Sparse multivariate polynomial with exact rational coefficients.
class Poly {
  public:
    explicit Poly(int nvars);

    static Poly constant(int nvars, const Rat& c);
    static Poly variable(int nvars, int i);
    static Poly monomial(Expo e, const Rat& c);

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    std::size_t term_count() const { return terms_.size(); }

    const std::map<Expo, Rat, ExpoLexGreater>& terms() const { return terms_; }

    void add_term(const Expo& e, const Rat& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator-() const;
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& c);
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b);

    // Substitutes z_i -> q^{mu_i} z_i.
    Poly shift_q(const std::vector<int>& mu, const Rat& q) const;

    Rat eval(std::span<const Rat> z) const;

  private:
    int n_;
    std::map<Expo, Rat, ExpoLexGreater> terms_;
};

// Quotient num / div when the division is exact; any nonzero remainder
// (detected by a leading term the divisor's leading term cannot reduce)
// throws exactness_violation.
Poly divide_exact(const Poly& num, const Poly& div);

// prod_{i<j} (z_i - z_j)
Poly vandermonde_poly(int nvars);

}  // namespace ruijops
