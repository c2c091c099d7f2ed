#pragma once

#include "ruijops/partition.hpp"
#include "ruijops/polynomial.hpp"

namespace ruijops {

// Symmetric polynomial in n variables stored on the monomial-symmetric basis
// m_lambda; keys are trimmed partitions of length <= n.
class SymPoly {
  public:
    explicit SymPoly(int nvars);

    // m_lambda; partitions longer than the variable count give zero.
    static SymPoly msym(const Partition& lam, int nvars);
    static SymPoly constant(int nvars, const Rat& c);
    static SymPoly elementary(int r, int nvars);

    int nvars() const { return n_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const;

    const std::map<Partition, Rat>& coeffs() const { return coeffs_; }
    Rat coeff(const Partition& lam) const;
    void add(const Partition& lam, const Rat& c);

    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    SymPoly& operator*=(const Rat& c);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(SymPoly a, const Rat& c) { return a *= c; }
    friend SymPoly operator*(const Rat& c, SymPoly a) { return a *= c; }
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    friend bool operator==(const SymPoly& a, const SymPoly& b);

    // Expansion into the raw monomial basis (all orbit permutations).
    Poly expand() const;

    // Reassembles a raw polynomial on the m-basis; a non-symmetric input
    // (any orbit with unequal coefficients) throws exactness_violation.
    static SymPoly symmetrize(const Poly& p);

  private:
    int n_;
    std::map<Partition, Rat> coeffs_;
};

}  // namespace ruijops
