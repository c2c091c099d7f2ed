#include "ruijops/sympoly.hpp"

#include <algorithm>

#include "ruijops/errors.hpp"

namespace ruijops {

SymPoly::SymPoly(int nvars) : n_(nvars) {
    if (nvars < 1) throw invalid_parameters("symmetric polynomial needs a variable");
}

SymPoly SymPoly::msym(const Partition& lam, int nvars) {
    if (!is_partition(lam)) throw invalid_parameters("not a partition");
    SymPoly s(nvars);
    Partition key = trim(lam);
    if (static_cast<int>(key.size()) <= nvars && !key.empty()) s.coeffs_[key] = Rat(1);
    if (key.empty()) s.coeffs_[key] = Rat(1);
    return s;
}

SymPoly SymPoly::constant(int nvars, const Rat& c) {
    SymPoly s(nvars);
    if (c != 0) s.coeffs_[Partition{}] = c;
    return s;
}

SymPoly SymPoly::elementary(int r, int nvars) {
    if (r < 0) throw invalid_parameters("elementary degree must be nonnegative");
    if (r == 0) return constant(nvars, Rat(1));
    if (r > nvars) return SymPoly(nvars);
    return msym(Partition(r, 1), nvars);
}

int SymPoly::degree() const {
    int deg = 0;
    for (const auto& [lam, c] : coeffs_) deg = std::max(deg, partition_weight(lam));
    return deg;
}

Rat SymPoly::coeff(const Partition& lam) const {
    auto it = coeffs_.find(trim(lam));
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void SymPoly::add(const Partition& lam, const Rat& c) {
    if (!is_partition(lam)) throw invalid_parameters("not a partition");
    Partition key = trim(lam);
    if (static_cast<int>(key.size()) > n_ || c == 0) return;
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
        coeffs_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    for (const auto& [lam, c] : o.coeffs_) add(lam, c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
    for (const auto& [lam, c] : o.coeffs_) add(lam, -c);
    return *this;
}

SymPoly& SymPoly::operator*=(const Rat& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [lam, v] : coeffs_) v *= c;
    return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    if (a.n_ != b.n_) throw invalid_parameters("operands must share the variable count");
    return SymPoly::symmetrize(a.expand() * b.expand());
}

bool operator==(const SymPoly& a, const SymPoly& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
}

Poly SymPoly::expand() const {
    Poly out(n_);
    for (const auto& [lam, c] : coeffs_) {
        Expo e = pad(lam, n_);
        std::sort(e.begin(), e.end(), std::greater<>());
        // enumerate the distinct rearrangements of the padded partition
        do {
            out.add_term(e, c);
        } while (std::prev_permutation(e.begin(), e.end()));
    }
    return out;
}

SymPoly SymPoly::symmetrize(const Poly& p) {
    SymPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (std::is_sorted(e.begin(), e.end(), std::greater<>())) out.add(e, c);
    }
    if (!(out.expand() == p))
        throw exactness_violation("polynomial is not symmetric");
    return out;
}

}  // namespace ruijops
