#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ruijops/macdonald.hpp"

using namespace ruijops;

namespace {

const QTPair kQT{Rat(3) / 5, Rat(2) / 7};

}  // namespace

TEST_CASE("rational pochhammer and parameter validation") {
    Rat a = Rat(1) / 2, q = Rat(1) / 3;
    CHECK(qpoch_rat(a, q, 0) == 1);
    CHECK(qpoch_rat(a, q, 2) == (Rat(1) - a) * (Rat(1) - a * q));
    CHECK_THROWS_AS(qpoch_rat(a, q, -1), invalid_parameters);

    CHECK_NOTHROW(validate_qt(kQT, 4));
    CHECK_THROWS_AS(validate_qt({Rat(0), Rat(2)}, 1), invalid_parameters);
    CHECK_THROWS_AS(validate_qt({Rat(1), Rat(2)}, 1), invalid_parameters);
    CHECK_NOTHROW(validate_qt({Rat(-1), Rat(2)}, 1));
    CHECK_THROWS_AS(validate_qt({Rat(-1), Rat(2)}, 2), invalid_parameters);
}

TEST_CASE("order one action is dominance triangular with spectral diagonal") {
    auto a21 = apply_calD(1, SymPoly::msym({2, 1}, 2), kQT);
    Rat diag = elementary_eval(1, spectral_point({2, 1}, 2, kQT));
    CHECK(diag == Rat(123) / 175);
    CHECK(a21.coeff({2, 1}) == diag);

    // strictly-higher partitions never appear
    auto a11 = apply_calD(1, SymPoly::msym({1, 1}, 2), kQT);
    CHECK(a11.coeff({2}) == 0);
    CHECK(a11.coeff({1, 1}) == elementary_eval(1, spectral_point({1, 1}, 2, kQT)));
}

TEST_CASE("operator edge orders") {
    auto f = SymPoly::msym({2}, 2);
    CHECK(apply_calD(0, f, kQT) == f);
    CHECK(apply_calD(3, f, kQT).is_zero());
    CHECK_THROWS_AS(apply_calD(-1, f, kQT), invalid_parameters);
    CHECK(apply_calH(0, f, kQT) == f);
    CHECK_THROWS_AS(apply_calH(-1, f, kQT), invalid_parameters);
    CHECK_THROWS_AS(macdonald_poly({3, 2, 1}, 2, kQT), invalid_parameters);
    CHECK_THROWS_AS(spectral_point({2, 3}, 3, kQT), invalid_parameters);
}

TEST_CASE("eigenfunction coefficients at q=3/5, t=2/7") {
    CHECK(macdonald_poly({}, 2, kQT) == SymPoly::constant(2, Rat(1)));
    CHECK(macdonald_poly({1, 1}, 2, kQT) == SymPoly::msym({1, 1}, 2));

    auto p2 = macdonald_poly({2}, 2, kQT);
    CHECK(p2.coeff({2}) == 1);
    CHECK(p2.coeff({1, 1}) == Rat(40) / 29);
    CHECK(p2.coeffs().size() == 2);

    auto p3 = macdonald_poly({3}, 3, kQT);
    CHECK(p3.coeff({3}) == 1);
    CHECK(p3.coeff({2, 1}) == Rat(245) / 157);
    CHECK(p3.coeff({1, 1, 1}) == Rat(9800) / 4553);

    auto p21 = macdonald_poly({2, 1}, 3, kQT);
    CHECK(p21.coeff({2, 1}) == 1);
    CHECK(p21.coeff({1, 1, 1}) == Rat(565) / 233);
    CHECK(p21.coeffs().size() == 2);

    auto p4 = macdonald_poly({4}, 4, kQT);
    CHECK(p4.coeff({4}) == 1);
    CHECK(p4.coeff({3, 1}) == Rat(1360) / 821);
    CHECK(p4.coeff({2, 2}) == Rat(241570) / 128897);
    CHECK(p4.coeff({2, 1, 1}) == Rat(333200) / 128897);
    CHECK(p4.coeff({1, 1, 1, 1}) == Rat(13328000) / 3738013);

    auto p31 = macdonald_poly({3, 1}, 4, kQT);
    CHECK(p31.coeff({3, 1}) == 1);
    CHECK(p31.coeff({2, 2}) == Rat(40) / 29);
    CHECK(p31.coeff({2, 1, 1}) == Rat(102545) / 34481);
    CHECK(p31.coeff({1, 1, 1, 1}) == Rat(192400) / 34481);

    auto p22 = macdonald_poly({2, 2}, 4, kQT);
    CHECK(p22.coeff({2, 2}) == 1);
    CHECK(p22.coeff({2, 1, 1}) == Rat(40) / 29);
    CHECK(p22.coeff({1, 1, 1, 1}) == Rat(22600) / 6757);

    auto p211 = macdonald_poly({2, 1, 1}, 4, kQT);
    CHECK(p211.coeff({2, 1, 1}) == 1);
    CHECK(p211.coeff({1, 1, 1, 1}) == Rat(5810) / 1691);
    CHECK(p211.coeffs().size() == 2);
}

TEST_CASE("two-variable spectral values") {
    using P = std::pair<Partition, std::pair<Rat, Rat>>;
    std::vector<P> table = {
        {{}, {Rat(9) / 7, Rat(2) / 7}},          {{1}, {Rat(41) / 35, Rat(6) / 35}},
        {{1, 1}, {Rat(27) / 35, Rat(18) / 175}}, {{2}, {Rat(193) / 175, Rat(18) / 175}},
        {{2, 1}, {Rat(123) / 175, Rat(54) / 875}}, {{2, 2}, {Rat(81) / 175, Rat(162) / 4375}},
    };
    for (const auto& [lam, ev] : table) {
        auto xi = spectral_point(lam, 2, kQT);
        CHECK(elementary_eval(1, xi) == ev.first);
        CHECK(elementary_eval(2, xi) == ev.second);
    }
    CHECK(elementary_eval(3, spectral_point({1}, 2, kQT)) == 0);
}

TEST_CASE("both families act diagonally on the eigenfunctions") {
    for (const Partition& lam : {Partition{2}, Partition{1, 1}, Partition{2, 1}, Partition{3}}) {
        for (int r = 1; r <= 2; ++r) CHECK(eigen_check_D(lam, r, 2, kQT));
        for (int l = 1; l <= 2; ++l) CHECK(eigen_check_H(lam, l, 2, kQT));
    }
    CHECK(eigen_check_H({1, 1, 1}, 2, 3, kQT));
}

TEST_CASE("one-row members carry the pochhammer normalization") {
    CHECK(g_factor(0, kQT) == 1);
    CHECK(g_factor(1, kQT) == Rat(25) / 14);
    CHECK(g_factor(2, kQT) == Rat(3625) / 1568);
    CHECK(g_factor(3, kQT) == Rat(2845625) / 1075648);
    CHECK(g_factor(4, kQT) == Rat("11681290625") / Rat("4096067584"));

    for (int n = 2; n <= 3; ++n)
        for (int l = 1; l <= 3; ++l) CHECK(g_matches_one_row(l, n, kQT));
}

TEST_CASE("alternating sums vanish exactly, scalar and operator form") {
    CHECK(scalar_wronski_check(4, 2, kQT, {2, 1}));
    CHECK(scalar_wronski_check(4, 3, kQT, {3, 1, 1}));
    CHECK(operator_wronski_trig_check(3, 2, kQT));
}

TEST_CASE("generating function eigenvalues through low orders") {
    CHECK(genfun_check({2, 1}, 2, kQT, 3));
    CHECK(genfun_check({1}, 3, kQT, 2));
}

TEST_CASE("colliding order-one spectrum is reported, not silently used") {
    QTPair bad{Rat(3) / 5, Rat(5) / 3};  // t = 1/q aligns two spectral points
    CHECK_THROWS_AS(macdonald_poly({2}, 2, bad), degenerate_spectrum);
    CHECK_NOTHROW(macdonald_poly({2}, 2, kQT));
}
