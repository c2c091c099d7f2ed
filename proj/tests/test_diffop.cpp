#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ruijops/diffop.hpp"

using namespace ruijops;

namespace {

const Cplx kStep = Cplx::parse("0.31", "0.43");

Real tolerance(int e) {
    using boost::multiprecision::pow;
    return pow(Real(10), e);
}

// sum of squares, an easy probe function
Cplx probe(const Point& x) {
    Cplx s(0);
    for (const auto& xi : x) s += xi * xi;
    return s;
}

DiffOperator sample_op_a() {
    DiffOperator a(2, kStep);
    a.add_term({1, 0}, [](const Point& x) { return x[0] + Cplx(2) * x[1]; });
    a.add_term({0, 1}, [](const Point& x) { return x[0] * x[1]; });
    return a;
}

DiffOperator sample_op_b() {
    DiffOperator b(2, kStep);
    b.add_term({0, 0}, [](const Point& x) { return x[1] - x[0]; });
    b.add_term({1, 1}, [](const Point&) { return Cplx(3); });
    return b;
}

}  // namespace

TEST_CASE("identity and zero operators act as expected") {
    auto id = DiffOperator::identity(3, kStep);
    auto zero = DiffOperator::zero(3, kStep);
    Point x = {Cplx(1), Cplx::parse("0.5"), Cplx::parse("-0.25", "0.5")};
    CHECK(abs(id.apply(probe, x) - probe(x)) == Real(0));
    CHECK(abs(zero.apply(probe, x)) == Real(0));
    CHECK(id.support_size() == 1);
    CHECK(zero.support_size() == 0);
}

TEST_CASE("apply shifts the argument by the multi-index times the step") {
    auto a = sample_op_a();
    Point x = {Cplx::parse("0.7", "0.1"), Cplx::parse("-0.4", "0.6")};
    Point x10 = {x[0] + kStep, x[1]};
    Point x01 = {x[0], x[1] + kStep};
    Cplx expected = (x[0] + Cplx(2) * x[1]) * probe(x10) + x[0] * x[1] * probe(x01);
    CHECK(abs(a.apply(probe, x) - expected) < tolerance(-70));
}

TEST_CASE("composition equals nested application") {
    auto a = sample_op_a();
    auto b = sample_op_b();
    auto ab = op_compose(a, b);

    Sampler s(17);
    for (int i = 0; i < 6; ++i) {
        Point x = s.box_point(2);
        Cplx nested = a.apply([&](const Point& y) { return b.apply(probe, y); }, x);
        Cplx composed = ab.apply(probe, x);
        Real scale = abs(nested);
        if (scale < 1) scale = 1;
        CHECK(abs(composed - nested) / scale < tolerance(-65));
    }

    // support of the composition is the sumset
    CHECK(ab.support_size() == 4);

    Sampler cmp_sampler(23);
    auto abc1 = op_compose(ab, a);
    auto abc2 = op_compose(a, op_compose(b, a));
    auto cmp = op_equal_at(abc1, abc2, 5, tolerance(-60), cmp_sampler);
    CHECK(cmp.pass);
}

TEST_CASE("scaling and linear combinations track each part separately") {
    auto a = sample_op_a();
    auto twice = op_scale(Cplx(2), a);

    Sampler s(5);
    Point x = s.box_point(2);
    CHECK(abs(twice.apply(probe, x) - Cplx(2) * a.apply(probe, x)) < tolerance(-65));

    std::vector<Cplx> coeffs = {Cplx(2), Cplx(-1), Cplx(-1)};
    std::vector<DiffOperator> ops = {a, a, a};
    auto cancel = op_linear(coeffs, ops);
    Sampler zs(31);
    auto cmp = op_zero_at(cancel, 10, tolerance(-60), zs);
    CHECK(cmp.pass);
    CHECK(cmp.samples == 20);  // 2 support terms x 10 samples
}

TEST_CASE("coefficient comparison reports the size of a seeded discrepancy") {
    auto a = sample_op_a();
    auto b = sample_op_a();
    b.add_term({1, 0}, [](const Point&) { return Cplx::parse("1e-9"); });

    Sampler s(13);
    auto cmp = op_equal_at(a, b, 5, tolerance(-12), s);
    CHECK_FALSE(cmp.pass);
    CHECK(cmp.max_rel_dev > tolerance(-10));
    CHECK(cmp.max_rel_dev < tolerance(-8));
    CHECK(cmp.worst_term == MultiIndex{1, 0});
}

TEST_CASE("dimension and step mismatches are rejected") {
    auto a = sample_op_a();
    DiffOperator other_step(2, Cplx::parse("0.5"));
    other_step.add_term({1, 0}, [](const Point&) { return Cplx(1); });
    DiffOperator other_n(3, kStep);

    CHECK_THROWS_AS(op_compose(a, other_step), invalid_parameters);
    CHECK_THROWS_AS(op_compose(a, other_n), invalid_parameters);
    CHECK_THROWS_AS(a.add_term({1, 0, 0}, [](const Point&) { return Cplx(1); }),
                    invalid_parameters);
    Point wrong = {Cplx(1)};
    CHECK_THROWS_AS(a.apply(probe, wrong), invalid_parameters);
    CHECK_THROWS_AS(op_linear({}, {}), invalid_parameters);
    CHECK_THROWS_AS(DiffOperator(0, kStep), invalid_parameters);
}

TEST_CASE("sampler streams are reproducible and platform independent") {
    Sampler s1(99), s2(99);
    for (int i = 0; i < 20; ++i) CHECK(s1.unit_real() == s2.unit_real());

    Sampler s3(99);
    Point p1 = s3.box_point(3);
    Sampler s4(99);
    Point p2 = s4.box_point(3);
    for (int i = 0; i < 3; ++i) CHECK(p1[i] == p2[i]);
}

TEST_CASE("admissible sampling retries past pole guards") {
    Sampler s(1);
    int failures = 3;
    Cplx got = s.admissible([&] {
        if (failures-- > 0) throw pole_proximity("synthetic");
        return Cplx(7);
    });
    CHECK(got == Cplx(7));

    CHECK_THROWS_AS(s.admissible([&]() -> Cplx { throw pole_proximity("always"); }),
                    pole_proximity);
}
