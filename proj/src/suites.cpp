#include "ruijops/suites.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <chrono>
#include <functional>

#include "ruijops/errors.hpp"
#include "ruijops/kernels.hpp"
#include "ruijops/macdonald.hpp"
#include "ruijops/ruijsenaars.hpp"
#include "ruijops/sampling.hpp"

namespace ruijops {

namespace {

using boost::multiprecision::pow;

BracketFunction make_bracket(Flavor f, unsigned digits, const Cplx& gauss_c = Cplx(0)) {
    switch (f) {
        case Flavor::rational:
            return BracketFunction::rational(gauss_c, digits);
        case Flavor::trigonometric:
            return BracketFunction::trigonometric(Cplx::parse("0.83", "0.19"), gauss_c, digits);
        case Flavor::elliptic:
            return BracketFunction::elliptic(Cplx(1), Cplx::parse("0.31", "0.73"), gauss_c,
                                             digits);
    }
    throw invalid_parameters("unknown flavor");
}

Cplx default_delta() { return Cplx::parse("0.31", "0.43"); }
Cplx default_kappa() { return Cplx::parse("-0.27", "0.39"); }

Real parse_real(const std::string& s) { return Real(s); }

Rat parse_rat(const std::string& s) { return Rat(s); }

struct SuiteRunner {
    SuiteConfig cfg;
    IdentityReport report;
    Sampler sampler;
    BracketFunction bracket;
    ModelParams params;

    Real tol_bracket;
    Real tol_op;
    Real tol_bridge;

    explicit SuiteRunner(const SuiteConfig& c)
        : cfg(c),
          sampler(c.seed),
          bracket(make_bracket(c.flavor, c.precision)),
          params{c.n, default_delta(), default_kappa(), bracket} {
        report.config = cfg;
        int d = static_cast<int>(cfg.precision);
        tol_bracket = pow(Real(10), -std::max(d - 20, 10));
        tol_op = default_op_tol(cfg.precision);
        tol_bridge = pow(Real(10), -std::max(d - 30, 10));
        if (!cfg.tol.empty()) {
            Real t = parse_real(cfg.tol);
            tol_bracket = t;
            tol_op = t;
            tol_bridge = t;
        }
    }

    void record(const std::string& id, const std::string& identity,
                const std::function<void(CheckRecord&)>& body) {
        CheckRecord rec;
        rec.id = id;
        rec.identity = identity;
        auto start = std::chrono::steady_clock::now();
        body(rec);
        auto stop = std::chrono::steady_clock::now();
        rec.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        report.checks.push_back(std::move(rec));
    }

    void record_numeric(const std::string& id, const std::string& identity, const Real& max_rel,
                        int samples, const Real& tol) {
        record(id, identity, [&](CheckRecord& rec) {
            rec.samples = samples;
            rec.max_residual = to_decimal_string(max_rel, 3);
            rec.tol = to_decimal_string(tol, 3);
            rec.pass = max_rel <= tol;
        });
    }

    void record_comparison(const std::string& id, const std::string& identity,
                           const OpComparison& cmp, const Real& tol) {
        record_numeric(id, identity, cmp.max_rel_dev, cmp.samples, tol);
    }

    void record_exact(const std::string& id, const std::string& identity, bool ok) {
        record(id, identity, [&](CheckRecord& rec) {
            rec.exact = true;
            rec.pass = ok;
            rec.max_residual = ok ? "0" : "nonzero";
        });
    }

    // ---- hirota ----

    void suite_hirota() {
        auto run_for = [&](const std::string& label, const BracketFunction& br) {
            Real worst(0);
            int samples = 20;
            for (int s = 0; s < samples; ++s) {
                Cplx z = sampler.box();
                Cplx a = sampler.box();
                Cplx b = sampler.box();
                Cplx g = sampler.box();
                Real rel = br.hirota_residual(z, a, b, g).rel();
                if (rel > worst) worst = rel;
            }
            record_numeric("hirota/" + label, "three-term bracket relation", worst, samples,
                           tol_bracket);

            Real odd(0);
            for (int s = 0; s < 10; ++s) {
                Cplx z = sampler.box();
                Cplx v = br.eval(z) + br.eval(-z);
                Real scale(1);
                Real m = abs(br.eval(z));
                if (m > scale) scale = m;
                Real rel = abs(v) / scale;
                if (rel > odd) odd = rel;
            }
            record_numeric("oddness/" + label, "bracket oddness", odd, 10, tol_bracket);
        };
        run_for(flavor_name(cfg.flavor), bracket);
        run_for(flavor_name(cfg.flavor) + "+gauss",
                make_bracket(cfg.flavor, cfg.precision, Cplx::parse("0.11", "0.07")));
    }

    // ---- commute ----

    void suite_commute() {
        int rcap = std::min(cfg.rmax, cfg.n);
        for (int r = 1; r <= rcap; ++r)
            for (int s = r + 1; s <= rcap; ++s)
                record_comparison("commute/dd/r=" + std::to_string(r) + ",s=" + std::to_string(s),
                                  "commutativity of the factorized family",
                                  commutator_residual(CommutatorKind::dd, r, s, params, 20,
                                                      tol_op, sampler),
                                  tol_op);
        for (int r = 1; r <= rcap; ++r)
            for (int s = 1; s <= cfg.lmax; ++s)
                record_comparison("commute/dh/r=" + std::to_string(r) + ",s=" + std::to_string(s),
                                  "cross-family commutativity",
                                  commutator_residual(CommutatorKind::dh, r, s, params, 20,
                                                      tol_op, sampler),
                                  tol_op);
        for (int r = 1; r <= cfg.lmax; ++r)
            for (int s = r + 1; s <= cfg.lmax; ++s)
                record_comparison("commute/hh/r=" + std::to_string(r) + ",s=" + std::to_string(s),
                                  "commutativity of the extending family",
                                  commutator_residual(CommutatorKind::hh, r, s, params, 20,
                                                      tol_op, sampler),
                                  tol_op);
    }

    // ---- wronski ----

    void suite_wronski() {
        for (int l = 1; l <= cfg.lmax; ++l) {
            auto cmp = op_zero_at(wronski_residual_op(l, params), 20, tol_op, sampler);
            record_comparison("wronski/l=" + std::to_string(l), "alternating two-family sum",
                              cmp, tol_op);
        }
        int shown = 0;
        for (int l = 1; l <= cfg.lmax && shown < 6; ++l) {
            for (const auto& lam : enumerate_multiindices(cfg.n, l)) {
                if (shown >= 6) break;
                Real worst(0);
                int samples = 5;
                for (int s = 0; s < samples; ++s) {
                    Real rel = sampler.admissible([&] {
                        Point x = sampler.box_point(cfg.n);
                        return coefficient_identity_residual(lam, x, params).rel();
                    });
                    if (rel > worst) worst = rel;
                }
                std::string key;
                for (int v : lam) key += std::to_string(v);
                record_numeric("wronski/coefficient/lambda=" + key,
                               "pointwise coefficient cancellation", worst, samples, tol_op);
                ++shown;
            }
        }
    }

    // ---- expansions ----

    void suite_expansions() {
        int cap = std::min(cfg.lmax, 3);
        for (int l = 1; l <= cap; ++l) {
            auto direct = build_H(l, params);
            record_comparison("expansions/det-h/l=" + std::to_string(l),
                              "determinant expansion of the extending family",
                              op_equal_at(h_via_determinant(l, params), direct, 20, tol_op,
                                          sampler),
                              tol_op);
            record_comparison("expansions/det-order/l=" + std::to_string(l),
                              "determinant order independence",
                              op_equal_at(h_via_determinant(l, params, DetOrder::column_major),
                                          direct, 20, tol_op, sampler),
                              tol_op);
            record_comparison("expansions/compositions/l=" + std::to_string(l),
                              "composition expansion of the extending family",
                              op_equal_at(h_via_compositions(l, params), direct, 20, tol_op,
                                          sampler),
                              tol_op);
        }
        for (int l = 1; l <= std::min(cap, cfg.n); ++l) {
            record_comparison("expansions/det-d/l=" + std::to_string(l),
                              "converse determinant expansion",
                              op_equal_at(d_via_determinant(l, params), build_D(l, params), 20,
                                          tol_op, sampler),
                              tol_op);
        }
    }

    // ---- keyidentity ----

    void suite_keyidentity() {
        for (int nz = 1; nz <= cfg.n; ++nz) {
            Real worst(0);
            int samples = 10;
            for (int s = 0; s < samples; ++s) {
                Real rel = sampler.admissible([&] {
                    Point z = sampler.box_point(nz);
                    Point w = sampler.box_point(nz);
                    Cplx a = sampler.box();
                    return key_identity_residual(z, w, a, bracket).rel();
                });
                if (rel > worst) worst = rel;
            }
            record_numeric("keyidentity/n=" + std::to_string(nz), "telescoping cancellation sum",
                           worst, samples, tol_bracket);
        }
    }

    // ---- kernels ----

    void suite_kernels() {
        // additive kernel identity at the balanced coupling
        std::vector<std::pair<int, int>> sizes{{1, 1}, {2, 1}, {2, 2}};
        if (cfg.n >= 3) sizes.push_back({3, 2});
        for (auto [m, nn] : sizes) {
            for (int r = 0; r <= std::min(cfg.rmax, 3); ++r) {
                Real worst(0);
                int samples = 5;
                for (int s = 0; s < samples; ++s) {
                    Real rel = sampler.admissible([&] {
                        Point x = sampler.box_point(m);
                        Point y = sampler.box_point(nn);
                        return hd_identity_residual(r, x, y, default_delta(), bracket).rel();
                    });
                    if (rel > worst) worst = rel;
                }
                record_numeric("kernels/hd-additive/m=" + std::to_string(m) +
                                   ",n=" + std::to_string(nn) + ",r=" + std::to_string(r),
                               "dual kernel identity at balanced coupling", worst, samples,
                               tol_op);
            }
        }

        // two-sided duality sum with balanced couplings
        for (auto [m, nn] : sizes) {
            for (int r = 1; r <= std::min(cfg.rmax, 3); ++r) {
                Real worst(0);
                int samples = 5;
                for (int s = 0; s < samples; ++s) {
                    Real rel = sampler.admissible([&] {
                        DualityParams dp{default_delta(), {}, {}, bracket};
                        for (int i = 0; i < m; ++i) dp.a.push_back(sampler.box());
                        Cplx total(0);
                        for (const auto& c : dp.a) total += c;
                        for (int k = 0; k + 1 < nn; ++k) {
                            dp.b.push_back(sampler.box());
                            total -= dp.b.back();
                        }
                        dp.b.push_back(total);
                        Point x = sampler.box_point(m);
                        Point y = sampler.box_point(nn);
                        return duality_sum_residual(r, x, y, dp).rel();
                    });
                    if (rel > worst) worst = rel;
                }
                record_numeric("kernels/duality/m=" + std::to_string(m) +
                                   ",n=" + std::to_string(nn) + ",r=" + std::to_string(r),
                               "two-sided duality sum", worst, samples, tol_op);
            }
        }

        // multiplicative generating-function identities, coefficient-wise
        Cplx q = Cplx(Real(parse_rat(cfg.q)));
        Cplx t = Cplx(Real(parse_rat(cfg.t)));
        int m = std::min(cfg.n, 3);
        int nn = std::max(1, m - 1);
        int order = std::min(cfg.rmax + 1, 4);
        auto sample_mult = [&](int count) {
            Point z;
            for (int i = 0; i < count; ++i) z.push_back(Cplx(0.45) + Cplx(0.35) * sampler.box());
            return z;
        };
        for (auto [kind, label] :
             {std::pair{TrigKernelKind::dd, "dd"}, {TrigKernelKind::hh, "hh"},
              {TrigKernelKind::hd, "hd"}}) {
            Real worst(0);
            int samples = 3;
            for (int s = 0; s < samples; ++s) {
                Real rel = sampler.admissible([&] {
                    Point z = sample_mult(m);
                    Point w = sample_mult(nn);
                    int ord = kind == TrigKernelKind::dd ? std::max(order, m) : order;
                    return trig_kernel_residuals(kind, Cplx::parse("0.7", "0.1"), z, w, q, t, ord)
                        .max_rel;
                });
                if (rel > worst) worst = rel;
            }
            record_numeric(std::string("kernels/mult-") + label,
                           "multiplicative kernel generating identity", worst, samples, tol_op);
        }

        // additive/multiplicative normalization bridge
        for (int r = 1; r <= std::min(cfg.n, cfg.rmax); ++r) {
            Real worst(0);
            int samples = 5;
            for (int s = 0; s < samples; ++s) {
                Real rel = sampler.admissible([&] {
                    Point x = sampler.box_point(cfg.n);
                    return bridge_residual_D(r, x, default_delta(), default_kappa(),
                                             cfg.precision);
                });
                if (rel > worst) worst = rel;
            }
            record_numeric("kernels/bridge-d/r=" + std::to_string(r),
                           "additive-multiplicative normalization bridge", worst, samples,
                           tol_bridge);
        }
        for (int l = 1; l <= std::min(cfg.lmax, 3); ++l) {
            Real worst(0);
            int samples = 5;
            for (int s = 0; s < samples; ++s) {
                Real rel = sampler.admissible([&] {
                    Point x = sampler.box_point(cfg.n);
                    return bridge_residual_H(l, x, default_delta(), default_kappa(),
                                             cfg.precision);
                });
                if (rel > worst) worst = rel;
            }
            record_numeric("kernels/bridge-h/l=" + std::to_string(l),
                           "additive-multiplicative normalization bridge", worst, samples,
                           tol_bridge);
        }
    }

    // ---- kajihara ----

    void suite_kajihara() {
        Cplx q = Cplx(Real(parse_rat(cfg.q)));
        Cplx t = Cplx(Real(parse_rat(cfg.t)));
        int order = std::min(cfg.rmax, 3);
        auto sample_vars = [&](int count, double base) {
            Point z;
            for (int i = 0; i < count; ++i) z.push_back(Cplx(base) + Cplx(0.3) * sampler.box());
            return z;
        };
        for (auto [m, nn] : {std::pair{2, 1}, {2, 2}}) {
            Real worst(0);
            int samples = 3;
            for (int s = 0; s < samples; ++s) {
                Real rel = sampler.admissible([&] {
                    Point z = sample_vars(m, 0.5);
                    Point w = sample_vars(nn, 0.45);
                    Point a = sample_vars(m, 0.85);
                    Point b = sample_vars(nn, 0.9);
                    return kajihara_residual(order, z, w, a, b, q).max_rel;
                });
                if (rel > worst) worst = rel;
            }
            record_numeric("kajihara/general/m=" + std::to_string(m) + ",n=" + std::to_string(nn),
                           "hypergeometric duality transformation", worst, samples, tol_op);
        }
        for (auto [preset, label] :
             {std::pair{KajiharaPreset::dd, "dd"}, {KajiharaPreset::hh, "hh"},
              {KajiharaPreset::hd, "hd"}}) {
            Real worst(0);
            int samples = 3;
            for (int s = 0; s < samples; ++s) {
                Real rel = sampler.admissible([&] {
                    Point z = sample_vars(2, 0.5);
                    Point w = sample_vars(2, 0.45);
                    return kajihara_preset_residual(preset, order, z, w, q, t).max_rel;
                });
                if (rel > worst) worst = rel;
            }
            record_numeric(std::string("kajihara/preset-") + label,
                           "duality transformation kernel preset", worst, samples, tol_op);
        }
    }

    // ---- macdonald ----

    void suite_macdonald() {
        QTPair qt{parse_rat(cfg.q), parse_rat(cfg.t)};
        int n = std::min(cfg.n, 3);
        int wmax = std::min(cfg.lmax, 3);

        for (int w = 1; w <= wmax; ++w) {
            for (const auto& lam : partitions_of(w, n)) {
                std::string key;
                for (int v : lam) key += std::to_string(v);
                for (int r = 1; r <= std::min(n, cfg.rmax); ++r)
                    record_exact("macdonald/eigen-d/lambda=" + key + ",r=" + std::to_string(r),
                                 "factorized family eigenvalue", eigen_check_D(lam, r, n, qt));
                for (int l = 1; l <= std::min(wmax, 2); ++l)
                    record_exact("macdonald/eigen-h/lambda=" + key + ",l=" + std::to_string(l),
                                 "extending family eigenvalue", eigen_check_H(lam, l, n, qt));
            }
        }
        for (int l = 1; l <= wmax; ++l)
            record_exact("macdonald/one-row/l=" + std::to_string(l),
                         "one-row eigenfunction normalization", g_matches_one_row(l, n, qt));
        record_exact("macdonald/scalar-wronski", "scalar alternating sum",
                     scalar_wronski_check(std::max(cfg.lmax, 4), n, qt, Partition{2, 1}));
        record_exact("macdonald/operator-wronski", "operator alternating sum",
                     operator_wronski_trig_check(std::min(cfg.lmax, 3), std::min(n, 2), qt));
        record_exact("macdonald/genfun", "generating-function eigenvalue",
                     genfun_check(Partition{2, 1}, n, qt, std::min(cfg.lmax, 3)));
    }

    void run(const std::string& name) {
        if (name == "hirota" || name == "all") suite_hirota();
        if (name == "commute" || name == "all") suite_commute();
        if (name == "wronski" || name == "all") suite_wronski();
        if (name == "expansions" || name == "all") suite_expansions();
        if (name == "keyidentity" || name == "all") suite_keyidentity();
        if (name == "kernels" || name == "all") suite_kernels();
        if (name == "kajihara" || name == "all") suite_kajihara();
        if (name == "macdonald" || name == "all") suite_macdonald();
    }
};

}  // namespace

std::vector<std::string> suite_names() {
    return {"hirota",      "commute", "wronski",  "expansions", "keyidentity",
            "kernels",     "kajihara", "macdonald", "all"};
}

bool is_suite_name(const std::string& name) {
    for (const auto& s : suite_names())
        if (s == name) return true;
    return false;
}

IdentityReport run_suite(const SuiteConfig& cfg) {
    if (!is_suite_name(cfg.suite)) throw invalid_parameters("unknown suite: " + cfg.suite);
    if (cfg.n < 1 || cfg.lmax < 1 || cfg.rmax < 1)
        throw invalid_parameters("n, lmax, rmax must be positive");
    if (cfg.precision < 16) throw invalid_parameters("precision below 16 digits");
    SuiteRunner runner(cfg);
    runner.run(cfg.suite);
    return runner.report;
}

}  // namespace ruijops
