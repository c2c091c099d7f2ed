#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ruijops/suites.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Verification suites for the commuting difference-operator families"};

    ruijops::SuiteConfig cfg;
    std::string suite = "all";
    std::string flavor = "elliptic";
    std::string json_path;

    std::string suites_help;
    for (const auto& s : ruijops::suite_names()) {
        if (!suites_help.empty()) suites_help += "|";
        suites_help += s;
    }

    app.add_option("suite", suite, "Suite to run (" + suites_help + ")")
        ->check(CLI::IsMember(ruijops::suite_names()));
    app.add_option("--flavor", flavor, "Bracket flavor: elliptic, trig, rational")
        ->check(CLI::IsMember({"elliptic", "trig", "rational"}));
    app.add_option("--n", cfg.n, "Number of variables")->check(CLI::PositiveNumber);
    app.add_option("--lmax", cfg.lmax, "Largest degree of the extending family")
        ->check(CLI::PositiveNumber);
    app.add_option("--rmax", cfg.rmax, "Largest order of the factorized family")
        ->check(CLI::PositiveNumber);
    app.add_option("--precision", cfg.precision, "Working decimal digits (min 16)");
    app.add_option("--seed", cfg.seed, "Sampling seed");
    app.add_option("--q", cfg.q, "Rational deformation parameter, e.g. 3/5");
    app.add_option("--t", cfg.t, "Rational deformation parameter, e.g. 2/7");
    app.add_option("--tol", cfg.tol, "Override tolerance for all numeric checks, e.g. 1e-30");
    app.add_option("--json", json_path, "Write the report as JSON to this path");

    CLI11_PARSE(app, argc, argv);

    cfg.suite = suite;
    try {
        cfg.flavor = ruijops::parse_flavor(flavor);
        ruijops::IdentityReport report = ruijops::run_suite(cfg);
        report.print_table(std::cout);
        if (!json_path.empty()) {
            std::ofstream out(json_path);
            if (!out) {
                std::cerr << "cannot write " << json_path << "\n";
                return 1;
            }
            out << report.to_json() << "\n";
        }
        return report.passed() ? 0 : 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}
