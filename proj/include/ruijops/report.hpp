#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "ruijops/bracket.hpp"

namespace ruijops {

// One verified identity instance.  Residuals are serialized as decimal
// strings so reports stay faithful at any working precision; exact rational
// checks carry "0" and the exact flag.
struct CheckRecord {
    std::string id;        // unique instance label, e.g. "wronski/l=2"
    std::string identity;  // which identity the check exercises
    bool pass = false;
    bool exact = false;
    int samples = 0;
    std::string max_residual = "0";
    std::string tol = "0";
    double elapsed_ms = 0.0;
};

struct SuiteConfig {
    std::string suite = "all";
    Flavor flavor = Flavor::elliptic;
    int n = 3;
    int lmax = 3;
    int rmax = 3;
    unsigned precision = 64;
    std::uint64_t seed = 42;
    std::string q = "3/5";
    std::string t = "2/7";
    std::string tol;  // empty selects per-check defaults
};

struct IdentityReport {
    SuiteConfig config;
    std::vector<CheckRecord> checks;

    bool passed() const;
    std::size_t failed_count() const;

    std::string to_json() const;
    void print_table(std::ostream& os) const;
};

}  // namespace ruijops
