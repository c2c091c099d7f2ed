#pragma once

#include "ruijops/report.hpp"

namespace ruijops {

// Registered verification suites:
//   hirota       three-term bracket relation and oddness
//   commute      commutators within and across the two operator families
//   wronski      alternating D/H sum and its pointwise coefficient form
//   expansions   determinant and composition expansions of each family
//   keyidentity  the telescoping sum behind the coefficient cancellation
//   kernels      additive and multiplicative kernel identities plus the
//                additive/multiplicative normalization bridge
//   kajihara     hypergeometric duality transformation and its kernel presets
//   macdonald    exact rational eigenfunction checks
//   all          everything above
std::vector<std::string> suite_names();

bool is_suite_name(const std::string& name);

// Runs the named suite from the configuration; deterministic for a fixed
// config (timings aside).
IdentityReport run_suite(const SuiteConfig& cfg);

}  // namespace ruijops
