#include "ruijops/report.hpp"

#include <iomanip>

#include <json.hpp>

namespace ruijops {

bool IdentityReport::passed() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::size_t IdentityReport::failed_count() const {
    std::size_t k = 0;
    for (const auto& c : checks)
        if (!c.pass) ++k;
    return k;
}

std::string IdentityReport::to_json() const {
    nlohmann::json j;
    j["suite"] = config.suite;
    j["config"] = {
        {"flavor", flavor_name(config.flavor)},
        {"n", config.n},
        {"lmax", config.lmax},
        {"rmax", config.rmax},
        {"precision", config.precision},
        {"seed", config.seed},
        {"q", config.q},
        {"t", config.t},
        {"tol", config.tol},
    };
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        j["checks"].push_back({
            {"id", c.id},
            {"identity", c.identity},
            {"pass", c.pass},
            {"exact", c.exact},
            {"samples", c.samples},
            {"max_residual", c.max_residual},
            {"tol", c.tol},
            {"elapsed_ms", c.elapsed_ms},
        });
    }
    j["status"] = passed() ? "pass" : "fail";
    return j.dump(2);
}

void IdentityReport::print_table(std::ostream& os) const {
    for (const auto& c : checks) {
        os << (c.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(44) << c.id
           << "  residual " << c.max_residual;
        if (c.exact)
            os << " (exact)";
        else
            os << " (tol " << c.tol << ", " << c.samples << " samples)";
        os << "\n";
    }
    os << (passed() ? "status: pass" : "status: FAIL") << " (" << checks.size() << " checks, "
       << failed_count() << " failed)\n";
}

}  // namespace ruijops
