#pragma once

#include <cstdint>
#include <random>

#include "ruijops/errors.hpp"
#include "ruijops/mpcomplex.hpp"

namespace ruijops {

// Deterministic point source.  Coordinates are dyadic rationals produced
// directly from the raw mt19937_64 stream, so the sequence is identical on
// every platform and at every working precision.
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    // Uniform dyadic value in [-1, 1] with 53-bit resolution.
    Real unit_real() {
        std::uint64_t u = rng_() >> 11;
        return Real(u) / Real(std::uint64_t(1) << 52) - 1;
    }

    Cplx box() {
        Real re = unit_real();
        Real im = unit_real();
        return {re, im};
    }

    Point box_point(int n) {
        Point x;
        x.reserve(n);
        for (int i = 0; i < n; ++i) x.push_back(box());
        return x;
    }

    // Runs `attempt` until it completes without tripping a pole guard.
    // The attempt draws its own fresh coordinates from this sampler.
    template <typename F>
    auto admissible(F&& attempt) -> decltype(attempt()) {
        for (int tries = 0; tries < max_retries; ++tries) {
            try {
                return attempt();
            } catch (const pole_proximity&) {
            }
        }
        throw pole_proximity("no admissible sample found after retries");
    }

    static constexpr int max_retries = 100;

  private:
    std::mt19937_64 rng_;
};

}  // namespace ruijops
