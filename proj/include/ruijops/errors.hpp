#pragma once

#include <stdexcept>
#include <string>

namespace ruijops {

// Construction rejected: bad sizes, out-of-range orders, invalid periods or
// parameters (e.g. an elliptic period ratio without positive imaginary part).
struct invalid_parameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A series or product cannot reach the requested accuracy within its term cap.
struct precision_unreachable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A denominator bracket fell below the admissibility guard at an evaluation
// point.  Samplers catch this and redraw; direct evaluation propagates it.
struct pole_proximity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two spectral points that must be distinguished coincide, so a triangular
// eigenfunction solve has no unique solution at these parameters.
struct degenerate_spectrum : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation promised to be exact over the rationals left a nonzero
// remainder or produced a non-symmetric result.  Indicates a logic error,
// never a rounding artifact.
struct exactness_violation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace ruijops
