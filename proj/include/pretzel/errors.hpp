#pragma once

#include <stdexcept>

namespace pretzel {

// invalid pretzel parameters (parity rule, bounds)
struct invalid_knot_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// computation outside the supported domain (indefinite form, D != 1 mod 4, ...)
struct unsupported_error : std::domain_error {
    using std::domain_error::domain_error;
};

// request exceeds a documented size/safety limit
struct limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// broken internal invariant; indicates a bug, not bad input
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct singular_matrix_error : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace pretzel
