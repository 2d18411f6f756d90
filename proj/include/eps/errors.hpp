#pragma once

#include <stdexcept>

namespace eps {

// Two cyclotomic levels are incompatible (the source level must divide the
// target level).
struct level_mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A p-adic value is not known to enough digits for the requested evaluation.
// Nothing is ever silently truncated.
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// p = 2 is rejected throughout: the unit groups (Z/2^a Z)^x are not cyclic.
struct unsupported_prime_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A table or size bound was exceeded.
struct too_large_error : std::length_error {
    using std::length_error::length_error;
};

// An internal guarantee failed, e.g. a solver whose success is a theorem.
struct invariant_violation_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace eps
