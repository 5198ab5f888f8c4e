#pragma once

#include <stdexcept>
#include <string>

namespace dircuts {

// Bad caller-supplied data: malformed files, out-of-range ids, violated
// preconditions.  CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured search limit was exceeded.  Raised instead of silently
// returning a possibly-wrong answer.  CLI maps this to exit code 3.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input claimed to satisfy a guarantee (e.g. "this is a valid solution of a
// reduced instance") but structurally cannot be one.  CLI maps this to exit
// code 2.
struct ContractViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dircuts
