#pragma once
// Error taxonomy. The CLI maps input_error -> exit 2, inapplicable_error -> exit 3;
// api_error marks library misuse (bad degrees, bad indices) and should not escape
// a correctly written caller.

#include <stdexcept>
#include <string>

namespace sasakian {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or invalid input: unparseable file, algebra failing validation,
// malformed omega, unknown builtin.
struct input_error : error {
    using error::error;
};

// Preconditions of a requested analysis are unmet on otherwise valid input
// (omega^3 = 0 for the circle bundle, hard Lefschetz failure for the
// formality machinery, wrong top degree, ...).
struct inapplicable_error : error {
    using error::error;
};

// Out-of-contract library call: mismatched degrees, index out of range.
struct api_error : error {
    using error::error;
};

} // namespace sasakian
