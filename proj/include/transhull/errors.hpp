#pragma once

#include <stdexcept>
#include <string>

namespace transhull {

// Malformed input: bad file syntax, out-of-range entries, failed axioms.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A theorem hypothesis does not hold for the given input.  Carries the
// violated predicate and a witness in the message.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A property guaranteed by construction failed to verify.  Always a bug.
struct InternalCheckError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace transhull
