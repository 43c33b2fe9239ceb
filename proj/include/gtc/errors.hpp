#pragma once

#include <stdexcept>

namespace gtc {

// A theorem hypothesis or input invariant does not hold (CLI exit 2).
struct HypothesisError : std::domain_error {
  using std::domain_error::domain_error;
};

// An identity proof is structurally broken: an index cannot be resolved
// at replay time. Distinct from a proof that merely fails to close.
struct ProofError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed word text or certificate document (CLI exit 2).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A quotient search exhausted its candidate space (CLI exit 3).
struct SearchExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace gtc
