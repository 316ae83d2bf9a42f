#pragma once

#include <stdexcept>
#include <string>

namespace flip {

// Failure conditions surfaced by the library. Each maps 1:1 onto a
// machine-readable code so callers (and the CLI) can branch without
// string-matching messages.
enum class errc {
  invalid_multiplicity,    // fiber with alpha < 1
  non_coprime_slope,       // alpha > 1 with gcd(alpha, |beta|) != 1
  invalid_invariants,      // negative genus and similar structural breakage
  lens_parameter_unknown,  // lens space recognized but q not derivable
  wrong_fiber_count,       // operation needs exactly one exceptional fiber
  wrong_case,              // operation needs a different construction case
  exponent_count_mismatch, // exponent list length != fiber count
  unassigned_generator,    // word evaluation hit a generator with no image
  not_generating,          // tuple does not generate the group
  length_mismatch,         // tuples of different length compared
  bad_tuple,               // empty tuple or element id out of range
  relator_violation,       // assignment fails to kill a relator
  inconsistent_descriptor, // splitting descriptor does not fit the invariants
  bad_group_table,         // multiplication table fails the group axioms
  parse_error,             // malformed JSON or schema violation
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_multiplicity: return "invalid_multiplicity";
    case errc::non_coprime_slope: return "non_coprime_slope";
    case errc::invalid_invariants: return "invalid_invariants";
    case errc::lens_parameter_unknown: return "lens_parameter_unknown";
    case errc::wrong_fiber_count: return "wrong_fiber_count";
    case errc::wrong_case: return "wrong_case";
    case errc::exponent_count_mismatch: return "exponent_count_mismatch";
    case errc::unassigned_generator: return "unassigned_generator";
    case errc::not_generating: return "not_generating";
    case errc::length_mismatch: return "length_mismatch";
    case errc::bad_tuple: return "bad_tuple";
    case errc::relator_violation: return "relator_violation";
    case errc::inconsistent_descriptor: return "inconsistent_descriptor";
    case errc::bad_group_table: return "bad_group_table";
    case errc::parse_error: return "parse_error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace flip
