#pragma once

#include <stdexcept>
#include <string>

namespace upo {

/// Failure categories surfaced by the library. The CLI maps these onto
/// process exit codes (parse/io -> 2, budget_exceeded -> 3, the rest -> 1).
enum class errc {
  cycle,             // antisymmetry violated by the transitive closure
  index,             // element index out of range
  not_a_lattice,     // some pair lacks a glb or lub
  not_distributive,  // distributivity fails, witness triple attached
  budget_exceeded,   // enumeration refused by a configured cap
  shape,             // mismatched carriers / family sizes
  not_disjoint,      // ideal and filter intersect
  order,             // order precondition violated (e.g. p <= q where p !<= q required)
  not_monotone,      // map fails monotonicity
  iso_failure,       // expected isomorphism did not verify (library bug)
  theorem_failure,   // a theorem-guaranteed property failed (library bug)
  parse,             // malformed input file
  io,                // filesystem error
  canceled,          // cooperative cancellation
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::cycle: return "CycleError";
    case errc::index: return "IndexError";
    case errc::not_a_lattice: return "NotALattice";
    case errc::not_distributive: return "NotDistributive";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::shape: return "ShapeError";
    case errc::not_disjoint: return "NotDisjoint";
    case errc::order: return "OrderError";
    case errc::not_monotone: return "NotMonotone";
    case errc::iso_failure: return "IsoFailure";
    case errc::theorem_failure: return "TheoremFailure";
    case errc::parse: return "ParseError";
    case errc::io: return "IoError";
    case errc::canceled: return "Canceled";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace upo
