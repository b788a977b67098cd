#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ordkit {

// One code per contract violation named by the library's operations.
// Codes marked "internal" flag conditions that certified inputs can never
// produce; seeing one means a bug, not bad input.
enum class ErrorCode {
  // structure validation
  NotCommutative,
  NotAssociative,
  NotIdempotent,
  NoMinimum,
  NoMaximum,
  NoMeet,
  NoJoin,
  AbsorptionFailure,
  NotDistributive,
  UnknownElement,
  SizeLimit,
  SizeOverflow,
  MalformedTree,
  // filters and duality
  NotSeparable,
  RoundTripFailure,   // internal
  // sigma-discrete
  InfinityNotAllowed,
  NotBelow,
  NotSubsemilattice,
  NonTermination,     // internal
  DiscretenessViolation, // internal
  // chain products, gates, leaps
  NotMeetClosed,
  NotJoinClosed,
  NoGatePoint,        // internal for convex inputs
  NotDisjoint,
  NonConvergence,     // internal
  FamilyViolation,    // internal for convex inputs
  DegenerateFilterPair,
  JumpChainInfeasible, // internal; see max_leap_count
  EmptySet,
  CoverViolation,     // internal
  BoundViolation,     // internal
  LawViolation,       // internal
  NoLeapFound,        // internal
  PreconditionViolation,
  // io
  ParseError,
  CertificationError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::vector<int> witness = {})
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const { return code_; }
  // Indices of the elements that witness the violation, when there are any.
  const std::vector<int>& witness() const { return witness_; }

 private:
  ErrorCode code_;
  std::vector<int> witness_;
};

}  // namespace ordkit
