#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twisted_hodge {

enum class ErrorKind {
  // Input / validation class: bad documents, bad twists, bad metrics.
  DivisionByZero,
  DimensionError,
  ParseError,
  NotIntegrable,
  NotALieAlgebra,
  SizeGuard,
  NotBottChernClosed,
  BadMetric,
  NotKahler,
  NotUnimodular,
  UnknownModel,
  NoWitness,
  // Internal assertion class: a theorem or construction invariant failed.
  NotAChainMap,
  EquivalenceViolation,
  InequalityViolation,
  AdjointMismatch,
  HodgeIsoViolation,
  DualityViolation,
  KahlerIdentityViolation,
  InternalError,
};

std::string_view errorKindName(ErrorKind kind);

/// True for the kinds that indicate an engine bug or a violated theorem
/// rather than bad input.
bool isInternalKind(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace twisted_hodge
