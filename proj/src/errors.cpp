#include "twisted_hodge/errors.hpp"

namespace twisted_hodge {

std::string_view errorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DimensionError: return "DimensionError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotIntegrable: return "NotIntegrable";
    case ErrorKind::NotALieAlgebra: return "NotALieAlgebra";
    case ErrorKind::SizeGuard: return "SizeGuard";
    case ErrorKind::NotBottChernClosed: return "NotBottChernClosed";
    case ErrorKind::BadMetric: return "BadMetric";
    case ErrorKind::NotKahler: return "NotKahler";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::UnknownModel: return "UnknownModel";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::NotAChainMap: return "NotAChainMap";
    case ErrorKind::EquivalenceViolation: return "EquivalenceViolation";
    case ErrorKind::InequalityViolation: return "InequalityViolation";
    case ErrorKind::AdjointMismatch: return "AdjointMismatch";
    case ErrorKind::HodgeIsoViolation: return "HodgeIsoViolation";
    case ErrorKind::DualityViolation: return "DualityViolation";
    case ErrorKind::KahlerIdentityViolation: return "KahlerIdentityViolation";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Unknown";
}

bool isInternalKind(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAChainMap:
    case ErrorKind::EquivalenceViolation:
    case ErrorKind::InequalityViolation:
    case ErrorKind::AdjointMismatch:
    case ErrorKind::HodgeIsoViolation:
    case ErrorKind::DualityViolation:
    case ErrorKind::KahlerIdentityViolation:
    case ErrorKind::InternalError:
      return true;
    default:
      return false;
  }
}

}  // namespace twisted_hodge
