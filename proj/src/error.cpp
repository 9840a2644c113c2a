#include "wsim/error.hpp"

namespace wsim {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotSemimetric: return "NotSemimetric";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::BackendMismatch: return "BackendMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::AmbiguousRanking: return "AmbiguousRanking";
    case ErrorKind::ZeroMissing: return "ZeroMissing";
    case ErrorKind::Duplicates: return "Duplicates";
    case ErrorKind::CardinalityMismatch: return "CardinalityMismatch";
    case ErrorKind::LabelMismatch: return "LabelMismatch";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::NotStrictlyIncreasing: return "NotStrictlyIncreasing";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::NotWeakSimilarity: return "NotWeakSimilarity";
    case ErrorKind::EmptyDomain: return "EmptyDomain";
    case ErrorKind::NoPositiveElement: return "NoPositiveElement";
    case ErrorKind::NonzeroAtZero: return "NonzeroAtZero";
    case ErrorKind::NonPositiveValue: return "NonPositiveValue";
    case ErrorKind::DomainGap: return "DomainGap";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::NonpositiveExponent: return "NonpositiveExponent";
    case ErrorKind::BadSequence: return "BadSequence";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace wsim
