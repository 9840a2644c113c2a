#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wsim {

enum class ErrorKind {
  NotSemimetric,
  DuplicateLabel,
  ShapeMismatch,
  BackendMismatch,
  ParseError,
  AmbiguousRanking,
  ZeroMissing,
  Duplicates,
  CardinalityMismatch,
  LabelMismatch,
  NotBijective,
  NotStrictlyIncreasing,
  DomainMismatch,
  SpaceMismatch,
  NotWeakSimilarity,
  EmptyDomain,
  NoPositiveElement,
  NonzeroAtZero,
  NonPositiveValue,
  DomainGap,
  NotPositiveDefinite,
  NonpositiveExponent,
  BadSequence,
  InvalidArgument,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by Space construction; (row, col) is the first offending entry.
class NotSemimetricError : public Error {
 public:
  NotSemimetricError(std::size_t row, std::size_t col, const std::string& what)
      : Error(ErrorKind::NotSemimetric, what), row_(row), col_(col) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

}  // namespace wsim
