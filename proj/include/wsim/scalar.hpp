#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace wsim {

using Rational = mpq_class;

/// Default relative tolerance of the float backend.
inline constexpr double kDefaultEpsilon = 1e-9;

/// Numeric backend of a Space. Rational comparisons are exact; float values
/// compare equal when |a-b| <= epsilon * max(1, |a|, |b|).
struct Backend {
  enum class Kind { Rational, Float };

  Kind kind = Kind::Rational;
  double epsilon = 0.0;

  static Backend rational() { return {}; }
  static Backend floating(double epsilon = kDefaultEpsilon) { return {Kind::Float, epsilon}; }

  bool is_exact() const { return kind == Kind::Rational; }
  bool operator==(const Backend&) const = default;
};

/// A nonnegative distance value: an exact rational or a float carrying its
/// comparison tolerance.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(const Rational& q);  // NOLINT(google-explicit-constructor)
  Scalar(long v) : Scalar(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : Scalar(Rational(v)) {}   // NOLINT(google-explicit-constructor)

  static Scalar approx(double value, double epsilon = kDefaultEpsilon);
  static Scalar ratio(long num, long den);

  /// Parses "p/q", an integer, or a decimal (optionally with exponent)
  /// exactly into a rational.
  static Scalar parse_exact(std::string_view text);
  /// Parses into the given backend: exact for rational, strtod for float.
  static Scalar parse(std::string_view text, const Backend& backend);

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  const Rational& exact() const;
  double to_double() const;
  /// Zero for exact values.
  double epsilon() const;
  Backend backend() const;

  /// Converts to the float backend (no-op for rational target when exact).
  Scalar in_backend(const Backend& backend) const;

  /// "p/q" (or "p" for integers) when exact, 17 significant digits otherwise.
  std::string to_string() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  /// Three-way comparison honoring the float tolerance of either operand.
  friend std::weak_ordering compare(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b) { return compare(a, b) == 0; }
  friend std::weak_ordering operator<=>(const Scalar& a, const Scalar& b) { return compare(a, b); }

  /// Total order on the raw numeric value, no tolerance. Use for sorting.
  friend bool numeric_less(const Scalar& a, const Scalar& b);
  /// Bitwise identity: same backend, same value, same epsilon.
  friend bool identical(const Scalar& a, const Scalar& b);

 private:
  struct Approx {
    double value;
    double epsilon;
  };
  explicit Scalar(Approx a) : value_(a) {}

  std::variant<Rational, Approx> value_;
};

std::weak_ordering compare(const Scalar& a, const Scalar& b);
bool numeric_less(const Scalar& a, const Scalar& b);
bool identical(const Scalar& a, const Scalar& b);
Scalar max(const Scalar& a, const Scalar& b);

/// Exact p-th power of a rational when it is rational, otherwise nullopt.
std::optional<Rational> exact_power(const Rational& base, const Rational& exponent);

std::string rational_to_string(const Rational& q);

}  // namespace wsim
