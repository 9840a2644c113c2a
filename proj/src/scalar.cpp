#include "wsim/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "wsim/error.hpp"

namespace wsim {

namespace {

[[noreturn]] void parse_fail(std::string_view text) {
  throw Error(ErrorKind::ParseError, "cannot parse number '" + std::string(text) + "'");
}

// Decimal with optional sign, fraction and exponent, parsed without rounding.
Rational parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  long scale = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) ++scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) parse_fail(text);
  long exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    std::string exp_text(text.substr(pos));
    if (exp_text.empty()) parse_fail(text);
    char* end = nullptr;
    exponent = std::strtol(exp_text.c_str(), &end, 10);
    if (end == exp_text.c_str() || *end != '\0') parse_fail(text);
    pos = text.size();
  }
  if (pos != text.size()) parse_fail(text);

  mpz_class numerator(digits, 10);
  mpz_class ten_pow;
  long shift = exponent - scale;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational q = shift >= 0 ? Rational(numerator * ten_pow) : Rational(numerator, ten_pow);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string trim(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto last = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(first, last - first + 1));
}

}  // namespace

Scalar::Scalar(const Rational& q) : value_(q) {
  std::get<Rational>(value_).canonicalize();
}

Scalar Scalar::approx(double value, double epsilon) { return Scalar(Approx{value, epsilon}); }

Scalar Scalar::ratio(long num, long den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  return Scalar(Rational(num, den));
}

Scalar Scalar::parse_exact(std::string_view raw) {
  std::string text = trim(raw);
  if (text.empty()) parse_fail(raw);
  auto slash = text.find('/');
  if (slash == std::string::npos) return Scalar(parse_decimal(text));
  Rational num = parse_decimal(std::string_view(text).substr(0, slash));
  Rational den = parse_decimal(std::string_view(text).substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
  return Scalar(Rational(num / den));
}

Scalar Scalar::parse(std::string_view raw, const Backend& backend) {
  if (backend.is_exact()) return parse_exact(raw);
  std::string text = trim(raw);
  if (text.find('/') != std::string::npos) {
    return parse_exact(text).in_backend(backend);
  }
  char* end = nullptr;
  double v = std::strtod(text.c_str(), &end);
  if (text.empty() || *end != '\0' || !std::isfinite(v)) parse_fail(raw);
  return approx(v, backend.epsilon);
}

const Rational& Scalar::exact() const {
  if (auto* q = std::get_if<Rational>(&value_)) return *q;
  throw Error(ErrorKind::BackendMismatch, "float value has no exact representation");
}

double Scalar::to_double() const {
  if (auto* q = std::get_if<Rational>(&value_)) return q->get_d();
  return std::get<Approx>(value_).value;
}

double Scalar::epsilon() const {
  if (auto* a = std::get_if<Approx>(&value_)) return a->epsilon;
  return 0.0;
}

Backend Scalar::backend() const {
  return is_exact() ? Backend::rational() : Backend::floating(epsilon());
}

Scalar Scalar::in_backend(const Backend& backend) const {
  if (backend.is_exact()) {
    if (!is_exact()) throw Error(ErrorKind::BackendMismatch, "cannot convert float value to rational backend");
    return *this;
  }
  return approx(to_double(), backend.epsilon);
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

std::string Scalar::to_string() const {
  if (auto* q = std::get_if<Rational>(&value_)) return rational_to_string(*q);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", std::get<Approx>(value_).value);
  return buf;
}

namespace {

template <typename ExactOp, typename FloatOp>
Scalar combine(const Scalar& a, const Scalar& b, ExactOp exact_op, FloatOp float_op) {
  if (a.is_exact() && b.is_exact()) return Scalar(Rational(exact_op(a.exact(), b.exact())));
  return Scalar::approx(float_op(a.to_double(), b.to_double()), std::max(a.epsilon(), b.epsilon()));
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); },
                 [](double x, double y) { return x + y; });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x - y); },
                 [](double x, double y) { return x - y; });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x * y); },
                 [](double x, double y) { return x * y; });
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_exact() ? b.exact() == 0 : b.to_double() == 0.0) {
    throw Error(ErrorKind::InvalidArgument, "division by zero");
  }
  return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x / y); },
                 [](double x, double y) { return x / y; });
}

std::weak_ordering compare(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) {
    int c = cmp(a.exact(), b.exact());
    return c < 0 ? std::weak_ordering::less : c > 0 ? std::weak_ordering::greater : std::weak_ordering::equivalent;
  }
  double x = a.to_double();
  double y = b.to_double();
  double eps = std::max(a.epsilon(), b.epsilon());
  double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
  if (std::fabs(x - y) <= eps * scale) return std::weak_ordering::equivalent;
  return x < y ? std::weak_ordering::less : std::weak_ordering::greater;
}

bool numeric_less(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() < b.exact();
  return a.to_double() < b.to_double();
}

bool identical(const Scalar& a, const Scalar& b) {
  if (a.is_exact() != b.is_exact()) return false;
  if (a.is_exact()) return a.exact() == b.exact();
  return a.to_double() == b.to_double() && a.epsilon() == b.epsilon();
}

Scalar max(const Scalar& a, const Scalar& b) { return numeric_less(a, b) ? b : a; }

namespace {

std::optional<mpz_class> exact_root(const mpz_class& value, unsigned long degree) {
  mpz_class root;
  if (mpz_root(root.get_mpz_t(), value.get_mpz_t(), degree) == 0) return std::nullopt;
  return root;
}

}  // namespace

std::optional<Rational> exact_power(const Rational& base, const Rational& exponent) {
  if (exponent <= 0) throw Error(ErrorKind::NonpositiveExponent, "exponent must be positive");
  if (base < 0) return std::nullopt;
  if (base == 0) return Rational(0);
  if (!exponent.get_den().fits_ulong_p() || !exponent.get_num().fits_ulong_p()) return std::nullopt;
  unsigned long degree = exponent.get_den().get_ui();
  unsigned long power = exponent.get_num().get_ui();
  auto num_root = exact_root(base.get_num(), degree);
  auto den_root = exact_root(base.get_den(), degree);
  if (!num_root || !den_root) return std::nullopt;
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), num_root->get_mpz_t(), power);
  mpz_pow_ui(den.get_mpz_t(), den_root->get_mpz_t(), power);
  Rational result(num, den);
  result.canonicalize();
  return result;
}

}  // namespace wsim
