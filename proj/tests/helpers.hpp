#pragma once

#include <string>
#include <vector>

#include "wsim/core.hpp"

namespace wsim::test {

/// n/d in lowest terms.
inline Rational rat(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline Scalar q(const char* text) { return Scalar::parse_exact(text); }

inline Space space_of(std::vector<std::string> labels, const std::vector<std::vector<const char*>>& rows,
                      const Backend& backend = Backend::rational()) {
  Matrix m;
  for (const auto& row : rows) {
    std::vector<Scalar> values;
    for (const char* cell : row) values.push_back(Scalar::parse(cell, backend));
    m.push_back(std::move(values));
  }
  return Space::create(std::move(labels), m, backend);
}

/// Three points a, b, c with d(a,b), d(a,c), d(b,c).
inline Space triangle(const char* ab, const char* ac, const char* bc) {
  return space_of({"a", "b", "c"}, {{"0", ab, ac}, {ab, "0", bc}, {ac, bc, "0"}});
}

inline std::vector<std::string> strings(const std::vector<Scalar>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

}  // namespace wsim::test
