#include "wsim/space.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "wsim/error.hpp"

namespace wsim {

Space Space::create(std::vector<std::string> labels, const Matrix& matrix, const Backend& backend) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorKind::ShapeMismatch, "a space needs at least one point");
  if (matrix.size() != n) {
    throw Error(ErrorKind::ShapeMismatch, "matrix has " + std::to_string(matrix.size()) + " rows for " +
                                              std::to_string(n) + " labels");
  }
  for (const auto& row : matrix) {
    if (row.size() != n) throw Error(ErrorKind::ShapeMismatch, "matrix is not square");
  }
  std::set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) throw Error(ErrorKind::DuplicateLabel, "label '" + label + "' repeats");
  }

  auto data = std::make_shared<Data>();
  data->backend = backend;
  data->entries.resize(n * n);
  const Scalar zero = Scalar(0).in_backend(backend);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Scalar value = matrix[i][j].in_backend(backend);
      const auto where = "d(" + labels[i] + "," + labels[j] + ")";
      if (i == j) {
        if (value != zero) throw NotSemimetricError(i, j, where + " = " + value.to_string() + " is not zero");
        data->entries[i * n + j] = zero;
        continue;
      }
      if (i > j) continue;
      Scalar mirrored = matrix[j][i].in_backend(backend);
      if (value != mirrored) {
        throw NotSemimetricError(i, j, where + " = " + value.to_string() + " differs from d(" + labels[j] + "," +
                                           labels[i] + ") = " + mirrored.to_string());
      }
      if (compare(value, zero) != std::weak_ordering::greater) {
        throw NotSemimetricError(i, j, where + " = " + value.to_string() + " is not positive");
      }
      data->entries[i * n + j] = value;
      data->entries[j * n + i] = value;
    }
  }
  data->sorted_order.resize(n);
  std::iota(data->sorted_order.begin(), data->sorted_order.end(), std::size_t{0});
  std::sort(data->sorted_order.begin(), data->sorted_order.end(),
            [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
  data->labels = std::move(labels);
  return Space(std::move(data));
}

std::optional<std::size_t> Space::index_of(const std::string& label) const {
  const auto& labels = data_->labels;
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

Matrix Space::matrix() const {
  Matrix out(size(), std::vector<Scalar>(size()));
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) out[i][j] = at(i, j);
  }
  return out;
}

bool operator==(const Space& a, const Space& b) {
  if (a.data_ == b.data_) return true;
  if (a.data_->labels != b.data_->labels || !(a.backend() == b.backend())) return false;
  return std::equal(a.data_->entries.begin(), a.data_->entries.end(), b.data_->entries.begin(),
                    [](const Scalar& x, const Scalar& y) { return identical(x, y); });
}

std::optional<std::size_t> DistanceSet::find(const Scalar& value) const {
  auto it = std::lower_bound(values.begin(), values.end(), value,
                             [](const Scalar& a, const Scalar& b) { return compare(a, b) < 0; });
  if (it == values.end() || *it != value) return std::nullopt;
  return static_cast<std::size_t>(it - values.begin());
}

}  // namespace wsim
