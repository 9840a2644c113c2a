#include "wsim/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "wsim/error.hpp"

namespace wsim::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

Scalar scalar_from_json(const json& j, const Backend& backend) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>(), backend);
  if (j.is_number_integer()) return Scalar(Rational(j.dump())).in_backend(backend);
  if (j.is_number_float()) return Scalar::parse(j.dump(), backend);
  malformed("expected a number or numeric string, got " + j.dump());
}

json scalar_to_json(const Scalar& s) { return s.to_string(); }

std::string trim(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream stream(line);
  std::string cell;
  while (std::getline(stream, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

template <typename F>
auto guarded(F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const json::exception& e) {
    malformed(e.what());
  }
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    if (std::strtod(buf, nullptr) == value) break;
  }
  return buf;
}

json backend_to_json(const Backend& backend) {
  if (backend.is_exact()) return "rational";
  return json{{"float", {{"epsilon", format_double(backend.epsilon)}}}};
}

Backend backend_from_json(const json& j) {
  return guarded([&] {
    if (j.is_string() && j.get<std::string>() == "rational") return Backend::rational();
    if (j.is_object() && j.contains("float")) {
      const json& f = j.at("float");
      double eps = kDefaultEpsilon;
      if (f.is_object() && f.contains("epsilon")) {
        const json& e = f.at("epsilon");
        eps = e.is_string() ? Scalar::parse_exact(e.get<std::string>()).to_double() : e.get<double>();
      }
      if (!(eps > 0)) malformed("epsilon must be positive");
      return Backend::floating(eps);
    }
    malformed("unknown backend " + j.dump());
  });
}

json space_to_json(const Space& space) {
  json matrix = json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < space.size(); ++j) row.push_back(scalar_to_json(space.at(i, j)));
    matrix.push_back(std::move(row));
  }
  return json{{"labels", std::vector<std::string>(space.labels().begin(), space.labels().end())},
              {"backend", backend_to_json(space.backend())},
              {"matrix", std::move(matrix)}};
}

Space space_from_json(const json& j) {
  return guarded([&] {
    if (!j.is_object() || !j.contains("labels") || !j.contains("matrix")) {
      malformed("space JSON needs \"labels\" and \"matrix\"");
    }
    Backend backend = j.contains("backend") ? backend_from_json(j.at("backend")) : Backend::rational();
    auto labels = j.at("labels").get<std::vector<std::string>>();
    Matrix matrix;
    for (const auto& row : j.at("matrix")) {
      if (!row.is_array()) malformed("matrix rows must be arrays");
      std::vector<Scalar> values;
      for (const auto& cell : row) values.push_back(scalar_from_json(cell, backend));
      matrix.push_back(std::move(values));
    }
    return Space::create(std::move(labels), matrix, backend);
  });
}

std::string space_to_csv(const Space& space) {
  std::string out;
  for (std::size_t i = 0; i < space.size(); ++i) out += (i ? "," : "") + space.label(i);
  out += '\n';
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = 0; j < space.size(); ++j) out += (j ? "," : "") + space.at(i, j).to_string();
    out += '\n';
  }
  return out;
}

Space space_from_csv(const std::string& text, const Backend& backend) {
  std::stringstream stream(text);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(stream, line)) {
    if (trim(line).empty()) continue;
    rows.push_back(split_csv_line(line));
  }
  if (rows.empty()) malformed("CSV input is empty");
  std::vector<std::string> labels = rows.front();
  Matrix matrix;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    std::vector<Scalar> values;
    for (const auto& cell : rows[r]) values.push_back(Scalar::parse(cell, backend));
    matrix.push_back(std::move(values));
  }
  return Space::create(std::move(labels), matrix, backend);
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) malformed("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path.string() + "'");
  out << text;
}

Space read_space(const std::filesystem::path& path, const std::optional<Backend>& backend) {
  const std::string text = read_text(path);
  if (path.extension() == ".csv") return space_from_csv(text, backend.value_or(Backend::rational()));
  json j = guarded([&] { return json::parse(text); });
  if (backend) j["backend"] = backend_to_json(*backend);
  return space_from_json(j);
}

void write_space(const std::filesystem::path& path, const Space& space) {
  if (path.extension() == ".csv") {
    write_text(path, space_to_csv(space));
  } else {
    write_text(path, space_to_json(space).dump(2) + "\n");
  }
}

json function_table_to_json(const FunctionTable& f) {
  json entries = json::array();
  for (const auto& [a, fa] : f.entries()) entries.push_back(json::array({scalar_to_json(a), scalar_to_json(fa)}));
  return json{{"entries", std::move(entries)}};
}

FunctionTable function_table_from_json(const json& j) {
  return guarded([&] {
    if (!j.is_object() || !j.contains("entries")) malformed("function table JSON needs \"entries\"");
    Backend backend = j.contains("backend") ? backend_from_json(j.at("backend")) : Backend::rational();
    std::vector<std::pair<Scalar, Scalar>> entries;
    for (const auto& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 2) malformed("each entry must be a pair");
      entries.emplace_back(scalar_from_json(e[0], backend), scalar_from_json(e[1], backend));
    }
    return FunctionTable::from_entries(std::move(entries));
  });
}

FunctionTable read_function_table(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  return function_table_from_json(guarded([&] { return json::parse(text); }));
}

json classification_to_json(const Classification& c) {
  switch (c.kind) {
    case Classification::Kind::Isometry: return "isometry";
    case Classification::Kind::Similarity: return json{{"similarity", c.ratio->to_string()}};
    case Classification::Kind::Generic: return "generic";
  }
  return "generic";
}

json morphism_report(const WeakSimilarity& ws) {
  json map = json::object();
  for (std::size_t i = 0; i < ws.source().size(); ++i) map[ws.source().label(i)] = ws.target().label(ws.map()[i]);
  json scaling = json::array();
  for (const auto& [t, v] : ws.scaling().pairs()) scaling.push_back(json::array({scalar_to_json(t), scalar_to_json(v)}));
  const Backend& backend = ws.source().backend().is_exact() ? ws.target().backend() : ws.source().backend();
  return json{{"map", std::move(map)},
              {"scaling", std::move(scaling)},
              {"classification", classification_to_json(ws.classification())},
              {"verified", verify(ws.source(), ws.target(), ws.map(), ws.scaling()).holds()},
              {"backend", backend_to_json(backend)}};
}

ParsedMorphism parse_morphism_report(const json& report, const Space& x, const Space& y) {
  return guarded([&] {
    if (!report.is_object() || !report.contains("map") || !report.contains("scaling")) {
      malformed("morphism report needs \"map\" and \"scaling\"");
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& [from, to] : report.at("map").items()) pairs.emplace_back(from, to.get<std::string>());
    PointMap map = point_map_from_labels(x, y, pairs);
    std::vector<std::pair<Scalar, Scalar>> table;
    for (const auto& e : report.at("scaling")) {
      if (!e.is_array() || e.size() != 2) malformed("scaling entries must be pairs");
      table.emplace_back(scalar_from_json(e[0], y.backend()), scalar_from_json(e[1], x.backend()));
    }
    return ParsedMorphism{std::move(map), ScalingFunction::from_pairs(std::move(table))};
  });
}

WeakSimilarity weak_similarity_from_report(const json& report, const Space& x, const Space& y) {
  auto parsed = parse_morphism_report(report, x, y);
  return WeakSimilarity::make(x, y, std::move(parsed.map), std::move(parsed.scaling));
}

json violation_to_json(const SubadditivityViolation& v) {
  json multiset = json::array();
  for (const auto& part : v.multiset) multiset.push_back(scalar_to_json(part));
  return json{{"x", scalar_to_json(v.x)},
              {"multiset", std::move(multiset)},
              {"lhs", scalar_to_json(v.lhs)},
              {"rhs", scalar_to_json(v.rhs)}};
}

}  // namespace wsim::io
