#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "wsim/families.hpp"
#include "wsim/morphisms.hpp"
#include "wsim/transforms.hpp"

namespace wsim::io {

using nlohmann::json;

/// Shortest decimal that reads back to the same double.
std::string format_double(double value);

json backend_to_json(const Backend& backend);
Backend backend_from_json(const json& j);

/// { "labels": [...], "backend": ..., "matrix": [[...]] } with string entries.
json space_to_json(const Space& space);
Space space_from_json(const json& j);

/// Header row of labels, then the square matrix.
std::string space_to_csv(const Space& space);
Space space_from_csv(const std::string& text, const Backend& backend = Backend::rational());

/// Reads JSON, or CSV when the extension is .csv. `backend` overrides the
/// file's backend for CSV input.
Space read_space(const std::filesystem::path& path, const std::optional<Backend>& backend = std::nullopt);
void write_space(const std::filesystem::path& path, const Space& space);

/// { "entries": [["a", "f_a"], ...] }
json function_table_to_json(const FunctionTable& f);
FunctionTable function_table_from_json(const json& j);
FunctionTable read_function_table(const std::filesystem::path& path);

json classification_to_json(const Classification& c);

/// { "map": {label: label}, "scaling": [[t, f_t]], "classification": ...,
///   "verified": true, "backend": ... }
json morphism_report(const WeakSimilarity& ws);
struct ParsedMorphism {
  PointMap map;
  ScalingFunction scaling;
};
/// Map and scaling of a report, without verification.
ParsedMorphism parse_morphism_report(const json& report, const Space& x, const Space& y);
/// Rebuilds and re-verifies a weak similarity between the given spaces.
WeakSimilarity weak_similarity_from_report(const json& report, const Space& x, const Space& y);

json violation_to_json(const SubadditivityViolation& v);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace wsim::io
