#include "wsim/cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "wsim/error.hpp"
#include "wsim/io.hpp"

namespace wsim::cli {

namespace {

using io::json;
namespace fs = std::filesystem;

struct Options {
  std::string in;
  std::string x;
  std::string y;
  std::string f;
  std::string map;
  std::string map2;
  std::string out;
  std::string format = "json";
  std::string name;
  std::string p = "1/2";
  std::string length = "1";
  std::vector<std::string> at;
  std::optional<double> epsilon;
  std::size_t limit = kDefaultEnumerationLimit;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  bool metric = false;
  bool ultrametric = false;
};

struct Outcome {
  json result = json::object();
  int code = kOk;
};

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int k = 0; k < length; ++k) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[k]);
  return hex.str();
}

class Invocation {
 public:
  explicit Invocation(const Options& opt) : opt_(opt) {}

  json& inputs() { return inputs_; }

  Space space(const std::string& role, const std::string& path) {
    if (path.empty()) throw Error(ErrorKind::InvalidArgument, "missing --" + role + " <file>");
    record(role, path);
    std::optional<Backend> backend;
    if (opt_.epsilon) {
      bool csv = fs::path(path).extension() == ".csv";
      if (csv) backend = Backend::floating(*opt_.epsilon);
    }
    Space s = io::read_space(path, backend);
    if (opt_.epsilon && !s.backend().is_exact() && !backend) {
      s = Space::create(std::vector<std::string>(s.labels().begin(), s.labels().end()), s.matrix(),
                        Backend::floating(*opt_.epsilon));
    }
    return s;
  }

  FunctionTable table(const std::string& path) {
    if (path.empty()) throw Error(ErrorKind::InvalidArgument, "missing --f <file>");
    record("f", path);
    return io::read_function_table(path);
  }

  json report(const std::string& role, const std::string& path) {
    record(role, path);
    return json::parse(io::read_text(path));
  }

 private:
  void record(const std::string& role, const std::string& path) {
    inputs_[role] = json{{"path", path}, {"sha256", sha256_hex(io::read_text(path))}};
  }

  const Options& opt_;
  json inputs_ = json::object();
};

json triple_json(const Space& s, const Verdict<TripleWitness>& v) {
  json j{{"holds", v.holds()}};
  if (v.witness) {
    const auto& w = *v.witness;
    j["witness"] = json{{"x", s.label(w.x)},
                        {"z", s.label(w.z)},
                        {"y", s.label(w.y)},
                        {"distances",
                         {s.at(w.x, w.y).to_string(), s.at(w.x, w.z).to_string(), s.at(w.z, w.y).to_string()}}};
  }
  return j;
}

Outcome cmd_check(const Options& opt, Invocation& inv) {
  Space s = inv.space("in", opt.in);
  Outcome o;
  o.result["points"] = s.size();
  o.result["backend"] = io::backend_to_json(s.backend());
  o.result["semimetric"] = true;
  const bool both = !opt.metric && !opt.ultrametric;
  if (opt.metric || both) {
    auto v = is_metric(s);
    o.result["metric"] = triple_json(s, v);
    if (opt.metric && !v) o.code = kFalseVerdict;
  }
  if (opt.ultrametric || both) {
    auto v = is_ultrametric(s);
    o.result["ultrametric"] = triple_json(s, v);
    if (opt.ultrametric && !v) o.code = kFalseVerdict;
  }
  return o;
}

Outcome cmd_dset(const Options& opt, Invocation& inv) {
  Space s = inv.space("in", opt.in);
  RankStructure rs = rank_structure(s);
  Outcome o;
  json values = json::array();
  for (const auto& v : rs.distances.values) values.push_back(v.to_string());
  json ranks = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < s.size(); ++j) row.push_back(rs.ranks.at(i, j));
    ranks.push_back(std::move(row));
  }
  o.result = json{{"labels", std::vector<std::string>(s.labels().begin(), s.labels().end())},
                  {"distances", std::move(values)},
                  {"ranks", std::move(ranks)}};
  return o;
}

Outcome not_equivalent() {
  Outcome o;
  o.result = json{{"found", false}, {"reason", "not weakly equivalent"}};
  o.code = kFalseVerdict;
  return o;
}

Outcome cmd_morph(const std::string& action, const Options& opt, Invocation& inv) {
  Space x = inv.space("x", opt.x);
  Space y = inv.space("y", opt.y);
  Outcome o;
  if (action == "find") {
    auto ws = find_weak_similarity(x, y);
    if (!ws) return not_equivalent();
    o.result = json{{"found", true}, {"morphism", io::morphism_report(*ws)}};
  } else if (action == "enum") {
    auto all = enumerate_weak_similarities(x, y, opt.limit);
    json list = json::array();
    for (const auto& ws : all) list.push_back(io::morphism_report(ws));
    o.result = json{{"count", all.size()},
                    {"limit", opt.limit},
                    {"truncated", all.size() == opt.limit},
                    {"morphisms", std::move(list)}};
    if (all.empty()) o.code = kFalseVerdict;
  } else if (action == "classify") {
    std::optional<WeakSimilarity> ws;
    if (!opt.map.empty()) {
      ws = io::weak_similarity_from_report(inv.report("map", opt.map), x, y);
    } else {
      ws = find_weak_similarity(x, y);
    }
    if (!ws) return not_equivalent();
    o.result = json{{"found", true},
                    {"classification", io::classification_to_json(classify(*ws))},
                    {"morphism", io::morphism_report(*ws)}};
  } else if (action == "verify") {
    if (opt.map.empty()) throw Error(ErrorKind::InvalidArgument, "morph verify needs --map <report>");
    auto parsed = io::parse_morphism_report(inv.report("map", opt.map), x, y);
    auto verdict = verify(x, y, parsed.map, parsed.scaling);
    o.result["verified"] = verdict.holds();
    if (verdict.witness) {
      const auto& w = *verdict.witness;
      auto image = parsed.scaling(y.at(parsed.map[w.x], parsed.map[w.y]));
      o.result["witness"] = json{{"x", x.label(w.x)},
                                 {"y", x.label(w.y)},
                                 {"lhs", x.at(w.x, w.y).to_string()},
                                 {"rhs", image ? image->to_string() : "undefined"}};
      o.code = kFalseVerdict;
    }
  } else if (action == "factorize") {
    std::vector<WeakSimilarity> pairs;
    if (!opt.map.empty()) {
      pairs.push_back(io::weak_similarity_from_report(inv.report("map", opt.map), x, y));
      pairs.push_back(opt.map2.empty() ? pairs.front()
                                       : io::weak_similarity_from_report(inv.report("map2", opt.map2), x, y));
    } else {
      pairs = enumerate_weak_similarities(x, y, opt.limit);
      if (pairs.empty()) return not_equivalent();
    }
    json factors = json::array();
    bool all_isometries = true;
    for (std::size_t k = pairs.size() > 1 ? 1 : 0; k < pairs.size(); ++k) {
      auto factor = factorize(pairs.front(), pairs[k]);
      all_isometries = all_isometries && factor.classification().kind == Classification::Kind::Isometry;
      factors.push_back(io::morphism_report(factor));
    }
    o.result = json{{"factors", std::move(factors)}, {"all_isometries", all_isometries}};
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown morph action '" + action + "'");
  }
  return o;
}

void emit_space(const Options& opt, const Space& s, Outcome& o) {
  if (opt.out.empty()) {
    o.result["space"] = io::space_to_json(s);
  } else {
    io::write_space(opt.out, s);
    o.result["out"] = opt.out;
    o.result["out_sha256"] = sha256_hex(io::read_text(opt.out));
  }
}

Outcome cmd_transform(const std::string& action, const Options& opt, Invocation& inv, std::ostream& err) {
  Space s = inv.space("in", opt.in);
  Outcome o;
  if (action == "apply") {
    FunctionTable f = inv.table(opt.f);
    Space t = apply_function(s, f);
    auto back = WeakSimilarity::make(s, t, identity_similarity(s).map(),
                                     increasing_bijection(distance_set(t), distance_set(s)));
    emit_space(opt, t, o);
    o.result["realization"] = io::morphism_report(back);
    o.result["metric"] = triple_json(t, is_metric(t));
  } else if (action == "snowflake") {
    Scalar p = Scalar::parse_exact(opt.p);
    Space t = snowflake(s, p.exact(), opt.epsilon.value_or(kDefaultEpsilon));
    const bool changed = !(t.backend() == s.backend());
    if (changed) err << "warning: snowflake output switched to the float backend\n";
    emit_space(opt, t, o);
    o.result["backend"] = io::backend_to_json(t.backend());
    o.result["backend_changed"] = changed;
    o.result["metric"] = triple_json(t, is_metric(t));
    o.result["ultrametric"] = triple_json(t, is_ultrametric(t));
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown transform action '" + action + "'");
  }
  return o;
}

const char* reason_name(MetricPreservingFailure::Reason r) {
  switch (r) {
    case MetricPreservingFailure::Reason::NonzeroAtZero: return "nonzero at zero";
    case MetricPreservingFailure::Reason::NotPositive: return "not positive";
    case MetricPreservingFailure::Reason::NotIncreasing: return "not increasing";
    case MetricPreservingFailure::Reason::NotSubadditive: return "not subadditive";
  }
  return "unknown";
}

Outcome cmd_subadditive(const std::string& action, const Options& opt, Invocation& inv) {
  FunctionTable f = inv.table(opt.f);
  Outcome o;
  if (action == "check") {
    auto verdict = check_generalized_subadditivity(f);
    o.result["subadditive"] = verdict.holds();
    if (verdict.witness) {
      o.result["violation"] = io::violation_to_json(*verdict.witness);
      o.code = kFalseVerdict;
    }
    auto mp = is_metric_preserving(f);
    json mpj{{"holds", mp.holds()}};
    if (mp.witness) mpj["reason"] = reason_name(mp.witness->reason), mpj["at"] = mp.witness->at.to_string();
    o.result["metric_preserving"] = std::move(mpj);
  } else if (action == "hull-eval") {
    if (opt.at.empty()) throw Error(ErrorKind::InvalidArgument, "hull-eval needs at least one --at <value>");
    SubadditiveHull h = hull(f);
    json values = json::array();
    for (const auto& text : opt.at) {
      Scalar x = Scalar::parse_exact(text);
      Cover cover = hull_cover(h, x);
      json parts = json::array();
      for (const auto& part : cover.parts) parts.push_back(part.to_string());
      values.push_back(json{{"x", x.to_string()}, {"psi", cover.cost.to_string()}, {"cover", std::move(parts)}});
    }
    o.result["values"] = std::move(values);
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown subadditive action '" + action + "'");
  }
  return o;
}

fs::path sibling(const fs::path& out, const std::string& suffix) {
  fs::path p = out;
  p.replace_filename(out.stem().string() + suffix);
  return p;
}

Outcome cmd_family(const Options& opt) {
  if (opt.out.empty()) throw Error(ErrorKind::InvalidArgument, "family gen needs --out <file>");
  if (opt.n == 0) throw Error(ErrorKind::InvalidArgument, "family gen needs --n <k> with k >= 1");
  Outcome o;
  json meta{{"family", opt.name}, {"n", opt.n}};
  auto write_pair = [&](const GeneratedPair& pair, const FamilySpec& spec) {
    io::write_space(opt.out, pair.x);
    const fs::path ypath = sibling(opt.out, ".y.json");
    const fs::path rpath = sibling(opt.out, ".realization.json");
    io::write_space(ypath, pair.y);
    io::write_text(rpath, io::morphism_report(pair.realization).dump(2) + "\n");
    meta["truncation"] = "finite truncation of an infinite family";
    meta["sequences"] = json{{"r", spec.r_formula}, {"p", spec.p_formula}};
    meta["declared_limits"] = json{{"r", spec.r_limit}, {"p", spec.p_limit}};
    meta["default_sequences"] = true;
    o.result["y_out"] = ypath.string();
    o.result["realization_out"] = rpath.string();
  };
  if (opt.name == "2_6") {
    FamilySpec spec = FamilySpec::defaults("2_6", opt.n);
    write_pair(example_2_6(spec), spec);
  } else if (opt.name == "2_6_star") {
    FamilySpec spec = FamilySpec::defaults("2_6_star", opt.n);
    write_pair(example_2_6_star(spec), spec);
  } else if (opt.name == "grid") {
    io::write_space(opt.out, segment_grid(opt.n, Scalar::parse_exact(opt.length).exact()));
    meta["length"] = opt.length;
  } else if (opt.name == "snowflake") {
    io::write_space(opt.out, snowflake_segment(opt.n, Scalar::parse_exact(opt.p).exact(),
                                               opt.epsilon.value_or(kDefaultEpsilon)));
    meta["p"] = opt.p;
  } else if (opt.name == "random_metric") {
    io::write_space(opt.out, random_metric(opt.n, opt.seed));
    meta["seed"] = opt.seed;
  } else if (opt.name == "random_ultrametric") {
    io::write_space(opt.out, random_ultrametric(opt.n, opt.seed));
    meta["seed"] = opt.seed;
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown family '" + opt.name + "'");
  }
  o.result["metadata"] = std::move(meta);
  o.result["out"] = opt.out;
  o.result["out_sha256"] = sha256_hex(io::read_text(opt.out));
  return o;
}

void print_text(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) print_text(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); })) {
    for (std::size_t k = 0; k < j.size(); ++k) print_text(j[k], prefix + "[" + std::to_string(k) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Finite semimetric spaces: axioms, weak similarities, distance transforms"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--epsilon", opt.epsilon, "Float backend tolerance");
  };

  auto* check = app.add_subcommand("check", "Validate a space and test metric axioms");
  check->add_option("--in", opt.in, "Space file")->required();
  check->add_flag("--metric", opt.metric, "Test the triangle inequality");
  check->add_flag("--ultrametric", opt.ultrametric, "Test the ultrametric inequality");
  add_format(check);

  auto* dset = app.add_subcommand("dset", "Distance set and rank matrix");
  dset->add_option("--in", opt.in, "Space file")->required();
  add_format(dset);

  auto* morph = app.add_subcommand("morph", "Weak similarity search and algebra");
  morph->require_subcommand(1);
  for (const char* action : {"find", "enum", "classify", "verify", "factorize"}) {
    auto* sub = morph->add_subcommand(action);
    sub->add_option("--x", opt.x, "Source space file")->required();
    sub->add_option("--y", opt.y, "Target space file")->required();
    sub->add_option("--map", opt.map, "Morphism report file");
    sub->add_option("--map2", opt.map2, "Second morphism report file");
    sub->add_option("--limit", opt.limit, "Enumeration limit");
    add_format(sub);
  }

  auto* transform = app.add_subcommand("transform", "Distance transforms");
  transform->require_subcommand(1);
  auto* apply = transform->add_subcommand("apply", "Apply a function table entrywise");
  apply->add_option("--in", opt.in)->required();
  apply->add_option("--f", opt.f)->required();
  apply->add_option("--out", opt.out);
  add_format(apply);
  auto* snow = transform->add_subcommand("snowflake", "Raise every distance to the power p");
  snow->add_option("--in", opt.in)->required();
  snow->add_option("--p", opt.p)->required();
  snow->add_option("--out", opt.out);
  add_format(snow);

  auto* sub = app.add_subcommand("subadditive", "Generalized subadditivity and the subadditive hull");
  sub->require_subcommand(1);
  auto* sub_check = sub->add_subcommand("check");
  sub_check->add_option("--f", opt.f)->required();
  add_format(sub_check);
  auto* sub_eval = sub->add_subcommand("hull-eval");
  sub_eval->add_option("--f", opt.f)->required();
  sub_eval->add_option("--at", opt.at, "Evaluation points")->required();
  add_format(sub_eval);

  auto* family = app.add_subcommand("family", "Generated families");
  family->require_subcommand(1);
  auto* gen = family->add_subcommand("gen");
  gen->add_option("--name", opt.name)
      ->required()
      ->check(CLI::IsMember({"2_6", "2_6_star", "grid", "snowflake", "random_metric", "random_ultrametric"}));
  gen->add_option("--n", opt.n)->required();
  gen->add_option("--seed", opt.seed);
  gen->add_option("--p", opt.p);
  gen->add_option("--length", opt.length);
  gen->add_option("--out", opt.out)->required();
  add_format(gen);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  const auto started = std::chrono::steady_clock::now();
  Invocation inv(opt);
  Outcome outcome;
  std::string command;
  try {
    if (check->parsed()) {
      command = "check";
      outcome = cmd_check(opt, inv);
    } else if (dset->parsed()) {
      command = "dset";
      outcome = cmd_dset(opt, inv);
    } else if (morph->parsed()) {
      auto* chosen = morph->get_subcommands().front();
      command = "morph " + chosen->get_name();
      outcome = cmd_morph(chosen->get_name(), opt, inv);
    } else if (transform->parsed()) {
      auto* chosen = transform->get_subcommands().front();
      command = "transform " + chosen->get_name();
      outcome = cmd_transform(chosen->get_name(), opt, inv, err);
    } else if (sub->parsed()) {
      auto* chosen = sub->get_subcommands().front();
      command = "subadditive " + chosen->get_name();
      outcome = cmd_subadditive(chosen->get_name(), opt, inv);
    } else {
      command = "family gen";
      outcome = cmd_family(opt);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();

  json report{{"command", command},
              {"args", args},
              {"inputs", inv.inputs()},
              {"exit_code", outcome.code},
              {"result", std::move(outcome.result)}};
  if (opt.format == "text") {
    print_text(report, "", out);
    out << "elapsed_ms: " << io::format_double(elapsed_ms) << "\n";
  } else {
    json full{{"report", std::move(report)}, {"timing", {{"elapsed_ms", elapsed_ms}}}};
    out << full.dump(2) << "\n";
  }
  return outcome.code;
}

}  // namespace wsim::cli
