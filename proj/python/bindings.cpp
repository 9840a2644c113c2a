#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wsim/error.hpp"
#include "wsim/families.hpp"
#include "wsim/io.hpp"

namespace py = pybind11;

namespace {

using namespace wsim;

py::object fraction_type() { return py::module_::import("fractions").attr("Fraction"); }

Scalar to_scalar(const py::handle& value, const Backend& backend) {
  if (py::isinstance<py::str>(value)) return Scalar::parse(value.cast<std::string>(), backend);
  if (py::isinstance<py::bool_>(value)) throw Error(ErrorKind::ParseError, "booleans are not distances");
  if (py::isinstance<py::int_>(value)) return Scalar::parse(py::str(value).cast<std::string>(), backend);
  if (py::isinstance(value, fraction_type())) {
    auto num = py::str(value.attr("numerator")).cast<std::string>();
    auto den = py::str(value.attr("denominator")).cast<std::string>();
    return Scalar::parse(num + "/" + den, backend);
  }
  if (py::isinstance<py::float_>(value)) return Scalar::parse(py::repr(value).cast<std::string>(), backend);
  throw Error(ErrorKind::ParseError, "unsupported distance value " + py::repr(value).cast<std::string>());
}

Rational to_rational(const py::handle& value) { return to_scalar(value, Backend::rational()).exact(); }

py::object from_scalar(const Scalar& s) {
  if (!s.is_exact()) return py::float_(s.to_double());
  const Rational& q = s.exact();
  return fraction_type()(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
}

Backend make_backend(const std::string& name, double epsilon) {
  if (name == "rational") return Backend::rational();
  if (name == "float") return Backend::floating(epsilon);
  throw Error(ErrorKind::InvalidArgument, "backend must be 'rational' or 'float'");
}

py::object parse_json(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

std::string dump_json(const py::object& obj) {
  return py::module_::import("json").attr("dumps")(obj).cast<std::string>();
}

py::object triple(const Space& s, const Verdict<TripleWitness>& v) {
  if (v.holds()) return py::make_tuple(true, py::none());
  const auto& w = *v.witness;
  return py::make_tuple(false, py::make_tuple(s.label(w.x), s.label(w.z), s.label(w.y)));
}

std::vector<py::object> scalars(const std::vector<Scalar>& values) {
  std::vector<py::object> out;
  for (const auto& v : values) out.push_back(from_scalar(v));
  return out;
}

FunctionTable make_table(const std::vector<std::pair<py::object, py::object>>& entries, const std::string& backend,
                         double epsilon) {
  Backend b = make_backend(backend, epsilon);
  std::vector<std::pair<Scalar, Scalar>> converted;
  for (const auto& [a, fa] : entries) converted.emplace_back(to_scalar(a, b), to_scalar(fa, b));
  return FunctionTable::from_entries(std::move(converted));
}

}  // namespace

PYBIND11_MODULE(_wsim, m) {
  m.doc() = "Finite semimetric spaces: axiom checks, weak similarities and distance transforms.";

  static py::exception<Error> error(m, "WsimError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<Space>(m, "Space")
      .def(py::init([](std::vector<std::string> labels, const std::vector<std::vector<py::object>>& matrix,
                       const std::string& backend, double epsilon) {
             Backend b = make_backend(backend, epsilon);
             Matrix converted;
             for (const auto& row : matrix) {
               std::vector<Scalar> values;
               for (const auto& cell : row) values.push_back(to_scalar(cell, b));
               converted.push_back(std::move(values));
             }
             return Space::create(std::move(labels), converted, b);
           }),
           py::arg("labels"), py::arg("matrix"), py::arg("backend") = "rational",
           py::arg("epsilon") = kDefaultEpsilon)
      .def_property_readonly("labels", [](const Space& s) {
        return std::vector<std::string>(s.labels().begin(), s.labels().end());
      })
      .def_property_readonly("backend", [](const Space& s) { return s.backend().is_exact() ? "rational" : "float"; })
      .def_property_readonly("epsilon", [](const Space& s) { return s.backend().epsilon; })
      .def("__len__", &Space::size)
      .def("distance", [](const Space& s, const std::string& a, const std::string& b) {
        auto i = s.index_of(a);
        auto j = s.index_of(b);
        if (!i || !j) throw Error(ErrorKind::LabelMismatch, "unknown label");
        return from_scalar(s.at(*i, *j));
      })
      .def("matrix", [](const Space& s) {
        std::vector<std::vector<py::object>> out;
        for (const auto& row : s.matrix()) out.push_back(scalars(row));
        return out;
      })
      .def("to_json", [](const Space& s) { return parse_json(io::space_to_json(s).dump()); })
      .def_static("from_json", [](const py::object& obj) {
        return io::space_from_json(io::json::parse(dump_json(obj)));
      })
      .def("__eq__", [](const Space& a, const Space& b) { return a == b; })
      .def("__repr__", [](const Space& s) { return "<Space with " + std::to_string(s.size()) + " points>"; });

  py::class_<WeakSimilarity>(m, "WeakSimilarity")
      .def_property_readonly("source", &WeakSimilarity::source)
      .def_property_readonly("target", &WeakSimilarity::target)
      .def_property_readonly("map", [](const WeakSimilarity& ws) {
        std::map<std::string, std::string> out;
        for (std::size_t i = 0; i < ws.map().size(); ++i) out[ws.source().label(i)] = ws.target().label(ws.map()[i]);
        return out;
      })
      .def_property_readonly("scaling", [](const WeakSimilarity& ws) {
        std::vector<std::pair<py::object, py::object>> out;
        for (const auto& [t, v] : ws.scaling().pairs()) out.emplace_back(from_scalar(t), from_scalar(v));
        return out;
      })
      .def_property_readonly("classification", [](const WeakSimilarity& ws) {
        switch (ws.classification().kind) {
          case Classification::Kind::Isometry: return std::string("isometry");
          case Classification::Kind::Similarity: return std::string("similarity");
          case Classification::Kind::Generic: return std::string("generic");
        }
        return std::string("generic");
      })
      .def_property_readonly("ratio", [](const WeakSimilarity& ws) -> py::object {
        const auto& c = ws.classification();
        if (c.kind == Classification::Kind::Generic) return py::none();
        return from_scalar(*c.ratio);
      })
      .def("report", [](const WeakSimilarity& ws) { return parse_json(io::morphism_report(ws).dump()); })
      .def("__repr__", [](const WeakSimilarity& ws) { return "<WeakSimilarity " + to_string(ws.classification()) + ">"; });

  m.def("is_metric", [](const Space& s) { return triple(s, is_metric(s)); });
  m.def("is_ultrametric", [](const Space& s) { return triple(s, is_ultrametric(s)); });
  m.def("distance_set", [](const Space& s) { return scalars(distance_set(s).values); });
  m.def("rank_matrix", [](const Space& s) {
    RankMatrix r = rank_matrix(s);
    std::vector<std::vector<std::uint32_t>> out(r.n, std::vector<std::uint32_t>(r.n));
    for (std::size_t i = 0; i < r.n; ++i) {
      for (std::size_t j = 0; j < r.n; ++j) out[i][j] = r.at(i, j);
    }
    return out;
  });
  m.def("max_ultrametric_from_set", [](const std::vector<py::object>& values) {
    std::vector<Scalar> converted;
    for (const auto& v : values) converted.push_back(to_scalar(v, Backend::rational()));
    return max_ultrametric_from_set(converted);
  });
  m.def("coincreasing", [](const Space& d, const Space& rho) -> py::object {
    auto v = coincreasing(d, rho);
    if (v.holds()) return py::make_tuple(true, py::none());
    const auto& w = *v.witness;
    return py::make_tuple(false, py::make_tuple(d.label(w.x), d.label(w.y), d.label(w.z), d.label(w.w)));
  });

  m.def("find_weak_similarity", &find_weak_similarity, py::arg("x"), py::arg("y"));
  m.def("enumerate_weak_similarities",
        [](const Space& x, const Space& y, std::optional<std::size_t> limit) {
          return enumerate_weak_similarities(x, y, limit);
        },
        py::arg("x"), py::arg("y"), py::arg("limit") = kDefaultEnumerationLimit);
  m.def("verify", [](const Space& x, const Space& y, const py::dict& report) {
    auto parsed = io::parse_morphism_report(io::json::parse(dump_json(report)), x, y);
    return verify(x, y, parsed.map, parsed.scaling).holds();
  });
  m.def("invert", &invert);
  m.def("compose", &compose);
  m.def("factorize", &factorize);
  m.def("pullback", [](const Space& x, const Space& y, const std::map<std::string, std::string>& map) {
    std::vector<std::pair<std::string, std::string>> pairs(map.begin(), map.end());
    return pullback(x, y, point_map_from_labels(x, y, pairs));
  });

  m.def("check_generalized_subadditivity",
        [](const std::vector<std::pair<py::object, py::object>>& entries) -> py::object {
          auto v = check_generalized_subadditivity(make_table(entries, "rational", kDefaultEpsilon));
          if (v.holds()) return py::make_tuple(true, py::none());
          return py::make_tuple(false, parse_json(io::violation_to_json(*v.witness).dump()));
        });
  m.def("hull_eval", [](const std::vector<std::pair<py::object, py::object>>& entries, const py::object& x) {
    return from_scalar(hull_eval(hull(make_table(entries, "rational", kDefaultEpsilon)), to_scalar(x, Backend::rational())));
  });
  m.def("is_metric_preserving", [](const std::vector<std::pair<py::object, py::object>>& entries) {
    return is_metric_preserving(make_table(entries, "rational", kDefaultEpsilon)).holds();
  });
  m.def("apply_function",
        [](const Space& s, const std::vector<std::pair<py::object, py::object>>& entries) {
          return apply_function(s, make_table(entries, s.backend().is_exact() ? "rational" : "float",
                                              s.backend().is_exact() ? kDefaultEpsilon : s.backend().epsilon));
        });
  m.def("snowflake", [](const Space& s, const py::object& p, double epsilon) {
    return snowflake(s, to_rational(p), epsilon);
  }, py::arg("space"), py::arg("p"), py::arg("epsilon") = kDefaultEpsilon);

  m.def("segment_grid", [](std::size_t n, const py::object& length) { return segment_grid(n, to_rational(length)); },
        py::arg("n"), py::arg("length") = 1);
  m.def("snowflake_segment", [](std::size_t n, const py::object& p) { return snowflake_segment(n, to_rational(p)); });
  m.def("random_metric", &random_metric);
  m.def("random_ultrametric", &random_ultrametric);
  m.def("example_2_6", [](std::size_t n) {
    auto pair = example_2_6(FamilySpec::defaults("2_6", n));
    return py::make_tuple(pair.x, pair.y, pair.realization);
  });
  m.def("example_2_6_star", [](std::size_t n) {
    auto pair = example_2_6_star(FamilySpec::defaults("2_6_star", n));
    return py::make_tuple(pair.x, pair.y, pair.realization);
  });
  m.def("derive_partner", [](const Space& s, const std::string& mode, const py::object& ratio, std::uint64_t seed) {
    PartnerMode pm;
    if (mode == "scaled") {
      pm = PartnerMode::scaled(to_rational(ratio));
    } else if (mode == "relabeled") {
      pm = PartnerMode::relabeled(seed);
    } else if (mode == "distorted") {
      pm = PartnerMode::distorted(seed);
    } else {
      throw Error(ErrorKind::InvalidArgument, "mode must be scaled, relabeled or distorted");
    }
    auto partner = derive_partner(s, pm);
    return py::make_tuple(partner.space, partner.realization);
  }, py::arg("space"), py::arg("mode"), py::arg("ratio") = 1, py::arg("seed") = 0);
}
