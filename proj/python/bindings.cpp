#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "coxkit/curvature.hpp"
#include "coxkit/errors.hpp"
#include "coxkit/export.hpp"
#include "coxkit/suite.hpp"

namespace py = pybind11;
using namespace coxkit;

namespace {

// A ball together with its reflection table; the table points into the ball.
class Group {
 public:
  Group(const std::string& type, std::optional<int> radius, std::size_t cap, const std::string& backend) {
    BallOptions options;
    options.element_cap = cap;
    if (backend == "descent")
      options.backend = BallBackend::kDescent;
    else if (backend == "tits")
      options.backend = BallBackend::kTits;
    else if (backend == "model")
      options.backend = BallBackend::kModel;
    else
      throw ValidationError("unknown backend '" + backend + "'");
    const CoxeterMatrix cm = CoxeterMatrix::parse(type);
    if (radius)
      ball_ = std::make_unique<GroupBall>(GroupBall::enumerate(cm, *radius, options));
    else if (cm.is_finite())
      ball_ = std::make_unique<GroupBall>(full_group(cm, options));
    else
      throw ValidationError(type + " is infinite: give a radius");
    table_ = std::make_unique<ReflectionTable>(reflections_in_ball(*ball_));
  }

  const GroupBall& ball() const { return *ball_; }
  const ReflectionTable& table() const { return *table_; }

  Poset order(const std::string& kind, std::optional<int> k) const {
    auto need_k = [&] {
      if (!k) throw ValidationError("order '" + kind + "' needs k");
      return *k;
    };
    if (kind == "weak") return left_weak_poset(*ball_);
    if (kind == "bruhat") return bruhat_poset(*ball_);
    if (kind == "lk") return k_intermediate_poset(*table_, need_k());
    if (kind == "absolute") return k_absolute_poset(k_absolute_length_all(*table_, need_k())).poset;
    if (kind == "torder") return t_order_poset(*table_);
    throw ValidationError("unknown order '" + kind + "'");
  }

 private:
  std::unique_ptr<GroupBall> ball_;
  std::unique_ptr<ReflectionTable> table_;
};

ElementId locate(const Group& g, const py::object& word) {
  if (py::isinstance<py::str>(word)) return g.ball().locate(parse_word(word.cast<std::string>()));
  return g.ball().locate(word.cast<Word>());
}

py::object json_value(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Coxeter group balls, k-intermediate orders and their checks";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ValidationError>(m, "ValidationError", error.ptr());
  py::register_exception<OutOfBallError>(m, "OutOfBallError", error.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", error.ptr());
  py::register_exception<DomainError>(m, "DomainError", error.ptr());
  py::register_exception<IoError>(m, "IoError", error.ptr());

  py::class_<Poset>(m, "Poset")
      .def("__len__", &Poset::size)
      .def("leq", &Poset::leq)
      .def("covers", &Poset::cover_edges)
      .def("maximal", &Poset::maximal_elements)
      .def("minimal", &Poset::minimal_elements)
      .def("relation_size", &Poset::relation_size)
      .def("height", &Poset::height)
      .def("label", &Poset::label)
      .def("interval", &Poset::interval)
      .def_readonly("origin", &Poset::origin)
      .def_readonly("descriptor", &Poset::descriptor)
      .def_property_readonly("rank", [](const Poset& p) { return p.rank; })
      .def("is_graded", [](const Poset& p) { return is_graded(p).graded; })
      .def("rank_sizes", [](const Poset& p) { return rank_sizes(p); })
      .def("strongly_sperner", [](const Poset& p) { return strong_sperner_check(p).strongly_sperner; })
      .def("shellability", [](const Poset& p) { return to_string(shellability(order_complex(p)).verdict); },
           "verdict for the order complex of the open interval")
      .def("isomorphic", [](const Poset& p, const Poset& q) { return poset_isomorphic(p, q).isomorphic; })
      .def("is_lattice", [](const Poset& p) { return is_lattice(p); })
      .def("to_dot", [](const Poset& p, const std::string& name) { return to_dot(p, name); }, py::arg("name") = "poset")
      .def("to_json", [](const Poset& p) { return json_value(to_json(p)); });

  py::class_<Group>(m, "Group")
      .def(py::init<const std::string&, std::optional<int>, std::size_t, const std::string&>(), py::arg("type"),
           py::arg("radius") = py::none(), py::arg("cap_elements") = kDefaultElementCap,
           py::arg("backend") = "descent")
      .def("__len__", [](const Group& g) { return g.ball().size(); })
      .def_property_readonly("name", [](const Group& g) { return g.ball().matrix().name(); })
      .def_property_readonly("rank", [](const Group& g) { return g.ball().rank(); })
      .def_property_readonly("radius", [](const Group& g) { return g.ball().radius(); })
      .def_property_readonly("complete", [](const Group& g) { return g.ball().is_complete_group(); })
      .def("length", [](const Group& g, ElementId w) { return g.ball().length(w); })
      .def("label", [](const Group& g, ElementId w) { return g.ball().label(w); })
      .def("word", [](const Group& g, ElementId w) { return g.ball().normal_form(w); })
      .def("locate", &locate, "element id of a word given as 's0s1' or [0, 1]")
      .def("inverse", [](const Group& g, ElementId w) { return g.ball().inverse(w); })
      .def("multiply", [](const Group& g, ElementId u, ElementId v) { return g.ball().multiply(u, v); })
      .def("reflections", [](const Group& g) { return g.table().reflections; })
      .def("t_k", [](const Group& g, int k) { return t_k_set(g.table(), k); })
      .def("coxeter_elements", [](const Group& g) { return coxeter_elements(g.ball()); })
      .def("order", &Group::order, py::arg("kind"), py::arg("k") = py::none(),
           "weak, bruhat, lk, absolute or torder")
      .def("lk", [](const Group& g, int k) { return k_absolute_length_all(g.table(), k).lk; })
      .def("gen_poly", [](const Group& g, int k) { return gen_poly(k_absolute_length_all(g.table(), k)).coeffs; })
      .def(
          "curvature",
          [](const Group& g, int k) {
            const auto graph = undirected_omega(omega_graph(g.ball(), t_k_set(g.table(), k)));
            std::vector<std::tuple<ElementId, ElementId, std::string>> out;
            for (const auto& r : curvature_spectrum(graph, safe_edges(graph)).records)
              out.emplace_back(r.x, r.y, to_string(r.kappa));
            return out;
          },
          "(x, y, kappa) over edges of the k-Bruhat graph away from the ball boundary")
      .def("to_json", [](const Group& g) { return json_value(to_json(g.ball())); });

  m.def("dihedral_formula", [](int mm, int k) { return dihedral_formula_poly(mm, k).coeffs; });
  m.def("is_log_concave", [](const CoeffVector& c) { return is_log_concave(c).log_concave; });
  m.def("is_unimodal", &is_unimodal);
  m.def("format_poly", &format_poly);
  m.def("nc_lattice", [](int n) { return nc_lattice(n).poset; });
  m.def("known_checks", &known_checks);
  m.def(
      "run_check_suite",
      [](const std::vector<std::string>& types, const std::vector<std::string>& checks, std::optional<std::string> k,
         std::optional<int> radius, const std::string& ideals, const std::string& out_dir) {
        CheckSuiteConfig c;
        c.types = types;
        c.checks = {checks.begin(), checks.end()};
        if (k) c.k_range = parse_k_range(*k);
        c.radius = radius;
        if (ideals != "tk" && ideals != "all") throw ValidationError("ideals is tk or all");
        c.ideals = ideals == "all" ? IdealMode::kAll : IdealMode::kTk;
        c.out_dir = out_dir;
        return json_value(run_check_suite(c).to_json(c));
      },
      py::arg("types"), py::arg("checks"), py::arg("k") = py::none(), py::arg("radius") = py::none(),
      py::arg("ideals") = "tk", py::arg("out_dir") = "");
}
