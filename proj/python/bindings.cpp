#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bqinv/bqinv.hpp"
#include "bqinv/io.hpp"

namespace py = pybind11;
using namespace bqinv;

namespace {

py::dict condition_dict(const ConditionResult& r) {
  py::list witnesses;
  for (const auto& w : r.witnesses) witnesses.append(py::make_tuple(w.args, w.residues));
  py::dict d;
  d["status"] = std::string(to_string(r.status));
  d["checked"] = r.checked;
  d["violations"] = r.violations;
  d["witnesses"] = witnesses;
  return d;
}

ConditionIIVariant variant_arg(const std::string& name) {
  const auto v = parse_variant(name);
  if (!v) throw Error(ErrorKind::InvalidInput, "unknown variant '" + name + "'");
  return *v;
}

Op op_arg(const std::string& name) {
  const auto op = parse_op(name);
  if (!op) throw Error(ErrorKind::UnknownOperator, "unknown operator '" + name + "'");
  return *op;
}

PointCensus census_arg(const py::dict& d) {
  auto get = [&](const char* key) { return d.contains(key) ? d[key].cast<std::int64_t>() : std::int64_t{0}; };
  return {get("t_plus"), get("t_minus"), get("w_plus"), get("w_minus"), get("b_plus"), get("b_minus")};
}

py::dict census_dict(const PointCensus& c) {
  py::dict d;
  d["t_plus"] = c.t_plus;
  d["t_minus"] = c.t_minus;
  d["w_plus"] = c.w_plus;
  d["w_minus"] = c.w_minus;
  d["b_plus"] = c.b_plus;
  d["b_minus"] = c.b_minus;
  return d;
}

std::vector<std::vector<Element>> coloring_values(const std::vector<Coloring>& cs) {
  std::vector<std::vector<Element>> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(c.values);
  return out;
}

}  // namespace

PYBIND11_MODULE(_bqinv, m) {
  m.doc() = "Finite biquandles, cocycle conditions and state-sum invariants";
  m.attr("__version__") = std::string(kVersion);

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def(
      "verify_biquandle",
      [](const RawTable& under, const RawTable& over, std::size_t cap, unsigned workers) {
        VerifyOptions opts;
        opts.cap_per_axiom = cap;
        opts.workers = workers;
        const auto report = verify_biquandle(under, over, opts);
        py::list violations;
        for (const auto& v : report.violations) violations.append(py::make_tuple(std::string(to_string(v.axiom)), v.witness));
        py::dict d;
        d["passed"] = report.passed;
        d["violations"] = violations;
        return d;
      },
      py::arg("under"), py::arg("over"), py::arg("cap") = 32, py::arg("workers") = 1);

  py::class_<FiniteBiquandle>(m, "Biquandle")
      .def_static("from_quandle", py::overload_cast<const RawTable&, unsigned>(&FiniteBiquandle::from_quandle),
                  py::arg("table"), py::arg("workers") = 1)
      .def_static(
          "from_tables",
          [](const RawTable& under, const RawTable& over) {
            return FiniteBiquandle::from_tables(Table::from_rows(under), Table::from_rows(over));
          },
          py::arg("under"), py::arg("over"))
      .def_static(
          "from_json", [](const std::string& text) { return io::biquandle_from_json(io::parse_json(text)); },
          py::arg("text"))
      .def_static(
          "load", [](const std::string& path) { return io::biquandle_from_json(io::parse_json(io::read_file(path), path)); },
          py::arg("path"))
      .def_property_readonly("size", &FiniteBiquandle::size)
      .def_property_readonly("under", [](const FiniteBiquandle& b) { return b.under().to_rows(); })
      .def_property_readonly("over", [](const FiniteBiquandle& b) { return b.over().to_rows(); })
      .def_property_readonly("is_quandle", &FiniteBiquandle::is_quandle_embedding)
      .def(
          "apply", [](const FiniteBiquandle& b, const std::string& op, Element x, Element y) { return b.apply(op_arg(op), x, y); },
          py::arg("op"), py::arg("x"), py::arg("y"))
      .def("singular_pairs", [](const FiniteBiquandle& b) { return singular_pairs(b); })
      .def(
          "homomorphisms",
          [](const FiniteBiquandle& src, const FiniteBiquandle& dst, std::size_t cap, bool iso) {
            HomomorphismOptions opts;
            opts.cap = cap;
            opts.isomorphisms_only = iso;
            const auto r = enumerate_homomorphisms(src, dst, opts);
            return py::make_tuple(r.maps, r.truncated);
          },
          py::arg("target"), py::arg("cap") = 1'000'000, py::arg("isomorphisms_only") = false)
      .def("__len__", &FiniteBiquandle::size)
      .def("__eq__", [](const FiniteBiquandle& a, const FiniteBiquandle& b) { return a == b; })
      .def("__repr__", [](const FiniteBiquandle& b) { return "<Biquandle n=" + std::to_string(b.size()) + ">"; });

  m.def(
      "canonical_word", [](const std::string& text) { return to_string(parse_word(text)); }, py::arg("text"));
  m.def(
      "eval_word",
      [](const std::string& text, const FiniteBiquandle& bq, const std::map<std::string, Element>& values) {
        Assignment a(values.begin(), values.end());
        return eval_word(parse_word(text), bq, a);
      },
      py::arg("word"), py::arg("biquandle"), py::arg("values"));

  py::class_<Cocycle3>(m, "Cocycle")
      .def(py::init<std::uint32_t, std::optional<std::size_t>>(), py::arg("modulus"), py::arg("n") = py::none())
      .def_static(
          "characteristic",
          [](std::uint32_t modulus, const std::vector<Triple>& support, std::optional<std::size_t> n) {
            std::vector<SupportEntry> entries;
            for (const auto& t : support) entries.push_back({t, 1});
            return make_characteristic_cocycle(modulus, entries, n).cocycle;
          },
          py::arg("modulus"), py::arg("support"), py::arg("n") = py::none())
      .def_static(
          "from_json", [](const std::string& text) { return io::cocycle_from_json(io::parse_json(text)).cocycle; },
          py::arg("text"))
      .def_static(
          "load", [](const std::string& path) { return io::cocycle_from_json(io::parse_json(io::read_file(path), path)).cocycle; },
          py::arg("path"))
      .def_property_readonly("modulus", &Cocycle3::modulus)
      .def("exponent", py::overload_cast<Element, Element, Element>(&Cocycle3::exponent, py::const_))
      .def("set_exponent", [](Cocycle3& c, Element a, Element b, Element d, std::int64_t e) { c.set_exponent({a, b, d}, e); })
      .def("support",
           [](const Cocycle3& c) {
             std::vector<std::pair<Triple, std::uint32_t>> out(c.support().begin(), c.support().end());
             return out;
           })
      .def("__eq__", [](const Cocycle3& a, const Cocycle3& b) { return a == b; });

  m.def(
      "check_condition_i",
      [](const Cocycle3& th, const FiniteBiquandle& bq) { return condition_dict(check_condition_i(th, bq)); },
      py::arg("cocycle"), py::arg("biquandle"));
  m.def(
      "check_condition_ii",
      [](const Cocycle3& th, const FiniteBiquandle& bq, const std::string& variant, unsigned workers) {
        CheckOptions opts;
        opts.workers = workers;
        return condition_dict(check_condition_ii(th, bq, variant_arg(variant), opts));
      },
      py::arg("cocycle"), py::arg("biquandle"), py::arg("variant") = "printed", py::arg("workers") = 1);
  m.def(
      "check_condition_iii",
      [](const Cocycle3& th, const FiniteBiquandle& bq) { return condition_dict(check_condition_iii(th, bq)); },
      py::arg("cocycle"), py::arg("biquandle"));

  py::class_<DiagramData>(m, "Diagram")
      .def_static(
          "from_json", [](const std::string& text) { return io::diagram_from_json(io::parse_json(text)); },
          py::arg("text"))
      .def_static(
          "load", [](const std::string& path) { return io::diagram_from_json(io::parse_json(io::read_file(path), path)); },
          py::arg("path"))
      .def_readonly("name", &DiagramData::name)
      .def_readonly("generators", &DiagramData::generators)
      .def_property_readonly("census", [](const DiagramData& d) { return census_dict(d.census); })
      .def("to_json", [](const DiagramData& d) { return io::diagram_to_json(d).dump(); });

  m.def(
      "colorings",
      [](const DiagramData& d, const FiniteBiquandle& bq, unsigned workers) {
        return coloring_values(solve_colorings(d, bq, {workers}));
      },
      py::arg("diagram"), py::arg("biquandle"), py::arg("workers") = 1);
  m.def(
      "coloring_count",
      [](const DiagramData& d, const FiniteBiquandle& bq, unsigned workers) { return coloring_count(d, bq, {workers}); },
      py::arg("diagram"), py::arg("biquandle"), py::arg("workers") = 1);
  m.def(
      "state_sum",
      [](const DiagramData& d, const FiniteBiquandle& bq, const Cocycle3& th, unsigned workers) {
        StateSumOptions opts;
        opts.workers = workers;
        opts.audit = true;
        const auto r = state_sum(d, bq, th, opts);
        std::vector<Coloring> nontrivial;
        for (const auto& cm : r.per_coloring)
          if (cm.exponent != 0) nontrivial.push_back(cm.coloring);
        py::dict out;
        out["polynomial"] = to_string(r.value);
        out["coeffs"] = r.value.coeffs();
        out["colorings"] = r.coloring_count;
        out["nontrivial"] = coloring_values(nontrivial);
        return out;
      },
      py::arg("diagram"), py::arg("biquandle"), py::arg("cocycle"), py::arg("workers") = 1);

  m.def(
      "f_star", [](const py::dict& census) { return f_star(census_arg(census)); }, py::arg("census"));
  m.def(
      "apply_h_move",
      [](const py::dict& census, int direction) { return census_dict(apply_h_move_census(census_arg(census), direction)); },
      py::arg("census"), py::arg("direction"));
}
