#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "clifford3/bounds.hpp"
#include "clifford3/elmtrans.hpp"
#include "clifford3/error.hpp"
#include "clifford3/families.hpp"
#include "clifford3/invariants.hpp"
#include "clifford3/krawtchouk.hpp"
#include "clifford3/serialize.hpp"

namespace py = pybind11;
using namespace clifford3;

namespace {

PyObject* error_type = nullptr;

py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::int_ to_python_int(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

Rank3Query query(const Curve& curve, const BundleInvariants& inv, std::optional<std::int64_t> s1F,
                 bool use_delta, bool sharpening) {
  return Rank3Query{curve, inv, s1F, use_delta, sharpening};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact h0 bounds for vector bundles of rank 1, 2 and 3 on curves";

  error_type = PyErr_NewException("clifford3.Clifford3Error", PyExc_ValueError, nullptr);
  m.attr("Clifford3Error") = py::handle(error_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_steal<py::object>(
          PyObject_CallFunction(error_type, "s", e.what()));
      inst.attr("code") = std::string(to_string(e.code()));
      inst.attr("detail") = e.detail() ? py::object(py::int_(*e.detail())) : py::object(py::none());
      PyErr_SetObject(error_type, inst.ptr());
    }
  });

  py::class_<Curve>(m, "Curve")
      .def(py::init<std::int64_t, bool>(), py::arg("genus"), py::arg("hyperelliptic") = false)
      .def_property_readonly("genus", &Curve::genus)
      .def_property_readonly("hyperelliptic", &Curve::hyperelliptic)
      .def_property_readonly("canonical_degree", &Curve::canonical_degree)
      .def("__repr__", [](const Curve& c) {
        return "Curve(genus=" + std::to_string(c.genus()) +
               (c.hyperelliptic() ? ", hyperelliptic=True)" : ")");
      });

  py::class_<BundleInvariants>(m, "BundleInvariants")
      .def(py::init([](int rank, std::int64_t degree, std::vector<std::int64_t> s) {
             return BundleInvariants{rank, degree, std::move(s)};
           }),
           py::arg("rank"), py::arg("degree"), py::arg("s"))
      .def_static("line", &BundleInvariants::line, py::arg("degree"))
      .def_static("rank2", &BundleInvariants::rank2, py::arg("degree"), py::arg("s1"))
      .def_static("rank3", &BundleInvariants::rank3, py::arg("degree"), py::arg("s1"), py::arg("s2"))
      .def_readonly("rank", &BundleInvariants::rank)
      .def_readonly("degree", &BundleInvariants::degree)
      .def_readonly("s", &BundleInvariants::s)
      .def("semistable", &BundleInvariants::semistable)
      .def("stable", &BundleInvariants::stable)
      .def("to_dict", [](const BundleInvariants& inv) { return to_python(inv); })
      .def(py::self == py::self)
      .def("__repr__", [](const BundleInvariants& inv) { return nlohmann::json(inv).dump(); });

  py::class_<BoundResult>(m, "BoundResult")
      .def_readonly("value", &BoundResult::value)
      .def_property_readonly("case", [](const BoundResult& r) { return std::string(case_name(r.case_label)); })
      .def_readonly("exact", &BoundResult::exact)
      .def_readonly("assumptions", &BoundResult::assumptions)
      .def("to_dict", [](const BoundResult& r) { return to_python(r); })
      .def("__repr__", [](const BoundResult& r) { return nlohmann::json(r).dump(); });

  py::class_<ElmState>(m, "ElmState")
      .def(py::init<BundleInvariants>(), py::arg("invariants"))
      .def_property_readonly("invariants", &ElmState::invariants)
      .def_property_readonly("step_count", &ElmState::step_count)
      .def("sb_upper", &ElmState::sb_upper, py::arg("r"), py::arg("i"))
      .def("with_sb_upper", &ElmState::with_sb_upper, py::arg("r"), py::arg("i"), py::arg("bound"))
      .def("certified", &ElmState::certified, py::arg("r"))
      .def("to_dict", [](const ElmState& st) { return to_python(st); });

  m.def("validate", &validate, py::arg("inv"));
  m.def("serre_dual", &serre_dual, py::arg("curve"), py::arg("inv"));
  m.def("twist_by_line", &twist_by_line, py::arg("inv"), py::arg("a"));
  m.def("h0_hyperelliptic_power", &h0_hyperelliptic_power, py::arg("curve"), py::arg("a"),
        py::arg("extra_general_point") = false);

  m.def("krawtchouk", [](std::int64_t r, std::int64_t n, std::int64_t N) { return to_python_int(krawtchouk({r, n, N})); },
        py::arg("r"), py::arg("n"), py::arg("N"));
  m.def("krawtchouk_oracle",
        [](std::int64_t r, std::int64_t n, std::int64_t N) { return to_python_int(krawtchouk_oracle({r, n, N})); },
        py::arg("r"), py::arg("n"), py::arg("N"));
  m.def("delta_vanishes", &delta_vanishes, py::arg("g"), py::arg("d"), py::arg("s1"), py::arg("s1F"));

  m.def("h0_line_bound", &h0_line_bound, py::arg("curve"), py::arg("d"));
  m.def("h0_rank2_bound", &h0_rank2_bound, py::arg("curve"), py::arg("d"), py::arg("s1"),
        py::arg("use_delta") = false);
  m.def(
      "h0_rank3_semistable_bound",
      [](const Curve& c, const BundleInvariants& inv, std::optional<std::int64_t> s1F, bool use_delta,
         bool sharpening) { return h0_rank3_semistable_bound(query(c, inv, s1F, use_delta, sharpening)); },
      py::arg("curve"), py::arg("inv"), py::arg("s1F") = py::none(), py::arg("use_delta") = false,
      py::arg("use_hyperelliptic_sharpening") = false);
  m.def(
      "h0_quotient_bound",
      [](const Curve& c, const BundleInvariants& inv, std::int64_t s1F, bool use_delta, bool sharpening) {
        return h0_quotient_bound(query(c, inv, s1F, use_delta, sharpening));
      },
      py::arg("curve"), py::arg("inv"), py::arg("s1F"), py::arg("use_delta") = false,
      py::arg("use_hyperelliptic_sharpening") = false);
  m.def(
      "h0_rank3_unstable_bound",
      [](const Curve& c, const BundleInvariants& inv, std::int64_t s1F, bool quotient_semistable) {
        return h0_rank3_unstable_bound(query(c, inv, s1F, false, false), quotient_semistable);
      },
      py::arg("curve"), py::arg("inv"), py::arg("s1F"), py::arg("quotient_semistable"));
  m.def("slope_bound", &slope_bound, py::arg("g"), py::arg("d"));

  m.def("seed_split_state", &seed_split_state, py::arg("curve"), py::arg("n"));
  m.def(
      "step", [](const ElmState& st, std::vector<bool> hits) { return step(st, StepChoice{std::move(hits)}); },
      py::arg("state"), py::arg("hits_maximal"));
  m.def("generic_sequence", &generic_sequence, py::arg("start"), py::arg("m"));
  m.def("s2_lower_bound_track", &s2_lower_bound_track, py::arg("m"));

  m.def("family_a", [](std::int64_t g, std::int64_t n, std::int64_t k) { return to_python(family_a(g, n, k)); },
        py::arg("g"), py::arg("n"), py::arg("k"));
  m.def("family_b", [](std::int64_t g, std::int64_t mm) { return to_python(family_b(g, mm)); }, py::arg("g"),
        py::arg("m"));
  m.def(
      "family_c",
      [](std::int64_t g, const std::string& variant, std::int64_t k) {
        if (variant != "E1" && variant != "E2") {
          throw Error(ErrorCode::InvalidArgument, "variant must be E1 or E2");
        }
        return to_python(family_c(g, variant == "E1" ? FamilyCVariant::E1 : FamilyCVariant::E2, k));
      },
      py::arg("g"), py::arg("variant"), py::arg("k"));
  m.def(
      "unstable_sharpness",
      [](const Curve& c, std::int64_t dL, std::int64_t dF, std::int64_t s1F) {
        return to_python(unstable_sharpness(c, dL, dF, s1F));
      },
      py::arg("curve"), py::arg("dL"), py::arg("dF"), py::arg("s1F"));
  m.def("feasible_stability_pairs", &feasible_stability_pairs, py::arg("curve"), py::arg("d"), py::arg("h0"));
  m.def(
      "example_suite",
      [](std::int64_t max_genus) { return to_python(nlohmann::json(example_suite(max_genus))); },
      py::arg("max_genus"));
}
