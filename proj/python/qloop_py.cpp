#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qloop/api.hpp"
#include "qloop/error.hpp"

namespace py = pybind11;
namespace api = qloop::api;
using nlohmann::json;

namespace {

// Results cross the boundary as JSON text; the Python package decodes them.
std::string out(const json& j) { return j.dump(); }

json parse(const std::string& s) {
  try {
    return json::parse(s);
  } catch (const json::parse_error&) {
    throw qloop::InvalidInput("argument is not valid JSON");
  }
}

}  // namespace

PYBIND11_MODULE(_qloop, m) {
  m.doc() = "q-characters, quiver Grassmannians and cluster algebras (JSON results)";

  auto base = py::register_exception<qloop::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<qloop::InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<qloop::SingularityError>(m, "SingularityError", PyExc_ValueError);
  py::register_exception<qloop::ConsistencyError>(m, "ConsistencyError", base.ptr());
  py::register_exception<qloop::WindowTooSmall>(m, "WindowTooSmall", base.ptr());
  py::register_exception<qloop::CapExceeded>(m, "CapExceeded", base.ptr());

  m.def("sl2_kr", [](int k, int s) { return out(api::sl2_kr(k, s)); }, py::arg("k"), py::arg("s"));
  m.def("sl2_factor", [](const std::string& mono) { return out(api::sl2_factor(parse(mono))); },
        py::arg("monomial"));
  m.def("sl2_ybe",
        [](const std::string& u, const std::string& v, const std::string& q) { return out(api::sl2_ybe(u, v, q)); },
        py::arg("u"), py::arg("v"), py::arg("q"));

  m.def("rep_roots", [](const std::string& t) { return out(api::rep_roots(t)); }, py::arg("type"));
  m.def("rep_euler",
        [](const std::string& t, const std::vector<int>& beta, const std::vector<int>& nu) {
          return out(api::rep_euler(t, beta, nu));
        },
        py::arg("type"), py::arg("beta"), py::arg("nu"));

  m.def("qchar_fundamental",
        [](const std::string& t, int node, int shift) { return out(api::qchar_fundamental(t, node, shift)); },
        py::arg("type"), py::arg("node"), py::arg("shift"));
  m.def("qchar_standard", [](const std::string& t, const std::string& w) { return out(api::qchar_standard(t, parse(w))); },
        py::arg("type"), py::arg("w"));
  m.def("qchar_kr",
        [](const std::string& t, int node, int k, int shift) { return out(api::qchar_kr(t, node, k, shift)); },
        py::arg("type"), py::arg("node"), py::arg("k"), py::arg("shift"));
  m.def("qchar_truncated_root",
        [](const std::string& t, const std::vector<int>& beta) { return out(api::qchar_truncated_root(t, beta)); },
        py::arg("type"), py::arg("beta"));
  m.def("qchar_truncated_monomial",
        [](const std::string& t, const std::string& mono) { return out(api::qchar_truncated_monomial(t, parse(mono))); },
        py::arg("type"), py::arg("monomial"));

  m.def("cluster_enumerate",
        [](const std::string& t, int level, std::size_t cap) { return out(api::cluster_enumerate(t, level, cap)); },
        py::arg("type"), py::arg("level"), py::arg("cap") = 100000);
  m.def("cluster_fpoly",
        [](const std::string& t, const std::vector<int>& beta, std::size_t cap) {
          return out(api::cluster_fpoly(t, beta, cap));
        },
        py::arg("type"), py::arg("beta"), py::arg("cap") = 100000);
  m.def("cluster_classify",
        [](const std::string& t, int level, std::size_t cap) { return out(api::cluster_classify(t, level, cap)); },
        py::arg("type"), py::arg("level"), py::arg("cap") = 100000);
  m.def("cluster_factor",
        [](const std::string& t, const std::string& mono, std::size_t cap) {
          return out(api::cluster_factor(t, parse(mono), cap));
        },
        py::arg("type"), py::arg("monomial"), py::arg("cap") = 100000);

  m.def("verify_l1", [](const std::string& t) { return out(api::verify_l1(t)); }, py::arg("type"));
  m.def("verify_tsystem", [](const std::string& t, int kmax) { return out(api::verify_tsystem(t, kmax)); },
        py::arg("type"), py::arg("kmax") = 3);
  m.def("verify_iota",
        [](const std::string& t, int level, std::size_t cap) { return out(api::verify_iota(t, level, cap)); },
        py::arg("type"), py::arg("level"), py::arg("cap") = 100000);
}
