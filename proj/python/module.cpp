// Python bindings for the main operations: matroid construction, the named
// catalog, quadrangle relations, Tutte group invariants and WHPP verdicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "whpp/analysis.hpp"
#include "whpp/builders.hpp"
#include "whpp/quadrangle.hpp"

namespace py = pybind11;
using namespace whpp;

namespace {

std::vector<std::vector<int>> bases_as_lists(const Matroid& m) {
  std::vector<std::vector<int>> out;
  for (Subset b : m.bases()) out.push_back(subset_elements(b));
  return out;
}

Matroid matroid_from_lists(int n, const std::vector<std::vector<int>>& bases) {
  std::vector<Subset> masks;
  masks.reserve(bases.size());
  for (const auto& b : bases) masks.push_back(subset_of(b));
  return Matroid::from_bases(n, std::move(masks));
}

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["n"] = v.n;
  d["r"] = v.r;
  d["basis_count"] = v.basis_count;
  d["z"] = v.z;
  d["dim_V"] = v.dim_V;
  d["dim_W"] = v.dim_W;
  d["inner_free_rank"] = v.inner_free_rank;
  d["tutte_free_rank"] = v.tutte_free_rank;
  py::list torsion;
  for (const BigInt& t : v.tutte_torsion) torsion.append(py::int_(py::str(t.str())));
  d["tutte_torsion"] = torsion;
  d["reduction_applies"] = v.reduction_applies;
  d["is_binary"] = v.is_binary;
  d["is_regular"] = v.is_regular;
  d["is_projective_geometry"] = v.is_projective_geometry;
  d["whpp_status"] = to_string(v.whpp_status);
  d["justification"] = v.justification;
  return d;
}

}  // namespace

PYBIND11_MODULE(_whpp, m) {
  m.doc() = "exact matroid analysis: quadrangle relations, Tutte group invariants and "
            "weak half-plane property verdicts";

  py::register_exception<Error>(m, "WhppError");

  py::class_<Matroid>(m, "Matroid")
      .def_property_readonly("n", &Matroid::ground_size)
      .def_property_readonly("rank", &Matroid::rank)
      .def_property_readonly("bases", &bases_as_lists)
      .def("is_basis", [](const Matroid& m_, const std::vector<int>& b) {
        return m_.is_basis(subset_of(b));
      })
      .def("__len__", [](const Matroid& m_) { return m_.num_bases(); })
      .def("__eq__", [](const Matroid& a, const Matroid& b) { return a == b; })
      .def("__repr__", [](const Matroid& m_) {
        std::ostringstream out;
        out << "Matroid(n=" << m_.ground_size() << ", r=" << m_.rank() << ", bases="
            << m_.num_bases() << ")";
        return out.str();
      });

  m.def("from_bases", &matroid_from_lists, py::arg("n"), py::arg("bases"));
  m.def("uniform", &uniform, py::arg("r"), py::arg("n"));
  m.def("graphic",
        [](const std::vector<std::pair<int, int>>& edges) { return graphic(edges); },
        py::arg("edges"));
  m.def("projective_geometry", &projective_geometry, py::arg("m"), py::arg("q"));
  m.def("affine_geometry", &affine_geometry, py::arg("m"), py::arg("q"));
  m.def("catalog", &catalog, py::arg("name"));
  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const auto& e : catalog_entries()) names.push_back(e.name);
    return names;
  });
  m.def("catalog_expected", [](const std::string& name) {
    for (const auto& e : catalog_entries())
      if (e.name == name)
        return py::make_tuple(e.n, e.expected_bases, e.expected_dim_v);
    throw Error(ErrorCode::UnknownName, "unknown catalog name: " + name);
  });

  m.def("dual", &dual);
  m.def("direct_sum", &direct_sum);
  m.def("minor",
        [](const Matroid& m_, const std::vector<int>& del, const std::vector<int>& contract) {
          MinorResult r = minor(m_, subset_of(del), subset_of(contract));
          return py::make_tuple(r.matroid, r.old_labels);
        },
        py::arg("m"), py::arg("delete_set"), py::arg("contract_set"));
  m.def("relax", [](const Matroid& m_, const std::vector<int>& h) {
    return relax(m_, subset_of(h));
  });
  m.def("circuit_hyperplanes", [](const Matroid& m_) {
    std::vector<std::vector<int>> out;
    for (Subset h : circuit_hyperplanes(m_)) out.push_back(subset_elements(h));
    return out;
  });
  m.def("connected_components", [](const Matroid& m_) {
    return connected_components(m_).blocks;
  });
  m.def("is_isomorphic",
        [](const Matroid& a, const Matroid& b) { return is_isomorphic(a, b); });
  m.def("has_minor", &has_minor);
  m.def("is_binary", &is_binary);
  m.def("is_regular", &is_regular);

  m.def("dim_V", &dim_V);
  m.def("dim_W", &dim_W);
  m.def("inner_free_rank", &inner_free_rank);
  m.def("quadrangle_count",
        [](const Matroid& m_) { return enumerate_degenerate_quadrangles(m_).size(); });
  m.def("dump_quadrangles", &dump_quadrangles);
  m.def("tutte_invariants", [](const Matroid& m_) {
    AbelianInvariants inv = tutte_invariants(m_);
    py::list torsion;
    for (const BigInt& t : inv.torsion) torsion.append(py::int_(py::str(t.str())));
    return py::make_tuple(inv.free_rank, torsion);
  });
  m.def("whpp_verdict", [](const Matroid& m_) { return verdict_dict(whpp_verdict(m_)); });
}
