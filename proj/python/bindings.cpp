#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trop/json_io.hpp"
#include "trop/suite.hpp"

namespace py = pybind11;
using namespace trop;

namespace {

// Values cross the boundary as "p/q" strings; the Python side wraps them in Fraction.
std::vector<std::string> strings(const Vec& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Vec rationals(const std::vector<std::string>& v) {
  Vec out;
  for (const auto& s : v) out.push_back(parse_rational(s));
  return out;
}

PluckerVector plucker(int k, int n, const std::vector<std::string>& v) {
  if (v.size() != binom(n, k)) throw std::invalid_argument("expected binom(n, k) values in lexicographic order");
  return PluckerVector(k, n, rationals(v));
}

WebParameters params(int k, int n, const std::vector<std::string>& v) {
  WebParameters X(k, n);
  if (v.size() != X.x.size()) throw std::invalid_argument("expected k(n-k) face values, row by row");
  X.x = rationals(v);
  return X;
}

std::vector<Mask> masks(int n, const std::vector<std::vector<int>>& sets) {
  std::vector<Mask> out;
  for (const auto& s : sets) out.push_back(from_elements(s, n));
  return out;
}

std::string membership(const MembershipResult& r) {
  json j = {{"ok", r.ok}};
  if (r.witness) j["witness"] = to_json(*r.witness);
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_trop, m) {
  m.doc() = "Exact tropical Plucker vectors, positroids and plabic graphs";
  py::register_exception<std::invalid_argument>(m, "InvalidInput", PyExc_ValueError);

  m.def("ksubsets", [](int k, int n) {
    std::vector<std::vector<int>> out;
    for (Mask s : enumerate_ksubsets(k, n)) out.push_back(elements(s));
    return out;
  });
  m.def("trop_phi", [](int k, int n, const std::vector<std::string>& X) { return strings(trop_phi(k, n, params(k, n, X)).values); });
  m.def("trop_psi", [](int k, int n, const std::vector<std::string>& P) { return strings(trop_psi(k, n, plucker(k, n, P)).x); });
  m.def("phi", [](int k, int n, const std::vector<std::string>& x) { return strings(phi(k, n, params(k, n, x)).values); });
  m.def("psi", [](int k, int n, const std::vector<std::string>& p) { return strings(psi(k, n, plucker(k, n, p)).x); });
  m.def("is_tropical_plucker", [](int k, int n, const std::vector<std::string>& P) { return membership(is_tropical_plucker(plucker(k, n, P))); });
  m.def("is_positive_tropical_plucker",
        [](int k, int n, const std::vector<std::string>& P) { return membership(is_positive_tropical_plucker(plucker(k, n, P))); });
  m.def("regular_subdivision", [](int k, int n, const std::vector<std::string>& P) { return to_json(regular_subdivision(plucker(k, n, P))).dump(); });
  m.def("classify", [](int k, int n, const std::vector<std::string>& P) {
    PluckerVector H = plucker(k, n, P);
    Subdivision D = regular_subdivision(H);
    json j = {{"cells", D.cells.size()}, {"matroidal", is_matroidal(D)}, {"positroidal", is_positroidal(D)}};
    if (is_positive_tropical_plucker(H).ok) {
      j["finest"] = is_finest_positroidal(H);
      json counts = json::object();
      for (auto [d, c] : interior_face_counts(D)) counts[std::to_string(d)] = c;
      j["interior_face_counts"] = counts;
    }
    return j.dump();
  });
  m.def("is_positroid", [](int n, int k, const std::vector<std::vector<int>>& bases) { return is_positroid(Matroid(n, k, masks(n, bases))); });
  m.def("is_matroid", [](int n, int k, const std::vector<std::vector<int>>& bases) { return is_matroid(n, k, masks(n, bases)); });
  m.def("graphic_k4_bases", [](const std::vector<int>& labels) {
    std::vector<std::vector<int>> out;
    Matroid M = graphic_k4(labels);
    for (Mask b : M.bases()) out.push_back(elements(b));
    return out;
  }, py::arg("labels") = std::vector<int>{});
  m.def("web_trip", [](int k, int n) { return trip_permutation(web_graph(k, n).graph).pi; });
  m.def("fvector_bound", &fvector_bound);
  m.def("verify_counterexample", [] { return to_json(verify_counterexample()).dump(); });
  m.def("counterexample_svg", [] { return counterexample_svg(counterexample_data()); });
}
