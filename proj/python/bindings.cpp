#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "motzkin/bfile.hpp"
#include "motzkin/bijections.hpp"
#include "motzkin/oracle.hpp"
#include "motzkin/qmotzkin.hpp"
#include "motzkin/series.hpp"

namespace py = pybind11;
using namespace motzkin;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::list coeff_list(const UniPoly& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(to_py(c));
  return out;
}

std::vector<int> word(const Permutation& s) { return {s.word().begin(), s.word().end()}; }

std::vector<std::pair<int, int>> pair_list(const HeadTailPairs& p) {
  std::vector<std::pair<int, int>> out;
  for (const auto& ht : p.pairs()) out.emplace_back(ht.head, ht.tail);
  return out;
}

}  // namespace

PYBIND11_MODULE(_motzkin, m) {
  m.doc() = "Crossings and nestings of Motzkin objects: exact core";

  m.def("perm_statistics", [](const std::vector<int>& w) {
    const auto r = perm_statistics(Permutation(w));
    py::dict d;
    d["exc"] = r.exc;
    d["fp"] = r.fp;
    d["crs"] = r.crs;
    d["nes"] = r.nes;
    d["inv"] = r.inv;
    d["exc_set"] = r.exc_set;
    d["des_set"] = r.des_set;
    d["is_involution"] = r.is_involution;
    return d;
  }, py::arg("word"));

  m.def("path_statistics", [](const std::string& path) {
    const auto r = path_statistics(MotzkinPath::parse(path));
    py::dict d;
    d["hor"] = r.hor;
    d["up"] = r.up;
    d["down"] = r.down;
    d["sh_u"] = r.sh_u;
    d["sh_h"] = r.sh_h;
    d["sh_d"] = r.sh_d;
    d["area"] = r.area;
    return d;
  }, py::arg("path"));

  m.def("enumerate_paths", [](int n) {
    std::vector<std::string> out;
    for_each_path(n, [&](const MotzkinPath& p) { out.push_back(p.to_string()); });
    return out;
  }, py::arg("n"));
  m.def("enumerate_class", [](int n, const std::string& cls) {
    std::vector<std::vector<int>> out;
    for_each_in_class(n, parse_class(cls), [&](const Permutation& s) { out.push_back(word(s)); });
    return out;
  }, py::arg("n"), py::arg("cls"));
  m.def("in_class", [](const std::vector<int>& w, const std::string& cls) {
    return in_class(Permutation(w), parse_class(cls));
  }, py::arg("word"), py::arg("cls"));

  m.def("phi1", [](const std::string& p) { return word(phi1(MotzkinPath::parse(p))); }, py::arg("path"));
  m.def("phi2", [](const std::string& p) { return word(phi2(MotzkinPath::parse(p))); }, py::arg("path"));
  m.def("phi3", [](const std::string& p) { return word(phi3(MotzkinPath::parse(p))); }, py::arg("path"));
  m.def("phi3_inverse", [](const std::vector<int>& w) { return phi3_inverse(Permutation(w)).to_string(); },
        py::arg("word"));
  m.def("involution_shape_path", [](const std::vector<int>& w) {
    return involution_shape_path(Permutation(w)).to_string();
  }, py::arg("word"));
  m.def("head_tail_pairs", [](const std::vector<int>& w) { return pair_list(head_tail_pairs(Permutation(w))); },
        py::arg("word"));
  m.def("strip_decomposition", [](const std::string& p) { return pair_list(strip_decomposition(MotzkinPath::parse(p))); },
        py::arg("path"));

  m.def("motzkin_number", [](int n) { return to_py(motzkin_number(n)); }, py::arg("n"));
  m.def("q_motzkin", [](int n) { return coeff_list(q_motzkin(n)); }, py::arg("n"));
  m.def("q_motzkin_tilde", [](int n) { return coeff_list(q_motzkin_tilde(n)); }, py::arg("n"));
  m.def("h_tableau", [](int n_max) {
    const auto h = h_tableau(n_max);
    py::list rows;
    for (int n = 0; n <= n_max; ++n) {
      py::list row;
      for (int i = 0; i <= n; ++i) row.append(coeff_list(h.at(n, i)));
      rows.append(row);
    }
    return rows;
  }, py::arg("n_max"));

  m.def("distribution", [](const std::string& cls, int n, const std::string& stat, int scan_limit) {
    return distribution(parse_class(cls), n, parse_stat(stat), scan_limit).to_string();
  }, py::arg("cls"), py::arg("n"), py::arg("stat"), py::arg("scan_limit") = kDefaultScanLimit);
  m.def("series_presets", [] {
    std::vector<std::string> names;
    for (const auto& p : series_presets()) names.push_back(p.name);
    return names;
  });
  m.def("named_series_json", [](const std::string& name, int order) { return named_series(name, order).to_json(); },
        py::arg("name"), py::arg("order"));
  m.def("run_suite_json", [](const std::string& suite, int max_n) {
    py::gil_scoped_release release;
    return run_suite(suite, max_n).to_json();
  }, py::arg("suite"), py::arg("max_n"));
  m.def("suite_names", &suite_names);

  m.def("oeis_check", [](const std::string& path, int max_n) {
    const auto r = oeis_check(read_bfile(path), max_n);
    py::dict d;
    d["pass"] = r.pass();
    d["matched"] = r.matched;
    d["gaps"] = r.gaps;
    if (r.first_mismatch) {
      d["mismatch_n"] = r.first_mismatch->n;
      d["expected"] = to_py(r.first_mismatch->expected);
      d["found"] = to_py(r.first_mismatch->found);
    }
    return d;
  }, py::arg("bfile"), py::arg("max_n"));

  py::register_exception<SizeGuardError>(m, "SizeGuardError", PyExc_ValueError);
  py::register_exception<BFileParseError>(m, "BFileParseError", PyExc_ValueError);
  py::register_exception<PathError>(m, "PathError", PyExc_ValueError);
}
