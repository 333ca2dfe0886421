// pybind11 surface over the kernel's main operations. Structured results
// are converted from the same report objects the CLI serializes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "galois/engine.hpp"
#include "galois/factor.hpp"
#include "galois/lattice.hpp"
#include "galois/report.hpp"
#include "galois/roots.hpp"
#include "galois/symfun.hpp"

namespace py = pybind11;
using namespace galois;

namespace {

py::object json_to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default: return py::none();
  }
}

EngineConfig config_from(unsigned precision, int max_degree,
                         const std::vector<uint64_t>& primes) {
  EngineConfig cfg;
  cfg.precision_bits = precision;
  cfg.max_degree = max_degree;
  cfg.dedekind_primes = primes;
  return cfg;
}

py::object py_galois_group(const std::string& poly, unsigned precision,
                           int max_degree, const std::vector<uint64_t>& primes) {
  GaloisResult result =
      galois_group(parse_unipoly(poly), config_from(precision, max_degree, primes));
  return json_to_py(json_result(result));
}

std::vector<std::string> py_cauchy(const std::string& poly) {
  std::vector<std::string> out;
  for (const MultiPoly& c : cauchy_modules(parse_unipoly(poly)))
    out.push_back(c.to_string());
  return out;
}

py::object py_resolvent(const std::string& poly, const std::string& invariant) {
  UniPoly f = parse_unipoly(poly);
  int n = f.degree();
  MultiPoly theta = parse_multipoly(invariant, n);
  PermGroup l = PermGroup::symmetric(n);
  InvariantSpec spec{theta, stabilizer_in(l, theta), l, std::nullopt};
  Resolvent res = resolvent(spec, QuotientAlgebra::symmetric_ideal(f));
  Json j;
  j["resolvent"] = res.resolvent.to_string();
  j["separable"] = res.separable;
  Json factors = Json::array();
  for (const auto& [factor, mult] : res.factors) {
    Json e;
    e["factor"] = factor.to_string();
    e["multiplicity"] = mult;
    factors.push_back(e);
  }
  j["factors"] = factors;
  return json_to_py(j);
}

py::object py_partition_matrix(int degree) {
  PermGroup sn = PermGroup::symmetric(degree);
  std::vector<PermGroup> classes = subgroup_classes(degree);
  Json j;
  Json orders = Json::array();
  for (const PermGroup& g : classes) orders.push_back(g.order());
  j["class_orders"] = orders;
  j["matrix"] = partition_matrix(sn, classes);
  return json_to_py(j);
}

py::object py_dedekind(const std::string& poly, const std::vector<uint64_t>& primes) {
  EngineConfig cfg;
  cfg.dedekind_primes = primes;
  OracleReport report = dedekind_cycle_types(parse_unipoly(poly), cfg);
  py::dict out;
  py::dict types;
  for (const auto& [p, degrees] : report.dedekind)
    types[py::int_(p)] = py::cast(degrees);
  out["cycle_types"] = types;
  out["skipped_primes"] = py::cast(report.skipped_primes);
  out["disc_is_square"] = report.disc_is_square;
  return out;
}

std::vector<std::pair<std::string, int>> py_factor(const std::string& poly) {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& [factor, mult] : factor_rationals(parse_unipoly(poly)))
    out.emplace_back(factor.to_string(), mult);
  return out;
}

std::vector<std::pair<double, double>> py_complex_roots(const std::string& poly,
                                                        unsigned bits) {
  std::vector<std::pair<double, double>> out;
  for (const ComplexBall& b : complex_roots(parse_unipoly(poly), bits).roots())
    out.emplace_back(static_cast<double>(b.re), static_cast<double>(b.im));
  return out;
}

long py_symmetric_ideal_dimension(const std::string& poly) {
  return static_cast<long>(QuotientAlgebra::symmetric_ideal(parse_unipoly(poly))
                               ->dimension());
}

}  // namespace

PYBIND11_MODULE(galoiskernel, m) {
  m.doc() = "exact Galois theory kernel: groups, Galois ideals, resolvents, "
            "Cauchy modules";

  py::register_exception<MathError>(m, "MathError");
  py::register_exception<ParseError>(m, "PolyParseError");

  m.def("galois_group", &py_galois_group, py::arg("polynomial"),
        py::arg("precision") = 128, py::arg("max_degree") = 6,
        py::arg("primes") = std::vector<uint64_t>{},
        "Full pipeline: group, ideal chain, triangular generators, oracles.");
  m.def("cauchy_modules", &py_cauchy, py::arg("polynomial"),
        "Cauchy modules C_1..C_n as strings.");
  m.def("resolvent", &py_resolvent, py::arg("polynomial"), py::arg("invariant"),
        "Absolute resolvent of an invariant over the symmetric ideal.");
  m.def("partition_matrix", &py_partition_matrix, py::arg("degree"),
        "Partition matrix of S_degree over its subgroup classes (degree <= 5).");
  m.def("dedekind_cycle_types", &py_dedekind, py::arg("polynomial"),
        py::arg("primes") = std::vector<uint64_t>{},
        "Degrees of f mod p per good prime.");
  m.def("factor", &py_factor, py::arg("polynomial"),
        "Monic irreducible factors with multiplicities over Q.");
  m.def("complex_roots", &py_complex_roots, py::arg("polynomial"),
        py::arg("precision") = 128,
        "Certified roots as (re, im) doubles, canonical order.");
  m.def("symmetric_ideal_dimension", &py_symmetric_ideal_dimension,
        py::arg("polynomial"), "dim k[x]/M_S, equals n! for squarefree f.");
}
