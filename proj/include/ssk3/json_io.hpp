#pragma once

// JSON formats for every domain type. nlohmann::json keeps object keys
// sorted, so serialized output is byte-stable across runs — a requirement
// for the reproducibility contract (equal manifests give equal bytes).

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssk3/char_subspace.hpp"
#include "ssk3/degeneracy.hpp"
#include "ssk3/version.hpp"

namespace ssk3 {

using Json = nlohmann::json;

inline Json descriptor_to_json(const FieldDescriptor* fd) {
  return Json{{"p", fd->p}, {"n", fd->n}, {"modulus", fd->modulus}};
}

// Elements are arrays of n integers in [0, p), constant coefficient first.
inline Json element_to_json(const FieldElement& e) { return Json(e.coeffs()); }

inline FieldElement element_from_json(const FieldDescriptor* fd, const Json& j) {
  if (!j.is_array() || j.size() != fd->n)
    throw std::invalid_argument("element: expected an array of n coefficients");
  std::vector<std::uint32_t> coeffs;
  coeffs.reserve(fd->n);
  for (const auto& c : j) coeffs.push_back(c.get<std::uint32_t>());
  return FieldElement::from_coeffs(fd, coeffs);
}

inline Json subspace_to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& row : s.basis()) {
    Json jrow = Json::array();
    for (const auto& e : row) jrow.push_back(element_to_json(e));
    basis.push_back(std::move(jrow));
  }
  return Json{{"ambient", s.ambient()}, {"basis", std::move(basis)}};
}

inline Subspace subspace_from_json(const FieldDescriptor* fd, const Json& j) {
  const std::uint32_t ambient = j.at("ambient").get<std::uint32_t>();
  std::vector<Vector> rows;
  for (const auto& jrow : j.at("basis")) {
    Vector v;
    for (const auto& je : jrow) v.push_back(element_from_json(fd, je));
    rows.push_back(std::move(v));
  }
  return span(fd, ambient, std::move(rows));
}

inline Json lattice_to_json(const IntegralLattice& lat) {
  return Json{{"rank", lat.rank()}, {"gram", lat.gram()}};
}

inline IntegralLattice lattice_from_json(const Json& j) {
  const auto rank = j.at("rank").get<std::uint32_t>();
  auto gram = j.at("gram").get<std::vector<std::vector<std::int64_t>>>();
  if (gram.size() != rank)
    throw std::invalid_argument("lattice: gram size does not match rank");
  return IntegralLattice(std::move(gram));
}

inline Json charsub_to_json(const CharacteristicSubspace& cs) {
  Json gen = Json::array();
  for (const auto& e : cs.generator()) gen.push_back(element_to_json(e));
  return Json{{"p", cs.p()},
              {"sigma0", cs.sigma0()},
              {"n", cs.field()->n},
              {"modulus", cs.field()->modulus},
              {"generator", std::move(gen)}};
}

inline CharacteristicSubspace charsub_from_json(const Json& j) {
  const auto p = j.at("p").get<std::uint32_t>();
  const auto sigma0 = j.at("sigma0").get<std::uint32_t>();
  const auto n = j.at("n").get<std::uint32_t>();
  if (sigma0 < 1 || sigma0 > 10)
    throw std::invalid_argument("charsub: sigma0 out of range [1, 10]");
  if (n != 2 * sigma0) throw std::invalid_argument("charsub: n must equal 2*sigma0");
  const FieldDescriptor* fd = make_field(p, n);
  const auto modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
  if (modulus != fd->modulus)
    throw std::invalid_argument("charsub: modulus is not the canonical modulus for (p, n)");
  const Json& jgen = j.at("generator");
  if (!jgen.is_array() || jgen.size() != n)
    throw std::invalid_argument("charsub: generator must have length 2*sigma0");
  Vector gen;
  gen.reserve(n);
  for (const auto& je : jgen) gen.push_back(element_from_json(fd, je));
  return CharacteristicSubspace(p, sigma0, std::move(gen));
}

inline Json report_to_json(const DimensionReport& r) {
  return Json{{"s", r.s},
              {"s0", r.s0},
              {"dimB", r.dim_b},
              {"dimBcapF2", r.dim_b_cap_f2},
              {"dimC", r.dim_c},
              {"verdict", to_string(r.verdict)},
              {"oracle_checked", r.oracle_checked}};
}

inline Json decision_to_json(const Decision& d) {
  Json j{{"verdict", to_string(d.verdict)}, {"dim_ND", d.dim_nd}};
  j["dim_ND_cap_N0"] = d.dim_nd_cap_n0 ? Json(*d.dim_nd_cap_n0) : Json(nullptr);
  j["sigma0"] = d.sigma0 ? Json(*d.sigma0) : Json(nullptr);
  return j;
}

inline Json config_to_json(const DivisorConfiguration& config) {
  Json j{{"classes", config.classes}};
  if (!config.labels.empty()) j["labels"] = config.labels;
  return j;
}

inline DivisorConfiguration config_from_json(IntegralLattice lat, const Json& j) {
  auto classes = j.at("classes").get<std::vector<std::vector<std::int64_t>>>();
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return DivisorConfiguration(std::move(lat), std::move(classes), std::move(labels));
}

inline Json audit_to_json(const EquivalenceAudit& a) {
  return Json{{"conditions",
               Json{{"criterion", a.criterion},
                    {"chern_span", a.chern_span},
                    {"hodge_defect", a.hodge_defect},
                    {"nondegenerate", a.nondegenerate}}},
              {"hold", a.hold},
              {"report", report_to_json(a.report)},
              {"decision", decision_to_json(a.decision)}};
}

// Every file the CLI writes embeds a manifest: the command, its parameters
// (seeds included), the PRNG identity, and the toolkit version. No
// timestamps — reruns must be byte-identical. Readers ignore the key.
inline Json make_manifest(const std::string& command, Json parameters,
                          std::optional<std::uint64_t> seed, const std::string& outcome) {
  Json j{{"command", command},
         {"parameters", std::move(parameters)},
         {"prng", Json{{"name", kPrngName}, {"version", kPrngVersion}}},
         {"toolkit_version", kVersion},
         {"outcome", outcome}};
  j["seed"] = seed ? Json(*seed) : Json(nullptr);
  return j;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  Json j;
  in >> j;
  return j;
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file for writing: " + path);
  out << j.dump(2) << "\n";
  if (!out) throw std::runtime_error("failed while writing output file: " + path);
}

}  // namespace ssk3
