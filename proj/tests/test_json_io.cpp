// JSON round-trips, the exact report schema, and the reproducibility rules
// for files the CLI writes (manifest without timestamps, byte-stable dumps).

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "ssk3/json_io.hpp"

using namespace ssk3;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("ssk3_io_" + name)).string();
}

}  // namespace

TEST_CASE("field elements round-trip through JSON", "[io]") {
  const FieldDescriptor* f9 = make_field(3, 2);
  const FieldElement e = FieldElement::from_coeffs(f9, {2, 1});
  const Json j = element_to_json(e);
  CHECK(j == Json::array({2, 1}));
  CHECK(element_from_json(f9, j) == e);
  CHECK_THROWS_WITH(element_from_json(f9, Json::array({1})),
                    Catch::Matchers::ContainsSubstring("array of n coefficients"));
  CHECK_THROWS_AS(element_from_json(f9, Json::array({1, 7})), std::invalid_argument);
  const Json d = descriptor_to_json(f9);
  CHECK(d.at("p") == 3);
  CHECK(d.at("n") == 2);
  CHECK(d.at("modulus") == Json::array({1, 0, 1}));
}

TEST_CASE("subspaces round-trip through JSON", "[io]") {
  const FieldDescriptor* f4 = make_field(2, 2);
  const FieldElement one = FieldElement::one(f4);
  const FieldElement t = FieldElement::from_coeffs(f4, {0, 1});
  const Subspace v = span(f4, 3, {{one, t, one}, {t, one, t}});
  const Subspace back = subspace_from_json(f4, subspace_to_json(v));
  CHECK(back == v);
  CHECK(subspace_to_json(v).at("ambient") == 3);
}

TEST_CASE("lattices round-trip through JSON", "[io]") {
  const IntegralLattice lat = synthesize_gram(3, 2);
  CHECK(lattice_from_json(lattice_to_json(lat)) == lat);
  Json j = lattice_to_json(lat);
  j["rank"] = 5;
  CHECK_THROWS_WITH(lattice_from_json(j),
                    Catch::Matchers::ContainsSubstring("gram size does not match rank"));
}

TEST_CASE("characteristic subspaces round-trip and validate hard", "[io]") {
  const CharacteristicSubspace cs = generate(2, 2, GenStrategy::SeededRandom, 5);
  const Json j = charsub_to_json(cs);
  CHECK(j.at("p") == 2);
  CHECK(j.at("sigma0") == 2);
  CHECK(j.at("n") == 4);
  const CharacteristicSubspace back = charsub_from_json(j);
  CHECK(back.generator() == cs.generator());
  CHECK(back.p() == cs.p());

  Json bad = j;
  bad["n"] = 3;
  CHECK_THROWS_WITH(charsub_from_json(bad),
                    Catch::Matchers::ContainsSubstring("n must equal 2*sigma0"));
  bad = j;
  bad["modulus"] = Json::array({1, 0, 0, 0, 1});
  CHECK_THROWS_WITH(charsub_from_json(bad),
                    Catch::Matchers::ContainsSubstring("not the canonical modulus"));
  bad = j;
  bad["sigma0"] = 0;
  CHECK_THROWS_WITH(charsub_from_json(bad),
                    Catch::Matchers::ContainsSubstring("sigma0 out of range"));
  bad = j;
  bad["generator"] = Json::array();
  CHECK_THROWS_WITH(charsub_from_json(bad),
                    Catch::Matchers::ContainsSubstring("generator must have length"));
  bad = j;
  bad.erase("p");
  CHECK_THROWS_AS(charsub_from_json(bad), Json::exception);
}

TEST_CASE("dimension report serializes with the exact agreed keys", "[io]") {
  const DimensionReport r{5, 3, 4, 1, 3, Verdict::Nondegenerate, true};
  const Json j = report_to_json(r);
  CHECK(j.size() == 7);
  CHECK(j.at("s") == 5);
  CHECK(j.at("s0") == 3);
  CHECK(j.at("dimB") == 4);
  CHECK(j.at("dimBcapF2") == 1);
  CHECK(j.at("dimC") == 3);
  CHECK(j.at("verdict") == "NONDEGENERATE");
  CHECK(j.at("oracle_checked") == true);
}

TEST_CASE("decision serialization uses null for absent invariants", "[io]") {
  const Decision full{Verdict::Nondegenerate, 3, 3, 2};
  Json j = decision_to_json(full);
  CHECK(j.at("verdict") == "NONDEGENERATE");
  CHECK(j.at("dim_ND") == 3);
  CHECK(j.at("dim_ND_cap_N0") == 3);
  CHECK(j.at("sigma0") == 2);

  const Decision fh{Verdict::Degenerate, 4, std::nullopt, std::nullopt};
  j = decision_to_json(fh);
  CHECK(j.at("verdict") == "DEGENERATE");
  CHECK(j.at("dim_ND_cap_N0").is_null());
  CHECK(j.at("sigma0").is_null());
}

TEST_CASE("configurations round-trip with and without labels", "[io]") {
  const IntegralLattice lat = synthesize_gram(2, 1);
  const DivisorConfiguration with = construct_classes(lat, 2, 3);
  const DivisorConfiguration back = config_from_json(lat, config_to_json(with));
  CHECK(back.classes == with.classes);
  CHECK(back.labels == with.labels);

  const DivisorConfiguration bare(lat, with.classes);
  const Json j = config_to_json(bare);
  CHECK_FALSE(j.contains("labels"));
  CHECK(config_from_json(lat, j).labels.empty());
}

TEST_CASE("audit JSON mirrors the four conditions", "[io]") {
  const IntegralLattice lat = synthesize_gram(2, 1);
  const CharacteristicSubspace cs = generate(2, 1, GenStrategy::NormalBasis);
  const EquivalenceAudit audit = equivalence_audit(construct_classes(lat, 2, 2), cs, 2);
  const Json j = audit_to_json(audit);
  CHECK(j.at("hold") == true);
  CHECK(j.at("conditions").at("criterion") == true);
  CHECK(j.at("conditions").at("chern_span") == true);
  CHECK(j.at("conditions").at("hodge_defect") == true);
  CHECK(j.at("conditions").at("nondegenerate") == true);
  CHECK(j.at("report").at("dimBcapF2") == 1);
  CHECK(j.at("decision").at("verdict") == "NONDEGENERATE");
}

TEST_CASE("manifests carry provenance but never timestamps", "[io]") {
  const Json m = make_manifest("charsub gen", Json{{"p", 2}, {"sigma0", 1}}, 42, "ok");
  CHECK(m.at("command") == "charsub gen");
  CHECK(m.at("parameters").at("p") == 2);
  CHECK(m.at("seed") == 42);
  CHECK(m.at("prng").at("name") == "mt19937_64");
  CHECK(m.at("toolkit_version") == kVersion);
  CHECK(m.at("outcome") == "ok");
  CHECK(m.size() == 6);  // no time-dependent keys can sneak in

  const Json unseeded = make_manifest("lattice synth", Json::object(), std::nullopt, "ok");
  CHECK(unseeded.at("seed").is_null());
}

TEST_CASE("file I/O: byte-stable writes, clear errors", "[io]") {
  const std::string path = temp_path("roundtrip.json");
  const Json j = lattice_to_json(synthesize_gram(2, 2));
  write_json_file(path, j);
  CHECK(read_json_file(path) == j);

  // Identical content on rewrite, with a trailing newline.
  std::string first, second;
  {
    std::ifstream in(path, std::ios::binary);
    first.assign(std::istreambuf_iterator<char>(in), {});
  }
  write_json_file(path, j);
  {
    std::ifstream in(path, std::ios::binary);
    second.assign(std::istreambuf_iterator<char>(in), {});
  }
  CHECK(first == second);
  REQUIRE_FALSE(first.empty());
  CHECK(first.back() == '\n');
  std::remove(path.c_str());

  CHECK_THROWS_WITH(read_json_file(temp_path("missing-file.json")),
                    Catch::Matchers::ContainsSubstring("cannot open input file"));
}
