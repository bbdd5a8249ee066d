// The rational decision procedure, the witness constructor, and the audit
// that ties the four equivalent nondegeneracy conditions together.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ssk3/degeneracy.hpp"
#include "ssk3/verify.hpp"

using namespace ssk3;

namespace {

std::vector<std::vector<std::int64_t>> n0_lifts(const IntegralLattice& lat, std::uint32_t p,
                                                std::uint32_t how_many) {
  const Subspace n0 = p_kernel(lat, p);
  std::vector<std::vector<std::int64_t>> out;
  for (std::uint32_t i = 0; i < how_many; ++i) {
    std::vector<std::int64_t> v;
    for (const auto& e : n0.basis()[i]) v.push_back(e.coeff(0));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

TEST_CASE("decide: pinned outcomes on the synthesized lattice", "[degeneracy]") {
  for (const auto& [p, sigma0] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 1}, {2, 4}, {3, 2}, {7, 3}}) {
    CAPTURE(p, sigma0);
    const IntegralLattice lat = synthesize_gram(p, sigma0);

    Decision d = decide(DivisorConfiguration(lat, n0_lifts(lat, p, sigma0)), p);
    CHECK(d.verdict == Verdict::Nondegenerate);
    CHECK(d.dim_nd == sigma0);
    CHECK(d.dim_nd_cap_n0 == sigma0);
    CHECK(d.sigma0 == sigma0);

    d = decide(DivisorConfiguration(lat, n0_lifts(lat, p, sigma0 - 1)), p);
    CHECK(d.verdict == Verdict::Degenerate);
    CHECK(d.dim_nd == sigma0 - 1);

    d = decide(DivisorConfiguration(lat, {}), p);
    CHECK(d.verdict == Verdict::Degenerate);
    CHECK(d.dim_nd == 0);
    CHECK(d.dim_nd_cap_n0 == 0);

    std::vector<std::int64_t> e0(lat.rank(), 0);
    e0[0] = 1;
    d = decide(DivisorConfiguration(lat, {e0}), p);
    CHECK(d.verdict == Verdict::Degenerate);
    CHECK(d.dim_nd == 1);
    CHECK(d.dim_nd_cap_n0 == 0);
  }
}

TEST_CASE("decide is invariant under presentation changes of the classes", "[degeneracy]") {
  const std::uint32_t p = 3, sigma0 = 2;
  const IntegralLattice lat = synthesize_gram(p, sigma0);
  const DivisorConfiguration config = construct_classes(lat, p, sigma0 + 2, 17);
  const Decision base = decide(config, p);
  REQUIRE(base.verdict == Verdict::Nondegenerate);

  auto same = [&](const std::vector<std::vector<std::int64_t>>& classes) {
    const Decision d = decide(DivisorConfiguration(lat, classes), p);
    return d.verdict == base.verdict && d.dim_nd == base.dim_nd &&
           d.dim_nd_cap_n0 == base.dim_nd_cap_n0 && d.sigma0 == base.sigma0;
  };

  auto permuted = config.classes;
  std::reverse(permuted.begin(), permuted.end());
  CHECK(same(permuted));

  auto scaled = config.classes;
  for (auto& e : scaled[0]) e *= static_cast<std::int64_t>(p) + 1;  // unit mod p
  CHECK(same(scaled));

  auto shifted = config.classes;
  SeededRng rng(derive_subseed(31, "decide-shift"));
  for (auto& c : shifted)
    for (auto& e : c) e += static_cast<std::int64_t>(p) * (static_cast<std::int64_t>(rng.below(9)) - 4);
  CHECK(same(shifted));

  // Rebuilding from any basis of N_D gives the same answer.
  const Subspace nd = class_span_mod_p(lat, config.classes, p);
  std::vector<std::vector<std::int64_t>> basis_lift;
  for (const auto& row : nd.basis()) {
    std::vector<std::int64_t> v;
    for (const auto& e : row) v.push_back(e.coeff(0));
    basis_lift.push_back(std::move(v));
  }
  CHECK(same(basis_lift));
}

TEST_CASE("finite height short-circuits to DEGENERATE", "[degeneracy]") {
  const std::uint32_t p = 2, sigma0 = 2;
  const IntegralLattice lat = synthesize_gram(p, sigma0);
  const DivisorConfiguration config = construct_classes(lat, p, sigma0);
  REQUIRE(decide(config, p).verdict == Verdict::Nondegenerate);
  const Decision d = decide(config, p, true);
  CHECK(d.verdict == Verdict::Degenerate);
  CHECK(d.dim_nd == sigma0);
  CHECK_FALSE(d.dim_nd_cap_n0.has_value());
  CHECK_FALSE(d.sigma0.has_value());
}

TEST_CASE("reference_class finds a positive class deterministically", "[degeneracy]") {
  // Synthesized gram: diagonal is zero, the first U block gives e1 + e2.
  const IntegralLattice lat = synthesize_gram(5, 3);
  std::vector<std::int64_t> expect(22, 0);
  expect[0] = 1;
  expect[1] = 1;
  CHECK(reference_class(lat) == expect);
  CHECK(lat.pairing(expect, expect) == 2);

  CHECK(reference_class(IntegralLattice({{2, 0}, {0, -3}})) == std::vector<std::int64_t>{1, 0});
  CHECK(reference_class(IntegralLattice({{0, -1}, {-1, 0}})) == std::vector<std::int64_t>{1, -1});
  CHECK_THROWS_WITH(reference_class(IntegralLattice({{-2, 0}, {0, -2}})),
                    Catch::Matchers::ContainsSubstring("no class with positive self-intersection"));
}

TEST_CASE("construct_classes builds a minimal nondegenerate witness", "[degeneracy]") {
  for (const auto& [p, sigma0, r_extra] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{
           {2, 1, 3}, {2, 3, 0}, {3, 2, 3}, {5, 2, 1}, {7, 1, 2}}) {
    CAPTURE(p, sigma0, r_extra);
    const std::uint32_t r = sigma0 + r_extra;
    const IntegralLattice lat = synthesize_gram(p, sigma0);
    const DivisorConfiguration config = construct_classes(lat, p, r);
    const std::vector<std::int64_t> a = reference_class(lat);

    CHECK(config.classes.size() == r);
    REQUIRE(config.labels.size() == r);
    for (std::uint32_t i = 0; i < r; ++i)
      CHECK(config.labels[i] == "D" + std::to_string(i + 1));

    // Geometry constraints: positive self-intersection, positive pairing
    // with the reference class.
    for (const auto& c : config.classes) {
      CHECK(lat.pairing(c, c) > 0);
      CHECK(lat.pairing(c, a) > 0);
    }

    // The first sigma0 classes reduce mod p to exactly the default T (the
    // leading rows of the canonical kernel basis); the rest vanish mod p.
    const Subspace n0 = p_kernel(lat, p);
    std::vector<Vector> t_rows(n0.basis().begin(), n0.basis().begin() + sigma0);
    const Subspace t = span(n0.field(), lat.rank(), t_rows);
    std::vector<std::vector<std::int64_t>> head(config.classes.begin(),
                                                config.classes.begin() + sigma0);
    CHECK(class_span_mod_p(lat, head, p) == t);
    for (std::uint32_t j = sigma0; j < r; ++j)
      for (const auto e : config.classes[j]) CHECK(e % p == 0);

    CHECK(decide(config, p).verdict == Verdict::Nondegenerate);
    CHECK(decide(config, p).dim_nd == sigma0);

    // Minimality: dropping any of the first sigma0 classes flips the verdict,
    // dropping an extra class does not.
    for (std::uint32_t drop = 0; drop < r; ++drop) {
      auto rest = config.classes;
      rest.erase(rest.begin() + drop);
      const Verdict v = decide(DivisorConfiguration(lat, rest), p).verdict;
      if (drop < sigma0)
        CHECK(v == Verdict::Degenerate);
      else
        CHECK(v == Verdict::Nondegenerate);
    }
  }
  CHECK_THROWS_WITH(construct_classes(synthesize_gram(2, 3), 2, 2),
                    Catch::Matchers::ContainsSubstring("at least sigma0"));
}

TEST_CASE("seeded construction samples T but keeps every guarantee", "[degeneracy]") {
  const std::uint32_t p = 3, sigma0 = 3;
  const IntegralLattice lat = synthesize_gram(p, sigma0);
  const DivisorConfiguration a = construct_classes(lat, p, sigma0 + 1, 41);
  const DivisorConfiguration b = construct_classes(lat, p, sigma0 + 1, 41);
  CHECK(a.classes == b.classes);  // same seed, same output
  const Subspace n0 = p_kernel(lat, p);
  std::vector<std::vector<std::int64_t>> head(a.classes.begin(), a.classes.begin() + sigma0);
  const Subspace t = class_span_mod_p(lat, head, p);
  CHECK(t.dim() == sigma0);
  CHECK(intersect(t, n0).dim() == sigma0);  // T lies inside N_0
  CHECK(decide(a, p).verdict == Verdict::Nondegenerate);
}

TEST_CASE("equivalence audit: all four conditions stand or fall together", "[degeneracy]") {
  const std::uint32_t p = 2, sigma0 = 2;
  const IntegralLattice lat = synthesize_gram(p, sigma0);
  const CharacteristicSubspace cs = generate(p, sigma0, GenStrategy::SeededRandom, 3);

  const DivisorConfiguration good = construct_classes(lat, p, sigma0 + 1);
  const EquivalenceAudit pass = equivalence_audit(good, cs, p);
  CHECK(pass.criterion);
  CHECK(pass.chern_span);
  CHECK(pass.hodge_defect);
  CHECK(pass.nondegenerate);
  CHECK(pass.hold);
  CHECK(pass.report.dim_b_cap_f2 == 1);
  CHECK(pass.decision.verdict == Verdict::Nondegenerate);
  CHECK(pass.report.s == pass.decision.dim_nd);

  const EquivalenceAudit fail = equivalence_audit(DivisorConfiguration(lat, {}), cs, p);
  CHECK_FALSE(fail.criterion);
  CHECK_FALSE(fail.chern_span);
  CHECK_FALSE(fail.hodge_defect);
  CHECK_FALSE(fail.nondegenerate);
  CHECK_FALSE(fail.hold);

  CHECK_THROWS_WITH(equivalence_audit(good, generate(3, 2, GenStrategy::NormalBasis), p),
                    Catch::Matchers::ContainsSubstring("does not match"));
  CHECK_THROWS_AS(equivalence_audit(good, generate(2, 1, GenStrategy::NormalBasis), p),
                  std::invalid_argument);  // sigma0 mismatch via the model
}

TEST_CASE("audit agreement on random configurations", "[degeneracy]") {
  for (const auto& [p, sigma0] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {5, 1}}) {
    const IntegralLattice lat = synthesize_gram(p, sigma0);
    const CharacteristicSubspace cs = generate(p, sigma0, GenStrategy::SeededRandom, 77);
    const Subspace n0 = p_kernel(lat, p);
    SeededRng rng(derive_subseed(32, "audit-random"));
    std::uint32_t nondeg_seen = 0, deg_seen = 0;
    for (std::uint32_t rep = 0; rep < 60; ++rep) {
      const auto classes = detail::random_classes(lat, n0, p, rng);
      // Never throws: the four conditions agree on every input.
      const EquivalenceAudit audit = equivalence_audit(DivisorConfiguration(lat, classes), cs, p);
      CHECK(audit.hold == (audit.decision.verdict == Verdict::Nondegenerate));
      CHECK(audit.decision.dim_nd == class_span_mod_p(lat, classes, p).dim());
      (audit.hold ? nondeg_seen : deg_seen) += 1;
    }
    CHECK(nondeg_seen > 0);  // the sample must exercise both outcomes
    CHECK(deg_seen > 0);
  }
}

TEST_CASE("configuration validation", "[degeneracy]") {
  const IntegralLattice lat = synthesize_gram(2, 1);
  CHECK_THROWS_WITH(DivisorConfiguration(lat, {{1, 2, 3}}),
                    Catch::Matchers::ContainsSubstring("length must equal the lattice rank"));
  CHECK_THROWS_WITH(DivisorConfiguration(lat, n0_lifts(lat, 2, 1), {"D1", "D2"}),
                    Catch::Matchers::ContainsSubstring("labels must be empty or match"));
  CHECK_THROWS_AS(class_span_mod_p(lat, {{1}}, 2), std::invalid_argument);
}
