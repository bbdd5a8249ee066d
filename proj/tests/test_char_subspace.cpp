// Characteristic subspaces and their Frobenius filtration. The library
// computes U_m from the defining intersections/sums; the tests check it
// against the independent description U_m = span(e_1, ..., e_m) by
// Frobenius iterates, plus the recurrences and the stable-intersection law.

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "ssk3/char_subspace.hpp"
#include "ssk3/enumerate.hpp"

using namespace ssk3;

namespace {

Subspace iterate_span(const CharacteristicSubspace& cs, std::uint32_t m) {
  std::vector<Vector> rows;
  for (std::uint32_t i = 1; i <= m; ++i) rows.push_back(cs.iterate(i));
  return span(cs.field(), cs.ambient(), std::move(rows));
}

}  // namespace

TEST_CASE("normal-basis generator over F_4 is (t, t+1)", "[charsub]") {
  const CharacteristicSubspace cs = generate(2, 1, GenStrategy::NormalBasis);
  const FieldDescriptor* f4 = make_field(2, 2);
  const FieldElement t = FieldElement::from_coeffs(f4, {0, 1});
  const FieldElement t1 = FieldElement::from_coeffs(f4, {1, 1});
  CHECK(cs.generator() == Vector{t, t1});
  CHECK(cs.k().dim() == 1);
  CHECK(sum(cs.k(), phi_subspace(cs.k())).dim() == 2);
  CHECK(cs.iterate(1) == Vector{t, t1});
  CHECK(cs.iterate(2) == Vector{t1, t});  // phi swaps t and t+1
}

TEST_CASE("filtration equals the span of the first m iterates", "[charsub]") {
  for (const auto& [p, sigma0] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}}) {
    for (std::uint64_t seed : {101ull, 202ull}) {
      CAPTURE(p, sigma0, seed);
      const CharacteristicSubspace cs = generate(p, sigma0, GenStrategy::SeededRandom, seed);
      const std::uint32_t n = 2 * sigma0;
      for (std::uint32_t m = 0; m <= n; ++m) {
        CHECK(cs.filtration(m).dim() == m);
        CHECK(cs.filtration(m) == iterate_span(cs, m));
      }
      CHECK(cs.filtration(sigma0) == cs.k());
      CHECK(cs.filtration(sigma0 + 1) == sum(cs.k(), phi_subspace(cs.k())));
      CHECK(check_recurrences(cs));
      // K is never phi-stable: dim(K + phi K) = sigma0 + 1.
      CHECK(phi_subspace(cs.k()) != cs.k());
      CHECK(sum(cs.k(), phi_subspace(cs.k())).dim() == sigma0 + 1);
      CHECK(intersect(cs.k(), phi_subspace(cs.k())).dim() == sigma0 - 1);
    }
  }
}

TEST_CASE("filtration clamps outside [0, 2*sigma0]", "[charsub]") {
  const CharacteristicSubspace cs = generate(3, 2, GenStrategy::NormalBasis);
  CHECK(cs.filtration(-3).dim() == 0);
  CHECK(cs.filtration(0).dim() == 0);
  CHECK(cs.filtration(9).dim() == 4);
  CHECK(cs.filtration(9) == cs.filtration(4));
}

TEST_CASE("iterates apply phi coordinatewise", "[charsub]") {
  const CharacteristicSubspace cs = generate(2, 3, GenStrategy::SeededRandom, 11);
  CHECK(cs.iterate(1) == cs.generator());
  for (std::uint32_t m = 2; m <= 6; ++m) {
    Vector expect;
    for (const auto& e : cs.iterate(m - 1)) expect.push_back(frobenius(e));
    CHECK(cs.iterate(m) == expect);
  }
  CHECK_THROWS_AS(cs.iterate(0), std::invalid_argument);
  CHECK_THROWS_AS(cs.iterate(7), std::invalid_argument);
}

TEST_CASE("stable intersection dimension: formula equals brute force", "[charsub]") {
  // Exhaustive at (2,1) and (3,1): every F_p-subspace of F_p^2, every m.
  for (std::uint32_t p : {2u, 3u}) {
    const CharacteristicSubspace cs = generate(p, 1, GenStrategy::NormalBasis);
    const FieldDescriptor* fp = make_field(p, 1);
    for_each_subspace(fp, 2, [&](const Subspace& t) {
      for (std::uint32_t m = 0; m <= 2; ++m) {
        const auto [formula, brute] = stable_intersection_dim(cs, t, m);
        CHECK(formula == brute);
        const std::uint32_t s0 = t.dim();
        CHECK(formula == (s0 + m >= 2 ? s0 + m - 2 : 0));
      }
    });
  }
  // In particular no rational line meets K at sigma0 = 1.
  const CharacteristicSubspace cs = generate(2, 1, GenStrategy::NormalBasis);
  const FieldDescriptor* f2 = make_field(2, 1);
  const FieldElement o = FieldElement::one(f2), z = FieldElement::zero(f2);
  for (const Vector& line : {Vector{o, z}, Vector{z, o}, Vector{o, o}}) {
    const auto dims = stable_intersection_dim(cs, span(f2, 2, {line}), 1);
    CHECK(dims.brute == 0);
    CHECK(dims.formula == 0);
  }
}

TEST_CASE("stable intersection endpoints: T = 0 and T = everything", "[charsub]") {
  const CharacteristicSubspace cs = generate(3, 2, GenStrategy::SeededRandom, 4040);
  const FieldDescriptor* f3 = make_field(3, 1);
  const Subspace zero = span(f3, 4, {});
  std::vector<Vector> full_rows;
  for (std::uint32_t i = 0; i < 4; ++i) {
    Vector e = zero_vector(f3, 4);
    e[i] = FieldElement::one(f3);
    full_rows.push_back(e);
  }
  const Subspace full = span(f3, 4, full_rows);
  for (std::uint32_t m = 0; m <= 4; ++m) {
    CHECK(stable_intersection_dim(cs, zero, m).brute == 0);
    CHECK(stable_intersection_dim(cs, full, m).brute == m);  // U_m itself
  }
}

TEST_CASE("stable intersection validates its arguments", "[charsub]") {
  const CharacteristicSubspace cs = generate(2, 2, GenStrategy::NormalBasis);
  const FieldDescriptor* f2 = make_field(2, 1);
  const FieldDescriptor* f3 = make_field(3, 1);
  const Subspace ok = span(f2, 4, {});
  CHECK_THROWS_WITH(stable_intersection_dim(cs, ok, 5),
                    Catch::Matchers::ContainsSubstring("m out of range"));
  CHECK_THROWS_AS(stable_intersection_dim(cs, span(f3, 4, {}), 1), std::invalid_argument);
  CHECK_THROWS_AS(stable_intersection_dim(cs, span(f2, 3, {}), 1), std::invalid_argument);
  CHECK_THROWS_AS(stable_intersection_dim(cs, span(make_field(2, 4), 4, {}), 1),
                  std::invalid_argument);
}

TEST_CASE("constructor validates generators", "[charsub]") {
  const FieldDescriptor* f4 = make_field(2, 2);
  const FieldElement one4 = FieldElement::one(f4);
  CHECK_THROWS_WITH(CharacteristicSubspace(2, 1, Vector{one4}),
                    Catch::Matchers::ContainsSubstring("length 2*sigma0"));
  // Rational generators have dependent iterates (phi fixes them).
  CHECK_THROWS_WITH(CharacteristicSubspace(2, 1, Vector{one4, one4}),
                    Catch::Matchers::ContainsSubstring("linearly dependent"));
  const FieldDescriptor* f16 = make_field(2, 4);
  CHECK_THROWS_WITH(CharacteristicSubspace(2, 1, Vector{FieldElement::one(f16), FieldElement::one(f16)}),
                    Catch::Matchers::ContainsSubstring("field descriptor mismatch"));
  CHECK_THROWS_WITH(CharacteristicSubspace(2, 0, {}),
                    Catch::Matchers::ContainsSubstring("sigma0 out of range"));
  CHECK_THROWS_WITH(CharacteristicSubspace(2, 11, {}),
                    Catch::Matchers::ContainsSubstring("sigma0 out of range"));
}

TEST_CASE("generation strategies: determinism and seed handling", "[charsub]") {
  CHECK_THROWS_WITH(generate(2, 2, GenStrategy::SeededRandom),
                    Catch::Matchers::ContainsSubstring("requires an explicit seed"));
  const CharacteristicSubspace a = generate(2, 2, GenStrategy::SeededRandom, 7);
  const CharacteristicSubspace b = generate(2, 2, GenStrategy::SeededRandom, 7);
  CHECK(a.generator() == b.generator());
  const CharacteristicSubspace c = generate(2, 2, GenStrategy::NormalBasis);
  const CharacteristicSubspace d = generate(2, 2, GenStrategy::NormalBasis);
  CHECK(c.generator() == d.generator());  // deterministic search
  CHECK_THROWS_AS(generate(2, 11, GenStrategy::NormalBasis), std::invalid_argument);
}

TEST_CASE("every generated object is a genuine characteristic subspace", "[charsub]") {
  for (const auto& [p, sigma0] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 5}, {3, 4}, {5, 3}, {7, 2}}) {
    CAPTURE(p, sigma0);
    const CharacteristicSubspace cs = generate(p, sigma0, GenStrategy::SeededRandom, 99);
    CHECK(cs.p() == p);
    CHECK(cs.sigma0() == sigma0);
    CHECK(cs.ambient() == 2 * sigma0);
    CHECK(cs.field() == make_field(p, 2 * sigma0));
    CHECK(cs.k().dim() == sigma0);
    CHECK(iterate_span(cs, 2 * sigma0).dim() == 2 * sigma0);
  }
}
