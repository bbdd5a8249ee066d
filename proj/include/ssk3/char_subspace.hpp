#pragma once

// Characteristic subspaces K inside a 2*sigma0-dimensional ambient space
// over F_{p^{2*sigma0}}, parametrized by a generator e whose Frobenius
// iterates e_m = phi^{m-1}(e) form a basis. Provides the filtration U_m, its
// recurrences, and the phi-stable intersection-dimension law.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssk3/rng.hpp"
#include "ssk3/subspace.hpp"

namespace ssk3 {

enum class GenStrategy { SeededRandom, NormalBasis };

namespace detail {

// Rows e, phi(e), ..., phi^{count-1}(e) (entrywise Frobenius).
inline std::vector<Vector> frobenius_iterates(const Vector& e, std::uint32_t count) {
  std::vector<Vector> rows;
  rows.reserve(count);
  rows.push_back(e);
  for (std::uint32_t m = 1; m < count; ++m) {
    Vector next;
    next.reserve(e.size());
    for (const auto& x : rows.back()) next.push_back(frobenius(x));
    rows.push_back(std::move(next));
  }
  return rows;
}

inline bool iterates_independent(const FieldDescriptor* fd, const Vector& e) {
  const std::uint32_t n = static_cast<std::uint32_t>(e.size());
  return span(fd, n, frobenius_iterates(e, n)).dim() == n;
}

}  // namespace detail

class CharacteristicSubspace {
 public:
  CharacteristicSubspace(std::uint32_t p, std::uint32_t sigma0, Vector generator)
      : p_(p), sigma0_(sigma0), fd_(make_field_checked(p, sigma0)), gen_(std::move(generator)) {
    if (gen_.size() != 2 * static_cast<std::size_t>(sigma0_))
      throw std::invalid_argument(
          "CharacteristicSubspace: generator must have length 2*sigma0");
    for (const auto& x : gen_)
      if (x.field() != fd_) throw std::invalid_argument("field descriptor mismatch");
    iterates_ = detail::frobenius_iterates(gen_, 2 * sigma0_);
    if (span(fd_, 2 * sigma0_, iterates_).dim() != 2 * sigma0_)
      throw std::invalid_argument(
          "CharacteristicSubspace: generator iterates are linearly dependent");
  }

  std::uint32_t p() const { return p_; }
  std::uint32_t sigma0() const { return sigma0_; }
  std::uint32_t ambient() const { return 2 * sigma0_; }
  const FieldDescriptor* field() const { return fd_; }
  const Vector& generator() const { return gen_; }

  // e_m = phi^{m-1}(e), 1 <= m <= 2*sigma0.
  const Vector& iterate(std::uint32_t m) const {
    if (m < 1 || m > 2 * sigma0_)
      throw std::invalid_argument("iterate: m out of range [1, 2*sigma0]");
    return iterates_[m - 1];
  }

  // K = span(e_1, ..., e_{sigma0}).
  Subspace k() const {
    std::vector<Vector> rows(iterates_.begin(), iterates_.begin() + sigma0_);
    return span(fd_, 2 * sigma0_, std::move(rows));
  }

  // The filtration, straight from its defining expression:
  //   m <= 0            -> 0
  //   0 < m <= sigma0   -> intersection of phi^{-j}(K), j = 0..sigma0-m
  //   sigma0 <= m < 2s0 -> sum of phi^{j}(K),          j = 0..m-sigma0
  //   m >= 2*sigma0     -> the full ambient space U
  // Always dim U_m = m, and U_m = span(e_1..e_m). Memoized: sweeps query the
  // same level once per phi-stable subspace, and the object is immutable.
  Subspace filtration(std::int64_t m) const {
    const std::uint32_t n = 2 * sigma0_;
    if (m <= 0) return Subspace::zero(fd_, n);
    if (m >= n) return Subspace::full(fd_, n);
    if (cache_.empty()) cache_.resize(n + 1);
    auto& slot = cache_[static_cast<std::size_t>(m)];
    if (!slot) slot = compute_filtration(static_cast<std::uint32_t>(m));
    return *slot;
  }

 private:
  static const FieldDescriptor* make_field_checked(std::uint32_t p, std::uint32_t sigma0) {
    if (sigma0 < 1 || sigma0 > 10)
      throw std::invalid_argument("CharacteristicSubspace: sigma0 out of range [1, 10]");
    return make_field(p, 2 * sigma0);
  }

  Subspace compute_filtration(std::uint32_t m) const {
    const Subspace base = k();
    Subspace v = base;
    if (m <= sigma0_) {
      for (std::uint32_t j = 1; j <= sigma0_ - m; ++j)
        v = intersect(v, phi_power_subspace(base, -static_cast<std::int64_t>(j)));
    } else {
      for (std::uint32_t j = 1; j <= m - sigma0_; ++j)
        v = sum(v, phi_power_subspace(base, j));
    }
    return v;
  }

  std::uint32_t p_;
  std::uint32_t sigma0_;
  const FieldDescriptor* fd_;
  Vector gen_;
  std::vector<Vector> iterates_;
  mutable std::vector<std::optional<Subspace>> cache_;
};

// seeded-random: draw generators until the iterates are independent (seed
// mandatory, so runs are reproducible). normal-basis: deterministic search
// for the first normal element alpha in index order; e = (alpha, alpha^p,
// ...) then has phi acting as a cyclic coordinate shift, and independence of
// the iterates is exactly normality of alpha.
inline CharacteristicSubspace generate(std::uint32_t p, std::uint32_t sigma0, GenStrategy strategy,
                                       std::optional<std::uint64_t> seed = std::nullopt) {
  if (sigma0 < 1 || sigma0 > 10)
    throw std::invalid_argument("generate: sigma0 out of range [1, 10]");
  const std::uint32_t n = 2 * sigma0;
  const FieldDescriptor* fd = make_field(p, n);
  if (strategy == GenStrategy::SeededRandom) {
    if (!seed)
      throw std::invalid_argument("generate: seeded-random strategy requires an explicit seed");
    SeededRng rng(*seed);
    constexpr std::uint32_t kBudget = 1000;
    for (std::uint32_t attempt = 0; attempt < kBudget; ++attempt) {
      Vector e;
      e.reserve(n);
      for (std::uint32_t i = 0; i < n; ++i) {
        std::vector<std::uint32_t> coeffs(n);
        for (auto& c : coeffs) c = static_cast<std::uint32_t>(rng.below(p));
        e.push_back(FieldElement::from_coeffs(fd, coeffs));
      }
      if (detail::iterates_independent(fd, e)) return CharacteristicSubspace(p, sigma0, std::move(e));
    }
    throw std::runtime_error("generate: attempt budget exhausted (seeded-random strategy)");
  }
  const std::uint64_t q = field_size(fd);
  const std::uint64_t cap = q && q < (std::uint64_t{1} << 20) ? q : (std::uint64_t{1} << 20);
  for (std::uint64_t idx = 1; idx < cap; ++idx) {
    const FieldElement alpha = FieldElement::from_index(fd, idx);
    Vector e;
    e.reserve(n);
    FieldElement x = alpha;
    for (std::uint32_t i = 0; i < n; ++i) {
      e.push_back(x);
      x = frobenius(x);
    }
    if (detail::iterates_independent(fd, e)) return CharacteristicSubspace(p, sigma0, std::move(e));
  }
  // Normal elements always exist (normal basis theorem); guarded regardless.
  throw std::runtime_error("generate: no normal element found");
}

// Both displayed recurrences of the filtration:
//   U_{m+1} = U_m + phi(U_m)        for m > 0
//   phi(U_{m-1}) = U_m cap phi(U_m) for 0 < m < 2*sigma0
inline bool check_recurrences(const CharacteristicSubspace& cs) {
  const std::uint32_t n = 2 * cs.sigma0();
  std::vector<Subspace> u;
  u.reserve(n + 1);
  for (std::uint32_t m = 0; m <= n; ++m) u.push_back(cs.filtration(m));
  for (std::uint32_t m = 1; m < n; ++m) {
    const Subspace phi_um = phi_subspace(u[m]);
    if (u[m + 1] != sum(u[m], phi_um)) return false;
    if (phi_subspace(u[m - 1]) != intersect(u[m], phi_um)) return false;
  }
  return true;
}

struct StableIntersectionDims {
  std::uint32_t formula;
  std::uint32_t brute;
};

// dim((T tensor k) cap U_m) for an F_p-subspace T of F_p^{2*sigma0}: the
// formula max(0, s0 + m - 2*sigma0) against the direct linear-algebra
// computation. The two must agree; callers compare.
inline StableIntersectionDims stable_intersection_dim(const CharacteristicSubspace& cs,
                                                      const Subspace& t, std::uint32_t m) {
  const std::uint32_t n = 2 * cs.sigma0();
  if (m > n)
    throw std::invalid_argument("stable_intersection_dim: m out of range [0, 2*sigma0]");
  if (t.field()->n != 1 || t.field()->p != cs.p() || t.ambient() != n)
    throw std::invalid_argument(
        "stable_intersection_dim: T must be an F_p-subspace of F_p^{2*sigma0}");
  const std::uint32_t s0 = t.dim();
  StableIntersectionDims out{};
  out.formula = s0 + m >= n ? s0 + m - n : 0;
  out.brute = intersect(lift_subspace(t, cs.field()), cs.filtration(m)).dim();
  return out;
}

}  // namespace ssk3
