#pragma once

// Exhaustive enumeration helpers for the brute-force test oracles: all
// elements of a small field, all vectors of a small coordinate space, and
// all subspaces (walked by RREF pivot pattern, so each appears exactly once).

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ssk3/subspace.hpp"

namespace ssk3 {

inline constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 24;

template <typename Fn>
inline void for_each_element(const FieldDescriptor* fd, Fn&& fn) {
  const std::uint64_t q = field_size(fd);
  if (!q || q > kEnumerationCap)
    throw std::invalid_argument("for_each_element: field too large to enumerate");
  for (std::uint64_t i = 0; i < q; ++i) fn(FieldElement::from_index(fd, i));
}

template <typename Fn>
inline void for_each_vector(const FieldDescriptor* fd, std::uint32_t len, Fn&& fn) {
  const std::uint64_t q = field_size(fd);
  if (!q) throw std::invalid_argument("for_each_vector: field too large to enumerate");
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < len; ++i) {
    if (total > kEnumerationCap / q)
      throw std::invalid_argument("for_each_vector: space too large to enumerate");
    total *= q;
  }
  std::vector<std::uint64_t> digits(len, 0);
  for (;;) {
    Vector v;
    v.reserve(len);
    for (std::uint32_t i = 0; i < len; ++i) v.push_back(FieldElement::from_index(fd, digits[i]));
    fn(std::move(v));
    std::uint32_t i = 0;
    while (i < len && ++digits[i] == q) digits[i++] = 0;
    if (i == len) break;
  }
}

// Visit every subspace of fd^ambient exactly once: for each dimension k and
// each strictly increasing pivot-column set, fill the free entries (right of
// each pivot, outside pivot columns) with all field values. The matrices
// built this way are precisely the canonical RREF matrices.
template <typename Fn>
inline void for_each_subspace(const FieldDescriptor* fd, std::uint32_t ambient, Fn&& fn) {
  const std::uint64_t q = field_size(fd);
  if (!q || q > kEnumerationCap)
    throw std::invalid_argument("for_each_subspace: field too large to enumerate");
  fn(Subspace::zero(fd, ambient));
  for (std::uint32_t k = 1; k <= ambient; ++k) {
    std::vector<std::uint32_t> piv(k);
    for (std::uint32_t i = 0; i < k; ++i) piv[i] = i;
    for (;;) {
      std::vector<bool> is_pivot(ambient, false);
      for (const auto c : piv) is_pivot[c] = true;
      std::vector<std::pair<std::uint32_t, std::uint32_t>> free_pos;
      for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = piv[i] + 1; j < ambient; ++j)
          if (!is_pivot[j]) free_pos.emplace_back(i, j);
      std::vector<std::uint64_t> fill(free_pos.size(), 0);
      for (;;) {
        std::vector<Vector> rows(k, zero_vector(fd, ambient));
        for (std::uint32_t i = 0; i < k; ++i) rows[i][piv[i]] = FieldElement::one(fd);
        for (std::size_t t = 0; t < free_pos.size(); ++t)
          rows[free_pos[t].first][free_pos[t].second] = FieldElement::from_index(fd, fill[t]);
        fn(Subspace::from_canonical_rows(fd, ambient, std::move(rows), piv));
        std::size_t t = 0;
        while (t < fill.size() && ++fill[t] == q) fill[t++] = 0;
        if (t == fill.size()) break;
      }
      // next pivot combination in lexicographic order
      int i = static_cast<int>(k) - 1;
      while (i >= 0 && piv[static_cast<std::size_t>(i)] == ambient - k + static_cast<std::uint32_t>(i)) --i;
      if (i < 0) break;
      ++piv[static_cast<std::size_t>(i)];
      for (std::size_t j = static_cast<std::size_t>(i) + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
}

// Gaussian binomial [m choose k]_q via the Pascal-style recurrence
// [m k] = [m-1 k-1] + q^k [m-1 k]; counts k-dimensional subspaces of F_q^m.
inline std::uint64_t gaussian_binomial(std::uint32_t m, std::uint32_t k, std::uint64_t q) {
  if (k > m) return 0;
  std::vector<std::vector<std::uint64_t>> table(m + 1, std::vector<std::uint64_t>(k + 1, 0));
  for (std::uint32_t i = 0; i <= m; ++i) table[i][0] = 1;
  for (std::uint32_t i = 1; i <= m; ++i) {
    std::uint64_t qj = 1;
    for (std::uint32_t j = 1; j <= k && j <= i; ++j) {
      qj *= q;  // q^j
      table[i][j] = table[i - 1][j - 1] + qj * table[i - 1][j];
    }
  }
  return table[m][k];
}

// Total number of subspaces of F_q^m.
inline std::uint64_t subspace_count(std::uint32_t m, std::uint64_t q) {
  std::uint64_t total = 0;
  for (std::uint32_t k = 0; k <= m; ++k) total += gaussian_binomial(m, k, q);
  return total;
}

}  // namespace ssk3
