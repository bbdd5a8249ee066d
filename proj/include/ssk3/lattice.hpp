#pragma once

// Integral lattices via their Gram matrices: exact determinant (Bareiss),
// Smith normal form over Z with bigints, the mod-p kernel N_0, the Artin
// invariant sigma0, and synthesis of Gram matrices with prescribed (p, sigma0).

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ssk3/subspace.hpp"

namespace ssk3 {

using BigInt = boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<BigInt>>;

// Fraction-free Gaussian elimination (Bareiss): every division is exact, so
// the result is the exact integer determinant with no intermediate blowup
// beyond minor sizes.
inline BigInt bareiss_determinant(BigMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t sw = k + 1;
      while (sw < n && m[sw][k] == 0) ++sw;
      if (sw == n) return 0;
      std::swap(m[k], m[sw]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Smith normal form diagonal: first diagonalize with integer row/column
// reduction (repeatedly moving a minimal-magnitude entry to the pivot and
// taking remainders until the pivot row and column are clear), then repair
// the divisibility chain with pairwise gcd/lcm swaps, which are realized by
// unimodular operations on 2x2 diagonal blocks. Returns nonnegative entries,
// divisibility-ordered, zeros last; length = min(rows, cols).
inline std::vector<BigInt> smith_invariant_factors(BigMatrix a) {
  using boost::multiprecision::abs;
  using boost::multiprecision::gcd;
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  const std::size_t steps = m < n ? m : n;
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // minimal-magnitude nonzero entry of the trailing submatrix -> (t, t)
      std::size_t bi = t, bj = t;
      BigInt best = 0;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (a[i][j] == 0) continue;
          const BigInt mag = abs(a[i][j]);
          if (best == 0 || mag < best) {
            best = mag;
            bi = i;
            bj = j;
          }
        }
      if (best == 0) { t = steps; break; }  // trailing submatrix all zero
      std::swap(a[t], a[bi]);
      if (bj != t)
        for (std::size_t i = 0; i < m; ++i) std::swap(a[i][t], a[i][bj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;  // remainder smaller than pivot
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (t == steps) break;
  }
  std::vector<BigInt> d;
  d.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t) d.push_back(abs(a[t][t]));
  // zeros last, then enforce d[i] | d[j] for i < j via (gcd, lcm)
  std::stable_sort(d.begin(), d.end(),
                   [](const BigInt& x, const BigInt& y) { return (x != 0) && (y == 0); });
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        if (d[i] == 0 || d[j] % d[i] == 0) continue;
        const BigInt g = gcd(d[i], d[j]);
        d[j] = d[i] / g * d[j];
        d[i] = g;
        changed = true;
      }
  }
  return d;
}

class IntegralLattice {
 public:
  explicit IntegralLattice(std::vector<std::vector<std::int64_t>> gram) : gram_(std::move(gram)) {
    const std::size_t r = gram_.size();
    if (r == 0) throw std::invalid_argument("IntegralLattice: gram matrix must be nonempty");
    for (const auto& row : gram_)
      if (row.size() != r) throw std::invalid_argument("IntegralLattice: gram matrix must be square");
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j)
        if (gram_[i][j] != gram_[j][i])
          throw std::invalid_argument("IntegralLattice: gram matrix must be symmetric");
    det_ = bareiss_determinant(to_big());
    if (det_ == 0)
      throw std::invalid_argument("IntegralLattice: gram matrix must have nonzero determinant");
  }

  std::uint32_t rank() const { return static_cast<std::uint32_t>(gram_.size()); }
  const std::vector<std::vector<std::int64_t>>& gram() const { return gram_; }
  const BigInt& determinant() const { return det_; }

  BigMatrix to_big() const {
    BigMatrix m(gram_.size());
    for (std::size_t i = 0; i < gram_.size(); ++i)
      m[i].assign(gram_[i].begin(), gram_[i].end());
    return m;
  }

  // Intersection pairing of two coordinate vectors, exact.
  BigInt pairing(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) const {
    if (a.size() != gram_.size() || b.size() != gram_.size())
      throw std::invalid_argument("pairing: vector length must equal the lattice rank");
    BigInt total = 0;
    for (std::size_t i = 0; i < gram_.size(); ++i) {
      if (!a[i]) continue;
      BigInt row = 0;
      for (std::size_t j = 0; j < gram_.size(); ++j) row += BigInt(gram_[i][j]) * b[j];
      total += BigInt(a[i]) * row;
    }
    return total;
  }

  friend bool operator==(const IntegralLattice& x, const IntegralLattice& y) {
    return x.gram_ == y.gram_;
  }
  friend bool operator!=(const IntegralLattice& x, const IntegralLattice& y) { return !(x == y); }

 private:
  std::vector<std::vector<std::int64_t>> gram_;
  BigInt det_;
};

// Kernel of the Gram matrix mod p: the subspace N_0 of classes pairing into
// pZ with the whole lattice, as a rational subspace of F_p^rank.
inline Subspace p_kernel(const IntegralLattice& lat, std::uint32_t p) {
  if (!detail::is_prime_u32(p)) throw std::invalid_argument("p_kernel: p must be prime");
  const FieldDescriptor* fp = make_field(p, 1);
  std::vector<Vector> rows;
  rows.reserve(lat.rank());
  for (const auto& row : lat.gram()) {
    Vector v;
    v.reserve(row.size());
    for (const auto entry : row) v.push_back(FieldElement::from_int(fp, entry));
    rows.push_back(std::move(v));
  }
  return kernel(fp, lat.rank(), std::move(rows));
}

// Artin invariant sigma0 from the Smith normal form: every invariant factor
// must be 1 or p (the discriminant group is then an F_p-vector space), and
// the number of p's must be even; sigma0 is half that count.
inline std::uint32_t artin_invariant(const IntegralLattice& lat, std::uint32_t p) {
  if (!detail::is_prime_u32(p)) throw std::invalid_argument("artin_invariant: p must be prime");
  const std::vector<BigInt> factors = smith_invariant_factors(lat.to_big());
  std::uint32_t count = 0;
  for (const auto& d : factors) {
    if (d == 1) continue;
    if (d == p) {
      ++count;
      continue;
    }
    throw std::invalid_argument("discriminant group not killed by p");
  }
  if (count % 2 != 0) throw std::invalid_argument("odd p-rank");
  const std::uint32_t sigma0 = count / 2;
  // Cross-checks against two independent routes: the mod-p kernel dimension
  // and the p-adic valuation of the determinant must both equal 2*sigma0.
  if (p_kernel(lat, p).dim() != 2 * sigma0)
    throw std::logic_error("artin_invariant: p-kernel dimension disagrees with Smith normal form");
  BigInt det = boost::multiprecision::abs(lat.determinant());
  std::uint32_t val = 0;
  while (det % p == 0) {
    det /= p;
    ++val;
  }
  if (val != 2 * sigma0)
    throw std::logic_error("artin_invariant: determinant p-part disagrees with Smith normal form");
  return sigma0;
}

// Rank-22 block Gram U^{(11 - sigma0)} + U(p)^{sigma0} with U = [[0,1],[1,0]]:
// determinant -p^{2*sigma0}, Artin invariant sigma0. Matches the discriminant
// data of a supersingular-K3 Picard lattice (no isometry claim).
inline IntegralLattice synthesize_gram(std::uint32_t p, std::uint32_t sigma0) {
  if (!detail::is_prime_u32(p)) throw std::invalid_argument("synthesize_gram: p must be prime");
  if (sigma0 < 1 || sigma0 > 10)
    throw std::invalid_argument("synthesize_gram: sigma0 out of range [1, 10]");
  std::vector<std::vector<std::int64_t>> gram(22, std::vector<std::int64_t>(22, 0));
  for (std::uint32_t b = 0; b < 11; ++b) {
    const std::int64_t off = b < 11 - sigma0 ? 1 : static_cast<std::int64_t>(p);
    gram[2 * b][2 * b + 1] = off;
    gram[2 * b + 1][2 * b] = off;
  }
  return IntegralLattice(std::move(gram));
}

}  // namespace ssk3
