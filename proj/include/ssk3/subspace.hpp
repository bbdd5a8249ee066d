#pragma once

// Canonical subspace algebra over F_{p^n}: spans, sums, intersections,
// kernels, and the coordinatewise Frobenius twist. Every subspace is stored
// as its reduced row-echelon basis, so subspace equality is matrix equality.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ssk3/field.hpp"

namespace ssk3 {

using Vector = std::vector<FieldElement>;

inline Vector zero_vector(const FieldDescriptor* fd, std::uint32_t len) {
  return Vector(len, FieldElement::zero(fd));
}

namespace detail {

// In-place Gauss-Jordan to reduced row echelon form; zero rows dropped,
// pivot columns (strictly increasing) reported. Exact over any field.
inline void rref_in_place(std::vector<Vector>& rows, std::vector<std::uint32_t>* pivots_out) {
  std::vector<std::uint32_t> pivots;
  if (!rows.empty()) {
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
      std::size_t pr = r;
      while (pr < rows.size() && rows[pr][col].is_zero()) ++pr;
      if (pr == rows.size()) continue;
      std::swap(rows[r], rows[pr]);
      const FieldElement inv = inverse(rows[r][col]);
      for (std::size_t c = col; c < cols; ++c) rows[r][c] *= inv;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == r) continue;
        const FieldElement f = rows[i][col];
        if (f.is_zero()) continue;
        for (std::size_t c = col; c < cols; ++c) rows[i][c] -= f * rows[r][c];
      }
      pivots.push_back(static_cast<std::uint32_t>(col));
      ++r;
    }
    rows.resize(r, Vector());
  }
  if (pivots_out) *pivots_out = std::move(pivots);
}

}  // namespace detail

class Subspace {
 public:
  static Subspace zero(const FieldDescriptor* fd, std::uint32_t ambient) {
    return Subspace(fd, ambient, {}, {});
  }

  static Subspace full(const FieldDescriptor* fd, std::uint32_t ambient) {
    std::vector<Vector> rows;
    std::vector<std::uint32_t> pivots;
    for (std::uint32_t i = 0; i < ambient; ++i) {
      Vector v = zero_vector(fd, ambient);
      v[i] = FieldElement::one(fd);
      rows.push_back(std::move(v));
      pivots.push_back(i);
    }
    return Subspace(fd, ambient, std::move(rows), std::move(pivots));
  }

  // Caller promises rows are already canonical RREF with the given pivots
  // (used where a field automorphism or subfield identification is applied
  // entrywise, which preserves echelon structure).
  static Subspace from_canonical_rows(const FieldDescriptor* fd, std::uint32_t ambient,
                                      std::vector<Vector> rows, std::vector<std::uint32_t> pivots) {
    return Subspace(fd, ambient, std::move(rows), std::move(pivots));
  }

  const FieldDescriptor* field() const { return fd_; }
  std::uint32_t ambient() const { return ambient_; }
  std::uint32_t dim() const { return static_cast<std::uint32_t>(rows_.size()); }
  const std::vector<Vector>& basis() const { return rows_; }
  const std::vector<std::uint32_t>& pivots() const { return pivots_; }

  // Canonical representative of the coset v + (this subspace): eliminate v
  // against the RREF basis. Depends only on the coset, so it doubles as a
  // splitting-free quotient map.
  Vector reduce(Vector v) const {
    check_vector(v);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const FieldElement f = v[pivots_[k]];
      if (f.is_zero()) continue;
      for (std::uint32_t c = pivots_[k]; c < ambient_; ++c) v[c] -= f * rows_[k][c];
    }
    return v;
  }

  bool contains(const Vector& v) const {
    const Vector r = reduce(v);
    for (const auto& e : r)
      if (!e.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.fd_ == b.fd_ && a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(const FieldDescriptor* fd, std::uint32_t ambient, std::vector<Vector> rows,
           std::vector<std::uint32_t> pivots)
      : fd_(fd), ambient_(ambient), rows_(std::move(rows)), pivots_(std::move(pivots)) {}

  void check_vector(const Vector& v) const {
    if (v.size() != ambient_)
      throw std::invalid_argument("Subspace: vector length does not match ambient dimension");
    for (const auto& e : v)
      if (e.field() != fd_) throw std::invalid_argument("field descriptor mismatch");
  }

  const FieldDescriptor* fd_;
  std::uint32_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::uint32_t> pivots_;

  friend Subspace span(const FieldDescriptor*, std::uint32_t, std::vector<Vector>);
};

inline Subspace span(const FieldDescriptor* fd, std::uint32_t ambient,
                     std::vector<Vector> vectors) {
  for (const auto& v : vectors) {
    if (v.size() != ambient)
      throw std::invalid_argument("span: vector length does not match ambient dimension");
    for (const auto& e : v)
      if (e.field() != fd) throw std::invalid_argument("field descriptor mismatch");
  }
  std::vector<std::uint32_t> pivots;
  detail::rref_in_place(vectors, &pivots);
  return Subspace(fd, ambient, std::move(vectors), std::move(pivots));
}

inline void check_same_space(const Subspace& a, const Subspace& b) {
  if (a.field() != b.field()) throw std::invalid_argument("field descriptor mismatch");
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("ambient dimension mismatch");
}

inline Subspace sum(const Subspace& a, const Subspace& b) {
  check_same_space(a, b);
  std::vector<Vector> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return span(a.field(), a.ambient(), std::move(rows));
}

// Zassenhaus: reduce the block matrix [A|A; B|0]. Rows whose left half
// vanished are combinations summing to zero in V+W, and their right halves
// are exactly a spanning set of the intersection.
inline Subspace intersect(const Subspace& a, const Subspace& b) {
  check_same_space(a, b);
  const std::uint32_t amb = a.ambient();
  const FieldDescriptor* fd = a.field();
  std::vector<Vector> rows;
  rows.reserve(a.dim() + b.dim());
  for (const auto& v : a.basis()) {
    Vector r = v;
    r.insert(r.end(), v.begin(), v.end());
    rows.push_back(std::move(r));
  }
  for (const auto& w : b.basis()) {
    Vector r = w;
    r.resize(2 * amb, FieldElement::zero(fd));
    rows.push_back(std::move(r));
  }
  detail::rref_in_place(rows, nullptr);
  std::vector<Vector> inter;
  for (const auto& r : rows) {
    bool left_zero = true;
    for (std::uint32_t c = 0; c < amb && left_zero; ++c) left_zero = r[c].is_zero();
    if (left_zero) inter.emplace_back(r.begin() + amb, r.end());
  }
  return span(fd, amb, std::move(inter));
}

// Right kernel {x : M x = 0} of the matrix with the given rows.
inline Subspace kernel(const FieldDescriptor* fd, std::uint32_t ncols, std::vector<Vector> rows) {
  for (const auto& r : rows)
    if (r.size() != ncols) throw std::invalid_argument("kernel: row length mismatch");
  std::vector<std::uint32_t> pivots;
  detail::rref_in_place(rows, &pivots);
  std::vector<bool> is_pivot(ncols, false);
  for (const auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::uint32_t j = 0; j < ncols; ++j) {
    if (is_pivot[j]) continue;
    Vector v = zero_vector(fd, ncols);
    v[j] = FieldElement::one(fd);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -rows[k][j];
    basis.push_back(std::move(v));
  }
  return span(fd, ncols, std::move(basis));
}

// Coordinatewise a -> a^{p^k}. A field automorphism applied entrywise sends
// one canonical RREF basis to another (pivot ones and zero patterns are
// fixed), so the image is built directly with the same pivot columns.
inline Subspace phi_power_subspace(const Subspace& v, std::int64_t k) {
  std::vector<Vector> rows;
  rows.reserve(v.dim());
  for (const auto& row : v.basis()) {
    Vector out;
    out.reserve(row.size());
    for (const auto& e : row) out.push_back(frobenius_power(e, k));
    rows.push_back(std::move(out));
  }
  return Subspace::from_canonical_rows(v.field(), v.ambient(), std::move(rows), v.pivots());
}

inline Subspace phi_subspace(const Subspace& v) { return phi_power_subspace(v, 1); }
inline Subspace phi_inverse_subspace(const Subspace& v) { return phi_power_subspace(v, -1); }

// V is rational (of the form T tensor k for an F_p-subspace T) iff phi fixes
// V, iff the canonical basis entries are Frobenius-fixed, i.e. lie in F_p.
inline bool is_rational(const Subspace& v) {
  for (const auto& row : v.basis())
    for (const auto& e : row)
      if (frobenius(e) != e) return false;
  return true;
}

// The F_p-form T of a rational subspace; dim_{F_p} T = dim V.
inline Subspace rational_points(const Subspace& v) {
  if (!is_rational(v))
    throw std::invalid_argument("rational_points: subspace is not rational (phi does not fix it)");
  const FieldDescriptor* fp = make_field(v.field()->p, 1);
  std::vector<Vector> rows;
  rows.reserve(v.dim());
  for (const auto& row : v.basis()) {
    Vector out;
    out.reserve(row.size());
    // Frobenius-fixed elements are constants, so coefficient 0 is the value.
    for (const auto& e : row) out.push_back(FieldElement::from_uint(fp, e.coeff(0)));
    rows.push_back(std::move(out));
  }
  return Subspace::from_canonical_rows(fp, v.ambient(), std::move(rows), v.pivots());
}

// T tensor k: embed a prime-field subspace into the degree-n extension.
inline Subspace lift_subspace(const Subspace& t, const FieldDescriptor* fd) {
  if (t.field()->n != 1 || t.field()->p != fd->p)
    throw std::invalid_argument("lift_subspace: expected a prime-field subspace over the same p");
  std::vector<Vector> rows;
  rows.reserve(t.dim());
  for (const auto& row : t.basis()) {
    Vector out;
    out.reserve(row.size());
    for (const auto& e : row) out.push_back(FieldElement::from_uint(fd, e.coeff(0)));
    rows.push_back(std::move(out));
  }
  return Subspace::from_canonical_rows(fd, t.ambient(), std::move(rows), t.pivots());
}

}  // namespace ssk3
