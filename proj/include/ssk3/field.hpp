#pragma once

// Exact arithmetic in F_p and F_{p^n}: elements are dense coefficient lists
// modulo a canonical irreducible modulus, so equal (p, n) always means the
// same field with the same representation, across processes and platforms.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ssk3 {

inline constexpr std::uint32_t kMaxExtensionDegree = 32;
// Primes are capped so that cross-multiplied 64-bit accumulators cannot
// overflow: n * (p-1)^2 + n * p^2 < 2^64 holds comfortably for p < 2^20.
inline constexpr std::uint32_t kMaxPrime = 1u << 20;

struct FieldDescriptor {
  std::uint32_t p;                     // characteristic, prime
  std::uint32_t n;                     // extension degree over F_p
  std::vector<std::uint32_t> modulus;  // monic, degree n, constant term first (length n+1)
};

namespace detail {

inline bool is_prime_u32(std::uint32_t v) {
  if (v < 2) return false;
  for (std::uint32_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

// Inverse of a modulo prime p by extended Euclid.
inline std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    const std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::domain_error("mod_inverse: argument not invertible");
  return static_cast<std::uint32_t>((t % p + p) % p);
}

// Dense polynomials over F_p, constant term first. Only used for modulus
// selection and element inversion; element arithmetic has its own fixed-size
// fast path below.
using Poly = std::vector<std::uint32_t>;

inline int poly_deg(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

inline void poly_trim(Poly& a) {
  a.resize(static_cast<std::size_t>(poly_deg(a) + 1));
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
  }
  Poly out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<std::uint32_t>(acc[i] % p);
  poly_trim(out);
  return out;
}

// Division with remainder; den must be nonzero.
inline void poly_divmod(const Poly& num, const Poly& den, std::uint32_t p, Poly* quot, Poly* rem) {
  const int dd = poly_deg(den);
  if (dd < 0) throw std::domain_error("poly_divmod: division by zero polynomial");
  Poly r = num;
  poly_trim(r);
  Poly q;
  const std::uint32_t lead_inv = mod_inverse(den[static_cast<std::size_t>(dd)], p);
  int dr = poly_deg(r);
  if (dr >= dd) q.assign(static_cast<std::size_t>(dr - dd + 1), 0);
  while (dr >= dd) {
    const std::uint64_t c = static_cast<std::uint64_t>(r[static_cast<std::size_t>(dr)]) * lead_inv % p;
    q[static_cast<std::size_t>(dr - dd)] = static_cast<std::uint32_t>(c);
    for (int i = 0; i <= dd; ++i) {
      auto& cell = r[static_cast<std::size_t>(dr - dd + i)];
      cell = static_cast<std::uint32_t>(
          (cell + c * (p - den[static_cast<std::size_t>(i)] % p)) % p);
    }
    dr = poly_deg(r);
  }
  poly_trim(r);
  if (quot) *quot = std::move(q);
  if (rem) *rem = std::move(r);
}

inline Poly poly_mod(const Poly& a, const Poly& f, std::uint32_t p) {
  Poly r;
  poly_divmod(a, f, p, nullptr, &r);
  return r;
}

// Monic gcd.
inline Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  const int d = poly_deg(a);
  if (d >= 0) {
    const std::uint32_t inv = mod_inverse(a[static_cast<std::size_t>(d)], p);
    for (auto& c : a) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * inv % p);
  }
  return a;
}

inline Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(base, f, p);
  while (e) {
    if (e & 1) result = poly_mod(poly_mul(result, base, p), f, p);
    base = poly_mod(poly_mul(base, base, p), f, p);
    e >>= 1;
  }
  return result;
}

// Irreducibility over F_p, two exact routes. Small cases use exhaustive
// divisor search; otherwise f (monic, degree n) is irreducible iff
// gcd(x^{p^i} - x, f) = 1 for i = 1..n/2, since x^{p^i} - x is the product
// of all monic irreducibles of degree dividing i.
inline bool poly_is_irreducible(const Poly& f, std::uint32_t p) {
  const int n = poly_deg(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  const std::uint32_t half = static_cast<std::uint32_t>(n) / 2;
  if (n <= 4 && p <= 64) {
    for (std::uint32_t d = 1; d <= half; ++d) {
      std::uint64_t count = 1;
      for (std::uint32_t i = 0; i < d; ++i) count *= p;
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly g(d + 1, 0);
        g[d] = 1;
        std::uint64_t v = idx;
        for (std::uint32_t i = 0; i < d; ++i) {
          g[i] = static_cast<std::uint32_t>(v % p);
          v /= p;
        }
        Poly r = poly_mod(f, g, p);
        if (r.empty()) return false;
      }
    }
    return true;
  }
  Poly h{0, 1};  // x
  for (std::uint32_t i = 1; i <= half; ++i) {
    h = poly_powmod(h, p, f, p);  // x^{p^i} mod f
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;  // h - x
    Poly g = poly_gcd(diff, f, p);
    if (poly_deg(g) > 0) return false;
  }
  return true;
}

// First irreducible monic degree-n polynomial, ordering the coefficient
// tuple (c_{n-1}, ..., c_0) as a base-p integer ascending. Deterministic, so
// every run of every build picks the same modulus.
inline Poly canonical_modulus(std::uint32_t p, std::uint32_t n) {
  if (n == 1) return {0, 1};  // x itself: F_p[t]/(t) = F_p
  for (std::uint64_t idx = 0;; ++idx) {
    Poly f(n + 1, 0);
    f[n] = 1;
    std::uint64_t v = idx;
    for (std::uint32_t i = 0; i < n; ++i) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    if (v != 0)  // idx >= p^n: search space exhausted (cannot happen)
      throw std::logic_error("canonical_modulus: no irreducible polynomial found");
    if (poly_is_irreducible(f, p)) return f;
  }
}

}  // namespace detail

// Interned descriptors: one immutable FieldDescriptor per (p, n), alive for
// the whole process, so pointer equality is field equality.
inline const FieldDescriptor* make_field(std::uint32_t p, std::uint32_t n) {
  if (!detail::is_prime_u32(p))
    throw std::invalid_argument("make_field: p must be prime (got " + std::to_string(p) + ")");
  if (p >= kMaxPrime)
    throw std::invalid_argument("make_field: p out of range [2, 2^20)");
  if (n < 1 || n > kMaxExtensionDegree)
    throw std::invalid_argument("make_field: n out of range [1, " +
                                std::to_string(kMaxExtensionDegree) + "]");
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<FieldDescriptor>> cache;
  const std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, n}];
  if (!slot) {
    slot = std::make_unique<FieldDescriptor>();
    slot->p = p;
    slot->n = n;
    slot->modulus = detail::canonical_modulus(p, n);
  }
  return slot.get();
}

// Number of field elements if it fits in 64 bits, otherwise 0.
inline std::uint64_t field_size(const FieldDescriptor* fd) {
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < fd->n; ++i) {
    if (size > (std::uint64_t{1} << 62) / fd->p) return 0;
    size *= fd->p;
  }
  return size;
}

class FieldElement {
 public:
  static FieldElement zero(const FieldDescriptor* fd) { return FieldElement(fd); }

  static FieldElement one(const FieldDescriptor* fd) {
    FieldElement e(fd);
    e.coeff_[0] = 1;
    return e;
  }

  // Constant (prime-subfield) element.
  static FieldElement from_uint(const FieldDescriptor* fd, std::uint64_t v) {
    FieldElement e(fd);
    e.coeff_[0] = static_cast<std::uint32_t>(v % fd->p);
    return e;
  }

  static FieldElement from_int(const FieldDescriptor* fd, std::int64_t v) {
    const std::int64_t p = fd->p;
    return from_uint(fd, static_cast<std::uint64_t>((v % p + p) % p));
  }

  static FieldElement from_coeffs(const FieldDescriptor* fd, const std::vector<std::uint32_t>& c) {
    if (c.size() != fd->n)
      throw std::invalid_argument("FieldElement: coefficient list must have length n");
    FieldElement e(fd);
    for (std::uint32_t i = 0; i < fd->n; ++i) {
      if (c[i] >= fd->p)
        throw std::invalid_argument("FieldElement: coefficient out of range [0, p)");
      e.coeff_[i] = c[i];
    }
    return e;
  }

  // idx written base p, least-significant digit = constant coefficient.
  // Only meaningful when the field is small enough to enumerate.
  static FieldElement from_index(const FieldDescriptor* fd, std::uint64_t idx) {
    FieldElement e(fd);
    for (std::uint32_t i = 0; i < fd->n && idx; ++i) {
      e.coeff_[i] = static_cast<std::uint32_t>(idx % fd->p);
      idx /= fd->p;
    }
    return e;
  }

  const FieldDescriptor* field() const { return fd_; }
  std::uint32_t coeff(std::uint32_t i) const { return coeff_[i]; }

  std::vector<std::uint32_t> coeffs() const {
    return std::vector<std::uint32_t>(coeff_.begin(), coeff_.begin() + fd_->n);
  }

  bool is_zero() const {
    for (std::uint32_t i = 0; i < fd_->n; ++i)
      if (coeff_[i]) return false;
    return true;
  }

  // Requires field_size(fd) > 0; inverse of from_index.
  std::uint64_t index() const {
    std::uint64_t idx = 0;
    for (std::uint32_t i = fd_->n; i-- > 0;) idx = idx * fd_->p + coeff_[i];
    return idx;
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.fd_ != b.fd_) return false;
    for (std::uint32_t i = 0; i < a.fd_->n; ++i)
      if (a.coeff_[i] != b.coeff_[i]) return false;
    return true;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    FieldElement out(a.fd_);
    const std::uint32_t p = a.fd_->p;
    for (std::uint32_t i = 0; i < a.fd_->n; ++i) {
      const std::uint32_t s = a.coeff_[i] + b.coeff_[i];
      out.coeff_[i] = s >= p ? s - p : s;
    }
    return out;
  }

  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    FieldElement out(a.fd_);
    const std::uint32_t p = a.fd_->p;
    for (std::uint32_t i = 0; i < a.fd_->n; ++i) {
      const std::uint32_t s = a.coeff_[i] + p - b.coeff_[i];
      out.coeff_[i] = s >= p ? s - p : s;
    }
    return out;
  }

  friend FieldElement operator-(const FieldElement& a) {
    FieldElement out(a.fd_);
    const std::uint32_t p = a.fd_->p;
    for (std::uint32_t i = 0; i < a.fd_->n; ++i) out.coeff_[i] = a.coeff_[i] ? p - a.coeff_[i] : 0;
    return out;
  }

  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    const FieldDescriptor* fd = a.fd_;
    const std::uint32_t n = fd->n, p = fd->p;
    FieldElement out(fd);
    if (n == 1) {
      out.coeff_[0] =
          static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.coeff_[0]) * b.coeff_[0] % p);
      return out;
    }
    // Schoolbook product, then reduce from the top against the monic
    // modulus. Accumulator bound: n*(p-1)^2 from the product plus n*p^2 from
    // reduction stays far below 2^64 for p < 2^20, n <= 32.
    std::array<std::uint64_t, 2 * kMaxExtensionDegree> acc{};
    for (std::uint32_t i = 0; i < n; ++i) {
      const std::uint64_t ai = a.coeff_[i];
      if (!ai) continue;
      for (std::uint32_t j = 0; j < n; ++j) acc[i + j] += ai * b.coeff_[j];
    }
    const auto& m = fd->modulus;
    for (std::uint32_t d = 2 * n - 2; d + 1 > n; --d) {
      const std::uint64_t c = acc[d] % p;
      if (c) {
        for (std::uint32_t i = 0; i < n; ++i) acc[d - n + i] += c * (p - m[i]);
      }
    }
    for (std::uint32_t i = 0; i < n; ++i) out.coeff_[i] = static_cast<std::uint32_t>(acc[i] % p);
    return out;
  }

  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

  // Polynomial rendering, highest degree first, e.g. "t^2+2t+1".
  std::string to_string() const {
    std::string s;
    for (std::uint32_t i = fd_->n; i-- > 0;) {
      const std::uint32_t c = coeff_[i];
      if (!c) continue;
      if (!s.empty()) s += "+";
      if (i == 0 || c != 1) s += std::to_string(c);
      if (i >= 1) s += "t";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }

 private:
  explicit FieldElement(const FieldDescriptor* fd) : fd_(fd) { coeff_.fill(0); }

  void check_same(const FieldElement& b) const {
    if (fd_ != b.fd_) throw std::invalid_argument("field descriptor mismatch");
  }

  const FieldDescriptor* fd_;
  std::array<std::uint32_t, kMaxExtensionDegree> coeff_;

  friend FieldElement pow(const FieldElement& a, std::uint64_t e);
  friend FieldElement inverse(const FieldElement& a);
};

inline FieldElement pow(const FieldElement& a, std::uint64_t e) {
  FieldElement result = FieldElement::one(a.field());
  FieldElement base = a;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

inline FieldElement inverse(const FieldElement& a) {
  if (a.is_zero()) throw std::domain_error("inverse of zero field element");
  const FieldDescriptor* fd = a.field();
  if (fd->n == 1) return FieldElement::from_uint(fd, detail::mod_inverse(a.coeff(0), fd->p));
  // Extended Euclid in F_p[t] against the (irreducible) modulus.
  detail::Poly r0 = fd->modulus;
  detail::Poly r1 = a.coeffs();
  detail::poly_trim(r1);
  detail::Poly t0;      // 0
  detail::Poly t1{1};
  const std::uint32_t p = fd->p;
  while (!r1.empty()) {
    detail::Poly q, rem;
    detail::poly_divmod(r0, r1, p, &q, &rem);
    r0 = std::move(r1);
    r1 = std::move(rem);
    // (t0, t1) <- (t1, t0 - q*t1)
    detail::Poly qt = detail::poly_mul(q, t1, p);
    detail::Poly nt(std::max(t0.size(), qt.size()), 0);
    for (std::size_t i = 0; i < nt.size(); ++i) {
      const std::uint32_t x = i < t0.size() ? t0[i] : 0;
      const std::uint32_t y = i < qt.size() ? qt[i] : 0;
      nt[i] = (x + p - y) % p;
    }
    detail::poly_trim(nt);
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  // r0 = gcd(modulus, a) must be a nonzero constant.
  if (detail::poly_deg(r0) != 0)
    throw std::logic_error("inverse: modulus is not irreducible");  // cannot happen
  const std::uint32_t scale = detail::mod_inverse(r0[0], p);
  std::vector<std::uint32_t> c(fd->n, 0);
  for (std::size_t i = 0; i < t0.size() && i < c.size(); ++i)
    c[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(t0[i]) * scale % p);
  return FieldElement::from_coeffs(fd, c);
}

// a -> a^p, the Frobenius automorphism generating Gal(F_{p^n}/F_p).
inline FieldElement frobenius(const FieldElement& a) { return pow(a, a.field()->p); }

// a -> a^{p^{n-1}}, the inverse automorphism (since a^{p^n} = a).
inline FieldElement frobenius_inverse(const FieldElement& a) {
  FieldElement out = a;
  for (std::uint32_t i = 1; i < a.field()->n; ++i) out = frobenius(out);
  return out;
}

// a -> a^{p^k} for any integer k, reduced modulo the Galois group order n.
inline FieldElement frobenius_power(const FieldElement& a, std::int64_t k) {
  const std::int64_t n = a.field()->n;
  std::int64_t m = ((k % n) + n) % n;
  FieldElement out = a;
  for (std::int64_t i = 0; i < m; ++i) out = frobenius(out);
  return out;
}

}  // namespace ssk3
