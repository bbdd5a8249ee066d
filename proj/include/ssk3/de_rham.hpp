#pragma once

// The de Rham-side linear-algebra model: a lattice together with a
// compatible characteristic subspace, the identification F_p^{2*sigma0} =
// N_0 via the RREF basis of the mod-p kernel, and the dimension formulas for
// B = image of the class span, B cap F^2, and C, each checked against an
// independent quotient-model oracle.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssk3/char_subspace.hpp"
#include "ssk3/enumerate.hpp"
#include "ssk3/lattice.hpp"

namespace ssk3 {

enum class Verdict { Degenerate, Nondegenerate };

inline const char* to_string(Verdict v) {
  return v == Verdict::Nondegenerate ? "NONDEGENERATE" : "DEGENERATE";
}

struct DimensionReport {
  std::uint32_t s;             // dim_k A
  std::uint32_t s0;            // dim_k (A cap U)
  std::uint32_t dim_b;
  std::uint32_t dim_b_cap_f2;  // 0 or 1
  std::uint32_t dim_c;
  Verdict verdict;
  bool oracle_checked;
};

class DeRhamModel {
 public:
  DeRhamModel(IntegralLattice lattice, CharacteristicSubspace cs)
      : lattice_(std::move(lattice)),
        cs_(std::move(cs)),
        n0_(p_kernel(lattice_, cs_.p())),
        u_embedded_(lift_subspace(n0_, cs_.field())),
        k_small_(cs_.k()),
        phi_k_small_(phi_subspace(k_small_)),
        k_plus_phi_k_small_(sum(k_small_, phi_k_small_)) {
    const std::uint32_t a = artin_invariant(lattice_, cs_.p());
    if (a != cs_.sigma0())
      throw std::invalid_argument(
          "DeRhamModel: lattice Artin invariant (" + std::to_string(a) +
          ") does not match the characteristic subspace sigma0 (" +
          std::to_string(cs_.sigma0()) + ")");
    // Self-checks of the kernel chain phi(K) c K+phi(K) c U.
    const std::uint32_t sigma0 = cs_.sigma0();
    if (phi_k_small_.dim() != sigma0 || k_plus_phi_k_small_.dim() != sigma0 + 1 ||
        sum(phi_k_small_, k_plus_phi_k_small_) != k_plus_phi_k_small_)
      throw std::logic_error("DeRhamModel: kernel chain phi(K) c K+phi(K) is broken");
  }

  const IntegralLattice& lattice() const { return lattice_; }
  const CharacteristicSubspace& cs() const { return cs_; }
  std::uint32_t p() const { return cs_.p(); }
  std::uint32_t sigma0() const { return cs_.sigma0(); }
  std::uint32_t rank() const { return lattice_.rank(); }

  // N_0 as a rational subspace of F_p^rank (RREF basis fixes the embedding).
  const Subspace& n0() const { return n0_; }
  // N_0 tensor k inside k^rank.
  const Subspace& u_embedded() const { return u_embedded_; }
  // K, phi(K), K+phi(K) in N_0-coordinates (ambient 2*sigma0 over k).
  const Subspace& k_small() const { return k_small_; }
  const Subspace& phi_k() const { return phi_k_small_; }
  const Subspace& k_plus_phi_k() const { return k_plus_phi_k_small_; }

  // x in k^{2*sigma0} -> sum x_j b_j in k^rank over the RREF basis b of N_0.
  Vector embed(const Vector& x) const {
    if (x.size() != 2 * static_cast<std::size_t>(cs_.sigma0()))
      throw std::invalid_argument("embed: vector length must be 2*sigma0");
    Vector out = zero_vector(cs_.field(), lattice_.rank());
    const auto& basis = n0_.basis();
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (x[j].is_zero()) continue;
      for (std::uint32_t c = 0; c < lattice_.rank(); ++c)
        out[c] += x[j] * FieldElement::from_uint(cs_.field(), basis[j][c].coeff(0));
    }
    return out;
  }

  // Inverse of embed on U: since the N_0 basis is RREF with pivot columns
  // P_j (unit there), any v in U has coordinates x_j = v[P_j].
  Vector coordinates(const Vector& v) const {
    if (v.size() != lattice_.rank())
      throw std::invalid_argument("coordinates: vector length must equal the lattice rank");
    Vector x;
    x.reserve(n0_.dim());
    for (const auto pc : n0_.pivots()) x.push_back(v[pc]);
    return x;
  }

 private:
  IntegralLattice lattice_;
  CharacteristicSubspace cs_;
  Subspace n0_;
  Subspace u_embedded_;
  Subspace k_small_;
  Subspace phi_k_small_;
  Subspace k_plus_phi_k_small_;
};

// Dimensions of B, B cap F^2, C for the k-span A of the classes mod p,
// computed twice: by the closed formulas in s, s0, sigma0, and by the
// quotient oracle through the kernel identifications B = A/(A cap phi K),
// B cap F^2 = (A cap (K+phi K))/(A cap phi K), C = A/(A cap (K+phi K)).
// Disagreement is a hard error: the agreement is the statement under test.
inline DimensionReport analyze(const DeRhamModel& model,
                               const std::vector<std::vector<std::int64_t>>& classes) {
  const FieldDescriptor* fd = model.cs().field();
  const std::uint32_t rank = model.rank();
  const std::uint32_t sigma0 = model.sigma0();
  std::vector<Vector> rows;
  rows.reserve(classes.size());
  for (const auto& c : classes) {
    if (c.size() != rank)
      throw std::invalid_argument("analyze: class vector length must equal the lattice rank");
    Vector v;
    v.reserve(rank);
    for (const auto entry : c) v.push_back(FieldElement::from_int(fd, entry));
    rows.push_back(std::move(v));
  }
  const Subspace a = span(fd, rank, std::move(rows));
  const std::uint32_t s = a.dim();
  const Subspace inter_u = intersect(a, model.u_embedded());
  const std::uint32_t s0 = inter_u.dim();
  // A cap phi K and A cap (K + phi K) live inside U, so transport A cap U to
  // N_0-coordinates and intersect there.
  std::vector<Vector> small;
  small.reserve(inter_u.dim());
  for (const auto& v : inter_u.basis()) small.push_back(model.coordinates(v));
  const Subspace a_in_u = span(fd, 2 * sigma0, std::move(small));
  const std::uint32_t dim_a_phik = intersect(a_in_u, model.phi_k()).dim();
  const std::uint32_t dim_a_kpk = intersect(a_in_u, model.k_plus_phi_k()).dim();
  if (dim_a_kpk < dim_a_phik)
    throw std::logic_error("analyze: intersection dimensions violate phi(K) c K+phi(K)");
  const std::uint32_t oracle_b = s - dim_a_phik;
  const std::uint32_t oracle_bf2 = dim_a_kpk - dim_a_phik;
  const std::uint32_t oracle_c = s - dim_a_kpk;
  DimensionReport rep{};
  rep.s = s;
  rep.s0 = s0;
  if (s0 < sigma0) {
    rep.dim_b = s;
    rep.dim_b_cap_f2 = 0;
    rep.dim_c = s;
  } else {
    rep.dim_b = s - s0 + sigma0;
    rep.dim_b_cap_f2 = 1;
    rep.dim_c = s - s0 + sigma0 - 1;
  }
  if (rep.dim_b != oracle_b || rep.dim_b_cap_f2 != oracle_bf2 || rep.dim_c != oracle_c)
    throw std::logic_error(
        "analyze: dimension formulas disagree with the quotient oracle (s=" + std::to_string(s) +
        ", s0=" + std::to_string(s0) + ", sigma0=" + std::to_string(sigma0) + "; formula B=" +
        std::to_string(rep.dim_b) + " BF2=" + std::to_string(rep.dim_b_cap_f2) + " C=" +
        std::to_string(rep.dim_c) + "; oracle B=" + std::to_string(oracle_b) + " BF2=" +
        std::to_string(oracle_bf2) + " C=" + std::to_string(oracle_c) + ")");
  if (rep.dim_b != rep.dim_c + rep.dim_b_cap_f2)
    throw std::logic_error("analyze: report identity dim_B = dim_C + dim_B_cap_F2 is broken");
  rep.verdict = rep.dim_b_cap_f2 == 1 ? Verdict::Nondegenerate : Verdict::Degenerate;
  rep.oracle_checked = true;
  return rep;
}

struct ChernAudit {
  bool de_rham;  // no nonzero rational vector lies in phi(K)
  bool hodge;    // no nonzero rational vector lies in K + phi(K)
};

// Largest phi-stable subspace of W: the limit of W -> W cap phi(W). Every
// phi-stable V c W survives each step, and the limit L satisfies L c phi(L)
// with equal dimensions, hence phi(L) = L.
inline Subspace stable_part(Subspace w) {
  for (;;) {
    Subspace next = intersect(w, phi_subspace(w));
    if (next == w) return w;
    w = std::move(next);
  }
}

// A nonzero rational vector v lies in W iff span(v) tensor k is a nonzero
// phi-stable subspace of W, iff stable_part(W) != 0 (phi-stable subspaces
// are exactly the T tensor k, which contain rational vectors).
inline ChernAudit chern_injectivity_audit(const DeRhamModel& model) {
  ChernAudit out{};
  out.de_rham = stable_part(model.phi_k()).dim() == 0;
  out.hodge = stable_part(model.k_plus_phi_k()).dim() == 0;
  return out;
}

// Independent small-case route: enumerate every nonzero rational vector of
// N_0 tensor k (in N_0-coordinates) and test membership directly.
inline ChernAudit chern_injectivity_exhaustive(const DeRhamModel& model) {
  const std::uint32_t n = 2 * model.sigma0();
  const FieldDescriptor* fp = make_field(model.p(), 1);
  const FieldDescriptor* fd = model.cs().field();
  ChernAudit out{true, true};
  for_each_vector(fp, n, [&](const Vector& x) {
    Vector lifted;
    lifted.reserve(n);
    bool zero = true;
    for (const auto& e : x) {
      zero = zero && e.is_zero();
      lifted.push_back(FieldElement::from_uint(fd, e.coeff(0)));
    }
    if (zero) return;
    if (model.phi_k().contains(lifted)) out.de_rham = false;
    if (model.k_plus_phi_k().contains(lifted)) out.hodge = false;
  });
  return out;
}

}  // namespace ssk3
