#pragma once

// Conformance suites behind the `verify` command. Each suite batch-checks
// one headline invariant of the toolkit over seeded or exhaustive inputs:
// filtration dimensions, the stable intersection law, the dimension
// formulas against their quotient oracle, the four equivalent degeneracy
// characterizations, construction existence/minimality, Chern-class
// injectivity audits, lattice invariants, and Frobenius arithmetic.
//
// Determinism: every random object is drawn from a seed derived from the
// master seed and a label that spells out suite/p/sigma0/trial, so results
// are independent of module filters, grid filters, and job count.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <future>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "ssk3/degeneracy.hpp"
#include "ssk3/enumerate.hpp"

namespace ssk3 {

struct VerifyOptions {
  std::vector<std::string> modules;        // empty = every suite
  std::vector<std::uint32_t> p_list;       // empty = suite default primes
  std::vector<std::uint32_t> sigma0_list;  // empty = suite default range
  // Scales the workload. Absent = per-suite default; 0 disables all work,
  // so the whole run passes vacuously with zero checks.
  std::optional<std::uint64_t> trials;
  std::uint64_t seed = 20260814;
  std::uint32_t jobs = 1;  // >1 runs suites concurrently, in waves
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::uint64_t checks = 0;
  std::uint64_t failed = 0;
  std::string detail;
  std::vector<std::string> failures;  // capped; `failed` holds the full count
  double seconds = 0.0;
};

namespace detail {

inline std::vector<std::uint32_t> filter_grid(std::initializer_list<std::uint32_t> defaults,
                                              const std::vector<std::uint32_t>& keep) {
  std::vector<std::uint32_t> out;
  for (const auto v : defaults)
    if (keep.empty() || std::find(keep.begin(), keep.end(), v) != keep.end()) out.push_back(v);
  return out;
}

inline std::string grid_to_string(const std::vector<std::uint32_t>& grid) {
  std::string out = "{";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(grid[i]);
  }
  return out + "}";
}

class Checker {
 public:
  explicit Checker(SuiteResult* r) : r_(r) {}

  template <typename MsgFn>
  bool check(bool ok, MsgFn&& msg) {
    ++r_->checks;
    if (!ok) {
      r_->passed = false;
      ++r_->failed;
      if (r_->failures.size() < kMaxReported) r_->failures.push_back(msg());
    }
    return ok;
  }

 private:
  static constexpr std::size_t kMaxReported = 5;
  SuiteResult* r_;
};

// Seeded class lists for exercising the dimension formulas: a mix of
// arbitrary small vectors, lifts of points of N_0, lifts perturbed by p
// times a small vector (invisible mod p), and pure p-multiples.
inline std::vector<std::vector<std::int64_t>> random_classes(const IntegralLattice& lat,
                                                             const Subspace& n0, std::uint32_t p,
                                                             SeededRng& rng) {
  const std::uint32_t rank = lat.rank();
  const std::uint64_t count = rng.below(n0.dim() + 3);
  std::vector<std::vector<std::int64_t>> classes;
  classes.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t mode = rng.below(4);
    std::vector<std::int64_t> v(rank, 0);
    if (mode == 0) {
      for (auto& x : v) x = static_cast<std::int64_t>(rng.below(19)) - 9;
    } else {
      if (mode != 3) {
        Vector w = zero_vector(n0.field(), rank);
        for (const auto& b : n0.basis()) {
          const std::uint64_t c = rng.below(p);
          if (!c) continue;
          const FieldElement ce = FieldElement::from_uint(n0.field(), c);
          for (std::uint32_t col = 0; col < rank; ++col) w[col] += ce * b[col];
        }
        for (std::uint32_t col = 0; col < rank; ++col) v[col] = w[col].coeff(0);
      }
      if (mode >= 2)
        for (auto& x : v)
          x += static_cast<std::int64_t>(p) * (static_cast<std::int64_t>(rng.below(7)) - 3);
    }
    classes.push_back(std::move(v));
  }
  return classes;
}

}  // namespace detail

// dim U_m = m for every level of the filtration, on seeded characteristic
// subspaces across a prime/Artin-invariant grid.
inline void suite_filtration_dimension(const VerifyOptions& opt, SuiteResult& res) {
  detail::Checker ctx(&res);
  const auto ps = detail::filter_grid({2, 3, 5}, opt.p_list);
  const auto sigmas = detail::filter_grid({1, 2, 3, 4, 5}, opt.sigma0_list);
  const std::uint64_t trials = opt.trials.value_or(50);
  for (const auto p : ps)
    for (const auto s0 : sigmas)
      for (std::uint64_t t = 0; t < trials; ++t) {
        const std::string label = "charsub/filtration-dimension/p=" + std::to_string(p) +
                                  "/sigma0=" + std::to_string(s0) + "/trial=" + std::to_string(t);
        const CharacteristicSubspace cs =
            generate(p, s0, GenStrategy::SeededRandom, derive_subseed(opt.seed, label));
        for (std::uint32_t m = 0; m <= 2 * s0; ++m) {
          const std::uint32_t d = cs.filtration(m).dim();
          ctx.check(d == m, [&] {
            return label + ": dim U_" + std::to_string(m) + " = " + std::to_string(d) +
                   ", expected " + std::to_string(m);
          });
        }
      }
  res.detail = "p in " + detail::grid_to_string(ps) + ", sigma0 in " +
               detail::grid_to_string(sigmas) + ", " + std::to_string(trials) +
               " seeded characteristic subspace(s) per point";
}

// Exhaustive stable intersection law: for every F_p-subspace T of the
// ambient space and every level m, the brute-force dim((T tensor k) cap
// U_m) equals max(0, dim T + m - 2*sigma0).
inline void suite_stable_intersection(const VerifyOptions& opt, SuiteResult& res) {
  detail::Checker ctx(&res);
  static constexpr std::pair<std::uint32_t, std::uint32_t> kCases[] = {
      {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}};
  const std::uint64_t reps = opt.trials.value_or(1);
  std::uint64_t swept = 0;
  std::uint32_t cases_run = 0;
  for (const auto& [p, s0] : kCases) {
    if (!opt.p_list.empty() &&
        std::find(opt.p_list.begin(), opt.p_list.end(), p) == opt.p_list.end())
      continue;
    if (!opt.sigma0_list.empty() &&
        std::find(opt.sigma0_list.begin(), opt.sigma0_list.end(), s0) == opt.sigma0_list.end())
      continue;
    if (reps) ++cases_run;
    const FieldDescriptor* fp = make_field(p, 1);
    for (std::uint64_t rep = 0; rep < reps; ++rep) {
      const std::string label = "charsub/stable-intersection/p=" + std::to_string(p) +
                                "/sigma0=" + std::to_string(s0) + "/trial=" + std::to_string(rep);
      const CharacteristicSubspace cs =
          generate(p, s0, GenStrategy::SeededRandom, derive_subseed(opt.seed, label));
      std::uint64_t visited = 0;
      for_each_subspace(fp, 2 * s0, [&](const Subspace& t) {
        ++visited;
        for (std::uint32_t m = 0; m <= 2 * s0; ++m) {
          const StableIntersectionDims dims = stable_intersection_dim(cs, t, m);
          ctx.check(dims.formula == dims.brute, [&] {
            return label + ": dim T=" + std::to_string(t.dim()) + ", m=" + std::to_string(m) +
                   ": formula " + std::to_string(dims.formula) + " != brute-force " +
                   std::to_string(dims.brute);
          });
        }
      });
      swept += visited;
      ctx.check(visited == subspace_count(2 * s0, p), [&] {
        return label + ": enumeration visited " + std::to_string(visited) +
               " subspaces, expected " + std::to_string(subspace_count(2 * s0, p));
      });
    }
  }
  res.detail = "exhaustive sweep: " + std::to_string(swept) + " subspace(s) across " +
               std::to_string(cases_run) + " case(s), " + std::to_string(reps) +
               " characteristic subspace(s) per case";
}

// Dimension formulas for B, B cap F^2, C on seeded class lists (the
// quotient-model oracle comparison runs inside analyze and throws on any
// disagreement), plus the report identity and verdict coherence.
inline void suite_dimension_formulas(const VerifyOptions& opt, SuiteResult& res) {
  detail::Checker ctx(&res);
  const auto ps = detail::filter_grid({2, 3, 5}, opt.p_list);
  const auto sigmas = detail::filter_grid({1, 2, 3, 4}, opt.sigma0_list);
  const std::uint64_t trials = opt.trials.value_or(200);
  constexpr std::uint64_t kTrialsPerModel = 50;
  for (const auto p : ps)
    for (const auto s0 : sigmas) {
      if (!trials) continue;
      const IntegralLattice lat = synthesize_gram(p, s0);
      const std::string point = "hodge/dimension-formulas/p=" + std::to_string(p) +
                                "/sigma0=" + std::to_string(s0);
      std::optional<DeRhamModel> model;
      for (std::uint64_t t = 0; t < trials; ++t) {
        if (t % kTrialsPerModel == 0)
          model.emplace(lat, generate(p, s0, GenStrategy::SeededRandom,
                                      derive_subseed(opt.seed, point + "/cs=" +
                                                               std::to_string(t / kTrialsPerModel))));
        const std::string label = point + "/trial=" + std::to_string(t);
        SeededRng rng(derive_subseed(opt.seed, label));
        const auto classes = detail::random_classes(lat, model->n0(), p, rng);
        try {
          const DimensionReport rep = analyze(*model, classes);
          ctx.check(rep.oracle_checked, [&] { return label + ": oracle_checked not set"; });
          ctx.check(rep.dim_b == rep.dim_c + rep.dim_b_cap_f2, [&] {
            return label + ": dim B = " + std::to_string(rep.dim_b) + " but dim C + dim(B cap F^2) = " +
                   std::to_string(rep.dim_c + rep.dim_b_cap_f2);
          });
          const bool nondeg = rep.s0 >= s0;
          ctx.check((rep.verdict == Verdict::Nondegenerate) == nondeg, [&] {
            return label + ": verdict " + std::string(to_string(rep.verdict)) +
                   " contradicts s0=" + std::to_string(rep.s0) + " vs sigma0=" + std::to_string(s0);
          });
        } catch (const std::exception& ex) {
          ctx.check(false, [&] { return label + ": " + std::string(ex.what()); });
        }
      }
    }
  res.detail = "p in " + detail::grid_to_string(ps) + ", sigma0 in " +
               detail::grid_to_string(sigmas) + ", " + std::to_string(trials) +
               " seeded class list(s) per point";
}

// The four equivalent characterizations of nondegeneracy, evaluated
// independently inside equivalence_audit (which throws if they ever
// disagree): seeded random configurations round-robin over a small grid,
// plus every constructed configuration across the full grid.
inline void suite_criterion_equivalences(const VerifyOptions& opt, SuiteResult& res) {
  detail::Checker ctx(&res);
  const std::uint64_t total = opt.trials.value_or(500);
  const auto ps = detail::filter_grid({2, 3, 5}, opt.p_list);
  const auto sigmas = detail::filter_grid({1, 2, 3, 4}, opt.sigma0_list);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> points;
  for (const auto p : ps)
    for (const auto s0 : sigmas) points.emplace_back(p, s0);
  std::uint64_t random_audits = 0;
  if (!points.empty() && total) {
    std::vector<IntegralLattice> lats;
    lats.reserve(points.size());
    for (const auto& [p, s0] : points) lats.push_back(synthesize_gram(p, s0));
    std::vector<Subspace> kernels;
    kernels.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) kernels.push_back(p_kernel(lats[i], points[i].first));
    for (std::uint64_t t = 0; t < total; ++t) {
      const std::size_t i = static_cast<std::size_t>(t % points.size());
      const auto [p, s0] = points[i];
      const std::string label = "degeneracy/criterion-equivalences/p=" + std::to_string(p) +
                                "/sigma0=" + std::to_string(s0) + "/trial=" + std::to_string(t);
      const CharacteristicSubspace cs =
          generate(p, s0, GenStrategy::SeededRandom, derive_subseed(opt.seed, label + "/cs"));
      SeededRng rng(derive_subseed(opt.seed, label));
      const DivisorConfiguration config(lats[i],
                                        detail::random_classes(lats[i], kernels[i], p, rng));
      try {
        const EquivalenceAudit a = equivalence_audit(config, cs, p);
        ctx.check(a.hold == a.nondegenerate && a.hold == (a.decision.verdict == Verdict::Nondegenerate),
                  [&] { return label + ": audit flags are incoherent"; });
        ++random_audits;
      } catch (const std::exception& ex) {
        ctx.check(false, [&] { return label + ": " + std::string(ex.what()); });
      }
    }
  }
  // Constructed configurations: always nondegenerate, so all four
  // conditions must come back true.
  const auto ps_full = detail::filter_grid({2, 3, 5, 7}, opt.p_list);
  const auto sigmas_full = detail::filter_grid({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, opt.sigma0_list);
  std::uint64_t construct_audits = 0;
  if (total)
    for (const auto p : ps_full)
      for (const auto s0 : sigmas_full) {
        const IntegralLattice lat = synthesize_gram(p, s0);
        for (const std::uint32_t r : {s0, s0 + 3}) {
          const std::string label = "degeneracy/criterion-equivalences/construct/p=" +
                                    std::to_string(p) + "/sigma0=" + std::to_string(s0) +
                                    "/r=" + std::to_string(r);
          try {
            const DivisorConfiguration config =
                construct_classes(lat, p, r, derive_subseed(opt.seed, label));
            const CharacteristicSubspace cs =
                generate(p, s0, GenStrategy::SeededRandom, derive_subseed(opt.seed, label + "/cs"));
            const EquivalenceAudit a = equivalence_audit(config, cs, p);
            ctx.check(a.hold, [&] { return label + ": constructed configuration failed the audit"; });
            ++construct_audits;
          } catch (const std::exception& ex) {
            ctx.check(false, [&] { return label + ": " + std::string(ex.what()); });
          }
        }
      }
  res.detail = std::to_string(random_audits) + " seeded configuration audit(s) round-robin over " +
               std::to_string(points.size()) + " grid point(s), plus " +
               std::to_string(construct_audits) + " constructed-configuration audit(s)";
}

// construct_classes existence and minimality: the output has exactly r
// classes, decides NONDEGENERATE, its first sigma0 classes span a
// sigma0-dimensional subspace of N_0, the remaining classes vanish mod p,
// and removing any one of the first sigma0 classes flips the decision.
inline void suite_existence_minimality(const VerifyOptions& opt, SuiteResult& res) {
  detail::Checker ctx(&res);
  const auto ps = detail::filter_grid({2, 3, 5, 7}, opt.p_list);
  const auto sigmas = detail::filter_grid({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, opt.sigma0_list);
  const std::uint64_t variants = opt.trials.value_or(2);  // 0 = default T, then seeded
  std::uint64_t configs = 0;
  for (const auto p : ps)
    for (const auto s0 : sigmas) {
      const IntegralLattice lat = synthesize_gram(p, s0);
      const Subspace n0 = p_kernel(lat, p);
      for (const std::uint32_t r : {s0, s0 + 3})
        for (std::uint64_t v = 0; v < variants; ++v) {
          const std::string label = "degeneracy/existence-minimality/p=" + std::to_string(p) +
                                    "/sigma0=" + std::to_string(s0) + "/r=" + std::to_string(r) +
                                    "/variant=" + std::to_string(v);
          std::optional<std::uint64_t> seed;
          if (v) seed = derive_subseed(opt.seed, label);
          try {
            const DivisorConfiguration config = construct_classes(lat, p, r, seed);
            ++configs;
            ctx.check(config.classes.size() == r && config.labels.size() == r,
                      [&] { return label + ": wrong class or label count"; });
            ctx.check(decide(config, p).verdict == Verdict::Nondegenerate,
                      [&] { return label + ": constructed configuration is not NONDEGENERATE"; });
            const std::vector<std::vector<std::int64_t>> head(config.classes.begin(),
                                                              config.classes.begin() + s0);
            const Subspace t = class_span_mod_p(lat, head, p);
            ctx.check(t.dim() == s0 && intersect(t, n0).dim() == s0, [&] {
              return label + ": first sigma0 classes do not span a sigma0-dimensional subspace of N_0";
            });
            bool extras_ok = true;
            for (std::size_t i = s0; i < config.classes.size(); ++i)
              for (const auto x : config.classes[i])
                if (x % static_cast<std::int64_t>(p) != 0) extras_ok = false;
            ctx.check(extras_ok, [&] { return label + ": extra classes are not divisible by p"; });
            for (std::uint32_t drop = 0; drop < s0; ++drop) {
              auto pruned = config.classes;
              pruned.erase(pruned.begin() + drop);
              const Decision d = decide(DivisorConfiguration(lat, std::move(pruned)), p);
              ctx.check(d.verdict == Verdict::Degenerate, [&] {
                return label + ": still NONDEGENERATE after removing class " +
                       std::to_string(drop + 1);
              });
            }
          } catch (const std::exception& ex) {
            ctx.check(false, [&] { return label + ": " + std::string(ex.what()); });
          }
        }
    }
  res.detail = std::to_string(configs) + " constructed configuration(s) over p in " +
               detail::grid_to_string(ps) + ", sigma0 in " + detail::grid_to_string(sigmas) +
               ", r in {sigma0, sigma0+3}";
}

// Chern-class injectivity audits: the de Rham direction holds for every
// model, the Hodge direction exactly when sigma0 >= 2, and on small fields
// the fixpoint route agrees with exhaustive rational-vector enumeration.
inline void suite_chern_injectivity(const VerifyOptions& opt, SuiteResult& res) {
  detail::Checker ctx(&res);
  const auto ps = detail::filter_grid({2, 3, 5, 7}, opt.p_list);
  const auto sigmas = detail::filter_grid({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, opt.sigma0_list);
  const std::uint64_t models = opt.trials.value_or(1);
  std::uint64_t exhaustive_runs = 0;
  for (const auto p : ps)
    for (const auto s0 : sigmas) {
      if (!models) continue;
      const IntegralLattice lat = synthesize_gram(p, s0);
      for (std::uint64_t t = 0; t < models; ++t) {
        const std::string label = "hodge/chern-injectivity/p=" + std::to_string(p) +
                                  "/sigma0=" + std::to_string(s0) + "/trial=" + std::to_string(t);
        const DeRhamModel model(lat, generate(p, s0, GenStrategy::SeededRandom,
                                              derive_subseed(opt.seed, label)));
        const ChernAudit audit = chern_injectivity_audit(model);
        ctx.check(audit.de_rham, [&] { return label + ": de Rham Chern audit failed"; });
        ctx.check(audit.hodge == (s0 >= 2), [&] {
          return label + ": Hodge Chern audit gave " + std::to_string(audit.hodge) +
                 ", expected " + std::to_string(s0 >= 2);
        });
        // p^{2*sigma0} rational vectors; only sweep small spaces.
        std::uint64_t points = 1;
        for (std::uint32_t i = 0; i < 2 * s0 && points <= 4096; ++i) points *= p;
        if (points <= 4096) {
          const ChernAudit ex = chern_injectivity_exhaustive(model);
          ++exhaustive_runs;
          ctx.check(ex.de_rham == audit.de_rham && ex.hodge == audit.hodge, [&] {
            return label + ": exhaustive enumeration disagrees with the fixpoint audit";
          });
        }
      }
    }
  res.detail = std::to_string(models) + " model(s) per point over p in " +
               detail::grid_to_string(ps) + ", sigma0 in " + detail::grid_to_string(sigmas) +
               "; " + std::to_string(exhaustive_runs) + " exhaustive cross-check(s)";
}

// Synthesized lattices have the requested invariants (Artin invariant,
// kernel dimension, determinant -p^{2*sigma0}), and lattices whose
// discriminant group is not killed by p are rejected.
inline void suite_lattice_invariants(const VerifyOptions& opt, SuiteResult& res) {
  detail::Checker ctx(&res);
  if (opt.trials && *opt.trials == 0) {
    res.detail = "deterministic suite disabled by trials=0";
    return;
  }
  const auto ps = detail::filter_grid({2, 3, 5, 7}, opt.p_list);
  const auto sigmas = detail::filter_grid({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, opt.sigma0_list);
  for (const auto p : ps) {
    for (const auto s0 : sigmas) {
      const std::string label = "lattice/invariants/p=" + std::to_string(p) +
                                "/sigma0=" + std::to_string(s0);
      const IntegralLattice lat = synthesize_gram(p, s0);
      ctx.check(lat.rank() == 22, [&] { return label + ": rank != 22"; });
      const std::uint32_t a = artin_invariant(lat, p);
      ctx.check(a == s0, [&] {
        return label + ": Artin invariant " + std::to_string(a) + " != " + std::to_string(s0);
      });
      const std::uint32_t kd = p_kernel(lat, p).dim();
      ctx.check(kd == 2 * s0, [&] {
        return label + ": p-kernel dimension " + std::to_string(kd) + " != " +
               std::to_string(2 * s0);
      });
      BigInt expected = 1;
      for (std::uint32_t i = 0; i < 2 * s0; ++i) expected *= p;
      ctx.check(lat.determinant() == -expected,
                [&] { return label + ": determinant != -p^(2*sigma0)"; });
    }
    // diag(p^2, 1): invariant factors (1, p^2), so the discriminant group
    // has exponent p^2 and must be rejected.
    const std::int64_t p2 = static_cast<std::int64_t>(p) * p;
    const IntegralLattice bad({{p2, 0}, {0, 1}});
    bool rejected = false;
    std::string message;
    try {
      artin_invariant(bad, p);
    } catch (const std::invalid_argument& ex) {
      rejected = true;
      message = ex.what();
    }
    ctx.check(rejected && message.find("not killed by p") != std::string::npos, [&] {
      return "lattice/invariants/p=" + std::to_string(p) +
             ": diag(p^2,1) not rejected with the expected message (got \"" + message + "\")";
    });
  }
  res.detail = "p in " + detail::grid_to_string(ps) + ", sigma0 in " +
               detail::grid_to_string(sigmas) + ", plus rejection checks";
}

// Frobenius is a field automorphism fixing exactly the prime field
// pointwise and satisfying a^{p^n} = a, checked all-pairs on every field
// of size at most 81; canonical moduli are pinned for F_4 and F_9.
inline void suite_frobenius_automorphism(const VerifyOptions& opt, SuiteResult& res) {
  detail::Checker ctx(&res);
  if (opt.trials && *opt.trials == 0) {
    res.detail = "deterministic suite disabled by trials=0";
    return;
  }
  constexpr std::uint64_t kBound = 81;
  std::uint32_t fields = 0;
  for (std::uint32_t p = 2; p <= kBound; ++p) {
    if (!detail::is_prime_u32(p)) continue;
    if (!opt.p_list.empty() &&
        std::find(opt.p_list.begin(), opt.p_list.end(), p) == opt.p_list.end())
      continue;
    for (std::uint32_t n = 1;; ++n) {
      std::uint64_t q = 1;
      for (std::uint32_t i = 0; i < n; ++i) q *= p;
      if (q > kBound) break;
      const FieldDescriptor* fd = make_field(p, n);
      ++fields;
      const std::string label = "gf/frobenius-automorphism/p=" + std::to_string(p) +
                                "/n=" + std::to_string(n);
      for_each_element(fd, [&](const FieldElement& a) {
        for_each_element(fd, [&](const FieldElement& b) {
          ctx.check(frobenius(a + b) == frobenius(a) + frobenius(b),
                    [&] { return label + ": additivity fails at " + a.to_string() + ", " + b.to_string(); });
          ctx.check(frobenius(a * b) == frobenius(a) * frobenius(b),
                    [&] { return label + ": multiplicativity fails at " + a.to_string() + ", " + b.to_string(); });
        });
        FieldElement x = a;
        for (std::uint32_t i = 0; i < n; ++i) x = frobenius(x);
        ctx.check(x == a, [&] { return label + ": a^(p^n) != a at " + a.to_string(); });
        ctx.check(pow(a, q) == a, [&] { return label + ": pow(a, q) != a at " + a.to_string(); });
        ctx.check(frobenius_inverse(frobenius(a)) == a,
                  [&] { return label + ": Frobenius inverse fails at " + a.to_string(); });
      });
    }
  }
  if (opt.p_list.empty() || std::find(opt.p_list.begin(), opt.p_list.end(), 2u) != opt.p_list.end())
    ctx.check(make_field(2, 2)->modulus == std::vector<std::uint32_t>({1, 1, 1}),
              [] { return std::string("gf: canonical modulus of F_4 is not t^2+t+1"); });
  if (opt.p_list.empty() || std::find(opt.p_list.begin(), opt.p_list.end(), 3u) != opt.p_list.end())
    ctx.check(make_field(3, 2)->modulus == std::vector<std::uint32_t>({1, 0, 1}),
              [] { return std::string("gf: canonical modulus of F_9 is not t^2+1"); });
  res.detail = "all-pairs automorphism checks on " + std::to_string(fields) +
               " field(s) of size <= " + std::to_string(kBound);
}

struct SuiteSpec {
  const char* name;
  void (*fn)(const VerifyOptions&, SuiteResult&);
};

// Fixed order; the acceptance harness and the CLI both follow it.
inline const std::vector<SuiteSpec>& suite_registry() {
  static const std::vector<SuiteSpec> registry = {
      {"charsub/filtration-dimension", &suite_filtration_dimension},
      {"charsub/stable-intersection", &suite_stable_intersection},
      {"hodge/dimension-formulas", &suite_dimension_formulas},
      {"degeneracy/criterion-equivalences", &suite_criterion_equivalences},
      {"degeneracy/existence-minimality", &suite_existence_minimality},
      {"hodge/chern-injectivity", &suite_chern_injectivity},
      {"lattice/invariants", &suite_lattice_invariants},
      {"gf/frobenius-automorphism", &suite_frobenius_automorphism},
  };
  return registry;
}

inline bool module_enabled(const std::string& suite_name, const std::vector<std::string>& modules) {
  if (modules.empty()) return true;
  const std::string prefix = suite_name.substr(0, suite_name.find('/'));
  return std::find(modules.begin(), modules.end(), prefix) != modules.end();
}

inline SuiteResult run_suite(const SuiteSpec& spec, const VerifyOptions& opt) {
  SuiteResult res;
  res.name = spec.name;
  const auto start = std::chrono::steady_clock::now();
  try {
    spec.fn(opt, res);
  } catch (const std::exception& ex) {
    res.passed = false;
    ++res.failed;
    res.failures.push_back(std::string("unhandled exception: ") + ex.what());
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

inline std::vector<SuiteResult> run_verification(const VerifyOptions& opt) {
  const auto& registry = suite_registry();
  std::vector<const SuiteSpec*> enabled;
  for (const auto& s : registry)
    if (module_enabled(s.name, opt.modules)) enabled.push_back(&s);
  std::vector<SuiteResult> results(enabled.size());
  const std::uint32_t jobs = opt.jobs == 0 ? 1 : opt.jobs;
  if (jobs <= 1) {
    for (std::size_t i = 0; i < enabled.size(); ++i) results[i] = run_suite(*enabled[i], opt);
    return results;
  }
  for (std::size_t base = 0; base < enabled.size(); base += jobs) {
    const std::size_t end = std::min(enabled.size(), base + jobs);
    std::vector<std::future<SuiteResult>> wave;
    for (std::size_t i = base; i < end; ++i) {
      const SuiteSpec* s = enabled[i];
      wave.push_back(std::async(std::launch::async, [s, &opt] { return run_suite(*s, opt); }));
    }
    for (std::size_t i = base; i < end; ++i) results[i] = wave[i - base].get();
  }
  return results;
}

}  // namespace ssk3
