// ssk3: exact-arithmetic toolkit for the nondegeneracy of the logarithmic
// Hodge-de Rham spectral sequence over supersingular K3 Picard lattices.
//
// Output contract: human-readable text to stdout, JSON (with an embedded
// run manifest) to --out paths, never mixed. Exit codes: 0 = degenerate /
// all suites pass / plain success, 10 = nondegenerate (decide, audit),
// 2 = input error, 1 = internal contract violation or suite failure.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ssk3/json_io.hpp"
#include "ssk3/verify.hpp"

namespace {

using namespace ssk3;

struct LatticeInput {
  IntegralLattice lattice;
  std::optional<std::uint32_t> p;       // present iff from the ss: shorthand
  std::optional<std::uint32_t> sigma0;  // ditto
};

LatticeInput load_lattice(const std::string& spec) {
  if (spec.rfind("ss:", 0) == 0) {
    unsigned p = 0;
    unsigned s0 = 0;
    int consumed = -1;
    if (std::sscanf(spec.c_str(), "ss:p=%u,sigma0=%u%n", &p, &s0, &consumed) != 2 ||
        consumed != static_cast<int>(spec.size()))
      throw std::invalid_argument(
          "lattice shorthand must have the form ss:p=<prime>,sigma0=<1..10> (got \"" + spec +
          "\")");
    return LatticeInput{synthesize_gram(p, s0), p, s0};
  }
  return LatticeInput{lattice_from_json(read_json_file(spec)), std::nullopt, std::nullopt};
}

std::optional<std::uint32_t> optional_p(const LatticeInput& in, std::optional<std::uint32_t> flag) {
  if (flag && in.p && *flag != *in.p)
    throw std::invalid_argument("--p (" + std::to_string(*flag) +
                                ") disagrees with the lattice shorthand (p=" +
                                std::to_string(*in.p) + ")");
  return flag ? flag : in.p;
}

std::uint32_t require_p(const LatticeInput& in, std::optional<std::uint32_t> flag) {
  const auto p = optional_p(in, flag);
  if (!p) throw std::invalid_argument("--p is required when the lattice is given as a Gram file");
  return *p;
}

std::string int_row(const std::vector<std::int64_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

std::string coeff_row(const std::vector<std::uint32_t>& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(c[i]);
  }
  return out + "]";
}

// Prime-field vectors print as their integer coordinates.
std::string prime_row(const Vector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(v[i].coeff(0));
  }
  return out + "]";
}

std::string factor_summary(const std::vector<BigInt>& factors) {
  std::string out;
  std::size_t i = 0;
  while (i < factors.size()) {
    std::size_t j = i;
    while (j < factors.size() && factors[j] == factors[i]) ++j;
    if (!out.empty()) out += " ";
    out += factors[i].str();
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out.empty() ? "(none)" : out;
}

Json json_opt(std::optional<std::uint32_t> v) { return v ? Json(*v) : Json(nullptr); }

int run_lattice_info(const std::string& spec, std::optional<std::uint32_t> flag_p,
                     const std::string& out_path) {
  const LatticeInput in = load_lattice(spec);
  const auto p = optional_p(in, flag_p);
  const auto factors = smith_invariant_factors(in.lattice.to_big());
  std::cout << "rank: " << in.lattice.rank() << "\n";
  std::cout << "determinant: " << in.lattice.determinant().str() << "\n";
  std::cout << "invariant factors: " << factor_summary(factors) << "\n";
  Json j{{"rank", in.lattice.rank()}, {"determinant", in.lattice.determinant().str()}};
  Json jf = Json::array();
  for (const auto& f : factors) jf.push_back(f.str());
  j["invariant_factors"] = std::move(jf);
  j["p"] = json_opt(p);
  if (p) {
    const std::uint32_t sigma0 = artin_invariant(in.lattice, *p);
    const Subspace n0 = p_kernel(in.lattice, *p);
    std::cout << "p: " << *p << "\n";
    std::cout << "sigma0 (Artin invariant): " << sigma0 << "\n";
    std::cout << "dim N_0: " << n0.dim() << "\n";
    std::cout << "N_0 basis (mod " << *p << "):\n";
    for (const auto& row : n0.basis()) std::cout << "  " << prime_row(row) << "\n";
    j["sigma0"] = sigma0;
    j["n0"] = subspace_to_json(n0);
  }
  if (!out_path.empty()) {
    j["manifest"] = make_manifest("lattice info", Json{{"lattice", spec}, {"p", json_opt(p)}},
                                  std::nullopt, "ok");
    write_json_file(out_path, j);
  }
  return 0;
}

int run_lattice_synth(std::uint32_t p, std::uint32_t sigma0, const std::string& out_path) {
  const IntegralLattice lat = synthesize_gram(p, sigma0);
  std::cout << "synthesized rank-" << lat.rank() << " Gram matrix with p=" << p
            << ", sigma0=" << sigma0 << "\n";
  std::cout << "determinant: " << lat.determinant().str() << "\n";
  if (!out_path.empty()) {
    Json j = lattice_to_json(lat);
    j["manifest"] = make_manifest("lattice synth", Json{{"p", p}, {"sigma0", sigma0}},
                                  std::nullopt, "ok");
    write_json_file(out_path, j);
  }
  return 0;
}

int run_charsub_gen(std::uint32_t p, std::uint32_t sigma0, const std::string& strategy,
                    std::optional<std::uint64_t> seed, const std::string& out_path) {
  const GenStrategy strat =
      strategy == "normal-basis" ? GenStrategy::NormalBasis : GenStrategy::SeededRandom;
  const CharacteristicSubspace cs = generate(p, sigma0, strat, seed);
  std::cout << "p: " << p << "\n";
  std::cout << "sigma0: " << sigma0 << "\n";
  std::cout << "field: F_" << p << "^" << 2 * sigma0 << ", modulus "
            << coeff_row(cs.field()->modulus) << " (constant term first)\n";
  std::cout << "generator (coefficient rows, one per coordinate):\n";
  for (const auto& e : cs.generator()) std::cout << "  " << coeff_row(e.coeffs()) << "\n";
  std::cout << "dim K = " << cs.k().dim() << ", dim(K + phi K) = "
            << sum(cs.k(), phi_subspace(cs.k())).dim() << "\n";
  if (!out_path.empty()) {
    Json j = charsub_to_json(cs);
    j["manifest"] = make_manifest(
        "charsub gen", Json{{"p", p}, {"sigma0", sigma0}, {"strategy", strategy}}, seed, "ok");
    write_json_file(out_path, j);
  }
  return 0;
}

int run_decide(const std::string& spec, const std::string& classes_path,
               std::optional<std::uint32_t> flag_p, bool finite_height,
               const std::string& out_path) {
  const LatticeInput in = load_lattice(spec);
  const std::uint32_t p = require_p(in, flag_p);
  const DivisorConfiguration config = config_from_json(in.lattice, read_json_file(classes_path));
  const Decision d = decide(config, p, finite_height);
  std::cout << "verdict: " << to_string(d.verdict) << "\n";
  std::cout << "dim N_D: " << d.dim_nd << "\n";
  if (d.dim_nd_cap_n0) std::cout << "dim (N_D cap N_0): " << *d.dim_nd_cap_n0 << "\n";
  if (d.sigma0) std::cout << "sigma0: " << *d.sigma0 << "\n";
  if (finite_height) std::cout << "finite height: degenerate unconditionally\n";
  if (!out_path.empty()) {
    Json j = decision_to_json(d);
    j["manifest"] = make_manifest("decide",
                                  Json{{"lattice", spec},
                                       {"classes", classes_path},
                                       {"p", p},
                                       {"finite_height", finite_height}},
                                  std::nullopt, to_string(d.verdict));
    write_json_file(out_path, j);
  }
  return d.verdict == Verdict::Nondegenerate ? 10 : 0;
}

int run_construct(const std::string& spec, std::uint32_t r, std::optional<std::uint32_t> flag_p,
                  std::optional<std::uint64_t> seed, const std::string& out_path) {
  const LatticeInput in = load_lattice(spec);
  const std::uint32_t p = require_p(in, flag_p);
  const DivisorConfiguration config = construct_classes(in.lattice, p, r, seed);
  std::cout << "constructed " << config.classes.size() << " class(es) at p=" << p
            << " (sigma0=" << artin_invariant(in.lattice, p) << "):\n";
  for (std::size_t i = 0; i < config.classes.size(); ++i)
    std::cout << "  " << config.labels[i] << ": " << int_row(config.classes[i]) << "\n";
  std::cout << "decide on the output: NONDEGENERATE\n";
  if (!out_path.empty()) {
    Json j = config_to_json(config);
    j["manifest"] = make_manifest("construct", Json{{"lattice", spec}, {"r", r}, {"p", p}}, seed,
                                  "NONDEGENERATE");
    write_json_file(out_path, j);
  }
  return 0;
}

int run_audit(const std::string& spec, const std::string& charsub_path,
              const std::string& classes_path, std::optional<std::uint32_t> flag_p,
              const std::string& out_path) {
  const LatticeInput in = load_lattice(spec);
  const CharacteristicSubspace cs = charsub_from_json(read_json_file(charsub_path));
  const std::uint32_t p = optional_p(in, flag_p).value_or(cs.p());
  const DivisorConfiguration config = config_from_json(in.lattice, read_json_file(classes_path));
  const EquivalenceAudit a = equivalence_audit(config, cs, p);
  const auto flag = [](bool b) { return b ? "true" : "false"; };
  std::cout << "(1) dim(N_D cap N_0) >= sigma0: " << flag(a.criterion) << "\n";
  std::cout << "(2) dim(B cap F^2) = 1: " << flag(a.chern_span) << "\n";
  std::cout << "(3) dim C < dim N_D: " << flag(a.hodge_defect) << "\n";
  std::cout << "(4) spectral sequence nondegenerate: " << flag(a.nondegenerate) << "\n";
  std::cout << (a.hold ? "all four conditions hold" : "all four conditions fail") << "\n";
  std::cout << "report: s=" << a.report.s << " s0=" << a.report.s0 << " dimB=" << a.report.dim_b
            << " dimBcapF2=" << a.report.dim_b_cap_f2 << " dimC=" << a.report.dim_c << "\n";
  if (!out_path.empty()) {
    Json j = audit_to_json(a);
    j["manifest"] = make_manifest(
        "audit",
        Json{{"lattice", spec}, {"charsub", charsub_path}, {"classes", classes_path}, {"p", p}},
        std::nullopt, a.hold ? "all four conditions hold" : "all four conditions fail");
    write_json_file(out_path, j);
  }
  return a.hold ? 10 : 0;
}

int run_verify(const VerifyOptions& opt, const std::string& out_path) {
  const std::vector<SuiteResult> results = run_verification(opt);
  bool all_passed = true;
  std::uint64_t total_checks = 0;
  std::uint32_t zero_suites = 0;
  for (const auto& r : results) {
    char line[160];
    std::snprintf(line, sizeof(line), "[%s] %-36s checks=%-10llu %.1fs",
                  r.passed ? "PASS" : "FAIL", r.name.c_str(),
                  static_cast<unsigned long long>(r.checks), r.seconds);
    std::cout << line << "\n";
    if (!r.detail.empty()) std::cout << "       " << r.detail << "\n";
    for (const auto& f : r.failures) std::cout << "       failure: " << f << "\n";
    if (r.failed > r.failures.size())
      std::cout << "       (" << (r.failed - r.failures.size()) << " further failure(s) omitted)\n";
    all_passed = all_passed && r.passed;
    total_checks += r.checks;
    if (r.checks == 0) ++zero_suites;
  }
  if (zero_suites)
    std::cout << "warning: " << zero_suites
              << " suite(s) executed zero checks; their pass is vacuous\n";
  std::cout << "summary: " << std::count_if(results.begin(), results.end(),
                                            [](const SuiteResult& r) { return r.passed; })
            << "/" << results.size() << " suites passed, " << total_checks << " checks\n";
  if (!out_path.empty()) {
    Json suites = Json::array();
    // Timing is excluded so reruns of the same manifest are byte-identical.
    for (const auto& r : results)
      suites.push_back(Json{{"name", r.name},
                            {"passed", r.passed},
                            {"checks", r.checks},
                            {"failed", r.failed},
                            {"detail", r.detail},
                            {"failures", r.failures}});
    Json params{{"modules", opt.modules},
                {"p_list", opt.p_list},
                {"sigma0_list", opt.sigma0_list},
                {"jobs", opt.jobs}};
    params["trials"] = opt.trials ? Json(*opt.trials) : Json(nullptr);
    Json j{{"suites", std::move(suites)}};
    j["manifest"] =
        make_manifest("verify", std::move(params), opt.seed, all_passed ? "pass" : "fail");
    write_json_file(out_path, j);
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact-arithmetic toolkit for deciding nondegeneracy of the logarithmic Hodge-de Rham "
      "spectral sequence attached to an snc divisor on a supersingular K3 surface, modeled at "
      "the level of its Picard lattice"};
  app.require_subcommand(1);

  auto* lattice_cmd =
      app.add_subcommand("lattice", "Inspect or synthesize supersingular-type Gram matrices");
  lattice_cmd->require_subcommand(1);

  std::string info_spec;
  std::optional<std::uint32_t> info_p;
  std::string info_out;
  auto* info_cmd = lattice_cmd->add_subcommand(
      "info", "Report rank, determinant, invariant factors, and (given a prime) sigma0 and N_0");
  info_cmd->add_option("lattice", info_spec, "Gram JSON path or ss:p=<prime>,sigma0=<1..10>")
      ->required();
  info_cmd->add_option("--p", info_p, "prime for mod-p invariants (implied by the ss: shorthand)");
  info_cmd->add_option("--out", info_out, "write the report as JSON to this path");

  std::uint32_t synth_p = 0;
  std::uint32_t synth_sigma0 = 0;
  std::string synth_out;
  auto* synth_cmd = lattice_cmd->add_subcommand(
      "synth", "Synthesize a rank-22 Gram matrix with Artin invariant sigma0 at p");
  synth_cmd->add_option("--p", synth_p, "prime")->required();
  synth_cmd->add_option("--sigma0", synth_sigma0, "Artin invariant, 1..10")->required();
  synth_cmd->add_option("--out", synth_out, "write the lattice as JSON to this path");

  auto* charsub_cmd =
      app.add_subcommand("charsub", "Generate characteristic subspaces of N_0 tensor k");
  charsub_cmd->require_subcommand(1);
  std::uint32_t gen_p = 0;
  std::uint32_t gen_sigma0 = 0;
  std::string gen_strategy = "seeded-random";
  std::optional<std::uint64_t> gen_seed;
  std::string gen_out;
  auto* gen_cmd = charsub_cmd->add_subcommand(
      "gen", "Generate a characteristic subspace generator with independent Frobenius iterates");
  gen_cmd->add_option("--p", gen_p, "prime")->required();
  gen_cmd->add_option("--sigma0", gen_sigma0, "Artin invariant, 1..10")->required();
  gen_cmd->add_option("--strategy", gen_strategy, "seeded-random (needs --seed) or normal-basis")
      ->check(CLI::IsMember({"seeded-random", "normal-basis"}));
  gen_cmd->add_option("--seed", gen_seed, "seed for the seeded-random strategy");
  gen_cmd->add_option("--out", gen_out, "write the subspace as JSON to this path");

  std::string decide_lattice;
  std::string decide_classes;
  std::optional<std::uint32_t> decide_p;
  bool decide_finite_height = false;
  std::string decide_out;
  auto* decide_cmd = app.add_subcommand(
      "decide", "Decide nondegeneracy: NONDEGENERATE iff dim(N_D cap N_0) >= sigma0 (exit 10/0)");
  decide_cmd->add_option("--lattice", decide_lattice, "Gram JSON path or ss: shorthand")
      ->required();
  decide_cmd->add_option("--classes", decide_classes, "configuration JSON with the class list")
      ->required();
  decide_cmd->add_option("--p", decide_p, "prime (implied by the ss: shorthand)");
  decide_cmd->add_flag("--finite-height", decide_finite_height,
                       "treat the surface as finite height: degenerate unconditionally");
  decide_cmd->add_option("--out", decide_out, "write the decision as JSON to this path");

  std::string construct_lattice;
  std::uint32_t construct_r = 0;
  std::optional<std::uint32_t> construct_p;
  std::optional<std::uint64_t> construct_seed;
  std::string construct_out;
  auto* construct_cmd = app.add_subcommand(
      "construct", "Construct r classes deciding NONDEGENERATE (first sigma0 span a T in N_0)");
  construct_cmd->add_option("--lattice", construct_lattice, "Gram JSON path or ss: shorthand")
      ->required();
  construct_cmd->add_option("--r", construct_r, "number of classes, at least sigma0")->required();
  construct_cmd->add_option("--p", construct_p, "prime (implied by the ss: shorthand)");
  construct_cmd->add_option("--seed", construct_seed,
                            "draw T at random from this seed instead of the canonical choice");
  construct_cmd->add_option("--out", construct_out, "write the configuration as JSON to this path");

  std::string audit_lattice;
  std::string audit_charsub;
  std::string audit_classes;
  std::optional<std::uint32_t> audit_p;
  std::string audit_out;
  auto* audit_cmd = app.add_subcommand(
      "audit", "Evaluate the four equivalent nondegeneracy conditions independently (exit 10/0)");
  audit_cmd->add_option("--lattice", audit_lattice, "Gram JSON path or ss: shorthand")->required();
  audit_cmd->add_option("--charsub", audit_charsub, "characteristic-subspace JSON path")
      ->required();
  audit_cmd->add_option("--classes", audit_classes, "configuration JSON with the class list")
      ->required();
  audit_cmd->add_option("--p", audit_p, "prime (defaults to the characteristic subspace's p)");
  audit_cmd->add_option("--out", audit_out, "write the audit as JSON to this path");

  VerifyOptions vopt;
  std::string verify_out;
  auto* verify_cmd =
      app.add_subcommand("verify", "Run the conformance suites (exit 0 iff every suite passes)");
  verify_cmd->add_option("--module", vopt.modules, "restrict to modules (repeatable)")
      ->check(CLI::IsMember({"gf", "linalg", "lattice", "charsub", "hodge", "degeneracy"}));
  verify_cmd->add_option("--p-list", vopt.p_list, "restrict the prime grid (repeatable)");
  verify_cmd->add_option("--sigma0-list", vopt.sigma0_list,
                         "restrict the Artin-invariant grid (repeatable)");
  verify_cmd->add_option("--trials", vopt.trials,
                         "workload per suite (default per suite; 0 disables all work)");
  verify_cmd->add_option("--seed", vopt.seed, "master seed (default 20260814)");
  verify_cmd->add_option("--jobs", vopt.jobs, "run up to this many suites concurrently");
  verify_cmd->add_option("--out", verify_out, "write the conformance table as JSON to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (info_cmd->parsed()) return run_lattice_info(info_spec, info_p, info_out);
    if (synth_cmd->parsed()) return run_lattice_synth(synth_p, synth_sigma0, synth_out);
    if (gen_cmd->parsed())
      return run_charsub_gen(gen_p, gen_sigma0, gen_strategy, gen_seed, gen_out);
    if (decide_cmd->parsed())
      return run_decide(decide_lattice, decide_classes, decide_p, decide_finite_height, decide_out);
    if (construct_cmd->parsed())
      return run_construct(construct_lattice, construct_r, construct_p, construct_seed,
                           construct_out);
    if (audit_cmd->parsed())
      return run_audit(audit_lattice, audit_charsub, audit_classes, audit_p, audit_out);
    if (verify_cmd->parsed()) return run_verify(vopt, verify_out);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal contract violation: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
