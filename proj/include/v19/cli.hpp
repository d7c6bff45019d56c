#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "v19/bruteforce.hpp"
#include "v19/report.hpp"

namespace v19 {

enum class Command { VerifyYbe, VerifyAlgebra, VerifyStructure, Compute, Solve, Tables };

inline const char* command_name(Command c) {
  switch (c) {
    case Command::VerifyYbe: return "verify-ybe";
    case Command::VerifyAlgebra: return "verify-algebra";
    case Command::VerifyStructure: return "verify-structure";
    case Command::Compute: return "compute";
    case Command::Solve: return "solve";
    case Command::Tables: return "tables";
  }
  return "?";
}

struct RunConfig {
  Command command = Command::VerifyYbe;
  Model model = Model::IK;
  std::optional<Rational> p;
  std::optional<std::vector<Rational>> mu;  // multiplicative inhomogeneities m_j
  std::optional<std::size_t> L;
  unsigned samples = 0;  // 0: command default
  std::uint64_t seed = 1;
  std::optional<Backend> backend;
  std::string compute_kind;  // z, f, fbar, bruteforce
  std::string boundary;      // z, f, fbar (bruteforce only)
  std::vector<Rational> x, y, q;
  unsigned q_samples = 5;
  std::string out = "-";
};

struct RunResult {
  Json report;
  bool passed = false;
};

namespace detail {

inline Json config_echo(const RunConfig& c) {
  Json j{{"command", command_name(c.command)}, {"model", to_string(c.model)}, {"seed", c.seed}};
  if (c.p) j["p"] = to_json(*c.p);
  if (c.mu) j["mu"] = to_json(*c.mu);
  if (c.L) j["L"] = *c.L;
  if (c.samples) j["samples"] = c.samples;
  if (c.backend) j["backend"] = backend_name(*c.backend);
  if (!c.compute_kind.empty()) j["kind"] = c.compute_kind;
  if (!c.boundary.empty()) j["boundary"] = c.boundary;
  if (!c.x.empty()) j["x"] = to_json(c.x);
  if (!c.y.empty()) j["y"] = to_json(c.y);
  if (!c.q.empty()) j["q"] = to_json(c.q);
  if (c.command == Command::Tables && c.q.empty()) j["q_samples"] = c.q_samples;
  return j;
}

inline std::size_t require_L(const RunConfig& c, std::size_t lo, std::size_t hi) {
  const std::size_t L = c.L ? *c.L : (c.mu ? c.mu->size() : 0);
  if (L < lo || L > hi)
    throw ConfigError("L must be between " + std::to_string(lo) + " and " + std::to_string(hi) + " for " +
                      command_name(c.command));
  if (c.mu && c.mu->size() != L) throw ConfigError("--mu has " + std::to_string(c.mu->size()) + " entries, L is " + std::to_string(L));
  return L;
}

inline Rational require_p(const RunConfig& c) {
  if (!c.p) throw ConfigError(std::string(command_name(c.command)) + " needs --p");
  return *c.p;
}

/// p with p^2 = q, if q is the square of a rational.
inline Rational sqrt_of(const Rational& q) {
  if (sgn(q) <= 0) throw ConfigError("q must be a positive square, got " + to_string(q));
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    throw ConfigError("q = " + to_string(q) + " is not the square of a rational");
  mpz_sqrt(n.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), d.get_mpz_t());
  return Rational(n, d);
}

inline RunResult run_verify_ybe(const RunConfig& c) {
  const unsigned n = c.samples ? c.samples : 20;
  Rng rng(c.seed);
  Json points = Json::array();
  std::size_t failures = 0, bits = 0;
  for (unsigned s = 0; s < n; ++s) {
    const Rational p = c.p ? *c.p : random_p(rng);
    const auto ctx = make_context(c.model, p, {});
    const Rational x12 = random_rational(rng), x13 = random_rational(rng);
    const std::function<RMatrix<Rational>(const Rational&)> rmat = [&ctx](const Rational& x) { return r_matrix(ctx, x); };
    const YbeOutcome o = ybe_outcome(rmat, x12, x13);
    failures += !o.holds;
    bits = std::max(bits, o.max_entry_bits);
    points.push_back({{"p", to_json(p)}, {"x12", to_json(x12)}, {"x13", to_json(x13)}, {"holds", o.holds}});
  }
  return {{{"samples", n}, {"failures", failures}, {"max_entry_bits", bits}, {"points", points}}, failures == 0};
}

inline RunResult run_verify_algebra(const RunConfig& c) {
  const std::size_t L = require_L(c, 1, 4);
  const unsigned n = c.samples ? c.samples : 5;
  const auto results = verify_algebra(c.model, L, algebra_jobs(L), n, c.seed, c.p);
  Json rel = Json::array();
  std::size_t failures = 0;
  for (const auto& r : results) {
    rel.push_back(to_json(r));
    failures += !r.holds;
  }
  return {{{"relations", rel}, {"failures", failures}}, failures == 0};
}

inline RunResult run_verify_structure(const RunConfig& c) {
  const std::size_t L = require_L(c, 1, 4);
  Rng rng(c.seed);
  const Rational p = c.p ? *c.p : random_p(rng);
  std::vector<Rational> m;
  if (c.mu) {
    m = *c.mu;
  } else {
    for (std::size_t j = 0; j < L; ++j) m.push_back(random_rational_avoiding(rng, m));
  }
  const auto ctx = make_context(c.model, p, m);
  const CheckList checks = verify_structure(ctx, rng);
  const CheckList singular = singular_weights_report(ctx, random_rational(rng));
  return {{{"p", to_json(p)}, {"m", to_json(m)}, {"checks", to_json(checks)}, {"singular_weights", to_json(singular)}},
          checks.passed() && singular.passed()};
}

inline RunResult run_compute(const RunConfig& c) {
  if (!c.mu) throw ConfigError("compute needs --mu");
  const auto ctx = make_context(c.model, require_p(c), *c.mu);
  const std::size_t L = ctx.L();
  if (c.L && *c.L != L) throw ConfigError("--L differs from the number of --mu entries");
  Json out;
  if (c.compute_kind == "z") {
    if (c.x.size() != L) throw ConfigError("compute z needs L values in --x");
    out["value"] = to_json(compute_Z(ctx, c.x));
  } else if (c.compute_kind == "f" || c.compute_kind == "fbar") {
    if (c.x.size() + 1 != L) throw ConfigError("compute " + c.compute_kind + " needs L-1 values in --x");
    if (c.y.size() != 2) throw ConfigError("compute " + c.compute_kind + " needs --y Y1,Y2");
    out["value"] = to_json(c.compute_kind == "f" ? compute_F(ctx, c.x, c.y[0], c.y[1]) : compute_Fbar(ctx, c.y[0], c.y[1], c.x));
  } else if (c.compute_kind == "bruteforce") {
    const int iL = static_cast<int>(L);
    BoundarySpec b;
    if (c.boundary == "z")
      b = dwbc_boundary(iL);
    else if (c.boundary == "f")
      b = f_boundary(iL);
    else if (c.boundary == "fbar")
      b = fbar_boundary(iL);
    else
      throw ConfigError("--boundary must be z, f or fbar");
    if (static_cast<int>(c.x.size()) != b.K)
      throw ConfigError("--x needs " + std::to_string(b.K) + " row values (bottom row first)");
    const auto r = bruteforce_sum(ctx, b, c.x);
    out["value"] = to_json(r.value);
    out["nonzero_colorings"] = r.nonzero_colorings;
  } else {
    throw ConfigError("compute kind must be z, f, fbar or bruteforce");
  }
  return {out, true};
}

inline RunResult run_solve(const RunConfig& c) {
  const std::size_t L = require_L(c, 1, 3);
  const std::vector<Rational> m = c.mu ? *c.mu : std::vector<Rational>(L, Rational(1));
  const auto ctx = make_context(c.model, require_p(c), m);
  SolveOptions opt;
  opt.seed = c.seed;
  opt.backend = c.backend.value_or(L >= 3 ? Backend::Modular : Backend::Rational);
  const Solution sol = solve_zh(ctx, opt);
  Json out{{"solution", to_json(sol)}};
  bool passed = sol.checks.passed();
  bool at_origin = L == 2;
  for (const auto& mj : m) at_origin = at_origin && mj == 1;
  if (at_origin) {
    const TableReport rep = compare_tables(ctx, sol);
    out["tables"] = to_json(rep);
    passed = passed && rep.passed();
  }
  return {out, passed};
}

inline RunResult run_tables(const RunConfig& c) {
  std::vector<Rational> ps;
  if (!c.q.empty()) {
    for (const auto& q : c.q) ps.push_back(sqrt_of(q));
  } else {
    Rng rng(c.seed);
    while (ps.size() < c.q_samples) {
      const Rational p = random_p(rng);
      bool fresh = true;
      for (const auto& o : ps) fresh = fresh && o * o != p * p;
      if (fresh) ps.push_back(p);
    }
  }
  Json runs = Json::array();
  bool passed = true;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const auto ctx = make_context(c.model, ps[i], {Rational(1), Rational(1)});
    SolveOptions opt;
    opt.seed = c.seed + i;
    const Solution sol = solve_zh(ctx, opt);
    const TableReport rep = compare_tables(ctx, sol);
    Json r = to_json(rep);
    r["p"] = to_json(ps[i]);
    r["kernel_dim"] = sol.kernel_dim;
    runs.push_back(r);
    passed = passed && rep.passed() && sol.kernel_dim == 1;
  }
  return {{{"runs", runs}}, passed};
}

}  // namespace detail

/// Dispatches to the owning module and assembles the report.
inline RunResult run(const RunConfig& c) {
  RunResult r;
  switch (c.command) {
    case Command::VerifyYbe: r = detail::run_verify_ybe(c); break;
    case Command::VerifyAlgebra: r = detail::run_verify_algebra(c); break;
    case Command::VerifyStructure: r = detail::run_verify_structure(c); break;
    case Command::Compute: r = detail::run_compute(c); break;
    case Command::Solve: r = detail::run_solve(c); break;
    case Command::Tables: r = detail::run_tables(c); break;
  }
  r.report["config"] = detail::config_echo(c);
  r.report["passed"] = r.passed;
  return r;
}

}  // namespace v19
