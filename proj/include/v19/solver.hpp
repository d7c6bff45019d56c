#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "v19/checks.hpp"
#include "v19/zh_system.hpp"

namespace v19 {

enum class Backend { Rational, Modular };

inline const char* backend_name(Backend b) { return b == Backend::Rational ? "rational" : "modular"; }

inline Backend parse_backend(const std::string& s) {
  if (s == "rational") return Backend::Rational;
  if (s == "modular") return Backend::Modular;
  throw ConfigError("unknown backend '" + s + "' (expected rational or modular)");
}

struct SolveOptions {
  Backend backend = Backend::Rational;
  std::uint64_t seed = 1;
  std::optional<bool> symmetric;        // default: symmetrize for L >= 3
  std::optional<std::size_t> samples;   // default: ceil(2.5 * unknowns)
  std::size_t min_primes = 2;
  std::size_t check_points = 10;
  std::size_t max_primes = 400;
};

struct Solution {
  Model model = Model::IK;
  std::size_t L = 0;
  Rational p, q;
  std::vector<Rational> m;
  Backend backend = Backend::Rational;
  AnsatzLayout layout;
  std::size_t samples = 0;
  std::size_t rows = 0;
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  bool doubled = false;
  std::size_t resamples = 0;
  std::vector<Rational> coeffs;  // H block then Hbar block
  std::size_t normalization_index = 0;
  bool normalization_fallback = false;
  Rational kappa;
  std::map<std::string, std::size_t> pivots_by_family;
  std::vector<u64> primes;
  std::size_t prime_retries = 0;
  std::size_t max_entry_bits = 0;
  CheckList checks;

  std::vector<Rational> phi() const { return {coeffs.begin(), coeffs.begin() + static_cast<long>(layout.block())}; }
  std::vector<Rational> phibar() const { return {coeffs.begin() + static_cast<long>(layout.block()), coeffs.end()}; }

  /// H and Hbar as given by the normalized ansatz times kappa.
  Rational H(const std::vector<Rational>& lattice, const Rational& v1, const Rational& v2) const {
    return kappa * ansatz_value(layout, coeffs, false, lattice, v1, v2);
  }
  Rational Hbar(const Rational& v1, const Rational& v2, const std::vector<Rational>& lattice) const {
    return kappa * ansatz_value(layout, coeffs, true, lattice, v1, v2);
  }
};

namespace detail {

inline FnEvaluator<Rational> ansatz_evaluator(const AnsatzLayout& lay, const std::vector<Rational>& coeffs) {
  return {[](const std::vector<Rational>&) -> Rational { throw ConfigError("ansatz evaluator has no Z"); },
          [&lay, &coeffs](const std::vector<Rational>& lat, const Rational& v1, const Rational& v2) {
            return ansatz_value(lay, coeffs, false, lat, v1, v2);
          },
          [&lay, &coeffs](const Rational& v1, const Rational& v2, const std::vector<Rational>& lat) {
            return ansatz_value(lay, coeffs, true, lat, v1, v2);
          }};
}

/// Z from the first elimination with an auxiliary X_0, before kappa scaling.
/// Redraws X_0 when the pair degenerates.
inline Rational z_unscaled(const ModelContext& ctx, const AnsatzLayout& lay, const std::vector<Rational>& coeffs,
                           const std::vector<Rational>& lattice, Rng& rng, bool second = false) {
  const auto ev = ansatz_evaluator(lay, coeffs);
  std::vector<Rational> forbidden = lattice;
  for (int attempt = 0; attempt < kMaxSampleRetries; ++attempt) {
    const Rational aux = random_rational_avoiding(rng, forbidden);
    try {
      return evaluate(second ? z_from_pair_second(ctx, aux, lattice) : z_from_pair_first(ctx, aux, lattice), ev);
    } catch (const DegenerateSample&) {
      forbidden.push_back(aux);
    }
  }
  throw DegenerateSample("no usable auxiliary spectral value");
}

struct PrimeRun {
  u64 p = 0;
  std::size_t rank = 0;
  std::vector<std::vector<u64>> kernel;
  std::vector<std::size_t> independent_rows;  // indices into the rows used
  std::vector<int> tags;
};

inline std::optional<PrimeRun> run_prime(const LinearSystem& sys, u64 p, const std::vector<std::size_t>& which) {
  std::vector<std::vector<u64>> rows;
  try {
    rows = modular_rows(sys, p, which);
  } catch (const NonInvertible&) {
    return std::nullopt;
  }
  ModularEchelon ech(p, sys.layout.unknowns());
  PrimeRun out;
  out.p = p;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::size_t idx = which.empty() ? i : which[i];
    if (ech.add_row(rows[i], sys.families[idx])) out.independent_rows.push_back(idx);
  }
  out.rank = ech.rank();
  out.kernel = ech.nullspace();
  out.tags = ech.tags();
  return out;
}

inline std::size_t ceil_2_5(std::size_t n) { return (5 * n + 1) / 2; }

}  // namespace detail

/// Kernel vector of the sampled system, normalized and scaled by kappa, with
/// the reconstruction checks attached.
inline Solution solve_zh(const ModelContext& ctx, const SolveOptions& opt = {}) {
  const std::size_t L = ctx.L();
  if (L < 1 || L > 3) throw ConfigError("solve_zh supports 1 <= L <= 3");
  Solution sol;
  sol.model = ctx.model;
  sol.L = L;
  sol.p = ctx.p;
  sol.q = ctx.q;
  sol.m = ctx.m;
  sol.backend = opt.backend;
  sol.layout = AnsatzLayout::make(L, opt.symmetric.value_or(L >= 3));
  const std::size_t n = sol.layout.unknowns();
  const std::size_t base_samples = opt.samples.value_or(detail::ceil_2_5(n));

  Rng rng(opt.seed);
  LinearSystem sys{sol.layout, {}, {}, {}, 0};
  add_samples(sys, ctx, base_samples, rng);

  std::vector<Rational> kernel;
  if (opt.backend == Backend::Rational) {
    RationalEchelon ech(n);
    auto feed = [&](std::size_t from) {
      std::vector<std::size_t> which;
      for (std::size_t i = from; i < sys.rows(); ++i) which.push_back(i);
      auto rows = rational_rows(sys, which);
      for (std::size_t i = 0; i < rows.size(); ++i) ech.add_row(std::move(rows[i]), sys.families[which[i]]);
    };
    feed(0);
    if (n - ech.rank() > 1) {
      const std::size_t from = sys.rows();
      add_samples(sys, ctx, base_samples, rng);
      sol.doubled = true;
      feed(from);
    }
    sol.rank = ech.rank();
    sol.kernel_dim = n - sol.rank;
    sol.max_entry_bits = ech.max_entry_bits();
    for (int t : ech.tags()) ++sol.pivots_by_family[family_name(t)];
    if (sol.kernel_dim != 1) {
      sol.samples = sys.samples.size();
      sol.rows = sys.rows();
      throw NonUniqueSolution("kernel dimension " + std::to_string(sol.kernel_dim) + " (expected 1)");
    }
    kernel = ech.nullspace().front();
  } else {
    Rng prime_rng(opt.seed ^ 0x5bd1e995u);
    auto fresh_prime = [&] {
      u64 p;
      do {
        p = random_prime_62(prime_rng);
      } while (std::find(sol.primes.begin(), sol.primes.end(), p) != sol.primes.end());
      return p;
    };
    auto full_run = [&]() -> detail::PrimeRun {
      for (int attempt = 0; attempt < 10; ++attempt) {
        if (auto r = detail::run_prime(sys, fresh_prime(), {})) return *r;
        ++sol.prime_retries;
      }
      throw NonInvertible("no prime keeps the sampled denominators invertible");
    };
    detail::PrimeRun first = full_run();
    if (n - first.rank > 1) {
      add_samples(sys, ctx, base_samples, rng);
      sol.doubled = true;
      first = full_run();
    }
    // Independent replicas: a replica of lower rank hit an unlucky prime.
    detail::PrimeRun second = full_run();
    for (int attempt = 0; first.rank != second.rank; ++attempt) {
      if (attempt == 5) throw BackendMismatch("prime-field ranks keep disagreeing");
      ++sol.prime_retries;
      if (second.rank < first.rank)
        second = full_run();
      else
        first = std::exchange(second, full_run());
    }
    sol.rank = first.rank;
    sol.kernel_dim = n - sol.rank;
    for (int t : first.tags) ++sol.pivots_by_family[family_name(t)];
    if (sol.kernel_dim != 1) {
      sol.samples = sys.samples.size();
      sol.rows = sys.rows();
      throw NonUniqueSolution("kernel dimension " + std::to_string(sol.kernel_dim) + " (expected 1)");
    }
    std::size_t norm = 0;
    while (norm < n && first.kernel[0][norm] == 0) ++norm;
    sol.normalization_index = norm;

    CrtAccumulator crt;
    auto absorb = [&](const detail::PrimeRun& run) {
      if (run.kernel.size() != 1 || run.kernel[0][norm] == 0) return false;
      ModulusScope scope(run.p);
      const ModP inv = ModP::from_residue(run.kernel[0][norm]).inverse();
      std::vector<u64> v(n);
      for (std::size_t c = 0; c < n; ++c) v[c] = (ModP::from_residue(run.kernel[0][c]) * inv).residue();
      crt.add(run.p, v);
      sol.primes.push_back(run.p);
      return true;
    };
    absorb(first);
    absorb(second);
    // Later primes only need the rows that were independent modulo the first.
    std::optional<std::vector<Rational>> previous;
    for (;;) {
      if (crt.primes() >= opt.min_primes) {
        auto current = crt.reconstruct();
        if (current && previous && *current == *previous) {
          kernel = std::move(*current);
          break;
        }
        previous = std::move(current);
      }
      if (crt.primes() >= opt.max_primes) throw InvariantViolation("rational reconstruction did not stabilize");
      const u64 p = fresh_prime();
      auto run = detail::run_prime(sys, p, first.independent_rows);
      if (!run || run->rank != sol.rank || !absorb(*run)) ++sol.prime_retries;
    }
    sol.max_entry_bits = crt.modulus_bits();
    // Reduce the reconstructed vector modulo a fresh prime against the full system.
    for (int attempt = 0;; ++attempt) {
      const u64 p = fresh_prime();
      try {
        const auto rows = modular_rows(sys, p);
        std::vector<u64> v(n);
        for (std::size_t c = 0; c < n; ++c) v[c] = reduce_mod(kernel[c], p);
        ModulusScope scope(p);
        std::size_t bad = 0;
        for (const auto& row : rows) {
          ModP acc(0);
          for (std::size_t c = 0; c < n; ++c) acc += ModP::from_residue(row[c]) * ModP::from_residue(v[c]);
          bad += !acc.is_zero();
        }
        sol.checks.add("reconstructed kernel vector annihilates all rows modulo a fresh prime", "0 nonzero rows",
                       std::to_string(bad) + " nonzero rows", bad == 0);
        break;
      } catch (const NonInvertible&) {
        if (attempt == 10) throw;
      }
    }
  }
  sol.samples = sys.samples.size();
  sol.rows = sys.rows();
  sol.resamples = sys.resamples;

  if (sgn(kernel[0]) != 0) {
    sol.normalization_index = 0;
  } else {
    sol.normalization_fallback = true;
    sol.normalization_index = 0;
    while (sol.normalization_index < n && sgn(kernel[sol.normalization_index]) == 0) ++sol.normalization_index;
  }
  const Rational unit = kernel[sol.normalization_index];
  for (auto& x : kernel) x /= unit;
  sol.coeffs = std::move(kernel);
  sol.checks.add("constant monomial is the unit", "phi[0..0] = 1",
                 sol.normalization_fallback ? "phi[0..0] = 0, normalized at " + sol.layout.label(sol.normalization_index)
                                            : "phi[0..0] = 1",
                 !sol.normalization_fallback);

  // kappa from Z(m_1..m_L) = prod_{i,j} a(m_i/m_j)
  Rational expected(1);
  for (const auto& mi : ctx.m)
    for (const auto& mj : ctx.m) expected *= weight(ctx, WeightName::a(), Rational(mi / mj));
  Rng check_rng(opt.seed + 0x9e3779b97f4a7c15ull);
  const Rational z_at_m = detail::z_unscaled(ctx, sol.layout, sol.coeffs, ctx.m, check_rng);
  if (sgn(z_at_m) == 0) throw NormalizationFailure("reconstructed Z vanishes at the initial point");
  sol.kappa = expected / z_at_m;

  std::size_t z_ok = 0, zx2_ok = 0, aux_ok = 0;
  for (std::size_t i = 0; i < opt.check_points; ++i) {
    std::vector<Rational> xs;
    for (std::size_t k = 0; k < L; ++k) xs.push_back(random_rational_avoiding(check_rng, xs));
    const Rational z1 = sol.kappa * detail::z_unscaled(ctx, sol.layout, sol.coeffs, xs, check_rng);
    const Rational z1b = sol.kappa * detail::z_unscaled(ctx, sol.layout, sol.coeffs, xs, check_rng);
    const Rational z2 = sol.kappa * detail::z_unscaled(ctx, sol.layout, sol.coeffs, xs, check_rng, true);
    z_ok += z1 == compute_Z(ctx, xs);
    zx2_ok += z1 == z2;
    aux_ok += z1 == z1b;
  }
  const std::string want = std::to_string(opt.check_points);
  sol.checks.add("reconstructed Z equals monodromy Z at fresh points", want, std::to_string(z_ok), z_ok == opt.check_points);
  sol.checks.add("Z from the reversed pair agrees", want, std::to_string(zx2_ok), zx2_ok == opt.check_points);
  sol.checks.add("Z independent of the auxiliary spectral value", want, std::to_string(aux_ok), aux_ok == opt.check_points);
  return sol;
}

}  // namespace v19
