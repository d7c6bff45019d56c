#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "v19/functional.hpp"
#include "v19/linear_algebra.hpp"
#include "v19/parallel.hpp"
#include "v19/sampling.hpp"

namespace v19 {

/// Polynomial ansatz for H(lattice | v1, v2) and Hbar(v1, v2 | lattice).
/// H: lattice exponents 0..2L-1, v1 exponent 0..L-1, v2 exponent 0..2L-1.
/// Hbar: v1 exponent 0..2L-1, v2 exponent 0..L-1, lattice exponents 0..2L-1.
/// With `symmetric`, lattice monomials are symmetrized over the L-1 lattice
/// slots (one unknown per multiset of exponents).
/// Unknown order: all H coefficients, then all Hbar coefficients. H index is
/// (lattice tuple, v1, v2) with v2 fastest; Hbar index is (v1, v2, lattice tuple)
/// with the lattice tuple fastest.
struct AnsatzLayout {
  std::size_t L = 0;
  bool symmetric = false;
  int wide = 0;    // exponent range size of lattice slots and of the wide v-slot
  int narrow = 0;  // exponent range size of the omega-reduced v-slot
  std::vector<std::vector<int>> lattice_tuples;

  static AnsatzLayout make(std::size_t L, bool symmetric) {
    if (L < 1) throw ConfigError("ansatz needs L >= 1");
    AnsatzLayout out;
    out.L = L;
    out.symmetric = symmetric;
    out.wide = static_cast<int>(2 * L);
    out.narrow = static_cast<int>(L);
    const std::size_t slots = L - 1;
    std::vector<int> t(slots, 0);
    for (;;) {
      if (!symmetric || std::is_sorted(t.begin(), t.end())) out.lattice_tuples.push_back(t);
      std::size_t i = slots;
      while (i > 0 && t[i - 1] == out.wide - 1) t[--i] = 0;
      if (i == 0) break;
      ++t[i - 1];
    }
    return out;
  }

  std::size_t block() const { return lattice_tuples.size() * static_cast<std::size_t>(wide * narrow); }
  std::size_t h_count() const { return block(); }
  std::size_t unknowns() const { return 2 * block(); }

  std::size_t h_index(std::size_t tuple, int v1, int v2) const {
    return (tuple * static_cast<std::size_t>(narrow) + static_cast<std::size_t>(v1)) * static_cast<std::size_t>(wide) +
           static_cast<std::size_t>(v2);
  }
  std::size_t hbar_index(int v1, int v2, std::size_t tuple) const {
    return block() + (static_cast<std::size_t>(v1) * static_cast<std::size_t>(narrow) + static_cast<std::size_t>(v2)) *
                         lattice_tuples.size() +
           tuple;
  }

  /// phi[lattice..., v1, v2] or phibar[v1, v2, lattice...]
  std::string label(std::size_t col) const {
    const bool bar = col >= block();
    std::size_t r = bar ? col - block() : col;
    std::vector<int> idx;
    std::size_t tuple;
    int v1, v2;
    if (!bar) {
      v2 = static_cast<int>(r % static_cast<std::size_t>(wide));
      r /= static_cast<std::size_t>(wide);
      v1 = static_cast<int>(r % static_cast<std::size_t>(narrow));
      tuple = r / static_cast<std::size_t>(narrow);
      idx = lattice_tuples[tuple];
      idx.push_back(v1);
      idx.push_back(v2);
    } else {
      tuple = r % lattice_tuples.size();
      r /= lattice_tuples.size();
      v2 = static_cast<int>(r % static_cast<std::size_t>(narrow));
      v1 = static_cast<int>(r / static_cast<std::size_t>(narrow));
      idx = {v1, v2};
      idx.insert(idx.end(), lattice_tuples[tuple].begin(), lattice_tuples[tuple].end());
    }
    std::string s = bar ? "phibar[" : "phi[";
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
    return s + "]";
  }
};

namespace detail {

template <class F>
std::vector<F> powers(const F& x, int count) {
  std::vector<F> out(static_cast<std::size_t>(count));
  out[0] = F(1);
  for (std::size_t e = 1; e < out.size(); ++e) out[e] = F(out[e - 1] * x);
  return out;
}

/// Value of each lattice monomial (symmetrized if requested) at the given arguments.
template <class F>
std::vector<F> lattice_values(const AnsatzLayout& lay, const std::vector<F>& args) {
  if (args.size() != lay.L - 1) throw ConfigError("ansatz lattice argument count mismatch");
  std::vector<std::vector<F>> pw;
  for (const auto& a : args) pw.push_back(powers(a, lay.wide));
  std::vector<F> out;
  out.reserve(lay.lattice_tuples.size());
  for (const auto& t : lay.lattice_tuples) {
    F total(0);
    std::vector<int> e = t;
    do {
      F term(1);
      for (std::size_t s = 0; s < e.size(); ++s) term *= pw[s][static_cast<std::size_t>(e[s])];
      total += term;
    } while (lay.symmetric && std::next_permutation(e.begin(), e.end()));
    out.push_back(total);
  }
  return out;
}

}  // namespace detail

/// Adds coeff * monomial(args) for every H or Hbar unknown into the row.
template <class F>
void accumulate_term(std::vector<F>& row, const AnsatzLayout& lay, const FnTerm<F>& t) {
  using Fn = typename FnTerm<F>::Fn;
  if (t.fn == Fn::Z) throw ConfigError("ansatz rows cannot contain Z terms");
  const std::vector<F> lat = detail::lattice_values(lay, t.lattice);
  const bool bar = t.fn == Fn::Hbar;
  const std::vector<F> p1 = detail::powers(t.v1, bar ? lay.wide : lay.narrow);
  const std::vector<F> p2 = detail::powers(t.v2, bar ? lay.narrow : lay.wide);
  for (std::size_t tup = 0; tup < lat.size(); ++tup) {
    const F cl = F(t.coeff * lat[tup]);
    for (std::size_t i = 0; i < p1.size(); ++i) {
      const F c1 = F(cl * p1[i]);
      for (std::size_t j = 0; j < p2.size(); ++j) {
        const std::size_t col = bar ? lay.hbar_index(static_cast<int>(i), static_cast<int>(j), tup)
                                    : lay.h_index(tup, static_cast<int>(i), static_cast<int>(j));
        row[col] += c1 * p2[j];
      }
    }
  }
}

template <class F>
std::vector<F> expand_row(const AnsatzLayout& lay, const FnCombination<F>& combo) {
  std::vector<F> row(lay.unknowns(), F(0));
  for (const auto& t : combo) accumulate_term(row, lay, t);
  return row;
}

/// Ansatz polynomial for H (bar = false) or Hbar (bar = true) with the given
/// coefficient vector (both blocks), evaluated at one point.
template <class F>
F ansatz_value(const AnsatzLayout& lay, const std::vector<F>& coeffs, bool bar, const std::vector<F>& lattice,
               const F& v1, const F& v2) {
  using Fn = typename FnTerm<F>::Fn;
  std::vector<F> row(lay.unknowns(), F(0));
  accumulate_term(row, lay, FnTerm<F>{F(1), bar ? Fn::Hbar : Fn::H, lattice, v1, v2});
  F total(0);
  const std::size_t lo = bar ? lay.block() : 0;
  for (std::size_t c = lo; c < lo + lay.block(); ++c) total += row[c] * coeffs[c];
  return total;
}

/// Spectral tuple (X_0, Xb_0, X_1, ..., X_L) for one pair of sampled equations.
struct ZhSample {
  Rational x0, x0b;
  std::vector<Rational> lattice;
};

enum EquationFamily : int { kZxIdentity = 0, kHHbarLine2 = 1 };

inline const char* family_name(int tag) { return tag == kZxIdentity ? "zx-identity" : "hhbar-line2"; }

/// The sampled equations in structural form: every row is an H/Hbar
/// combination with exact rational coefficients. Rows are materialized over Q
/// or modulo a prime on demand.
struct LinearSystem {
  AnsatzLayout layout;
  std::vector<ZhSample> samples;
  std::vector<FnCombination<Rational>> equations;
  std::vector<int> families;
  std::size_t resamples = 0;

  std::size_t rows() const { return equations.size(); }
};

namespace detail {

/// The two equations of one sample: first elimination of Z minus the
/// second, and line 2 of the H-Hbar relation on (X_0, X_1..X_L).
inline std::vector<FnCombination<Rational>> sample_equations(const ModelContext& ctx, const ZhSample& s) {
  std::vector<Rational> xs{s.x0};
  xs.insert(xs.end(), s.lattice.begin(), s.lattice.end());
  return {z_pair_difference(ctx, s.x0, s.x0b, s.lattice), hhbar_line2(ctx, xs)};
}

inline ZhSample draw_sample(std::size_t L, Rng& rng) {
  std::vector<Rational> used;
  ZhSample s;
  s.x0 = random_rational_avoiding(rng, used);
  used.push_back(s.x0);
  s.x0b = random_rational_avoiding(rng, used);
  used.push_back(s.x0b);
  for (std::size_t i = 0; i < L; ++i) {
    s.lattice.push_back(random_rational_avoiding(rng, used));
    used.push_back(s.lattice.back());
  }
  return s;
}

constexpr int kMaxSampleRetries = 200;

}  // namespace detail

/// Appends `count` nondegenerate samples drawn from rng. Degenerate tuples
/// (vanishing denominators or W) are redrawn.
inline void add_samples(LinearSystem& sys, const ModelContext& ctx, std::size_t count, Rng& rng) {
  for (std::size_t n = 0; n < count; ++n) {
    for (int attempt = 0;; ++attempt) {
      if (attempt == detail::kMaxSampleRetries) throw DegenerateSample("could not draw a nondegenerate sample");
      ZhSample s = detail::draw_sample(sys.layout.L, rng);
      try {
        auto eqs = detail::sample_equations(ctx, s);
        for (std::size_t f = 0; f < eqs.size(); ++f) {
          sys.equations.push_back(std::move(eqs[f]));
          sys.families.push_back(static_cast<int>(f));
        }
        sys.samples.push_back(std::move(s));
        break;
      } catch (const DegenerateSample&) {
        ++sys.resamples;
      } catch (const ZeroArgument&) {
        ++sys.resamples;
      }
    }
  }
}

/// Sampled system with explicit tuples; degenerate tuples throw.
inline LinearSystem assemble_system(const ModelContext& ctx, const AnsatzLayout& layout, const std::vector<ZhSample>& samples) {
  if (ctx.L() != layout.L) throw ConfigError("layout L differs from the number of inhomogeneities");
  LinearSystem sys{layout, {}, {}, {}, 0};
  for (const auto& s : samples) {
    auto eqs = detail::sample_equations(ctx, s);
    for (std::size_t f = 0; f < eqs.size(); ++f) {
      sys.equations.push_back(std::move(eqs[f]));
      sys.families.push_back(static_cast<int>(f));
    }
    sys.samples.push_back(s);
  }
  return sys;
}

inline LinearSystem assemble_system(const ModelContext& ctx, const AnsatzLayout& layout, std::size_t n_samples,
                                    std::uint64_t seed) {
  if (ctx.L() != layout.L) throw ConfigError("layout L differs from the number of inhomogeneities");
  LinearSystem sys{layout, {}, {}, {}, 0};
  Rng rng(seed);
  add_samples(sys, ctx, n_samples, rng);
  return sys;
}

/// Rows over Q with denominators cleared, for the given row indices (all if empty).
inline std::vector<std::vector<Rational>> rational_rows(const LinearSystem& sys, const std::vector<std::size_t>& which = {}) {
  const std::size_t n = which.empty() ? sys.rows() : which.size();
  std::vector<std::vector<Rational>> out(n);
  parallel_for(n, [&](std::size_t i) {
    out[i] = expand_row(sys.layout, sys.equations[which.empty() ? i : which[i]]);
    clear_denominators(out[i]);
  });
  return out;
}

/// Rows modulo p as plain residues. Throws NonInvertible if p divides a denominator.
inline std::vector<std::vector<u64>> modular_rows(const LinearSystem& sys, u64 p, const std::vector<std::size_t>& which = {}) {
  const std::size_t n = which.empty() ? sys.rows() : which.size();
  std::vector<std::vector<u64>> out(n);
  parallel_for(n, [&](std::size_t i) {
    ModulusScope scope(p);
    const auto& eq = sys.equations[which.empty() ? i : which[i]];
    FnCombination<ModP> reduced;
    reduced.reserve(eq.size());
    for (const auto& t : eq) {
      FnTerm<ModP> r{ModP::from_rational(t.coeff), static_cast<typename FnTerm<ModP>::Fn>(static_cast<int>(t.fn)), {},
                     ModP::from_rational(t.v1), ModP::from_rational(t.v2)};
      for (const auto& x : t.lattice) r.lattice.push_back(ModP::from_rational(x));
      reduced.push_back(std::move(r));
    }
    const auto row = expand_row(sys.layout, reduced);
    out[i].resize(row.size());
    for (std::size_t c = 0; c < row.size(); ++c) out[i][c] = row[c].residue();
  });
  return out;
}

/// Rank of the system over Q.
inline std::size_t rational_rank(const LinearSystem& sys) {
  RationalEchelon ech(sys.layout.unknowns());
  for (auto& r : rational_rows(sys)) ech.add_row(std::move(r));
  return ech.rank();
}

/// Rank of the system modulo p.
inline std::size_t modular_rank(const LinearSystem& sys, u64 p) {
  ModularEchelon ech(p, sys.layout.unknowns());
  for (const auto& r : modular_rows(sys, p)) ech.add_row(r);
  return ech.rank();
}

/// Kernel basis over Q.
inline std::vector<std::vector<Rational>> nullspace(const LinearSystem& sys) {
  RationalEchelon ech(sys.layout.unknowns());
  for (auto& r : rational_rows(sys)) ech.add_row(std::move(r));
  return ech.nullspace();
}

}  // namespace v19
