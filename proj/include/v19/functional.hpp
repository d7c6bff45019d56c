#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "v19/coefficients.hpp"

namespace v19 {

/// coeff * Z(lattice), coeff * H(lattice | v1, v2) or coeff * Hbar(v1, v2 | lattice)
template <class F>
struct FnTerm {
  enum class Fn { Z, H, Hbar };
  F coeff;
  Fn fn;
  std::vector<F> lattice;
  F v1{0};
  F v2{0};
};

/// A linear combination of Z, H, Hbar values. Equations are stored as
/// lhs - rhs, so a true relation evaluates to zero.
template <class F>
using FnCombination = std::vector<FnTerm<F>>;

template <class F>
struct FnEvaluator {
  std::function<F(const std::vector<F>&)> Z;
  std::function<F(const std::vector<F>&, const F&, const F&)> H;
  std::function<F(const F&, const F&, const std::vector<F>&)> Hbar;
};

template <class F>
FnEvaluator<F> monodromy_evaluator(const BasicModelContext<F>& ctx) {
  return {[&ctx](const std::vector<F>& xs) { return compute_Z(ctx, xs); },
          [&ctx](const std::vector<F>& us, const F& y1, const F& y2) { return compute_H(ctx, us, y1, y2); },
          [&ctx](const F& y1, const F& y2, const std::vector<F>& us) { return compute_Hbar(ctx, y1, y2, us); }};
}

template <class F>
F evaluate(const FnCombination<F>& combo, const FnEvaluator<F>& ev) {
  F total(0);
  for (const auto& t : combo) {
    switch (t.fn) {
      case FnTerm<F>::Fn::Z: total += t.coeff * ev.Z(t.lattice); break;
      case FnTerm<F>::Fn::H: total += t.coeff * ev.H(t.lattice, t.v1, t.v2); break;
      case FnTerm<F>::Fn::Hbar: total += t.coeff * ev.Hbar(t.v1, t.v2, t.lattice); break;
    }
  }
  return total;
}

namespace detail {

template <class F>
std::vector<F> without(const std::vector<F>& xs, std::size_t i, std::size_t k = static_cast<std::size_t>(-1)) {
  std::vector<F> out;
  for (std::size_t l = 0; l < xs.size(); ++l)
    if (l != i && l != k) out.push_back(xs[l]);
  return out;
}

template <class F>
void append_scaled(FnCombination<F>& out, const FnCombination<F>& in, const F& scale) {
  for (auto t : in) {
    t.coeff = F(t.coeff * scale);
    out.push_back(std::move(t));
  }
}

template <class F>
FnTerm<F> z_term(const F& c, std::vector<F> lattice) {
  return {c, FnTerm<F>::Fn::Z, std::move(lattice), F(0), F(0)};
}
template <class F>
FnTerm<F> h_term(const F& c, std::vector<F> lattice, const F& v1, const F& v2) {
  return {c, FnTerm<F>::Fn::H, std::move(lattice), v1, v2};
}
template <class F>
FnTerm<F> hbar_term(const F& c, const F& v1, const F& v2, std::vector<F> lattice) {
  return {c, FnTerm<F>::Fn::Hbar, std::move(lattice), v1, v2};
}

}  // namespace detail

// All builders below take xs = (X_0, X_1, ..., X_L).

/// Omega0 Z(X_1..X_L) + Omega1 Z(X_0, X_2..X_L) = Upsilon0 H(X_2..|X_0,X_1) + Upsilon1 H(X_2..|X_1,X_0)
template <class F>
FnCombination<F> zh_equation(const BasicModelContext<F>& ctx, const std::vector<F>& xs) {
  const CoeffSet<F> c = zh_coeffs(ctx, xs[0], xs[1]);
  const std::vector<F> rest = detail::without(xs, 0, 1);
  return {detail::z_term(c.Omega0, detail::without(xs, 0)), detail::z_term(c.Omega1, detail::without(xs, 1)),
          detail::h_term(F(-c.Upsilon0), rest, xs[0], xs[1]), detail::h_term(F(-c.Upsilon1), rest, xs[1], xs[0])};
}

/// OmegaBar0 Z(X_1..X_L) + OmegaBar1 Z(X_0, X_2..) = UpsilonBar0 Hbar(X_1,X_0|X_2..) + UpsilonBar1 Hbar(X_0,X_1|X_2..)
template <class F>
FnCombination<F> zhbar_equation(const BasicModelContext<F>& ctx, const std::vector<F>& xs) {
  const CoeffSet<F> c = zh_coeffs(ctx, xs[0], xs[1]);
  const std::vector<F> rest = detail::without(xs, 0, 1);
  return {detail::z_term(c.OmegaBar0, detail::without(xs, 0)), detail::z_term(c.OmegaBar1, detail::without(xs, 1)),
          detail::hbar_term(F(-c.UpsilonBar0), xs[1], xs[0], rest),
          detail::hbar_term(F(-c.UpsilonBar1), xs[0], xs[1], rest)};
}

/// omegaBar(X_L) Hbar(X_0, X_L | X_1..X_{L-1}) = sum_j sum_k M_j N_jk omega(X_j) H(rest | X_j, X_k)
template <class F>
FnCombination<F> hhbar_line2(const BasicModelContext<F>& ctx, const std::vector<F>& xs) {
  const int L = static_cast<int>(xs.size()) - 1;
  const int n = L - 1;
  const auto last = static_cast<std::size_t>(L);
  FnCombination<F> out{detail::hbar_term(omega_bar(ctx, xs[last]), xs[0], xs[last], detail::without(xs, 0, last))};
  for (int j = 0; j <= n; ++j) {
    const F mj = exchange_coeff(ctx, ExchangeKind::M, n, j, 0, xs);
    for (int k = 0; k <= n + 1; ++k) {
      if (k == j) continue;
      const F c = F(-mj * exchange_coeff(ctx, ExchangeKind::N, n, j, k, xs) * omega(ctx, xs[static_cast<std::size_t>(j)]));
      out.push_back(detail::h_term(c, detail::without(xs, static_cast<std::size_t>(j), static_cast<std::size_t>(k)),
                                   xs[static_cast<std::size_t>(j)], xs[static_cast<std::size_t>(k)]));
    }
  }
  return out;
}

/// omega(X_L) H(X_1..X_{L-1} | X_L, X_0) = sum_j sum_k Mbar_j Nbar_jk omegaBar(X_j) Hbar(X_k, X_j | rest)
template <class F>
FnCombination<F> hhbar_line1(const BasicModelContext<F>& ctx, const std::vector<F>& xs) {
  const int L = static_cast<int>(xs.size()) - 1;
  const int n = L - 1;
  const auto last = static_cast<std::size_t>(L);
  FnCombination<F> out{detail::h_term(omega(ctx, xs[last]), detail::without(xs, 0, last), xs[last], xs[0])};
  for (int j = 0; j <= n; ++j) {
    const F mj = exchange_coeff(ctx, ExchangeKind::Mbar, n, j, 0, xs);
    for (int k = 0; k <= n + 1; ++k) {
      if (k == j) continue;
      const F c =
          F(-mj * exchange_coeff(ctx, ExchangeKind::Nbar, n, j, k, xs) * omega_bar(ctx, xs[static_cast<std::size_t>(j)]));
      out.push_back(detail::hbar_term(c, xs[static_cast<std::size_t>(k)], xs[static_cast<std::size_t>(j)],
                                      detail::without(xs, static_cast<std::size_t>(j), static_cast<std::size_t>(k))));
    }
  }
  return out;
}

/// Z(X_1..X_L) eliminated between the two Z-H equations at the pair (X_0, X_1):
/// the returned H/Hbar combination sums to Z.
template <class F>
FnCombination<F> z_from_pair_first(const BasicModelContext<F>& ctx, const F& x0, const std::vector<F>& lattice) {
  const CoeffSet<F> c = zh_coeffs(ctx, x0, lattice[0]);
  if (is_zero(c.W)) throw DegenerateSample("W vanishes");
  const F inv = F(F(1) / c.W);
  const F& x1 = lattice[0];
  const std::vector<F> rest(lattice.begin() + 1, lattice.end());
  return {detail::h_term(F(c.Upsilon0 * c.OmegaBar1 * inv), rest, x0, x1),
          detail::h_term(F(c.Upsilon1 * c.OmegaBar1 * inv), rest, x1, x0),
          detail::hbar_term(F(-c.UpsilonBar0 * c.Omega1 * inv), x1, x0, rest),
          detail::hbar_term(F(-c.UpsilonBar1 * c.Omega1 * inv), x0, x1, rest)};
}

/// The same Z eliminated at the reversed pair (X_1, Xb_0).
template <class F>
FnCombination<F> z_from_pair_second(const BasicModelContext<F>& ctx, const F& x0b, const std::vector<F>& lattice) {
  const F& x1 = lattice[0];
  const CoeffSet<F> c = zh_coeffs(ctx, x1, x0b);
  if (is_zero(c.W)) throw DegenerateSample("W vanishes");
  const F inv = F(F(1) / c.W);
  const std::vector<F> rest(lattice.begin() + 1, lattice.end());
  return {detail::hbar_term(F(c.Omega0 * c.UpsilonBar1 * inv), x1, x0b, rest),
          detail::hbar_term(F(c.Omega0 * c.UpsilonBar0 * inv), x0b, x1, rest),
          detail::h_term(F(-c.OmegaBar0 * c.Upsilon1 * inv), rest, x0b, x1),
          detail::h_term(F(-c.OmegaBar0 * c.Upsilon0 * inv), rest, x1, x0b)};
}

/// First elimination minus second, which vanishes on the true H, Hbar.
template <class F>
FnCombination<F> z_pair_difference(const BasicModelContext<F>& ctx, const F& x0, const F& x0b, const std::vector<F>& lattice) {
  FnCombination<F> out = z_from_pair_first(ctx, x0, lattice);
  detail::append_scaled(out, z_from_pair_second(ctx, x0b, lattice), F(-1));
  return out;
}

}  // namespace v19
