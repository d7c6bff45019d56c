#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "v19/monodromy.hpp"

namespace v19 {

namespace detail {

template <class F>
F checked_div(const F& num, const F& den, const char* what) {
  if (is_zero(den)) throw DegenerateSample(std::string("vanishing denominator: ") + what);
  return F(num / den);
}

template <class F>
F a_over_b(const BasicModelContext<F>& ctx, const F& x) {
  const WeightSet<F> w = weights_at(ctx, x);
  return checked_div(w.a, w.b, "b");
}

}  // namespace detail

enum class ExchangeKind { M, N, Mbar, Nbar };

/// M_j^{(n)}, N_{j,k}^{(n)} and their barred versions for spectral values
/// xs = (X_0, ..., X_{n+1}); differences of spectral parameters become ratios.
template <class F>
F exchange_coeff(const BasicModelContext<F>& ctx, ExchangeKind kind, int n, int j, int k, const std::vector<F>& xs) {
  if (n < 0 || static_cast<int>(xs.size()) < n + 1) throw ConfigError("exchange_coeff needs X_0..X_n");
  if (j < 0 || j > n) throw ConfigError("exchange_coeff: j out of range");
  auto X = [&](int i) -> const F& { return xs[static_cast<std::size_t>(i)]; };
  auto ab = [&](const F& num, const F& den) { return detail::a_over_b(ctx, F(num / den)); };
  const bool bar = kind == ExchangeKind::Mbar || kind == ExchangeKind::Nbar;
  // off-diagonal factor: -c/b for M, N and -cbar/b for Mbar, Nbar
  auto cross = [&](const F& x) {
    const WeightSet<F> w = weights_at(ctx, x);
    return F(-detail::checked_div(bar ? w.cbar : w.c, w.b, "b"));
  };
  F out(1);
  if (kind == ExchangeKind::M || kind == ExchangeKind::Mbar) {
    if (j == 0) {
      for (int l = 1; l <= n; ++l) out *= bar ? ab(X(0), X(l)) : ab(X(l), X(0));
      return out;
    }
    out = bar ? cross(F(X(0) / X(j))) : cross(F(X(j) / X(0)));
    for (int l = 1; l <= n; ++l)
      if (l != j) out *= bar ? ab(X(j), X(l)) : ab(X(l), X(j));
    return out;
  }
  if (static_cast<int>(xs.size()) < n + 2) throw ConfigError("N coefficients need X_0..X_{n+1}");
  if (k < 0 || k > n + 1 || k == j) throw ConfigError("exchange_coeff: k out of range");
  const F& last = X(n + 1);
  if (k == n + 1) {
    for (int l = 0; l <= n; ++l)
      if (l != j) out *= bar ? ab(last, X(l)) : ab(X(l), last);
    return out;
  }
  out = bar ? cross(F(last / X(k))) : cross(F(X(k) / last));
  for (int l = 0; l <= n; ++l)
    if (l != j && l != k) out *= bar ? ab(X(k), X(l)) : ab(X(l), X(k));
  return out;
}

/// Coefficients of the two functional equations relating Z to H and Hbar at
/// the ordered pair (X0, X1); every weight is taken at X1/X0.
template <class F>
struct CoeffSet {
  F Omega0, Omega1, Upsilon0, Upsilon1;
  F OmegaBar0, OmegaBar1, UpsilonBar0, UpsilonBar1;
  F W;
};

/// The determinant Omega0 OmegaBar1 - Omega1 OmegaBar0 written in closed form.
template <class F>
F w_closed_form(const BasicModelContext<F>& ctx, const F& x0, const F& x1) {
  const F one(1);
  const F e = x0 / x1;
  const F& q = ctx.q;
  const F& z = ctx.zeta;
  const F q2 = q * q;
  const F em1sq = F((e - one) * (e - one));
  const F mid = F(q2 - z * e);
  if (is_zero(em1sq) || is_zero(mid)) throw DegenerateSample("closed-form determinant denominator vanishes");
  const F p5 = ipow<F>(ctx.p, 5);
  const F t1num = F((one - q2 * e) * (one - q2 * e) * (one - z * e) * (one - z * e));
  const F t1den = F(em1sq * mid * ctx.p * (q2 - one));
  const F s = F(q2 * q2 - z * z * e);
  const F t2num = F((one - z * e) * (one - z * e) * s * s);
  const F t2den = F(z * z * em1sq * mid * p5 * (q2 - one));
  return F(t1num / t1den * big_lambda(ctx, x0) * big_lambda_bar(ctx, x1) -
           t2num / t2den * big_lambda(ctx, x1) * big_lambda_bar(ctx, x0));
}

template <class F>
CoeffSet<F> zh_coeffs(const BasicModelContext<F>& ctx, const std::type_identity_t<F>& x0, const std::type_identity_t<F>& x1) {
  if (is_zero(x0) || is_zero(x1)) throw ZeroArgument("coefficient arguments must be nonzero");
  if (x0 == x1) throw DegenerateSample("X0 = X1");
  const WeightSet<F> w = weights_at(ctx, F(x1 / x0));
  using detail::checked_div;
  const F r33 = checked_div(w.a, w.d(3, 3), "d33");
  const F r32 = checked_div(w.a, w.d(3, 2), "d32");
  const F d11_12 = checked_div(w.d(1, 1), w.d(1, 2), "d12");
  CoeffSet<F> c;
  c.Omega0 = F(r33 * big_lambda(ctx, x0));
  c.Omega1 = F((checked_div(w.d(1, 2), w.d(3, 2), "d32") - checked_div(w.d(1, 3), w.d(3, 3), "d33")) * big_lambda(ctx, x1));
  c.Upsilon0 = F(r32 * omega(ctx, x0));
  c.Upsilon1 = F((checked_div(w.d(2, 3), w.d(3, 3), "d33") - checked_div(w.d(2, 2), w.d(3, 2), "d32")) * omega(ctx, x1));
  c.OmegaBar0 = F((d11_12 - checked_div(w.d(3, 1), w.d(3, 2), "d32")) * big_lambda_bar(ctx, x0));
  c.OmegaBar1 = F(r32 * big_lambda_bar(ctx, x1));
  c.UpsilonBar0 =
      F((checked_div(w.d(2, 1), w.d(3, 2), "d32") - checked_div(w.d(2, 2), w.d(3, 2), "d32") * d11_12) * omega_bar(ctx, x0));
  c.UpsilonBar1 = F(r32 * d11_12 * omega_bar(ctx, x1));
  c.W = F(c.Omega0 * c.OmegaBar1 - c.Omega1 * c.OmegaBar0);
  if (c.W != w_closed_form(ctx, F(x0), F(x1)))
    throw InvariantViolation("coefficient determinant differs from its closed form");
  return c;
}

}  // namespace v19
