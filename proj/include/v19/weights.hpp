#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <type_traits>

#include "v19/model.hpp"

namespace v19 {

/// One of the 13 distinct statistical weights: a, b, c, cbar and d(i,j).
struct WeightName {
  enum class Kind { a, b, c, cbar, d };
  Kind kind = Kind::a;
  int row = 0;  // d-block only, 1..3
  int col = 0;

  static constexpr WeightName a() { return {Kind::a, 0, 0}; }
  static constexpr WeightName b() { return {Kind::b, 0, 0}; }
  static constexpr WeightName c() { return {Kind::c, 0, 0}; }
  static constexpr WeightName cbar() { return {Kind::cbar, 0, 0}; }
  static constexpr WeightName d(int i, int j) { return {Kind::d, i, j}; }

  friend bool operator==(const WeightName&, const WeightName&) = default;

  std::string str() const {
    switch (kind) {
      case Kind::a: return "a";
      case Kind::b: return "b";
      case Kind::c: return "c";
      case Kind::cbar: return "cbar";
      case Kind::d: return "d" + std::to_string(row) + std::to_string(col);
    }
    return "?";
  }
};

inline std::array<WeightName, 13> all_weight_names() {
  std::array<WeightName, 13> out{WeightName::a(), WeightName::b(), WeightName::c(), WeightName::cbar()};
  std::size_t k = 4;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) out[k++] = WeightName::d(i, j);
  return out;
}

/// All weights at one spectral ratio x = e^{2 lambda}.
template <class F>
struct WeightSet {
  F a, b, c, cbar;
  std::array<std::array<F, 3>, 3> dblock;

  const F& d(int i, int j) const { return dblock[i - 1][j - 1]; }
};

namespace detail {

// d(alpha, beta) with beta' = 4 - beta in the case split.
template <class F>
F d_weight(const BasicModelContext<F>& ctx, int alpha, int beta, const F& x) {
  const F one(1);
  const F q2m1 = ctx.q * ctx.q - one;
  const int beta_bar = 4 - beta;
  if (alpha == beta && beta == beta_bar)
    return F(ctx.q * (x - one) * (x - ctx.zeta) + x * q2m1 * (ctx.zeta - one));
  if (alpha == beta) return F((x - one) * ((x - ctx.zeta) + x * q2m1));
  const F half = q_half_power(ctx, alpha - beta);
  const F delta = alpha == beta_bar ? F(x - ctx.zeta) : F(0);
  if (alpha < beta) return F(q2m1 * (ctx.zeta * (x - one) * half - delta));
  return F(x * q2m1 * ((x - one) * half - delta));
}

}  // namespace detail

template <class F>
F weight(const BasicModelContext<F>& ctx, WeightName name, const std::type_identity_t<F>& x) {
  if (is_zero(x)) throw ZeroArgument("weight argument x = e^{2 lambda} must be nonzero");
  const F one(1);
  switch (name.kind) {
    case WeightName::Kind::a: return F((x - ctx.zeta) * (x - ctx.q * ctx.q));
    case WeightName::Kind::b: return F(ctx.q * (x - one) * (x - ctx.zeta));
    case WeightName::Kind::c: return F((one - ctx.q * ctx.q) * (x - ctx.zeta));
    case WeightName::Kind::cbar: return F(x * (one - ctx.q * ctx.q) * (x - ctx.zeta));
    case WeightName::Kind::d:
      if (name.row < 1 || name.row > 3 || name.col < 1 || name.col > 3)
        throw std::out_of_range("d-weight indices must lie in 1..3");
      return detail::d_weight(ctx, name.row, name.col, x);
  }
  throw std::logic_error("unreachable weight kind");
}

template <class F>
WeightSet<F> weights_at(const BasicModelContext<F>& ctx, const std::type_identity_t<F>& x) {
  WeightSet<F> w;
  w.a = weight(ctx, WeightName::a(), x);
  w.b = weight(ctx, WeightName::b(), x);
  w.c = weight(ctx, WeightName::c(), x);
  w.cbar = weight(ctx, WeightName::cbar(), x);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) w.dblock[i - 1][j - 1] = detail::d_weight(ctx, i, j, x);
  return w;
}

/// 9x9 matrix with rows (alpha, beta) and columns (alpha', beta'), each pair
/// flattened as 3*(alpha-1) + (beta-1).
template <class F>
class RMatrix {
 public:
  static constexpr int index(int alpha, int beta) { return 3 * (alpha - 1) + (beta - 1); }

  F& operator()(int row, int col) { return entries_[static_cast<std::size_t>(9 * row + col)]; }
  const F& operator()(int row, int col) const { return entries_[static_cast<std::size_t>(9 * row + col)]; }

  /// Entry R_{alpha,beta}^{alpha',beta'}.
  const F& at(int alpha, int beta, int alpha_p, int beta_p) const {
    return (*this)(index(alpha, beta), index(alpha_p, beta_p));
  }

  friend bool operator==(const RMatrix& a, const RMatrix& b) { return a.entries_ == b.entries_; }

 private:
  std::array<F, 81> entries_{};
};

template <class F>
RMatrix<F> r_matrix_from(const WeightSet<F>& w) {
  RMatrix<F> r;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) r(i, j) = F(0);
  r(0, 0) = w.a;
  r(8, 8) = w.a;
  r(1, 1) = w.b;
  r(1, 3) = w.c;
  r(3, 1) = w.cbar;
  r(3, 3) = w.b;
  r(5, 5) = w.b;
  r(5, 7) = w.c;
  r(7, 5) = w.cbar;
  r(7, 7) = w.b;
  constexpr std::array<int, 3> centre{2, 4, 6};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(centre[i], centre[j]) = w.dblock[i][j];
  return r;
}

template <class F>
RMatrix<F> r_matrix(const BasicModelContext<F>& ctx, const std::type_identity_t<F>& x) {
  if (is_zero(x)) throw ZeroArgument("R-matrix argument must be nonzero");
  return r_matrix_from(weights_at(ctx, x));
}

template <class F>
bool check_ice_rule(const RMatrix<F>& r) {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int ap = 1; ap <= 3; ++ap)
        for (int bp = 1; bp <= 3; ++bp)
          if (a + b != ap + bp && !is_zero(r.at(a, b, ap, bp))) return false;
  return true;
}

template <class F>
bool check_ice_rule(const BasicModelContext<F>& ctx, const std::type_identity_t<F>& x) {
  return check_ice_rule(r_matrix(ctx, x));
}

/// Number of structurally nonzero slots (always 19 for the layout above).
inline int structural_nonzeros() {
  int n = 0;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int ap = 1; ap <= 3; ++ap)
        for (int bp = 1; bp <= 3; ++bp) n += (a + b == ap + bp);
  return n;
}

struct YbeOutcome {
  bool holds = false;
  std::size_t max_entry_bits = 0;
};

/// Compares R12(x12) R13(x13) R23(x23) with R23(x23) R13(x13) R12(x12),
/// x23 = x13/x12, entry by entry on the 27-dimensional space.
template <class F>
YbeOutcome ybe_outcome(const std::function<RMatrix<F>(const F&)>& rmat, const F& x12, const F& x13) {
  if (is_zero(x12) || is_zero(x13)) throw ZeroArgument("YBE arguments must be nonzero");
  const F x23 = x13 / x12;
  const RMatrix<F> r12 = rmat(x12), r13 = rmat(x13), r23 = rmat(x23);
  using Mat = std::array<F, 27 * 27>;
  auto embed = [](const RMatrix<F>& r, int s, int t) {
    // acts on tensor factors s < t of V1 (x) V2 (x) V3
    Mat m;
    m.fill(F(0));
    const int u = 3 - s - t;  // spectator factor
    for (int row = 0; row < 27; ++row) {
      const int rd[3] = {row / 9, (row / 3) % 3, row % 3};
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          const F& w = r(3 * rd[s] + rd[t], 3 * a + b);
          if (is_zero(w)) continue;
          int cd[3];
          cd[s] = a;
          cd[t] = b;
          cd[u] = rd[u];
          m[static_cast<std::size_t>(27 * row + 9 * cd[0] + 3 * cd[1] + cd[2])] = w;
        }
    }
    return m;
  };
  auto mul = [](const Mat& x, const Mat& y) {
    Mat z;
    z.fill(F(0));
    for (int i = 0; i < 27; ++i)
      for (int k = 0; k < 27; ++k) {
        const F& xik = x[static_cast<std::size_t>(27 * i + k)];
        if (is_zero(xik)) continue;
        for (int j = 0; j < 27; ++j) {
          const F& ykj = y[static_cast<std::size_t>(27 * k + j)];
          if (!is_zero(ykj)) z[static_cast<std::size_t>(27 * i + j)] += xik * ykj;
        }
      }
    return z;
  };
  const Mat m12 = embed(r12, 0, 1), m13 = embed(r13, 0, 2), m23 = embed(r23, 1, 2);
  const Mat lhs = mul(mul(m12, m13), m23);
  const Mat rhs = mul(mul(m23, m13), m12);
  YbeOutcome out;
  out.holds = lhs == rhs;
  if constexpr (FieldTraits<F>::exact_rational) {
    for (const auto& v : lhs) out.max_entry_bits = std::max(out.max_entry_bits, bit_length(v));
    for (const auto& v : rhs) out.max_entry_bits = std::max(out.max_entry_bits, bit_length(v));
  }
  return out;
}

template <class F>
bool check_ybe(const BasicModelContext<F>& ctx, const std::type_identity_t<F>& x12, const std::type_identity_t<F>& x13) {
  const std::function<RMatrix<F>(const F&)> rmat = [&ctx](const F& x) { return r_matrix(ctx, x); };
  return ybe_outcome<F>(rmat, x12, x13).holds;
}

}  // namespace v19
