#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "v19/checks.hpp"
#include "v19/interpolation.hpp"
#include "v19/sampling.hpp"
#include "v19/weights.hpp"

namespace v19 {

/// Vector in the 3^L dimensional quantum space. Site 1 is the most
/// significant base-3 digit; digit value d stands for colour d+1.
template <class F>
using StateVector = std::vector<F>;

inline std::size_t space_dim(std::size_t L) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < L; ++i) n *= 3;
  return n;
}

template <class F>
StateVector<F> basis_vector(std::size_t L, std::size_t index) {
  StateVector<F> v(space_dim(L), F(0));
  v[index] = F(1);
  return v;
}

/// |0> = e_1 (x) ... (x) e_1
template <class F>
StateVector<F> vacuum(std::size_t L) {
  return basis_vector<F>(L, 0);
}

/// Index of <0bar| = e_3 (x) ... (x) e_3.
inline std::size_t dual_vacuum_index(std::size_t L) { return space_dim(L) - 1; }

/// T(X) = R_{a1}(X/m_1) ... R_{aL}(X/m_L) with the site matrices evaluated once.
template <class F>
class MonodromyAt {
 public:
  MonodromyAt(const BasicModelContext<F>& ctx, const F& x) : x_(x) {
    if (is_zero(x)) throw ZeroArgument("monodromy argument must be nonzero");
    sites_.reserve(ctx.L());
    for (const auto& mj : ctx.m) sites_.push_back(r_matrix(ctx, F(x / mj)));
  }

  const F& x() const { return x_; }
  std::size_t L() const { return sites_.size(); }

  /// The (alpha, beta) entry of T(X) applied to v.
  StateVector<F> apply(int alpha, int beta, const StateVector<F>& v) const {
    const std::size_t n = space_dim(L());
    if (v.size() != n) throw std::invalid_argument("state vector has wrong dimension");
    std::array<StateVector<F>, 3> cur;
    for (auto& c : cur) c.assign(n, F(0));
    cur[static_cast<std::size_t>(beta - 1)] = v;
    std::array<bool, 3> live{false, false, false};
    live[static_cast<std::size_t>(beta - 1)] = true;
    std::size_t stride = 1;
    for (std::size_t site = L(); site-- > 0;) {
      const RMatrix<F>& r = sites_[site];
      std::array<StateVector<F>, 3> next;
      for (auto& c : next) c.assign(n, F(0));
      std::array<bool, 3> next_live{false, false, false};
      for (int gp = 1; gp <= 3; ++gp) {
        if (!live[static_cast<std::size_t>(gp - 1)]) continue;
        const StateVector<F>& in = cur[static_cast<std::size_t>(gp - 1)];
        for (std::size_t idx = 0; idx < n; ++idx) {
          if (is_zero(in[idx])) continue;
          const int s = static_cast<int>((idx / stride) % 3) + 1;
          for (int g = 1; g <= 3; ++g) {
            const int out = gp + s - g;
            if (out < 1 || out > 3) continue;
            const F& w = r.at(g, out, gp, s);
            if (is_zero(w)) continue;
            const std::size_t target = idx + static_cast<std::size_t>(out - 1) * stride - static_cast<std::size_t>(s - 1) * stride;
            next[static_cast<std::size_t>(g - 1)][target] += w * in[idx];
            next_live[static_cast<std::size_t>(g - 1)] = true;
          }
        }
      }
      cur = std::move(next);
      live = next_live;
      stride *= 3;
    }
    return std::move(cur[static_cast<std::size_t>(alpha - 1)]);
  }

 private:
  F x_;
  std::vector<RMatrix<F>> sites_;
};

template <class F>
StateVector<F> apply_t_entry(const BasicModelContext<F>& ctx, int alpha, int beta, const std::type_identity_t<F>& x, const StateVector<F>& v) {
  return MonodromyAt<F>(ctx, x).apply(alpha, beta, v);
}

/// One factor T_alpha^beta(X) of an operator product.
template <class F>
struct OpFactor {
  int alpha;
  int beta;
  F x;
};

/// Operator product written left to right; the rightmost factor acts first.
template <class F>
using OperatorWord = std::vector<OpFactor<F>>;

template <class F>
OpFactor<F> op_A(const F& x) { return {1, 1, x}; }
template <class F>
OpFactor<F> op_B(const F& x) { return {1, 2, x}; }
template <class F>
OpFactor<F> op_E(const F& x) { return {1, 3, x}; }

template <class F>
StateVector<F> apply_word(const BasicModelContext<F>& ctx, const OperatorWord<F>& word, StateVector<F> v) {
  for (std::size_t i = word.size(); i-- > 0;) v = apply_t_entry(ctx, word[i].alpha, word[i].beta, word[i].x, v);
  return v;
}

/// <0bar| word |0>
template <class F>
F expectation(const BasicModelContext<F>& ctx, const OperatorWord<F>& word) {
  const StateVector<F> v = apply_word(ctx, word, vacuum<F>(ctx.L()));
  return v[dual_vacuum_index(ctx.L())];
}

template <class F>
F omega(const BasicModelContext<F>& ctx, const std::type_identity_t<F>& y) {
  F out(1);
  for (const auto& mj : ctx.m) out *= y - mj * ctx.zeta;
  return out;
}

template <class F>
F omega_bar(const BasicModelContext<F>& ctx, const std::type_identity_t<F>& y) {
  F out(1);
  for (const auto& mj : ctx.m) out *= y - mj;
  return out;
}

template <class F>
F big_lambda(const BasicModelContext<F>& ctx, const std::type_identity_t<F>& x) {
  if (is_zero(x)) throw ZeroArgument("Lambda argument must be nonzero");
  F out(1);
  for (const auto& mj : ctx.m) out *= weight(ctx, WeightName::a(), F(x / mj));
  return out;
}

template <class F>
F big_lambda_bar(const BasicModelContext<F>& ctx, const std::type_identity_t<F>& x) {
  if (is_zero(x)) throw ZeroArgument("Lambda-bar argument must be nonzero");
  F out(1);
  for (const auto& mj : ctx.m) out *= weight(ctx, WeightName::d(1, 1), F(x / mj));
  return out;
}

namespace detail {

template <class F>
void require_nonzero(const std::vector<F>& xs) {
  for (const auto& x : xs)
    if (is_zero(x)) throw ZeroArgument("spectral argument must be nonzero");
}

}  // namespace detail

/// <0bar| E(X_L) ... E(X_1) |0>
template <class F>
F compute_Z(const BasicModelContext<F>& ctx, const std::vector<std::type_identity_t<F>>& xs) {
  if (xs.size() != ctx.L()) throw ConfigError("Z needs exactly L spectral arguments");
  detail::require_nonzero(xs);
  OperatorWord<F> word;
  for (std::size_t i = xs.size(); i-- > 0;) word.push_back(op_E(xs[i]));
  return expectation(ctx, word);
}

/// <0bar| E(U_{L-1}) ... E(U_1) B(Y2) B(Y1) |0>
template <class F>
F compute_F(const BasicModelContext<F>& ctx, const std::vector<std::type_identity_t<F>>& us, const std::type_identity_t<F>& y1, const std::type_identity_t<F>& y2) {
  if (us.size() + 1 != ctx.L()) throw ConfigError("F needs exactly L-1 lattice arguments");
  detail::require_nonzero(us);
  detail::require_nonzero(std::vector<F>{y1, y2});
  OperatorWord<F> word;
  for (std::size_t i = us.size(); i-- > 0;) word.push_back(op_E(us[i]));
  word.push_back(op_B(y2));
  word.push_back(op_B(y1));
  return expectation(ctx, word);
}

/// <0bar| B(Y2) B(Y1) E(U_{L-1}) ... E(U_1) |0>
template <class F>
F compute_Fbar(const BasicModelContext<F>& ctx, const std::type_identity_t<F>& y1, const std::type_identity_t<F>& y2, const std::vector<std::type_identity_t<F>>& us) {
  if (us.size() + 1 != ctx.L()) throw ConfigError("Fbar needs exactly L-1 lattice arguments");
  detail::require_nonzero(us);
  detail::require_nonzero(std::vector<F>{y1, y2});
  OperatorWord<F> word{op_B(y2), op_B(y1)};
  for (std::size_t i = us.size(); i-- > 0;) word.push_back(op_E(us[i]));
  return expectation(ctx, word);
}

template <class F>
F compute_H(const BasicModelContext<F>& ctx, const std::vector<std::type_identity_t<F>>& us, const std::type_identity_t<F>& y1, const std::type_identity_t<F>& y2) {
  const F w = omega(ctx, y1);
  if (is_zero(w)) throw OmegaZero("omega(Y1) vanishes; resample Y1");
  return F(compute_F(ctx, us, y1, y2) / w);
}

template <class F>
F compute_Hbar(const BasicModelContext<F>& ctx, const std::type_identity_t<F>& y1, const std::type_identity_t<F>& y2, const std::vector<std::type_identity_t<F>>& us) {
  const F w = omega_bar(ctx, y2);
  if (is_zero(w)) throw OmegaZero("omega-bar(Y2) vanishes; resample Y2");
  return F(compute_Fbar(ctx, y1, y2, us) / w);
}

// ---------------------------------------------------------------------------
// Structural checks (exact rationals only)

namespace detail {

inline std::string deg_str(int d) { return std::to_string(d); }

template <class Fn>
bool all_permutations_agree(std::vector<Rational> args, Fn&& fn) {
  std::vector<std::size_t> perm(args.size());
  std::iota(perm.begin(), perm.end(), 0);
  const Rational ref = fn(args);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<Rational> permuted;
    for (auto i : perm) permuted.push_back(args[i]);
    if (fn(permuted) != ref) return false;
  }
  return true;
}

}  // namespace detail

/// Degrees, symmetries, zeros and the initial condition of Z, F, Fbar, H, Hbar.
inline CheckList verify_structure(const ModelContext& ctx, Rng& rng) {
  const std::size_t L = ctx.L();
  if (L < 1 || L > 4) throw ConfigError("verify_structure supports 1 <= L <= 4");
  const int top = static_cast<int>(2 * L - 1);
  // d13 is constant for FZ, so every E(x) loses one degree in x
  const int e_top = ctx.model == Model::FZ ? top - 1 : top;
  const std::size_t nodes = 2 * L + 2;
  using Fn = std::function<Rational(const Rational&)>;
  CheckList out;
  auto rand_vec = [&](std::size_t k) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < k; ++i) v.push_back(random_rational(rng));
    return v;
  };

  {
    std::vector<Rational> xs = rand_vec(L);
    const Fn f = [&](const Rational& x1) {
      auto args = xs;
      args[0] = x1;
      return compute_Z(ctx, args);
    };
    const int d = measured_degree<Rational>(f, nodes);
    out.add("deg_x1 Z", detail::deg_str(e_top), detail::deg_str(d), d == e_top);
  }

  const std::vector<Rational> us = rand_vec(L - 1);
  const Rational y1 = random_rational(rng), y2 = random_rational(rng);
  {
    const Fn f1 = [&](const Rational& y) { return compute_F(ctx, us, y, y2); };
    const Fn f2 = [&](const Rational& y) { return compute_F(ctx, us, y1, y); };
    const Fn g1 = [&](const Rational& y) { return compute_Fbar(ctx, y, y2, us); };
    const Fn g2 = [&](const Rational& y) { return compute_Fbar(ctx, y1, y, us); };
    int d = measured_degree<Rational>(f1, nodes);
    out.add("deg_y1 F", detail::deg_str(top), detail::deg_str(d), d == top);
    d = measured_degree<Rational>(f2, nodes);
    out.add("deg_y2 F", detail::deg_str(top), detail::deg_str(d), d == top);
    d = measured_degree<Rational>(g1, nodes);
    out.add("deg_y1 Fbar", detail::deg_str(top), detail::deg_str(d), d == top);
    d = measured_degree<Rational>(g2, nodes);
    out.add("deg_y2 Fbar", detail::deg_str(top), detail::deg_str(d), d == top);
    for (std::size_t i = 0; i < us.size(); ++i) {
      const Fn fu = [&, i](const Rational& u) {
        auto args = us;
        args[i] = u;
        return compute_F(ctx, args, y1, y2);
      };
      d = measured_degree<Rational>(fu, nodes);
      out.add("deg_u" + std::to_string(i + 1) + " F", detail::deg_str(e_top), detail::deg_str(d), d == e_top);
    }
  }
  {
    const int want = static_cast<int>(L) - 1;
    const Fn h = [&](const Rational& y) { return compute_H(ctx, us, y, y2); };
    const std::function<bool(const Rational&)> omega_root = [&](const Rational& y) { return sgn(omega(ctx, y)) == 0; };
    int d = measured_degree<Rational>(h, nodes, omega_root);
    out.add("deg_y1 H", detail::deg_str(want), detail::deg_str(d), d == want);
    const Fn hb = [&](const Rational& y) { return compute_Hbar(ctx, y1, y, us); };
    const std::function<bool(const Rational&)> omega_bar_root = [&](const Rational& y) {
      return sgn(omega_bar(ctx, y)) == 0;
    };
    d = measured_degree<Rational>(hb, nodes, omega_bar_root);
    out.add("deg_y2 Hbar", detail::deg_str(want), detail::deg_str(d), d == want);
  }

  out.add("Z symmetric under permutations",
          detail::all_permutations_agree(rand_vec(L), [&](const std::vector<Rational>& a) { return compute_Z(ctx, a); }));
  if (L >= 2)
    out.add("F symmetric in lattice arguments", detail::all_permutations_agree(us, [&](const std::vector<Rational>& a) {
              return compute_F(ctx, a, y1, y2);
            }));
  if (L >= 2)
    out.add("Fbar symmetric in lattice arguments", detail::all_permutations_agree(us, [&](const std::vector<Rational>& a) {
              return compute_Fbar(ctx, y1, y2, a);
            }));

  for (std::size_t j = 0; j < L; ++j) {
    const Rational fz = compute_F(ctx, us, Rational(ctx.zeta * ctx.m[j]), y2);
    out.add("F vanishes at y1 = zeta m_" + std::to_string(j + 1), "0/1", to_string(fz), sgn(fz) == 0);
    const Rational fbz = compute_Fbar(ctx, y1, ctx.m[j], us);
    out.add("Fbar vanishes at y2 = m_" + std::to_string(j + 1), "0/1", to_string(fbz), sgn(fbz) == 0);
  }

  {
    Rational expected(1);
    for (const auto& mi : ctx.m)
      for (const auto& mj : ctx.m) expected *= weight(ctx, WeightName::a(), Rational(mi / mj));
    std::vector<std::size_t> perm(L);
    std::iota(perm.begin(), perm.end(), 0);
    bool ok = true;
    std::string seen;
    do {
      std::vector<Rational> args;
      for (auto i : perm) args.push_back(ctx.m[i]);
      const Rational z = compute_Z(ctx, args);
      if (z != expected) {
        ok = false;
        seen = to_string(z);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.add("Z at permutations of m equals prod a(m_i/m_j)", to_string(expected), ok ? to_string(expected) : seen, ok);
  }
  return out;
}

/// C_i|0> = 0, A_i|0> = Lambda_i|0>, the annihilators of <0bar| among all
/// nine entries, and the measured dual weights <0bar|A_i.
inline CheckList singular_weights_report(const ModelContext& ctx, const Rational& x) {
  const std::size_t L = ctx.L();
  const std::size_t n = space_dim(L);
  const MonodromyAt<Rational> t(ctx, x);
  const StateVector<Rational> v0 = vacuum<Rational>(L);
  CheckList out;
  auto is_null = [](const StateVector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& c) { return sgn(c) == 0; });
  };
  const std::array<std::pair<int, int>, 3> cs{{{2, 1}, {3, 1}, {3, 2}}};
  for (std::size_t i = 0; i < 3; ++i)
    out.add("C" + std::to_string(i + 1) + "|0> = 0", is_null(t.apply(cs[i].first, cs[i].second, v0)));

  auto product_of = [&](WeightName w) {
    Rational r(1);
    for (const auto& mj : ctx.m) r *= weight(ctx, w, Rational(x / mj));
    return r;
  };
  const std::array<WeightName, 3> vac{WeightName::a(), WeightName::b(), WeightName::d(3, 3)};
  const std::array<const char*, 3> vac_names{"prod a", "prod b", "prod d33"};
  for (int i = 1; i <= 3; ++i) {
    StateVector<Rational> got = t.apply(i, i, v0);
    const Rational lam = product_of(vac[static_cast<std::size_t>(i - 1)]);
    StateVector<Rational> want(n, Rational(0));
    want[0] = lam;
    out.add("A" + std::to_string(i) + "|0> = " + vac_names[static_cast<std::size_t>(i - 1)] + " |0>", to_string(lam),
            to_string(got[0]), got == want);
  }

  // row vectors <0bar| T_ab
  std::array<std::array<StateVector<Rational>, 3>, 3> rows;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      StateVector<Rational> row(n);
      for (std::size_t s = 0; s < n; ++s)
        row[s] = t.apply(a, b, basis_vector<Rational>(L, s))[dual_vacuum_index(L)];
      rows[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = std::move(row);
    }
  std::string annihilators;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      if (is_null(rows[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)])) {
        if (!annihilators.empty()) annihilators += ",";
        annihilators += "T" + std::to_string(a) + std::to_string(b);
      }
  out.add("entries annihilating <0bar|", "T21,T31,T32", annihilators, annihilators == "T21,T31,T32");

  const std::array<WeightName, 3> dual{WeightName::d(1, 1), WeightName::b(), WeightName::a()};
  const std::array<const char*, 3> dual_names{"prod d11", "prod b", "prod a"};
  for (int i = 1; i <= 3; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)];
    const Rational lam = product_of(dual[static_cast<std::size_t>(i - 1)]);
    const Rational measured = row[dual_vacuum_index(L)];
    bool eigen = true;
    for (std::size_t s = 0; s + 1 < n; ++s) eigen = eigen && sgn(row[s]) == 0;
    CheckItem item{"<0bar|A" + std::to_string(i) + " = " + dual_names[static_cast<std::size_t>(i - 1)] + " <0bar|",
                   to_string(lam), to_string(measured), eigen && measured == lam};
    out.items.push_back(item);
  }
  return out;
}

}  // namespace v19
