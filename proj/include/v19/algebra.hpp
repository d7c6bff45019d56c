#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "v19/functional.hpp"
#include "v19/parallel.hpp"

namespace v19 {

/// The A/B/E exchange relations (one per ordered pair), the relations that
/// trade A E products for B B products, their E-chain versions, the
/// B B E...E reorderings, and the functional equations for Z, H, Hbar.
enum class RelationId {
  AA, AB, AE, BA, BB, BE, EA, EB, EE,
  AEtoBB, EAtoBB, AEtoBBChain, EAtoBBChain,
  FFbar, FbarF,
  ZH, ZHbar, HHbarLine1, HHbarLine2, HHbarRedundancy
};

inline const std::vector<RelationId>& exchange_relations() {
  static const std::vector<RelationId> ids{RelationId::AA, RelationId::AB, RelationId::AE, RelationId::BA, RelationId::BB,
                                           RelationId::BE, RelationId::EA, RelationId::EB, RelationId::EE};
  return ids;
}

inline std::string relation_name(RelationId id) {
  switch (id) {
    case RelationId::AA: return "A1A2";
    case RelationId::AB: return "A1B2";
    case RelationId::AE: return "A1E2";
    case RelationId::BA: return "B1A2";
    case RelationId::BB: return "B1B2";
    case RelationId::BE: return "B1E2";
    case RelationId::EA: return "E1A2";
    case RelationId::EB: return "E1B2";
    case RelationId::EE: return "E1E2";
    case RelationId::AEtoBB: return "AE-to-BB";
    case RelationId::EAtoBB: return "EA-to-BB";
    case RelationId::AEtoBBChain: return "AE-to-BB-chain";
    case RelationId::EAtoBBChain: return "EA-to-BB-chain";
    case RelationId::FFbar: return "BB-through-E";
    case RelationId::FbarF: return "E-through-BB";
    case RelationId::ZH: return "zh";
    case RelationId::ZHbar: return "zhbar";
    case RelationId::HHbarLine1: return "hhbar-line1";
    case RelationId::HHbarLine2: return "hhbar-line2";
    case RelationId::HHbarRedundancy: return "hhbar-line1-implied-by-line2";
  }
  return "?";
}

inline bool is_operator_relation(RelationId id) {
  return id != RelationId::ZH && id != RelationId::ZHbar && id != RelationId::HHbarLine1 &&
         id != RelationId::HHbarLine2 && id != RelationId::HHbarRedundancy;
}

/// Number of spectral values a relation consumes.
inline std::size_t relation_arity(RelationId id, std::size_t L, int n) {
  switch (id) {
    case RelationId::AEtoBBChain:
    case RelationId::EAtoBBChain:
    case RelationId::ZH:
    case RelationId::ZHbar:
    case RelationId::HHbarLine1:
    case RelationId::HHbarLine2:
    case RelationId::HHbarRedundancy: return L + 1;
    case RelationId::FFbar:
    case RelationId::FbarF: return static_cast<std::size_t>(n) + 2;
    default: return 2;
  }
}

template <class F>
struct Term {
  F coeff;
  OperatorWord<F> word;
};

/// Both sides of an operator identity.
template <class F>
struct OperatorRelation {
  std::vector<Term<F>> lhs;
  std::vector<Term<F>> rhs;
};

namespace detail {

template <class F>
OperatorWord<F> concat(OperatorWord<F> a, const OperatorWord<F>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

template <class F>
OperatorWord<F> e_chain(const std::vector<F>& xs, std::size_t skip_a, std::size_t skip_b = static_cast<std::size_t>(-1)) {
  OperatorWord<F> w;
  for (std::size_t l = 0; l < xs.size(); ++l)
    if (l != skip_a && l != skip_b) w.push_back(op_E(xs[l]));
  return w;
}

}  // namespace detail

template <class F>
OperatorRelation<F> build_operator_relation(const BasicModelContext<F>& ctx, RelationId id, int n, const std::vector<F>& xs) {
  using detail::checked_div;
  using W = OperatorWord<F>;
  OperatorRelation<F> rel;
  const F one(1);
  if (xs.size() < 2) throw ConfigError("relation needs at least two spectral values");
  const F& x1 = xs[0];
  const F& x2 = xs[1];
  auto A = [](const F& x) { return op_A(x); };
  auto B = [](const F& x) { return op_B(x); };
  auto E = [](const F& x) { return op_E(x); };
  // pair relations: weights at x2/x1, subscript 1 is xs[0], 2 is xs[1]
  const WeightSet<F> w = weights_at(ctx, F(x2 / x1));
  auto d = [&](int i, int j) { return w.d(i, j); };
  switch (id) {
    case RelationId::AA:
      rel.lhs = {{one, W{A(x1), A(x2)}}};
      rel.rhs = {{one, W{A(x2), A(x1)}}};
      return rel;
    case RelationId::AB:
      rel.lhs = {{one, W{A(x1), B(x2)}}};
      rel.rhs = {{checked_div(w.a, w.b, "b"), W{B(x2), A(x1)}}, {F(-checked_div(w.c, w.b, "b")), W{B(x1), A(x2)}}};
      return rel;
    case RelationId::AE:
      rel.lhs = {{one, W{A(x1), E(x2)}}};
      rel.rhs = {{checked_div(w.a, d(3, 3), "d33"), W{E(x2), A(x1)}},
                 {F(-checked_div(d(1, 3), d(3, 3), "d33")), W{E(x1), A(x2)}},
                 {F(-checked_div(d(2, 3), d(3, 3), "d33")), W{B(x1), B(x2)}}};
      return rel;
    case RelationId::BA:
      rel.lhs = {{one, W{B(x1), A(x2)}}};
      rel.rhs = {{checked_div(w.a, w.b, "b"), W{A(x2), B(x1)}}, {F(-checked_div(w.cbar, w.b, "b")), W{A(x1), B(x2)}}};
      return rel;
    case RelationId::BB:
      rel.lhs = {{one, W{B(x1), B(x2)}}};
      rel.rhs = {{checked_div(w.a, d(2, 1), "d21"), W{A(x2), E(x1)}},
                 {F(-checked_div(d(3, 1), d(2, 1), "d21")), W{A(x1), E(x2)}},
                 {F(-checked_div(d(1, 1), d(2, 1), "d21")), W{E(x1), A(x2)}}};
      return rel;
    case RelationId::BE:
      rel.lhs = {{one, W{B(x1), E(x2)}}};
      rel.rhs = {{checked_div(w.a, w.b, "b"), W{E(x2), B(x1)}}, {F(-checked_div(w.c, w.b, "b")), W{E(x1), B(x2)}}};
      return rel;
    case RelationId::EA:
      rel.lhs = {{one, W{E(x1), A(x2)}}};
      rel.rhs = {{checked_div(w.a, d(1, 2), "d12"), W{B(x2), B(x1)}},
                 {F(-checked_div(d(2, 2), d(1, 2), "d12")), W{B(x1), B(x2)}},
                 {F(-checked_div(d(3, 2), d(1, 2), "d12")), W{A(x1), E(x2)}}};
      return rel;
    case RelationId::EB:
      rel.lhs = {{one, W{E(x1), B(x2)}}};
      rel.rhs = {{checked_div(w.a, w.b, "b"), W{B(x2), E(x1)}}, {F(-checked_div(w.cbar, w.b, "b")), W{B(x1), E(x2)}}};
      return rel;
    case RelationId::EE:
      rel.lhs = {{one, W{E(x1), E(x2)}}};
      rel.rhs = {{one, W{E(x2), E(x1)}}};
      return rel;
    default: break;
  }

  // relations at the pair (X0, X1) = (xs[0], xs[1]); weights at X1/X0
  const F& X0 = xs[0];
  const F& X1 = xs[1];
  const F d11_12 = checked_div(d(1, 1), d(1, 2), "d12");
  const F a_32 = checked_div(w.a, d(3, 2), "d32");
  const F ae0 = F(d11_12 - checked_div(d(3, 1), d(3, 2), "d32"));
  const F ae_bb01 = F(checked_div(d(2, 1), d(3, 2), "d32") - checked_div(d(2, 2), d(3, 2), "d32") * d11_12);
  const F ae_bb10 = F(a_32 * d11_12);
  const F ea1 = F(checked_div(d(1, 2), d(3, 2), "d32") - checked_div(d(1, 3), d(3, 3), "d33"));
  const F ea0 = checked_div(w.a, d(3, 3), "d33");
  const F ea_bb01 = F(checked_div(d(2, 3), d(3, 3), "d33") - checked_div(d(2, 2), d(3, 2), "d32"));
  switch (id) {
    case RelationId::AEtoBB:
      rel.lhs = {{ae0, W{A(X0), E(X1)}}, {a_32, W{A(X1), E(X0)}}};
      rel.rhs = {{ae_bb01, W{B(X0), B(X1)}}, {ae_bb10, W{B(X1), B(X0)}}};
      return rel;
    case RelationId::EAtoBB:
      rel.lhs = {{ea0, W{E(X1), A(X0)}}, {ea1, W{E(X0), A(X1)}}};
      rel.rhs = {{a_32, W{B(X1), B(X0)}}, {ea_bb01, W{B(X0), B(X1)}}};
      return rel;
    case RelationId::AEtoBBChain: {
      const W tail = detail::e_chain(xs, 0, 1);
      rel.lhs = {{ae0, detail::concat(W{A(X0)}, detail::e_chain(xs, 0))},
                 {a_32, detail::concat(W{A(X1)}, detail::e_chain(xs, 1))}};
      rel.rhs = {{ae_bb01, detail::concat(W{B(X0), B(X1)}, tail)}, {ae_bb10, detail::concat(W{B(X1), B(X0)}, tail)}};
      return rel;
    }
    case RelationId::EAtoBBChain: {
      const W head = detail::e_chain(xs, 0, 1);
      rel.lhs = {{ea0, detail::concat(detail::e_chain(xs, 0), W{A(X0)})},
                 {ea1, detail::concat(detail::e_chain(xs, 1), W{A(X1)})}};
      rel.rhs = {{a_32, detail::concat(head, W{B(X1), B(X0)})}, {ea_bb01, detail::concat(head, W{B(X0), B(X1)})}};
      return rel;
    }
    case RelationId::FFbar:
    case RelationId::FbarF: {
      if (static_cast<int>(xs.size()) != n + 2) throw ConfigError("reordering relation needs X_0..X_{n+1}");
      const bool forward = id == RelationId::FFbar;
      const auto last = static_cast<std::size_t>(n + 1);
      W inner;
      for (int l = 1; l <= n; ++l) inner.push_back(E(xs[static_cast<std::size_t>(l)]));
      if (forward)
        rel.lhs = {{one, detail::concat(W{B(xs[last]), B(xs[0])}, inner)}};
      else
        rel.lhs = {{one, detail::concat(inner, W{B(xs[0]), B(xs[last])})}};
      for (int j = 0; j <= n; ++j) {
        const F mj = exchange_coeff(ctx, forward ? ExchangeKind::M : ExchangeKind::Mbar, n, j, 0, xs);
        for (int k = 0; k <= n + 1; ++k) {
          if (k == j) continue;
          const F c = F(mj * exchange_coeff(ctx, forward ? ExchangeKind::N : ExchangeKind::Nbar, n, j, k, xs));
          const W chain = detail::e_chain(xs, static_cast<std::size_t>(j), static_cast<std::size_t>(k));
          const F& xj = xs[static_cast<std::size_t>(j)];
          const F& xk = xs[static_cast<std::size_t>(k)];
          if (forward)
            rel.rhs.push_back({c, detail::concat(chain, W{B(xk), B(xj)})});
          else
            rel.rhs.push_back({c, detail::concat(W{B(xj), B(xk)}, chain)});
        }
      }
      return rel;
    }
    default: break;
  }
  throw ConfigError("not an operator relation: " + relation_name(id));
}

/// Applies sum_i c_i word_i (lhs minus rhs) to v, evaluating each distinct
/// spectral value's monodromy once.
template <class F>
class RelationApplier {
 public:
  RelationApplier(const BasicModelContext<F>& ctx, const OperatorRelation<F>& rel) : ctx_(ctx) {
    for (const auto& t : rel.lhs) terms_.push_back(t);
    for (const auto& t : rel.rhs) terms_.push_back({F(-t.coeff), t.word});
    for (const auto& t : terms_)
      for (const auto& f : t.word) monodromy(f.x);
  }

  StateVector<F> apply(const StateVector<F>& v) {
    StateVector<F> total(v.size(), F(0));
    for (const auto& t : terms_) {
      StateVector<F> cur = v;
      for (std::size_t i = t.word.size(); i-- > 0;) cur = monodromy(t.word[i].x).apply(t.word[i].alpha, t.word[i].beta, cur);
      for (std::size_t s = 0; s < cur.size(); ++s)
        if (!is_zero(cur[s])) total[s] += t.coeff * cur[s];
    }
    return total;
  }

 private:
  const MonodromyAt<F>& monodromy(const F& x) {
    for (const auto& [key, value] : cache_)
      if (key == x) return value;
    cache_.emplace_back(x, MonodromyAt<F>(ctx_, x));
    return cache_.back().second;
  }

  const BasicModelContext<F>& ctx_;
  std::vector<Term<F>> terms_;
  std::vector<std::pair<F, MonodromyAt<F>>> cache_;
};

/// True iff lhs - rhs is the zero operator. Every column is checked for
/// L <= 3; larger lattices are probed with `probes` random integer vectors.
template <class F>
bool operator_relation_holds(const BasicModelContext<F>& ctx, const OperatorRelation<F>& rel, Rng& rng, int probes = 5) {
  RelationApplier<F> applier(ctx, rel);
  const std::size_t L = ctx.L();
  const std::size_t n = space_dim(L);
  auto null = [](const StateVector<F>& v) {
    for (const auto& c : v)
      if (!is_zero(c)) return false;
    return true;
  };
  if (L <= 3) {
    for (std::size_t s = 0; s < n; ++s)
      if (!null(applier.apply(basis_vector<F>(L, s)))) return false;
    return true;
  }
  for (int k = 0; k < probes; ++k) {
    StateVector<F> v(n);
    for (auto& c : v) c = F(static_cast<long>(uniform_int(rng, -50, 50)));
    if (!null(applier.apply(v))) return false;
  }
  return true;
}

struct RelationResidual {
  RelationId relation = RelationId::AA;
  std::size_t L = 0;
  int n = -1;  // only for the reordering relations
  bool holds = false;
  std::string method;  // full-matrix, random-vectors, scalar, degenerate
  Rational p;
  std::vector<Rational> m;
  std::vector<Rational> xs;
  unsigned attempts = 0;
};

namespace detail {

/// Random polynomial H(us | y1, y2), symmetric in us, with the degree
/// pattern of the ansatz.
class RandomSymmetricH {
 public:
  RandomSymmetricH(std::size_t L, Rng& rng) : L_(L) {
    const int lattice_top = static_cast<int>(2 * L - 1);
    std::vector<int> exps(L - 1, 0);
    for (;;) {
      for (int j = 0; j < static_cast<int>(L); ++j)
        for (int k = 0; k <= lattice_top; ++k) coeffs_[{exps, j, k}] = Rational(static_cast<long>(uniform_int(rng, -9, 9)));
      // next nondecreasing exponent tuple
      std::size_t i = exps.size();
      while (i > 0 && exps[i - 1] == lattice_top) --i;
      if (i == 0) break;
      const int v = exps[i - 1] + 1;
      for (std::size_t t = i - 1; t < exps.size(); ++t) exps[t] = v;
    }
  }

  Rational operator()(const std::vector<Rational>& us, const Rational& y1, const Rational& y2) const {
    Rational total(0);
    const int lattice_top = static_cast<int>(2 * L_ - 1);
    std::vector<int> e(us.size(), 0);
    for (;;) {
      std::vector<int> key(e);
      std::sort(key.begin(), key.end());
      Rational mono(1);
      for (std::size_t i = 0; i < us.size(); ++i) mono *= ipow<Rational>(us[i], e[i]);
      for (int j = 0; j < static_cast<int>(L_); ++j)
        for (int k = 0; k <= lattice_top; ++k)
          total += coeffs_.at({key, j, k}) * mono * ipow<Rational>(y1, j) * ipow<Rational>(y2, k);
      std::size_t i = 0;
      while (i < e.size() && e[i] == lattice_top) e[i++] = 0;
      if (i == e.size()) break;
      ++e[i];
    }
    return total;
  }

 private:
  struct Key {
    std::vector<int> lattice;
    int j;
    int k;
    bool operator<(const Key& o) const { return std::tie(lattice, j, k) < std::tie(o.lattice, o.j, o.k); }
  };
  std::size_t L_;
  std::map<Key, Rational> coeffs_;
};

}  // namespace detail

/// Checks that the first hhbar line is implied by the second: with an
/// arbitrary symmetric polynomial H and Hbar defined through line 2, line 1
/// holds at the sample xs.
inline bool hhbar_redundancy_holds(const ModelContext& ctx, const std::vector<Rational>& xs, Rng& rng) {
  const std::size_t L = ctx.L();
  const detail::RandomSymmetricH H(L, rng);
  FnEvaluator<Rational> ev;
  ev.H = [&H](const std::vector<Rational>& us, const Rational& y1, const Rational& y2) { return H(us, y1, y2); };
  ev.Z = [](const std::vector<Rational>&) -> Rational { throw std::logic_error("Z not used"); };
  ev.Hbar = [&ctx, &ev](const Rational& y1, const Rational& y2, const std::vector<Rational>& us) {
    std::vector<Rational> line_xs{y1};
    line_xs.insert(line_xs.end(), us.begin(), us.end());
    line_xs.push_back(y2);
    FnCombination<Rational> line = hhbar_line2(ctx, line_xs);
    const Rational lead = line[0].coeff;
    if (sgn(lead) == 0) throw DegenerateSample("omega-bar vanishes");
    line.erase(line.begin());
    return Rational(-evaluate(line, ev) / lead);
  };
  return sgn(evaluate(hhbar_line1(ctx, xs), ev)) == 0;
}

/// One relation at one sample.
inline RelationResidual verify_relation(const ModelContext& ctx, RelationId id, int n, const std::vector<Rational>& xs,
                                        Rng& rng) {
  RelationResidual res;
  res.relation = id;
  res.L = ctx.L();
  res.n = n;
  res.p = ctx.p;
  res.m = ctx.m;
  res.xs = xs;
  res.attempts = 1;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] == xs[j]) throw DegenerateSample("coincident spectral values");
  if (is_operator_relation(id)) {
    res.holds = operator_relation_holds(ctx, build_operator_relation(ctx, id, n, xs), rng);
    res.method = ctx.L() <= 3 ? "full-matrix" : "random-vectors";
    return res;
  }
  if (ctx.L() > 3) throw ConfigError("functional relations are checked for L <= 3");
  res.method = "scalar";
  const FnEvaluator<Rational> ev = monodromy_evaluator(ctx);
  switch (id) {
    case RelationId::ZH: res.holds = sgn(evaluate(zh_equation(ctx, xs), ev)) == 0; break;
    case RelationId::ZHbar: res.holds = sgn(evaluate(zhbar_equation(ctx, xs), ev)) == 0; break;
    case RelationId::HHbarLine1: res.holds = sgn(evaluate(hhbar_line1(ctx, xs), ev)) == 0; break;
    case RelationId::HHbarLine2: res.holds = sgn(evaluate(hhbar_line2(ctx, xs), ev)) == 0; break;
    case RelationId::HHbarRedundancy: res.holds = hhbar_redundancy_holds(ctx, xs, rng); break;
    default: throw ConfigError("unhandled relation");
  }
  return res;
}

inline constexpr unsigned kMaxResamples = 50;

struct AlgebraJob {
  RelationId id;
  int n;
};

/// The relations checked for a lattice of size L.
inline std::vector<AlgebraJob> algebra_jobs(std::size_t L) {
  std::vector<AlgebraJob> jobs;
  for (auto id : exchange_relations()) jobs.push_back({id, -1});
  jobs.push_back({RelationId::AEtoBB, -1});
  jobs.push_back({RelationId::EAtoBB, -1});
  if (L >= 2) {
    jobs.push_back({RelationId::AEtoBBChain, -1});
    jobs.push_back({RelationId::EAtoBBChain, -1});
  }
  for (int n = 1; n <= 2; ++n) {
    jobs.push_back({RelationId::FFbar, n});
    jobs.push_back({RelationId::FbarF, n});
  }
  if (L <= 3)
    for (auto id : {RelationId::ZH, RelationId::ZHbar, RelationId::HHbarLine1, RelationId::HHbarLine2,
                    RelationId::HHbarRedundancy})
      jobs.push_back({id, -1});
  return jobs;
}

/// Runs `jobs` x `samples` checks. Each (job, sample) draws its own
/// generator seed from one master stream, so the outcome does not depend on
/// the number of worker threads. p is drawn per sample unless given.
inline std::vector<RelationResidual> verify_algebra(Model model, std::size_t L, const std::vector<AlgebraJob>& jobs,
                                                    unsigned samples, std::uint64_t seed,
                                                    const std::optional<Rational>& fixed_p = std::nullopt) {
  Rng master(seed);
  std::vector<std::uint64_t> seeds(jobs.size() * samples);
  for (auto& s : seeds) s = master();
  std::vector<RelationResidual> out(seeds.size());
  parallel_for(seeds.size(), [&](std::size_t idx) {
    const AlgebraJob& job = jobs[idx / samples];
    Rng rng(seeds[idx]);
    RelationResidual res;
    unsigned attempt = 0;
    for (; attempt < kMaxResamples; ++attempt) {
      const Rational p = fixed_p ? *fixed_p : random_p(rng);
      std::vector<Rational> m;
      for (std::size_t j = 0; j < L; ++j) m.push_back(random_rational(rng));
      std::vector<Rational> xs;
      for (std::size_t i = 0; i < relation_arity(job.id, L, job.n); ++i) xs.push_back(random_rational(rng));
      try {
        const ModelContext ctx = make_context(model, p, m);
        res = verify_relation(ctx, job.id, job.n, xs, rng);
        break;
      } catch (const DegenerateSample&) {
      } catch (const OmegaZero&) {
      } catch (const DegenerateParameter&) {
      }
    }
    if (attempt == kMaxResamples) {
      res.relation = job.id;
      res.L = L;
      res.n = job.n;
      res.holds = false;
      res.method = "degenerate";
    }
    res.attempts = attempt + 1;
    out[idx] = std::move(res);
  });
  return out;
}

}  // namespace v19
