#pragma once

#include <string>
#include <vector>

#include "v19/errors.hpp"
#include "v19/field.hpp"

namespace v19 {

enum class Model { IK, FZ };

inline std::string to_string(Model m) { return m == Model::IK ? "ik" : "fz"; }

inline Model parse_model(const std::string& s) {
  if (s == "ik" || s == "IK") return Model::IK;
  if (s == "fz" || s == "FZ") return Model::FZ;
  throw ConfigError("unknown model '" + s + "' (expected ik or fz)");
}

/// Everything a weight evaluation depends on. Spectral parameters are kept
/// multiplicatively: p stands for q^{1/2}, m_j for e^{2 mu_j}.
template <class F>
struct BasicModelContext {
  Model model = Model::FZ;
  F p;
  F q;
  F zeta;
  std::vector<F> m;

  std::size_t L() const { return m.size(); }
};

using ModelContext = BasicModelContext<Rational>;

inline ModelContext make_context(Model model, const Rational& p, std::vector<Rational> m) {
  if (sgn(p) == 0 || p == 1 || p == -1)
    throw DegenerateParameter("p must avoid 0 and +-1, got " + to_string(p));
  for (const auto& mj : m)
    if (sgn(mj) == 0) throw DegenerateParameter("inhomogeneity m_j must be nonzero");
  ModelContext ctx;
  ctx.model = model;
  ctx.p = p;
  ctx.q = p * p;
  ctx.zeta = model == Model::FZ ? Rational(ctx.q) : Rational(-ctx.q * ctx.q * ctx.q);
  if (ctx.q * ctx.q == ctx.zeta) throw DegenerateParameter("q^2 = zeta");
  ctx.m = std::move(m);
  return ctx;
}

/// Image of an exact context in another field. Throws NonInvertible or
/// DegenerateParameter when the reduction collapses the nondegeneracy
/// conditions, so the caller can pick another prime.
template <class F>
BasicModelContext<F> convert_context(const ModelContext& ctx) {
  BasicModelContext<F> out;
  out.model = ctx.model;
  out.p = from_rational<F>(ctx.p);
  out.q = from_rational<F>(ctx.q);
  out.zeta = from_rational<F>(ctx.zeta);
  for (const auto& mj : ctx.m) {
    out.m.push_back(from_rational<F>(mj));
    if (is_zero(out.m.back())) throw DegenerateParameter("m_j vanishes after reduction");
  }
  const F one(1);
  if (is_zero(out.p) || out.p == one || out.p == -one || out.q * out.q == out.zeta)
    throw DegenerateParameter("context degenerates after reduction");
  return out;
}

template <class F>
F q_half_power(const BasicModelContext<F>& ctx, int k) {
  return ipow<F>(ctx.p, k);
}

}  // namespace v19
