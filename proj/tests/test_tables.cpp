#include <gtest/gtest.h>

#include "v19/tables.hpp"

using namespace v19;

namespace {

SolveOptions options(std::uint64_t seed, Backend backend = Backend::Rational) {
  SolveOptions o;
  o.seed = seed;
  o.backend = backend;
  return o;
}

}  // namespace

TEST(QExpression, Evaluates) {
  const Rational q(9, 4);
  EXPECT_EQ(evaluate_q_expression<Rational>("1", q), 1);
  EXPECT_EQ(evaluate_q_expression<Rational>("q^4", q), Rational(6561, 256));
  EXPECT_EQ(evaluate_q_expression<Rational>("2q", q), Rational(9, 2));
  EXPECT_EQ(evaluate_q_expression<Rational>("-(2 (q+1))/(q^2+1)", q), Rational(-2 * (q + 1)) / Rational(q * q + 1));
  EXPECT_EQ(evaluate_q_expression<Rational>("q^2 (q-1) - 3", q), Rational(q * q * (q - 1) - 3));
  EXPECT_EQ(evaluate_q_expression<Rational>("-q^2", q), Rational(-q * q));
  EXPECT_EQ(evaluate_q_expression<Rational>("0", q), 0);
}

TEST(QExpression, Rejects) {
  const Rational q(2);
  EXPECT_THROW(evaluate_q_expression<Rational>("(q+1", q), ParseError);
  EXPECT_THROW(evaluate_q_expression<Rational>("q^", q), ParseError);
  EXPECT_THROW(evaluate_q_expression<Rational>("1/(q-2)", q), ParseError);
  EXPECT_THROW(evaluate_q_expression<Rational>("x", q), ParseError);
}

TEST(QExpression, OverPrimeField) {
  ModulusScope scope(1000000007ull);
  const ModP q(5);
  EXPECT_EQ(evaluate_q_expression<ModP>("(q^2+1)/2", q), ModP(13));
}

TEST(Tables, EntryCounts) {
  EXPECT_EQ(tables::ik_phi().size(), 32u);
  EXPECT_EQ(tables::ik_phibar().size(), 32u);
  EXPECT_EQ(tables::fz_phi().size(), 32u);
  EXPECT_EQ(tables::fz_phibar().size(), 32u);
  const Rational q(3);
  std::size_t zeros = 0;
  for (const auto* t : {&tables::fz_phi(), &tables::fz_phibar()})
    for (const auto& e : *t) zeros += sgn(evaluate_q_expression<Rational>(e.expr, q)) == 0;
  EXPECT_EQ(zeros, 16u);
}

TEST(Tables, ReproducedAtSeveralQ) {
  const std::vector<Rational> ps{Rational(3, 2), Rational(2), Rational(-5, 3), Rational(7, 4), Rational(4, 5)};
  for (auto model : {Model::IK, Model::FZ})
    for (const auto& p : ps) {
      const auto ctx = make_context(model, p, {Rational(1), Rational(1)});
      const auto sol = solve_zh(ctx, options(17));
      ASSERT_EQ(sol.kernel_dim, 1u);
      const auto rep = compare_tables(ctx, sol);
      EXPECT_EQ(rep.compared, 64u);
      EXPECT_TRUE(rep.mismatches.empty()) << to_string(model) << " p=" << to_string(p) << " first mismatch "
                                          << (rep.mismatches.empty() ? "" : rep.mismatches[0].label);
      if (model == Model::FZ) {
        EXPECT_EQ(rep.zeros, 16u);
      } else {
        EXPECT_EQ(sol.coeffs[sol.layout.block()], Rational(ctx.q * ctx.q * ctx.q * ctx.q));
      }
    }
}

TEST(Tables, PerturbedSolutionIsCaught) {
  const auto ctx = make_context(Model::FZ, Rational(2), {Rational(1), Rational(1)});
  auto sol = solve_zh(ctx);
  sol.coeffs[sol.layout.h_index(2, 1, 3)] += Rational(1, 1000000);
  const auto rep = compare_tables(ctx, sol);
  ASSERT_EQ(rep.mismatches.size(), 1u);
  EXPECT_EQ(rep.mismatches[0].label, "phi[2,1,3]");
}

TEST(Tables, RequiresVanishingInhomogeneities) {
  const auto ctx = make_context(Model::IK, Rational(3, 2), {Rational(2), Rational(1)});
  const auto sol = solve_zh(ctx);
  EXPECT_THROW(compare_tables(ctx, sol), ConfigError);
}
