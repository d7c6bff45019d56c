#include <gtest/gtest.h>

#include "v19/solver.hpp"

using namespace v19;

namespace {

ModelContext at_mu_zero(Model model, const Rational& p, std::size_t L) {
  return make_context(model, p, std::vector<Rational>(L, Rational(1)));
}

SolveOptions options(std::uint64_t seed, Backend backend = Backend::Rational) {
  SolveOptions o;
  o.seed = seed;
  o.backend = backend;
  return o;
}

}  // namespace

TEST(Ansatz, UnknownCounts) {
  EXPECT_EQ(AnsatzLayout::make(1, false).unknowns(), 4u);
  EXPECT_EQ(AnsatzLayout::make(2, false).unknowns(), 64u);
  EXPECT_EQ(AnsatzLayout::make(2, true).unknowns(), 64u);
  EXPECT_EQ(AnsatzLayout::make(3, false).unknowns(), 1296u);
  EXPECT_EQ(AnsatzLayout::make(3, true).unknowns(), 756u);
}

TEST(Ansatz, Labels) {
  const auto lay = AnsatzLayout::make(2, false);
  EXPECT_EQ(lay.label(0), "phi[0,0,0]");
  EXPECT_EQ(lay.label(lay.h_index(3, 1, 2)), "phi[3,1,2]");
  EXPECT_EQ(lay.label(lay.hbar_index(3, 1, 2)), "phibar[3,1,2]");
  EXPECT_EQ(lay.label(32), "phibar[0,0,0]");
}

TEST(Ansatz, SymmetrizedMonomialsAreSymmetric) {
  const auto lay = AnsatzLayout::make(3, true);
  std::vector<Rational> coeffs(lay.unknowns());
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = Rational(static_cast<long>(i % 7) - 3, 1 + i % 5);
  const Rational a(2, 3), b(-5, 2), y1(7), y2(1, 4);
  EXPECT_EQ(ansatz_value(lay, coeffs, false, {a, b}, y1, y2), ansatz_value(lay, coeffs, false, {b, a}, y1, y2));
  EXPECT_EQ(ansatz_value(lay, coeffs, true, {a, b}, y1, y2), ansatz_value(lay, coeffs, true, {b, a}, y1, y2));
}

TEST(Ansatz, RowsVanishOnTrueFunctions) {
  // H and Hbar computed from the monodromy engine satisfy every sampled row.
  const auto ctx = make_context(Model::IK, Rational(3, 2), {Rational(2, 3), Rational(-1, 2)});
  const auto sys = assemble_system(ctx, AnsatzLayout::make(2, false), 6, 7);
  const auto ev = monodromy_evaluator(ctx);
  for (const auto& eq : sys.equations) EXPECT_EQ(evaluate(eq, ev), 0);
}

TEST(LinearAlgebra, IdentityAndZero) {
  RationalEchelon id(3);
  for (int i = 0; i < 3; ++i) {
    std::vector<Rational> r(3);
    r[static_cast<std::size_t>(i)] = 1;
    EXPECT_TRUE(id.add_row(r));
  }
  EXPECT_TRUE(id.nullspace().empty());
  RationalEchelon zero(4);
  EXPECT_FALSE(zero.add_row(std::vector<Rational>(4)));
  EXPECT_EQ(zero.nullspace().size(), 4u);
}

TEST(LinearAlgebra, KernelOfSmallMatrix) {
  RationalEchelon ech(3);
  ech.add_row({Rational(1), Rational(2), Rational(3)});
  ech.add_row({Rational(2), Rational(4), Rational(7)});
  EXPECT_FALSE(ech.add_row({Rational(3), Rational(6), Rational(10)}));
  const auto k = ech.nullspace();
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (std::vector<Rational>{Rational(-2), Rational(1), Rational(0)}));
}

TEST(LinearAlgebra, ModularMatchesRational) {
  Rng rng(3);
  const u64 p = random_prime_62(rng);
  RationalEchelon qe(6);
  ModularEchelon pe(p, 6);
  std::vector<std::vector<Rational>> rows;
  for (int r = 0; r < 8; ++r) {
    std::vector<Rational> row(6);
    for (std::size_t c = 0; c < 6; ++c)
      row[c] = r < 4 ? random_rational(rng) : Rational(rows[r - 4][c] * (r - 2) + rows[(r - 3) % 4][c]);
    rows.push_back(row);
    std::vector<u64> prow(6);
    for (std::size_t c = 0; c < 6; ++c) prow[c] = reduce_mod(row[c], p);
    EXPECT_EQ(qe.add_row(row), pe.add_row(prow));
  }
  EXPECT_EQ(qe.rank(), 4u);
  EXPECT_EQ(pe.rank(), 4u);
  const auto qk = qe.nullspace();
  const auto pk = pe.nullspace();
  ASSERT_EQ(qk.size(), pk.size());
  for (std::size_t i = 0; i < qk.size(); ++i)
    for (std::size_t c = 0; c < 6; ++c) EXPECT_EQ(reduce_mod(qk[i][c], p), pk[i][c]);
}

TEST(LinearAlgebra, CrtReconstruction) {
  Rng rng(11);
  const std::vector<Rational> truth{Rational(-12345678901, 987654321), Rational(3, 7), Rational(0), Rational(-1)};
  CrtAccumulator crt;
  for (int k = 0; k < 2; ++k) {
    const u64 p = random_prime_62(rng);
    std::vector<u64> r;
    for (const auto& x : truth) r.push_back(reduce_mod(x, p));
    crt.add(p, r);
  }
  const auto got = crt.reconstruct();
  ASSERT_TRUE(got.has_value());
  EXPECT_EQ(*got, truth);
}

TEST(LinearAlgebra, RowScalingKeepsRowSpace) {
  std::vector<Rational> row{Rational(2, 3), Rational(-4, 9), Rational(0), Rational(8, 15)};
  clear_denominators(row);
  EXPECT_EQ(row, (std::vector<Rational>{Rational(15), Rational(-10), Rational(0), Rational(12)}));
}

TEST(ZhSystem, L1KernelIsOneDimensional) {
  for (auto model : {Model::IK, Model::FZ}) {
    const auto ctx = at_mu_zero(model, Rational(3, 2), 1);
    const auto sys = assemble_system(ctx, AnsatzLayout::make(1, false), 10, 1);
    EXPECT_EQ(sys.layout.unknowns(), 4u);
    EXPECT_EQ(rational_rank(sys), 3u);
  }
}

TEST(ZhSystem, L1SolutionShape) {
  // H = kappa omegabar(v2), Hbar = kappa omega(v1), Z(X) = d13(X/m)
  const auto ctx = make_context(Model::IK, Rational(5, 3), {Rational(2, 7)});
  const auto sol = solve_zh(ctx);
  ASSERT_TRUE(sol.checks.passed());
  const Rational kappa_h = sol.H({}, Rational(3), Rational(4)) / omega_bar(ctx, Rational(4));
  const Rational kappa_hb = sol.Hbar(Rational(3), Rational(4), {}) / omega(ctx, Rational(3));
  EXPECT_EQ(kappa_h, kappa_hb);
  for (const Rational& y : {Rational(-2), Rational(1, 3), Rational(9)}) {
    EXPECT_EQ(sol.H({}, Rational(11), y), kappa_h * omega_bar(ctx, y));
    EXPECT_EQ(compute_Z(ctx, {y}), weight(ctx, WeightName::d(1, 3), Rational(y / ctx.m[0])));
  }
}

TEST(ZhSystem, L2RankAtHundredSamples) {
  const auto ctx = at_mu_zero(Model::IK, Rational(3, 2), 2);
  const auto sys = assemble_system(ctx, AnsatzLayout::make(2, false), 100, 5);
  EXPECT_EQ(rational_rank(sys), 63u);
  EXPECT_EQ(nullspace(sys).size(), 1u);
}

TEST(ZhSystem, DuplicateSamplesKeepRank) {
  const auto ctx = at_mu_zero(Model::FZ, Rational(2), 2);
  const auto base = assemble_system(ctx, AnsatzLayout::make(2, false), 12, 9);
  auto dup = base.samples;
  dup.insert(dup.end(), base.samples.begin(), base.samples.end());
  const auto twice = assemble_system(ctx, base.layout, dup);
  EXPECT_EQ(twice.rows(), 2 * base.rows());
  EXPECT_EQ(rational_rank(twice), rational_rank(base));
}

TEST(ZhSolver, KernelDimensionOneAcrossParameters) {
  for (auto model : {Model::IK, Model::FZ}) {
    for (const Rational& p : {Rational(3, 2), Rational(-7, 5), Rational(5, 2)})
      for (std::size_t L = 1; L <= 2; ++L) {
        const auto sol = solve_zh(at_mu_zero(model, p, L), options(3));
        EXPECT_EQ(sol.kernel_dim, 1u);
        EXPECT_TRUE(sol.checks.passed()) << to_string(model) << " L=" << L << " p=" << to_string(p);
      }
    const auto sol = solve_zh(make_context(model, Rational(4, 3), {Rational(2, 5), Rational(-3)}), options(4));
    EXPECT_EQ(sol.kernel_dim, 1u);
    EXPECT_TRUE(sol.checks.passed());
  }
}

TEST(ZhSolver, IkCoefficientClosedForm) {
  const auto ctx = at_mu_zero(Model::IK, Rational(3, 2), 2);
  const auto sol = solve_zh(ctx);
  const Rational q = ctx.q;
  const Rational q2 = q * q;
  const Rational expected = Rational(-2 * (2 * q2 * q2 - 2 * q - 1)) / Rational(q2 * (q2 + 1) * (q2 + q + 1));
  EXPECT_EQ(sol.coeffs[sol.layout.h_index(0, 0, 1)], expected);
}

TEST(ZhSolver, FzStructuralZeros) {
  const auto sol = solve_zh(at_mu_zero(Model::FZ, Rational(2), 2));
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(sol.coeffs[sol.layout.h_index(3, 0, k)], 0);
}

TEST(ZhSolver, BackendsAgreeAtL2) {
  const auto ctx = make_context(Model::FZ, Rational(-3, 2), {Rational(1), Rational(1)});
  const auto a = solve_zh(ctx, options(8, Backend::Rational));
  const auto b = solve_zh(ctx, options(8, Backend::Modular));
  EXPECT_GE(b.primes.size(), 2u);
  EXPECT_EQ(a.coeffs, b.coeffs);
  EXPECT_EQ(a.kappa, b.kappa);
  EXPECT_TRUE(b.checks.passed());
}

TEST(ZhSolver, PivotFamiliesAreRecorded) {
  const auto sol = solve_zh(at_mu_zero(Model::IK, Rational(3, 2), 2));
  std::size_t total = 0;
  for (const auto& [name, count] : sol.pivots_by_family) total += count;
  EXPECT_EQ(total, sol.rank);
  EXPECT_EQ(sol.pivots_by_family.size(), 2u);
}

TEST(ZhSolver, L3ReducedSystemRanksAgree) {
  const auto ctx = make_context(Model::IK, Rational(3, 2), std::vector<Rational>(3, Rational(1)));
  const auto sys = assemble_system(ctx, AnsatzLayout::make(3, true), 8, 12);
  Rng rng(2);
  const std::size_t r = rational_rank(sys);
  EXPECT_EQ(modular_rank(sys, random_prime_62(rng)), r);
  EXPECT_EQ(modular_rank(sys, random_prime_62(rng)), r);
  EXPECT_LT(r, sys.layout.unknowns() - 1);
}

TEST(ZhSolver, L3Modular) {
  for (auto model : {Model::IK, Model::FZ}) {
    const auto sol = solve_zh(at_mu_zero(model, Rational(3, 2), 3), options(21, Backend::Modular));
    EXPECT_EQ(sol.kernel_dim, 1u);
    EXPECT_GE(sol.primes.size(), 2u);
    EXPECT_TRUE(sol.checks.passed());
  }
}

TEST(ZhSolver, RejectsUnsupportedL) {
  EXPECT_THROW(solve_zh(at_mu_zero(Model::IK, Rational(3, 2), 4)), ConfigError);
}
