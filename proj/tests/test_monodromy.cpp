#include <gtest/gtest.h>

#include "v19/monodromy.hpp"

using namespace v19;

namespace {

ModelContext random_ctx(Model model, std::size_t L, Rng& rng) {
  std::vector<Rational> m;
  for (std::size_t j = 0; j < L; ++j) m.push_back(random_rational(rng));
  return make_context(model, random_p(rng), m);
}

bool is_null(const StateVector<Rational>& v) {
  for (const auto& c : v)
    if (sgn(c) != 0) return false;
  return true;
}

}  // namespace

TEST(Monodromy, SingleSiteEntry) {
  const auto ctx = make_context(Model::IK, Rational(3, 2), {Rational(2)});
  const Rational x(7, 3);
  const auto out = apply_t_entry(ctx, 1, 3, x, vacuum<Rational>(1));
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0], 0);
  EXPECT_EQ(out[1], 0);
  EXPECT_EQ(out[2], weight(ctx, WeightName::d(1, 3), Rational(x / 2)));
}

TEST(Monodromy, VacuumEigenvalues) {
  Rng rng(3);
  for (auto model : {Model::IK, Model::FZ})
    for (std::size_t L = 1; L <= 3; ++L) {
      const auto ctx = random_ctx(model, L, rng);
      const Rational x = random_rational(rng);
      EXPECT_TRUE(is_null(apply_t_entry(ctx, 2, 1, x, vacuum<Rational>(L))));
      auto a = apply_t_entry(ctx, 1, 1, x, vacuum<Rational>(L));
      EXPECT_EQ(a[0], big_lambda(ctx, x));
      a[0] = 0;
      EXPECT_TRUE(is_null(a));
    }
}

TEST(Monodromy, SingularWeightsReport) {
  Rng rng(4);
  for (auto model : {Model::IK, Model::FZ})
    for (std::size_t L = 1; L <= 3; ++L) {
      const auto ctx = random_ctx(model, L, rng);
      const auto rep = singular_weights_report(ctx, random_rational(rng));
      for (const auto& item : rep.items) EXPECT_TRUE(item.pass) << item.name << " measured " << item.measured;
    }
}

TEST(Monodromy, ZSingleSite) {
  const auto ctx = make_context(Model::FZ, Rational(2), {Rational(3)});
  EXPECT_EQ(compute_Z(ctx, {Rational(5)}), weight(ctx, WeightName::d(1, 3), Rational(5, 3)));
}

TEST(Monodromy, InitialCondition) {
  Rng rng(5);
  for (auto model : {Model::IK, Model::FZ})
    for (std::size_t L = 1; L <= 4; ++L) {
      const auto ctx = random_ctx(model, L, rng);
      Rational expected(1);
      for (const auto& mi : ctx.m)
        for (const auto& mj : ctx.m) expected *= weight(ctx, WeightName::a(), Rational(mi / mj));
      std::vector<Rational> rev(ctx.m.rbegin(), ctx.m.rend());
      EXPECT_EQ(compute_Z(ctx, ctx.m), expected);
      EXPECT_EQ(compute_Z(ctx, rev), expected);
    }
}

TEST(Monodromy, FEqualsFbarForOneSite) {
  Rng rng(6);
  for (auto model : {Model::IK, Model::FZ}) {
    const auto ctx = random_ctx(model, 1, rng);
    const Rational y1 = random_rational(rng), y2 = random_rational(rng);
    EXPECT_EQ(compute_F(ctx, {}, y1, y2), compute_Fbar(ctx, y1, y2, {}));
  }
}

TEST(Monodromy, ZerosOfF) {
  Rng rng(7);
  for (auto model : {Model::IK, Model::FZ})
    for (std::size_t L = 1; L <= 3; ++L) {
      const auto ctx = random_ctx(model, L, rng);
      std::vector<Rational> us;
      for (std::size_t i = 0; i + 1 < L; ++i) us.push_back(random_rational(rng));
      for (const auto& mj : ctx.m) {
        EXPECT_EQ(compute_F(ctx, us, Rational(ctx.zeta * mj), random_rational(rng)), 0);
        EXPECT_EQ(compute_Fbar(ctx, random_rational(rng), mj, us), 0);
      }
    }
}

TEST(Monodromy, HTimesOmegaIsF) {
  Rng rng(8);
  const auto ctx = random_ctx(Model::IK, 2, rng);
  const std::vector<Rational> us{random_rational(rng)};
  const Rational y1 = random_rational(rng), y2 = random_rational(rng);
  EXPECT_EQ(Rational(omega(ctx, y1) * compute_H(ctx, us, y1, y2)), compute_F(ctx, us, y1, y2));
  EXPECT_EQ(Rational(omega_bar(ctx, y2) * compute_Hbar(ctx, y1, y2, us)), compute_Fbar(ctx, y1, y2, us));
  EXPECT_THROW(compute_H(ctx, us, Rational(ctx.zeta * ctx.m[0]), y2), OmegaZero);
  EXPECT_THROW(compute_Hbar(ctx, y1, ctx.m[1], us), OmegaZero);
}

TEST(Monodromy, OneSiteHIsProportionalToOmegaBar) {
  // mu = 0: H(Y1,Y2) = kappa (Y2 - 1) and Hbar(Y1,Y2) = kappa' (Y1 - zeta)
  for (auto model : {Model::IK, Model::FZ}) {
    const auto ctx = make_context(model, Rational(3, 2), {Rational(1)});
    const Rational k = compute_H(ctx, {}, Rational(2), Rational(3)) / Rational(3 - 1);
    const Rational kb = compute_Hbar(ctx, Rational(2), Rational(3), {}) / Rational(2 - ctx.zeta);
    for (int y1 = 2; y1 < 5; ++y1)
      for (int y2 = 2; y2 < 5; ++y2) {
        EXPECT_EQ(compute_H(ctx, {}, Rational(y1), Rational(y2)), Rational(k * (y2 - 1)));
        EXPECT_EQ(compute_Hbar(ctx, Rational(y1), Rational(y2), {}), Rational(kb * (y1 - ctx.zeta)));
      }
  }
}

TEST(Monodromy, HelperRoots) {
  const auto ctx = make_context(Model::IK, Rational(2), {Rational(3), Rational(5)});
  EXPECT_EQ(omega(ctx, Rational(ctx.zeta * 3)), 0);
  EXPECT_EQ(omega_bar(ctx, Rational(5)), 0);
  EXPECT_EQ(big_lambda(ctx, Rational(ctx.q * ctx.q * 3)), 0);
  EXPECT_THROW(big_lambda(ctx, Rational(0)), ZeroArgument);
}

TEST(Monodromy, StructureLowL) {
  Rng rng(10);
  for (auto model : {Model::IK, Model::FZ})
    for (std::size_t L = 1; L <= 3; ++L) {
      const auto ctx = random_ctx(model, L, rng);
      const auto rep = verify_structure(ctx, rng);
      for (const auto& item : rep.items)
        EXPECT_TRUE(item.pass) << to_string(model) << " L=" << L << " " << item.name << " expected " << item.expected
                               << " measured " << item.measured;
    }
}

TEST(Monodromy, StructureDegreesL2) {
  Rng rng(11);
  const auto ctx = random_ctx(Model::IK, 2, rng);
  const auto rep = verify_structure(ctx, rng);
  for (const auto& item : rep.items) {
    if (item.name == "deg_x1 Z") {
      EXPECT_EQ(item.measured, "3");
    }
    if (item.name == "deg_y1 H") {
      EXPECT_EQ(item.measured, "1");
    }
  }
}

TEST(Monodromy, PrimeFieldMatchesRational) {
  Rng rng(12);
  const auto ctx = random_ctx(Model::FZ, 3, rng);
  const std::vector<Rational> xs{random_rational(rng), random_rational(rng), random_rational(rng)};
  const Rational z = compute_Z(ctx, xs);
  ModulusScope scope(2305843009213693951ull);
  const auto red = convert_context<ModP>(ctx);
  std::vector<ModP> rx;
  for (const auto& x : xs) rx.push_back(ModP::from_rational(x));
  EXPECT_EQ(compute_Z(red, rx), ModP::from_rational(z));
}
