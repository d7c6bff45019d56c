#include <gtest/gtest.h>

#include "v19/interpolation.hpp"
#include "v19/sampling.hpp"
#include "v19/weights.hpp"

using namespace v19;

namespace {

ModelContext fz4() { return make_context(Model::FZ, Rational(2), {Rational(1)}); }

}  // namespace

TEST(Weights, ThirteenNames) {
  const auto names = all_weight_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j) EXPECT_FALSE(names[i] == names[j]);
  EXPECT_EQ(names[12].str(), "d33");
}

TEST(Weights, KnownValues) {
  const auto ctx = fz4();
  EXPECT_EQ(weight(ctx, WeightName::a(), Rational(5)), -11);
  EXPECT_EQ(weight(ctx, WeightName::d(2, 2), Rational(2)), 82);
  EXPECT_EQ(weight(ctx, WeightName::a(), ctx.q * ctx.q), 0);
  EXPECT_THROW(weight(ctx, WeightName::b(), Rational(0)), ZeroArgument);
}

TEST(Weights, D13AtOneEqualsA) {
  Rng rng(1);
  for (auto model : {Model::IK, Model::FZ})
    for (int i = 0; i < 10; ++i) {
      const auto ctx = make_context(model, random_p(rng), {Rational(1)});
      const Rational expected = (ctx.q * ctx.q - 1) * (ctx.zeta - 1);
      EXPECT_EQ(weight(ctx, WeightName::d(1, 3), Rational(1)), expected);
      EXPECT_EQ(weight(ctx, WeightName::a(), Rational(1)), expected);
    }
}

TEST(Weights, CbarIsXTimesC) {
  Rng rng(2);
  for (auto model : {Model::IK, Model::FZ}) {
    const auto ctx = make_context(model, random_p(rng), {Rational(1)});
    for (int i = 0; i < 10; ++i) {
      const Rational x = random_rational(rng);
      EXPECT_EQ(weight(ctx, WeightName::cbar(), x), Rational(x * weight(ctx, WeightName::c(), x)));
    }
  }
}

TEST(Weights, DegreeProfile) {
  Rng rng(3);
  for (auto model : {Model::IK, Model::FZ})
    for (int s = 0; s < 3; ++s) {
      const auto ctx = make_context(model, random_p(rng), {Rational(1)});
      for (const auto& name : all_weight_names()) {
        const std::function<Rational(const Rational&)> f = [&](const Rational& x) { return weight(ctx, name, x); };
        const bool linear = name == WeightName::c() || name == WeightName::d(1, 2) || name == WeightName::d(1, 3) ||
                            name == WeightName::d(2, 3);
        // for FZ zeta = q cancels the x-dependence of d13
        const bool constant = model == Model::FZ && name == WeightName::d(1, 3);
        EXPECT_EQ(measured_degree<Rational>(f, 4), constant ? 0 : linear ? 1 : 2) << name.str();
      }
    }
}

TEST(Weights, FzD13IsConstant) {
  const auto ctx = fz4();
  for (int x = 1; x < 6; ++x)
    EXPECT_EQ(weight(ctx, WeightName::d(1, 3), Rational(x)), Rational((ctx.q * ctx.q - 1) * (ctx.q - 1)));
}

TEST(RMatrix, EntryLayout) {
  const auto ctx = fz4();
  const auto r = r_matrix(ctx, Rational(5));
  EXPECT_EQ(r.at(1, 1, 1, 1), -11);
  EXPECT_EQ(r.at(1, 2, 2, 2), 0);
  EXPECT_EQ(r.at(1, 2, 2, 1), weight(ctx, WeightName::c(), Rational(5)));
  EXPECT_EQ(r.at(2, 1, 1, 2), weight(ctx, WeightName::cbar(), Rational(5)));
  EXPECT_EQ(r.at(3, 1, 1, 3), weight(ctx, WeightName::d(3, 1), Rational(5)));
  EXPECT_EQ(r.at(2, 2, 1, 3), weight(ctx, WeightName::d(2, 1), Rational(5)));
  EXPECT_EQ(structural_nonzeros(), 19);
}

TEST(RMatrix, RegularAtOne) {
  Rng rng(4);
  for (auto model : {Model::IK, Model::FZ})
    for (int s = 0; s < 5; ++s) {
      const auto ctx = make_context(model, random_p(rng), {Rational(1)});
      const auto r = r_matrix(ctx, Rational(1));
      const Rational a1 = weight(ctx, WeightName::a(), Rational(1));
      for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
          for (int ap = 1; ap <= 3; ++ap)
            for (int bp = 1; bp <= 3; ++bp)
              EXPECT_EQ(r.at(a, b, ap, bp), (a == bp && b == ap) ? a1 : Rational(0));
    }
}

TEST(RMatrix, IceRule) {
  Rng rng(5);
  const auto ik = make_context(Model::IK, Rational(3, 2), {Rational(1)});
  const auto fz = fz4();
  EXPECT_TRUE(check_ice_rule(ik, Rational(3)));
  EXPECT_TRUE(check_ice_rule(fz, Rational(1)));
  EXPECT_TRUE(check_ice_rule(fz, Rational(fz.q * fz.q)));
  auto broken = r_matrix(fz, Rational(2));
  broken(0, 1) = 1;
  EXPECT_FALSE(check_ice_rule(broken));
  EXPECT_THROW(r_matrix(fz, Rational(0)), ZeroArgument);
}

TEST(YangBaxter, FixedPoints) {
  const auto ik = make_context(Model::IK, Rational(3, 2), {Rational(1)});
  EXPECT_TRUE(check_ybe(ik, Rational(2), Rational(3)));
  const auto fz = fz4();
  EXPECT_TRUE(check_ybe(fz, Rational(5, 7), Rational(11)));
  EXPECT_THROW(check_ybe(fz, Rational(0), Rational(11)), ZeroArgument);
}

TEST(YangBaxter, RandomSamples) {
  Rng rng(20);
  for (auto model : {Model::IK, Model::FZ})
    for (int s = 0; s < 20; ++s) {
      const auto ctx = make_context(model, random_p(rng), {Rational(1)});
      EXPECT_TRUE(check_ybe(ctx, random_rational(rng), random_rational(rng)));
    }
}

TEST(YangBaxter, MutationIsDetected) {
  const auto ik = make_context(Model::IK, Rational(3, 2), {Rational(1)});
  for (const auto& name : all_weight_names()) {
    const std::function<RMatrix<Rational>(const Rational&)> mutated = [&](const Rational& x) {
      auto w = weights_at(ik, x);
      if (name.kind == WeightName::Kind::d) w.dblock[name.row - 1][name.col - 1] += 1;
      if (name == WeightName::a()) w.a += 1;
      if (name == WeightName::b()) w.b += 1;
      if (name == WeightName::c()) w.c += 1;
      if (name == WeightName::cbar()) w.cbar += 1;
      return r_matrix_from(w);
    };
    EXPECT_FALSE(ybe_outcome<Rational>(mutated, Rational(2), Rational(3)).holds) << name.str();
  }
}

TEST(YangBaxter, PrimeFieldAgrees) {
  const auto ik = make_context(Model::IK, Rational(3, 2), {Rational(1)});
  ModulusScope scope(2305843009213693951ull);
  const auto red = convert_context<ModP>(ik);
  EXPECT_TRUE(check_ybe(red, ModP(2), ModP(3)));
}
