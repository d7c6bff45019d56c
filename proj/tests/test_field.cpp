#include <gtest/gtest.h>

#include "v19/model.hpp"
#include "v19/sampling.hpp"

using namespace v19;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational(" -7 ")), "-7/1");
  EXPECT_EQ(to_string(parse_rational("0/5")), "0/1");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1/-2"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  const auto list = parse_rational_list("1,2/3,-5");
  ASSERT_EQ(list.size(), 3u);
  EXPECT_EQ(list[1], Rational(2, 3));
}

TEST(Rational, InverseRoundTrip) {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const Rational a = random_rational(rng), b = random_rational(rng);
    const Rational x = a / b, y = b / a;
    EXPECT_EQ(Rational(x * y), Rational(1));
  }
}

TEST(Rational, BitLength) {
  EXPECT_EQ(bit_length(Rational(0)), 1u);
  EXPECT_EQ(bit_length(Rational(255, 2)), 8u);
  EXPECT_EQ(bit_length(Rational(1, 1024)), 11u);
}

TEST(PrimeField, Arithmetic) {
  ModulusScope scope(101);
  const ModP a(7), b(-3);
  EXPECT_EQ((a + b).residue(), 4u);
  EXPECT_EQ((b - a).residue(), 91u);
  EXPECT_EQ((a * b).residue(), 80u);
  EXPECT_EQ((a / a).residue(), 1u);
  EXPECT_EQ(((a / b) * b), a);
  EXPECT_THROW(a / ModP(0), NonInvertible);
  EXPECT_EQ(ModP::from_rational(Rational(1, 2)) * ModP(2), ModP(1));
  EXPECT_THROW(ModP::from_rational(Rational(1, 202)), NonInvertible);
}

TEST(PrimeField, ScopeRestores) {
  ModulusScope outer(13);
  {
    ModulusScope inner(17);
    EXPECT_EQ(ModP::modulus(), 17u);
  }
  EXPECT_EQ(ModP::modulus(), 13u);
}

TEST(PrimeField, RandomPrimesArePrime) {
  Rng rng(3);
  for (int i = 0; i < 5; ++i) {
    const u64 p = random_prime_62(rng);
    EXPECT_TRUE(is_prime_u64(p));
    EXPECT_GE(p, u64{1} << 61);
    EXPECT_LT(p, u64{1} << 62);
  }
  EXPECT_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to bases 2,3,5,7
  EXPECT_TRUE(is_prime_u64(2305843009213693951ull));
}

TEST(PrimeField, ReductionIsRingHomomorphism) {
  Rng rng(11);
  const u64 p = random_prime_62(rng);
  ModulusScope scope(p);
  for (int i = 0; i < 200; ++i) {
    const Rational x = random_rational(rng, 1000, 1000), y = random_rational(rng, 1000, 1000);
    const ModP rx = ModP::from_rational(x), ry = ModP::from_rational(y);
    EXPECT_EQ(ModP::from_rational(Rational(x + y)), rx + ry);
    EXPECT_EQ(ModP::from_rational(Rational(x * y)), rx * ry);
    EXPECT_EQ(ModP::from_rational(Rational(x - y)), rx - ry);
    EXPECT_EQ(ModP::from_rational(Rational(x / y)), rx / ry);
  }
}

TEST(Context, Construction) {
  const auto fz = make_context(Model::FZ, Rational(2), {Rational(1)});
  EXPECT_EQ(fz.q, 4);
  EXPECT_EQ(fz.zeta, 4);
  const auto ik = make_context(Model::IK, Rational(2), {Rational(1), Rational(1)});
  EXPECT_EQ(ik.q, 4);
  EXPECT_EQ(ik.zeta, -64);
  EXPECT_EQ(ik.L(), 2u);
  EXPECT_THROW(make_context(Model::FZ, Rational(1), {Rational(1)}), DegenerateParameter);
  EXPECT_THROW(make_context(Model::IK, Rational(-1), {Rational(1)}), DegenerateParameter);
  EXPECT_THROW(make_context(Model::IK, Rational(0), {Rational(1)}), DegenerateParameter);
  EXPECT_THROW(make_context(Model::IK, Rational(2), {Rational(0)}), DegenerateParameter);
}

TEST(Context, ZetaMatchesModel) {
  Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    const Rational p = random_p(rng);
    const auto fz = make_context(Model::FZ, p, {Rational(1)});
    const auto ik = make_context(Model::IK, p, {Rational(1)});
    EXPECT_EQ(fz.zeta, fz.q);
    EXPECT_EQ(ik.zeta, Rational(-ik.q * ik.q * ik.q));
  }
}

TEST(Context, HalfPowers) {
  const auto c2 = make_context(Model::FZ, Rational(2), {Rational(1)});
  EXPECT_EQ(q_half_power(c2, -2), Rational(1, 4));
  EXPECT_EQ(q_half_power(c2, 3), 8);
  EXPECT_EQ(q_half_power(c2, 0), 1);
  const auto c32 = make_context(Model::IK, Rational(3, 2), {Rational(1)});
  EXPECT_EQ(q_half_power(c32, 1), Rational(3, 2));
}

TEST(Context, ConvertToPrimeField) {
  const auto ctx = make_context(Model::IK, Rational(3, 2), {Rational(2), Rational(5, 7)});
  ModulusScope scope(1000003);
  const auto red = convert_context<ModP>(ctx);
  EXPECT_EQ(red.q, ModP::from_rational(ctx.q));
  EXPECT_EQ(red.zeta, ModP::from_rational(ctx.zeta));
  EXPECT_EQ(red.m[1] * ModP(7), ModP(5));
}

TEST(Model, Names) {
  EXPECT_EQ(parse_model("ik"), Model::IK);
  EXPECT_EQ(parse_model("FZ"), Model::FZ);
  EXPECT_EQ(to_string(Model::IK), "ik");
  EXPECT_THROW(parse_model("six"), ConfigError);
}
