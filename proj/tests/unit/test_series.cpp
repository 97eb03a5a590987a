#include <gtest/gtest.h>

#include "brute.hpp"
#include "tdlf/errors.hpp"
#include "tdlf/oracle.hpp"
#include "tdlf/seminorm.hpp"
#include "tdlf/series.hpp"

using tdlf::BigInt;
using tdlf::EqualCharSeries;
using tdlf::ExtInt;
using tdlf::MixedSeries;
using tdlf::PAdic;

namespace {

constexpr std::uint64_t kP = 5;
constexpr std::int64_t kA = 32;

PAdic num(const BigInt& n) { return PAdic::from_integer(kP, n, kA); }
PAdic pw(std::int64_t v) { return PAdic::power(kP, v, kA); }

std::map<std::int64_t, PAdic> to_coeffs(const brute::Poly& a) {
  std::map<std::int64_t, PAdic> out;
  for (const auto& [i, c] : a) out.emplace(i, num(c));
  return out;
}

MixedSeries mixed(const brute::Poly& a) { return MixedSeries::from_terms(kP, to_coeffs(a)); }
EqualCharSeries equal(const brute::Poly& a) {
  auto c = to_coeffs(a);
  const std::int64_t order = c.empty() ? 0 : c.begin()->first;
  return EqualCharSeries(kP, order, ExtInt::plus_inf(), std::move(c));
}

brute::Poly random_poly(tdlf::oracle::Rng& rng) {
  brute::Poly a;
  const int terms = static_cast<int>(rng.uniform(0, 5));
  for (int k = 0; k < terms; ++k) {
    BigInt c = rng.uniform(-500, 500);
    if (rng.chance(1, 3)) c *= 25;
    if (c != 0) a[rng.uniform(-6, 6)] = c;
  }
  return a;
}

template <class S>
::testing::AssertionResult agrees(const S& s, const brute::Poly& a, std::int64_t lo = -20, std::int64_t hi = 20) {
  for (std::int64_t k = lo; k <= hi; ++k) {
    const auto it = a.find(k);
    const PAdic expected = it == a.end() ? PAdic::zero(kP) : num(it->second);
    if (!s.coefficient(k).agrees_with(expected))
      return ::testing::AssertionFailure() << "coefficient " << k << ": " << s.coefficient(k) << " vs " << expected;
  }
  return ::testing::AssertionSuccess();
}

}  // namespace

TEST(Series, EqualCharAddition) {
  const auto x = equal({{0, 1}, {1, 1}}), y = equal({{1, 1}});
  EXPECT_EQ(tdlf::add(x, y), equal({{0, 1}, {1, 2}}));
  EXPECT_EQ(tdlf::add(x, EqualCharSeries::zero(kP)), x);
}

TEST(Series, MixedAdditionOfCommonIndex) {
  const auto x = MixedSeries::monomial(pw(1), -1), y = MixedSeries::monomial(pw(2), -1);
  const MixedSeries s = tdlf::add(x, y);
  EXPECT_EQ(s.coefficient(-1), pw(1) + pw(2));
  EXPECT_EQ(s.coefficient(-1).valuation(), ExtInt(1));
}

TEST(Series, DifferenceOfSquares) {
  EXPECT_TRUE(agrees(tdlf::mul(equal({{0, 1}, {1, 1}}), equal({{0, 1}, {1, -1}})), {{0, 1}, {2, -1}}));
  EXPECT_TRUE(agrees(tdlf::mul(mixed({{0, 1}, {1, 1}}), mixed({{0, 1}, {1, -1}})), {{0, 1}, {2, -1}}));
}

TEST(Series, MultiplicativeIdentity) {
  const auto x = mixed({{-2, 7}, {3, 50}});
  EXPECT_EQ(tdlf::mul(x, mixed({{0, 1}})), x);
  const auto y = equal({{-1, 3}, {4, -2}});
  EXPECT_EQ(tdlf::mul(y, equal({{0, 1}})), y);
}

TEST(Series, TelescopingProduct) {
  for (const std::int64_t n : {0, 3, 10}) {
    brute::Poly geo;
    BigInt pj = 1;
    for (std::int64_t j = 0; j <= n; ++j, pj *= kP) geo[-j] = pj;
    const MixedSeries prod = tdlf::mul(mixed({{0, 1}, {-1, -5}}), mixed(geo));
    EXPECT_TRUE(agrees(prod, brute::multiply({{0, 1}, {-1, -5}}, geo)));
    EXPECT_EQ(prod.coefficient(0), num(1));
    EXPECT_TRUE(prod.coefficient(-(n + 1)).agrees_with(-pw(n + 1)));
    EXPECT_EQ(prod.coefficient(-(n + 1)).valuation(), ExtInt(n + 1));
    for (std::int64_t j = -n; j < 0; ++j) EXPECT_TRUE(prod.coefficient(j).is_exact_zero() ||
                                                      prod.coefficient(j).is_zero_within_precision());
  }
}

TEST(Series, ProductMatchesPolynomialMultiplication) {
  tdlf::oracle::Rng rng(31);
  for (int n = 0; n < 300; ++n) {
    const brute::Poly a = random_poly(rng), b = random_poly(rng);
    const brute::Poly c = brute::multiply(a, b);
    ASSERT_TRUE(agrees(tdlf::mul(mixed(a), mixed(b)), c));
    ASSERT_TRUE(agrees(tdlf::mul(equal(a), equal(b)), c));
    ASSERT_TRUE(agrees(tdlf::add(mixed(a), mixed(b)), brute::add(a, b)));
    ASSERT_TRUE(agrees(tdlf::add(equal(a), equal(b)), brute::add(a, b)));
  }
}

TEST(Series, EqualCharTruncationPropagates) {
  // (1 + t + O(t^3)) · (t^-1 + O(t^2)) is known modulo t^2.
  const EqualCharSeries x(kP, 0, ExtInt(3), {{0, num(1)}, {1, num(1)}});
  const EqualCharSeries y(kP, -1, ExtInt(2), {{-1, num(1)}});
  const EqualCharSeries z = tdlf::mul(x, y);
  EXPECT_EQ(z.trunc(), ExtInt(2));
  EXPECT_EQ(z.coefficient(-1), num(1));
  EXPECT_EQ(z.coefficient(0), num(1));
  EXPECT_THROW((void)z.coefficient(2), tdlf::PrecisionExhausted);
}

TEST(Series, MixedTailsBoundProductCoefficients) {
  // x = 1 + (v >= 3 for i > 0), y = t^-2: coefficient k of xy is x_{k+2}.
  const MixedSeries x(kP, 0, 0, {{0, num(1)}}, std::nullopt, 3);
  const MixedSeries z = tdlf::mul(x, MixedSeries::monomial(num(1), -2));
  EXPECT_EQ(z.coefficient(-2), num(1));
  EXPECT_GE(z.coefficient(5).valuation(), ExtInt(3));
  EXPECT_TRUE(z.floor() >= ExtInt(0));
}

TEST(Series, KindMismatchThrows) {
  const tdlf::Series a = mixed({{0, 1}}), b = equal({{0, 1}});
  EXPECT_THROW(tdlf::add(a, b), tdlf::KindMismatch);
}

TEST(Series, PartialSum) {
  const auto x = mixed({{-1, 1}, {0, 1}, {1, 1}});
  EXPECT_EQ(tdlf::partial_sum(x, 0), mixed({{-1, 1}, {0, 1}}));
  EXPECT_EQ(tdlf::partial_sum(x, -5), MixedSeries::zero(kP));
  EXPECT_EQ(tdlf::add(tdlf::partial_sum(x, 0), tdlf::remainder(x, 0)), x);
}

TEST(Series, RemainderExponentDecreases) {
  brute::Poly a;
  for (std::int64_t i = 1; i <= 11; ++i) a[i] = 1;
  const tdlf::Series x = mixed(a);
  const tdlf::SeqSpec n(1, {ExtInt(-1)}, tdlf::TailSpec::constant(ExtInt(0)), tdlf::TailSpec::affine(-1, 0));
  const tdlf::SeminormSpec spec{n, tdlf::FieldKind::MixedChar};
  ExtInt prev = ExtInt::plus_inf();
  for (std::int64_t k = 1; k <= 10; ++k) {
    const auto r = tdlf::eval_exponent(spec, tdlf::remainder(x, k));
    EXPECT_TRUE(r.exact());
    EXPECT_EQ(r.exponent, ExtInt(-(k + 1)));
    EXPECT_LT(r.exponent, prev);
    prev = r.exponent;
  }
}

TEST(Series, FieldValuation) {
  EXPECT_EQ(tdlf::vF_exponent(mixed({{-1, 25}, {1, 1}})).valuation, ExtInt(0));
  EXPECT_EQ(tdlf::vF_exponent(MixedSeries::zero(kP)).valuation, ExtInt::plus_inf());
  const auto x = mixed({{-3, 7}, {0, 25}, {2, -4}});
  EXPECT_EQ(tdlf::vF_exponent(tdlf::mul(mixed({{0, 5}}), x)).valuation, ExtInt(1));
}

TEST(Series, RankTwoValuations) {
  using P = std::pair<ExtInt, ExtInt>;
  EXPECT_EQ(tdlf::rank2_mixed(mixed({{-1, 25}, {1, 1}})), (P{ExtInt(0), ExtInt(1)}));
  EXPECT_EQ(tdlf::rank2_mixed(mixed({{0, 5}})), (P{ExtInt(1), ExtInt(0)}));
  EXPECT_EQ(tdlf::rank2_mixed(mixed({{-3, 1}})), (P{ExtInt(0), ExtInt(-3)}));
  EXPECT_EQ(tdlf::rank2_equal(equal({{-2, 125}, {1, 1}})), (P{ExtInt(-2), ExtInt(3)}));
  EXPECT_EQ(tdlf::rank2_equal(equal({{0, 1}})), (P{ExtInt(0), ExtInt(0)}));
  EXPECT_EQ(tdlf::rank2_equal(equal({{5, 1}})), (P{ExtInt(5), ExtInt(0)}));
}

TEST(Series, ProductCoefficient) {
  const tdlf::Series x = mixed({{-1, 1}, {2, 3}}), y = mixed({{1, 2}, {-2, 4}});
  EXPECT_EQ(tdlf::product_coefficient(x, y, 0), num(2 + 12));
  EXPECT_EQ(tdlf::product_coefficient(x, y, -3), num(4));
}
