#include <gtest/gtest.h>

#include "support.hpp"
#include "trilie/errors.hpp"
#include "trilie/parse.hpp"

using namespace trilie;
using trilie::testing::random_point;
using trilie::testing::random_scalar;

namespace {

const Scalar lam = Scalar::lambda();
const Scalar mu = Scalar::mu();
const Scalar a0(Indeterminate::tag(0));

}  // namespace

TEST(Rational, NormalizesOnConstruction) {
    EXPECT_EQ(Rational(6, 4), Rational(3, 2));
    EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
    EXPECT_EQ(Rational(0, 7).to_string(), "0");
    EXPECT_EQ(Rational(0, 7).denominator(), 1);
    EXPECT_EQ(Rational::parse("-10/4").to_string(), "-5/2");
}

TEST(Rational, FloorAndConversion) {
    EXPECT_EQ(Rational(-1, 2).floor(), Rational(-1));
    EXPECT_EQ(Rational(7, 2).floor(), Rational(3));
    EXPECT_EQ(Rational(-42).to_int64(), -42);
    EXPECT_THROW(Rational(1, 2).to_int64(), Error);
    EXPECT_THROW((Rational(INT64_MAX) + Rational(1)).to_int64(), IndexOverflow);
}

TEST(Rational, DivisionByZero) {
    EXPECT_THROW(Rational(1) / Rational(0), ZeroDivisor);
    EXPECT_THROW(Rational(1, 0), ZeroDivisor);
}

TEST(Rational, LargeValuesStayExact) {
    Rational big(INT64_MAX);
    Rational sq = big * big;
    EXPECT_EQ(sq / big, big);
    EXPECT_EQ(sq.to_string(), "85070591730234615847396907784232501249");
}

TEST(Scalar, AddExamples) {
    EXPECT_EQ((lam + 1) + (mu - 1), lam + mu);
    EXPECT_EQ(Scalar() + lam, lam);
    EXPECT_TRUE((mu + (-mu)).is_zero());
}

TEST(Scalar, MulExamples) {
    EXPECT_EQ(mu * (Scalar(1) - mu), mu - mu * mu);
    EXPECT_EQ(Scalar(1) * (lam + a0), lam + a0);
    EXPECT_TRUE(((lam + a0) * Scalar(0)).is_zero());
}

TEST(Scalar, EvalExamples) {
    const Scalar m = mu * (Scalar(1) - mu);
    EXPECT_TRUE(eval(m, {{Indeterminate::mu(), Rational(1)}}).is_zero());
    EXPECT_EQ(eval(m, {{Indeterminate::mu(), Rational(2)}}), Scalar(-2));
    EXPECT_EQ(eval(lam + 3, {}), lam + 3);
    EXPECT_EQ(eval(lam * mu + a0, {{Indeterminate::mu(), Rational(1, 2)}}), Rational(1, 2) * lam + a0);
}

TEST(Scalar, DividesExamples) {
    const Scalar d = mu * mu - mu;
    auto q = exact_quotient(Scalar(3) * mu - Scalar(3) * mu * mu, d);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, Scalar(-3));
    EXPECT_FALSE(divides(mu, lam));
    EXPECT_TRUE(divides(Scalar(1), lam * a0 + mu));
    EXPECT_THROW(divides(Scalar(0), lam), ZeroDivisor);
}

TEST(Scalar, DividesMultivariate) {
    const Scalar d = mu * mu - mu;
    const Scalar a = d * (lam * lam - Scalar(2) * a0 * mu + Rational(1, 3));
    auto q = exact_quotient(a, d);
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, lam * lam - Scalar(2) * a0 * mu + Rational(1, 3));
    EXPECT_FALSE(divides(d, a + mu));
    EXPECT_FALSE(divides(lam + 1, lam * lam + 1));
}

TEST(Scalar, CanonicalFormatting) {
    EXPECT_EQ((mu - mu * mu).to_string(), "-mu^2 + mu");
    EXPECT_EQ((a0 + lam + 3).to_string(), "lam + a0 + 3");
    EXPECT_EQ((Scalar(-4) * mu + 16).to_string(), "-4*mu + 16");
    EXPECT_EQ((lam * mu * mu).to_string(), "lam*mu^2");
    EXPECT_EQ(Scalar(Rational(-2, 3)).to_string(), "-2/3");
    EXPECT_EQ(Scalar().to_string(), "0");
}

TEST(Scalar, GrlexOrdersTerms) {
    const Scalar s = Scalar(1) + a0 + mu * mu + lam * a0 + lam;
    ASSERT_EQ(s.terms().size(), 5u);
    EXPECT_EQ(s.to_string(), "lam*a0 + mu^2 + lam + a0 + 1");
}

TEST(Scalar, Content) {
    auto [c, p] = (Scalar(-4) * mu + 16).content();
    EXPECT_EQ(c, Rational(-4));
    EXPECT_EQ(p, mu - 4);
    auto [c2, p2] = (Rational(1, 2) * lam + Rational(3, 4)).content();
    EXPECT_EQ(c2, Rational(1, 4));
    EXPECT_EQ(p2, Scalar(2) * lam + 3);
}

TEST(Scalar, ExponentBound) {
    EXPECT_NO_THROW(mu.pow(kMaxExponent));
    EXPECT_THROW(mu.pow(kMaxExponent) * mu, ExponentOverflow);
    EXPECT_THROW(Monomial(Indeterminate::mu(), kMaxExponent + 1), ExponentOverflow);
}

TEST(ScalarProperty, RingAxioms) {
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 300; ++i) {
        const Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        for (const auto& t : (a * b).terms()) EXPECT_FALSE(t.coeff.is_zero());
    }
}

TEST(ScalarProperty, EvalIsHomomorphism) {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 300; ++i) {
        const Scalar a = random_scalar(rng), b = random_scalar(rng);
        const Assignment at = random_point(rng);
        EXPECT_EQ(eval(a + b, at), eval(a, at) + eval(b, at));
        EXPECT_EQ(eval(a * b, at), eval(a, at) * eval(b, at));
        EXPECT_TRUE(eval(a, at).is_constant());
    }
}

TEST(ScalarProperty, DividesYieldsQuotient) {
    std::mt19937_64 rng(7);
    int positives = 0;
    for (int i = 0; i < 300; ++i) {
        const Scalar d = random_scalar(rng), q = random_scalar(rng), r = random_scalar(rng);
        if (d.is_zero()) continue;
        for (const Scalar& a : {d * q, d * q + r}) {
            auto quotient = exact_quotient(a, d);
            if (quotient) {
                ++positives;
                EXPECT_EQ(d * *quotient, a);
            }
        }
        EXPECT_TRUE(divides(d, d * q));
    }
    EXPECT_GT(positives, 200);
}

TEST(ScalarProperty, FormatParseRoundTrip) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        const Scalar a = random_scalar(rng);
        EXPECT_EQ(parse_scalar(a.to_string()), a) << a.to_string();
    }
}
