#include "hqc/scalar.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using hqc::GaussRational;
using hqc::make_rational;
using hqc::Rational;
using hqc::Scalar;

TEST(GaussRational, Arithmetic)
{
	GaussRational x(Rational(1), Rational(2)), y(Rational(3), Rational(-1));
	EXPECT_EQ(x * y, GaussRational(Rational(5), Rational(5)));
	EXPECT_EQ(x + y, GaussRational(Rational(4), Rational(1)));
	EXPECT_EQ(GaussRational(Rational(1), Rational(1)).inverse(), GaussRational(make_rational(1, 2), make_rational(-1, 2)));
	EXPECT_EQ((x / y) * y, x);
	EXPECT_THROW(GaussRational().inverse(), hqc::DomainError);
}

TEST(Scalar, LambdaAndImaginaryUnit)
{
	const Scalar il = Scalar::i() * Scalar::lambda();
	EXPECT_EQ(il * il, -Scalar::lambda(2));
	EXPECT_EQ(Scalar::lambda() * Scalar::lambda(), Scalar::lambda(2));
	EXPECT_EQ(Scalar::lambda(3).degree(), 3u);
	EXPECT_TRUE(Scalar(1).is_one());
	EXPECT_TRUE(Scalar().is_zero());
	EXPECT_FALSE(il.is_constant());
}

TEST(Scalar, DivisionOnlyByConstants)
{
	const Scalar x = Scalar(6) * Scalar::lambda() + Scalar(2);
	EXPECT_EQ(x.divided_by(Scalar(2)), Scalar(3) * Scalar::lambda() + Scalar(1));
	EXPECT_THROW(x.divided_by(Scalar::lambda()), hqc::DomainError);
	EXPECT_THROW(x.divided_by(Scalar()), hqc::DomainError);
}

TEST(Scalar, Evaluate)
{
	const Scalar x = Scalar::lambda(2) + Scalar::i() * Scalar::lambda();
	EXPECT_EQ(x.evaluate(GaussRational(2)), GaussRational(Rational(4), Rational(2)));
	EXPECT_EQ(Scalar(7).evaluate(GaussRational(Rational(0), Rational(1))), GaussRational(7));
}

TEST(Scalar, Power)
{
	const Scalar x = Scalar(1) + Scalar::lambda();
	EXPECT_EQ(x.pow(2), Scalar(1) + Scalar(2) * Scalar::lambda() + Scalar::lambda(2));
	EXPECT_EQ(x.pow(0), Scalar(1));
}

TEST(Scalar, RingAxiomsOnRandomSamples)
{
	std::mt19937_64 rng(11);
	for (int n = 0; n < 200; ++n) {
		Scalar x = oracle::random_scalar(rng), y = oracle::random_scalar(rng), z = oracle::random_scalar(rng);
		EXPECT_EQ((x * y) * z, x * (y * z));
		EXPECT_EQ(x * (y + z), x * y + x * z);
		EXPECT_EQ(x * y, y * x);
		EXPECT_EQ(x - x, Scalar());
		EXPECT_EQ(x + Scalar(), x);
	}
}

TEST(Rational, ParseAndPrint)
{
	EXPECT_EQ(hqc::parse_rational("3/6"), make_rational(1, 2));
	EXPECT_EQ(hqc::parse_rational("-4"), Rational(-4));
	EXPECT_EQ(hqc::rational_fraction_text(Rational(2)), "2/1");
	EXPECT_EQ(hqc::rational_fraction_text(make_rational(-3, 9)), "-1/3");
	EXPECT_THROW(hqc::parse_rational("1/0"), hqc::Error);
	EXPECT_THROW(hqc::parse_rational("x"), hqc::Error);
}

TEST(Binomial, GeneralizedCoefficients)
{
	EXPECT_EQ(hqc::binomial_coefficient(make_rational(1, 2), 2), GaussRational(make_rational(-1, 8)));
	EXPECT_EQ(hqc::binomial_coefficient(make_rational(-1, 2), 2), GaussRational(make_rational(3, 8)));
	EXPECT_EQ(hqc::binomial_coefficient(Rational(1), 2), GaussRational(0));
	EXPECT_EQ(hqc::binomial_coefficient(Rational(5), 0), GaussRational(1));
	EXPECT_EQ(hqc::binomial_coefficient(Rational(-1), 3), GaussRational(-1));
}
