#include "hqc/hqc.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace hqc;

TEST(Parser, Examples)
{
	EXPECT_TRUE(parse_element("a*b - b*a - i*l*a").is_zero());
	EXPECT_EQ(parse_element("1"), unit_element());
	EXPECT_EQ(parse_element("b^2 + 2*i*l*b"), ideal_generator(IdealGenerator::beta_sq_shifted));
}

TEST(Parser, AliasesWhitespaceAndOrder)
{
	EXPECT_EQ(parse_element(" alpha * beta "), alpha() * beta());
	EXPECT_EQ(parse_element("delta*beta"), delta() * beta());
	EXPECT_NE(parse_element("a*b"), parse_element("b*a"));
	EXPECT_EQ(parse_element("(a + d)^2"), power(alpha() + delta(), 2));
	EXPECT_EQ(parse_element("-1/2*l^2*b"), Scalar(make_rational(-1, 2)) * Scalar::lambda(2) * beta());
	EXPECT_EQ(parse_element("a - b - d"), alpha() - beta() - delta());
	EXPECT_EQ(parse_element("b^0"), unit_element());
}

TEST(Parser, Errors)
{
	try {
		parse("a + * b");
		FAIL();
	} catch (const ParseError& e) {
		EXPECT_EQ(e.position(), 4u);
	}
	try {
		parse("2*x");
		FAIL();
	} catch (const ParseError& e) {
		EXPECT_EQ(e.position(), 2u);
		EXPECT_NE(std::string(e.what()).find("unknown identifier"), std::string::npos);
	}
	EXPECT_THROW(parse("(a"), ParseError);
	EXPECT_THROW(parse("a^"), ParseError);
	EXPECT_THROW(parse("a b"), ParseError);
	EXPECT_THROW(parse(""), ParseError);
}

TEST(Parser, CanonicalTextRoundTrip)
{
	std::mt19937_64 rng(47);
	for (int n = 0; n < 200; ++n) {
		Element x = oracle::random_element(rng, 4, 5);
		ASSERT_EQ(parse_element(to_text(x)), x) << to_text(x);
	}
	EXPECT_EQ(parse_element(to_text(Element())), Element());
}
