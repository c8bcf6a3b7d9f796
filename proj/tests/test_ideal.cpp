#include "hqc/hqc.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace hqc;

TEST(Ideal, Generators)
{
	const Scalar il = i_lambda();
	EXPECT_EQ(ideal_generator(IdealGenerator::beta_sq_shifted), power(beta(), 2) + Scalar(2) * il * beta());
	EXPECT_EQ(ideal_generator(IdealGenerator::beta_alpha), beta() * alpha());
	EXPECT_STREQ(generator_name(IdealGenerator::beta_sq_shifted), "b^2 + 2*i*l*b");
	for (IdealGenerator g : all_ideal_generators)
		EXPECT_TRUE(is_in_ideal(ideal_generator(g)));
}

TEST(Ideal, Reductions)
{
	const Scalar il = i_lambda();
	EXPECT_EQ(reduce(power(beta(), 2)).embed(), Scalar(-2) * il * beta());
	EXPECT_TRUE(reduce(beta() * alpha()).is_zero());
	EXPECT_EQ(reduce(alpha()).embed(), alpha());
	EXPECT_EQ(reduce(unit_element(Scalar(5))).unit, Scalar(5));
	// b^3 = b (b^2 + 2 i l b) - 2 i l b^2  ->  -4 l^2 b
	EXPECT_EQ(reduce(power(beta(), 3)).embed(), Scalar(-4) * Scalar::lambda(2) * beta());
	EXPECT_EQ(reduce(alpha() * beta()).embed(), il * alpha());
}

TEST(Ideal, TracesReplay)
{
	std::mt19937_64 rng(23);
	for (int n = 0; n < 200; ++n) {
		Element x = oracle::random_element(rng, 5, 5);
		Reduction r = reduce_with_trace(x);
		ASSERT_EQ(x - r.result.embed(), replay(r.trace));
	}
}

TEST(Ideal, IsRightIdeal)
{
	for (IdealGenerator g : all_ideal_generators)
		for (const Monomial& m : pbw_monomials(3))
			ASSERT_TRUE(reduce(ideal_generator(g) * Element(m)).is_zero()) << generator_name(g) << " * " << to_text(m);
}

TEST(Ideal, ShiftedBetaSquareGeneratorIsNotAdInvariant)
{
	// First slot of ad(b^2 + 2 i l b) over d is 2 b a + 4 i l a, whose class is 4 i l a.
	const Element r = ideal_generator(IdealGenerator::beta_sq_shifted);
	auto slots = first_slots_by_second(adjoint(r));
	const Scalar il = i_lambda();
	const Monomial d = Monomial::of(Letter::delta);
	ASSERT_TRUE(slots.count(d));
	EXPECT_EQ(slots[d], Scalar(2) * beta() * alpha() + Scalar(4) * il * alpha());
	EXPECT_EQ(reduce(slots[d]).embed(), Scalar(4) * il * alpha());

	VerificationReport v = verify_ad_invariance(3);
	EXPECT_EQ(v.find("theorem1.ad_invariance")->status, CheckStatus::paper_discrepancy);
	EXPECT_EQ(v.find("theorem1.ad_invariance.corrected_ideal")->status, CheckStatus::pass);
}

TEST(Ideal, OtherGeneratorsAreAdInvariant)
{
	for (IdealGenerator g : all_ideal_generators) {
		if (g == IdealGenerator::beta_sq_shifted)
			continue;
		for (const Monomial& m : pbw_monomials(3))
			for (const auto& [second, first] : first_slots_by_second(adjoint(ideal_generator(g) * Element(m))))
				ASSERT_TRUE(is_in_ideal(first)) << generator_name(g);
	}
}

TEST(Ideal, QuotientBasis)
{
	VerificationReport v = verify_quotient_basis(5);
	EXPECT_TRUE(v.ok());
	EXPECT_TRUE(check_prefix_completeness(5));
}
