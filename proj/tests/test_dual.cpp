#include "hqc/hqc.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace hqc;

namespace {

const Monomial I{};
const Monomial b{1, 0, 0};
const Monomial a{0, 1, 0};
const Monomial d{0, 0, 1};
const Monomial b2{2, 0, 0};

Scalar il() { return i_lambda(); }

} // namespace

TEST(Dual, ChiValues)
{
	EXPECT_EQ(chi(Form::alpha)(a), Scalar(1));
	EXPECT_EQ(chi(Form::alpha)(b), Scalar());
	EXPECT_EQ(chi(Form::alpha)(d), Scalar());
	for (Form f : all_forms)
		EXPECT_TRUE(chi(f)(I).is_zero());
	EXPECT_EQ(chi(Form::beta)(b2), Scalar(-2) * il());
	EXPECT_EQ(chi(Form::delta)(delta() * beta()), il());
}

TEST(Dual, ChiMatchesLeibnizOracle)
{
	for (const Monomial& m : pbw_monomials(5)) {
		auto coeffs = oracle::differential(oracle::spelled(m));
		for (Form f : all_forms)
			ASSERT_EQ(chi(f)(m), epsilon(coeffs[index(f)])) << to_text(m);
	}
}

TEST(Dual, Convolution)
{
	EXPECT_EQ(convolve(chi(Form::alpha), chi(Form::delta))(b), Scalar(1));
	EXPECT_EQ(convolve(chi(Form::delta), chi(Form::alpha))(b), Scalar());
	EXPECT_EQ(commutator(chi(Form::alpha), chi(Form::delta))(b), chi(Form::beta)(b));
	EXPECT_TRUE(functional_equal(convolve(counit_functional(), chi(Form::beta)), chi(Form::beta), 4));
	EXPECT_TRUE(functional_equal(convolve(chi(Form::beta), counit_functional()), chi(Form::beta), 4));
}

TEST(Dual, BracketOfAlphaAndDeltaDisagreesAtBetaSquared)
{
	// [chi_a, chi_d](b^2) = f_a(b) + f_d(b) = 2 i l, while chi_b(b^2) = f_b(b) = -2 i l.
	EXPECT_EQ(commutator(chi(Form::alpha), chi(Form::delta))(b2), Scalar(2) * il());
	EXPECT_EQ(chi(Form::beta)(b2), Scalar(-2) * il());
	EXPECT_TRUE(functional_equal(commutator(chi(Form::alpha), chi(Form::beta)), Functional("0", [](const Monomial&) {
		return Scalar();
	}),
		5));
}

TEST(Dual, FFunctionals)
{
	const Functional fa = f_from_commutation(Form::alpha);
	const Functional fb = f_from_commutation(Form::beta);
	EXPECT_EQ(fb(b), Scalar(-2) * il());
	EXPECT_EQ(fa(I), Scalar(1));
	EXPECT_EQ(fa(b), il());
	EXPECT_EQ(fb(b2), Scalar(-4) * Scalar::lambda(2));
	EXPECT_EQ(fa(b2), -Scalar::lambda(2));
	EXPECT_FALSE(off_diagonal_witness(5).has_value());
}

TEST(Dual, BinomialSeries)
{
	EXPECT_EQ(binomial_series(Rational(1))(b), Scalar(-2) * il());
	EXPECT_EQ(binomial_series(make_rational(-1, 2))(b2), -Scalar::lambda(2));
	for (const Rational& s : {make_rational(1, 2), make_rational(-1, 2), Rational(1), Rational(-1)})
		EXPECT_EQ(binomial_series(s)(I), Scalar(1));
	EXPECT_THROW(binomial_series(Rational(2)), DomainError);
	EXPECT_EQ(binomial_series(make_rational(1, 2))(b), -il());
}

TEST(Dual, FitsOfClosedForms)
{
	EXPECT_TRUE(functional_equal(f_matrix(Form::beta, Form::beta), binomial_series(Rational(1)), 5));
	EXPECT_TRUE(functional_equal(f_matrix(Form::alpha, Form::alpha), binomial_series(make_rational(-1, 2)), 5));
	EXPECT_TRUE(functional_equal(f_matrix(Form::delta, Form::delta), binomial_series(make_rational(-1, 2)), 5));
	EXPECT_FALSE(functional_equal(f_matrix(Form::alpha, Form::alpha), binomial_series(make_rational(1, 2)), 5));
}

TEST(Dual, CoproductAndGrouplikeChecks)
{
	const Functional& e = counit_functional();
	const Functional& cb = chi(Form::beta);
	EXPECT_TRUE(functional_coproduct_check(cb, {{cb, f_matrix(Form::beta, Form::beta)}, {e, cb}}, 4).passed());
	EXPECT_TRUE(functional_coproduct_check(e, {{e, e}}, 4).passed());
	EXPECT_FALSE(functional_coproduct_check(cb, {{e, cb}}, 2).passed());
	EXPECT_TRUE(grouplike_check(e, 4).passed());
	for (Form f : all_forms)
		EXPECT_TRUE(grouplike_check(f_matrix(f, f), 4).passed());
	EXPECT_FALSE(grouplike_check(cb, 2).passed());
	EXPECT_THROW(functional_coproduct_check(e, {}, 0), Error);
}

TEST(Dual, NilpotenceLadder)
{
	EXPECT_FALSE(nilpotence_witness(6, 8).has_value());
	EXPECT_EQ(convolution_power(chi(Form::beta), 2)(b2), Scalar(2));
}

TEST(Dual, ActionReproducesDifferential)
{
	for (const Monomial& m : pbw_monomials(4))
		for (Form f : all_forms)
			ASSERT_EQ(act(chi(f), Element(m)), differential(m)[f]);
}

TEST(Dual, VerifierStatuses)
{
	VerificationReport r = verify_quantum_lie(4);
	EXPECT_EQ(r.find("eq13.[chi_a,chi_b]=0")->status, CheckStatus::pass);
	EXPECT_EQ(r.find("eq13.[chi_d,chi_b]=0")->status, CheckStatus::pass);
	EXPECT_EQ(r.find("eq13.[chi_a,chi_d]=chi_b")->status, CheckStatus::paper_discrepancy);
	EXPECT_EQ(r.find("eq17.f_beta")->status, CheckStatus::pass);
	EXPECT_EQ(r.find("eq17.f_alpha")->status, CheckStatus::paper_discrepancy);
	EXPECT_EQ(r.find("eq17.f_delta")->status, CheckStatus::paper_discrepancy);
	EXPECT_EQ(r.find("eq12.round_trip")->status, CheckStatus::pass);
	EXPECT_EQ(r.find("dual.jacobi")->status, CheckStatus::pass);
	EXPECT_TRUE(r.ok());
}
