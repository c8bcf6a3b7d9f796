#include "hqc/hqc.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace hqc;

namespace {

const OneForm w_a = OneForm::basis(Form::alpha);
const OneForm w_b = OneForm::basis(Form::beta);
const OneForm w_d = OneForm::basis(Form::delta);

BiForm random_biform(std::mt19937_64& rng)
{
	BiForm b;
	for (auto& row : b.right)
		for (auto& e : row)
			e = oracle::random_element(rng, 2, 2);
	return b;
}

} // namespace

TEST(Calculus, RightActionOnGenerators)
{
	const Scalar il = i_lambda();
	EXPECT_EQ(w_a * beta(), (beta() + unit_element(il)) * w_a);
	EXPECT_EQ(w_b * alpha(), alpha() * w_b);
	EXPECT_EQ(w_b * beta(), (beta() - unit_element(Scalar(2) * il)) * w_b);
	EXPECT_EQ(w_d * beta(), (beta() + unit_element(il)) * w_d);
	EXPECT_EQ(w_d * delta(), delta() * w_d);
	EXPECT_EQ(to_text(w_b * beta()), "(b - 2*i*l)*w_b");
}

TEST(Calculus, DifferentialExamples)
{
	EXPECT_EQ(differential(alpha()), w_a);
	EXPECT_TRUE(differential(unit_element()).is_zero());
	EXPECT_EQ(differential(alpha() * delta()), delta() * w_a + alpha() * w_d);
	EXPECT_EQ(differential(beta()), w_b + alpha() * w_d);
	EXPECT_EQ(to_text(differential(power(beta(), 2))), "(2*b - 2*i*l)*w_b + (2*b*a + 2*i*l*a)*w_d");
}

TEST(Calculus, DifferentialMatchesLeibnizOracle)
{
	for (const Monomial& m : pbw_monomials(5)) {
		auto expected = oracle::differential(oracle::spelled(m));
		const OneForm& dm = differential(m);
		for (Form f : all_forms)
			ASSERT_EQ(dm[f], expected[index(f)]) << to_text(m) << " " << form_name(f);
	}
}

TEST(Calculus, LeibnizOnRandomElements)
{
	std::mt19937_64 rng(29);
	for (int n = 0; n < 100; ++n) {
		Element x = oracle::random_element(rng, 3), y = oracle::random_element(rng, 3);
		ASSERT_EQ(differential(x * y), differential(x) * y + x * differential(y));
	}
}

TEST(Calculus, OmegaBasisFromDefinition)
{
	auto basis = omega_basis();
	EXPECT_EQ(basis[0].value, w_a);
	EXPECT_EQ(basis[1].value, w_b);
	EXPECT_EQ(basis[2].value, w_d);
	EXPECT_EQ(differential(beta()) - alpha() * differential(delta()), w_b);
	EXPECT_THROW(pi_map(tensor(unit_element(), beta())), DomainError);
	EXPECT_EQ(classify(power(beta(), 2)), Scalar(-2) * i_lambda() * w_b);
	EXPECT_THROW(classify(unit_element()), DomainError);
}

TEST(Calculus, BimoduleAssociativity)
{
	std::mt19937_64 rng(31);
	for (int n = 0; n < 200; ++n) {
		Element x = oracle::random_element(rng, 3, 2), y = oracle::random_element(rng, 3, 2);
		for (Form f : all_forms) {
			const OneForm w = OneForm::basis(f);
			ASSERT_EQ((x * w) * y, x * (w * y));
			ASSERT_EQ((w * x) * y, w * (x * y));
		}
	}
	for (Form f : all_forms) {
		const OneForm w = OneForm::basis(f);
		EXPECT_EQ((w * alpha()) * beta(), w * (beta() * alpha() + unit_element(i_lambda()) * alpha()));
	}
}

TEST(Calculus, FreeModuleRoundTrip)
{
	std::mt19937_64 rng(37);
	for (int n = 0; n < 100; ++n) {
		OneForm w;
		for (auto& c : w.left)
			c = oracle::random_element(rng, 3, 3);
		ASSERT_EQ(from_right(to_right(w)), w);
		ElementTriple r{oracle::random_element(rng, 3, 2), oracle::random_element(rng, 3, 2),
			oracle::random_element(rng, 3, 2)};
		ASSERT_EQ(to_right(from_right(r)), r);
	}
}

TEST(Calculus, RightInvariantForms)
{
	const RightInvariantBasis& eta = eta_basis();
	EXPECT_EQ(eta.eta_left[0], w_a);
	EXPECT_EQ(eta.eta_left[2], w_d);
	EXPECT_EQ(eta.eta_left[1], w_b - delta() * w_a + alpha() * w_d);
}

TEST(Calculus, SigmaIsTheFlipOnBasisForms)
{
	for (Form i : all_forms)
		for (Form j : all_forms)
			EXPECT_EQ(sigma(BiForm::basis(i, j)), BiForm::basis(j, i));
	std::mt19937_64 rng(41);
	for (int n = 0; n < 20; ++n) {
		BiForm b = random_biform(rng);
		ASSERT_EQ(sigma(sigma_inverse(b)), b);
		ASSERT_EQ(sigma_inverse(sigma(b)), b);
	}
}

TEST(Calculus, LeftRightCoefficientConversionForBiForms)
{
	std::mt19937_64 rng(43);
	for (int n = 0; n < 20; ++n) {
		BiForm b = random_biform(rng);
		ASSERT_EQ(from_left_coefficients(to_left_coefficients(b)), b);
	}
}

TEST(Calculus, WedgeRelations)
{
	EXPECT_EQ(wedge_project(BiForm::basis(Form::alpha, Form::delta)), TwoForm::basis(1));
	EXPECT_EQ(wedge_project(BiForm::basis(Form::delta, Form::alpha)), -TwoForm::basis(1));
	EXPECT_TRUE(wedge_project(BiForm::basis(Form::beta, Form::beta)).is_zero());
	EXPECT_EQ(wedge(w_b, w_a), -TwoForm::basis(0));
	EXPECT_EQ(to_text(wedge(w_d, w_b)), "w_d/\\w_b");
	// w_b ^ a w_d = w_b a ^ w_d = a w_b ^ w_d
	EXPECT_EQ(wedge(w_b, alpha() * w_d), alpha() * wedge(w_b, w_d));
}

TEST(Calculus, CartanMaurer)
{
	const auto& dw = cartan_maurer();
	EXPECT_TRUE(dw[0].is_zero());
	EXPECT_EQ(dw[1], -TwoForm::basis(1));
	EXPECT_TRUE(dw[2].is_zero());
	EXPECT_EQ(to_text(dw[1]), "-w_a/\\w_d");
	for (Form f : all_forms)
		EXPECT_TRUE(differential_on_forms(differential(generator(letter_of(f)))).is_zero());
}

TEST(Calculus, SecondDifferentialOnLowDegree)
{
	EXPECT_TRUE(differential_on_forms(differential(alpha() * delta())).is_zero());
	EXPECT_TRUE(differential_on_forms(differential(alpha() * beta() * delta())).is_zero());
	// d(w_b . b) and the graded Leibniz expansion differ by 4 i l w_a/\w_d.
	EXPECT_EQ(differential_on_forms(differential(power(beta(), 2))), Scalar(4) * i_lambda() * TwoForm::basis(1));
}

TEST(Calculus, LeftCoactionOfBasisForms)
{
	for (Form f : all_forms) {
		auto co = left_coaction(r_inverse(tensor(unit_element(), generator(letter_of(f)))));
		ASSERT_EQ(co.size(), 1u);
		EXPECT_TRUE(co.begin()->first.is_unit());
		EXPECT_EQ(co.begin()->second, OneForm::basis(f));
	}
}

TEST(Calculus, VerifierStatuses)
{
	VerificationReport r = verify_calculus(4);
	int eq6 = 0, eq10 = 0;
	for (const auto& c : r.checks) {
		if (c.id.rfind("eq6.", 0) == 0) {
			++eq6;
			EXPECT_EQ(c.status, CheckStatus::pass) << c.id;
		}
		if (c.id.rfind("eq10.", 0) == 0) {
			++eq10;
			EXPECT_EQ(c.status, CheckStatus::pass) << c.id;
		}
	}
	EXPECT_EQ(eq6, 9);
	EXPECT_EQ(eq10, 6);
	EXPECT_EQ(r.find("eq5.labeling")->status, CheckStatus::paper_discrepancy);
	EXPECT_EQ(r.find("eq11.d_omega_beta")->status, CheckStatus::paper_discrepancy);
	EXPECT_EQ(r.find("eq11.d_omega_alpha")->status, CheckStatus::pass);
	EXPECT_EQ(r.find("calculus.leibniz")->status, CheckStatus::pass);
	EXPECT_EQ(r.find("calculus.d_squared_zero")->status, CheckStatus::fail);
	EXPECT_THROW(verify_calculus(1), Error);
}
