#include "hqc/hqc.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <thread>

using namespace hqc;

TEST(Hopf, GeneratorData)
{
	const Element one = unit_element();
	EXPECT_EQ(delta(beta()), tensor(one, beta()) + tensor(beta(), one) + tensor(alpha(), delta()));
	EXPECT_EQ(to_text(delta(beta())), "1 (x) b + b (x) 1 + a (x) d");
	EXPECT_EQ(antipode(beta()), alpha() * delta() - beta());
	EXPECT_EQ(antipode(alpha()), -alpha());
	EXPECT_EQ(epsilon(beta()), Scalar());
	EXPECT_EQ(epsilon(unit_element(Scalar(3))), Scalar(3));
}

TEST(Hopf, CoproductMatchesWordOracle)
{
	for (const Monomial& m : pbw_monomials(4))
		ASSERT_EQ(delta(m), oracle::coproduct(oracle::spelled(m))) << to_text(m);
}

TEST(Hopf, AntipodeMatchesWordOracle)
{
	for (const Monomial& m : pbw_monomials(4))
		ASSERT_EQ(antipode(m), oracle::antipode(oracle::spelled(m))) << to_text(m);
}

TEST(Hopf, AxiomsOnRandomElements)
{
	std::mt19937_64 rng(17);
	for (int n = 0; n < 50; ++n) {
		Element x = oracle::random_element(rng, 3);
		Element y = oracle::random_element(rng, 3);
		ASSERT_EQ(delta3(x), delta3_right(x));
		ASSERT_EQ(counit_left(delta(x)), x);
		ASSERT_EQ(counit_right(delta(x)), x);
		ASSERT_EQ(delta(x * y), delta(x) * delta(y));
		ASSERT_EQ(antipode(x * y), antipode(y) * antipode(x));
		ASSERT_EQ(epsilon(x * y), epsilon(x) * epsilon(y));
		ASSERT_EQ(contract(map_slots(delta(x), [](const Monomial& m) { return antipode(m); },
					  [](const Monomial& m) { return Element(m); })),
			unit_element(epsilon(x)));
	}
}

TEST(Hopf, AdjointOfBeta)
{
	const Element one = unit_element();
	EXPECT_EQ(adjoint(beta()), tensor(beta(), one) + tensor(alpha(), delta()) - tensor(delta(), alpha()));
	EXPECT_EQ(adjoint(alpha()), tensor(alpha(), one));
}

TEST(Hopf, VerifierPassesOnEightyFourMonomials)
{
	VerificationReport r = verify_hopf_axioms(6);
	EXPECT_TRUE(r.ok());
	for (const char* id : {"hopf.coassociativity", "hopf.counit_left", "hopf.counit_right", "hopf.antipode_left",
			 "hopf.antipode_right", "hopf.delta_homomorphism", "hopf.antipode_antihomomorphism"})
		EXPECT_NE(r.find(id), nullptr) << id;
	EXPECT_TRUE(r.with_status(CheckStatus::paper_discrepancy).empty());
}

TEST(Hopf, MatrixCoproduct)
{
	VerificationReport r = verify_matrix_coproduct();
	EXPECT_TRUE(r.ok());
	EXPECT_FALSE(r.checks.empty());
	auto u = heisenberg_matrix();
	EXPECT_EQ(u[0][1], alpha());
	EXPECT_EQ(u[0][2], beta());
	EXPECT_EQ(u[1][2], delta());
}

TEST(Hopf, ConcurrentMemoizedCoproducts)
{
	const auto monos = pbw_monomials(5);
	std::vector<std::thread> pool;
	std::vector<std::vector<Tensor2>> results(6);
	for (int t = 0; t < 6; ++t)
		pool.emplace_back([&, t] {
			for (auto it = monos.rbegin(); it != monos.rend(); ++it)
				results[t].push_back(delta(*it) + tensor(antipode(Element(*it)), unit_element()));
		});
	for (auto& th : pool)
		th.join();
	for (int t = 1; t < 6; ++t)
		EXPECT_EQ(results[t], results[0]);
}
