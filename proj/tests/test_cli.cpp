#include "hqc/hqc.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

using namespace hqc;

namespace {

struct Invocation {
	int code;
	std::string out;
};

Invocation run(const std::string& args)
{
	std::string command = std::string(HQC_BINARY) + " " + args + " 2>/dev/null";
	std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
	std::string out;
	std::array<char, 4096> buf{};
	std::size_t n;
	while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0)
		out.append(buf.data(), n);
	int status = pclose(pipe.release());
	return {WEXITSTATUS(status), out};
}

} // namespace

TEST(Report, StableJsonIsByteIdentical)
{
	std::string first = to_json(run_suite("hopf", 3), true).dump(2);
	std::string second = to_json(run_suite("hopf", 3), true).dump(2);
	EXPECT_EQ(first, second);
	nlohmann::json j = nlohmann::json::parse(first);
	EXPECT_FALSE(j.contains("wall_ms"));
	EXPECT_EQ(j["suite"], "hopf");
	EXPECT_EQ(j["max_degree"], 3);
	for (const auto& c : j["checks"]) {
		EXPECT_TRUE(c.contains("id"));
		EXPECT_TRUE(c.contains("paper_eq"));
		EXPECT_TRUE(c["status"] == "pass" || c["status"] == "fail" || c["status"] == "paper-discrepancy");
	}
	EXPECT_TRUE(to_json(run_suite("hopf", 1)).contains("wall_ms"));
}

TEST(Report, SuitesAtLowDegree)
{
	EXPECT_TRUE(run_suite("hopf", 1).ok());
	VerificationReport ideal = run_suite("ideal", 0);
	EXPECT_NE(ideal.find("theorem1.ad_invariance"), nullptr);
	EXPECT_EQ(ideal.find("theorem1.quotient_basis_independent"), nullptr);
	EXPECT_THROW(run_suite("nope", 2), Error);
}

TEST(Report, ScalarJson)
{
	Scalar s = Scalar(make_rational(1, 2)) + Scalar(GaussRational(Rational(0), Rational(-2)), 1);
	EXPECT_EQ(to_json(s).dump(), R"([[0,"1/2","0/1"],[1,"0/1","-2/1"]])");
	EXPECT_EQ(to_json(differential(alpha())).dump(), R"([[{"coeff":[[0,"1/1","0/1"]],"monomial":[0,0,0]}],[],[]])");
}

TEST(Cli, ExpressionCommands)
{
	EXPECT_EQ(run("normal-form 'a*b'").out, "normal-form: b*a + i*l*a\n");
	EXPECT_EQ(run("delta b").out, "delta: 1 (x) b + b (x) 1 + a (x) d\n");
	EXPECT_EQ(run("epsilon '3 + a'").out, "epsilon: 3\n");
	EXPECT_EQ(run("antipode b").out, "antipode: a*d - b\n");
	EXPECT_EQ(run("adjoint b").out, "adjoint: b (x) 1 + a (x) d - d (x) a\n");
	EXPECT_EQ(run("reduce 'b^2'").out, "reduce: -2*i*l*b\n");
	EXPECT_EQ(run("d 'a*d'").out, "d: d*w_a + a*w_d\n");
	EXPECT_EQ(run("chi b 'b^2'").out, "chi_b: -2*i*l\n");
	EXPECT_EQ(run("cartan-maurer").out, "d w_a = 0\nd w_b = -w_a/\\w_d\nd w_d = 0\n");
	Invocation traced = run("reduce 'b^2' --trace");
	EXPECT_EQ(traced.code, 0);
	EXPECT_NE(traced.out.find("b^2 + 2*i*l*b"), std::string::npos);
}

TEST(Cli, ExitCodes)
{
	EXPECT_EQ(run("normal-form 'a +'").code, 2);
	EXPECT_EQ(run("normal-form x").code, 2);
	EXPECT_EQ(run("").code, 2);
	EXPECT_EQ(run("verify --suite bogus").code, 2);
	EXPECT_EQ(run("verify --suite calculus --max-degree 1").code, 2);
	EXPECT_EQ(run("verify --suite hopf --max-degree 2").code, 0);
	EXPECT_EQ(run("verify --suite dual --max-degree 2").code, 0);
	EXPECT_EQ(run("verify --suite calculus --max-degree 2").code, 1);
}

TEST(Cli, EnvironmentDegree)
{
	Invocation r = run("verify --suite hopf --format json --stable");
	EXPECT_EQ(nlohmann::json::parse(r.out)["max_degree"], 4);
	setenv("HQC_MAX_DEGREE", "2", 1);
	r = run("verify --suite hopf --format json --stable");
	EXPECT_EQ(nlohmann::json::parse(r.out)["max_degree"], 2);
	r = run("verify --suite hopf --max-degree 3 --format json --stable");
	EXPECT_EQ(nlohmann::json::parse(r.out)["max_degree"], 3);
	unsetenv("HQC_MAX_DEGREE");
}

TEST(Cli, StableOutputIsDeterministic)
{
	Invocation x = run("verify --suite ideal --max-degree 3 --format json --stable");
	Invocation y = run("verify --suite ideal --max-degree 3 --format json --stable");
	EXPECT_EQ(x.out, y.out);
	EXPECT_EQ(x.out.find("wall_ms"), std::string::npos);
}
