#pragma once

#include "hqc/calculus.hpp"
#include "hqc/dual.hpp"
#include "hqc/hopf.hpp"
#include "hqc/ideal.hpp"
#include "hqc/report.hpp"

#include <json.hpp>

#include <array>
#include <chrono>
#include <sstream>
#include <string>

namespace hqc {

inline constexpr std::array<const char*, 5> suite_names = {"hopf", "ideal", "calculus", "dual", "all"};

inline bool is_suite_name(const std::string& name)
{
	for (const char* s : suite_names)
		if (name == s)
			return true;
	return false;
}

/// Runs the named suite. Checks are ordered hopf, ideal, calculus, dual.
/// The ideal suite skips the quotient-basis checks below degree 2; calculus
/// and dual need degree >= 2.
inline VerificationReport run_suite(const std::string& name, int max_degree)
{
	if (!is_suite_name(name))
		throw Error("unknown suite '" + name + "'");
	const auto start = std::chrono::steady_clock::now();
	VerificationReport report;
	report.suite = name;
	report.max_degree = max_degree;
	const bool all = name == "all";
	if (all || name == "hopf") {
		report.append(verify_matrix_coproduct());
		report.append(verify_hopf_axioms(max_degree));
	}
	if (all || name == "ideal") {
		report.append(verify_ad_invariance(max_degree));
		if (max_degree >= 2)
			report.append(verify_quotient_basis(max_degree));
	}
	if (all || name == "calculus")
		report.append(verify_calculus(max_degree));
	if (all || name == "dual")
		report.append(verify_quantum_lie(max_degree));
	report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
	return report;
}

// ---------------------------------------------------------------------------
// JSON.

/// [[k, "re", "im"], ...] over the powers l^k present.
inline nlohmann::json to_json(const Scalar& s)
{
	nlohmann::json out = nlohmann::json::array();
	for (const auto& [k, g] : s.terms())
		out.push_back({k, rational_fraction_text(g.re()), rational_fraction_text(g.im())});
	return out;
}

/// [{"monomial": [b, a, d], "coeff": scalar}, ...] in descending graded order.
inline nlohmann::json to_json(const Element& x)
{
	nlohmann::json out = nlohmann::json::array();
	for (const auto& [m, c] : sorted_terms(x))
		out.push_back({{"monomial", {m.b, m.a, m.d}}, {"coeff", to_json(c)}});
	return out;
}

/// Left coefficients of w_a, w_b, w_d.
inline nlohmann::json to_json(const OneForm& w)
{
	return nlohmann::json::array({to_json(w[Form::alpha]), to_json(w[Form::beta]), to_json(w[Form::delta])});
}

/// Left coefficients of w_a/\w_b, w_a/\w_d, w_d/\w_b.
inline nlohmann::json to_json(const TwoForm& t)
{
	return nlohmann::json::array({to_json(t.left[0]), to_json(t.left[1]), to_json(t.left[2])});
}

inline nlohmann::json to_json(const VerificationReport& report, bool stable = false)
{
	nlohmann::json checks = nlohmann::json::array();
	for (const auto& c : report.checks) {
		nlohmann::json record = {{"id", c.id}, {"paper_eq", c.paper_eq}, {"status", status_name(c.status)}};
		if (!c.witness.empty())
			record["witness"] = c.witness;
		checks.push_back(std::move(record));
	}
	nlohmann::json out = {{"suite", report.suite}, {"max_degree", report.max_degree}, {"checks", std::move(checks)}};
	if (!stable)
		out["wall_ms"] = report.wall_ms;
	return out;
}

inline std::string to_text(const VerificationReport& report, bool stable = false)
{
	std::ostringstream out;
	out << "suite " << report.suite << ", max degree " << report.max_degree << "\n";
	std::size_t counts[3] = {0, 0, 0};
	for (const auto& c : report.checks) {
		++counts[static_cast<int>(c.status)];
		out << status_name(c.status) << "  " << c.id << "  [" << c.paper_eq << "]";
		if (!c.witness.empty())
			out << "  " << c.witness;
		out << "\n";
	}
	out << counts[0] << " pass, " << counts[1] << " fail, " << counts[2] << " paper-discrepancy\n";
	for (const CheckRecord* c : report.with_status(CheckStatus::paper_discrepancy))
		out << "discrepancy: " << c->id << "\n";
	if (!stable)
		out << "wall_ms " << static_cast<long long>(report.wall_ms) << "\n";
	return out.str();
}

} // namespace hqc
