#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace hqc {

enum class CheckStatus { pass, fail, paper_discrepancy };

inline const char* status_name(CheckStatus s)
{
	switch (s) {
	case CheckStatus::pass: return "pass";
	case CheckStatus::fail: return "fail";
	case CheckStatus::paper_discrepancy: return "paper-discrepancy";
	}
	return "fail";
}

struct CheckRecord {
	std::string id;
	std::string paper_eq;
	CheckStatus status = CheckStatus::pass;
	std::string witness;
};

/// Outcome of one verification suite. A paper-discrepancy is a derived,
/// internally consistent value that differs from the reference equation; it
/// does not make the report fail.
struct VerificationReport {
	std::string suite;
	int max_degree = 0;
	std::vector<CheckRecord> checks;
	double wall_ms = 0.0;

	void add(std::string id, std::string paper_eq, CheckStatus status, std::string witness = {})
	{
		checks.push_back({std::move(id), std::move(paper_eq), status, std::move(witness)});
	}

	/// pass if ok, otherwise fail.
	void expect(bool ok, std::string id, std::string paper_eq, std::string witness = {})
	{
		add(std::move(id), std::move(paper_eq), ok ? CheckStatus::pass : CheckStatus::fail, std::move(witness));
	}

	void append(const VerificationReport& other)
	{
		checks.insert(checks.end(), other.checks.begin(), other.checks.end());
	}

	bool ok() const
	{
		return std::none_of(checks.begin(), checks.end(),
			[](const CheckRecord& c) { return c.status == CheckStatus::fail; });
	}

	std::vector<const CheckRecord*> with_status(CheckStatus s) const
	{
		std::vector<const CheckRecord*> out;
		for (const auto& c : checks)
			if (c.status == s)
				out.push_back(&c);
		return out;
	}

	const CheckRecord* find(const std::string& id) const
	{
		for (const auto& c : checks)
			if (c.id == id)
				return &c;
		return nullptr;
	}
};

} // namespace hqc
