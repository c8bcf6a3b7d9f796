#include "hqc/hqc.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

int default_max_degree()
{
	if (const char* env = std::getenv("HQC_MAX_DEGREE")) {
		try {
			std::size_t used = 0;
			int v = std::stoi(env, &used);
			if (used == std::string(env).size() && v >= 0)
				return v;
		} catch (const std::exception&) {
		}
		throw hqc::Error(std::string("HQC_MAX_DEGREE must be a non-negative integer, got '") + env + "'");
	}
	return 4;
}

hqc::Form parse_form(const std::string& name)
{
	if (name == "a" || name == "alpha")
		return hqc::Form::alpha;
	if (name == "b" || name == "beta")
		return hqc::Form::beta;
	if (name == "d" || name == "delta")
		return hqc::Form::delta;
	throw hqc::Error("expected a, b or d, got '" + name + "'");
}

void emit(const std::string& label, const std::string& text, const nlohmann::json& json, bool as_json)
{
	if (as_json)
		std::cout << nlohmann::json{{label, json}}.dump() << "\n";
	else
		std::cout << label << ": " << text << "\n";
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Exact computations in the quantum Heisenberg group algebra and its differential calculus"};
	app.require_subcommand(1);

	std::string expr;
	std::string format = "text";
	auto add_expr_command = [&](const std::string& name, const std::string& help) {
		CLI::App* cmd = app.add_subcommand(name, help);
		cmd->add_option("expr", expr, "expression, e.g. \"a*b - i*l*a\"")->required();
		cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
		return cmd;
	};

	CLI::App* normal_form = add_expr_command("normal-form", "PBW normal form");
	CLI::App* delta_cmd = add_expr_command("delta", "coproduct");
	CLI::App* epsilon_cmd = add_expr_command("epsilon", "counit");
	CLI::App* antipode_cmd = add_expr_command("antipode", "antipode");
	CLI::App* adjoint_cmd = add_expr_command("adjoint", "right adjoint coaction");
	CLI::App* reduce_cmd = add_expr_command("reduce", "class modulo the ideal, in span{1, a, b, d}");
	bool trace = false;
	reduce_cmd->add_flag("--trace", trace, "print the certified rewrite trace");
	CLI::App* d_cmd = add_expr_command("d", "differential in the left-invariant basis");

	CLI::App* chi_cmd = app.add_subcommand("chi", "evaluate chi_a, chi_b or chi_d");
	std::string chi_index;
	chi_cmd->add_option("index", chi_index, "a, b or d")->required()->check(CLI::IsMember({"a", "b", "d"}));
	chi_cmd->add_option("expr", expr, "expression")->required();
	chi_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

	CLI::App* cm_cmd = app.add_subcommand("cartan-maurer", "derived d w_a, d w_b, d w_d");
	cm_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

	CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
	std::string suite = "all";
	std::optional<int> max_degree;
	bool stable = false;
	verify->add_option("--suite", suite, "hopf, ideal, calculus, dual or all")
		->check(CLI::IsMember({"hopf", "ideal", "calculus", "dual", "all"}));
	verify->add_option("--max-degree", max_degree, "degree bound (default 4, or HQC_MAX_DEGREE)")
		->check(CLI::NonNegativeNumber);
	verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
	verify->add_flag("--stable", stable, "omit wall time so output is byte-reproducible");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int code = app.exit(e);
		return code == 0 ? 0 : exit_usage;
	}

	const bool json = format == "json";
	try {
		if (verify->parsed()) {
			const int degree = max_degree ? *max_degree : default_max_degree();
			hqc::VerificationReport report = hqc::run_suite(suite, degree);
			if (json)
				std::cout << hqc::to_json(report, stable).dump(2) << "\n";
			else
				std::cout << hqc::to_text(report, stable);
			return report.ok() ? 0 : exit_fail;
		}
		if (cm_cmd->parsed()) {
			const auto& dw = hqc::cartan_maurer();
			if (json) {
				std::cout << nlohmann::json{{"w_a", hqc::to_json(dw[0])}, {"w_b", hqc::to_json(dw[1])},
											   {"w_d", hqc::to_json(dw[2])}}
								 .dump()
						  << "\n";
			} else {
				for (hqc::Form f : hqc::all_forms)
					std::cout << "d " << hqc::form_name(f) << " = " << hqc::to_text(dw[hqc::index(f)]) << "\n";
			}
			return 0;
		}

		const hqc::Element x = hqc::parse_element(expr);
		if (normal_form->parsed()) {
			emit("normal-form", hqc::to_text(x), hqc::to_json(x), json);
		} else if (delta_cmd->parsed()) {
			hqc::Tensor2 t = hqc::delta(x);
			nlohmann::json j = nlohmann::json::array();
			for (const auto& [k, c] : t)
				j.push_back({{"left", {k.first.b, k.first.a, k.first.d}}, {"right", {k.second.b, k.second.a, k.second.d}},
					{"coeff", hqc::to_json(c)}});
			emit("delta", hqc::to_text(t), j, json);
		} else if (epsilon_cmd->parsed()) {
			hqc::Scalar s = hqc::epsilon(x);
			emit("epsilon", hqc::to_text(s), hqc::to_json(s), json);
		} else if (antipode_cmd->parsed()) {
			hqc::Element s = hqc::antipode(x);
			emit("antipode", hqc::to_text(s), hqc::to_json(s), json);
		} else if (adjoint_cmd->parsed()) {
			hqc::Tensor2 t = hqc::adjoint(x);
			nlohmann::json j = nlohmann::json::array();
			for (const auto& [k, c] : t)
				j.push_back({{"left", {k.first.b, k.first.a, k.first.d}}, {"right", {k.second.b, k.second.a, k.second.d}},
					{"coeff", hqc::to_json(c)}});
			emit("adjoint", hqc::to_text(t), j, json);
		} else if (reduce_cmd->parsed()) {
			hqc::Reduction r = hqc::reduce_with_trace(x);
			nlohmann::json j = {{"class", {hqc::to_json(r.result.unit), hqc::to_json(r.result.alpha),
											  hqc::to_json(r.result.beta), hqc::to_json(r.result.delta)}}};
			if (trace) {
				nlohmann::json steps = nlohmann::json::array();
				for (const auto& s : r.trace)
					steps.push_back(hqc::to_text(s));
				j["trace"] = steps;
			}
			if (json) {
				std::cout << nlohmann::json{{"reduce", j}}.dump() << "\n";
			} else {
				std::cout << "reduce: " << hqc::to_text(r.result) << "\n";
				if (trace)
					for (const auto& s : r.trace)
						std::cout << "  " << hqc::to_text(s) << "\n";
			}
		} else if (d_cmd->parsed()) {
			hqc::OneForm w = hqc::differential(x);
			emit("d", hqc::to_text(w), hqc::to_json(w), json);
		} else if (chi_cmd->parsed()) {
			hqc::Scalar s = hqc::chi(parse_form(chi_index))(x);
			emit("chi_" + chi_index, hqc::to_text(s), hqc::to_json(s), json);
		}
		return 0;
	} catch (const hqc::ParseError& e) {
		std::cerr << e.what() << "\n";
		return exit_usage;
	} catch (const hqc::Error& e) {
		std::cerr << "error: " << e.what() << "\n";
		return exit_usage;
	}
}
