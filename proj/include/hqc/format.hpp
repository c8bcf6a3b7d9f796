#pragma once

// Canonical text forms. Generators print as a, b, d, the unit as 1, the
// imaginary unit as i and the deformation parameter as l. Terms of an
// Element are listed by descending graded order, e.g. "b*a + i*l*a".

#include "hqc/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace hqc {

namespace detail {

struct SignedText {
	bool negative = false;
	std::string magnitude;
};

inline std::string rational_text(const Rational& q) { return q.get_str(); }

inline std::string lambda_power_text(unsigned k)
{
	if (k == 0)
		return {};
	return k == 1 ? "l" : "l^" + std::to_string(k);
}

inline std::string join_product(const std::string& x, const std::string& y)
{
	if (x.empty())
		return y;
	if (y.empty())
		return x;
	return x + "*" + y;
}

/// One l-power term of a Scalar.
inline SignedText gauss_term_text(const GaussRational& g, unsigned k)
{
	SignedText out;
	std::string lam = lambda_power_text(k);
	if (g.is_real() || g.is_imaginary()) {
		Rational v = g.is_real() ? g.re() : g.im();
		out.negative = sgn(v) < 0;
		Rational mag = abs(v);
		std::string num = mag == 1 ? std::string() : rational_text(mag);
		std::string unit = g.is_real() ? std::string() : std::string("i");
		out.magnitude = join_product(join_product(num, unit), lam);
		if (out.magnitude.empty())
			out.magnitude = "1";
		return out;
	}
	std::string inner = rational_text(g.re()) + (sgn(g.im()) < 0 ? " - " : " + ");
	Rational mag = abs(g.im());
	inner += mag == 1 ? std::string("i") : rational_text(mag) + "*i";
	out.magnitude = join_product("(" + inner + ")", lam);
	return out;
}

inline std::string join_signed(const std::vector<SignedText>& parts)
{
	if (parts.empty())
		return "0";
	std::string out;
	for (std::size_t k = 0; k < parts.size(); ++k) {
		if (k == 0)
			out += parts[k].negative ? "-" : "";
		else
			out += parts[k].negative ? " - " : " + ";
		out += parts[k].magnitude;
	}
	return out;
}

/// A Scalar acting as a coefficient of a basis object printed as `basis`.
/// `basis` empty means the unit.
inline SignedText coefficient_term(const Scalar& c, const std::string& basis)
{
	if (c.terms().size() == 1) {
		const auto& [k, g] = *c.terms().begin();
		if (basis.empty())
			return gauss_term_text(g, k);
		if (g.is_real() || g.is_imaginary()) {
			SignedText t = gauss_term_text(g, k);
			if (!basis.empty())
				t.magnitude = t.magnitude == "1" ? basis : t.magnitude + "*" + basis;
			return t;
		}
	}
	std::vector<SignedText> parts;
	for (const auto& [k, g] : c.terms())
		parts.push_back(gauss_term_text(g, k));
	std::string inner = join_signed(parts);
	return {false, basis.empty() ? "(" + inner + ")" : "(" + inner + ")*" + basis};
}

} // namespace detail

inline std::string to_text(const Scalar& s)
{
	std::vector<detail::SignedText> parts;
	for (const auto& [k, g] : s.terms())
		parts.push_back(detail::gauss_term_text(g, k));
	return detail::join_signed(parts);
}

inline std::string to_text(const GaussRational& g) { return to_text(Scalar(g)); }

inline std::string to_text(const Monomial& m)
{
	if (m.is_unit())
		return "1";
	std::string out;
	auto emit = [&](const char* name, unsigned e) {
		if (e == 0)
			return;
		if (!out.empty())
			out += "*";
		out += name;
		if (e > 1)
			out += "^" + std::to_string(e);
	};
	emit("b", m.b);
	emit("a", m.a);
	emit("d", m.d);
	return out;
}

inline std::vector<std::pair<Monomial, Scalar>> sorted_terms(const Element& x)
{
	std::vector<std::pair<Monomial, Scalar>> terms(x.begin(), x.end());
	std::sort(terms.begin(), terms.end(),
		[](const auto& p, const auto& q) { return graded_less(q.first, p.first); });
	return terms;
}

inline std::string to_text(const Element& x)
{
	std::vector<detail::SignedText> parts;
	for (const auto& [m, c] : sorted_terms(x))
		parts.push_back(detail::coefficient_term(c, m.is_unit() ? std::string() : to_text(m)));
	return detail::join_signed(parts);
}

/// Text of an Element used as a factor: parenthesized unless a single term.
inline std::string factor_text(const Element& x)
{
	std::string t = to_text(x);
	return x.size() > 1 ? "(" + t + ")" : t;
}

namespace detail {

inline bool graded_less_tuple(const std::vector<Monomial>& x, const std::vector<Monomial>& y)
{
	for (std::size_t k = 0; k < x.size(); ++k) {
		if (graded_less(x[k], y[k]))
			return true;
		if (graded_less(y[k], x[k]))
			return false;
	}
	return false;
}

inline std::string tensor_text(std::vector<std::pair<std::vector<Monomial>, Scalar>> terms)
{
	std::sort(terms.begin(), terms.end(),
		[](const auto& p, const auto& q) { return graded_less_tuple(p.first, q.first); });
	std::vector<SignedText> parts;
	for (const auto& [slots, c] : terms) {
		SignedText head = coefficient_term(c, to_text(slots.front()));
		for (std::size_t k = 1; k < slots.size(); ++k)
			head.magnitude += " (x) " + to_text(slots[k]);
		parts.push_back(head);
	}
	return join_signed(parts);
}

} // namespace detail

/// Slots separated by " (x) "; the coefficient attaches to the first slot.
inline std::string to_text(const Tensor2& t)
{
	std::vector<std::pair<std::vector<Monomial>, Scalar>> terms;
	for (const auto& [k, c] : t)
		terms.push_back({{k.first, k.second}, c});
	return detail::tensor_text(std::move(terms));
}

inline std::string to_text(const Tensor3& t)
{
	std::vector<std::pair<std::vector<Monomial>, Scalar>> terms;
	for (const auto& [k, c] : t)
		terms.push_back({{std::get<0>(k), std::get<1>(k), std::get<2>(k)}, c});
	return detail::tensor_text(std::move(terms));
}

} // namespace hqc
