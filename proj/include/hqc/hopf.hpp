#pragma once

// Coproduct, counit and antipode of the Heisenberg quantum group, the adjoint
// coaction and the Hopf-axiom verifiers.
//
//   D(a) = 1(x)a + a(x)1      S(a) = -a        e(a) = 0
//   D(b) = 1(x)b + b(x)1 + a(x)d   S(b) = -b + a d   e(b) = 0
//   D(d) = 1(x)d + d(x)1      S(d) = -d        e(d) = 0

#include "hqc/algebra.hpp"
#include "hqc/format.hpp"
#include "hqc/memo.hpp"
#include "hqc/report.hpp"

#include <array>
#include <string>

namespace hqc {

struct HopfData {
	std::array<Tensor2, 3> delta_on_generators;
	std::array<Scalar, 3> epsilon_on_generators;
	std::array<Element, 3> antipode_on_generators;

	const Tensor2& delta_of(Letter x) const { return delta_on_generators[static_cast<int>(x)]; }
	const Element& antipode_of(Letter x) const { return antipode_on_generators[static_cast<int>(x)]; }
};

inline const HopfData& hopf_data()
{
	static const HopfData data = [] {
		const Element one = unit_element();
		HopfData h;
		h.delta_on_generators[static_cast<int>(Letter::alpha)] = tensor(one, alpha()) + tensor(alpha(), one);
		h.delta_on_generators[static_cast<int>(Letter::beta)] =
			tensor(one, beta()) + tensor(beta(), one) + tensor(alpha(), delta());
		h.delta_on_generators[static_cast<int>(Letter::delta)] = tensor(one, delta()) + tensor(delta(), one);
		h.antipode_on_generators[static_cast<int>(Letter::alpha)] = -alpha();
		h.antipode_on_generators[static_cast<int>(Letter::beta)] = -beta() + alpha() * delta();
		h.antipode_on_generators[static_cast<int>(Letter::delta)] = -delta();
		return h;
	}();
	return data;
}

namespace detail {

/// Splits a non-unit monomial as m = rest * last.
inline std::pair<Monomial, Letter> split_last(Monomial m)
{
	if (m.d > 0) {
		--m.d;
		return {m, Letter::delta};
	}
	if (m.a > 0) {
		--m.a;
		return {m, Letter::alpha};
	}
	--m.b;
	return {m, Letter::beta};
}

inline MemoCache<Monomial, Tensor2>& delta_cache()
{
	static MemoCache<Monomial, Tensor2> cache;
	return cache;
}

inline MemoCache<Monomial, Element>& antipode_cache()
{
	static MemoCache<Monomial, Element> cache;
	return cache;
}

} // namespace detail

/// Coproduct, extended from the generators as an algebra homomorphism.
inline const Tensor2& delta(const Monomial& m)
{
	return detail::delta_cache().get(m, [](const Monomial& key) {
		if (key.is_unit())
			return Tensor2({Monomial::unit(), Monomial::unit()});
		auto [rest, last] = detail::split_last(key);
		return delta(rest) * hopf_data().delta_of(last);
	});
}

inline Tensor2 delta(const Element& x)
{
	Tensor2 out;
	for (const auto& [m, c] : x) {
		Tensor2 t = delta(m);
		out += c * t;
	}
	return out;
}

/// Counit: the coefficient of the unit.
inline Scalar epsilon(const Monomial& m) { return m.is_unit() ? Scalar(1) : Scalar(); }
inline Scalar epsilon(const Element& x) { return counit_coefficient(x); }

/// Antipode, extended as an anti-homomorphism: S(xy) = S(y)S(x).
inline const Element& antipode(const Monomial& m)
{
	return detail::antipode_cache().get(m, [](const Monomial& key) {
		if (key.is_unit())
			return unit_element();
		auto [rest, last] = detail::split_last(key);
		return hopf_data().antipode_of(last) * antipode(rest);
	});
}

inline Element antipode(const Element& x)
{
	Element out;
	for (const auto& [m, c] : x)
		out += c * antipode(m);
	return out;
}

/// (D (x) id) D
inline Tensor3 delta3(const Element& x)
{
	Tensor3 out;
	for (const auto& [k, c] : delta(x))
		for (const auto& [k1, c1] : delta(k.first))
			out.add({k1.first, k1.second, k.second}, c * c1);
	return out;
}

/// (id (x) D) D
inline Tensor3 delta3_right(const Element& x)
{
	Tensor3 out;
	for (const auto& [k, c] : delta(x))
		for (const auto& [k2, c2] : delta(k.second))
			out.add({k.first, k2.first, k2.second}, c * c2);
	return out;
}

/// ad(x) = sum b_k (x) S(a_k) c_k  where (D (x) id) D x = sum a_k (x) b_k (x) c_k.
inline Tensor2 adjoint(const Element& x)
{
	Tensor2 out;
	for (const auto& [k, c] : delta3(x)) {
		const auto& [a, b, cc] = k;
		for (const auto& [m, cm] : antipode(a) * Element(cc))
			out.add({b, m}, c * cm);
	}
	return out;
}

/// (e (x) id) t
inline Element counit_left(const Tensor2& t)
{
	Element out;
	for (const auto& [k, c] : t)
		if (k.first.is_unit())
			out.add(k.second, c);
	return out;
}

/// (id (x) e) t
inline Element counit_right(const Tensor2& t)
{
	Element out;
	for (const auto& [k, c] : t)
		if (k.second.is_unit())
			out.add(k.first, c);
	return out;
}

/// The three defining relations as elements that must vanish in A, written
/// in the free algebra so the structure maps see them unreduced.
inline std::array<std::pair<std::string, FreeElement>, 3> defining_relations()
{
	auto word = [](std::initializer_list<Letter> l) { return Word(l); };
	FreeElement ab;
	ab.add(word({Letter::alpha, Letter::beta}), Scalar(1));
	ab.add(word({Letter::beta, Letter::alpha}), Scalar(-1));
	ab.add(word({Letter::alpha}), -i_lambda());
	FreeElement db;
	db.add(word({Letter::delta, Letter::beta}), Scalar(1));
	db.add(word({Letter::beta, Letter::delta}), Scalar(-1));
	db.add(word({Letter::delta}), -i_lambda());
	FreeElement ad;
	ad.add(word({Letter::alpha, Letter::delta}), Scalar(1));
	ad.add(word({Letter::delta, Letter::alpha}), Scalar(-1));
	return {{{"[a,b]-i*l*a", ab}, {"[d,b]-i*l*d", db}, {"[a,d]", ad}}};
}

namespace detail {

/// Evaluates the homomorphic extension of generator images on a free-algebra
/// element without first normal-ordering it.
template <typename T, typename Image, typename Mul>
T extend_on_words(const FreeElement& x, const T& one, Image image, Mul mul)
{
	T out;
	for (const auto& [w, c] : x) {
		T acc = one;
		for (Letter l : w)
			acc = mul(acc, image(l));
		out += c * acc;
	}
	return out;
}

} // namespace detail

inline VerificationReport verify_hopf_axioms(int max_degree)
{
	if (max_degree < 1)
		throw Error("verify_hopf_axioms requires max_degree >= 1");
	VerificationReport report;
	report.suite = "hopf";
	report.max_degree = max_degree;

	// Generator data against the reference values.
	{
		const HopfData& h = hopf_data();
		const Element one = unit_element();
		bool ok = h.delta_of(Letter::beta) == tensor(one, beta()) + tensor(beta(), one) + tensor(alpha(), delta()) &&
			h.antipode_of(Letter::beta) == alpha() * delta() - beta() &&
			h.antipode_of(Letter::alpha) == -alpha() && h.antipode_of(Letter::delta) == -delta();
		for (Letter l : {Letter::alpha, Letter::beta, Letter::delta})
			ok = ok && epsilon(generator(l)).is_zero();
		report.expect(ok, "eq3.generator_data", "Eq. (3)", "D(b) = " + to_text(h.delta_of(Letter::beta)));
	}

	std::string counit_l, counit_r, coassoc, antipode_l, antipode_r;
	const Element one = unit_element();
	for (const Monomial& m : pbw_monomials(max_degree)) {
		const Element x(m);
		const Tensor2& t = delta(m);
		if (counit_l.empty() && counit_left(t) != x)
			counit_l = to_text(x);
		if (counit_r.empty() && counit_right(t) != x)
			counit_r = to_text(x);
		if (coassoc.empty() && delta3(x) != delta3_right(x))
			coassoc = to_text(x);
		Element expected = epsilon(m) * one;
		Element sl, sr;
		for (const auto& [k, c] : t) {
			sl += c * (antipode(k.first) * Element(k.second));
			sr += c * (Element(k.first) * antipode(k.second));
		}
		if (antipode_l.empty() && sl != expected)
			antipode_l = to_text(x) + " -> " + to_text(sl);
		if (antipode_r.empty() && sr != expected)
			antipode_r = to_text(x) + " -> " + to_text(sr);
	}
	const std::string n = std::to_string(pbw_monomials(max_degree).size()) + " monomials";
	report.expect(counit_l.empty(), "hopf.counit_left", "Eq. (3)", counit_l.empty() ? n : counit_l);
	report.expect(counit_r.empty(), "hopf.counit_right", "Eq. (3)", counit_r.empty() ? n : counit_r);
	report.expect(coassoc.empty(), "hopf.coassociativity", "Eq. (3)", coassoc.empty() ? n : coassoc);
	report.expect(antipode_l.empty(), "hopf.antipode_left", "Eq. (3)", antipode_l.empty() ? n : antipode_l);
	report.expect(antipode_r.empty(), "hopf.antipode_right", "Eq. (3)", antipode_r.empty() ? n : antipode_r);

	// Homomorphism properties on monomial pairs within the degree budget.
	std::string hom, antihom;
	const auto monos = pbw_monomials(max_degree);
	for (const Monomial& m : monos)
		for (const Monomial& k : monos) {
			if (m.degree() + k.degree() > static_cast<unsigned>(max_degree))
				continue;
			Element mk = multiply(m, k);
			if (hom.empty() && delta(mk) != delta(m) * delta(k))
				hom = to_text(Element(m)) + " , " + to_text(Element(k));
			if (antihom.empty() && antipode(mk) != antipode(k) * antipode(m))
				antihom = to_text(Element(m)) + " , " + to_text(Element(k));
		}
	report.expect(hom.empty(), "hopf.delta_homomorphism", "Eq. (3)", hom);
	report.expect(antihom.empty(), "hopf.antipode_antihomomorphism", "Eq. (3)", antihom);

	// Well-definedness: D, e, S kill the defining relations.
	const HopfData& h = hopf_data();
	for (const auto& [name, rel] : defining_relations()) {
		Tensor2 d = detail::extend_on_words<Tensor2>(
			rel, Tensor2({Monomial::unit(), Monomial::unit()}), [&](Letter l) { return h.delta_of(l); },
			[](const Tensor2& x, const Tensor2& y) { return x * y; });
		Scalar e = detail::extend_on_words<Scalar>(
			rel, Scalar(1), [](Letter) { return Scalar(); }, [](const Scalar& x, const Scalar& y) { return x * y; });
		Element s = detail::extend_on_words<Element>(
			rel, one, [&](Letter l) { return h.antipode_of(l); },
			[](const Element& x, const Element& y) { return y * x; });
		report.expect(d.is_zero(), "relations.delta " + name, "Eq. (2)", to_text(d));
		report.expect(e.is_zero(), "relations.epsilon " + name, "Eq. (2)", to_text(e));
		report.expect(s.is_zero(), "relations.antipode " + name, "Eq. (2)", to_text(s));
	}
	return report;
}

/// T = ((1, a, b), (0, 1, d), (0, 0, 1)) as Elements.
inline std::array<std::array<Element, 3>, 3> heisenberg_matrix()
{
	std::array<std::array<Element, 3>, 3> t{};
	for (int k = 0; k < 3; ++k)
		t[k][k] = unit_element();
	t[0][1] = alpha();
	t[0][2] = beta();
	t[1][2] = delta();
	return t;
}

/// D(T_ij) = sum_k T_ik (x) T_kj for all nine entries, and T S(T) = 1.
inline VerificationReport verify_matrix_coproduct()
{
	VerificationReport report;
	report.suite = "hopf";
	const auto t = heisenberg_matrix();
	std::string bad;
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j) {
			Tensor2 rhs;
			for (int k = 0; k < 3; ++k)
				rhs += tensor(t[i][k], t[k][j]);
			if (delta(t[i][j]) != rhs)
				bad += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") ";
		}
	report.expect(bad.empty(), "eq1.matrix_coproduct", "Eq. (1)",
		bad.empty() ? "D(T_13) = " + to_text(delta(t[0][2])) : "mismatch at " + bad);

	std::string inv;
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j) {
			Element sum;
			for (int k = 0; k < 3; ++k)
				sum += t[i][k] * antipode(t[k][j]);
			if (sum != (i == j ? unit_element() : Element()))
				inv += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") ";
		}
	report.expect(inv.empty(), "eq1.antipode_is_matrix_inverse", "Eq. (1)",
		inv.empty() ? "S(T_13) = " + to_text(antipode(t[0][2])) : "mismatch at " + inv);
	return report;
}

} // namespace hqc
