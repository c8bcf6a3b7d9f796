#pragma once

// The algebra A generated by a (alpha), b (beta), d (delta) subject to
//   a b = b a + i l a,   d b = b d + i l d,   d a = a d,
// with PBW basis b^k a^m d^n (letter order b < a < d).

#include "hqc/scalar.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

namespace hqc {

enum class Letter : std::uint8_t { beta = 0, alpha = 1, delta = 2 };

using Word = std::vector<Letter>;

/// b^b a^a d^d; the zero triple is the unit I.
struct Monomial {
	unsigned b = 0;
	unsigned a = 0;
	unsigned d = 0;

	unsigned degree() const { return a + b + d; }
	bool is_unit() const { return a == 0 && b == 0 && d == 0; }

	static Monomial unit() { return {}; }
	static Monomial of(Letter x)
	{
		switch (x) {
		case Letter::beta: return {1, 0, 0};
		case Letter::alpha: return {0, 1, 0};
		case Letter::delta: return {0, 0, 1};
		}
		return {};
	}

	friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Graded order used for enumeration and printing: total degree first, then
/// larger b, then larger a. pbw_monomials() lists in ascending order.
inline bool graded_less(const Monomial& x, const Monomial& y)
{
	if (x.degree() != y.degree())
		return x.degree() < y.degree();
	return std::tie(y.b, y.a, y.d) < std::tie(x.b, x.a, x.d);
}

/// Finite Scalar-weighted combination of basis keys with no zero entries.
template <typename Key>
class LinearCombination {
public:
	using Terms = std::map<Key, Scalar>;

	LinearCombination() = default;
	explicit LinearCombination(const Key& k, const Scalar& c = Scalar(1)) { add(k, c); }

	void add(const Key& k, const Scalar& c)
	{
		if (c.is_zero())
			return;
		auto [it, inserted] = terms_.try_emplace(k, c);
		if (!inserted) {
			it->second += c;
			if (it->second.is_zero())
				terms_.erase(it);
		}
	}

	const Terms& terms() const { return terms_; }
	auto begin() const { return terms_.begin(); }
	auto end() const { return terms_.end(); }
	std::size_t size() const { return terms_.size(); }
	bool is_zero() const { return terms_.empty(); }

	Scalar coefficient(const Key& k) const
	{
		auto it = terms_.find(k);
		return it == terms_.end() ? Scalar() : it->second;
	}

	LinearCombination& operator+=(const LinearCombination& o)
	{
		for (const auto& [k, c] : o.terms_)
			add(k, c);
		return *this;
	}
	LinearCombination& operator-=(const LinearCombination& o)
	{
		for (const auto& [k, c] : o.terms_)
			add(k, -c);
		return *this;
	}
	LinearCombination& operator*=(const Scalar& s)
	{
		if (s.is_zero()) {
			terms_.clear();
			return *this;
		}
		for (auto& [k, c] : terms_)
			c *= s;
		return *this;
	}

	friend LinearCombination operator+(LinearCombination x, const LinearCombination& y) { return x += y; }
	friend LinearCombination operator-(LinearCombination x, const LinearCombination& y) { return x -= y; }
	friend LinearCombination operator-(LinearCombination x) { return x *= Scalar(-1); }
	friend LinearCombination operator*(const Scalar& s, LinearCombination x) { return x *= s; }

	friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

private:
	Terms terms_;
};

using Element = LinearCombination<Monomial>;
using Tensor2 = LinearCombination<std::pair<Monomial, Monomial>>;
using Tensor3 = LinearCombination<std::tuple<Monomial, Monomial, Monomial>>;

inline Element unit_element(const Scalar& c = Scalar(1)) { return Element(Monomial::unit(), c); }
inline Element generator(Letter x) { return Element(Monomial::of(x)); }
inline Element alpha() { return generator(Letter::alpha); }
inline Element beta() { return generator(Letter::beta); }
inline Element delta() { return generator(Letter::delta); }

/// i*l, the structure constant of both nontrivial relations.
inline Scalar i_lambda() { return Scalar::i() * Scalar::lambda(); }

// ---------------------------------------------------------------------------
// Letter-level rewriting (the defining presentation).

/// Elements of the free algebra on {a, b, d}: combinations of words.
using FreeElement = LinearCombination<Word>;

/// True if positions (p, p+1) of w form a rewritable pair.
inline bool is_redex(const Word& w, std::size_t p)
{
	if (p + 1 >= w.size())
		return false;
	Letter x = w[p], y = w[p + 1];
	return (x == Letter::alpha && y == Letter::beta) || (x == Letter::delta && y == Letter::beta) ||
		(x == Letter::delta && y == Letter::alpha);
}

inline std::vector<std::size_t> redexes(const Word& w)
{
	std::vector<std::size_t> out;
	for (std::size_t p = 0; p + 1 < w.size(); ++p)
		if (is_redex(w, p))
			out.push_back(p);
	return out;
}

/// One rewriting step at position p:
///   a b -> b a + i l a,  d b -> b d + i l d,  d a -> a d.
inline FreeElement rewrite_at(const Word& w, std::size_t p)
{
	if (!is_redex(w, p))
		throw Error("rewrite_at: no redex at given position");
	FreeElement out;
	Word swapped = w;
	std::swap(swapped[p], swapped[p + 1]);
	out.add(swapped, Scalar(1));
	if (w[p + 1] == Letter::beta) {
		Word shorter = w;
		shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(p) + 1);
		out.add(shorter, i_lambda());
	}
	return out;
}

enum class RewriteStrategy { leftmost, rightmost, random };

inline Monomial monomial_of_sorted_word(const Word& w)
{
	Monomial m;
	for (Letter x : w) {
		switch (x) {
		case Letter::beta: ++m.b; break;
		case Letter::alpha: ++m.a; break;
		case Letter::delta: ++m.d; break;
		}
	}
	return m;
}

inline Word word_of(const Monomial& m)
{
	Word w(m.b, Letter::beta);
	w.insert(w.end(), m.a, Letter::alpha);
	w.insert(w.end(), m.d, Letter::delta);
	return w;
}

/// Normal-orders a free-algebra combination by exhaustive rewriting.
/// Each rule strictly decreases inversions or length, so this terminates.
inline Element normal_form(FreeElement x, RewriteStrategy strategy = RewriteStrategy::leftmost,
	std::uint64_t seed = 0)
{
	std::mt19937_64 rng(seed);
	Element result;
	while (!x.is_zero()) {
		auto [word, coeff] = *x.begin();
		auto positions = redexes(word);
		x.add(word, -coeff);
		if (positions.empty()) {
			result.add(monomial_of_sorted_word(word), coeff);
			continue;
		}
		std::size_t p = positions.front();
		if (strategy == RewriteStrategy::rightmost) {
			p = positions.back();
		} else if (strategy == RewriteStrategy::random) {
			std::uniform_int_distribution<std::size_t> pick(0, positions.size() - 1);
			p = positions[pick(rng)];
		}
		for (const auto& [w, c] : rewrite_at(word, p))
			x.add(w, coeff * c);
	}
	return result;
}

inline Element normal_form(const Word& w, RewriteStrategy strategy = RewriteStrategy::leftmost,
	std::uint64_t seed = 0)
{
	return normal_form(FreeElement(w), strategy, seed);
}

// ---------------------------------------------------------------------------
// PBW multiplication.

/// (b^b1 a^a1 d^d1)(b^b2 a^a2 d^d2) = b^b1 (b + i l (a1+d1))^b2 a^(a1+a2) d^(d1+d2),
/// since a and d each shift b by i l when moved across it.
inline Element multiply(const Monomial& x, const Monomial& y)
{
	Element out;
	const unsigned shift = x.a + x.d;
	Scalar step = Scalar(static_cast<long>(shift)) * i_lambda();
	Rational binom(1);
	for (unsigned k = 0; k <= y.b; ++k) {
		// C(y.b, k) * step^(y.b - k) * b^(x.b + k)
		Scalar c = Scalar(binom) * step.pow(y.b - k);
		out.add({x.b + k, x.a + y.a, x.d + y.d}, c);
		binom *= Rational(y.b - k);
		binom /= Rational(k + 1);
	}
	return out;
}

inline Element multiply(const Element& x, const Element& y)
{
	Element out;
	for (const auto& [mx, cx] : x)
		for (const auto& [my, cy] : y) {
			Scalar c = cx * cy;
			for (const auto& [m, cm] : multiply(mx, my))
				out.add(m, c * cm);
		}
	return out;
}

inline Element operator*(const Element& x, const Element& y) { return multiply(x, y); }

inline Element power(const Element& x, unsigned n)
{
	Element r = unit_element();
	for (unsigned k = 0; k < n; ++k)
		r = r * x;
	return r;
}

inline Scalar counit_coefficient(const Element& x) { return x.coefficient(Monomial::unit()); }

// ---------------------------------------------------------------------------
// Tensor powers.

inline Tensor2 tensor(const Element& x, const Element& y)
{
	Tensor2 out;
	for (const auto& [mx, cx] : x)
		for (const auto& [my, cy] : y)
			out.add({mx, my}, cx * cy);
	return out;
}

inline Tensor3 tensor(const Element& x, const Element& y, const Element& z)
{
	Tensor3 out;
	for (const auto& [mx, cx] : x)
		for (const auto& [my, cy] : y)
			for (const auto& [mz, cz] : z)
				out.add({mx, my, mz}, cx * cy * cz);
	return out;
}

/// (a (x) b)(c (x) d) = ac (x) bd, extended bilinearly.
inline Tensor2 tensor_multiply2(const Tensor2& x, const Tensor2& y)
{
	Tensor2 out;
	for (const auto& [kx, cx] : x)
		for (const auto& [ky, cy] : y) {
			Scalar c = cx * cy;
			Element left = multiply(kx.first, ky.first);
			Element right = multiply(kx.second, ky.second);
			for (const auto& [ml, cl] : left)
				for (const auto& [mr, cr] : right)
					out.add({ml, mr}, c * cl * cr);
		}
	return out;
}

inline Tensor3 tensor_multiply3(const Tensor3& x, const Tensor3& y)
{
	Tensor3 out;
	for (const auto& [kx, cx] : x)
		for (const auto& [ky, cy] : y) {
			Scalar c = cx * cy;
			Element s0 = multiply(std::get<0>(kx), std::get<0>(ky));
			Element s1 = multiply(std::get<1>(kx), std::get<1>(ky));
			Element s2 = multiply(std::get<2>(kx), std::get<2>(ky));
			for (const auto& [m0, c0] : s0)
				for (const auto& [m1, c1] : s1)
					for (const auto& [m2, c2] : s2)
						out.add({m0, m1, m2}, c * c0 * c1 * c2);
		}
	return out;
}

inline Tensor2 operator*(const Tensor2& x, const Tensor2& y) { return tensor_multiply2(x, y); }
inline Tensor3 operator*(const Tensor3& x, const Tensor3& y) { return tensor_multiply3(x, y); }

/// Applies linear maps slotwise: (f (x) g)(t).
template <typename F, typename G>
Tensor2 map_slots(const Tensor2& t, F&& f, G&& g)
{
	Tensor2 out;
	for (const auto& [k, c] : t)
		for (const auto& [m0, c0] : f(k.first))
			for (const auto& [m1, c1] : g(k.second))
				out.add({m0, m1}, c * c0 * c1);
	return out;
}

/// mult: A (x) A -> A.
inline Element contract(const Tensor2& t)
{
	Element out;
	for (const auto& [k, c] : t)
		out += c * multiply(k.first, k.second);
	return out;
}

inline Tensor2 flip(const Tensor2& t)
{
	Tensor2 out;
	for (const auto& [k, c] : t)
		out.add({k.second, k.first}, c);
	return out;
}

/// All PBW monomials of total degree <= max_degree, in graded order.
inline std::vector<Monomial> pbw_monomials(int max_degree)
{
	std::vector<Monomial> out;
	for (int n = 0; n <= max_degree; ++n)
		for (int b = n; b >= 0; --b)
			for (int a = n - b; a >= 0; --a)
				out.push_back({static_cast<unsigned>(b), static_cast<unsigned>(a),
					static_cast<unsigned>(n - b - a)});
	return out;
}

/// Sets l := value in every coefficient.
inline Element specialize_lambda(const Element& x, const GaussRational& value)
{
	Element out;
	for (const auto& [m, c] : x)
		out.add(m, Scalar(c.evaluate(value)));
	return out;
}

// ---------------------------------------------------------------------------
// Classical-limit matrix oracle.

using Matrix3 = std::array<std::array<GaussRational, 3>, 3>;

inline Matrix3 identity_matrix()
{
	Matrix3 m{};
	for (int k = 0; k < 3; ++k)
		m[k][k] = GaussRational(1);
	return m;
}

inline Matrix3 operator*(const Matrix3& x, const Matrix3& y)
{
	Matrix3 r{};
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j)
			for (int k = 0; k < 3; ++k)
				r[i][j] += x[i][k] * y[k][j];
	return r;
}

inline Matrix3 operator+(Matrix3 x, const Matrix3& y)
{
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j)
			x[i][j] += y[i][j];
	return x;
}

inline Matrix3 scaled(Matrix3 x, const GaussRational& s)
{
	for (auto& row : x)
		for (auto& e : row)
			e *= s;
	return x;
}

/// Image of a generator in the commutative algebra of upper-triangular
/// Toeplitz matrices c0 I + c1 J + c2 J^2 (J the nilpotent shift).
inline Matrix3 letter_matrix(Letter x)
{
	auto toeplitz = [](long c0, long c1, long c2) {
		Matrix3 m{};
		for (int k = 0; k < 3; ++k)
			m[k][k] = GaussRational(c0);
		m[0][1] = m[1][2] = GaussRational(c1);
		m[0][2] = GaussRational(c2);
		return m;
	};
	switch (x) {
	case Letter::alpha: return toeplitz(2, 1, 0);
	case Letter::beta: return toeplitz(3, 0, 1);
	case Letter::delta: return toeplitz(5, 1, 1);
	}
	return identity_matrix();
}

/// Algebra homomorphism A|_{l=0} -> upper-triangular 3x3 matrices. Only the
/// commutative specialization l = 0 is represented.
inline Matrix3 matrix_representation(const Element& x, const GaussRational& lambda_value)
{
	if (!lambda_value.is_zero())
		throw DomainError("matrix_representation is only defined at l = 0");
	Matrix3 result{};
	for (const auto& [m, c] : x) {
		GaussRational value = c.evaluate(lambda_value);
		if (value.is_zero())
			continue;
		Matrix3 image = identity_matrix();
		for (Letter letter : word_of(m))
			image = image * letter_matrix(letter);
		result = result + scaled(image, value);
	}
	return result;
}

} // namespace hqc
