#pragma once

// Exact coefficient ring Q(i)[l]: Gaussian rationals extended by a central
// formal parameter l (the deformation parameter).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace hqc {

using Rational = mpq_class;

/// Base class for all errors raised by the engine.
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// A precondition on the mathematical domain was violated (division by a
/// non-constant scalar, pi applied outside its domain, ...).
class DomainError : public Error {
public:
	using Error::Error;
};

inline Rational make_rational(long num, long den = 1)
{
	if (den == 0)
		throw DomainError("zero denominator");
	Rational q(num, den);
	q.canonicalize();
	return q;
}

inline Rational parse_rational(const std::string& text)
{
	Rational q;
	if (q.set_str(text, 10) != 0)
		throw Error("malformed rational '" + text + "'");
	if (q.get_den() == 0)
		throw DomainError("zero denominator in '" + text + "'");
	q.canonicalize();
	return q;
}

/// "num/den", always with an explicit denominator.
inline std::string rational_fraction_text(const Rational& q)
{
	return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// re + im*i with re, im rational. gmp keeps both parts in lowest terms.
class GaussRational {
public:
	GaussRational() = default;
	GaussRational(long re) : re_(re) {}
	GaussRational(Rational re, Rational im = Rational(0)) : re_(std::move(re)), im_(std::move(im)) {}

	static GaussRational imaginary_unit() { return {Rational(0), Rational(1)}; }

	const Rational& re() const { return re_; }
	const Rational& im() const { return im_; }

	bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
	bool is_real() const { return sgn(im_) == 0; }
	bool is_imaginary() const { return sgn(re_) == 0; }

	GaussRational conj() const { return {re_, Rational(-im_)}; }

	GaussRational inverse() const
	{
		if (is_zero())
			throw DomainError("inverse of zero Gaussian rational");
		Rational norm = re_ * re_ + im_ * im_;
		return {Rational(re_ / norm), Rational(-im_ / norm)};
	}

	GaussRational& operator+=(const GaussRational& o)
	{
		re_ += o.re_;
		im_ += o.im_;
		return *this;
	}
	GaussRational& operator-=(const GaussRational& o)
	{
		re_ -= o.re_;
		im_ -= o.im_;
		return *this;
	}
	GaussRational& operator*=(const GaussRational& o)
	{
		Rational re = re_ * o.re_ - im_ * o.im_;
		Rational im = re_ * o.im_ + im_ * o.re_;
		re_ = std::move(re);
		im_ = std::move(im);
		return *this;
	}
	GaussRational& operator/=(const GaussRational& o) { return *this *= o.inverse(); }

	friend GaussRational operator+(GaussRational x, const GaussRational& y) { return x += y; }
	friend GaussRational operator-(GaussRational x, const GaussRational& y) { return x -= y; }
	friend GaussRational operator*(GaussRational x, const GaussRational& y) { return x *= y; }
	friend GaussRational operator/(GaussRational x, const GaussRational& y) { return x /= y; }
	friend GaussRational operator-(const GaussRational& x) { return {Rational(-x.re_), Rational(-x.im_)}; }

	friend bool operator==(const GaussRational& x, const GaussRational& y)
	{
		return x.re_ == y.re_ && x.im_ == y.im_;
	}

private:
	Rational re_{0};
	Rational im_{0};
};

/// Polynomial in l with Gaussian-rational coefficients, stored sparsely with
/// no zero coefficients. Structural equality is mathematical equality.
class Scalar {
public:
	using Terms = std::map<unsigned, GaussRational>;

	Scalar() = default;
	Scalar(long c) : Scalar(GaussRational(c)) {}
	Scalar(const Rational& c) : Scalar(GaussRational(c)) {}
	Scalar(const GaussRational& c, unsigned lambda_power = 0)
	{
		if (!c.is_zero())
			coeffs_.emplace(lambda_power, c);
	}

	static Scalar lambda(unsigned power = 1) { return Scalar(GaussRational(1), power); }
	static Scalar i() { return Scalar(GaussRational::imaginary_unit()); }

	/// Builds from arbitrary (possibly zero, possibly repeated) terms.
	static Scalar from_terms(const std::map<unsigned, GaussRational>& terms)
	{
		Scalar s;
		for (const auto& [k, c] : terms)
			if (!c.is_zero())
				s.coeffs_.emplace(k, c);
		return s;
	}

	const Terms& terms() const { return coeffs_; }
	bool is_zero() const { return coeffs_.empty(); }
	bool is_constant() const { return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0); }
	bool is_one() const { return is_constant() && !is_zero() && coeffs_.begin()->second == GaussRational(1); }

	/// Highest l-power present; 0 for the zero scalar.
	unsigned degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

	GaussRational coefficient(unsigned lambda_power) const
	{
		auto it = coeffs_.find(lambda_power);
		return it == coeffs_.end() ? GaussRational() : it->second;
	}
	GaussRational constant_term() const { return coefficient(0); }

	/// Substitutes a value for l.
	GaussRational evaluate(const GaussRational& lambda_value) const
	{
		GaussRational result;
		GaussRational power(1);
		unsigned k = 0;
		for (const auto& [e, c] : coeffs_) {
			for (; k < e; ++k)
				power *= lambda_value;
			result += c * power;
		}
		return result;
	}

	Scalar& operator+=(const Scalar& o)
	{
		for (const auto& [k, c] : o.coeffs_)
			accumulate(k, c);
		return *this;
	}
	Scalar& operator-=(const Scalar& o)
	{
		for (const auto& [k, c] : o.coeffs_)
			accumulate(k, -c);
		return *this;
	}
	Scalar& operator*=(const Scalar& o)
	{
		*this = *this * o;
		return *this;
	}

	friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
	friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
	friend Scalar operator-(const Scalar& x)
	{
		Scalar r;
		for (const auto& [k, c] : x.coeffs_)
			r.coeffs_.emplace(k, -c);
		return r;
	}
	friend Scalar operator*(const Scalar& x, const Scalar& y)
	{
		Scalar r;
		for (const auto& [i, a] : x.coeffs_)
			for (const auto& [j, b] : y.coeffs_)
				r.accumulate(i + j, a * b);
		return r;
	}

	/// Division is only defined by constant (l-free) nonzero scalars.
	Scalar divided_by(const Scalar& divisor) const
	{
		if (divisor.is_zero())
			throw DomainError("division by zero scalar");
		if (!divisor.is_constant())
			throw DomainError("division by a scalar of positive l-degree");
		GaussRational inv = divisor.constant_term().inverse();
		Scalar r;
		for (const auto& [k, c] : coeffs_)
			r.coeffs_.emplace(k, c * inv);
		return r;
	}

	Scalar pow(unsigned n) const
	{
		Scalar result(1);
		Scalar base = *this;
		while (n != 0) {
			if (n & 1u)
				result *= base;
			n >>= 1u;
			if (n != 0)
				base *= base;
		}
		return result;
	}

	friend bool operator==(const Scalar& x, const Scalar& y) { return x.coeffs_ == y.coeffs_; }

private:
	void accumulate(unsigned k, const GaussRational& c)
	{
		if (c.is_zero())
			return;
		auto [it, inserted] = coeffs_.try_emplace(k, c);
		if (!inserted) {
			it->second += c;
			if (it->second.is_zero())
				coeffs_.erase(it);
		}
	}

	Terms coeffs_;
};

/// s(s-1)...(s-n+1)/n!
inline GaussRational binomial_coefficient(const Rational& s, unsigned n)
{
	Rational result(1);
	for (unsigned k = 0; k < n; ++k) {
		result *= Rational(s - k);
		result /= Rational(k + 1);
	}
	return GaussRational(result);
}

} // namespace hqc
