#pragma once

// Expressions over A:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' nat)?
//   atom   := rational | 'i' | 'l' | generator | '1' | '(' expr ')'
// with a leading '-' allowed on a term. Generators are a|alpha, b|beta,
// d|delta. Products keep their left-to-right order.

#include "hqc/algebra.hpp"
#include "hqc/scalar.hpp"

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace hqc {

class ParseError : public Error {
public:
	ParseError(std::size_t position, const std::string& message)
		: Error("parse error at " + std::to_string(position) + ": " + message), position_(position)
	{
	}
	std::size_t position() const { return position_; }

private:
	std::size_t position_;
};

struct Expr {
	enum class Kind { sum, difference, negate, product, power, rational, imaginary, lambda, generator };

	Kind kind;
	std::vector<Expr> children;
	Rational value;
	Letter letter = Letter::alpha;
	unsigned exponent = 0;

	static Expr leaf(Kind k) { return Expr{k, {}, {}, Letter::alpha, 0}; }
};

namespace detail {

class Parser {
public:
	explicit Parser(std::string_view src) : src_(src) {}

	Expr parse()
	{
		Expr e = expr();
		skip();
		if (pos_ != src_.size())
			throw ParseError(pos_, std::string("unexpected '") + src_[pos_] + "'");
		return e;
	}

private:
	void skip()
	{
		while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
			++pos_;
	}

	bool accept(char c)
	{
		skip();
		if (pos_ < src_.size() && src_[pos_] == c) {
			++pos_;
			return true;
		}
		return false;
	}

	Expr expr()
	{
		Expr e = signed_term();
		for (;;) {
			if (accept('+'))
				e = Expr{Expr::Kind::sum, {std::move(e), term()}, {}, Letter::alpha, 0};
			else if (accept('-'))
				e = Expr{Expr::Kind::difference, {std::move(e), term()}, {}, Letter::alpha, 0};
			else
				return e;
		}
	}

	Expr signed_term()
	{
		if (accept('-'))
			return Expr{Expr::Kind::negate, {term()}, {}, Letter::alpha, 0};
		return term();
	}

	Expr term()
	{
		Expr e = factor();
		while (accept('*'))
			e = Expr{Expr::Kind::product, {std::move(e), factor()}, {}, Letter::alpha, 0};
		return e;
	}

	Expr factor()
	{
		Expr e = atom();
		if (accept('^')) {
			skip();
			std::size_t start = pos_;
			while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
				++pos_;
			if (start == pos_)
				throw ParseError(start, "expected exponent");
			if (pos_ - start > 6)
				throw ParseError(start, "exponent too large");
			e = Expr{Expr::Kind::power, {std::move(e)}, {}, Letter::alpha,
				static_cast<unsigned>(std::stoul(std::string(src_.substr(start, pos_ - start))))};
		}
		return e;
	}

	Expr atom()
	{
		skip();
		if (pos_ >= src_.size())
			throw ParseError(pos_, "unexpected end of input");
		const char c = src_[pos_];
		if (c == '(') {
			++pos_;
			Expr e = expr();
			if (!accept(')'))
				throw ParseError(pos_, "expected ')'");
			return e;
		}
		if (std::isdigit(static_cast<unsigned char>(c)))
			return number();
		if (std::isalpha(static_cast<unsigned char>(c)))
			return identifier();
		throw ParseError(pos_, std::string("unexpected '") + c + "'");
	}

	Expr number()
	{
		std::size_t start = pos_;
		while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
			++pos_;
		if (pos_ + 1 < src_.size() && src_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
			++pos_;
			while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
				++pos_;
		}
		Expr e = Expr::leaf(Expr::Kind::rational);
		try {
			e.value = parse_rational(std::string(src_.substr(start, pos_ - start)));
		} catch (const Error& err) {
			throw ParseError(start, err.what());
		}
		return e;
	}

	Expr identifier()
	{
		std::size_t start = pos_;
		while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_])))
			++pos_;
		const std::string_view name = src_.substr(start, pos_ - start);
		if (name == "i")
			return Expr::leaf(Expr::Kind::imaginary);
		if (name == "l")
			return Expr::leaf(Expr::Kind::lambda);
		Expr e = Expr::leaf(Expr::Kind::generator);
		if (name == "a" || name == "alpha")
			e.letter = Letter::alpha;
		else if (name == "b" || name == "beta")
			e.letter = Letter::beta;
		else if (name == "d" || name == "delta")
			e.letter = Letter::delta;
		else
			throw ParseError(start, "unknown identifier '" + std::string(name) + "'");
		return e;
	}

	std::string_view src_;
	std::size_t pos_ = 0;
};

} // namespace detail

inline Expr parse(std::string_view src) { return detail::Parser(src).parse(); }

inline Element evaluate(const Expr& e)
{
	switch (e.kind) {
	case Expr::Kind::sum: return evaluate(e.children[0]) + evaluate(e.children[1]);
	case Expr::Kind::difference: return evaluate(e.children[0]) - evaluate(e.children[1]);
	case Expr::Kind::negate: return -evaluate(e.children[0]);
	case Expr::Kind::product: return evaluate(e.children[0]) * evaluate(e.children[1]);
	case Expr::Kind::power: return power(evaluate(e.children[0]), e.exponent);
	case Expr::Kind::rational: return unit_element(Scalar(e.value));
	case Expr::Kind::imaginary: return unit_element(Scalar::i());
	case Expr::Kind::lambda: return unit_element(Scalar::lambda());
	case Expr::Kind::generator: return generator(e.letter);
	}
	return {};
}

inline Element parse_element(std::string_view src) { return evaluate(parse(src)); }

} // namespace hqc
