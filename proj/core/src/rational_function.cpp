#include "skein/rational_function.hpp"

#include <limits>

#include "lexer.hpp"

namespace skein {

RationalFunction::RationalFunction(const LaurentPoly& n, const LaurentPoly& d) : num_(n), den_(d) {
  normalize();
}

RationalFunction RationalFunction::monomial(const Rational& c, Exponent k) {
  return RationalFunction(LaurentPoly::monomial(c, k));
}

RationalFunction RationalFunction::quantum_difference(Exponent k) {
  return RationalFunction(LaurentPoly::var_power(k) - LaurentPoly::var_power(-k));
}

void RationalFunction::normalize() {
  if (den_.is_zero()) throw ArithmeticError("division by zero in Q(A)");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  const Exponent den_shift = den_.min_exponent();
  if (den_shift != 0) {
    den_ = den_.shifted(-den_shift);
    num_ = num_.shifted(-den_shift);
  }
  if (den_.size() == 1) {
    // constant denominator after the shift
    num_ = num_.scaled(1 / den_.leading_coefficient());
    den_ = LaurentPoly(1);
    return;
  }
  const Exponent num_shift = num_.min_exponent();
  LaurentPoly n = num_.shifted(-num_shift);
  LaurentPoly g = poly_gcd(n, den_);
  if (!g.is_one()) {
    n = poly_exact_div(n, g);
    den_ = poly_exact_div(den_, g);
  }
  const Rational lead = den_.leading_coefficient();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    n = n.scaled(inv);
    den_ = den_.scaled(inv);
  }
  num_ = n.shifted(num_shift);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero in Q(A)");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(Exponent k) const {
  if (k < 0) return inverse().pow(-k);
  RationalFunction result(1);
  RationalFunction base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (den_.is_one() && rhs.den_.is_one()) {
    num_ += rhs.num_;
    return *this;
  }
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  if (den_.is_one() && rhs.den_.is_one()) {
    num_ *= rhs.num_;
    return *this;
  }
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero()) throw ArithmeticError("division by zero in Q(A)");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw ArithmeticError("unknown arithmetic operation");
}

namespace {

using detail::Lexer;
using detail::Tok;

Exponent parse_exponent(Lexer& lex) {
  bool negative = false;
  while (lex.peek().kind == Tok::Minus || lex.peek().kind == Tok::Plus) {
    negative ^= lex.next().kind == Tok::Minus;
  }
  if (lex.peek().kind != Tok::Integer) lex.fail("expected an integer exponent");
  const mpz_class value(lex.peek().text);
  if (!value.fits_slong_p()) lex.fail("exponent out of range");
  lex.next();
  const Exponent e = value.get_si();
  return negative ? -e : e;
}

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : lex_(text) {}

  RationalFunction parse() {
    RationalFunction value = expr();
    if (lex_.peek().kind != Tok::End) lex_.fail("unexpected token");
    return value;
  }

 private:
  RationalFunction expr() {
    RationalFunction value = term();
    for (;;) {
      if (lex_.accept(Tok::Plus)) {
        value += term();
      } else if (lex_.accept(Tok::Minus)) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  RationalFunction term() {
    RationalFunction value = unary();
    for (;;) {
      if (lex_.accept(Tok::Star)) {
        value *= unary();
      } else if (lex_.accept(Tok::Slash)) {
        RationalFunction rhs = unary();
        if (rhs.is_zero()) lex_.fail("division by zero");
        value /= rhs;
      } else {
        return value;
      }
    }
  }

  RationalFunction unary() {
    if (lex_.accept(Tok::Minus)) return -unary();
    if (lex_.accept(Tok::Plus)) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (!lex_.accept(Tok::Caret)) return base;
    const Exponent e = parse_exponent(lex_);
    if (e < 0 && base.is_zero()) lex_.fail("negative power of zero");
    return base.pow(e);
  }

  RationalFunction primary() {
    const auto& tok = lex_.peek();
    switch (tok.kind) {
      case Tok::Integer: {
        Rational value{mpz_class(tok.text)};
        lex_.next();
        return RationalFunction(value);
      }
      case Tok::Ident:
        if (tok.text != "A") lex_.fail("unknown identifier");
        lex_.next();
        return RationalFunction::var_power(1);
      case Tok::LParen: {
        lex_.next();
        RationalFunction value = expr();
        lex_.expect(Tok::RParen, "')'");
        return value;
      }
      default:
        lex_.fail("expected a number, 'A' or '('");
    }
  }

  Lexer lex_;
};

}  // namespace

RationalFunction parse_rational_function(std::string_view text) {
  return ScalarParser(text).parse();
}

}  // namespace skein
