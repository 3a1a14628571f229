#include "skein/expression.hpp"

#include <optional>

#include "lexer.hpp"

namespace skein {

namespace {

using detail::Lexer;
using detail::Tok;
using detail::Token;

// non-scalar powers beyond this are almost certainly a typo
constexpr std::int64_t kMaxPower = 256;

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view src) : lex_(src) {}

  SkeinT2Element parse() {
    SkeinT2Element value = expr();
    if (lex_.peek().kind != Tok::End) lex_.fail("unexpected token");
    return value;
  }

 private:
  SkeinT2Element expr() {
    SkeinT2Element value = term();
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

  SkeinT2Element term() {
    SkeinT2Element value = unary();
    for (;;) {
      if (lex_.accept(Tok::Star)) {
        value = fg_product(value, unary());
      } else if (lex_.peek().kind == Tok::Slash) {
        const Token op = lex_.next();
        const SkeinT2Element rhs = unary();
        if (!rhs.is_scalar()) throw ParseError("divisor is not a scalar", op.line, op.column, op.text);
        if (rhs.is_zero()) throw ParseError("division by zero", op.line, op.column, op.text);
        value *= rhs.coefficient(CurveLabel::empty()).inverse();
      } else {
        return value;
      }
    }
  }

  SkeinT2Element unary() {
    if (lex_.accept(Tok::Minus)) return -unary();
    if (lex_.accept(Tok::Plus)) return unary();
    return power();
  }

  SkeinT2Element power() {
    SkeinT2Element base = primary();
    if (lex_.peek().kind != Tok::Caret) return base;
    const Token op = lex_.next();
    const std::int64_t e = signed_integer("expected an integer exponent");
    if (base.is_scalar()) {
      const RationalFunction c = base.coefficient(CurveLabel::empty());
      if (e < 0 && c.is_zero()) throw ParseError("negative power of zero", op.line, op.column, op.text);
      return SkeinT2Element(c.pow(e));
    }
    if (e < 0) throw ParseError("negative power of a non-scalar", op.line, op.column, op.text);
    if (e > kMaxPower) throw ParseError("exponent too large", op.line, op.column, op.text);
    SkeinT2Element out(RationalFunction(1));
    for (std::int64_t i = 0; i < e; ++i) out = fg_product(out, base);
    return out;
  }

  SkeinT2Element primary() {
    const Token tok = lex_.peek();
    switch (tok.kind) {
      case Tok::Integer:
        lex_.next();
        return SkeinT2Element(RationalFunction(Rational(mpz_class(tok.text))));
      case Tok::Ident:
        lex_.next();
        if (tok.text == "A") return SkeinT2Element(RationalFunction::var_power(1));
        if (tok.text == "empty") return SkeinT2Element(RationalFunction(1));
        throw ParseError("unknown identifier", tok.line, tok.column, tok.text);
      case Tok::LParen: {
        if (auto curve = try_curve()) return *curve;
        lex_.next();
        SkeinT2Element value = expr();
        lex_.expect(Tok::RParen, "')'");
        return value;
      }
      default:
        lex_.fail("expected a number, 'A', 'empty', a curve '(p,q)' or '('");
    }
  }

  // '(' int ',' int ')', or nothing consumed when the parenthesis opens a
  // subexpression instead
  std::optional<SkeinT2Element> try_curve() {
    const Lexer::Mark mark = lex_.mark();
    lex_.next();
    auto p = maybe_signed_integer();
    if (!p || lex_.peek().kind != Tok::Comma) {
      lex_.reset(mark);
      return std::nullopt;
    }
    lex_.next();
    const std::int64_t q = signed_integer("expected the second curve coordinate");
    lex_.expect(Tok::RParen, "')' closing the curve");
    return make_curve(*p, q);
  }

  std::optional<std::int64_t> maybe_signed_integer() {
    bool negative = false;
    while (lex_.peek().kind == Tok::Minus || lex_.peek().kind == Tok::Plus) {
      negative ^= lex_.next().kind == Tok::Minus;
    }
    if (lex_.peek().kind != Tok::Integer) return std::nullopt;
    const mpz_class value(lex_.peek().text);
    if (!value.fits_slong_p()) lex_.fail("integer out of range");
    lex_.next();
    const std::int64_t v = value.get_si();
    return negative ? -v : v;
  }

  std::int64_t signed_integer(const char* what) {
    auto v = maybe_signed_integer();
    if (!v) lex_.fail(what);
    return *v;
  }

  Lexer lex_;
};

}  // namespace

SkeinT2Element parse_expression(std::string_view source) { return ExpressionParser(source).parse(); }

}  // namespace skein
