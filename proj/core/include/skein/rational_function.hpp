#pragma once

#include <string>
#include <string_view>

#include "skein/laurent_poly.hpp"

namespace skein {

/// Element of the field Q(A), kept in a unique normal form:
///
///  * the denominator is an ordinary polynomial, monic, with nonzero
///    constant term (any power of A is moved into the numerator);
///  * numerator and denominator are coprime;
///  * zero is 0/1.
///
/// With this form, equality is plain comparison of the two term maps.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT
  RationalFunction(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT
  /// n / d; throws ArithmeticError when d is zero.
  RationalFunction(const LaurentPoly& n, const LaurentPoly& d);

  /// c * A^k
  static RationalFunction monomial(const Rational& c, Exponent k);
  /// A^k
  static RationalFunction var_power(Exponent k) { return monomial(1, k); }
  /// A^k - A^{-k}
  static RationalFunction quantum_difference(Exponent k);

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  RationalFunction inverse() const;
  RationalFunction pow(Exponent k) const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// `A^2 - 1` when the denominator is 1, otherwise `(-A^4 - 1)/(A^2 + 1)`.
  std::string to_string() const;

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Field operation dispatch; Div by zero throws ArithmeticError.
RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, ArithOp op);

/// True iff a is nonzero. Every nonzero element of Q(A) is a unit.
inline bool rf_is_invertible(const RationalFunction& a) { return !a.is_zero(); }

/// Parses the rendering grammar (integers, `A`, `+ - * / ^`, parentheses).
/// Throws ParseError on malformed input.
RationalFunction parse_rational_function(std::string_view text);

}  // namespace skein
