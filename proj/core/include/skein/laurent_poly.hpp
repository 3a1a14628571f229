#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace skein {

using Rational = mpq_class;
using Exponent = std::int64_t;

/// Raised on division by zero and other undefined field operations.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Finite sum c_k A^k with rational coefficients, k ranging over all integers.
///
/// Stored sparsely; zero coefficients are never kept, so two polynomials are
/// equal exactly when their term maps are equal.
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT
  explicit LaurentPoly(Terms terms);

  static LaurentPoly monomial(const Rational& c, Exponent k);
  /// A^k
  static LaurentPoly var_power(Exponent k) { return monomial(1, k); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }

  /// Exponent range; both throw on the zero polynomial.
  Exponent min_exponent() const;
  Exponent max_exponent() const;
  const Rational& leading_coefficient() const;

  Rational coefficient(Exponent k) const;

  /// Multiplies by A^k.
  LaurentPoly shifted(Exponent k) const;
  LaurentPoly scaled(const Rational& c) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Terms in decreasing exponent order: `-A^4 + 3/2*A - 1`.
  std::string to_string() const;

 private:
  void add_term(Exponent k, const Rational& c);

  Terms terms_;
};

/// Greatest common divisor of two ordinary polynomials (all exponents >= 0),
/// normalized monic. gcd(0, 0) is 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient a / b of ordinary polynomials. Throws ArithmeticError when
/// b is zero or the remainder is nonzero.
LaurentPoly poly_exact_div(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace skein
