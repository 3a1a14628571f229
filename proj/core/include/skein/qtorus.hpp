#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "skein/rational_function.hpp"

namespace skein {

/// Exponent pair (p, q) of the normal-ordered monomial l^p m^q.
struct QMonomial {
  std::int64_t p = 0;
  std::int64_t q = 0;
  friend auto operator<=>(const QMonomial&, const QMonomial&) = default;
};

/// Element of the quantum torus Q(A)<l^{+-1}, m^{+-1}> / (l m = A^2 m l),
/// stored in normal order (every l to the left of every m).
///
/// This is an oracle: it is built without reference to the curve basis of the
/// torus skein algebra, and `embed_curve` maps curve labels into it so that
/// the Frohman-Gelca product can be checked against plain monomial algebra.
class QTorusElement {
 public:
  using Terms = std::map<QMonomial, RationalFunction>;

  QTorusElement() = default;
  QTorusElement(const RationalFunction& scalar);  // NOLINT(google-explicit-constructor)
  explicit QTorusElement(Terms terms);

  static QTorusElement monomial(const RationalFunction& c, std::int64_t p, std::int64_t q);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RationalFunction coefficient(std::int64_t p, std::int64_t q) const;

  QTorusElement operator-() const;
  QTorusElement& operator+=(const QTorusElement& rhs);
  QTorusElement& operator-=(const QTorusElement& rhs);
  QTorusElement& operator*=(const RationalFunction& c);

  friend QTorusElement operator+(QTorusElement a, const QTorusElement& b) { return a += b; }
  friend QTorusElement operator-(QTorusElement a, const QTorusElement& b) { return a -= b; }
  friend bool operator==(const QTorusElement&, const QTorusElement&) = default;

  /// `(A^-1)*l^1*m^1 + (A^-1)*l^-1*m^-1`, terms sorted by (p, q).
  std::string to_string() const;

 private:
  void add_term(const QMonomial& k, const RationalFunction& c);

  Terms terms_;
};

/// Noncommutative product, normal-ordered with m^q l^r = A^{-2qr} l^r m^q.
QTorusElement qt_mul(const QTorusElement& a, const QTorusElement& b);

/// Image of the curve label (p,q)_T: A^{-pq} (l^p m^q + l^{-p} m^{-q}).
/// (0,0) gives the scalar 2.
QTorusElement embed_curve(std::int64_t p, std::int64_t q);

}  // namespace skein
