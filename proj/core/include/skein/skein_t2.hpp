#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "skein/rational_function.hpp"

namespace skein {

/// Basis label of K(T^2): either the empty link or a lattice pair (p,q)
/// standing for (p,q)_T. Pairs are stored up to the sign identity
/// (p,q)_T = (-p,-q)_T, canonical when p > 0 or (p == 0 and q > 0).
/// Non-coprime pairs are kept undivided; they are Chebyshev-coloured curves.
class CurveLabel {
 public:
  static CurveLabel empty() { return CurveLabel(); }
  /// Throws std::invalid_argument on (0,0), which is 2 * empty, not a label.
  static CurveLabel pair(std::int64_t p, std::int64_t q);

  bool is_empty() const { return !is_pair_; }
  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }

  friend auto operator<=>(const CurveLabel&, const CurveLabel&) = default;

  /// `empty` or `(p,q)`.
  std::string to_string() const;

 private:
  CurveLabel() = default;

  // declared first so that the empty label sorts before every pair
  bool is_pair_ = false;
  std::int64_t p_ = 0;
  std::int64_t q_ = 0;
};

/// Finite Q(A)-linear combination of basis labels.
class SkeinT2Element {
 public:
  using Terms = std::map<CurveLabel, RationalFunction>;

  SkeinT2Element() = default;
  /// c * empty
  SkeinT2Element(const RationalFunction& scalar);  // NOLINT(google-explicit-constructor)
  SkeinT2Element(const CurveLabel& label, const RationalFunction& c = 1);
  explicit SkeinT2Element(Terms terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when the only label present is `empty` (this includes zero).
  bool is_scalar() const;
  RationalFunction coefficient(const CurveLabel& label) const;

  SkeinT2Element operator-() const;
  SkeinT2Element& operator+=(const SkeinT2Element& rhs);
  SkeinT2Element& operator-=(const SkeinT2Element& rhs);
  SkeinT2Element& operator*=(const RationalFunction& c);

  friend SkeinT2Element operator+(SkeinT2Element a, const SkeinT2Element& b) { return a += b; }
  friend SkeinT2Element operator-(SkeinT2Element a, const SkeinT2Element& b) { return a -= b; }
  friend SkeinT2Element operator*(const RationalFunction& c, SkeinT2Element x) { return x *= c; }
  friend bool operator==(const SkeinT2Element&, const SkeinT2Element&) = default;

  /// `(A^-1)*(1,-1) + (A)*(1,1)`; labels in increasing order, `0` when empty.
  /// The output parses back to the same element.
  std::string to_string() const;

 private:
  void add_term(const CurveLabel& label, const RationalFunction& c);

  Terms terms_;
};

/// (p,q)_T as an element: the canonical label with coefficient 1, or 2 * empty
/// for (0,0).
SkeinT2Element make_curve(std::int64_t p, std::int64_t q);

/// Frohman-Gelca product, extended bilinearly; empty is the unit:
/// (p,q)_T (r,s)_T = A^{ps-qr} (p+r,q+s)_T + A^{-(ps-qr)} (p-r,q-s)_T.
SkeinT2Element fg_product(const SkeinT2Element& x, const SkeinT2Element& y);

/// T_n(gamma) by the recursion T_{n+1} = gamma T_n - T_{n-1}, T_0 = 2 empty,
/// T_1 = gamma, computed with fg_product. Throws std::invalid_argument unless
/// (p,q) is a coprime pair.
SkeinT2Element chebyshev_T(std::int64_t n, std::int64_t p, std::int64_t q);

/// Coefficients c_k with T_n = sum_k c_k S_k, where S_k is the Jones-Wenzl
/// colouring (same recursion, S_0 = empty, S_1 = gamma). Zero entries omitted.
std::map<std::int64_t, std::int64_t> t_to_jw(std::int64_t n);

/// (-A^3)^k x: the effect of k positive framing twists.
SkeinT2Element framing_twist(const SkeinT2Element& x, std::int64_t k);

/// x y - y x.
SkeinT2Element commutator(const SkeinT2Element& x, const SkeinT2Element& y);

}  // namespace skein
