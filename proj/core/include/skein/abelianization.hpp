#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "skein/skein_t2.hpp"

namespace skein {

struct LatticePair {
  std::int64_t p = 0;
  std::int64_t q = 0;
  friend auto operator<=>(const LatticePair&, const LatticePair&) = default;
};

/// The five spanning classes of C(K(T^2)) = K(T^2) / [K(T^2), K(T^2)].
/// C20 stands for (2,0)_T, two parallel copies of (1,0).
enum class AbClass { Empty, C10, C01, C11, C20 };

inline constexpr AbClass kAllAbClasses[] = {AbClass::Empty, AbClass::C10, AbClass::C01,
                                            AbClass::C11, AbClass::C20};

/// Label of the class in K(T^2); Empty maps to the empty label.
CurveLabel ab_class_label(AbClass c);
std::string to_string(AbClass c);

/// Class of (p,q)_T, read off the parities of p and q.
/// Throws std::invalid_argument on (0,0).
AbClass ab_reduce_label(std::int64_t p, std::int64_t q);

class AbElement {
 public:
  using Terms = std::map<AbClass, RationalFunction>;

  AbElement() = default;
  explicit AbElement(Terms terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RationalFunction coefficient(AbClass c) const;

  void add(AbClass c, const RationalFunction& coeff);

  friend bool operator==(const AbElement&, const AbElement&) = default;

  /// `(A + 1)*(1,0)`; classes in enum order, `0` when empty.
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Quotient map K(T^2) -> C(K(T^2)).
AbElement ab_reduce(const SkeinT2Element& x);

/// One rewrite (from)_T = (to)_T of the abelianization, witnessed by
///   scale * commutator((conjugator)_T, (midpoint)_T) == (from)_T - (to)_T
/// with midpoint = (from + to) / 2 and to = from +- 2 * conjugator.
struct AbStep {
  LatticePair from;
  LatticePair to;
  LatticePair conjugator;
  RationalFunction scale;
};

struct AbCertificate {
  LatticePair input;
  AbClass canonical = AbClass::Empty;
  std::vector<AbStep> steps;
};

/// Rewrite chain from (p,q)_T to its class: (p,0) -> (p,2) if needed, then the
/// first coordinate to 1 or 2 in steps of 2, then the second to 1 or 0, then
/// (2,1) -> (0,1). Throws std::invalid_argument on (0,0).
AbCertificate ab_certificate(std::int64_t p, std::int64_t q);

/// Sum over steps of scale * commutator(conjugator, midpoint), fully expanded
/// through fg_product.
SkeinT2Element telescope(const AbCertificate& cert);

struct CheckResult {
  bool ok = true;
  std::string detail;
  explicit operator bool() const { return ok; }
};

/// Independent replay: checks each step's shape (to = from +- 2e, e a unit
/// vector, nonzero determinant), its commutator expansion, chain continuity,
/// and that the telescoped sum equals (input)_T - (canonical)_T.
CheckResult verify_ab_certificate(const AbCertificate& cert);

/// Equivalence classes of the box {-N..N}^2 minus the origin under the closure
/// of u+v ~ u-v (det(u,v) != 0, both ends in the box) and w ~ -w. Each class
/// is sorted; classes are ordered by their smallest member.
struct BoxPartition {
  std::int64_t box = 0;
  std::vector<std::vector<LatticePair>> classes;
};

/// Throws std::invalid_argument when N < 2.
BoxPartition closure_check(std::int64_t N);

}  // namespace skein
