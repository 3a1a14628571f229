#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skein/abelianization.hpp"

namespace skein {

using Vec3 = std::array<std::int64_t, 3>;
using Mat3 = std::array<Vec3, 3>;  // row-major

std::int64_t det3(const Mat3& m);
Vec3 mat_vec(const Mat3& m, const Vec3& v);
Vec3 column(const Mat3& m, int j);
Vec3 cross(const Vec3& a, const Vec3& b);
std::int64_t dot(const Vec3& a, const Vec3& b);
Mat3 identity3();

/// The framed (p,q,r)-curve [p,q,r] of T^3: a primitive integer direction,
/// taken up to sign (first nonzero coordinate positive).
class Curve3 {
 public:
  /// Throws std::invalid_argument unless gcd(p,q,r) == 1.
  Curve3(std::int64_t p, std::int64_t q, std::int64_t r);
  explicit Curve3(const Vec3& v) : Curve3(v[0], v[1], v[2]) {}

  const Vec3& coords() const { return v_; }
  std::int64_t operator[](std::size_t i) const { return v_[i]; }

  friend auto operator<=>(const Curve3&, const Curve3&) = default;

  /// `[p,q,r]`
  std::string to_string() const;

 private:
  Vec3 v_;
};

/// Torus in T^3 covered by the plane through two columns of an SL_3(Z) matrix.
/// Column indices are 0-based.
class StandardEmbedding {
 public:
  /// Throws std::invalid_argument unless det(matrix) == 1 and the columns are
  /// distinct indices in 0..2.
  StandardEmbedding(const Mat3& matrix, std::array<int, 2> columns);

  const Mat3& matrix() const { return matrix_; }
  const std::array<int, 2>& columns() const { return columns_; }
  Vec3 first() const { return column(matrix_, columns_[0]); }
  Vec3 second() const { return column(matrix_, columns_[1]); }
  /// Integer normal of the embedded plane: first() x second().
  Vec3 normal() const { return cross(first(), second()); }

  friend bool operator==(const StandardEmbedding&, const StandardEmbedding&) = default;

 private:
  Mat3 matrix_;
  std::array<int, 2> columns_;
};

struct ExtGcd {
  std::int64_t d = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;
};

/// d = gcd(p,q) > 0 with lambda*p + mu*q = d. When q != 0, lambda is the
/// representative in [0, |q|/d); when q == 0, lambda = sign(p) and mu = 0.
/// Throws std::invalid_argument on (0,0).
ExtGcd extended_gcd(std::int64_t p, std::int64_t q);

/// Columns (p/d, q/d, 0), (-mu, lambda, 0), (0, 0, 1); selects columns 0 and 2.
/// Requires p != 0 and q != 0.
StandardEmbedding build_M1(std::int64_t p, std::int64_t q);
/// Rows (0,0,1), (q,-1,0), (1,0,0); selects columns 0 and 2.
StandardEmbedding build_M2(std::int64_t q);
/// Rows (1,0,0), (0,1,0), (1,0,1); selects columns 0 and 1.
StandardEmbedding build_M3();
/// The trivial torus {z = 0}: identity matrix, columns 0 and 1.
StandardEmbedding trivial_embedding();

/// A standard embedding whose plane is {a x + b y + c z = 0}.
/// Throws std::invalid_argument on the zero normal.
StandardEmbedding embedding_for_plane(std::int64_t a, std::int64_t b, std::int64_t c);

/// e_*((a,b)_T) = [a*first + b*second]. Throws std::invalid_argument unless
/// (a,b) is a coprime pair.
Curve3 embed_push(const StandardEmbedding& e, std::int64_t a, std::int64_t b);

using Permutation3 = std::array<int, 3>;

/// Working frame of a step is w_k = c[permutation[k]]; the step's embedding
/// carries from_pair to w and to_pair to the next curve (in that frame).
struct Reduction3Step {
  StandardEmbedding embedding;
  LatticePair from_pair;
  LatticePair to_pair;
  Permutation3 permutation{0, 1, 2};
};

struct Reduction3Certificate {
  Curve3 input;
  Curve3 canonical;
  std::vector<Reduction3Step> steps;
};

/// [p,q,r] = [x,y,z] with x,y,z in {0,1} of the same parities, with the chain
/// of torus moves that proves it (permute; M1 to bring r into {0,1}; trivial
/// torus when a coordinate vanishes; M2 for r = 1; M3 for [1,q,1]).
Reduction3Certificate reduce_pqr(const Curve3& c);

/// Replays every step: determinant 1, pushes match the current and next curve,
/// pairs are coprime and congruent mod 2 (same abelianization class), and the
/// chain ends at the parity representative.
CheckResult verify_reduction_certificate(const Reduction3Certificate& cert);

/// A primitive curve lying on both embedded planes (cross product of the
/// normals, divided by its content). Throws std::invalid_argument when the
/// planes coincide.
Curve3 common_curve(const StandardEmbedding& e1, const StandardEmbedding& e2);

struct Z2Class {
  std::uint8_t x = 0, y = 0, z = 0;
  friend auto operator<=>(const Z2Class&, const Z2Class&) = default;
  /// 4x + 2y + z
  std::size_t index() const { return 4u * x + 2u * y + z; }
  std::string to_string() const;
};

/// Class in H_1(T^3; Z_2).
Z2Class homology_class(const Curve3& c);

/// M in SL_3(Z) with M c = (1,0,0).
Mat3 find_diffeo(const Curve3& c);

struct Generator {
  enum class Kind { Empty, Curve, Alpha };
  Kind kind = Kind::Empty;
  std::optional<Curve3> curve;

  /// Empty and Alpha both lie in the trivial class.
  Z2Class homology() const;
  std::string to_string() const;
};

/// empty, the seven [x,y,z] with x,y,z in {0,1} not all zero, and alpha.
std::vector<Generator> generators9();

template <typename T>
using GradeBuckets = std::array<std::vector<T>, 8>;

/// Buckets indexed by Z2Class::index(), input order preserved in each bucket.
GradeBuckets<Generator> grade_decompose(std::span<const Generator> items);
GradeBuckets<Curve3> grade_decompose(std::span<const Curve3> curves);

}  // namespace skein
