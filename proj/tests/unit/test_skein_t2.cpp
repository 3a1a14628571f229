#include <doctest.h>

#include <random>

#include "skein/qtorus.hpp"
#include "skein/skein_t2.hpp"

using namespace skein;

namespace {

RationalFunction A(Exponent k = 1) { return RationalFunction::var_power(k); }

SkeinT2Element c(std::int64_t p, std::int64_t q) { return make_curve(p, q); }

bool parity_matches(const SkeinT2Element& x, std::int64_t p, std::int64_t q) {
  for (const auto& [label, coeff] : x.terms()) {
    const std::int64_t lp = label.is_empty() ? 0 : label.p();
    const std::int64_t lq = label.is_empty() ? 0 : label.q();
    if ((lp - p) % 2 != 0 || (lq - q) % 2 != 0) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("skein_t2") {
  TEST_CASE("labels") {
    CHECK(CurveLabel::pair(-1, 2) == CurveLabel::pair(1, -2));
    CHECK(CurveLabel::pair(0, -3) == CurveLabel::pair(0, 3));
    CHECK(CurveLabel::pair(-2, 0).p() == 2);
    CHECK(CurveLabel::empty() < CurveLabel::pair(0, 1));
    CHECK_THROWS_AS(CurveLabel::pair(0, 0), std::invalid_argument);
    CHECK(c(0, 0) == SkeinT2Element(RationalFunction(2)));
    CHECK(c(2, 4).terms().begin()->first == CurveLabel::pair(2, 4));
  }

  TEST_CASE("product of (1,0) and (0,1)") {
    const SkeinT2Element x = fg_product(c(1, 0), c(0, 1));
    CHECK(x == A() * c(1, 1) + A(-1) * c(1, -1));
    CHECK(x.to_string() == "(A^-1)*(1,-1) + (A)*(1,1)");
  }

  TEST_CASE("products with zero determinant") {
    CHECK(fg_product(c(1, 0), c(1, 0)) == c(2, 0) + SkeinT2Element(RationalFunction(2)));
    CHECK(fg_product(c(1, 1), c(-1, -1)) == c(2, 2) + SkeinT2Element(RationalFunction(2)));
  }

  TEST_CASE("empty is the unit") {
    const SkeinT2Element one(RationalFunction(1));
    CHECK(fg_product(one, c(3, -2)) == c(3, -2));
    CHECK(fg_product(c(3, -2), one) == c(3, -2));
  }

  TEST_CASE("product agrees with the quantum torus") {
    auto phi = [](const SkeinT2Element& x) {
      QTorusElement out;
      for (const auto& [label, coeff] : x.terms()) {
        QTorusElement term = label.is_empty() ? QTorusElement(RationalFunction(1)) : embed_curve(label.p(), label.q());
        term *= coeff;
        out += term;
      }
      return out;
    };
    for (std::int64_t p = -3; p <= 3; ++p) {
      for (std::int64_t q = -3; q <= 3; ++q) {
        for (std::int64_t r = -2; r <= 2; ++r) {
          for (std::int64_t s = -2; s <= 2; ++s) {
            CHECK(phi(fg_product(c(p, q), c(r, s))) == qt_mul(phi(c(p, q)), phi(c(r, s))));
          }
        }
      }
    }
  }

  TEST_CASE("associativity on random triples") {
    std::mt19937_64 rng(314);
    std::uniform_int_distribution<std::int64_t> e(-4, 4);
    for (int i = 0; i < 100; ++i) {
      const SkeinT2Element a = c(e(rng), e(rng)), b = c(e(rng), e(rng)), d = c(e(rng), e(rng));
      CHECK(fg_product(fg_product(a, b), d) == fg_product(a, fg_product(b, d)));
    }
  }

  TEST_CASE("Z2 grading") {
    for (std::int64_t p = -3; p <= 3; ++p) {
      for (std::int64_t q = -3; q <= 3; ++q) {
        for (std::int64_t r = -3; r <= 3; ++r) {
          for (std::int64_t s = -3; s <= 3; ++s) {
            CHECK(parity_matches(fg_product(c(p, q), c(r, s)), p + r, q + s));
          }
        }
      }
    }
  }

  TEST_CASE("Chebyshev closure") {
    CHECK(chebyshev_T(0, 1, 0) == SkeinT2Element(RationalFunction(2)));
    CHECK(chebyshev_T(2, 1, 0) == c(2, 0));
    for (std::int64_t p = -3; p <= 3; ++p) {
      for (std::int64_t q = -3; q <= 3; ++q) {
        if (std::gcd(p, q) != 1) continue;
        for (std::int64_t n = 0; n <= 6; ++n) CHECK(chebyshev_T(n, p, q) == c(n * p, n * q));
      }
    }
    CHECK_THROWS_AS(chebyshev_T(3, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(chebyshev_T(3, 0, 0), std::invalid_argument);
  }

  TEST_CASE("T to Jones-Wenzl change of basis") {
    using M = std::map<std::int64_t, std::int64_t>;
    CHECK(t_to_jw(0) == M{{0, 2}});
    CHECK(t_to_jw(1) == M{{1, 1}});
    CHECK(t_to_jw(2) == M{{0, -1}, {2, 1}});
    CHECK(t_to_jw(3) == M{{1, -1}, {3, 1}});
    for (std::int64_t n = 2; n <= 15; ++n) CHECK(t_to_jw(n) == M{{n - 2, -1}, {n, 1}});
  }

  TEST_CASE("framing twist") {
    CHECK(framing_twist(c(1, 0), 1) == -A(3) * c(1, 0));
    CHECK(framing_twist(c(1, 0), -2) == A(-6) * c(1, 0));
    CHECK(framing_twist(c(2, 1), 0) == c(2, 1));
  }

  TEST_CASE("commutator") {
    CHECK(commutator(c(1, 0), c(0, 1)) == (A() - A(-1)) * (c(1, 1) - c(1, -1)));
    for (std::int64_t p = -3; p <= 3; ++p) {
      for (std::int64_t q = -3; q <= 3; ++q) {
        for (std::int64_t r = -3; r <= 3; ++r) {
          for (std::int64_t s = -3; s <= 3; ++s) {
            const std::int64_t d = p * s - q * r;
            const SkeinT2Element expected =
                RationalFunction::quantum_difference(d) * (c(p + r, q + s) - c(p - r, q - s));
            CHECK(commutator(c(p, q), c(r, s)) == expected);
          }
        }
      }
    }
  }

  TEST_CASE("small fixed cases") {
    const SkeinT2Element x = c(2, 1) + A(3) * c(0, 1) + SkeinT2Element(A());
    CHECK(framing_twist(framing_twist(x, -1), 1) == x);
    CHECK(commutator(x, x).is_zero());
    CHECK(commutator(x, SkeinT2Element(RationalFunction(1))).is_zero());
    CHECK(chebyshev_T(0, 2, 3) == SkeinT2Element(RationalFunction(2)));
    CHECK(chebyshev_T(1, 1, 0) == c(1, 0));
  }
}
