#include <doctest.h>

#include <set>

#include "skein/abelianization.hpp"

using namespace skein;

namespace {

RationalFunction A(Exponent k = 1) { return RationalFunction::var_power(k); }

}  // namespace

TEST_SUITE("abelianization") {
  TEST_CASE("class of a label follows parities") {
    CHECK(ab_reduce_label(3, 1) == AbClass::C11);
    CHECK(ab_reduce_label(-5, 2) == AbClass::C10);
    CHECK(ab_reduce_label(4, -7) == AbClass::C01);
    CHECK(ab_reduce_label(4, 2) == AbClass::C20);
    CHECK(ab_reduce_label(0, 6) == AbClass::C20);
    CHECK_THROWS_AS(ab_reduce_label(0, 0), std::invalid_argument);
    CHECK(to_string(AbClass::C20) == "(2,0)");
    CHECK(to_string(AbClass::Empty) == "empty");
  }

  TEST_CASE("ab_reduce") {
    const SkeinT2Element x = fg_product(make_curve(1, 0), make_curve(0, 1));
    AbElement expected;
    expected.add(AbClass::C11, A() + A(-1));
    CHECK(ab_reduce(x) == expected);
    CHECK(ab_reduce(commutator(make_curve(1, 0), make_curve(0, 1))).is_zero());
    CHECK(ab_reduce(make_curve(0, 0)).coefficient(AbClass::Empty) == RationalFunction(2));
  }

  TEST_CASE("quotient is well defined on commutators") {
    for (std::int64_t p = -3; p <= 3; ++p) {
      for (std::int64_t q = -3; q <= 3; ++q) {
        for (std::int64_t r = -3; r <= 3; ++r) {
          for (std::int64_t s = -3; s <= 3; ++s) {
            const SkeinT2Element x = make_curve(p, q), y = make_curve(r, s);
            CHECK(ab_reduce(commutator(x, y)).is_zero());
            CHECK(ab_reduce(fg_product(x, y)) == ab_reduce(fg_product(y, x)));
          }
        }
      }
    }
  }

  TEST_CASE("certificate for (3,1)") {
    const AbCertificate cert = ab_certificate(3, 1);
    CHECK(cert.canonical == AbClass::C11);
    REQUIRE(cert.steps.size() == 1);
    const AbStep& s = cert.steps[0];
    CHECK(s.from == LatticePair{3, 1});
    CHECK(s.to == LatticePair{1, 1});
    CHECK(s.conjugator == LatticePair{1, 0});
    CHECK(s.scale == (A() - A(-1)).inverse());
    CHECK(s.scale.to_string() == "(A)/(A^2 - 1)");
    CHECK(verify_ab_certificate(cert).ok);
  }

  TEST_CASE("certificate for (4,2) ends at (2,0)") {
    const AbCertificate cert = ab_certificate(4, 2);
    CHECK(cert.canonical == AbClass::C20);
    REQUIRE_FALSE(cert.steps.empty());
    CHECK(cert.steps.back().to == LatticePair{2, 0});
    CHECK(verify_ab_certificate(cert).ok);
  }

  TEST_CASE("canonical inputs need no steps") {
    CHECK(ab_certificate(1, 0).steps.empty());
    CHECK(ab_certificate(0, -1).steps.empty());
    CHECK(ab_certificate(-1, -1).steps.empty());
    CHECK(ab_certificate(2, 0).steps.empty());
    CHECK(verify_ab_certificate(ab_certificate(0, -1)).ok);
  }

  TEST_CASE("every certificate in a box replays and telescopes") {
    for (std::int64_t p = -5; p <= 5; ++p) {
      for (std::int64_t q = -5; q <= 5; ++q) {
        if (p == 0 && q == 0) continue;
        const AbCertificate cert = ab_certificate(p, q);
        const CheckResult r = verify_ab_certificate(cert);
        INFO("(" << p << "," << q << "): " << r.detail);
        CHECK(r.ok);
        CHECK(telescope(cert) == make_curve(p, q) - SkeinT2Element(ab_class_label(cert.canonical)));
      }
    }
  }

  TEST_CASE("tampered certificates are rejected") {
    AbCertificate cert = ab_certificate(5, 2);
    REQUIRE(cert.steps.size() >= 2);
    SUBCASE("scale") {
      cert.steps[0].scale = -cert.steps[0].scale;
      CHECK_FALSE(verify_ab_certificate(cert).ok);
    }
    SUBCASE("broken chain") {
      cert.steps.erase(cert.steps.begin());
      CHECK_FALSE(verify_ab_certificate(cert).ok);
    }
    SUBCASE("wrong class") {
      cert.canonical = AbClass::C11;
      CHECK_FALSE(verify_ab_certificate(cert).ok);
    }
    SUBCASE("zero determinant") {
      AbCertificate bad;
      bad.input = {3, 0};
      bad.canonical = AbClass::C10;
      bad.steps.push_back({{3, 0}, {1, 0}, {1, 0}, RationalFunction(1)});
      CHECK_FALSE(verify_ab_certificate(bad).ok);
    }
  }

  TEST_CASE("closure partition") {
    CHECK_THROWS_AS(closure_check(1), std::invalid_argument);
    for (std::int64_t n = 2; n <= 4; ++n) {
      const BoxPartition part = closure_check(n);
      REQUIRE(part.classes.size() == 4);
      std::size_t members = 0;
      std::set<AbClass> seen;
      for (const auto& cls : part.classes) {
        const AbClass k = ab_reduce_label(cls.front().p, cls.front().q);
        for (const auto& m : cls) CHECK(ab_reduce_label(m.p, m.q) == k);
        seen.insert(k);
        members += cls.size();
      }
      CHECK(seen.size() == 4);
      CHECK(members == static_cast<std::size_t>((2 * n + 1) * (2 * n + 1) - 1));
    }
  }

  TEST_CASE("small fixed cases") {
    CHECK(ab_reduce_label(3, 4) == AbClass::C10);
    CHECK(ab_reduce_label(2, 2) == AbClass::C20);
    CHECK(ab_reduce_label(1, 1) == AbClass::C11);
    AbElement lin;
    lin.add(AbClass::C10, A() + 1);
    CHECK(ab_reduce(A() * make_curve(3, 4) + make_curve(1, 0)) == lin);
    AbElement two;
    two.add(AbClass::Empty, RationalFunction(2));
    CHECK(ab_reduce(SkeinT2Element(RationalFunction(2))) == two);
    CHECK(ab_reduce(make_curve(5, 3) - make_curve(1, 1)).is_zero());
    CHECK(closure_check(6).classes.size() == 4);
  }
}
