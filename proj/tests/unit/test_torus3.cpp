#include <doctest.h>

#include <random>

#include "skein/torus3.hpp"

using namespace skein;

TEST_SUITE("torus3") {
  TEST_CASE("curves") {
    CHECK(Curve3(-1, 2, 0) == Curve3(1, -2, 0));
    CHECK(Curve3(0, 0, -1).to_string() == "[0,0,1]");
    CHECK_THROWS_AS(Curve3(2, 4, 6), std::invalid_argument);
    CHECK_THROWS_AS(Curve3(0, 0, 0), std::invalid_argument);
  }

  TEST_CASE("extended gcd") {
    const ExtGcd g = extended_gcd(4, 6);
    CHECK(g.d == 2);
    CHECK(g.lambda == 2);
    CHECK(g.mu == -1);
    const ExtGcd h = extended_gcd(-4, 6);
    CHECK(h.d == 2);
    CHECK(h.lambda == 1);
    CHECK(h.mu == 1);
    CHECK(extended_gcd(5, 0).lambda == 1);
    CHECK(extended_gcd(-5, 0).lambda == -1);
    CHECK(extended_gcd(0, 5).mu == 1);
    CHECK_THROWS_AS(extended_gcd(0, 0), std::invalid_argument);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> e(-200, 200);
    for (int i = 0; i < 1000; ++i) {
      const std::int64_t p = e(rng), q = e(rng);
      if (p == 0 && q == 0) continue;
      const ExtGcd r = extended_gcd(p, q);
      CHECK(r.d == std::gcd(p, q));
      CHECK(r.lambda * p + r.mu * q == r.d);
      if (q != 0) {
        CHECK(r.lambda >= 0);
        CHECK(r.lambda < std::abs(q) / r.d);
      }
    }
  }

  TEST_CASE("standard embeddings") {
    const StandardEmbedding m1 = build_M1(4, 6);
    CHECK(m1.matrix() == Mat3{{{2, 1, 0}, {3, 2, 0}, {0, 0, 1}}});
    CHECK(m1.columns() == std::array<int, 2>{0, 2});
    CHECK(build_M1(1, 1).matrix() == Mat3{{{1, -1, 0}, {1, 0, 0}, {0, 0, 1}}});
    CHECK(build_M2(5).matrix() == Mat3{{{0, 0, 1}, {5, -1, 0}, {1, 0, 0}}});
    CHECK(build_M3().matrix() == Mat3{{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}}});
    CHECK(build_M3().columns() == std::array<int, 2>{0, 1});
    for (std::int64_t q = -5; q <= 5; ++q) CHECK(det3(build_M2(q).matrix()) == 1);
    CHECK_THROWS_AS(build_M1(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(StandardEmbedding(Mat3{{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}}, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(StandardEmbedding(identity3(), {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(StandardEmbedding(identity3(), {0, 3}), std::invalid_argument);
  }

  TEST_CASE("embed_push") {
    CHECK(embed_push(build_M2(5), 1, 4) == Curve3(4, 5, 1));
    CHECK(embed_push(build_M3(), 1, 3) == Curve3(1, 3, 1));
    CHECK(embed_push(build_M1(4, 6), 1, 0) == Curve3(2, 3, 0));
    CHECK_THROWS_AS(embed_push(build_M3(), 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(embed_push(build_M3(), 0, 0), std::invalid_argument);
  }

  TEST_CASE("reduction examples") {
    CHECK(reduce_pqr(Curve3(2, 3, 5)).canonical == Curve3(0, 1, 1));
    CHECK(reduce_pqr(Curve3(1, 0, 0)).canonical == Curve3(1, 0, 0));
    CHECK(reduce_pqr(Curve3(1, 0, 0)).steps.empty());
    const Reduction3Certificate c = reduce_pqr(Curve3(3, 4, 1));
    CHECK(c.canonical == Curve3(1, 0, 1));
    REQUIRE(c.steps.size() == 2);
    CHECK(c.steps[0].embedding == build_M2(4));
    CHECK(c.steps[1].embedding == build_M3());
    CHECK(verify_reduction_certificate(c).ok);
  }

  TEST_CASE("every coprime triple in a box reduces to its parity class") {
    for (std::int64_t p = -5; p <= 5; ++p) {
      for (std::int64_t q = -5; q <= 5; ++q) {
        for (std::int64_t r = -5; r <= 5; ++r) {
          if (std::gcd(std::gcd(p, q), r) != 1) continue;
          const Curve3 in(p, q, r);
          const Reduction3Certificate cert = reduce_pqr(in);
          const CheckResult res = verify_reduction_certificate(cert);
          INFO(in.to_string() << ": " << res.detail);
          CHECK(res.ok);
          CHECK(homology_class(cert.canonical) == homology_class(in));
          CHECK(cert.steps.size() <= 8);
        }
      }
    }
  }

  TEST_CASE("tampered reduction certificates are rejected") {
    Reduction3Certificate cert = reduce_pqr(Curve3(3, 4, 1));
    SUBCASE("pair") {
      cert.steps[0].to_pair = {1, 2};
      CHECK_FALSE(verify_reduction_certificate(cert).ok);
    }
    SUBCASE("permutation") {
      cert.steps[0].permutation = {0, 0, 1};
      CHECK_FALSE(verify_reduction_certificate(cert).ok);
    }
    SUBCASE("truncated") {
      cert.steps.pop_back();
      CHECK_FALSE(verify_reduction_certificate(cert).ok);
    }
  }

  TEST_CASE("common curve") {
    CHECK(common_curve(trivial_embedding(), embedding_for_plane(1, 2, 3)) == Curve3(-2, 1, 0));
    CHECK(common_curve(trivial_embedding(), embedding_for_plane(1, 0, 0)) == Curve3(0, 1, 0));
    CHECK_THROWS_AS(common_curve(trivial_embedding(), trivial_embedding()), std::invalid_argument);
    CHECK_THROWS_AS(common_curve(embedding_for_plane(1, 2, 3), embedding_for_plane(-2, -4, -6)),
                    std::invalid_argument);
    CHECK_THROWS_AS(embedding_for_plane(0, 0, 0), std::invalid_argument);
    for (std::int64_t a = -2; a <= 2; ++a) {
      for (std::int64_t b = -2; b <= 2; ++b) {
        for (std::int64_t c = -2; c <= 2; ++c) {
          if (a == 0 && b == 0 && c == 0) continue;
          const StandardEmbedding e = embedding_for_plane(a, b, c);
          const Vec3 n = e.normal();
          // normal is parallel to (a,b,c)
          CHECK(cross(n, Vec3{a, b, c}) == Vec3{0, 0, 0});
        }
      }
    }
  }

  TEST_CASE("find_diffeo") {
    CHECK(find_diffeo(Curve3(1, 0, 0)) == identity3());
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> e(-40, 40);
    for (int i = 0; i < 500; ++i) {
      const std::int64_t p = e(rng), q = e(rng), r = e(rng);
      if (std::gcd(std::gcd(p, q), r) != 1) continue;
      const Curve3 c(p, q, r);
      const Mat3 m = find_diffeo(c);
      CHECK(det3(m) == 1);
      CHECK(mat_vec(m, c.coords()) == Vec3{1, 0, 0});
    }
  }

  TEST_CASE("generators and grading") {
    const std::vector<Generator> gens = generators9();
    REQUIRE(gens.size() == 9);
    CHECK(gens.front().kind == Generator::Kind::Empty);
    CHECK(gens.back().kind == Generator::Kind::Alpha);
    const GradeBuckets<Generator> buckets = grade_decompose(gens);
    CHECK(buckets[0].size() == 2);
    for (std::size_t i = 1; i < 8; ++i) {
      REQUIRE(buckets[i].size() == 1);
      CHECK(buckets[i][0].homology().index() == i);
    }
    const std::vector<Curve3> curves{Curve3(3, 4, 1), Curve3(1, 0, 1), Curve3(2, 3, 5)};
    const GradeBuckets<Curve3> cb = grade_decompose(curves);
    CHECK(cb[5] == std::vector<Curve3>{Curve3(3, 4, 1), Curve3(1, 0, 1)});
    CHECK(cb[3] == std::vector<Curve3>{Curve3(2, 3, 5)});
  }

  TEST_CASE("small fixed cases") {
    const ExtGcd a = extended_gcd(1, 0);
    CHECK((a.d == 1 && a.lambda == 1 && a.mu == 0));
    const ExtGcd b = extended_gcd(0, 5);
    CHECK((b.d == 5 && b.lambda == 0 && b.mu == 1));
    CHECK(build_M2(0).matrix() == Mat3{{{0, 0, 1}, {0, -1, 0}, {1, 0, 0}}});
    CHECK(embed_push(trivial_embedding(), 3, 2) == Curve3(3, 2, 0));
    CHECK(embed_push(build_M2(5), 1, 0) == Curve3(build_M2(5).first()));
    CHECK(common_curve(trivial_embedding(), embedding_for_plane(0, 1, 0)) == Curve3(1, 0, 0));
    CHECK(homology_class(Curve3(2, 3, 5)) == Z2Class{0, 1, 1});
    CHECK(homology_class(Curve3(1, 0, 0)) == Z2Class{1, 0, 0});
    CHECK(homology_class(Curve3(2, 3, 5)).to_string() == "(0,1,1)");
    for (const Curve3& c : {Curve3(1, 1, 1), Curve3(0, 1, 1)}) {
      const Mat3 m = find_diffeo(c);
      CHECK(det3(m) == 1);
      CHECK(mat_vec(m, c.coords()) == Vec3{1, 0, 0});
    }
    const GradeBuckets<Curve3> none = grade_decompose(std::span<const Curve3>{});
    for (const auto& bucket : none) CHECK(bucket.empty());
  }
}
