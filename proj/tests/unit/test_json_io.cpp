#include <doctest.h>

#include <json.hpp>

#include "skein/json_io.hpp"

using namespace skein;
using nlohmann::json;

TEST_SUITE("json") {
  TEST_CASE("abelianization certificate schema") {
    const json doc = json::parse(to_json(ab_certificate(3, 1)));
    CHECK(doc["input"] == json::array({3, 1}));
    CHECK(doc["canonical"] == json::array({1, 1}));
    REQUIRE(doc["steps"].size() == 1);
    CHECK(doc["steps"][0]["from"] == json::array({3, 1}));
    CHECK(doc["steps"][0]["to"] == json::array({1, 1}));
    CHECK(doc["steps"][0]["conjugator"] == json::array({1, 0}));
    CHECK(doc["steps"][0]["scale"] == "(A)/(A^2 - 1)");
  }

  TEST_CASE("abelianization certificates round-trip") {
    for (std::int64_t p = -4; p <= 4; ++p) {
      for (std::int64_t q = -4; q <= 4; ++q) {
        if (p == 0 && q == 0) continue;
        const AbCertificate cert = ab_certificate(p, q);
        const AbCertificate back = ab_certificate_from_json(to_json(cert));
        CHECK(back.input == cert.input);
        CHECK(back.canonical == cert.canonical);
        REQUIRE(back.steps.size() == cert.steps.size());
        for (std::size_t i = 0; i < cert.steps.size(); ++i) {
          CHECK(back.steps[i].from == cert.steps[i].from);
          CHECK(back.steps[i].to == cert.steps[i].to);
          CHECK(back.steps[i].conjugator == cert.steps[i].conjugator);
          CHECK(back.steps[i].scale == cert.steps[i].scale);
        }
        CHECK(verify_ab_certificate(back).ok);
      }
    }
  }

  TEST_CASE("tampered JSON certificate fails verification") {
    json doc = json::parse(to_json(ab_certificate(3, 1)));
    doc["steps"][0]["scale"] = "1/(A - 1)";
    CHECK_FALSE(verify_ab_certificate(ab_certificate_from_json(doc.dump())).ok);
    doc["steps"][0]["scale"] = "(A)/(A^2 - 1)";
    doc["steps"][0]["to"] = json::array({-1, 1});
    CHECK_FALSE(verify_ab_certificate(ab_certificate_from_json(doc.dump())).ok);
  }

  TEST_CASE("schema errors") {
    CHECK_THROWS_AS(ab_certificate_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(ab_certificate_from_json(R"({"input":[3,1],"steps":[]})"), std::invalid_argument);
    CHECK_THROWS_AS(ab_certificate_from_json(R"({"input":[3,1],"canonical":[3,3],"steps":[]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(ab_certificate_from_json(R"({"input":[3,"x"],"canonical":[1,1],"steps":[]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        ab_certificate_from_json(
            R"({"input":[3,1],"canonical":[1,1],"steps":[{"from":[3,1],"to":[1,1],"conjugator":[1,0],"scale":"A +"}]})"),
        std::invalid_argument);
    CHECK_THROWS_AS(reduction_certificate_from_json(R"({"input":[2,4,6],"canonical":[0,1,1],"steps":[]})"),
                    std::invalid_argument);
  }

  TEST_CASE("reduction certificates round-trip") {
    const Reduction3Certificate cert = reduce_pqr(Curve3(3, 4, 1));
    const json doc = json::parse(to_json(cert));
    CHECK(doc["input"] == json::array({3, 4, 1}));
    CHECK(doc["canonical"] == json::array({1, 0, 1}));
    CHECK(doc["steps"][0]["matrix"] == json::parse("[[0,0,1],[4,-1,0],[1,0,0]]"));
    CHECK(doc["steps"][0]["columns"] == json::array({0, 2}));
    const Reduction3Certificate back = reduction_certificate_from_json(doc.dump());
    CHECK(back.input == cert.input);
    CHECK(back.canonical == cert.canonical);
    REQUIRE(back.steps.size() == cert.steps.size());
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
      CHECK(back.steps[i].embedding == cert.steps[i].embedding);
      CHECK(back.steps[i].from_pair == cert.steps[i].from_pair);
      CHECK(back.steps[i].to_pair == cert.steps[i].to_pair);
      CHECK(back.steps[i].permutation == cert.steps[i].permutation);
    }
    CHECK(verify_reduction_certificate(back).ok);

    json bad = doc;
    bad["steps"][0]["matrix"] = json::parse("[[1,0,0],[0,1,0],[0,0,2]]");
    CHECK_THROWS_AS(reduction_certificate_from_json(bad.dump()), std::invalid_argument);
  }

  TEST_CASE("element serialization") {
    const json doc = json::parse(to_json(fg_product(make_curve(1, 0), make_curve(0, 1))));
    REQUIRE(doc["terms"].size() == 2);
    CHECK(doc["terms"][0]["label"] == json::array({1, -1}));
    CHECK(doc["terms"][0]["coeff"] == "A^-1");
    const json s = json::parse(to_json(SkeinT2Element(RationalFunction(2))));
    CHECK(s["terms"][0]["label"] == "empty");
    const json ab = json::parse(to_json(ab_reduce(make_curve(3, 1))));
    CHECK(ab["terms"][0]["class"] == "(1,1)");
  }
}
