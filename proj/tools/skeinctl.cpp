// skeinctl: command-line front end to the skein engine.
//
// Exit status: 0 success, 1 a verification failed, 2 usage or parse error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skein/abelianization.hpp"
#include "skein/expression.hpp"
#include "skein/json_io.hpp"
#include "skein/parse_error.hpp"
#include "skein/sweeps.hpp"
#include "skein/torus3.hpp"

using namespace skein;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::int64_t default_box() {
  const char* env = std::getenv("SKEIN_BOX");
  if (env == nullptr || *env == '\0') return 3;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(env, &used);
    if (used != std::string(env).size() || v < 0) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("SKEIN_BOX must be a non-negative integer, got '") + env + "'");
  }
}

unsigned default_jobs() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

Json pair_json(const LatticePair& p) { return Json::array({p.p, p.q}); }
Json vec_json(const Vec3& v) { return Json::array({v[0], v[1], v[2]}); }

Json report_json(const SweepReport& r) {
  Json j;
  j["name"] = r.name;
  j["passed"] = r.passed();
  j["checked"] = r.checked;
  j["failures"] = r.failures;
  if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
  return j;
}

std::string report_line(const SweepReport& r) {
  std::ostringstream os;
  os << (r.passed() ? "pass" : "FAIL") << "  " << r.name << ": " << r.checked << " checks, " << r.failures
     << " failures";
  if (!r.counterexample.empty()) os << "; counterexample: " << r.counterexample;
  return os.str();
}

int emit_reports(const std::vector<SweepReport>& reports, bool json) {
  bool ok = true;
  Json arr = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    if (json) {
      arr.push_back(report_json(r));
    } else {
      std::cout << report_line(r) << '\n';
    }
    if (!r.passed()) std::cerr << "verification failed: " << r.name << ": " << r.counterexample << '\n';
  }
  if (json) {
    Json doc;
    doc["passed"] = ok;
    doc["sweeps"] = std::move(arr);
    std::cout << doc.dump(2) << '\n';
  }
  return ok ? kOk : kVerifyFailed;
}

Vec3 parse_triple(const std::string& s) {
  Vec3 v{};
  std::istringstream in(s);
  char c1 = 0, c2 = 0;
  if (!(in >> v[0] >> c1 >> v[1] >> c2 >> v[2]) || c1 != ',' || c2 != ',' || !(in >> std::ws).eof()) {
    throw UsageError("expected a triple p,q,r, got '" + s + "'");
  }
  return v;
}

SkeinT2Element product_of(const std::vector<std::string>& exprs) {
  SkeinT2Element acc(RationalFunction(1));
  for (const auto& e : exprs) acc = fg_product(acc, parse_expression(e));
  return acc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skeinctl: products, reductions and certificates in the Kauffman bracket skein algebra of the torus"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of text");

  // mul
  std::vector<std::string> mul_exprs;
  auto* mul = app.add_subcommand("mul", "Multiply skein expressions left to right");
  mul->add_option("expr", mul_exprs, "Expressions such as '(1,0)*(0,1) + A*empty'")->required();

  // reduce-t2
  std::string t2_expr;
  std::int64_t twist = 0;
  auto* reduce_t2 = app.add_subcommand("reduce-t2", "Normal form of an expression in the curve basis");
  reduce_t2->add_option("expr", t2_expr, "Skein expression")->required();
  reduce_t2->add_option("--twist", twist, "Apply K framing twists (multiplies by (-A^3)^K)");

  // abelianize
  std::string ab_expr;
  auto* abelianize = app.add_subcommand("abelianize", "Image of an expression in the abelianization");
  abelianize->add_option("expr", ab_expr, "Skein expression")->required();

  // certify-ab
  std::int64_t cp = 0, cq = 0;
  auto* certify_ab = app.add_subcommand("certify-ab", "Rewrite certificate (p,q) -> its abelianization class");
  certify_ab->add_option("p", cp)->required();
  certify_ab->add_option("q", cq)->required();

  // reduce-t3
  std::int64_t rp = 0, rq = 0, rr = 0;
  auto* reduce_t3 = app.add_subcommand("reduce-t3", "Reduce the curve [p,q,r] of T^3 to its parity class");
  reduce_t3->add_option("p", rp)->required();
  reduce_t3->add_option("q", rq)->required();
  reduce_t3->add_option("r", rr)->required();

  // common-curve
  std::vector<std::int64_t> normals;
  auto* common = app.add_subcommand("common-curve", "Curve shared by the tori {a x + b y + c z = 0} and {a' x + b' y + c' z = 0}");
  common->add_option("normals", normals, "a b c a' b' c'")->required()->expected(6);

  // generators
  auto* generators = app.add_subcommand("generators", "List the spanning set of K(T^3) with Z2 classes");

  // grade
  std::vector<std::string> grade_items;
  auto* grade = app.add_subcommand("grade", "Bucket curves by class in H_1(T^3; Z2)");
  grade->add_option("curves", grade_items, "Triples p,q,r")->required();

  // sweeps
  std::int64_t box = 0;
  unsigned jobs = 0;
  auto* oracle = app.add_subcommand("oracle-check", "Compare the product with the quantum torus on a box");
  oracle->add_option("--box", box, "Box half-width (default: SKEIN_BOX or 3)");
  oracle->add_option("--jobs", jobs, "Worker threads (default: hardware concurrency)");
  auto* closure = app.add_subcommand("closure-check", "Partition a box under the commutator relations");
  closure->add_option("--box", box, "Box half-width, at least 2 (default: SKEIN_BOX or 3)");
  auto* selftest = app.add_subcommand("selftest", "Run every verification sweep at a small size");
  selftest->add_option("--box", box, "Box half-width (default: SKEIN_BOX or 3)");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (box == 0 && (oracle->parsed() || closure->parsed() || selftest->parsed())) box = default_box();
    if (jobs == 0) jobs = default_jobs();

    if (mul->parsed() || reduce_t2->parsed()) {
      SkeinT2Element x = mul->parsed() ? product_of(mul_exprs) : parse_expression(t2_expr);
      if (reduce_t2->parsed()) x = framing_twist(x, twist);
      std::cout << (json ? to_json(x) : x.to_string()) << '\n';
      return kOk;
    }

    if (abelianize->parsed()) {
      const AbElement x = ab_reduce(parse_expression(ab_expr));
      std::cout << (json ? to_json(x) : x.to_string()) << '\n';
      return kOk;
    }

    if (certify_ab->parsed()) {
      const AbCertificate cert = ab_certificate(cp, cq);
      const CheckResult check = verify_ab_certificate(cert);
      if (json) {
        std::cout << to_json(cert) << '\n';
      } else {
        std::cout << CurveLabel::pair(cp, cq).to_string() << " = " << to_string(cert.canonical) << " in "
                  << cert.steps.size() << " step(s)\n";
        for (const auto& s : cert.steps) {
          std::cout << "  (" << s.from.p << "," << s.from.q << ") -> (" << s.to.p << "," << s.to.q
                    << ")  via [(" << s.conjugator.p << "," << s.conjugator.q << "), ("
                    << (s.from.p + s.to.p) / 2 << "," << (s.from.q + s.to.q) / 2 << ")] * " << s.scale.to_string()
                    << '\n';
        }
      }
      if (!check.ok) {
        std::cerr << "certificate failed to verify: " << check.detail << '\n';
        return kVerifyFailed;
      }
      return kOk;
    }

    if (reduce_t3->parsed()) {
      const Reduction3Certificate cert = reduce_pqr(Curve3(rp, rq, rr));
      const CheckResult check = verify_reduction_certificate(cert);
      if (json) {
        std::cout << to_json(cert) << '\n';
      } else {
        std::cout << cert.input.to_string() << " = " << cert.canonical.to_string() << " in " << cert.steps.size()
                  << " step(s)\n";
        for (const auto& s : cert.steps) {
          const auto& m = s.embedding.matrix();
          std::cout << "  permute (" << s.permutation[0] << "," << s.permutation[1] << "," << s.permutation[2]
                    << ")  (" << s.from_pair.p << "," << s.from_pair.q << ") -> (" << s.to_pair.p << ","
                    << s.to_pair.q << ")  on columns " << s.embedding.columns()[0] << "," << s.embedding.columns()[1]
                    << " of [";
          for (int i = 0; i < 3; ++i) {
            std::cout << (i ? "; " : "") << m[i][0] << " " << m[i][1] << " " << m[i][2];
          }
          std::cout << "]\n";
        }
      }
      if (!check.ok) {
        std::cerr << "certificate failed to verify: " << check.detail << '\n';
        return kVerifyFailed;
      }
      return kOk;
    }

    if (common->parsed()) {
      const StandardEmbedding e1 = embedding_for_plane(normals[0], normals[1], normals[2]);
      const StandardEmbedding e2 = embedding_for_plane(normals[3], normals[4], normals[5]);
      const Curve3 c = common_curve(e1, e2);
      if (json) {
        Json doc;
        doc["curve"] = vec_json(c.coords());
        doc["class"] = homology_class(c).index();
        std::cout << doc.dump(2) << '\n';
      } else {
        std::cout << c.to_string() << '\n';
      }
      return kOk;
    }

    if (generators->parsed()) {
      const std::vector<Generator> gens = generators9();
      if (json) {
        Json arr = Json::array();
        for (const auto& g : gens) {
          Json j;
          j["generator"] = g.to_string();
          j["class"] = g.homology().index();
          arr.push_back(std::move(j));
        }
        std::cout << arr.dump(2) << '\n';
      } else {
        for (const auto& g : gens) std::cout << g.to_string() << "  class " << g.homology().to_string() << '\n';
      }
      return kOk;
    }

    if (grade->parsed()) {
      std::vector<Curve3> curves;
      for (const auto& s : grade_items) curves.emplace_back(parse_triple(s));
      const GradeBuckets<Curve3> buckets = grade_decompose(curves);
      Json doc = Json::array();
      for (std::size_t i = 0; i < buckets.size(); ++i) {
        if (buckets[i].empty()) continue;
        if (json) {
          Json members = Json::array();
          for (const auto& c : buckets[i]) members.push_back(vec_json(c.coords()));
          doc.push_back({{"class", i}, {"curves", std::move(members)}});
        } else {
          std::cout << homology_class(buckets[i].front()).to_string() << ":";
          for (const auto& c : buckets[i]) std::cout << ' ' << c.to_string();
          std::cout << '\n';
        }
      }
      if (json) std::cout << doc.dump(2) << '\n';
      return kOk;
    }

    if (oracle->parsed()) return emit_reports({oracle_sweep(box, jobs)}, json);

    if (closure->parsed()) {
      const BoxPartition part = closure_check(box);
      const SweepReport r = closure_sweep(box, box);
      if (json) {
        Json doc;
        doc["box"] = part.box;
        doc["passed"] = r.passed();
        Json classes = Json::array();
        for (const auto& cls : part.classes) {
          classes.push_back({{"class", to_string(ab_reduce_label(cls.front().p, cls.front().q))},
                             {"representative", pair_json(cls.front())},
                             {"size", cls.size()}});
        }
        doc["classes"] = std::move(classes);
        std::cout << doc.dump(2) << '\n';
      } else {
        std::cout << part.classes.size() << " classes in box " << part.box << '\n';
        for (const auto& cls : part.classes) {
          std::cout << "  " << to_string(ab_reduce_label(cls.front().p, cls.front().q)) << ": " << cls.size()
                    << " labels\n";
        }
        std::cout << report_line(r) << '\n';
      }
      if (!r.passed()) {
        std::cerr << "verification failed: " << r.counterexample << '\n';
        return kVerifyFailed;
      }
      return kOk;
    }

    if (selftest->parsed()) {
      const std::int64_t b = std::max<std::int64_t>(box, 2);
      return emit_reports({oracle_sweep(b, jobs), associativity_sweep(200, b, 1), chebyshev_sweep(b, 8),
                           jones_wenzl_sweep(12), closure_sweep(2, b), ab_certificate_sweep(b),
                           quotient_sweep(b), reduction_sweep(b), generators_check(), diffeo_sweep(100, 1),
                           intersection_sweep(100, 1)},
                          json);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ArithmeticError& e) {
    std::cerr << "arithmetic error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
