#include "skein/sweeps.hpp"

#include <chrono>
#include <future>
#include <numeric>
#include <random>
#include <vector>

#include "skein/abelianization.hpp"
#include "skein/qtorus.hpp"
#include "skein/skein_t2.hpp"
#include "skein/torus3.hpp"

namespace skein {

namespace {

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

SweepReport named(std::string name) {
  SweepReport r;
  r.name = std::move(name);
  return r;
}

void record_failure(SweepReport& r, const std::string& what) {
  if (r.failures++ == 0) r.counterexample = what;
}

std::string pair_str(std::int64_t p, std::int64_t q) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

QTorusElement phi(const SkeinT2Element& x) {
  QTorusElement out;
  for (const auto& [label, c] : x.terms()) {
    QTorusElement image = label.is_empty() ? QTorusElement(RationalFunction(1)) : embed_curve(label.p(), label.q());
    image *= c;
    out += image;
  }
  return out;
}

// Integer polynomials in a commuting variable x, index = degree.
using IntPoly = std::vector<std::int64_t>;

IntPoly poly_sub(IntPoly a, const IntPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

IntPoly times_x(const IntPoly& a) {
  IntPoly out(a.size() + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i + 1] = a[i];
  return out;
}

// P_0 = p0, P_1 = x, P_{n+1} = x P_n - P_{n-1}
std::vector<IntPoly> chebyshev_family(std::int64_t max_n, std::int64_t p0) {
  std::vector<IntPoly> out{IntPoly{p0}, IntPoly{0, 1}};
  for (std::int64_t n = 1; n < max_n; ++n) out.push_back(poly_sub(times_x(out[n]), out[n - 1]));
  out.resize(static_cast<std::size_t>(max_n) + 1);
  return out;
}

std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

Mat3 random_sl3(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> idx(0, 2);
  std::uniform_int_distribution<std::int64_t> mult(-2, 2);
  Mat3 m = identity3();
  for (int op = 0; op < 6; ++op) {
    const int i = idx(rng);
    int j = idx(rng);
    while (j == i) j = idx(rng);
    const std::int64_t k = mult(rng);
    for (int c = 0; c < 3; ++c) m[i][c] += k * m[j][c];
  }
  return m;
}

std::array<int, 2> random_columns(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> idx(0, 2);
  const int a = idx(rng);
  int b = idx(rng);
  while (b == a) b = idx(rng);
  return {a, b};
}

void check_common_curve(SweepReport& r, const StandardEmbedding& e1, const StandardEmbedding& e2) {
  ++r.checked;
  const Curve3 c = common_curve(e1, e2);
  const bool on_both = dot(c.coords(), e1.normal()) == 0 && dot(c.coords(), e2.normal()) == 0;
  const auto& v = c.coords();
  const bool primitive = std::gcd(std::gcd(v[0], v[1]), v[2]) == 1;
  if (!on_both || !primitive) record_failure(r, "common_curve " + c.to_string() + " not primitive on both planes");
}

}  // namespace

SweepReport oracle_sweep(std::int64_t box, unsigned jobs) {
  SweepReport report = named("oracle equivalence");
  Timer timer;
  const std::int64_t side = 2 * box + 1;

  // one chunk per value of p; chunks are merged in p order
  auto chunk = [box](std::int64_t p) {
    SweepReport part;
    for (std::int64_t q = -box; q <= box; ++q) {
      const SkeinT2Element a = make_curve(p, q);
      const QTorusElement phi_a = phi(a);
      for (std::int64_t r = -box; r <= box; ++r) {
        for (std::int64_t s = -box; s <= box; ++s) {
          const SkeinT2Element b = make_curve(r, s);
          ++part.checked;
          if (phi(fg_product(a, b)) != qt_mul(phi_a, phi(b))) {
            record_failure(part, pair_str(p, q) + " * " + pair_str(r, s));
          }
        }
      }
    }
    return part;
  };

  std::vector<SweepReport> parts(static_cast<std::size_t>(side));
  if (jobs <= 1) {
    for (std::int64_t i = 0; i < side; ++i) parts[i] = chunk(i - box);
  } else {
    for (std::int64_t start = 0; start < side; start += jobs) {
      std::vector<std::future<SweepReport>> running;
      for (std::int64_t i = start; i < std::min<std::int64_t>(side, start + jobs); ++i) {
        running.push_back(std::async(std::launch::async, chunk, i - box));
      }
      for (std::size_t k = 0; k < running.size(); ++k) parts[start + k] = running[k].get();
    }
  }
  for (const auto& part : parts) {
    report.checked += part.checked;
    if (part.failures > 0 && report.failures == 0) report.counterexample = part.counterexample;
    report.failures += part.failures;
  }
  report.seconds = timer.seconds();
  return report;
}

SweepReport associativity_sweep(std::size_t samples, std::int64_t box, std::uint64_t seed) {
  SweepReport report = named("associativity");
  Timer timer;
  auto rng = make_rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-box, box);
  for (std::size_t i = 0; i < samples; ++i) {
    std::int64_t v[6];
    for (auto& x : v) x = coord(rng);
    const SkeinT2Element a = make_curve(v[0], v[1]);
    const SkeinT2Element b = make_curve(v[2], v[3]);
    const SkeinT2Element c = make_curve(v[4], v[5]);
    ++report.checked;
    if (fg_product(fg_product(a, b), c) != fg_product(a, fg_product(b, c))) {
      record_failure(report, pair_str(v[0], v[1]) + " " + pair_str(v[2], v[3]) + " " + pair_str(v[4], v[5]));
    }
  }
  report.seconds = timer.seconds();
  return report;
}

SweepReport chebyshev_sweep(std::int64_t box, std::int64_t max_n) {
  SweepReport report = named("chebyshev consistency");
  Timer timer;
  for (std::int64_t p = -box; p <= box; ++p) {
    for (std::int64_t q = -box; q <= box; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (std::int64_t n = 0; n <= max_n; ++n) {
        ++report.checked;
        if (chebyshev_T(n, p, q) != make_curve(n * p, n * q)) {
          record_failure(report, "T_" + std::to_string(n) + pair_str(p, q));
        }
      }
    }
  }
  report.seconds = timer.seconds();
  return report;
}

SweepReport jones_wenzl_sweep(std::int64_t max_n) {
  SweepReport report = named("jones-wenzl change of basis");
  Timer timer;
  const auto T = chebyshev_family(max_n, 2);
  const auto S = chebyshev_family(max_n, 1);
  for (std::int64_t n = 0; n <= max_n; ++n) {
    ++report.checked;
    IntPoly expanded;
    for (const auto& [k, c] : t_to_jw(n)) {
      IntPoly term = S.at(static_cast<std::size_t>(k));
      for (auto& x : term) x *= c;
      expanded = poly_sub(expanded, poly_sub(IntPoly{}, term));
    }
    bool ok = expanded == T[n];
    if (n >= 2) ok = ok && T[n] == poly_sub(S[n], S[n - 2]);
    if (!ok) record_failure(report, "n=" + std::to_string(n));
  }
  report.seconds = timer.seconds();
  return report;
}

SweepReport closure_sweep(std::int64_t min_box, std::int64_t max_box) {
  SweepReport report = named("abelianization closure");
  Timer timer;
  for (std::int64_t n = min_box; n <= max_box; ++n) {
    const BoxPartition part = closure_check(n);
    ++report.checked;
    if (part.classes.size() != 4) {
      record_failure(report, "N=" + std::to_string(n) + ": " + std::to_string(part.classes.size()) + " classes");
      continue;
    }
    for (const auto& cls : part.classes) {
      const AbClass expected = ab_reduce_label(cls.front().p, cls.front().q);
      for (const auto& u : cls) {
        ++report.checked;
        if (ab_reduce_label(u.p, u.q) != expected) {
          record_failure(report, "N=" + std::to_string(n) + ": " + pair_str(u.p, u.q) + " in wrong class");
        }
      }
    }
  }
  report.seconds = timer.seconds();
  return report;
}

SweepReport ab_certificate_sweep(std::int64_t box) {
  SweepReport report = named("commutator certificates");
  Timer timer;
  for (std::int64_t p = -box; p <= box; ++p) {
    for (std::int64_t q = -box; q <= box; ++q) {
      if (p == 0 && q == 0) continue;
      ++report.checked;
      const AbCertificate cert = ab_certificate(p, q);
      const CheckResult check = verify_ab_certificate(cert);
      if (!check) record_failure(report, pair_str(p, q) + ": " + check.detail);
    }
  }
  report.seconds = timer.seconds();
  return report;
}

SweepReport reduction_sweep(std::int64_t box) {
  SweepReport report = named("curve reduction");
  Timer timer;
  for (std::int64_t p = -box; p <= box; ++p) {
    for (std::int64_t q = -box; q <= box; ++q) {
      for (std::int64_t r = -box; r <= box; ++r) {
        if (std::gcd(std::gcd(p, q), r) != 1) continue;
        ++report.checked;
        const Curve3 c(p, q, r);
        const Reduction3Certificate cert = reduce_pqr(c);
        const CheckResult check = verify_reduction_certificate(cert);
        if (!check) {
          record_failure(report, c.to_string() + ": " + check.detail);
        } else if (homology_class(cert.canonical) != homology_class(c)) {
          record_failure(report, c.to_string() + ": grading not preserved");
        }
      }
    }
  }
  report.seconds = timer.seconds();
  return report;
}

SweepReport generators_check() {
  SweepReport report = named("generators");
  Timer timer;
  const auto gens = generators9();
  ++report.checked;
  if (gens.size() != 9) record_failure(report, std::to_string(gens.size()) + " generators");

  std::vector<Curve3> curves;
  for (const auto& g : gens) {
    if (g.kind == Generator::Kind::Curve) curves.push_back(*g.curve);
  }
  ++report.checked;
  if (curves.size() != 7) record_failure(report, std::to_string(curves.size()) + " curve generators");

  const auto curve_buckets = grade_decompose(std::span<const Curve3>(curves));
  for (std::size_t j = 0; j < 8; ++j) {
    ++report.checked;
    const std::size_t want = j == 0 ? 0 : 1;
    if (curve_buckets[j].size() != want) record_failure(report, "bucket " + std::to_string(j) + " is not a singleton");
  }

  const auto all = grade_decompose(std::span<const Generator>(gens));
  ++report.checked;
  if (all.size() != 8) record_failure(report, "grade_decompose does not give 8 buckets");
  ++report.checked;
  if (all[0].size() != 2) record_failure(report, "trivial class should hold empty and alpha");
  report.seconds = timer.seconds();
  return report;
}

SweepReport diffeo_sweep(std::size_t samples, std::uint64_t seed) {
  SweepReport report = named("diffeomorphism to [1,0,0]");
  Timer timer;
  std::vector<Curve3> inputs;
  for (const auto& g : generators9()) {
    if (g.kind == Generator::Kind::Curve) inputs.push_back(*g.curve);
  }
  auto rng = make_rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-60, 60);
  while (inputs.size() < samples + 7) {
    const std::int64_t p = coord(rng), q = coord(rng), r = coord(rng);
    if (std::gcd(std::gcd(p, q), r) == 1) inputs.emplace_back(p, q, r);
  }
  for (const auto& c : inputs) {
    ++report.checked;
    const Mat3 m = find_diffeo(c);
    if (det3(m) != 1 || mat_vec(m, c.coords()) != Vec3{1, 0, 0}) {
      record_failure(report, c.to_string());
    }
  }
  report.seconds = timer.seconds();
  return report;
}

SweepReport intersection_sweep(std::size_t samples, std::uint64_t seed) {
  SweepReport report = named("torus intersections");
  Timer timer;

  // {z=0} and {x+2y+3z=0} meet along (-b,a,0) = (-2,1,0)
  const StandardEmbedding trivial = trivial_embedding();
  const StandardEmbedding plane = embedding_for_plane(1, 2, 3);
  check_common_curve(report, trivial, plane);
  ++report.checked;
  if (common_curve(trivial, plane) != Curve3(-2, 1, 0)) record_failure(report, "worked example is not [2,-1,0]");

  auto rng = make_rng(seed);
  std::size_t done = 0;
  while (done < samples) {
    const StandardEmbedding e1(random_sl3(rng), random_columns(rng));
    const StandardEmbedding e2(random_sl3(rng), random_columns(rng));
    if (cross(e1.normal(), e2.normal()) == Vec3{0, 0, 0}) continue;
    check_common_curve(report, e1, e2);
    ++done;
  }
  report.seconds = timer.seconds();
  return report;
}

SweepReport quotient_sweep(std::int64_t box) {
  SweepReport report = named("quotient well-definedness");
  Timer timer;
  for (std::int64_t p = -box; p <= box; ++p) {
    for (std::int64_t q = -box; q <= box; ++q) {
      const SkeinT2Element a = make_curve(p, q);
      for (std::int64_t r = -box; r <= box; ++r) {
        for (std::int64_t s = -box; s <= box; ++s) {
          const SkeinT2Element b = make_curve(r, s);
          ++report.checked;
          if (!ab_reduce(commutator(a, b)).is_zero() || ab_reduce(fg_product(a, b)) != ab_reduce(fg_product(b, a))) {
            record_failure(report, pair_str(p, q) + ", " + pair_str(r, s));
          }
        }
      }
    }
  }
  report.seconds = timer.seconds();
  return report;
}

}  // namespace skein
