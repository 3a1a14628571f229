#include "skein/torus3.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace skein {

namespace {

std::int64_t mod2(std::int64_t x) { return ((x % 2) + 2) % 2; }

std::int64_t content(const Vec3& v) { return std::gcd(std::gcd(v[0], v[1]), v[2]); }

Mat3 multiply(const Mat3& a, const Mat3& b) {
  Mat3 out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

Mat3 transpose(const Mat3& m) {
  Mat3 out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out[i][j] = m[j][i];
  }
  return out;
}

bool is_permutation(const Permutation3& s) {
  std::array<bool, 3> seen{};
  for (int k : s) {
    if (k < 0 || k > 2 || seen[static_cast<std::size_t>(k)]) return false;
    seen[static_cast<std::size_t>(k)] = true;
  }
  return true;
}

Vec3 permute(const Vec3& c, const Permutation3& s) { return {c[s[0]], c[s[1]], c[s[2]]}; }

Vec3 unpermute(const Vec3& w, const Permutation3& s) {
  Vec3 c{};
  for (int k = 0; k < 3; ++k) c[s[k]] = w[k];
  return c;
}

Curve3 parity_curve(const Curve3& c) { return Curve3(mod2(c[0]), mod2(c[1]), mod2(c[2])); }

}  // namespace

std::int64_t det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Vec3 mat_vec(const Mat3& m, const Vec3& v) {
  Vec3 out{};
  for (int i = 0; i < 3; ++i) out[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  return out;
}

Vec3 column(const Mat3& m, int j) { return {m[0][j], m[1][j], m[2][j]}; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::int64_t dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Mat3 identity3() { return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

Curve3::Curve3(std::int64_t p, std::int64_t q, std::int64_t r) : v_{p, q, r} {
  if (content(v_) != 1) {
    throw std::invalid_argument("Curve3: coordinates must be coprime, got " + to_string());
  }
  const std::int64_t lead = p != 0 ? p : (q != 0 ? q : r);
  if (lead < 0) v_ = {-p, -q, -r};
}

std::string Curve3::to_string() const {
  return "[" + std::to_string(v_[0]) + "," + std::to_string(v_[1]) + "," + std::to_string(v_[2]) + "]";
}

StandardEmbedding::StandardEmbedding(const Mat3& matrix, std::array<int, 2> columns)
    : matrix_(matrix), columns_(columns) {
  if (det3(matrix_) != 1) throw std::invalid_argument("StandardEmbedding: determinant must be 1");
  for (int c : columns_) {
    if (c < 0 || c > 2) throw std::invalid_argument("StandardEmbedding: column index out of range");
  }
  if (columns_[0] == columns_[1]) throw std::invalid_argument("StandardEmbedding: columns must differ");
}

ExtGcd extended_gcd(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw std::invalid_argument("extended_gcd: (0,0) has no gcd");
  // iterative Euclid on (|p|, |q|)
  std::int64_t r0 = std::abs(p), r1 = std::abs(q);
  std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t k = r0 / r1;
    r0 = std::exchange(r1, r0 - k * r1);
    s0 = std::exchange(s1, s0 - k * s1);
    t0 = std::exchange(t1, t0 - k * t1);
  }
  const std::int64_t d = r0;
  std::int64_t lambda = p < 0 ? -s0 : s0;
  std::int64_t mu = q < 0 ? -t0 : t0;
  if (q == 0) return {d, p > 0 ? 1 : -1, 0};
  // general solution: lambda + k*q/d, mu - k*p/d
  const std::int64_t period = std::abs(q) / d;
  const std::int64_t normalized = ((lambda % period) + period) % period;
  const std::int64_t k = (normalized - lambda) / (q / d);
  lambda = normalized;
  mu -= k * (p / d);
  return {d, lambda, mu};
}

StandardEmbedding build_M1(std::int64_t p, std::int64_t q) {
  if (p == 0 || q == 0) throw std::invalid_argument("build_M1: both coordinates must be nonzero");
  const auto [d, lambda, mu] = extended_gcd(p, q);
  return StandardEmbedding({{{p / d, -mu, 0}, {q / d, lambda, 0}, {0, 0, 1}}}, {0, 2});
}

StandardEmbedding build_M2(std::int64_t q) {
  return StandardEmbedding({{{0, 0, 1}, {q, -1, 0}, {1, 0, 0}}}, {0, 2});
}

StandardEmbedding build_M3() { return StandardEmbedding({{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}}}, {0, 1}); }

StandardEmbedding trivial_embedding() { return StandardEmbedding(identity3(), {0, 1}); }

StandardEmbedding embedding_for_plane(std::int64_t a, std::int64_t b, std::int64_t c) {
  const std::int64_t g = content({a, b, c});
  if (g == 0) throw std::invalid_argument("embedding_for_plane: zero normal");
  // M n = e1 gives n . (M^T e_j) = 0 for j = 1, 2
  const Mat3 m = find_diffeo(Curve3(a / g, b / g, c / g));
  return StandardEmbedding(transpose(m), {1, 2});
}

Curve3 embed_push(const StandardEmbedding& e, std::int64_t a, std::int64_t b) {
  if (std::gcd(a, b) != 1) throw std::invalid_argument("embed_push: (a,b) must be a coprime pair");
  const Vec3 u = e.first();
  const Vec3 v = e.second();
  return Curve3(a * u[0] + b * v[0], a * u[1] + b * v[1], a * u[2] + b * v[2]);
}

Reduction3Certificate reduce_pqr(const Curve3& c) {
  const Curve3 target = parity_curve(c);
  Reduction3Certificate cert{c, target, {}};
  Curve3 cur = c;

  for (int guard = 0; cur != target; ++guard) {
    if (guard > 8) throw std::logic_error("reduce_pqr: routing did not terminate for " + c.to_string());
    const Vec3& v = cur.coords();
    int zero_at = -1;
    int nonzero = 0;
    for (int k = 0; k < 3; ++k) {
      if (v[k] == 0) {
        zero_at = k;
      } else {
        ++nonzero;
      }
    }
    if (nonzero < 2) throw std::logic_error("reduce_pqr: unit vector differs from its parity class");

    if (nonzero == 2) {
      // one coordinate vanishes: permute it last and use the trivial torus
      Permutation3 perm{};
      int slot = 0;
      for (int k = 0; k < 3; ++k) {
        if (k != zero_at) perm[slot++] = k;
      }
      perm[2] = zero_at;
      const Vec3 w = permute(v, perm);
      const StandardEmbedding e = trivial_embedding();
      const LatticePair from{w[0], w[1]};
      const LatticePair to{mod2(w[0]), mod2(w[1])};
      cert.steps.push_back({e, from, to, perm});
      cur = Curve3(unpermute(embed_push(e, to.p, to.q).coords(), perm));
      continue;
    }

    // all three nonzero; [p,q,r] = [-p,-q,-r], so take r > 0
    const Vec3 w = v[2] < 0 ? Vec3{-v[0], -v[1], -v[2]} : v;
    if (w[2] != 1) {
      const StandardEmbedding e = build_M1(w[0], w[1]);
      const std::int64_t d = std::gcd(w[0], w[1]);
      const LatticePair from{d, w[2]};
      const LatticePair to{mod2(d), mod2(w[2])};
      cert.steps.push_back({e, from, to, {0, 1, 2}});
      cur = embed_push(e, to.p, to.q);
    } else if (w[0] == 1) {
      const StandardEmbedding e = build_M3();
      const LatticePair from{1, w[1]};
      const LatticePair to{1, mod2(w[1])};
      cert.steps.push_back({e, from, to, {0, 1, 2}});
      cur = embed_push(e, to.p, to.q);
    } else {
      const StandardEmbedding e = build_M2(w[1]);
      const LatticePair from{1, w[0]};
      const LatticePair to{1, mod2(w[0])};
      cert.steps.push_back({e, from, to, {0, 1, 2}});
      cur = embed_push(e, to.p, to.q);
    }
  }
  return cert;
}

CheckResult verify_reduction_certificate(const Reduction3Certificate& cert) {
  auto fail = [](std::string why) { return CheckResult{false, std::move(why)}; };
  if (cert.canonical != parity_curve(cert.input)) return fail("canonical is not the parity class of the input");

  Curve3 cur = cert.input;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& s = cert.steps[i];
    const std::string where = "step " + std::to_string(i) + ": ";
    if (det3(s.embedding.matrix()) != 1) return fail(where + "determinant is not 1");
    if (!is_permutation(s.permutation)) return fail(where + "invalid permutation");
    if (std::gcd(s.from_pair.p, s.from_pair.q) != 1 || std::gcd(s.to_pair.p, s.to_pair.q) != 1) {
      return fail(where + "pairs must be coprime");
    }
    if (mod2(s.from_pair.p) != mod2(s.to_pair.p) || mod2(s.from_pair.q) != mod2(s.to_pair.q)) {
      return fail(where + "pairs are not congruent mod 2");
    }
    if (ab_reduce_label(s.from_pair.p, s.from_pair.q) != ab_reduce_label(s.to_pair.p, s.to_pair.q)) {
      return fail(where + "pairs lie in different abelianization classes");
    }
    const Curve3 working(permute(cur.coords(), s.permutation));
    if (embed_push(s.embedding, s.from_pair.p, s.from_pair.q) != working) {
      return fail(where + "from_pair does not push to the current curve");
    }
    const Curve3 pushed = embed_push(s.embedding, s.to_pair.p, s.to_pair.q);
    const Curve3 next(unpermute(pushed.coords(), s.permutation));
    if (mod2(next[0]) != mod2(cur[0]) || mod2(next[1]) != mod2(cur[1]) || mod2(next[2]) != mod2(cur[2])) {
      return fail(where + "step changes the homology class");
    }
    cur = next;
  }
  if (cur != cert.canonical) return fail("chain ends at " + cur.to_string() + ", not " + cert.canonical.to_string());
  return {};
}

Curve3 common_curve(const StandardEmbedding& e1, const StandardEmbedding& e2) {
  const Vec3 dir = cross(e1.normal(), e2.normal());
  const std::int64_t g = content(dir);
  if (g == 0) throw std::invalid_argument("common_curve: the embedded planes coincide");
  return Curve3(dir[0] / g, dir[1] / g, dir[2] / g);
}

std::string Z2Class::to_string() const {
  return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

Z2Class homology_class(const Curve3& c) {
  return {static_cast<std::uint8_t>(mod2(c[0])), static_cast<std::uint8_t>(mod2(c[1])),
          static_cast<std::uint8_t>(mod2(c[2]))};
}

Mat3 find_diffeo(const Curve3& c) {
  const auto [p, q, r] = c.coords();
  // block on (x, y) sending (p, q) to (d, 0)
  Mat3 first = identity3();
  std::int64_t d = 0;
  if (p != 0 || q != 0) {
    const ExtGcd g = extended_gcd(p, q);
    d = g.d;
    first[0] = {g.lambda, g.mu, 0};
    first[1] = {-q / d, p / d, 0};
  }
  // block on (x, z) sending (d, r) to (1, 0); gcd(d, r) = 1
  const ExtGcd h = extended_gcd(d, r);
  Mat3 second = identity3();
  second[0] = {h.lambda, 0, h.mu};
  second[2] = {-r, 0, d};
  return multiply(second, first);
}

Z2Class Generator::homology() const {
  return kind == Kind::Curve ? homology_class(*curve) : Z2Class{};
}

std::string Generator::to_string() const {
  switch (kind) {
    case Kind::Empty: return "empty";
    case Kind::Curve: return curve->to_string();
    case Kind::Alpha: return "alpha";
  }
  return "?";
}

std::vector<Generator> generators9() {
  std::vector<Generator> out;
  out.push_back({Generator::Kind::Empty, std::nullopt});
  for (const Vec3& v : {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}, Vec3{1, 1, 0}, Vec3{1, 0, 1},
                        Vec3{0, 1, 1}, Vec3{1, 1, 1}}) {
    out.push_back({Generator::Kind::Curve, Curve3(v)});
  }
  out.push_back({Generator::Kind::Alpha, std::nullopt});
  return out;
}

GradeBuckets<Generator> grade_decompose(std::span<const Generator> items) {
  GradeBuckets<Generator> out;
  for (const auto& g : items) out[g.homology().index()].push_back(g);
  return out;
}

GradeBuckets<Curve3> grade_decompose(std::span<const Curve3> curves) {
  GradeBuckets<Curve3> out;
  for (const auto& c : curves) out[homology_class(c).index()].push_back(c);
  return out;
}

}  // namespace skein
