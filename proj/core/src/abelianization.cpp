#include "skein/abelianization.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "skein/union_find.hpp"

namespace skein {

namespace {

bool odd(std::int64_t x) { return x % 2 != 0; }

std::int64_t det(const LatticePair& a, const LatticePair& b) { return a.p * b.q - a.q * b.p; }

SkeinT2Element curve(const LatticePair& u) { return make_curve(u.p, u.q); }

class ChainBuilder {
 public:
  explicit ChainBuilder(LatticePair start) : cur_(start) {}

  const LatticePair& current() const { return cur_; }

  void step_to(LatticePair to, LatticePair conjugator) {
    const LatticePair mid{(cur_.p + to.p) / 2, (cur_.q + to.q) / 2};
    const std::int64_t d = det(conjugator, mid);
    if (d == 0) throw std::logic_error("abelianization rewrite with zero determinant");
    // commutator(e, m) = (A^d - A^-d) ((m+e)_T - (m-e)_T)
    RationalFunction scale = RationalFunction::quantum_difference(d).inverse();
    const bool from_is_plus = cur_.p == mid.p + conjugator.p && cur_.q == mid.q + conjugator.q;
    if (!from_is_plus) scale = -scale;
    steps_.push_back({cur_, to, conjugator, std::move(scale)});
    cur_ = to;
  }

  std::vector<AbStep> take() { return std::move(steps_); }

 private:
  LatticePair cur_;
  std::vector<AbStep> steps_;
};

}  // namespace

CurveLabel ab_class_label(AbClass c) {
  switch (c) {
    case AbClass::Empty: return CurveLabel::empty();
    case AbClass::C10: return CurveLabel::pair(1, 0);
    case AbClass::C01: return CurveLabel::pair(0, 1);
    case AbClass::C11: return CurveLabel::pair(1, 1);
    case AbClass::C20: return CurveLabel::pair(2, 0);
  }
  throw std::invalid_argument("unknown AbClass");
}

std::string to_string(AbClass c) { return ab_class_label(c).to_string(); }

AbClass ab_reduce_label(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw std::invalid_argument("ab_reduce_label: (0,0) is 2*empty, not a curve");
  if (odd(p)) return odd(q) ? AbClass::C11 : AbClass::C10;
  return odd(q) ? AbClass::C01 : AbClass::C20;
}

AbElement::AbElement(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

RationalFunction AbElement::coefficient(AbClass c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? RationalFunction() : it->second;
}

void AbElement::add(AbClass c, const RationalFunction& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(c, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::string AbElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [c, v] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + v.to_string() + ")*" + skein::to_string(c);
  }
  return out;
}

AbElement ab_reduce(const SkeinT2Element& x) {
  AbElement out;
  for (const auto& [label, c] : x.terms()) {
    out.add(label.is_empty() ? AbClass::Empty : ab_reduce_label(label.p(), label.q()), c);
  }
  return out;
}

AbCertificate ab_certificate(std::int64_t p, std::int64_t q) {
  AbCertificate cert;
  cert.input = {p, q};
  cert.canonical = ab_reduce_label(p, q);
  if (CurveLabel::pair(p, q) == ab_class_label(cert.canonical)) return cert;

  ChainBuilder chain(cert.input);
  constexpr LatticePair e1{1, 0};
  constexpr LatticePair e2{0, 1};

  // (p,0) = (p,2), valid since p != 0
  if (q == 0) chain.step_to({p, 2}, e2);

  // first coordinate with (1,0), valid while q != 0; even p is parked at 2
  const std::int64_t p_target = odd(p) ? 1 : 2;
  while (chain.current().p > p_target) chain.step_to({chain.current().p - 2, chain.current().q}, e1);
  while (chain.current().p < p_target) chain.step_to({chain.current().p + 2, chain.current().q}, e1);

  // second coordinate with (0,1), valid since p is 1 or 2
  const std::int64_t q_target = odd(q) ? 1 : 0;
  while (chain.current().q > q_target) chain.step_to({chain.current().p, chain.current().q - 2}, e2);
  while (chain.current().q < q_target) chain.step_to({chain.current().p, chain.current().q + 2}, e2);

  // (2,1) = (0,1)
  if (chain.current() == LatticePair{2, 1}) chain.step_to({0, 1}, e1);

  cert.steps = chain.take();
  return cert;
}

SkeinT2Element telescope(const AbCertificate& cert) {
  SkeinT2Element sum;
  for (const auto& s : cert.steps) {
    const LatticePair mid{(s.from.p + s.to.p) / 2, (s.from.q + s.to.q) / 2};
    SkeinT2Element term = commutator(curve(s.conjugator), curve(mid));
    term *= s.scale;
    sum += term;
  }
  return sum;
}

CheckResult verify_ab_certificate(const AbCertificate& cert) {
  auto fail = [](std::string why) { return CheckResult{false, std::move(why)}; };
  const auto& in = cert.input;
  if (in.p == 0 && in.q == 0) return fail("input is (0,0)");
  if (ab_reduce_label(in.p, in.q) != cert.canonical) return fail("canonical class does not match input parities");

  LatticePair cur = in;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const AbStep& s = cert.steps[i];
    const std::string where = "step " + std::to_string(i) + ": ";
    if (s.from != cur) return fail(where + "chain is not continuous");
    const auto& e = s.conjugator;
    if (std::abs(e.p) + std::abs(e.q) != 1) return fail(where + "conjugator is not a unit vector");
    const bool plus = s.to.p == s.from.p + 2 * e.p && s.to.q == s.from.q + 2 * e.q;
    const bool minus = s.to.p == s.from.p - 2 * e.p && s.to.q == s.from.q - 2 * e.q;
    if (!plus && !minus) return fail(where + "to is not from +- 2*conjugator");
    const LatticePair mid{(s.from.p + s.to.p) / 2, (s.from.q + s.to.q) / 2};
    if (det(e, mid) == 0) return fail(where + "determinant is zero, rewrite not justified");
    SkeinT2Element witness = commutator(curve(e), curve(mid));
    witness *= s.scale;
    if (witness != curve(s.from) - curve(s.to)) return fail(where + "commutator expansion mismatch");
    cur = s.to;
  }
  if (CurveLabel::pair(cur.p, cur.q) != ab_class_label(cert.canonical)) {
    return fail("chain does not end at the canonical class");
  }
  const SkeinT2Element expected = curve(in) - SkeinT2Element(ab_class_label(cert.canonical));
  if (telescope(cert) != expected) return fail("telescoped sum differs from input - canonical");
  return {};
}

BoxPartition closure_check(std::int64_t N) {
  if (N < 2) throw std::invalid_argument("closure_check: box size must be at least 2");
  const std::int64_t side = 2 * N + 1;
  auto in_box = [N](std::int64_t p, std::int64_t q) {
    return p >= -N && p <= N && q >= -N && q <= N;
  };
  auto index = [N, side](std::int64_t p, std::int64_t q) {
    return static_cast<std::size_t>((p + N) * side + (q + N));
  };

  UnionFind uf(static_cast<std::size_t>(side * side));
  for (std::int64_t p = -N; p <= N; ++p) {
    for (std::int64_t q = -N; q <= N; ++q) {
      uf.unite(index(p, q), index(-p, -q));
      for (std::int64_t r = -N; r <= N; ++r) {
        for (std::int64_t s = -N; s <= N; ++s) {
          if (p * s - q * r == 0) continue;
          if (!in_box(p + r, q + s) || !in_box(p - r, q - s)) continue;
          uf.unite(index(p + r, q + s), index(p - r, q - s));
        }
      }
    }
  }

  // Roots are smallest indices, and index order is lexicographic (p, q) order.
  std::map<std::size_t, std::vector<LatticePair>> by_root;
  for (std::int64_t p = -N; p <= N; ++p) {
    for (std::int64_t q = -N; q <= N; ++q) {
      if (p == 0 && q == 0) continue;
      by_root[uf.find(index(p, q))].push_back({p, q});
    }
  }
  BoxPartition out;
  out.box = N;
  for (auto& [root, members] : by_root) out.classes.push_back(std::move(members));
  std::sort(out.classes.begin(), out.classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace skein
