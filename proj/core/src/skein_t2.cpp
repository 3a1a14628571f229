#include "skein/skein_t2.hpp"

#include <numeric>
#include <utility>
#include <vector>

namespace skein {

CurveLabel CurveLabel::pair(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw std::invalid_argument("(0,0) is not a curve label");
  CurveLabel label;
  label.is_pair_ = true;
  if (p < 0 || (p == 0 && q < 0)) {
    p = -p;
    q = -q;
  }
  label.p_ = p;
  label.q_ = q;
  return label;
}

std::string CurveLabel::to_string() const {
  if (!is_pair_) return "empty";
  return "(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

SkeinT2Element::SkeinT2Element(const RationalFunction& scalar) {
  add_term(CurveLabel::empty(), scalar);
}

SkeinT2Element::SkeinT2Element(const CurveLabel& label, const RationalFunction& c) {
  add_term(label, c);
}

SkeinT2Element::SkeinT2Element(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

bool SkeinT2Element::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_empty());
}

RationalFunction SkeinT2Element::coefficient(const CurveLabel& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? RationalFunction() : it->second;
}

void SkeinT2Element::add_term(const CurveLabel& label, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(label, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SkeinT2Element SkeinT2Element::operator-() const {
  SkeinT2Element out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

SkeinT2Element& SkeinT2Element::operator+=(const SkeinT2Element& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

SkeinT2Element& SkeinT2Element::operator-=(const SkeinT2Element& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
  return *this;
}

SkeinT2Element& SkeinT2Element::operator*=(const RationalFunction& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::string SkeinT2Element::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [label, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*" + label.to_string();
  }
  return out;
}

SkeinT2Element make_curve(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) return SkeinT2Element(RationalFunction(2));
  return SkeinT2Element(CurveLabel::pair(p, q));
}

namespace {

SkeinT2Element label_product(const CurveLabel& a, const CurveLabel& b) {
  if (a.is_empty()) return SkeinT2Element(b);
  if (b.is_empty()) return SkeinT2Element(a);
  const std::int64_t det = a.p() * b.q() - a.q() * b.p();
  SkeinT2Element out = make_curve(a.p() + b.p(), a.q() + b.q());
  out *= RationalFunction::var_power(det);
  SkeinT2Element diff = make_curve(a.p() - b.p(), a.q() - b.q());
  diff *= RationalFunction::var_power(-det);
  return out += diff;
}

}  // namespace

SkeinT2Element fg_product(const SkeinT2Element& x, const SkeinT2Element& y) {
  SkeinT2Element out;
  for (const auto& [la, ca] : x.terms()) {
    for (const auto& [lb, cb] : y.terms()) {
      SkeinT2Element term = label_product(la, lb);
      term *= ca * cb;
      out += term;
    }
  }
  return out;
}

SkeinT2Element chebyshev_T(std::int64_t n, std::int64_t p, std::int64_t q) {
  if (n < 0) throw std::invalid_argument("chebyshev_T: negative degree");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("chebyshev_T: gamma must be a coprime pair");
  const SkeinT2Element gamma = make_curve(p, q);
  SkeinT2Element prev(RationalFunction(2));
  if (n == 0) return prev;
  SkeinT2Element cur = gamma;
  for (std::int64_t k = 1; k < n; ++k) {
    SkeinT2Element next = fg_product(gamma, cur) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::map<std::int64_t, std::int64_t> t_to_jw(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("t_to_jw: negative degree");
  // Coefficient vectors in the S basis; gamma * S_k = S_{k+1} + S_{k-1}, gamma * S_0 = S_1.
  using Vec = std::vector<std::int64_t>;
  auto times_gamma = [](const Vec& v) {
    Vec out(v.size() + 1, 0);
    for (std::size_t k = 0; k < v.size(); ++k) {
      out[k + 1] += v[k];
      if (k > 0) out[k - 1] += v[k];
    }
    return out;
  };
  Vec prev{2};
  Vec cur{0, 1};
  if (n == 0) cur = prev;
  for (std::int64_t k = 1; k < n; ++k) {
    Vec next = times_gamma(cur);
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  std::map<std::int64_t, std::int64_t> out;
  for (std::size_t k = 0; k < cur.size(); ++k) {
    if (cur[k] != 0) out.emplace(static_cast<std::int64_t>(k), cur[k]);
  }
  return out;
}

SkeinT2Element framing_twist(const SkeinT2Element& x, std::int64_t k) {
  const RationalFunction factor = RationalFunction::monomial(k % 2 == 0 ? 1 : -1, 3 * k);
  SkeinT2Element out = x;
  return out *= factor;
}

SkeinT2Element commutator(const SkeinT2Element& x, const SkeinT2Element& y) {
  return fg_product(x, y) - fg_product(y, x);
}

}  // namespace skein
