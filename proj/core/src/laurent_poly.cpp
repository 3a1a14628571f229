#include "skein/laurent_poly.hpp"

#include <sstream>
#include <utility>
#include <vector>

namespace skein {

namespace {

using Dense = std::vector<Rational>;

Dense to_dense(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  if (p.min_exponent() < 0) {
    throw ArithmeticError("expected an ordinary polynomial, got negative powers of A");
  }
  Dense out(static_cast<std::size_t>(p.max_exponent()) + 1);
  for (const auto& [k, c] : p.terms()) out[static_cast<std::size_t>(k)] = c;
  return out;
}

LaurentPoly from_dense(const Dense& d) {
  LaurentPoly::Terms t;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (sgn(d[k]) != 0) t.emplace(static_cast<Exponent>(k), d[k]);
  }
  return LaurentPoly(std::move(t));
}

void trim(Dense& d) {
  while (!d.empty() && sgn(d.back()) == 0) d.pop_back();
}

// Long division; divisor must be nonzero and trimmed.
std::pair<Dense, Dense> divmod(Dense num, const Dense& den) {
  trim(num);
  if (num.size() < den.size()) return {{}, std::move(num)};
  Dense quot(num.size() - den.size() + 1);
  const Rational& lead = den.back();
  for (std::size_t i = quot.size(); i-- > 0;) {
    Rational c = num[i + den.size() - 1] / lead;
    if (sgn(c) == 0) continue;
    quot[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  trim(num);
  trim(quot);
  return {std::move(quot), std::move(num)};
}

void make_monic(Dense& d) {
  if (d.empty()) return;
  Rational lead = d.back();
  for (auto& c : d) c /= lead;
}

std::string coefficient_prefix(const Rational& mag, Exponent k) {
  // mag is the absolute value of the coefficient
  if (k == 0) return mag.get_str();
  std::string var = k == 1 ? "A" : "A^" + std::to_string(k);
  if (mag == 1) return var;
  return mag.get_str() + "*" + var;
}

}  // namespace

LaurentPoly::LaurentPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(0, c);
}

LaurentPoly::LaurentPoly(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
}

LaurentPoly LaurentPoly::monomial(const Rational& c, Exponent k) {
  LaurentPoly p;
  if (sgn(c) != 0) p.terms_.emplace(k, c);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

Exponent LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw ArithmeticError("min_exponent of the zero polynomial");
  return terms_.begin()->first;
}

Exponent LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw ArithmeticError("max_exponent of the zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& LaurentPoly::leading_coefficient() const {
  if (terms_.empty()) throw ArithmeticError("leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

Rational LaurentPoly::coefficient(Exponent k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPoly LaurentPoly::shifted(Exponent k) const {
  if (k == 0) return *this;
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (sgn(c) == 0) return {};
  LaurentPoly out;
  for (const auto& [e, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, v * c);
  return out;
}

void LaurentPoly::add_term(Exponent k, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    os << coefficient_prefix(abs(c), k);
    first = false;
  }
  return os.str();
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  Dense x = to_dense(a);
  Dense y = to_dense(b);
  trim(x);
  trim(y);
  while (!y.empty()) {
    Dense r = divmod(std::move(x), y).second;
    x = std::move(y);
    y = std::move(r);
    make_monic(y);
  }
  make_monic(x);
  return from_dense(x);
}

LaurentPoly poly_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw ArithmeticError("division by the zero polynomial");
  Dense den = to_dense(b);
  trim(den);
  auto [q, r] = divmod(to_dense(a), den);
  if (!r.empty()) throw ArithmeticError("polynomial division is not exact");
  return from_dense(q);
}

}  // namespace skein
