#include "skein/qtorus.hpp"

#include <utility>

namespace skein {

QTorusElement::QTorusElement(const RationalFunction& scalar) { add_term({0, 0}, scalar); }

QTorusElement::QTorusElement(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

QTorusElement QTorusElement::monomial(const RationalFunction& c, std::int64_t p, std::int64_t q) {
  QTorusElement out;
  out.add_term({p, q}, c);
  return out;
}

RationalFunction QTorusElement::coefficient(std::int64_t p, std::int64_t q) const {
  auto it = terms_.find({p, q});
  return it == terms_.end() ? RationalFunction() : it->second;
}

void QTorusElement::add_term(const QMonomial& k, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QTorusElement QTorusElement::operator-() const {
  QTorusElement out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

QTorusElement& QTorusElement::operator+=(const QTorusElement& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

QTorusElement& QTorusElement::operator-=(const QTorusElement& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
  return *this;
}

QTorusElement& QTorusElement::operator*=(const RationalFunction& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::string QTorusElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*l^" + std::to_string(k.p) + "*m^" + std::to_string(k.q);
  }
  return out;
}

QTorusElement qt_mul(const QTorusElement& a, const QTorusElement& b) {
  QTorusElement out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      // l^p m^q l^r m^s = A^{-2qr} l^{p+r} m^{q+s}
      const Exponent twist = -2 * ka.q * kb.p;
      out += QTorusElement::monomial(ca * cb * RationalFunction::var_power(twist), ka.p + kb.p,
                                     ka.q + kb.q);
    }
  }
  return out;
}

QTorusElement embed_curve(std::int64_t p, std::int64_t q) {
  const auto weight = RationalFunction::var_power(-p * q);
  return QTorusElement::monomial(weight, p, q) + QTorusElement::monomial(weight, -p, -q);
}

}  // namespace skein
