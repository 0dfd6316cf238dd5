#include "torustab/laurent.hpp"

#include <sstream>

namespace torustab {

LaurentPoly LaurentPoly::monomial(int exponent, Coefficient c) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

Coefficient LaurentPoly::coefficient(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int exponent, Coefficient c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(Coefficient c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
  }
  return out;
}

LaurentPoly LaurentPoly::mirrored() const {
  LaurentPoly out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(-k, c);
  return out;
}

LaurentPoly LaurentPoly::scaled(Coefficient c, int shift) const {
  LaurentPoly out;
  if (c == 0) return out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(k + shift, v * c);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [k, c] = *it;
    const Coefficient magnitude = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << magnitude;
      continue;
    }
    if (magnitude != 1) out << magnitude << '*';
    out << 'a';
    if (k != 1) out << '^' << k;
  }
  return out.str();
}

const LaurentPoly& BracketPoly::coefficient(int x_degree) const {
  static const LaurentPoly zero;
  const auto it = terms_.find(x_degree);
  return it == terms_.end() ? zero : it->second;
}

void BracketPoly::add(int x_degree, const LaurentPoly& p) {
  if (p.is_zero()) return;
  auto& slot = terms_[x_degree];
  slot += p;
  if (slot.is_zero()) terms_.erase(x_degree);
}

void BracketPoly::add_term(int x_degree, int a_exponent, Coefficient c) {
  add(x_degree, LaurentPoly::monomial(a_exponent, c));
}

BracketPoly BracketPoly::mirrored() const {
  BracketPoly out;
  for (const auto& [m, p] : terms_) out.terms_.emplace(m, p.mirrored());
  return out;
}

BracketPoly BracketPoly::scaled(Coefficient c, int shift) const {
  BracketPoly out;
  if (c == 0) return out;
  for (const auto& [m, p] : terms_) out.terms_.emplace(m, p.scaled(c, shift));
  return out;
}

std::size_t BracketPoly::monomial_count() const {
  std::size_t count = 0;
  for (const auto& [m, p] : terms_) count += p.terms().size();
  return count;
}

std::string BracketPoly::serialize() const {
  std::ostringstream out;
  for (const auto& [m, p] : terms_) {
    for (const auto& [k, c] : p.terms()) out << m << ':' << k << ':' << c << ';';
  }
  return out.str();
}

std::string BracketPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, p] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << '(' << p.to_string() << ')';
    if (m == 1) out << "*x";
    if (m > 1) out << "*x^" << m;
  }
  return out.str();
}

}  // namespace torustab
