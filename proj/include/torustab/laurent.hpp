#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace torustab {

using Coefficient = std::int64_t;

// Integer Laurent polynomial in a. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly monomial(int exponent, Coefficient c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Coefficient>& terms() const { return terms_; }
  Coefficient coefficient(int exponent) const;

  void add_term(int exponent, Coefficient c);
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator*=(Coefficient c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // a -> a^-1
  LaurentPoly mirrored() const;
  // Multiplies by c * a^shift.
  LaurentPoly scaled(Coefficient c, int shift) const;

  // Human-readable, e.g. "-a^2 + 1 - a^-2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  std::map<int, Coefficient> terms_;
};

// Polynomial in x whose coefficients are Laurent polynomials in a.
// Zero coefficient polynomials are never stored.
class BracketPoly {
 public:
  BracketPoly() = default;

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, LaurentPoly>& terms() const { return terms_; }
  const LaurentPoly& coefficient(int x_degree) const;

  void add(int x_degree, const LaurentPoly& p);
  void add_term(int x_degree, int a_exponent, Coefficient c);

  BracketPoly mirrored() const;
  BracketPoly scaled(Coefficient c, int shift) const;

  // Number of (x-degree, a-exponent) monomials with nonzero coefficient.
  std::size_t monomial_count() const;

  // Deterministic text form "m:k:c;" over monomials sorted by (m, k).
  std::string serialize() const;

  std::string to_string() const;

  friend bool operator==(const BracketPoly&, const BracketPoly&) = default;

 private:
  std::map<int, LaurentPoly> terms_;
};

}  // namespace torustab
