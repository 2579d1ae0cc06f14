#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "w22/rational.hpp"

namespace w22 {

/// Polynomial in the central variable z with rational coefficients, i.e. an
/// element of S(z). Stored densely by exponent with trailing zeros trimmed, so
/// the zero polynomial has no coefficients at all.
class CentralPoly {
 public:
  CentralPoly() = default;
  CentralPoly(const Rational& c);  // NOLINT(google-explicit-constructor): constants embed
  CentralPoly(int c) : CentralPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit CentralPoly(std::vector<Rational> coefficients);

  static CentralPoly z() { return monomial(Rational(1), 1); }
  static CentralPoly monomial(const Rational& c, std::size_t exponent);
  /// z - root.
  static CentralPoly linear(const Rational& root);

  bool is_zero() const { return coeffs_.empty(); }
  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  Rational coefficient(std::size_t exponent) const;
  Rational leading() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_constant() const { return coeffs_.size() <= 1; }

  CentralPoly& operator+=(const CentralPoly& o);
  CentralPoly& operator-=(const CentralPoly& o);
  CentralPoly& operator*=(const CentralPoly& o);
  CentralPoly& operator*=(const Rational& c);
  friend CentralPoly operator+(CentralPoly a, const CentralPoly& b) { return a += b; }
  friend CentralPoly operator-(CentralPoly a, const CentralPoly& b) { return a -= b; }
  friend CentralPoly operator*(const CentralPoly& a, const CentralPoly& b);
  friend CentralPoly operator*(CentralPoly a, const Rational& c) { return a *= c; }
  CentralPoly operator-() const;

  CentralPoly pow(std::size_t e) const;
  Rational evaluate(const Rational& x) const;
  /// Divided by the leading coefficient; zero stays zero.
  CentralPoly monic() const;

  friend bool operator==(const CentralPoly&, const CentralPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<CentralPoly, CentralPoly> divmod(const CentralPoly& a, const CentralPoly& b);
CentralPoly mod(const CentralPoly& a, const CentralPoly& b);
/// Monic gcd (zero when both inputs are zero).
CentralPoly gcd(const CentralPoly& a, const CentralPoly& b);

struct Bezout {
  CentralPoly gcd;  // monic
  CentralPoly s;
  CentralPoly t;    // s*a + t*b == gcd
};
Bezout extended_gcd(const CentralPoly& a, const CentralPoly& b);

/// Inverse of a modulo m; throws std::domain_error unless gcd(a, m) == 1.
CentralPoly inverse_mod(const CentralPoly& a, const CentralPoly& m);

/// "z^2 - 1/2*z + 3"; "0" for zero.
std::string to_string(const CentralPoly& p);

/// Renders sum_i coefficient_i * body_i, e.g. "-4*L[0] + 1/2*z" or
/// "(z - 1)*L[-1]*w". An empty body denotes the scalar part.
std::string render_sum(const std::vector<std::pair<CentralPoly, std::string>>& terms);

}  // namespace w22
