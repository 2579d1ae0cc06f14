#include "w22/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace w22 {

CentralPoly::CentralPoly(const Rational& c) {
  if (!w22::is_zero(c)) coeffs_.push_back(c);
}

CentralPoly::CentralPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

CentralPoly CentralPoly::monomial(const Rational& c, std::size_t exponent) {
  CentralPoly p;
  if (w22::is_zero(c)) return p;
  p.coeffs_.assign(exponent + 1, Rational(0));
  p.coeffs_[exponent] = c;
  return p;
}

CentralPoly CentralPoly::linear(const Rational& root) {
  return CentralPoly(std::vector<Rational>{-root, Rational(1)});
}

void CentralPoly::trim() {
  while (!coeffs_.empty() && w22::is_zero(coeffs_.back())) coeffs_.pop_back();
}

std::optional<std::size_t> CentralPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational CentralPoly::coefficient(std::size_t exponent) const {
  return exponent < coeffs_.size() ? coeffs_[exponent] : Rational(0);
}

Rational CentralPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

CentralPoly& CentralPoly::operator+=(const CentralPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

CentralPoly& CentralPoly::operator-=(const CentralPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

CentralPoly operator*(const CentralPoly& a, const CentralPoly& b) {
  CentralPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (w22::is_zero(a.coeffs_[i])) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  out.trim();
  return out;
}

CentralPoly& CentralPoly::operator*=(const CentralPoly& o) { return *this = *this * o; }

CentralPoly& CentralPoly::operator*=(const Rational& c) {
  if (w22::is_zero(c)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

CentralPoly CentralPoly::operator-() const {
  CentralPoly out = *this;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

CentralPoly CentralPoly::pow(std::size_t e) const {
  CentralPoly result(1);
  CentralPoly base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

Rational CentralPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

CentralPoly CentralPoly::monic() const {
  if (is_zero()) return *this;
  CentralPoly out = *this;
  out *= Rational(1) / leading();
  return out;
}

std::pair<CentralPoly, CentralPoly> divmod(const CentralPoly& a, const CentralPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const std::size_t db = *b.degree();
  std::vector<Rational> rem = a.coefficients();
  if (rem.size() <= db) return {CentralPoly{}, a};
  std::vector<Rational> quot(rem.size() - db, Rational(0));
  const Rational lead = b.leading();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (w22::is_zero(rem[i])) continue;
    Rational c = rem[i] / lead;
    quot[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coefficient(j);
  }
  rem.resize(db);
  return {CentralPoly(std::move(quot)), CentralPoly(std::move(rem))};
}

CentralPoly mod(const CentralPoly& a, const CentralPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.coefficients().size() <= *b.degree()) return a;
  return divmod(a, b).second;
}

CentralPoly gcd(const CentralPoly& a, const CentralPoly& b) { return extended_gcd(a, b).gcd; }

Bezout extended_gcd(const CentralPoly& a, const CentralPoly& b) {
  CentralPoly r0 = a, r1 = b;
  CentralPoly s0(1), s1;
  CentralPoly t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    CentralPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    CentralPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Rational unit = Rational(1) / r0.leading();
  return {r0 * unit, s0 * unit, t0 * unit};
}

CentralPoly inverse_mod(const CentralPoly& a, const CentralPoly& m) {
  Bezout b = extended_gcd(a, m);
  if (b.gcd != CentralPoly(1)) throw std::domain_error("polynomial is not invertible modulo " + to_string(m));
  return mod(b.s, m);
}

std::string to_string(const CentralPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (w22::is_zero(c[i])) continue;
    Rational mag = abs(c[i]);
    if (first) {
      if (sgn(c[i]) < 0) out += "-";
    } else {
      out += sgn(c[i]) < 0 ? " - " : " + ";
    }
    first = false;
    if (i == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += "z";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::string render_sum(const std::vector<std::pair<CentralPoly, std::string>>& terms) {
  std::string out;
  bool first = true;
  for (const auto& [c, body] : terms) {
    if (c.is_zero()) continue;
    bool negative = false;
    std::vector<std::string> factors;
    if (c.coefficients().size() == 1 || std::count_if(c.coefficients().begin(), c.coefficients().end(),
                                                      [](const Rational& x) { return !w22::is_zero(x); }) == 1) {
      const std::size_t k = *c.degree();
      const Rational& a = c.leading();
      negative = sgn(a) < 0;
      Rational mag = abs(a);
      if (mag != 1 || (k == 0 && body.empty())) factors.push_back(to_string(mag));
      if (k == 1) factors.emplace_back("z");
      if (k > 1) factors.push_back("z^" + std::to_string(k));
    } else {
      factors.push_back("(" + to_string(c) + ")");
    }
    if (!body.empty()) factors.push_back(body);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += "*";
      out += factors[i];
    }
  }
  return first ? "0" : out;
}

}  // namespace w22
