#include "w22/algebra.hpp"

#include <charconv>
#include <stdexcept>

namespace w22 {

std::string to_string(const Generator& g) {
  switch (g.kind) {
    case GeneratorKind::L: return "L[" + std::to_string(g.index) + "]";
    case GeneratorKind::W: return "W[" + std::to_string(g.index) + "]";
    case GeneratorKind::Z: return "z";
  }
  return "?";
}

Generator parse_generator(std::string_view text) {
  if (text == "z") return Generator::z();
  if (text.size() < 4 || (text[0] != 'L' && text[0] != 'W') || text[1] != '[' || text.back() != ']') {
    throw std::invalid_argument("malformed generator '" + std::string(text) + "'");
  }
  auto digits = text.substr(2, text.size() - 3);
  int n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw std::invalid_argument("integer index expected in '" + std::string(text) + "'");
  }
  return text[0] == 'L' ? Generator::L(n) : Generator::W(n);
}

void GeneratorCombination::add(const Generator& g, const Rational& c) {
  if (w22::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (w22::is_zero(it->second)) terms_.erase(it);
  }
}

GeneratorCombination& GeneratorCombination::operator+=(const GeneratorCombination& other) {
  for (const auto& [g, c] : other.terms_) add(g, c);
  return *this;
}

GeneratorCombination& GeneratorCombination::operator-=(const GeneratorCombination& other) {
  for (const auto& [g, c] : other.terms_) add(g, -c);
  return *this;
}

GeneratorCombination GeneratorCombination::operator-() const { return scaled(Rational(-1)); }

GeneratorCombination GeneratorCombination::scaled(const Rational& c) const {
  GeneratorCombination out;
  if (w22::is_zero(c)) return out;
  for (const auto& [g, a] : terms_) out.terms_.emplace(g, a * c);
  return out;
}

Rational GeneratorCombination::coefficient(const Generator& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string to_string(const GeneratorCombination& c) {
  if (c.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, a] : c.terms()) {
    Rational mag = abs(a);
    if (first) {
      if (sgn(a) < 0) out += "-";
    } else {
      out += sgn(a) < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += to_string(mag) + "*";
    out += to_string(g);
  }
  return out;
}

namespace {

// Cocycle (n^3 - n)/12 carried by both [L_n, L_{-n}] and [L_n, W_{-n}].
Rational central_term(int n) {
  mpz_class nn = n;
  Rational c(nn * nn * nn - nn, 12);
  c.canonicalize();
  return c;
}

}  // namespace

GeneratorCombination bracket(const Generator& g, const Generator& h) {
  GeneratorCombination out;
  if (g.is_central() || h.is_central()) return out;
  if (g.kind == GeneratorKind::W && h.kind == GeneratorKind::W) return out;
  if (g.kind == GeneratorKind::W) return -bracket(h, g);

  // g = L_n
  const int n = g.index;
  const int m = h.index;
  const Generator target = h.kind == GeneratorKind::L ? Generator::L(m + n) : Generator::W(m + n);
  out.add(target, Rational(m - n));
  if (m + n == 0) out.add(Generator::z(), central_term(n));
  return out;
}

GeneratorCombination bracket(const GeneratorCombination& a, const GeneratorCombination& b) {
  GeneratorCombination out;
  for (const auto& [g, x] : a.terms()) {
    for (const auto& [h, y] : b.terms()) {
      out += bracket(g, h).scaled(x * y);
    }
  }
  return out;
}

}  // namespace w22
