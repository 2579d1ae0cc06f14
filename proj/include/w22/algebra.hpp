#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "w22/rational.hpp"

// The Lie algebra W(2,2): basis {L_n, W_n, z}, with
//   [L_n, L_m] = (m - n) L_{m+n} + (n^3 - n)/12 delta_{m+n,0} z
//   [L_n, W_m] = (m - n) W_{m+n} + (n^3 - n)/12 delta_{m+n,0} z
//   [W_n, W_m] = [z, .] = 0
// and [W_n, L_m] = -[L_m, W_n].

namespace w22 {

enum class GeneratorKind : unsigned char { L, W, Z };

struct Generator {
  GeneratorKind kind = GeneratorKind::Z;
  int index = 0;  // always 0 for Z

  static constexpr Generator L(int n) { return {GeneratorKind::L, n}; }
  static constexpr Generator W(int n) { return {GeneratorKind::W, n}; }
  static constexpr Generator z() { return {GeneratorKind::Z, 0}; }

  constexpr bool is_central() const { return kind == GeneratorKind::Z; }
  constexpr bool is_positive() const { return !is_central() && index > 0; }

  friend constexpr auto operator<=>(const Generator&, const Generator&) = default;
};

/// "L[-2]", "W[3]", "z".
std::string to_string(const Generator& g);

/// Accepts the same syntax to_string produces.
Generator parse_generator(std::string_view text);

/// L_n, W_n -> n; z -> 0.
constexpr int grade(const Generator& g) { return g.is_central() ? 0 : g.index; }

/// Finite linear combination of generators with no zero coefficients stored.
class GeneratorCombination {
 public:
  using Map = std::map<Generator, Rational>;

  GeneratorCombination() = default;

  void add(const Generator& g, const Rational& c);
  GeneratorCombination& operator+=(const GeneratorCombination& other);
  GeneratorCombination& operator-=(const GeneratorCombination& other);
  GeneratorCombination operator-() const;
  GeneratorCombination scaled(const Rational& c) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  Rational coefficient(const Generator& g) const;

  friend bool operator==(const GeneratorCombination&, const GeneratorCombination&) = default;

 private:
  Map terms_;
};

std::string to_string(const GeneratorCombination& c);

/// The bracket of two basis elements.
GeneratorCombination bracket(const Generator& g, const Generator& h);

/// Bilinear extension to combinations.
GeneratorCombination bracket(const GeneratorCombination& a, const GeneratorCombination& b);

}  // namespace w22
