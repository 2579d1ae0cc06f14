#pragma once

#include <random>
#include <string>
#include <vector>

#include "w22/parse.hpp"
#include "w22/structure.hpp"

namespace w22::testing {

inline Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline ModuleKey key(std::vector<int> lambda, std::vector<int> mu) {
  return {Partition(std::move(lambda)), Partition(std::move(mu))};
}

inline UEAElement algebra(const std::string& text) { return eval_algebra(parse(text)); }

inline ModuleVector vec(const WhittakerModule& module, const std::string& text) {
  return std::get<ModuleVector>(eval(parse(text), module));
}

inline Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  return q(num(rng), den(rng));
}

inline Rational nonzero_rational(std::mt19937_64& rng) {
  for (;;) {
    Rational r = small_rational(rng);
    if (!is_zero(r)) return r;
  }
}

inline CentralPoly small_poly(std::mt19937_64& rng, std::size_t max_degree) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::vector<Rational> c(deg(rng) + 1);
  for (auto& x : c) x = small_rational(rng);
  return CentralPoly(c);
}

inline Generator random_generator(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> idx(-bound, bound), kind(0, 2);
  const int k = kind(rng);
  if (k == 0) return Generator::L(idx(rng));
  if (k == 1) return Generator::W(idx(rng));
  return Generator::z();
}

/// Sum of up to `terms` random words of length <= `length`.
inline UEAElement random_element(std::mt19937_64& rng, std::size_t terms, std::size_t length, int bound) {
  std::uniform_int_distribution<std::size_t> count(1, terms), len(0, length);
  UEAElement x;
  for (std::size_t t = count(rng); t > 0; --t) {
    GeneratorWord word(len(rng));
    for (auto& g : word) g = random_generator(rng, bound);
    x += normalize(word).scaled(CentralPoly(nonzero_rational(rng)));
  }
  return x;
}

/// Nonzero random combination of window basis vectors.
inline ModuleVector random_vector(std::mt19937_64& rng, const QuotientSpec& spec, const Truncation& trunc,
                                  std::size_t terms) {
  const auto labels = basis_enumerate(spec, trunc);
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  for (;;) {
    ModuleVector v(spec);
    for (std::size_t t = 0; t < terms; ++t) {
      const BasisLabel& l = labels[pick(rng)];
      v.add(l.key, CentralPoly::monomial(nonzero_rational(rng), l.z_power));
    }
    if (!v.is_zero()) return v;
  }
}

}  // namespace w22::testing
