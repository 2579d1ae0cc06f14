#include <doctest.h>

#include "support.hpp"

using namespace w22;
using testing::algebra;
using testing::q;

namespace {

using G = Generator;

UEAElement word(std::initializer_list<Generator> gs) { return normalize(GeneratorWord(gs)); }

PBWMonomial mono(std::initializer_list<Generator> sorted) { return PBWMonomial::from_sorted_word(GeneratorWord(sorted)); }

}  // namespace

TEST_CASE("normalize examples") {
  UEAElement expected = UEAElement::monomial(mono({G::L(-1), G::L(1)}));
  expected.add(mono({G::L(0)}), -2);
  CHECK(word({G::L(1), G::L(-1)}) == expected);

  CHECK(word({G::W(0)}) == UEAElement::generator(G::W(0)));

  UEAElement e2 = UEAElement::monomial(mono({G::W(-2), G::L(2)}));
  e2.add(mono({G::W(0)}), -4);
  e2.add(PBWMonomial{}, CentralPoly::z() * q(1, 2));
  CHECK(word({G::L(2), G::W(-2)}) == e2);

  UEAElement e3 = UEAElement::monomial(mono({G::L(-1), G::W(1)}));
  e3.add(mono({G::W(0)}), -2);
  CHECK(word({G::W(1), G::L(-1)}) == e3);
  CHECK(to_string(e3) == "L[-1]*W[1] - 2*W[0]");
}

TEST_CASE("multiply examples") {
  const UEAElement l1 = UEAElement::generator(G::L(1));
  CHECK(multiply(l1, l1) == UEAElement::monomial(mono({G::L(1), G::L(1)})));
  CHECK(to_string(multiply(l1, l1)) == "L[1]^2");
  const UEAElement zl0 = multiply(UEAElement::scalar(CentralPoly::z()), UEAElement::generator(G::L(0)));
  CHECK(zl0 == UEAElement::monomial(mono({G::L(0)}), CentralPoly::z()));
  CHECK(multiply(UEAElement::generator(G::W(1)), UEAElement::generator(G::L(-1))) == word({G::W(1), G::L(-1)}));
}

TEST_CASE("z is folded into coefficients") {
  const UEAElement x = word({G::z(), G::L(-1), G::z()});
  CHECK(x == UEAElement::monomial(mono({G::L(-1)}), CentralPoly::z().pow(2)));
  CHECK(word({G::z()}) == UEAElement::scalar(CentralPoly::z()));
}

TEST_CASE("degree, heights and mindeg") {
  CHECK(degree(PBWMonomial{Partition{-2}, {}, {}, Partition{3}}) == 1);
  CHECK(degree(PBWMonomial{}) == 0);
  CHECK(degree(PBWMonomial{Partition{-1, -1}, Partition{0}, {}, {}}) == -2);

  const Heights h1 = heights(UEAElement::monomial(mono({G::L(-1), G::L(-1), G::W(0)})));
  CHECK(h1.ht == 3);
  CHECK(h1.ht1 == 2);
  const Heights h2 = heights(UEAElement::scalar(CentralPoly::monomial(5, 2)));
  CHECK(h2.ht == 0);
  CHECK(h2.ht1 == 0);
  const UEAElement x = word({G::W(1), G::L(-1)});
  CHECK(heights(x).ht == 2);
  CHECK(heights(x).ht1 == 1);
  CHECK(mindeg(x) == 0);
  CHECK(mindeg(algebra("L[-2] + L[-1]")) == -2);
  CHECK(mindeg(algebra("7")) == 0);
  CHECK_THROWS_AS(heights(UEAElement()), std::domain_error);
  CHECK_THROWS_AS(mindeg(UEAElement()), std::domain_error);
}

TEST_CASE("monomial construction rejects unsorted words") {
  CHECK_THROWS_AS(PBWMonomial::from_sorted_word(GeneratorWord{G::L(1), G::L(-1)}), std::invalid_argument);
  CHECK_THROWS_AS(PBWMonomial::from_sorted_word(GeneratorWord{G::z()}), std::invalid_argument);
  CHECK_THROWS_AS(PBWMonomial::from_sorted_word(GeneratorWord{G::W(1), G::L(1)}), std::invalid_argument);
  CHECK_NOTHROW(PBWMonomial::from_sorted_word(GeneratorWord{G::L(-2), G::L(0), G::W(-1), G::L(1), G::W(1)}));
}

TEST_CASE("normalize is the identity on sorted words") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    GeneratorWord w(std::uniform_int_distribution<int>(0, 6)(rng));
    for (auto& g : w) {
      g = testing::random_generator(rng, 4);
      if (g.is_central()) g = G::L(0);
    }
    std::sort(w.begin(), w.end(), pbw_less);
    const PBWMonomial m = PBWMonomial::from_sorted_word(w);
    CHECK(normalize(w) == UEAElement::monomial(m));
    CHECK(m.word() == w);
  }
}

TEST_CASE("normalize preserves the grading") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    GeneratorWord w(std::uniform_int_distribution<int>(1, 6)(rng));
    int total = 0;
    for (auto& g : w) {
      g = testing::random_generator(rng, 4);
      total += grade(g);
    }
    const UEAElement x = normalize(w);
    for (const auto& [m, c] : x.terms()) CHECK(degree(m) == total);
  }
}

TEST_CASE("multiplication is associative and S(z)-bilinear") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const UEAElement a = testing::random_element(rng, 3, 2, 3), b = testing::random_element(rng, 3, 2, 3),
                     c = testing::random_element(rng, 3, 2, 3);
    CHECK(multiply(a, multiply(b, c)) == multiply(multiply(a, b), c));
    const CentralPoly p = testing::small_poly(rng, 2);
    CHECK(multiply(a.scaled(p), b) == multiply(a, b).scaled(p));
    CHECK(multiply(a, b + c) == multiply(a, b) + multiply(a, c));
  }
}

TEST_CASE("commutators of generators match the Lie bracket") {
  for (int n = -4; n <= 4; ++n) {
    for (int m = -4; m <= 4; ++m) {
      for (auto a : {G::L(n), G::W(n)}) {
        for (auto b : {G::L(m), G::W(m)}) {
          UEAElement expected;
          const GeneratorCombination br = bracket(a, b);
          for (const auto& [g, c] : br.terms()) {
            expected += g.is_central() ? UEAElement::scalar(CentralPoly::z() * c)
                                       : UEAElement::generator(g).scaled(CentralPoly(c));
          }
          CHECK(commutator(UEAElement::generator(a), UEAElement::generator(b)) == expected);
        }
      }
    }
  }
}

TEST_CASE("commutator with W_m lowers the L-height of L_lambda") {
  for (const Partition& lambda : enumerate_nonpositive(6, 3)) {
    if (lambda.empty()) continue;
    GeneratorWord lw;
    for (int k : lambda.parts()) lw.push_back(G::L(k));
    const UEAElement l = normalize(lw);
    for (int m = -4; m <= 4; ++m) {
      const UEAElement c = commutator(UEAElement::generator(G::W(m)), l);
      if (!c.is_zero()) CHECK(heights(c).ht1 < lambda.length());
    }
  }
}

TEST_CASE("normalize cache can be cleared") {
  word({G::L(3), G::W(-3), G::L(-1)});
  CHECK(normalize_cache_size() > 0);
  clear_normalize_cache();
  CHECK(normalize_cache_size() == 0);
  CHECK(to_string(word({G::W(1), G::L(-1)})) == "L[-1]*W[1] - 2*W[0]");
}
