#include <doctest.h>

#include <algorithm>
#include <set>

#include "support.hpp"

using namespace w22;
using testing::q;

namespace {

// Structure constants written out by hand, independent of the library.
Rational hand_bracket_coefficient(const Generator& a, const Generator& b, const Generator& target) {
  auto cocycle = [](int n) { return q(n * n * n - n, 12); };
  if (a.is_central() || b.is_central()) return 0;
  const bool al = a.kind == GeneratorKind::L, bl = b.kind == GeneratorKind::L;
  if (!al && !bl) return 0;
  if (!al && bl) return -hand_bracket_coefficient(b, a, target);
  const int n = a.index, m = b.index;
  if (target.is_central()) return n + m == 0 ? cocycle(n) : Rational(0);
  if (target.index != n + m) return 0;
  if (target.kind != b.kind) return 0;
  return m - n;
}

}  // namespace

TEST_CASE("bracket examples") {
  using G = Generator;
  GeneratorCombination expected;
  expected.add(G::L(0), -4);
  expected.add(G::z(), q(1, 2));
  CHECK(bracket(G::L(2), G::L(-2)) == expected);
  CHECK(to_string(bracket(G::L(2), G::L(-2))) == "-4*L[0] + 1/2*z");
  CHECK(bracket(G::W(3), G::W(5)).is_zero());
  CHECK(bracket(G::L(0), G::L(0)).is_zero());
  GeneratorCombination w0;
  w0.add(G::W(0), -2);
  CHECK(bracket(G::W(1), G::L(-1)) == w0);
}

TEST_CASE("bracket agrees with the hand-written structure constants") {
  std::vector<Generator> gens{Generator::z()};
  for (int n = -6; n <= 6; ++n) {
    gens.push_back(Generator::L(n));
    gens.push_back(Generator::W(n));
  }
  for (const auto& a : gens) {
    for (const auto& b : gens) {
      const GeneratorCombination br = bracket(a, b);
      for (const auto& t : gens) {
        CHECK_MESSAGE(br.coefficient(t) == hand_bracket_coefficient(a, b, t), to_string(a), " ", to_string(b));
      }
    }
  }
}

TEST_CASE("bracket is bilinear, antisymmetric and graded") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Generator a = testing::random_generator(rng, 6), b = testing::random_generator(rng, 6);
    CHECK(bracket(a, b) == -bracket(b, a));
    const GeneratorCombination br = bracket(a, b);
    for (const auto& [g, c] : br.terms()) {
      if (!g.is_central()) CHECK(grade(g) == grade(a) + grade(b));
    }
    GeneratorCombination x, y;
    x.add(a, 3);
    x.add(b, q(-1, 2));
    y.add(b, 2);
    CHECK(bracket(x, y) == bracket(a, b).scaled(6));
  }
}

TEST_CASE("grade and generator text") {
  CHECK(grade(Generator::L(-3)) == -3);
  CHECK(grade(Generator::z()) == 0);
  CHECK(grade(Generator::W(2)) == 2);
  for (const char* s : {"L[-3]", "W[12]", "z", "L[0]"}) CHECK(to_string(parse_generator(s)) == s);
  CHECK_THROWS(parse_generator("L[1"));
  CHECK_THROWS(parse_generator("X[1]"));
  CHECK_THROWS(parse_generator("W[]"));
}

TEST_CASE("partition accessors and slices") {
  const Partition p{-2, -1, -1, 0};
  CHECK(p.multiplicity(-1) == 2);
  CHECK(p.length() == 4);
  CHECK(p.weight() == -4);
  CHECK(Partition().length() == 0);
  CHECK(Partition().weight() == 0);

  const Partition r{-2, -1, 0};
  CHECK(r.prefix(2) == Partition{-2, -1});
  CHECK(r.without(2) == Partition{-2, 0});
  CHECK(r.suffix(3).empty());
  CHECK(r.suffix(1) == Partition{-1, 0});
  CHECK(r.with(-1) == Partition{-2, -1, -1, 0});
  CHECK(Partition{0, -3, -1} == Partition{-3, -1, 0});
  CHECK(to_string(r) == "(-2,-1,0)");
  CHECK(to_string(Partition()) == "()");
}

namespace {

// All non-decreasing sequences with parts in [-bound, 0], by brute force.
void brute_force(int bound, int max_len, std::vector<int>& cur, std::set<std::vector<int>>& out) {
  const int sum = [&] {
    int s = 0;
    for (int x : cur) s += x;
    return s;
  }();
  if (sum < -bound) return;
  out.insert(cur);
  if (static_cast<int>(cur.size()) == max_len) return;
  const int lo = cur.empty() ? -bound : cur.back();
  for (int x = lo; x <= 0; ++x) {
    cur.push_back(x);
    brute_force(bound, max_len, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("enumerate_nonpositive matches brute force") {
  const auto n2h2 = enumerate_nonpositive(2, 2);
  const std::vector<Partition> expected{Partition(), Partition{0},     Partition{-1},    Partition{-2},
                                        Partition{0, 0}, Partition{-1, 0}, Partition{-1, -1}, Partition{-2, 0}};
  CHECK(n2h2 == expected);
  CHECK(enumerate_nonpositive(0, 0) == std::vector<Partition>{Partition()});
  CHECK(enumerate_nonpositive(0, 2) == std::vector<Partition>{Partition(), Partition{0}, Partition{0, 0}});

  for (int n = 0; n <= 6; ++n) {
    for (int h = 0; h <= 4; ++h) {
      std::set<std::vector<int>> oracle;
      std::vector<int> cur;
      brute_force(n, h, cur, oracle);
      const auto got = enumerate_nonpositive(n, h);
      std::set<std::vector<int>> seen;
      for (const auto& p : got) seen.insert(std::vector<int>(p.parts().begin(), p.parts().end()));
      CHECK(seen == oracle);
      CHECK(seen.size() == got.size());
      CHECK(std::is_sorted(got.begin(), got.end(), PartitionLess{}));
    }
  }
}

TEST_CASE("canonical order is a strict total order") {
  const auto all = enumerate_nonpositive(5, 4);
  for (const auto& a : all) {
    CHECK_FALSE(canonical_less(a, a));
    for (const auto& b : all) {
      if (!(a == b)) CHECK(canonical_less(a, b) != canonical_less(b, a));
    }
  }
}
