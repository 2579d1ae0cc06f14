#include <doctest.h>

#include "support.hpp"

using namespace w22;
using testing::key;
using testing::q;
using testing::vec;

namespace {

using G = Generator;

const WhittakerType kPhi(1, 1, 2, 3);

}  // namespace

TEST_CASE("Whittaker types must be nonsingular") {
  CHECK_THROWS_AS(WhittakerType(0, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(WhittakerType(1, 1, 1, 0), std::invalid_argument);
  CHECK(kPhi.value(G::W(2)) == 3);
  CHECK(kPhi.value(G::L(5)) == 0);
  CHECK_THROWS(kPhi.value(G::L(0)));
  CHECK(to_string(WhittakerType(1, q(-1, 2), 2, 3)) == "1,-1/2,2,3");
}

TEST_CASE("phi extends multiplicatively to positive monomials") {
  CHECK(phi_extend(kPhi, PBWMonomial{{}, {}, {}, Partition{1, 2}}) == 6);
  CHECK(phi_extend(kPhi, PBWMonomial{{}, {}, {}, Partition{3}}) == 0);
  CHECK(phi_extend(kPhi, PBWMonomial{}) == 1);
  CHECK(phi_extend(kPhi, PBWMonomial{{}, {}, Partition{1, 1, 2}, Partition{2}}) == 3);
  CHECK_THROWS_AS(phi_extend(kPhi, PBWMonomial{Partition{-1}, {}, {}, {}}), std::invalid_argument);
}

TEST_CASE("quotient specs") {
  CHECK_THROWS_AS(QuotientSpec::quotient(std::vector<Root>{}), std::invalid_argument);
  CHECK_THROWS_AS(QuotientSpec::quotient(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(QuotientSpec::quotient(std::vector<Root>{{1, 1}, {1, 2}}), std::invalid_argument);
  const QuotientSpec s = QuotientSpec::quotient(std::vector<Root>{{1, 2}, {-3, 1}});
  CHECK(to_string(s) == "(z - 1)^2*(z + 3)");
  CHECK(s.residue_dimension() == 3);
  CHECK(to_string(s.modulus()) == "z^3 + z^2 - 5*z + 3");
  CHECK(QuotientSpec::universal().residue_dimension() == 0);
}

TEST_CASE("act examples") {
  const WhittakerModule m(kPhi, QuotientSpec::universal());
  const ModuleVector w = m.cyclic_vector();
  CHECK(m.act(G::W(1), w) == w.scaled(2));
  const ModuleVector lw = ModuleVector::basis_vector(m.spec(), key({-1}, {}));
  CHECK(m.act(G::W(1), lw) ==
        lw.scaled(2) - ModuleVector::basis_vector(m.spec(), key({}, {0})).scaled(2));
  CHECK(m.act(G::W(3), lw) == w.scaled(-12));
  CHECK(m.act(G::z(), lw) == lw.scaled(CentralPoly::z()));
  CHECK(to_string(vec(m, "W[1]*L[-1]*w")) == "-2*W[0]*w + 2*L[-1]*w");

  const WhittakerModule quot(kPhi, QuotientSpec::quotient(2));
  const ModuleVector qw = quot.cyclic_vector();
  CHECK(quot.act(G::z(), qw) == qw.scaled(2));
  CHECK_THROWS_AS(quot.act(G::z(), w), std::invalid_argument);
}

TEST_CASE("w is a Whittaker vector killed by higher generators") {
  const WhittakerModule m(kPhi, QuotientSpec::universal());
  const ModuleVector w = m.cyclic_vector();
  for (auto g : kWhittakerGenerators) CHECK(m.act(g, w) == w.scaled(CentralPoly(kPhi.value(g))));
  for (int n = 3; n <= 6; ++n) {
    CHECK(m.act(G::L(n), w).is_zero());
    CHECK(m.act(G::W(n), w).is_zero());
  }
}

TEST_CASE("vector diagnostics") {
  const WhittakerModule m(kPhi, QuotientSpec::universal());
  const VectorDiagnostics d1 = vector_diagnostics(vec(m, "L[-1]*w + W[-2]*W[-1]*w"));
  CHECK(d1.mindeg == -3);
  CHECK(d1.ell == 2);
  CHECK(d1.ell_prime == 0);
  const VectorDiagnostics d2 = vector_diagnostics(m.cyclic_vector());
  CHECK(d2.mindeg == 0);
  CHECK(d2.ell == 0);
  const VectorDiagnostics d3 = vector_diagnostics(vec(m, "z^2*L[-2]*w"));
  CHECK(d3.mindeg == -2);
  CHECK(d3.ell == 1);
  CHECK(d3.ell_prime == 1);
  CHECK_THROWS_AS(vector_diagnostics(m.zero()), std::domain_error);
}

TEST_CASE("basis enumeration") {
  const auto u = basis_enumerate(QuotientSpec::universal(), {0, 0, 1});
  REQUIRE(u.size() == 2);
  CHECK(u[0].z_power == 0);
  CHECK(u[1].z_power == 1);

  const auto l = basis_enumerate(QuotientSpec::quotient(5), {1, 1, 7});
  std::vector<ModuleKey> keys;
  for (const auto& b : l) keys.push_back(b.key);
  CHECK(keys == std::vector<ModuleKey>{key({}, {}), key({0}, {}), key({}, {0}), key({-1}, {}), key({}, {-1})});

  const auto h2 = basis_enumerate(QuotientSpec::universal(), {0, 2, 0});
  keys.clear();
  for (const auto& b : h2) keys.push_back(b.key);
  CHECK(keys == std::vector<ModuleKey>{key({}, {}), key({0}, {}), key({}, {0}), key({0, 0}, {}), key({0}, {0}),
                                       key({}, {0, 0})});

  // z-powers run over residues for quotients.
  const auto sq = basis_enumerate(QuotientSpec::quotient(1, 2), {1, 1, 9});
  CHECK(sq.size() == 10);
  CHECK_THROWS(basis_enumerate(QuotientSpec::universal(), {-1, 0, 0}));
}

TEST_CASE("module axiom, S(z)-linearity and quotient compatibility") {
  std::mt19937_64 rng(29);
  const QuotientSpec p = QuotientSpec::quotient(std::vector<Root>{{1, 2}, {q(-1, 2), 1}});
  const WhittakerModule uni(kPhi, QuotientSpec::universal());
  const WhittakerModule quot(kPhi, p);
  for (int trial = 0; trial < 40; ++trial) {
    const UEAElement a = testing::random_element(rng, 2, 2, 3), b = testing::random_element(rng, 2, 2, 3);
    const ModuleVector v = testing::random_vector(rng, uni.spec(), {2, 2, 1}, 3);
    CHECK(uni.act(multiply(a, b), v).vector == uni.act(a, uni.act(b, v).vector).vector);

    const CentralPoly c = testing::small_poly(rng, 2);
    CHECK(uni.act(a, v.scaled(c)).vector == uni.act(a, v).vector.scaled(c));

    ModuleVector reduced(p);
    for (const auto& [k, coeff] : v.terms()) reduced.add(k, coeff);
    ModuleVector expected(p);
    const ModuleVector image = uni.act(a, v).vector;
    for (const auto& [k, coeff] : image.terms()) expected.add(k, coeff);
    CHECK(quot.act(a, reduced).vector == expected);
    CHECK(quot.act(a, reduced.scaled(c)).vector == expected.scaled(c));
  }
}

TEST_CASE("shifted Whittaker operators stay inside the window") {
  const Truncation t{3, 3, 1};
  for (const auto& spec : {QuotientSpec::universal(), QuotientSpec::quotient(1, 2)}) {
    const WhittakerModule m(kPhi, spec);
    for (const auto& label : basis_enumerate(spec, t)) {
      const ModuleVector b = m.basis_vector(label);
      for (auto g : kWhittakerGenerators) {
        const ActResult r = m.act(UEAElement::generator(g) - UEAElement::scalar(CentralPoly(kPhi.value(g))), b, t);
        CHECK_FALSE(r.report.truncated);
        CHECK(r.vector == m.act_shifted(g, b));
      }
    }
  }
}

TEST_CASE("truncation drops and reports terms") {
  const WhittakerModule m(kPhi, QuotientSpec::universal());
  const ActResult r = m.act(testing::algebra("L[-3] + L[-1]"), m.cyclic_vector(), Truncation{2, 2, 0});
  CHECK(r.report.truncated);
  CHECK(r.report.dropped == 1);
  CHECK(to_string(r.vector) == "L[-1]*w");
}

TEST_CASE("vector text rendering") {
  const WhittakerModule m(kPhi, QuotientSpec::quotient(1, 2));
  CHECK(to_string(vec(m, "z^3*L[-1]*w")) == "(3*z - 2)*L[-1]*w");
  CHECK(to_string(m.zero()) == "0");
  CHECK(to_string(m.cyclic_vector()) == "w");
}
