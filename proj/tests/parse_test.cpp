#include <doctest.h>

#include "support.hpp"

using namespace w22;
using testing::algebra;
using testing::q;
using testing::vec;

namespace {

const std::vector<std::string> kCorpus = {
    "L[1]",
    "W[-3]",
    "z",
    "w",
    "3",
    "-1/2",
    "L[-1]^2*W[0]",
    "(W[1] - 3/2)*w",
    "L[1] + L[2] - W[1]",
    "L[1] - (L[2] - W[1])",
    "L[1] - (L[2] + W[1])",
    "-L[1]",
    "-(L[1] + z)",
    "--L[0]",
    "-L[1]^2",
    "(-L[1])^2",
    "(L[1] + W[2])^3",
    "(1/2)^2",
    "2^10",
    "z^0",
    "L[0]^0*w",
    "z^3*L[-2]*W[-1]*w",
    "(z - 1)*w",
    "(z - 1)^2*L[-1]*w + W[-2]*w",
    "L[1]*(L[2]*W[1])",
    "(L[1]*L[2])*W[1]",
    "L[1]*(L[2] + W[1])*w",
    "((L[1]))",
    "1/3*L[4]*W[-4]",
    "-3*w",
    "-(3*w)",
    "L[10]*W[-10] - W[-10]*L[10]",
    "z*z*z",
    "(z + 1)*(z - 1)",
    "w + z*w",
    "L[-1]*w - W[-1]*w + w",
    "L[+2]",
    "W[ -2 ]",
    "  L[1]  *  w ",
    "0",
    "0*w",
    "1/1",
    "12/4*L[1]",
    "(L[1]^2)*w",
    "(L[1]^2)^3",
    "L[1]*-W[2]",
    "L[-1]*(W[1]*w)",
    "(L[-1] + L[-2])*(W[-1] - 1)*w",
    "-(L[-1]*w) - -w",
    "z - (z - (z - 1))",
    "(L[1] - L[1])*w",
    "W[0]*W[0]*W[0]",
    "L[2]*(z^2 - 1/4)",
    "-(-(-(1)))",
    "(1 + 2)*(3 - 4)",
    "L[-2]\n  * W[1]\n  * w",
};

std::size_t error_column(const std::string& s) {
  try {
    parse(s);
  } catch (const ParseError& e) {
    return e.column();
  }
  return 0;
}

std::string error_message(const std::string& s) {
  try {
    parse(s);
  } catch (const ParseError& e) {
    return e.message();
  }
  return "";
}

}  // namespace

TEST_CASE("render and parse round-trip") {
  CHECK(kCorpus.size() >= 50);
  for (const auto& s : kCorpus) {
    const Expr e = parse(s);
    const std::string r = render(e);
    const Expr back = parse(r);
    CHECK_MESSAGE(back == e, s, " -> ", r);
    CHECK(render(back) == r);
  }
}

TEST_CASE("parse shapes") {
  const Expr e = parse("L[-1]^2 * W[0]");
  REQUIRE(e.op == Expr::Op::Multiply);
  CHECK(e.left->op == Expr::Op::Power);
  CHECK(e.left->exponent == 2);
  CHECK(e.left->left->generator == Generator::L(-1));
  CHECK(e.right->generator == Generator::W(0));
  CHECK(e.kind == ExprKind::Algebra);

  const Expr v = parse("(W[1] - 3/2) * w");
  CHECK(v.kind == ExprKind::Vector);
  CHECK(v.left->op == Expr::Op::Subtract);
  CHECK(v.left->right->number == q(3, 2));
  CHECK(v.right->op == Expr::Op::Cyclic);

  // Products associate to the left.
  const Expr p = parse("L[1]*L[2]*L[3]");
  CHECK(p.left->op == Expr::Op::Multiply);
  CHECK(p.right->generator == Generator::L(3));
}

TEST_CASE("parse errors carry positions") {
  CHECK(error_message("L[1.5]") == "integer index expected");
  CHECK(error_column("L[1.5]") == 3);
  CHECK(error_column("L[1] + ") == 8);
  CHECK(error_column("L[1] $ 2") == 6);
  CHECK(error_message("L[1]^-1") == "negative exponent");
  CHECK(error_message("w*L[1]").rfind("misplaced w", 0) == 0);
  CHECK(error_message("L[1]*w*w").rfind("misplaced w", 0) == 0);
  CHECK(error_message("w^2").rfind("misplaced w", 0) == 0);
  CHECK(error_message("L[1]*w + L[2]") == "cannot add a vector and an algebra element");
  CHECK(error_message("1/0") == "zero denominator");
  CHECK(error_message("0.5") == "decimal literals are not supported; write a/b");
  CHECK(error_message("z^5000") == "exponent too large");
  CHECK(!error_message("(L[1]").empty());
  CHECK(!error_message("L1]").empty());
  CHECK(!error_message("").empty());
  CHECK(!error_message("L[1] L[2]").empty());
  try {
    parse("L[1]\n + W[x]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 6);
    CHECK(std::string(e.what()) == "2:6: " + e.message());
  }
}

TEST_CASE("golden evaluations") {
  CHECK(to_string(algebra("W[1]*L[-1]")) == "L[-1]*W[1] - 2*W[0]");
  CHECK(to_string(algebra("L[2]*L[-2]")) == "L[-2]*L[2] - 4*L[0] + 1/2*z");
  CHECK(to_string(algebra("(L[1] + 1)^2")) == "L[1]^2 + 2*L[1] + 1");
  CHECK(to_string(algebra("L[1]*L[1] - L[1]^2")) == "0");
  CHECK(algebra("(z - 1)*(z + 1)") == UEAElement::scalar(CentralPoly::z().pow(2) - CentralPoly(1)));

  const WhittakerModule m(WhittakerType(1, 1, 1, 1), QuotientSpec::universal());
  CHECK(to_string(vec(m, "W[1]*L[-1]*w")) == "-2*W[0]*w + L[-1]*w");
  CHECK(vec(m, "z*w") == m.cyclic_vector().scaled(CentralPoly::z()));
  CHECK(vec(m, "(W[1] - 1)*w").is_zero());
  CHECK(vec(m, "L[1]*(L[-1]*w)") == vec(m, "(L[1]*L[-1])*w"));
  CHECK_THROWS_AS(eval_algebra(parse("L[1]*w")), std::invalid_argument);
  CHECK(std::holds_alternative<UEAElement>(eval(parse("L[1]"), m)));
}

TEST_CASE("rendered elements reparse to themselves") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const UEAElement x = testing::random_element(rng, 3, 3, 4);
    CHECK(algebra(to_string(x)) == x);
  }
  const WhittakerModule m(WhittakerType(1, 2, 3, 4), QuotientSpec::quotient(q(-1, 2), 2));
  for (int trial = 0; trial < 30; ++trial) {
    const ModuleVector v = testing::random_vector(rng, m.spec(), {3, 3, 0}, 3);
    CHECK(vec(m, to_string(v)) == v);
  }
}

TEST_CASE("quotient parsing") {
  CHECK(parse_quotient("universal").is_universal());
  CHECK(parse_quotient("(z-1)^1") == QuotientSpec::quotient(1));
  CHECK(parse_quotient("(z - 1)^2*(z + 3)") == QuotientSpec::quotient(std::vector<Root>{{1, 2}, {-3, 1}}));
  CHECK(parse_quotient("(z-1/2)") == QuotientSpec::quotient(q(1, 2)));
  CHECK(parse_quotient("z") == QuotientSpec::quotient(0));
  CHECK(parse_quotient(to_string(QuotientSpec::quotient(std::vector<Root>{{q(-2, 3), 3}, {5, 1}}))) ==
        QuotientSpec::quotient(std::vector<Root>{{q(-2, 3), 3}, {5, 1}}));
  CHECK_THROWS(parse_quotient("(z^2-1)"));
  CHECK_THROWS(parse_quotient("(2*z-1)"));
  CHECK_THROWS(parse_quotient("(z-1)*(z-1)"));
  CHECK_THROWS(parse_quotient("(z-1)^0"));
  CHECK_THROWS(parse_quotient(""));
}
