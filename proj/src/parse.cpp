#include "w22/parse.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace w22 {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

bool operator==(const Expr& a, const Expr& b) {
  if (a.op != b.op || a.kind != b.kind) return false;
  switch (a.op) {
    case Expr::Op::Generator: return a.generator == b.generator;
    case Expr::Op::Number: return a.number == b.number;
    case Expr::Op::Central:
    case Expr::Op::Cyclic: return true;
    case Expr::Op::Negate: return *a.left == *b.left;
    case Expr::Op::Power: return a.exponent == b.exponent && *a.left == *b.left;
    case Expr::Op::Add:
    case Expr::Op::Subtract:
    case Expr::Op::Multiply: return *a.left == *b.left && *a.right == *b.right;
  }
  return false;
}

namespace {

constexpr unsigned kMaxExponent = 4096;

struct Position {
  std::size_t offset = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr run() {
    skip_space();
    if (at_end()) fail("empty expression");
    Expr e = expr();
    skip_space();
    if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "'");
    return e;
  }

 private:
  bool at_end() const { return pos_.offset >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_.offset]; }

  void advance() {
    if (src_[pos_.offset] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++pos_.offset;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }
  [[noreturn]] static void fail_at(const std::string& message, const Position& p) {
    throw ParseError(message, p.line, p.column);
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) {
      if (at_end()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "'");
    }
    advance();
  }

  static Expr node(Expr::Op op, const Position& p) {
    Expr e;
    e.op = op;
    e.line = p.line;
    e.column = p.column;
    return e;
  }

  Expr expr() {
    skip_space();
    Expr lhs = term();
    while (true) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') return lhs;
      const Position at = pos_;
      advance();
      skip_space();
      Expr rhs = term();
      if (lhs.kind != rhs.kind) fail_at("cannot add a vector and an algebra element", at);
      Expr e = node(c == '+' ? Expr::Op::Add : Expr::Op::Subtract, {0, lhs.line, lhs.column});
      e.kind = lhs.kind;
      e.left = std::make_shared<const Expr>(std::move(lhs));
      e.right = std::make_shared<const Expr>(std::move(rhs));
      lhs = std::move(e);
    }
  }

  Expr term() {
    Expr lhs = factor();
    while (true) {
      skip_space();
      if (peek() != '*') return lhs;
      advance();
      skip_space();
      const Position at = pos_;
      if (lhs.kind == ExprKind::Vector) fail_at("misplaced w: w must be the rightmost factor", at);
      Expr rhs = factor();
      Expr e = node(Expr::Op::Multiply, {0, lhs.line, lhs.column});
      e.kind = rhs.kind;
      e.left = std::make_shared<const Expr>(std::move(lhs));
      e.right = std::make_shared<const Expr>(std::move(rhs));
      lhs = std::move(e);
    }
  }

  Expr factor() {
    skip_space();
    const Position start = pos_;
    if (peek() == '-') {
      advance();
      Expr operand = factor();
      Expr e = node(Expr::Op::Negate, start);
      e.kind = operand.kind;
      e.left = std::make_shared<const Expr>(std::move(operand));
      return e;
    }
    Expr base = primary();
    skip_space();
    if (peek() != '^') return base;
    const Position caret = pos_;
    advance();
    skip_space();
    if (base.kind == ExprKind::Vector) fail_at("misplaced w: vectors cannot be raised to a power", caret);
    if (peek() == '-') fail("negative exponent");
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent expected");
    const Position digits = pos_;
    const std::string text = take_digits();
    unsigned k = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
    if (ec != std::errc() || k > kMaxExponent) fail_at("exponent too large", digits);
    Expr e = node(Expr::Op::Power, start);
    e.kind = base.kind;
    e.exponent = k;
    e.left = std::make_shared<const Expr>(std::move(base));
    return e;
  }

  Expr primary() {
    skip_space();
    const Position start = pos_;
    const char c = peek();
    if (c == '(') {
      advance();
      Expr inner = expr();
      expect(')');
      return inner;
    }
    if (c == 'L' || c == 'W') {
      advance();
      expect('[');
      const int index = integer_index();
      expect(']');
      Expr e = node(Expr::Op::Generator, start);
      e.generator = c == 'L' ? Generator::L(index) : Generator::W(index);
      return e;
    }
    if (c == 'z' || c == 'w') {
      advance();
      if (std::isalnum(static_cast<unsigned char>(peek()))) fail_at("unknown identifier", start);
      Expr e = node(c == 'z' ? Expr::Op::Central : Expr::Op::Cyclic, start);
      if (c == 'w') e.kind = ExprKind::Vector;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (at_end()) fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string take_digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      out.push_back(peek());
      advance();
    }
    return out;
  }

  int integer_index() {
    skip_space();
    const Position start = pos_;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      advance();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail_at("integer index expected", start);
    std::string text = take_digits();
    skip_space();
    if (peek() != ']') fail_at("integer index expected", start);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || value > std::numeric_limits<int>::max()) fail_at("index out of range", start);
    return static_cast<int>(negative ? -value : value);
  }

  Expr number() {
    const Position start = pos_;
    std::string text = take_digits();
    skip_space();
    if (peek() == '/') {
      advance();
      skip_space();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("denominator expected");
      const Position den = pos_;
      std::string d = take_digits();
      if (mpz_class(d, 10) == 0) fail_at("zero denominator", den);
      text += "/" + d;
    }
    if (peek() == '.') fail("decimal literals are not supported; write a/b");
    Expr e = node(Expr::Op::Number, start);
    e.number = parse_rational(text);
    return e;
  }

  std::string_view src_;
  Position pos_;
};

enum Precedence { kSum = 0, kProduct = 1, kUnary = 2, kAtom = 3 };

Precedence precedence(const Expr& e) {
  switch (e.op) {
    case Expr::Op::Add:
    case Expr::Op::Subtract: return kSum;
    case Expr::Op::Multiply: return kProduct;
    case Expr::Op::Negate: return kUnary;
    case Expr::Op::Power: return kAtom;
    case Expr::Op::Number: return e.number.get_den() == 1 && e.number >= 0 ? kAtom : kUnary;
    default: return kAtom;
  }
}

std::string render_at(const Expr& e, Precedence needed) {
  std::string out;
  switch (e.op) {
    case Expr::Op::Generator: out = to_string(e.generator); break;
    case Expr::Op::Central: out = "z"; break;
    case Expr::Op::Cyclic: out = "w"; break;
    case Expr::Op::Number: out = to_string(e.number); break;
    case Expr::Op::Add:
    case Expr::Op::Subtract:
      out = render_at(*e.left, kSum) + (e.op == Expr::Op::Add ? " + " : " - ") + render_at(*e.right, kProduct);
      break;
    case Expr::Op::Multiply: out = render_at(*e.left, kProduct) + "*" + render_at(*e.right, kUnary); break;
    case Expr::Op::Negate: out = "-" + render_at(*e.left, kUnary); break;
    case Expr::Op::Power: {
      // A base must be an atom; fractions read better in parentheses.
      const Expr& b = *e.left;
      const bool bare = precedence(b) == kAtom && b.op != Expr::Op::Power;
      out = (bare ? render_at(b, kAtom) : "(" + render_at(b, kSum) + ")") + "^" + std::to_string(e.exponent);
      break;
    }
  }
  if (precedence(e) < needed) return "(" + out + ")";
  return out;
}

UEAElement power(const UEAElement& x, unsigned k) {
  UEAElement result = UEAElement::scalar(CentralPoly(1));
  UEAElement base = x;
  while (k) {
    if (k & 1U) result = multiply(result, base);
    k >>= 1U;
    if (k) base = multiply(base, base);
  }
  return result;
}

}  // namespace

Expr parse(std::string_view source) { return Parser(source).run(); }

std::string render(const Expr& e) { return render_at(e, kSum); }

UEAElement eval_algebra(const Expr& e) {
  if (e.kind != ExprKind::Algebra) throw std::invalid_argument("expected an algebra expression, found a vector");
  switch (e.op) {
    case Expr::Op::Generator: return UEAElement::generator(e.generator);
    case Expr::Op::Central: return UEAElement::scalar(CentralPoly::z());
    case Expr::Op::Number: return UEAElement::scalar(CentralPoly(e.number));
    case Expr::Op::Add: return eval_algebra(*e.left) + eval_algebra(*e.right);
    case Expr::Op::Subtract: return eval_algebra(*e.left) - eval_algebra(*e.right);
    case Expr::Op::Multiply: return multiply(eval_algebra(*e.left), eval_algebra(*e.right));
    case Expr::Op::Negate: return -eval_algebra(*e.left);
    case Expr::Op::Power: return power(eval_algebra(*e.left), e.exponent);
    case Expr::Op::Cyclic: break;
  }
  throw std::logic_error("unreachable expression node");
}

namespace {

ModuleVector eval_vector(const Expr& e, const WhittakerModule& module) {
  switch (e.op) {
    case Expr::Op::Cyclic: return module.cyclic_vector();
    case Expr::Op::Add: return eval_vector(*e.left, module) + eval_vector(*e.right, module);
    case Expr::Op::Subtract: return eval_vector(*e.left, module) - eval_vector(*e.right, module);
    case Expr::Op::Negate: return eval_vector(*e.left, module).scaled(CentralPoly(-1));
    case Expr::Op::Multiply: return module.act(eval_algebra(*e.left), eval_vector(*e.right, module)).vector;
    default: break;
  }
  throw std::logic_error("unreachable vector node");
}

}  // namespace

Value eval(const Expr& e, const WhittakerModule& module) {
  if (e.kind == ExprKind::Algebra) return eval_algebra(e);
  return eval_vector(e, module);
}

QuotientSpec parse_quotient(std::string_view source) {
  std::string_view s = source;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s == "universal") return QuotientSpec::universal();
  const Expr e = parse(s);
  std::vector<const Expr*> factors;
  const Expr* cur = &e;
  while (cur->op == Expr::Op::Multiply) {
    factors.push_back(cur->right.get());
    cur = cur->left.get();
  }
  factors.push_back(cur);
  std::vector<Root> roots;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    const Expr* f = *it;
    int multiplicity = 1;
    if (f->op == Expr::Op::Power) {
      if (f->exponent == 0) throw ParseError("multiplicity must be positive", f->line, f->column);
      multiplicity = static_cast<int>(f->exponent);
      f = f->left.get();
    }
    if (f->kind != ExprKind::Algebra) throw ParseError("quotient factors cannot contain w", f->line, f->column);
    const UEAElement x = eval_algebra(*f);
    const CentralPoly p = x.coefficient(PBWMonomial{});
    if (x.size() > 1 || (x.size() == 1 && p.is_zero()) || p.degree() != 1 || p.leading() != 1) {
      throw ParseError("quotient factors must be monic linear polynomials in z", f->line, f->column);
    }
    roots.push_back({-p.coefficient(0), multiplicity});
  }
  return QuotientSpec::quotient(std::move(roots));
}

}  // namespace w22
