#include "w22/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "w22/structure.hpp"

namespace w22 {

namespace {

using Rng = std::mt19937_64;

// Outcome of a check body: empty on success, else the first counterexample.
struct Outcome {
  bool passed = true;
  std::string detail;
};

Outcome pass(std::string detail) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational random_nonzero_rational(Rng& rng) {
  int n = 0;
  while (n == 0) n = uniform(rng, -5, 5);
  Rational q(n, uniform(rng, 1, 3));
  q.canonicalize();
  return q;
}

Rational random_rational(Rng& rng) {
  Rational q(uniform(rng, -5, 5), uniform(rng, 1, 3));
  q.canonicalize();
  return q;
}

WhittakerType random_phi(Rng& rng) {
  return {random_nonzero_rational(rng), random_nonzero_rational(rng), random_nonzero_rational(rng),
          random_nonzero_rational(rng)};
}

CentralPoly random_poly(Rng& rng, std::size_t max_degree) {
  std::vector<Rational> c;
  for (std::size_t k = 0; k <= max_degree; ++k) c.push_back(random_rational(rng));
  CentralPoly p(std::move(c));
  return p.is_zero() ? CentralPoly(random_nonzero_rational(rng)) : p;
}

PBWMonomial sorted_monomial(GeneratorWord w) {
  std::sort(w.begin(), w.end(), pbw_less);
  return PBWMonomial::from_sorted_word(w);
}

// Up to three PBW monomials on generators with indices in [-3, 3].
UEAElement random_element(Rng& rng) {
  UEAElement x;
  const int terms = uniform(rng, 1, 3);
  for (int t = 0; t < terms; ++t) {
    GeneratorWord w;
    const int len = uniform(rng, 0, 3);
    for (int i = 0; i < len; ++i) {
      const int n = uniform(rng, -3, 3);
      w.push_back(uniform(rng, 0, 1) ? Generator::L(n) : Generator::W(n));
    }
    x.add(sorted_monomial(std::move(w)), random_poly(rng, static_cast<std::size_t>(uniform(rng, 0, 1))));
  }
  return x.is_zero() ? UEAElement::scalar(CentralPoly(1)) : x;
}

// One to four window keys with random coefficients, reduced in `spec`.
ModuleVector random_vector(Rng& rng, const QuotientSpec& spec, const std::vector<ModuleKey>& keys,
                           std::size_t z_degree) {
  const std::size_t max_degree = spec.is_universal() ? z_degree : spec.residue_dimension() - 1;
  ModuleVector v(spec);
  while (v.is_zero()) {
    const int terms = uniform(rng, 1, 4);
    for (int t = 0; t < terms; ++t) {
      const auto& key = keys[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(keys.size()) - 1))];
      v.add(key, random_poly(rng, static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(max_degree)))));
    }
  }
  return v;
}

std::vector<Generator> generators_in(int lo, int hi, bool with_z) {
  std::vector<Generator> out;
  for (int n = lo; n <= hi; ++n) out.push_back(Generator::L(n));
  for (int n = lo; n <= hi; ++n) out.push_back(Generator::W(n));
  if (with_z) out.push_back(Generator::z());
  return out;
}

std::string count(std::size_t n, const char* what) { return std::to_string(n) + " " + what; }

// ---------------------------------------------------------------------------

Outcome lie_axioms(const VerifyConfig&) {
  const auto gens = generators_in(-6, 6, true);
  for (const auto& g : gens) {
    for (const auto& h : gens) {
      const GeneratorCombination b = bracket(g, h);
      if (!(b == -bracket(h, g))) return fail("antisymmetry fails for " + to_string(g) + ", " + to_string(h));
      for (const auto& [x, c] : b.terms()) {
        const int expected = grade(g) + grade(h);
        if (grade(x) != expected || (x.is_central() && expected != 0)) {
          return fail("grading fails for " + to_string(g) + ", " + to_string(h));
        }
      }
      if ((g.is_central() || h.is_central()) && !b.terms().empty()) return fail("z is not central");
    }
  }
  std::map<std::pair<Generator, Generator>, GeneratorCombination> table;
  for (const auto& g : gens) {
    for (const auto& h : gens) table.emplace(std::pair{g, h}, bracket(g, h));
  }
  auto nested = [&](const Generator& g, const Generator& h, const Generator& k) {
    GeneratorCombination out;
    for (const auto& [x, c] : table.at({h, k}).terms()) out += bracket(g, x).scaled(c);
    return out;
  };
  std::size_t triples = 0;
  for (const auto& g : gens) {
    for (const auto& h : gens) {
      for (const auto& k : gens) {
        GeneratorCombination j = nested(g, h, k);
        j += nested(h, k, g);
        j += nested(k, g, h);
        if (!j.terms().empty()) {
          return fail("Jacobi fails for " + to_string(g) + ", " + to_string(h) + ", " + to_string(k));
        }
        ++triples;
      }
    }
  }
  return pass(count(gens.size(), "generators, ") + count(triples, "Jacobi triples"));
}

Outcome pbw_associativity(const VerifyConfig& cfg) {
  Rng rng(cfg.seed);
  std::size_t monomials = 0;
  for (int i = 0; i < 200; ++i) {
    const UEAElement a = random_element(rng);
    const UEAElement b = random_element(rng);
    const UEAElement c = random_element(rng);
    const UEAElement left = multiply(multiply(a, b), c);
    if (!(left == multiply(a, multiply(b, c)))) {
      return fail("(ab)c != a(bc) for a = " + to_string(a) + ", b = " + to_string(b) + ", c = " + to_string(c));
    }
    for (const auto& [m, coeff] : left.terms()) {
      const GeneratorWord w = m.word();
      if (!(normalize(w) == UEAElement::monomial(m))) return fail("normalize moves normal form " + to_string(m));
      ++monomials;
    }
  }
  return pass("200 triples, " + count(monomials, "normal forms re-normalized"));
}

Outcome height_lemmas(const VerifyConfig& cfg) {
  // A_m^t A_n^k - A_n^k A_m^t has height < t + k (L-height when both are L).
  std::size_t cases = 0;
  for (int m = -3; m <= 3; ++m) {
    for (int n = -3; n <= 3; ++n) {
      for (int kinds = 0; kinds < 4; ++kinds) {
        for (int t = 1; t <= 3; ++t) {
          for (int k = 1; k <= 3; ++k) {
            const Generator a = kinds & 1 ? Generator::W(m) : Generator::L(m);
            const Generator b = kinds & 2 ? Generator::W(n) : Generator::L(n);
            GeneratorWord ab(static_cast<std::size_t>(t), a);
            ab.insert(ab.end(), static_cast<std::size_t>(k), b);
            GeneratorWord ba(static_cast<std::size_t>(k), b);
            ba.insert(ba.end(), static_cast<std::size_t>(t), a);
            const UEAElement diff = normalize(ab) - normalize(ba);
            ++cases;
            if (diff.is_zero()) continue;
            const Heights h = heights(diff);
            const auto bound = static_cast<std::size_t>(t + k);
            if (h.ht >= bound || (kinds == 0 && h.ht1 >= bound)) {
              return fail("height lemma fails for " + to_string(a) + "^" + std::to_string(t) + ", " + to_string(b) +
                          "^" + std::to_string(k));
            }
          }
        }
      }
    }
  }
  // ht_1([W_m, L_lambda]) < l(lambda).
  std::size_t lemma_a = 0;
  for (const auto& lambda : enumerate_nonpositive(6, 4)) {
    if (lambda.empty()) continue;
    GeneratorWord l_word;
    for (int p : lambda.parts()) l_word.push_back(Generator::L(p));
    for (int m = -4; m <= 4; ++m) {
      const UEAElement c = commutator(UEAElement::generator(Generator::W(m)), normalize(l_word));
      ++lemma_a;
      if (!c.is_zero() && heights(c).ht1 >= lambda.length()) {
        return fail("L-height of [W[" + std::to_string(m) + "], L_" + to_string(lambda) + "] is not below its length");
      }
    }
  }
  // [x, y] for x in U(W_+)_n, y in U(W_<=0)_m expands as sum of y_k x_k with
  // k in [max(m+n, 0), n], and ht(y_k) < ht(y) where k = n (every k > 0 when
  // x is a single generator).
  Rng rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  std::size_t lemma_b = 0;
  for (int trial = 0; lemma_b < 200; ++trial) {
    const int n = uniform(rng, 1, 4);
    const int m = uniform(rng, -4, 0);
    const bool single = trial % 2 == 0;
    UEAElement x;
    if (single) {
      x = UEAElement::generator(uniform(rng, 0, 1) ? Generator::W(n) : Generator::L(n));
    } else {
      for (int terms = uniform(rng, 1, 2); terms > 0; --terms) {
        GeneratorWord w;
        for (int left = n; left > 0;) {
          const int part = uniform(rng, 1, left);
          w.push_back(uniform(rng, 0, 1) ? Generator::W(part) : Generator::L(part));
          left -= part;
        }
        x.add(sorted_monomial(std::move(w)), CentralPoly(random_nonzero_rational(rng)));
      }
    }
    UEAElement y;
    for (int terms = uniform(rng, 1, 2); terms > 0; --terms) {
      std::vector<int> parts(static_cast<std::size_t>(uniform(rng, 1, 3)), 0);
      for (int i = 0; i < -m; ++i) --parts[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(parts.size()) - 1))];
      GeneratorWord w;
      for (int p : parts) w.push_back(uniform(rng, 0, 1) ? Generator::W(p) : Generator::L(p));
      y.add(sorted_monomial(std::move(w)), CentralPoly(random_nonzero_rational(rng)));
    }
    if (x.is_zero() || y.is_zero()) continue;
    ++lemma_b;
    const std::size_t ht_y = heights(y).ht;
    const int s = std::max(m + n, 0);
    const UEAElement bracket_xy = commutator(x, y);
    for (const auto& [mono, c] : bracket_xy.terms()) {
      const int k = mono.pos_l.weight() + mono.pos_w.weight();
      const std::size_t y_height = mono.neg_l.length() + mono.neg_w.length();
      const std::size_t x_height = mono.pos_l.length() + mono.pos_w.length();
      bool ok = degree(mono) == m + n && k >= s && k <= n;
      if (k == n) ok = ok && y_height < ht_y;
      if (single && k > 0) ok = ok && x_height == 1 && y_height < ht_y;
      if (!ok) return fail("height drop fails for x = " + to_string(x) + ", y = " + to_string(y));
    }
  }
  return pass(count(cases, "power pairs, ") + count(lemma_a, "[W, L_lambda] brackets, ") +
              count(lemma_b, "random (x, y) pairs"));
}

Outcome nullspace_universal(const VerifyConfig& cfg) {
  Rng rng(cfg.seed + 1);
  std::size_t solved = 0;
  for (int i = 0; i < 3; ++i) {
    const WhittakerModule module(random_phi(rng), QuotientSpec::universal());
    for (const Truncation& t : {Truncation{4, 3, 2}, Truncation{5, 4, 3}}) {
      const auto basis = whittaker_nullspace(module, t);
      const auto expected = static_cast<std::size_t>(t.z_degree_bound) + 1;
      if (basis.size() != expected) {
        return fail("dimension " + std::to_string(basis.size()) + " != " + std::to_string(expected) + " for phi " +
                    to_string(module.phi()));
      }
      for (std::size_t k = 0; k < basis.size(); ++k) {
        const ModuleVector zk = module.cyclic_vector().scaled(CentralPoly::monomial(Rational(1), k));
        if (!(basis[k] == zk)) return fail("basis vector " + to_string(basis[k]) + " is not z^k w");
        for (int n = 3; n <= 6; ++n) {
          if (!module.act(Generator::L(n), basis[k]).is_zero() || !module.act(Generator::W(n), basis[k]).is_zero()) {
            return fail("generator of index " + std::to_string(n) + " does not kill " + to_string(basis[k]));
          }
        }
      }
      ++solved;
    }
  }
  return pass(count(solved, "systems solved at windows (4,3,2) and (5,4,3)"));
}

Outcome nullspace_quotient(const VerifyConfig& cfg) {
  Rng rng(cfg.seed + 2);
  const WhittakerType phi = random_phi(rng);
  const Rational xi = random_rational(rng);
  const Rational eta = xi + 1;
  const std::vector<QuotientSpec> specs = {QuotientSpec::quotient(xi, 1), QuotientSpec::quotient(xi, 2),
                                           QuotientSpec::quotient({{xi, 2}, {eta, 1}})};
  for (const auto& spec : specs) {
    const WhittakerModule module(phi, spec);
    const auto basis = whittaker_nullspace(module, cfg.trunc);
    if (basis.size() != spec.residue_dimension()) {
      return fail("dimension " + std::to_string(basis.size()) + " for " + to_string(spec));
    }
    for (const auto& v : basis) {
      if (!v.is_multiple_of_cyclic()) return fail(to_string(v) + " is not supported on w in " + to_string(spec));
    }
  }
  return pass("degrees 1, 2, 3 at window (" + std::to_string(cfg.trunc.degree_bound) + "," +
              std::to_string(cfg.trunc.length_bound) + ")");
}

Outcome descent(const VerifyConfig& cfg) {
  Rng rng(cfg.seed + 3);
  const WhittakerType phi = random_phi(rng);
  const Rational xi = random_rational(rng);
  const auto keys = window_keys(cfg.trunc);
  std::size_t steps = 0;
  for (const auto& spec : {QuotientSpec::universal(), QuotientSpec::quotient(xi, 1), QuotientSpec::quotient(xi, 2)}) {
    const WhittakerModule module(phi, spec);
    for (int i = 0; i < 100; ++i) {
      const ModuleVector v = random_vector(rng, spec, keys, static_cast<std::size_t>(cfg.trunc.z_degree_bound));
      DescentResult r;
      try {
        r = descend(module, v);
      } catch (const DescentError& e) {
        return fail(std::string(e.what()) + " from " + to_string(v));
      }
      for (const auto& s : r.trace.steps) {
        if (!s.after.below(s.before)) return fail("measure does not drop from " + to_string(v));
      }
      const ModuleVector& t = r.witness.terminal;
      if (t.is_zero() || !t.is_multiple_of_cyclic() || !is_whittaker(module, t)) {
        return fail("terminal " + to_string(t) + " from " + to_string(v) + " is not a Whittaker vector");
      }
      steps += r.trace.steps.size();
    }
  }
  return pass("300 vectors, " + count(steps, "steps"));
}

Outcome decomposition(const VerifyConfig& cfg) {
  Rng rng(cfg.seed + 4);
  const WhittakerType phi = random_phi(rng);
  const auto keys = window_keys(cfg.trunc);
  for (const auto& spec : {QuotientSpec::quotient({{Rational(1), 1}, {Rational(2), 1}}),
                           QuotientSpec::quotient({{Rational(1), 2}, {Rational(-3), 1}})}) {
    const Decomposition d = decompose(spec);
    if (!d.bezout_identity) return fail("Bezout identity fails for " + to_string(spec));
    const std::size_t k = d.components.size();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        const CentralPoly prod = spec.reduce(d.components[i].projector * d.components[j].projector);
        if (i == j && !(prod == d.components[i].projector)) return fail("projector is not idempotent");
        if (i != j && !prod.is_zero()) return fail("projectors are not orthogonal");
        if (i != j && !shift_invertible_on_component(d, i, j, cfg.trunc)) {
          return fail("z - xi is not invertible on another component of " + to_string(spec));
        }
      }
    }
    for (int s = 0; s < 25; ++s) {
      const ModuleVector v = random_vector(rng, spec, keys, 0);
      ModuleVector sum(spec);
      for (std::size_t j = 0; j < k; ++j) {
        const ModuleVector pj = project(v, d, j);
        if (!(project(pj, d, j) == pj)) return fail("projection is not idempotent on " + to_string(v));
        for (std::size_t i = 0; i < k; ++i) {
          if (i != j && !project(pj, d, i).is_zero()) return fail("projections overlap on " + to_string(v));
        }
        sum += pj;
      }
      if (!(sum == v)) return fail("projections do not sum to " + to_string(v));
    }
  }
  return pass("(z-1)(z-2) and (z-1)^2(z+3), 25 vectors each");
}

Outcome composition(const VerifyConfig& cfg) {
  Rng rng(cfg.seed + 5);
  const WhittakerType phi = random_phi(rng);
  const Rational xi = random_rational(rng);
  for (int a = 1; a <= 3; ++a) {
    const auto layers = composition_series(phi, xi, a, cfg.trunc);
    if (layers.size() != static_cast<std::size_t>(a)) return fail("wrong layer count for a = " + std::to_string(a));
    for (const auto& l : layers) {
      const ModuleVector expected =
          ModuleVector::cyclic(l.cyclic.spec()).scaled(CentralPoly::linear(xi).pow(l.index));
      if (!(l.cyclic == expected) || !l.whittaker || !l.proper || !l.simple_quotient) {
        return fail("layer " + std::to_string(l.index) + " of a = " + std::to_string(a) + " is not certified");
      }
    }
    if (!layers.back().cyclic.scaled(CentralPoly::linear(xi)).is_zero()) return fail("last layer does not close");
  }
  return pass("a = 1, 2, 3 with xi = " + to_string(xi));
}

Outcome simplicity(const VerifyConfig& cfg) {
  Rng rng(cfg.seed + 6);
  const WhittakerType phi = random_phi(rng);
  const Rational xi = random_rational(rng);
  const Truncation window{4, 3, cfg.trunc.z_degree_bound};
  const SimplicityVerdict simple = simplicity_check(phi, QuotientSpec::quotient(xi, 1), window);
  if (!simple.simple_at_window) return fail("simple quotient reported a witness");
  const SimplicityVerdict square = simplicity_check(phi, QuotientSpec::quotient(xi, 2), window);
  const ModuleVector v1 = ModuleVector::cyclic(QuotientSpec::quotient(xi, 2)).scaled(CentralPoly::linear(xi));
  if (square.simple_at_window || !square.witness || !(square.witness->generator == v1) || !square.witness->proper) {
    return fail("M/(z - xi)^2 M: witness V_1 not found");
  }
  if (2 * square.witness->closure.rank() != basis_enumerate(v1.spec(), window).size()) {
    return fail("V_1 does not have half the window rank");
  }
  const SimplicityVerdict universal = simplicity_check(phi, QuotientSpec::universal(), window, xi);
  const ModuleVector u1 = ModuleVector::cyclic(QuotientSpec::universal()).scaled(CentralPoly::linear(xi));
  if (universal.simple_at_window || !universal.witness || !(universal.witness->generator == u1) ||
      !universal.witness->proper) {
    return fail("universal module: witness (z - xi) M not found");
  }
  return pass(count(simple.descents, "descents certify the simple quotient"));
}

Outcome module_annihilator(const VerifyConfig& cfg) {
  Rng rng(cfg.seed + 8);
  const WhittakerType phi = random_phi(rng);
  const Rational xi = random_rational(rng);
  const std::vector<QuotientSpec> specs = {QuotientSpec::universal(), QuotientSpec::quotient(xi, 2)};
  const std::vector<ModuleKey> keys = window_keys(Truncation{2, 2, 0});
  for (int i = 0; i < 100; ++i) {
    const WhittakerModule module(phi, specs[static_cast<std::size_t>(i % 2)]);
    const UEAElement u = random_element(rng);
    const UEAElement u2 = random_element(rng);
    const ModuleVector v = random_vector(rng, module.spec(), keys, 1);
    if (!(module.act(multiply(u, u2), v).vector == module.act(u, module.act(u2, v).vector).vector)) {
      return fail("module axiom fails for u = " + to_string(u) + ", u' = " + to_string(u2) + ", v = " + to_string(v));
    }
  }
  const QuotientSpec spec = QuotientSpec::quotient({{xi, 2}, {xi + 2, 1}});
  const WhittakerModule module(phi, spec);
  const UEAElement p = UEAElement::scalar(spec.modulus());
  for (int i = 0; i < 20; ++i) {
    GeneratorWord w;
    for (int len = uniform(rng, 1, 3); len > 0; --len) {
      const int n = uniform(rng, 1, 4);
      w.push_back(uniform(rng, 0, 1) ? Generator::W(n) : Generator::L(n));
    }
    const PBWMonomial mono = sorted_monomial(std::move(w));
    const UEAElement relation = UEAElement::monomial(mono) - UEAElement::scalar(CentralPoly(phi_extend(phi, mono)));
    const UEAElement u = multiply(random_element(rng), p) + multiply(random_element(rng), relation);
    if (!ann_contains(module, u)) return fail("ideal element " + to_string(u) + " does not kill w");
  }
  for (const auto& g : {Generator::L(0), Generator::W(0), Generator::L(-1)}) {
    if (ann_contains(module, UEAElement::generator(g))) return fail(to_string(g) + " wrongly kills w");
  }
  return pass("100 module-axiom triples, 20 ideal samples, 3 rejections");
}

struct CheckEntry {
  std::string name;
  std::string summary;
  std::function<Outcome(const VerifyConfig&)> body;
};

const std::vector<CheckEntry>& registry() {
  static const std::vector<CheckEntry> entries = {
      {"lie-axioms", "antisymmetry, Jacobi, grading and centrality of the bracket", lie_axioms},
      {"pbw-associativity", "associative normal-ordered product; normal forms are fixed", pbw_associativity},
      {"height-lemmas", "height drop under reordering, [W, L_lambda] and [U+, U<=0] brackets", height_lemmas},
      {"nullspace-universal", "Whittaker vectors of M_phi are S(z) w", nullspace_universal},
      {"nullspace-quotient", "Whittaker vectors of M/pM have dimension deg p", nullspace_quotient},
      {"descent", "descent reaches a nonzero multiple of w with a falling measure", descent},
      {"decomposition", "Bezout cofactors and component projectors", decomposition},
      {"composition-series", "composition series of M/(z - xi)^a M", composition},
      {"simplicity", "simple quotient certified, non-simple modules witnessed", simplicity},
      {"module-annihilator", "module axiom and the annihilator of w", module_annihilator},
  };
  return entries;
}

const CheckEntry& find_entry(std::string_view name) {
  for (const auto& e : registry()) {
    if (e.name == name) return e;
  }
  throw std::invalid_argument("unknown check '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.name);
    return out;
  }();
  return names;
}

const std::string& check_summary(std::string_view name) { return find_entry(name).summary; }

CheckResult run_check(std::string_view name, const VerifyConfig& cfg) {
  const CheckEntry& entry = find_entry(name);
  CheckResult result{entry.name, entry.summary, false, "", 0};
  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome o = entry.body(cfg);
    result.passed = o.passed;
    result.detail = o.detail;
  } catch (const std::exception& e) {
    result.detail = std::string("exception: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<CheckResult> run_suite(std::string_view suite, const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  if (suite == "all") {
    for (const auto& name : check_names()) out.push_back(run_check(name, cfg));
  } else {
    out.push_back(run_check(suite, cfg));
  }
  return out;
}

}  // namespace w22
