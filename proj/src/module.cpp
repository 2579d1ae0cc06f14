#include "w22/module.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace w22 {

WhittakerType::WhittakerType(Rational l1, Rational l2, Rational w1, Rational w2)
    : l1_(std::move(l1)), l2_(std::move(l2)), w1_(std::move(w1)), w2_(std::move(w2)) {
  if (is_zero(l1_) || is_zero(l2_) || is_zero(w1_) || is_zero(w2_)) {
    throw std::invalid_argument("Whittaker type must be nonsingular: phi(L1), phi(L2), phi(W1), phi(W2) nonzero");
  }
}

Rational WhittakerType::value(const Generator& g) const {
  if (!g.is_positive()) throw std::invalid_argument("phi is defined on positive generators only");
  if (g.index >= 3) return 0;
  if (g.kind == GeneratorKind::L) return g.index == 1 ? l1_ : l2_;
  return g.index == 1 ? w1_ : w2_;
}

std::string to_string(const WhittakerType& phi) {
  return to_string(phi.l1()) + "," + to_string(phi.l2()) + "," + to_string(phi.w1()) + "," + to_string(phi.w2());
}

Rational phi_extend(const WhittakerType& phi, const PBWMonomial& m) {
  if (m.has_nonpositive_part()) throw std::invalid_argument("phi_extend needs a monomial in the positive blocks");
  Rational out = 1;
  for (int p : m.pos_l.parts()) out *= phi.value(Generator::L(p));
  for (int p : m.pos_w.parts()) out *= phi.value(Generator::W(p));
  return out;
}

QuotientSpec QuotientSpec::quotient(std::vector<Root> roots) {
  if (roots.empty()) throw std::invalid_argument("quotient spec needs at least one root");
  QuotientSpec spec;
  spec.modulus_ = CentralPoly(1);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].multiplicity < 1) throw std::invalid_argument("root multiplicity must be >= 1");
    for (std::size_t j = 0; j < i; ++j) {
      if (roots[i].xi == roots[j].xi) throw std::invalid_argument("repeated root " + to_string(roots[i].xi));
    }
    spec.modulus_ *= CentralPoly::linear(roots[i].xi).pow(static_cast<std::size_t>(roots[i].multiplicity));
  }
  spec.roots_ = std::move(roots);
  return spec;
}

QuotientSpec QuotientSpec::quotient(const Rational& xi, int multiplicity) {
  return quotient(std::vector<Root>{{xi, multiplicity}});
}

std::size_t QuotientSpec::residue_dimension() const { return is_universal() ? 0 : *modulus_.degree(); }

CentralPoly QuotientSpec::reduce(const CentralPoly& c) const { return is_universal() ? c : mod(c, modulus_); }

std::string to_string(const QuotientSpec& spec) {
  if (spec.is_universal()) return "universal";
  std::string out;
  for (const auto& r : spec.roots()) {
    if (!out.empty()) out += "*";
    out += "(" + to_string(CentralPoly::linear(r.xi)) + ")";
    if (r.multiplicity != 1) out += "^" + std::to_string(r.multiplicity);
  }
  return out;
}

bool KeyOrder::operator()(const ModuleKey& a, const ModuleKey& b) const {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  if (a.lambda.length() != b.lambda.length()) return a.lambda.length() > b.lambda.length();
  if (canonical_less(a.lambda, b.lambda)) return true;
  if (canonical_less(b.lambda, a.lambda)) return false;
  return canonical_less(a.mu, b.mu);
}

std::string to_string(const ModuleKey& k) {
  std::string body = to_string(PBWMonomial{k.lambda, k.mu, {}, {}});
  return body.empty() ? "w" : body + "*w";
}

ModuleVector ModuleVector::cyclic(const QuotientSpec& spec) { return basis_vector(spec, ModuleKey{}); }

ModuleVector ModuleVector::basis_vector(const QuotientSpec& spec, const ModuleKey& key, const CentralPoly& c) {
  if (!key.lambda.all_nonpositive() || !key.mu.all_nonpositive()) {
    throw std::invalid_argument("module keys must be non-positive partitions");
  }
  ModuleVector v(spec);
  v.add(key, c);
  return v;
}

void ModuleVector::add(const ModuleKey& key, const CentralPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    CentralPoly r = spec_.reduce(c);
    if (!r.is_zero()) terms_.emplace(key, std::move(r));
    return;
  }
  it->second = spec_.reduce(it->second + c);
  if (it->second.is_zero()) terms_.erase(it);
}

void ModuleVector::check_same_spec(const ModuleVector& o) const {
  if (!(spec_ == o.spec_)) throw std::invalid_argument("module vectors live in different quotients");
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  check_same_spec(o);
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
  check_same_spec(o);
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

ModuleVector ModuleVector::scaled(const CentralPoly& c) const {
  ModuleVector out(spec_);
  if (c.is_zero()) return out;
  for (const auto& [k, a] : terms_) out.add(k, a * c);
  return out;
}

CentralPoly ModuleVector::coefficient(const ModuleKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? CentralPoly{} : it->second;
}

bool ModuleVector::is_multiple_of_cyclic() const { return terms_.size() == 1 && terms_.begin()->first.is_cyclic(); }

std::string to_string(const ModuleVector& v) {
  std::vector<std::pair<CentralPoly, std::string>> terms;
  terms.reserve(v.size());
  for (const auto& [k, c] : v.terms()) terms.emplace_back(c, to_string(k));
  return render_sum(terms);
}

bool LabelOrder::operator()(const BasisLabel& a, const BasisLabel& b) const {
  if (KeyOrder{}(a.key, b.key)) return true;
  if (KeyOrder{}(b.key, a.key)) return false;
  return a.z_power < b.z_power;
}

std::vector<ModuleKey> window_keys(const Truncation& trunc) {
  if (trunc.degree_bound < 0 || trunc.length_bound < 0 || trunc.z_degree_bound < 0) {
    throw std::invalid_argument("truncation bounds must be non-negative");
  }
  const auto parts = enumerate_nonpositive(trunc.degree_bound, trunc.length_bound);
  std::vector<ModuleKey> keys;
  for (const auto& lambda : parts) {
    for (const auto& mu : parts) {
      ModuleKey k{lambda, mu};
      if (trunc.contains(k)) keys.push_back(std::move(k));
    }
  }
  std::sort(keys.begin(), keys.end(), KeyOrder{});
  return keys;
}

std::vector<BasisLabel> basis_enumerate(const QuotientSpec& spec, const Truncation& trunc) {
  const std::size_t powers =
      spec.is_universal() ? static_cast<std::size_t>(trunc.z_degree_bound) + 1 : spec.residue_dimension();
  std::vector<BasisLabel> out;
  for (const auto& key : window_keys(trunc)) {
    for (std::size_t k = 0; k < powers; ++k) out.push_back({k, key});
  }
  return out;
}

VectorDiagnostics vector_diagnostics(const ModuleVector& v) {
  if (v.is_zero()) throw std::domain_error("diagnostics of the zero vector are undefined");
  VectorDiagnostics d;
  d.mindeg = v.terms().begin()->first.degree();
  for (const auto& [k, c] : v.terms()) d.mindeg = std::min(d.mindeg, k.degree());
  for (const auto& [k, c] : v.terms()) {
    if (k.degree() != d.mindeg) continue;
    d.ell = std::max(d.ell, k.length());
    d.ell_prime = std::max(d.ell_prime, k.lambda.length());
  }
  return d;
}

namespace {

struct GenKey {
  Generator g;
  ModuleKey key;
  friend bool operator==(const GenKey&, const GenKey&) = default;
};

struct GenKeyHash {
  std::size_t operator()(const GenKey& k) const noexcept {
    std::size_t h = hash_value(k.key.lambda) * 31 + hash_value(k.key.mu);
    return h ^ (static_cast<std::size_t>(k.g.kind) * 0x9e3779b97f4a7c15ULL + static_cast<std::size_t>(k.g.index + 0x8000));
  }
};

}  // namespace

struct WhittakerModule::Cache {
  std::shared_mutex mutex;
  std::unordered_map<GenKey, std::vector<std::pair<ModuleKey, CentralPoly>>, GenKeyHash> table;
};

WhittakerModule::WhittakerModule(WhittakerType phi, QuotientSpec spec)
    : phi_(std::move(phi)), spec_(std::move(spec)), cache_(std::make_shared<Cache>()) {}

ModuleVector WhittakerModule::basis_vector(const BasisLabel& label) const {
  return ModuleVector::basis_vector(spec_, label.key, CentralPoly::monomial(Rational(1), label.z_power));
}

void WhittakerModule::check_spec(const ModuleVector& v) const {
  if (!(v.spec() == spec_)) {
    throw std::invalid_argument("vector lives in " + to_string(v.spec()) + ", module is " + to_string(spec_));
  }
}

// g . L_lambda W_mu w in M_phi: normalize the word, then let the positive
// blocks act on w through phi.
const std::vector<std::pair<ModuleKey, CentralPoly>>& WhittakerModule::generator_on_key(const Generator& g,
                                                                                        const ModuleKey& key) const {
  GenKey gk{g, key};
  {
    std::shared_lock lock(cache_->mutex);
    auto it = cache_->table.find(gk);
    if (it != cache_->table.end()) return it->second;
  }
  GeneratorWord word;
  word.reserve(key.length() + 1);
  word.push_back(g);
  for (int p : key.lambda.parts()) word.push_back(Generator::L(p));
  for (int p : key.mu.parts()) word.push_back(Generator::W(p));
  std::map<ModuleKey, CentralPoly, KeyOrder> acc;
  const UEAElement normal = normalize(word);
  for (const auto& [m, c] : normal.terms()) {
    Rational s = phi_extend(phi_, PBWMonomial{{}, {}, m.pos_l, m.pos_w});
    if (is_zero(s)) continue;
    auto [it, inserted] = acc.try_emplace(ModuleKey{m.neg_l, m.neg_w}, c * s);
    if (!inserted) it->second += c * s;
  }
  std::vector<std::pair<ModuleKey, CentralPoly>> image;
  for (auto& [k, c] : acc) {
    if (!c.is_zero()) image.emplace_back(k, std::move(c));
  }
  std::unique_lock lock(cache_->mutex);
  return cache_->table.try_emplace(std::move(gk), std::move(image)).first->second;
}

ModuleVector WhittakerModule::act(const Generator& g, const ModuleVector& v) const {
  check_spec(v);
  ModuleVector out(spec_);
  if (g.is_central()) return v.scaled(CentralPoly::z());
  for (const auto& [key, c] : v.terms()) {
    for (const auto& [k, a] : generator_on_key(g, key)) out.add(k, a * c);
  }
  return out;
}

ModuleVector WhittakerModule::act_shifted(const Generator& x, const ModuleVector& v) const {
  ModuleVector out = act(x, v);
  if (x.is_positive()) {
    Rational s = phi_.value(x);
    if (!is_zero(s)) out -= v.scaled(CentralPoly(s));
  }
  return out;
}

ActResult WhittakerModule::act(const UEAElement& u, const ModuleVector& v, const std::optional<Truncation>& trunc) const {
  check_spec(v);
  ModuleVector out(spec_);
  for (const auto& [m, c] : u.terms()) {
    ModuleVector cur = v;
    const GeneratorWord word = m.word();
    for (auto it = word.rbegin(); it != word.rend() && !cur.is_zero(); ++it) cur = act(*it, cur);
    out += cur.scaled(c);
  }
  TruncationReport report;
  if (trunc) {
    ModuleVector kept(spec_);
    for (const auto& [k, c] : out.terms()) {
      if (trunc->contains(k)) {
        kept.add(k, c);
      } else {
        report.record_drop();
      }
    }
    out = std::move(kept);
  }
  return {std::move(out), report};
}

ActResult act(const WhittakerType& phi, const UEAElement& u, const ModuleVector& v,
              const std::optional<Truncation>& trunc) {
  return WhittakerModule(phi, v.spec()).act(u, v, trunc);
}

}  // namespace w22
