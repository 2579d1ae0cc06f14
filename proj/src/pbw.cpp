#include "w22/pbw.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace w22 {

int pbw_block(const Generator& g) {
  switch (g.kind) {
    case GeneratorKind::L: return g.index <= 0 ? 0 : 2;
    case GeneratorKind::W: return g.index <= 0 ? 1 : 3;
    case GeneratorKind::Z: break;
  }
  throw std::invalid_argument("z has no PBW block");
}

bool pbw_less(const Generator& a, const Generator& b) {
  const int ba = pbw_block(a);
  const int bb = pbw_block(b);
  if (ba != bb) return ba < bb;
  return a.index < b.index;
}

PBWMonomial PBWMonomial::from_sorted_word(std::span<const Generator> word) {
  std::vector<int> blocks[4];
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i].is_central()) throw std::invalid_argument("z is not a PBW factor");
    if (i && pbw_less(word[i], word[i - 1])) throw std::invalid_argument("word is not in PBW order");
    blocks[pbw_block(word[i])].push_back(word[i].index);
  }
  return {Partition(std::move(blocks[0])), Partition(std::move(blocks[1])), Partition(std::move(blocks[2])),
          Partition(std::move(blocks[3]))};
}

bool PBWMonomial::valid() const {
  return neg_l.all_nonpositive() && neg_w.all_nonpositive() && pos_l.all_positive() && pos_w.all_positive();
}

GeneratorWord PBWMonomial::word() const {
  GeneratorWord out;
  out.reserve(height());
  for (int p : neg_l.parts()) out.push_back(Generator::L(p));
  for (int p : neg_w.parts()) out.push_back(Generator::W(p));
  for (int p : pos_l.parts()) out.push_back(Generator::L(p));
  for (int p : pos_w.parts()) out.push_back(Generator::W(p));
  return out;
}

int degree(const PBWMonomial& m) {
  return m.neg_l.weight() + m.neg_w.weight() + m.pos_l.weight() + m.pos_w.weight();
}

bool MonomialOrder::operator()(const PBWMonomial& a, const PBWMonomial& b) const {
  const int da = degree(a);
  const int db = degree(b);
  if (da != db) return da > db;
  if (a.height() != b.height()) return a.height() > b.height();
  const Partition* pa[] = {&a.neg_l, &a.neg_w, &a.pos_l, &a.pos_w};
  const Partition* pb[] = {&b.neg_l, &b.neg_w, &b.pos_l, &b.pos_w};
  for (int i = 0; i < 4; ++i) {
    if (canonical_less(*pa[i], *pb[i])) return true;
    if (canonical_less(*pb[i], *pa[i])) return false;
  }
  return false;
}

std::string to_string(const PBWMonomial& m) {
  std::string out;
  const GeneratorWord w = m.word();
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += to_string(w[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

UEAElement UEAElement::scalar(const CentralPoly& c) {
  UEAElement x;
  x.add(PBWMonomial{}, c);
  return x;
}

UEAElement UEAElement::generator(const Generator& g) {
  if (g.is_central()) return scalar(CentralPoly::z());
  return monomial(PBWMonomial::from_sorted_word(std::span<const Generator>(&g, 1)));
}

UEAElement UEAElement::monomial(const PBWMonomial& m, const CentralPoly& c) {
  if (!m.valid()) throw std::invalid_argument("invalid PBW monomial");
  UEAElement x;
  x.add(m, c);
  return x;
}

void UEAElement::add(const PBWMonomial& m, const CentralPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

UEAElement UEAElement::operator-() const { return scaled(CentralPoly(-1)); }

UEAElement UEAElement::scaled(const CentralPoly& c) const {
  UEAElement out;
  if (c.is_zero()) return out;
  for (const auto& [m, a] : terms_) out.terms_.emplace(m, a * c);
  return out;
}

CentralPoly UEAElement::coefficient(const PBWMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CentralPoly{} : it->second;
}

std::string to_string(const UEAElement& x) {
  std::vector<std::pair<CentralPoly, std::string>> terms;
  terms.reserve(x.size());
  for (const auto& [m, c] : x.terms()) terms.emplace_back(c, to_string(m));
  return render_sum(terms);
}

namespace {

struct WordHash {
  std::size_t operator()(const GeneratorWord& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& g : w) {
      h ^= static_cast<std::size_t>(g.kind) * 0x9e3779b97f4a7c15ULL + static_cast<std::size_t>(g.index + 0x8000);
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

// Shared memo of normalized words. Lookups and inserts are individually
// atomic; two threads may compute the same entry, with identical results.
class NormalizeCache {
 public:
  bool find(const GeneratorWord& w, UEAElement& out) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(w);
    if (it == table_.end()) return false;
    out = it->second;
    return true;
  }
  void insert(const GeneratorWord& w, const UEAElement& x) {
    std::unique_lock lock(mutex_);
    table_.try_emplace(w, x);
  }
  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }
  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<GeneratorWord, UEAElement, WordHash> table_;
};

NormalizeCache& cache() {
  static NormalizeCache instance;
  return instance;
}

// `w` contains no z. Straightens the leftmost out-of-order adjacent pair via
// xy = yx + [x,y].
UEAElement normalize_word(const GeneratorWord& w) {
  std::size_t i = 0;
  while (i + 1 < w.size() && !pbw_less(w[i + 1], w[i])) ++i;
  if (i + 1 >= w.size()) return UEAElement::monomial(PBWMonomial::from_sorted_word(w));

  UEAElement result;
  if (cache().find(w, result)) return result;

  GeneratorWord swapped = w;
  std::swap(swapped[i], swapped[i + 1]);
  result = normalize_word(swapped);

  const GeneratorCombination br = bracket(w[i], w[i + 1]);
  for (const auto& [g, c] : br.terms()) {
    GeneratorWord rest;
    rest.reserve(w.size() - 1);
    rest.insert(rest.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    if (!g.is_central()) rest.push_back(g);
    rest.insert(rest.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
    CentralPoly coeff = g.is_central() ? CentralPoly::monomial(c, 1) : CentralPoly(c);
    result += normalize_word(rest).scaled(coeff);
  }
  cache().insert(w, result);
  return result;
}

}  // namespace

UEAElement normalize(std::span<const Generator> word) {
  GeneratorWord w;
  w.reserve(word.size());
  std::size_t z_power = 0;
  for (const auto& g : word) {
    if (g.is_central()) {
      ++z_power;
    } else {
      w.push_back(g);
    }
  }
  UEAElement x = normalize_word(w);
  if (z_power == 0) return x;
  return x.scaled(CentralPoly::monomial(Rational(1), z_power));
}

UEAElement multiply(const UEAElement& a, const UEAElement& b) {
  UEAElement out;
  for (const auto& [ma, ca] : a.terms()) {
    GeneratorWord wa = ma.word();
    for (const auto& [mb, cb] : b.terms()) {
      GeneratorWord w = wa;
      const GeneratorWord wb = mb.word();
      w.insert(w.end(), wb.begin(), wb.end());
      out += normalize_word(w).scaled(ca * cb);
    }
  }
  return out;
}

UEAElement commutator(const UEAElement& a, const UEAElement& b) { return multiply(a, b) - multiply(b, a); }

Heights heights(const UEAElement& x) {
  if (x.is_zero()) throw std::domain_error("heights of the zero element are undefined");
  Heights h;
  for (const auto& [m, c] : x.terms()) {
    h.ht = std::max(h.ht, m.height());
    h.ht1 = std::max(h.ht1, m.l_height());
  }
  return h;
}

int mindeg(const UEAElement& x) {
  if (x.is_zero()) throw std::domain_error("mindeg of the zero element is undefined");
  int d = degree(x.terms().begin()->first);
  for (const auto& [m, c] : x.terms()) d = std::min(d, degree(m));
  return d;
}

std::size_t normalize_cache_size() { return cache().size(); }
void clear_normalize_cache() { cache().clear(); }

}  // namespace w22
