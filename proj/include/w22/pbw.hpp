#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "w22/algebra.hpp"
#include "w22/partition.hpp"
#include "w22/poly.hpp"

namespace w22 {

using GeneratorWord = std::vector<Generator>;

/// PBW block a generator belongs to: L_{<=0}, W_{<=0}, L_{>0}, W_{>0}.
/// Normal order sorts by (block, index).
int pbw_block(const Generator& g);
bool pbw_less(const Generator& a, const Generator& b);

/// Ordered monomial L_{neg_l} W_{neg_w} L_{pos_l} W_{pos_w}.
struct PBWMonomial {
  Partition neg_l;  // parts <= 0
  Partition neg_w;  // parts <= 0
  Partition pos_l;  // parts >= 1
  Partition pos_w;  // parts >= 1

  /// Builds from a word already in normal order; throws std::invalid_argument
  /// otherwise (or if z occurs).
  static PBWMonomial from_sorted_word(std::span<const Generator> word);

  bool valid() const;
  bool empty() const { return neg_l.empty() && neg_w.empty() && pos_l.empty() && pos_w.empty(); }
  bool has_nonpositive_part() const { return !neg_l.empty() || !neg_w.empty(); }
  bool has_positive_part() const { return !pos_l.empty() || !pos_w.empty(); }

  GeneratorWord word() const;
  std::size_t height() const { return neg_l.length() + neg_w.length() + pos_l.length() + pos_w.length(); }
  std::size_t l_height() const { return neg_l.length() + pos_l.length(); }

  friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
};

/// |neg_l| + |neg_w| + |pos_l| + |pos_w|.
int degree(const PBWMonomial& m);

/// Rendering order: degree descending, height descending, then blockwise
/// canonical partition order.
struct MonomialOrder {
  bool operator()(const PBWMonomial& a, const PBWMonomial& b) const;
};

/// "L[-1]^2*W[0]"; empty string for the empty monomial.
std::string to_string(const PBWMonomial& m);

/// Element of U(W): finite S(z)-combination of PBW monomials, no zero
/// coefficients stored. The empty monomial carries the S(z) part.
class UEAElement {
 public:
  using Map = std::map<PBWMonomial, CentralPoly, MonomialOrder>;

  UEAElement() = default;
  static UEAElement scalar(const CentralPoly& c);
  static UEAElement generator(const Generator& g);
  static UEAElement monomial(const PBWMonomial& m, const CentralPoly& c = CentralPoly(1));

  void add(const PBWMonomial& m, const CentralPoly& c);
  UEAElement& operator+=(const UEAElement& o);
  UEAElement& operator-=(const UEAElement& o);
  friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
  UEAElement operator-() const;
  UEAElement scaled(const CentralPoly& c) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  CentralPoly coefficient(const PBWMonomial& m) const;

  friend bool operator==(const UEAElement&, const UEAElement&) = default;

 private:
  Map terms_;
};

/// Canonical text, parseable by the expression grammar.
std::string to_string(const UEAElement& x);

/// PBW expansion of the product of `word`. Results are memoized.
UEAElement normalize(std::span<const Generator> word);

/// Normalized product, S(z)-bilinear.
UEAElement multiply(const UEAElement& a, const UEAElement& b);

/// a*b - b*a.
UEAElement commutator(const UEAElement& a, const UEAElement& b);

struct Heights {
  std::size_t ht = 0;   // total number of generator factors
  std::size_t ht1 = 0;  // number of L factors
};

/// Throws std::domain_error on zero.
Heights heights(const UEAElement& x);
/// Throws std::domain_error on zero.
int mindeg(const UEAElement& x);

/// Memoization table statistics and reset (benchmarks start cold).
std::size_t normalize_cache_size();
void clear_normalize_cache();

}  // namespace w22
