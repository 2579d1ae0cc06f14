#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "w22/pbw.hpp"

// Universal Whittaker module M_phi = U(W) (x)_{U(W_+)} C_phi and its quotients
// M_phi / p(z) M_phi. Vectors are expanded in the basis z^k L_lambda W_mu w.

namespace w22 {

/// A Lie homomorphism phi: W_+ -> Q, determined by its values on the
/// generators L_1, L_2, W_1, W_2. All four must be nonzero.
class WhittakerType {
 public:
  WhittakerType(Rational l1, Rational l2, Rational w1, Rational w2);

  const Rational& l1() const { return l1_; }
  const Rational& l2() const { return l2_; }
  const Rational& w1() const { return w1_; }
  const Rational& w2() const { return w2_; }

  /// phi(g) for a positive generator; zero for index >= 3.
  Rational value(const Generator& g) const;

  friend bool operator==(const WhittakerType&, const WhittakerType&) = default;

 private:
  Rational l1_, l2_, w1_, w2_;
};

std::string to_string(const WhittakerType& phi);

/// Scalar by which a monomial in the positive blocks acts on w. Throws
/// std::invalid_argument if `m` has non-positive blocks.
Rational phi_extend(const WhittakerType& phi, const PBWMonomial& m);

struct Root {
  Rational xi;
  int multiplicity = 1;
  friend bool operator==(const Root&, const Root&) = default;
};

/// Either the universal module (no relation) or the quotient by
/// p(z) = prod (z - xi_i)^{a_i}, distinct xi_i, a_i >= 1.
class QuotientSpec {
 public:
  static QuotientSpec universal() { return QuotientSpec(); }
  static QuotientSpec quotient(std::vector<Root> roots);
  /// (z - xi)^a.
  static QuotientSpec quotient(const Rational& xi, int multiplicity = 1);

  bool is_universal() const { return roots_.empty(); }
  const std::vector<Root>& roots() const { return roots_; }
  /// p(z); zero for the universal module.
  const CentralPoly& modulus() const { return modulus_; }
  /// deg p, or 0 for the universal module.
  std::size_t residue_dimension() const;
  CentralPoly reduce(const CentralPoly& c) const;

  friend bool operator==(const QuotientSpec& a, const QuotientSpec& b) { return a.roots_ == b.roots_; }

 private:
  QuotientSpec() = default;
  std::vector<Root> roots_;
  CentralPoly modulus_;
};

/// "universal" or "(z - 1)^2*(z + 3)".
std::string to_string(const QuotientSpec& spec);

/// Basis key (lambda, mu) for L_lambda W_mu w; both partitions non-positive.
struct ModuleKey {
  Partition lambda;
  Partition mu;
  std::size_t length() const { return lambda.length() + mu.length(); }
  int degree() const { return lambda.weight() + mu.weight(); }
  bool is_cyclic() const { return lambda.empty() && mu.empty(); }
  friend bool operator==(const ModuleKey&, const ModuleKey&) = default;
};

/// Basis order: total length ascending, degree descending, L-length
/// descending, then lambda and mu in canonical partition order.
struct KeyOrder {
  bool operator()(const ModuleKey& a, const ModuleKey& b) const;
};

/// "L[-1]*W[0]*w"; "w" for the cyclic key.
std::string to_string(const ModuleKey& k);

class ModuleVector {
 public:
  using Map = std::map<ModuleKey, CentralPoly, KeyOrder>;

  /// Zero vector of the universal module.
  ModuleVector() : spec_(QuotientSpec::universal()) {}
  explicit ModuleVector(QuotientSpec spec) : spec_(std::move(spec)) {}
  /// The cyclic vector w (or its image in the quotient).
  static ModuleVector cyclic(const QuotientSpec& spec);
  static ModuleVector basis_vector(const QuotientSpec& spec, const ModuleKey& key,
                                   const CentralPoly& c = CentralPoly(1));

  const QuotientSpec& spec() const { return spec_; }
  /// Adds c * key, reducing modulo p(z).
  void add(const ModuleKey& key, const CentralPoly& c);
  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& operator-=(const ModuleVector& o);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  /// c * v, reduced modulo p(z).
  ModuleVector scaled(const CentralPoly& c) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  CentralPoly coefficient(const ModuleKey& key) const;
  /// True iff the support is exactly the cyclic key.
  bool is_multiple_of_cyclic() const;

  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

 private:
  void check_same_spec(const ModuleVector& o) const;
  QuotientSpec spec_;
  Map terms_;
};

std::string to_string(const ModuleVector& v);

/// Finite window on a module: degree >= -degree_bound, total length <=
/// length_bound; z_degree_bound only bounds basis enumeration.
struct Truncation {
  int degree_bound = 0;
  int length_bound = 0;
  int z_degree_bound = 0;
  bool contains(const ModuleKey& k) const {
    return k.degree() >= -degree_bound && static_cast<int>(k.length()) <= length_bound;
  }
};

struct TruncationReport {
  bool truncated = false;
  std::size_t dropped = 0;
  void record_drop(std::size_t n = 1) {
    dropped += n;
    truncated = dropped > 0;
  }
  void merge(const TruncationReport& o) { record_drop(o.dropped); }
};

struct ActResult {
  ModuleVector vector;
  TruncationReport report;
};

struct BasisLabel {
  std::size_t z_power = 0;
  ModuleKey key;
  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

/// Key order, then z-power ascending.
struct LabelOrder {
  bool operator()(const BasisLabel& a, const BasisLabel& b) const;
};

/// Keys of the window in basis order.
std::vector<ModuleKey> window_keys(const Truncation& trunc);

/// z^k L_lambda W_mu w with keys in the window and k <= K (universal) or
/// k < deg p (quotient); key-major, then k ascending.
std::vector<BasisLabel> basis_enumerate(const QuotientSpec& spec, const Truncation& trunc);

struct VectorDiagnostics {
  int mindeg = 0;
  std::size_t ell = 0;        // height of the minimal-degree component
  std::size_t ell_prime = 0;  // L-height of the minimal-degree component
};

/// Throws std::domain_error on the zero vector.
VectorDiagnostics vector_diagnostics(const ModuleVector& v);

/// A Whittaker module of type phi with a fixed quotient spec. Caches the
/// action of single generators on basis keys; the cache is shared between
/// copies and safe for concurrent use.
class WhittakerModule {
 public:
  WhittakerModule(WhittakerType phi, QuotientSpec spec);

  const WhittakerType& phi() const { return phi_; }
  const QuotientSpec& spec() const { return spec_; }

  ModuleVector cyclic_vector() const { return ModuleVector::cyclic(spec_); }
  ModuleVector basis_vector(const BasisLabel& label) const;
  ModuleVector zero() const { return ModuleVector(spec_); }

  /// u . v; drops and reports terms outside `trunc` when given. Throws
  /// std::invalid_argument if v lives in a different quotient.
  ActResult act(const UEAElement& u, const ModuleVector& v, const std::optional<Truncation>& trunc = {}) const;
  ModuleVector act(const Generator& g, const ModuleVector& v) const;

  /// (x - phi(x)) . v for a generator x, with phi extended by zero outside
  /// the positive part.
  ModuleVector act_shifted(const Generator& x, const ModuleVector& v) const;

 private:
  struct Cache;
  const std::vector<std::pair<ModuleKey, CentralPoly>>& generator_on_key(const Generator& g,
                                                                          const ModuleKey& key) const;
  void check_spec(const ModuleVector& v) const;

  WhittakerType phi_;
  QuotientSpec spec_;
  std::shared_ptr<Cache> cache_;
};

/// Free-function form of WhittakerModule::act.
ActResult act(const WhittakerType& phi, const UEAElement& u, const ModuleVector& v,
              const std::optional<Truncation>& trunc = {});

}  // namespace w22
