#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "w22/linalg.hpp"
#include "w22/solver.hpp"

// Submodule structure of M_phi / p(z) M_phi: composition series, the
// primary decomposition along the factors of p, windowed submodule
// closure and the simplicity certificate.

namespace w22 {

struct SeriesLayer {
  std::size_t index = 0;
  /// (z - xi)^index w in M / (z - xi)^a M.
  ModuleVector cyclic;
  bool whittaker = false;
  /// Cyclic vector lies outside the next layer (checked on the window).
  bool proper = false;
  /// Every window vector of the layer descends to a nonzero multiple of the
  /// cyclic vector modulo the next layer.
  bool simple_quotient = false;
};

/// Layers V_0 > V_1 > ... > V_{a-1} > V_a = 0 of M / (z - xi)^a M. Throws
/// std::invalid_argument when a < 1.
std::vector<SeriesLayer> composition_series(const WhittakerType& phi, const Rational& xi, int a,
                                            const Truncation& trunc);

struct DecompositionComponent {
  std::size_t index = 0;
  Rational xi;
  int multiplicity = 1;
  /// prod_{i != j} (z - xi_i)^{a_i}.
  CentralPoly cofactor_base;
  /// Inverse of cofactor_base modulo (z - xi_j)^{a_j}.
  CentralPoly cofactor;
  /// cofactor * cofactor_base reduced mod p: the idempotent of the component.
  CentralPoly projector;
  /// cofactor_base * w.
  ModuleVector cyclic;
};

struct Decomposition {
  QuotientSpec spec;
  std::vector<DecompositionComponent> components;
  /// sum_j q_j p_j == 1 exactly.
  bool bezout_identity = false;
};

/// Throws std::invalid_argument for the universal module.
Decomposition decompose(const QuotientSpec& spec);

/// projector_j * v. Throws std::invalid_argument if v lives elsewhere.
ModuleVector project(const ModuleVector& v, const Decomposition& d, std::size_t component);

/// True iff multiplication by (z - xi_i) is a bijection of component j
/// restricted to the window keys.
bool shift_invertible_on_component(const Decomposition& d, std::size_t shift_root, std::size_t component,
                                   const Truncation& trunc);

/// Span of a windowed submodule. Products leaving the window are skipped
/// whole and counted, so the span always lies inside the true submodule.
class ClosureResult {
 public:
  ClosureResult(QuotientSpec spec, const Truncation& trunc);

  const std::vector<ModuleVector>& span() const { return span_; }
  std::size_t rank() const { return basis_.rank(); }
  bool complete() const { return skipped_ == 0; }
  std::size_t skipped() const { return skipped_; }
  std::size_t sweeps() const { return sweeps_; }
  const Truncation& window() const { return trunc_; }

  /// Whether v lies in the span; false if v leaves the window.
  bool contains(const ModuleVector& v) const;

 private:
  friend class ClosureBuilder;
  QuotientSpec spec_;
  Truncation trunc_;
  Coordinates coords_;
  linalg::EchelonBasis basis_;
  std::vector<ModuleVector> span_;
  std::size_t skipped_ = 0;
  std::size_t sweeps_ = 0;
};

/// Generators applied during closure: L_n, W_n for |n| <= N + 2, then z.
std::vector<Generator> closure_generators(const Truncation& trunc);

/// Submodule generated by v inside the window (z-degree <= K for the
/// universal module). OpenMP over the products of one sweep; merge order is
/// fixed, so the result equals the serial reference.
ClosureResult submodule_closure(const WhittakerModule& module, const ModuleVector& v, const Truncation& trunc);
ClosureResult submodule_closure_serial(const WhittakerModule& module, const ModuleVector& v,
                                       const Truncation& trunc);

struct SimplicityWitness {
  ModuleVector generator;
  /// Descent terminal coefficient; not a unit of S(z) / (p).
  CentralPoly q;
  ClosureResult closure;
  /// Cyclic vector not in the closure span.
  bool proper = false;
};

struct SimplicityVerdict {
  bool simple_at_window = false;
  std::size_t descents = 0;
  std::optional<SimplicityWitness> witness;
};

/// Descends from structural candidates ((z - xi) w for a non-simple spec,
/// with xi = probe in the universal module) and then from every window
/// basis vector. Simple at the window iff every terminal is a unit multiple
/// of w.
SimplicityVerdict simplicity_check(const WhittakerType& phi, const QuotientSpec& spec, const Truncation& trunc,
                                   const Rational& probe = Rational(0));

}  // namespace w22
