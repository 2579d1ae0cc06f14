#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "w22/linalg.hpp"
#include "w22/module.hpp"

namespace w22 {

/// Thrown when a step of the descent procedure produces something the
/// underlying theory rules out (a zero vector, a non-decreasing measure).
class DescentError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Generators of W_+ whose shifted actions cut out the Whittaker vectors, in
/// stacking order.
inline constexpr std::array<Generator, 4> kWhittakerGenerators = {Generator::L(1), Generator::L(2), Generator::W(1),
                                                                  Generator::W(2)};

/// Bijection between basis labels z^k L_lambda W_mu w and coordinates. Labels
/// seeded at construction keep their enumeration order; later labels are
/// appended on first use.
class Coordinates {
 public:
  explicit Coordinates(QuotientSpec spec, const std::vector<BasisLabel>& seed = {});

  std::size_t size() const { return labels_.size(); }
  const BasisLabel& label(std::size_t i) const { return labels_[i]; }
  /// Index of the label, assigned if new.
  std::size_t index(const BasisLabel& label);
  /// Coordinates of v; assigns indices to unseen labels.
  linalg::SparseVector encode(const ModuleVector& v);
  /// Coordinates of v if every label is already known.
  std::optional<linalg::SparseVector> encode_known(const ModuleVector& v) const;
  ModuleVector decode(const linalg::SparseVector& x) const;

 private:
  QuotientSpec spec_;
  std::vector<BasisLabel> labels_;
  std::map<BasisLabel, std::size_t, LabelOrder> index_;
};

/// Stacked operators (g - phi(g)), g in kWhittakerGenerators, restricted to
/// the window. Row indices enumerate (operator, output label) pairs; outputs
/// are never truncated, so the kernel is exact on the window.
struct LinearSystem {
  std::vector<BasisLabel> columns;
  std::vector<linalg::SparseVector> images;  // one per column, over row indices
  std::size_t row_count = 0;
};

/// Reference implementation: one column at a time.
LinearSystem assemble_system_serial(const WhittakerModule& module, const Truncation& trunc);
/// OpenMP over columns; produces exactly the serial result.
LinearSystem assemble_system(const WhittakerModule& module, const Truncation& trunc);

/// True iff g.v = phi(g) v for g in L_1, L_2, W_1, W_2. Throws
/// std::domain_error on the zero vector.
bool is_whittaker(const WhittakerModule& module, const ModuleVector& v);

/// Basis (reduced echelon form) of the Whittaker vectors supported in the
/// window.
std::vector<ModuleVector> whittaker_nullspace(const WhittakerModule& module, const Truncation& trunc);

/// Lexicographic measure (-mindeg, ell).
struct DescentMeasure {
  int mindeg = 0;
  std::size_t ell = 0;
  /// True iff this measure is strictly below `other`.
  bool below(const DescentMeasure& other) const;
};

DescentMeasure measure(const ModuleVector& v);

struct DescentStep {
  Generator op;
  /// Minimal L-part (m0) when reducing the L-part, minimal W-part (n0) when
  /// reducing the W-part.
  int extremal_part = 0;
  bool reduces_l_part = true;
  DescentMeasure before;
  DescentMeasure after;
};

struct DescentTrace {
  std::vector<DescentStep> steps;
};

struct WhittakerWitness {
  ModuleVector terminal;
  CentralPoly q;  // terminal = q(z) w
};

struct DescentResult {
  WhittakerWitness witness;
  DescentTrace trace;
};

/// Operator the descent applies next, or nullopt once v is a multiple of w.
struct DescentChoice {
  Generator op;
  int extremal_part = 0;
  bool reduces_l_part = true;
};
std::optional<DescentChoice> descent_choice(const ModuleVector& v);

/// Drives v to a nonzero multiple q(z) w by repeatedly applying x - phi(x).
/// Throws std::domain_error for zero input and DescentError if a step
/// vanishes or fails to lower the measure.
DescentResult descend(const WhittakerModule& module, const ModuleVector& v);

/// Monic q with q(z) w in U(W) v (universal module only).
CentralPoly extract_whittaker_generator(const WhittakerModule& module, const ModuleVector& v);

/// u . w == 0 in the module.
bool ann_contains(const WhittakerModule& module, const UEAElement& u);

}  // namespace w22
