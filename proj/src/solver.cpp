#include "w22/solver.hpp"

#include <algorithm>
#include <exception>
#include <tuple>

namespace w22 {

using linalg::SparseVector;

Coordinates::Coordinates(QuotientSpec spec, const std::vector<BasisLabel>& seed) : spec_(std::move(spec)) {
  for (const auto& l : seed) index(l);
}

std::size_t Coordinates::index(const BasisLabel& label) {
  auto [it, inserted] = index_.try_emplace(label, labels_.size());
  if (inserted) labels_.push_back(label);
  return it->second;
}

SparseVector Coordinates::encode(const ModuleVector& v) {
  SparseVector out;
  for (const auto& [key, c] : v.terms()) {
    const auto& coeffs = c.coefficients();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (!is_zero(coeffs[k])) out.emplace_back(index(BasisLabel{k, key}), coeffs[k]);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::optional<SparseVector> Coordinates::encode_known(const ModuleVector& v) const {
  SparseVector out;
  for (const auto& [key, c] : v.terms()) {
    const auto& coeffs = c.coefficients();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (is_zero(coeffs[k])) continue;
      auto it = index_.find(BasisLabel{k, key});
      if (it == index_.end()) return std::nullopt;
      out.emplace_back(it->second, coeffs[k]);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

ModuleVector Coordinates::decode(const SparseVector& x) const {
  ModuleVector v(spec_);
  for (const auto& [i, c] : x) {
    const BasisLabel& l = labels_.at(i);
    v.add(l.key, CentralPoly::monomial(c, l.z_power));
  }
  return v;
}

namespace {

using ColumnImages = std::array<ModuleVector, kWhittakerGenerators.size()>;

ColumnImages column_images(const WhittakerModule& module, const BasisLabel& label) {
  const ModuleVector b = module.basis_vector(label);
  return {module.act_shifted(kWhittakerGenerators[0], b), module.act_shifted(kWhittakerGenerators[1], b),
          module.act_shifted(kWhittakerGenerators[2], b), module.act_shifted(kWhittakerGenerators[3], b)};
}

// Sequential, deterministic indexing of output rows: rows run over (output
// label, operator) with labels in descending basis order. Pivoting on long,
// low-degree outputs first keeps elimination fill-in small.
LinearSystem index_rows(const WhittakerModule& module, std::vector<BasisLabel> columns,
                        const std::vector<ColumnImages>& images) {
  Coordinates outputs(module.spec());
  std::vector<std::array<SparseVector, kWhittakerGenerators.size()>> encoded(images.size());
  for (std::size_t j = 0; j < images.size(); ++j) {
    for (std::size_t op = 0; op < kWhittakerGenerators.size(); ++op) encoded[j][op] = outputs.encode(images[j][op]);
  }
  // Re-rank outputs in label order so row numbering does not depend on
  // column visiting order.
  std::vector<std::size_t> order(outputs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  LabelOrder less;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return less(outputs.label(a), outputs.label(b)); });
  std::vector<std::size_t> rank(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = order.size() - 1 - r;

  LinearSystem sys;
  sys.columns = std::move(columns);
  sys.row_count = outputs.size() * kWhittakerGenerators.size();
  sys.images.resize(images.size());
  for (std::size_t j = 0; j < images.size(); ++j) {
    SparseVector col;
    for (std::size_t op = 0; op < kWhittakerGenerators.size(); ++op) {
      for (const auto& [i, c] : encoded[j][op]) col.emplace_back(rank[i] * kWhittakerGenerators.size() + op, c);
    }
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    sys.images[j] = std::move(col);
  }
  return sys;
}

}  // namespace

LinearSystem assemble_system_serial(const WhittakerModule& module, const Truncation& trunc) {
  std::vector<BasisLabel> columns = basis_enumerate(module.spec(), trunc);
  std::vector<ColumnImages> images;
  images.reserve(columns.size());
  for (const auto& label : columns) images.push_back(column_images(module, label));
  return index_rows(module, std::move(columns), images);
}

LinearSystem assemble_system(const WhittakerModule& module, const Truncation& trunc) {
  std::vector<BasisLabel> columns = basis_enumerate(module.spec(), trunc);
  const auto n = static_cast<std::ptrdiff_t>(columns.size());
  std::vector<ColumnImages> images(columns.size(), ColumnImages{module.zero(), module.zero(), module.zero(),
                                                                module.zero()});
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    try {
      images[static_cast<std::size_t>(j)] = column_images(module, columns[static_cast<std::size_t>(j)]);
    } catch (...) {
#pragma omp critical(w22_assembly_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return index_rows(module, std::move(columns), images);
}

bool is_whittaker(const WhittakerModule& module, const ModuleVector& v) {
  if (v.is_zero()) throw std::domain_error("is_whittaker needs a nonzero vector");
  return std::all_of(kWhittakerGenerators.begin(), kWhittakerGenerators.end(),
                     [&](const Generator& g) { return module.act_shifted(g, v).is_zero(); });
}

std::vector<ModuleVector> whittaker_nullspace(const WhittakerModule& module, const Truncation& trunc) {
  const LinearSystem sys = assemble_system(module, trunc);
  Coordinates coords(module.spec(), sys.columns);
  std::vector<ModuleVector> out;
  for (const auto& row : linalg::nullspace(sys.images)) out.push_back(coords.decode(row));
  return out;
}

bool DescentMeasure::below(const DescentMeasure& other) const {
  return std::make_tuple(-mindeg, ell) < std::make_tuple(-other.mindeg, other.ell);
}

DescentMeasure measure(const ModuleVector& v) {
  const VectorDiagnostics d = vector_diagnostics(v);
  return {d.mindeg, d.ell};
}

std::optional<DescentChoice> descent_choice(const ModuleVector& v) {
  // L-part first: among keys of maximal L-length take the smallest first
  // part m0 and apply W_{2-m0}.
  std::size_t l = 0;
  for (const auto& [k, c] : v.terms()) l = std::max(l, k.lambda.length());
  if (l > 0) {
    int m0 = 0;
    bool found = false;
    for (const auto& [k, c] : v.terms()) {
      if (k.lambda.length() != l) continue;
      m0 = found ? std::min(m0, k.lambda.front()) : k.lambda.front();
      found = true;
    }
    return DescentChoice{Generator::W(2 - m0), m0, true};
  }
  // Only W-parts remain: smallest first part n0, apply L_{2-n0}.
  bool found = false;
  int n0 = 0;
  for (const auto& [k, c] : v.terms()) {
    if (k.mu.empty()) continue;
    n0 = found ? std::min(n0, k.mu.front()) : k.mu.front();
    found = true;
  }
  if (!found) return std::nullopt;
  return DescentChoice{Generator::L(2 - n0), n0, false};
}

DescentResult descend(const WhittakerModule& module, const ModuleVector& v) {
  if (v.is_zero()) throw std::domain_error("descent needs a nonzero vector");
  ModuleVector cur = v;
  DescentTrace trace;
  while (auto choice = descent_choice(cur)) {
    ModuleVector next = module.act_shifted(choice->op, cur);
    if (next.is_zero()) {
      throw DescentError("descent step " + to_string(choice->op) + " annihilated " + to_string(cur));
    }
    DescentStep step{choice->op, choice->extremal_part, choice->reduces_l_part, measure(cur), measure(next)};
    if (!step.after.below(step.before)) {
      throw DescentError("descent measure did not decrease at step " + to_string(choice->op));
    }
    trace.steps.push_back(step);
    cur = std::move(next);
  }
  CentralPoly q = cur.coefficient(ModuleKey{});
  return {{std::move(cur), std::move(q)}, std::move(trace)};
}

CentralPoly extract_whittaker_generator(const WhittakerModule& module, const ModuleVector& v) {
  if (!module.spec().is_universal()) throw std::invalid_argument("generator extraction works in the universal module");
  return descend(module, v).witness.q.monic();
}

bool ann_contains(const WhittakerModule& module, const UEAElement& u) {
  return module.act(u, module.cyclic_vector()).vector.is_zero();
}

}  // namespace w22
