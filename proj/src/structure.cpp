#include "w22/structure.hpp"

#include <exception>
#include <stdexcept>

namespace w22 {

namespace {

// (z - xi)-adic valuation of a nonzero polynomial.
std::size_t valuation_at(const CentralPoly& q, const Rational& xi) {
  const CentralPoly factor = CentralPoly::linear(xi);
  std::size_t v = 0;
  CentralPoly cur = q;
  while (true) {
    auto [quo, rem] = divmod(cur, factor);
    if (!rem.is_zero()) return v;
    cur = std::move(quo);
    ++v;
  }
}

// Every window key of M / (z - xi)^a M, multiplied by (z - xi)^i, descends to
// (z - xi)^i u(z) w with u(xi) != 0.
bool layer_descends_to_cyclic(const WhittakerModule& module, const Rational& xi, std::size_t i,
                              const Truncation& trunc) {
  const CentralPoly shift = CentralPoly::linear(xi).pow(i);
  for (const auto& key : window_keys(trunc)) {
    const ModuleVector v = ModuleVector::basis_vector(module.spec(), key, shift);
    const DescentResult r = descend(module, v);
    if (r.witness.q.is_zero() || valuation_at(r.witness.q, xi) != i) return false;
  }
  return true;
}

}  // namespace

std::vector<SeriesLayer> composition_series(const WhittakerType& phi, const Rational& xi, int a,
                                            const Truncation& trunc) {
  if (a < 1) throw std::invalid_argument("composition series needs multiplicity a >= 1");
  const WhittakerModule module(phi, QuotientSpec::quotient(xi, a));
  const CentralPoly factor = CentralPoly::linear(xi);
  std::vector<SeriesLayer> layers;
  for (int i = 0; i < a; ++i) {
    SeriesLayer layer;
    layer.index = static_cast<std::size_t>(i);
    layer.cyclic = module.cyclic_vector().scaled(factor.pow(layer.index));
    layer.whittaker = !layer.cyclic.is_zero() && is_whittaker(module, layer.cyclic);
    const ModuleVector next = layer.cyclic.scaled(factor);
    if (layer.cyclic.is_zero()) {
      layer.proper = false;
    } else if (next.is_zero()) {
      layer.proper = true;
    } else {
      layer.proper = !submodule_closure(module, next, trunc).contains(layer.cyclic);
    }
    layer.simple_quotient = layer_descends_to_cyclic(module, xi, layer.index, trunc);
    layers.push_back(std::move(layer));
  }
  return layers;
}

Decomposition decompose(const QuotientSpec& spec) {
  if (spec.is_universal()) throw std::invalid_argument("decomposition needs a quotient spec");
  Decomposition d{spec, {}, false};
  const auto& roots = spec.roots();
  CentralPoly total;
  for (std::size_t j = 0; j < roots.size(); ++j) {
    DecompositionComponent c;
    c.index = j;
    c.xi = roots[j].xi;
    c.multiplicity = roots[j].multiplicity;
    c.cofactor_base = CentralPoly(1);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (i != j) c.cofactor_base *= CentralPoly::linear(roots[i].xi).pow(static_cast<std::size_t>(roots[i].multiplicity));
    }
    const CentralPoly local = CentralPoly::linear(c.xi).pow(static_cast<std::size_t>(c.multiplicity));
    c.cofactor = inverse_mod(c.cofactor_base, local);
    c.projector = spec.reduce(c.cofactor * c.cofactor_base);
    c.cyclic = ModuleVector::cyclic(spec).scaled(c.cofactor_base);
    total += c.cofactor * c.cofactor_base;
    d.components.push_back(std::move(c));
  }
  d.bezout_identity = total == CentralPoly(1);
  return d;
}

ModuleVector project(const ModuleVector& v, const Decomposition& d, std::size_t component) {
  if (!(v.spec() == d.spec)) throw std::invalid_argument("vector does not live in the decomposed module");
  return v.scaled(d.components.at(component).projector);
}

bool shift_invertible_on_component(const Decomposition& d, std::size_t shift_root, std::size_t component,
                                   const Truncation& trunc) {
  const CentralPoly shift = CentralPoly::linear(d.components.at(shift_root).xi);
  const CentralPoly& projector = d.components.at(component).projector;
  const std::size_t dim = d.spec.residue_dimension();
  // z acts key by key, so the check splits over keys.
  for (const auto& key : window_keys(trunc)) {
    Coordinates coords(d.spec);
    linalg::EchelonBasis domain;
    linalg::EchelonBasis image;
    std::vector<linalg::SparseVector> images;
    for (std::size_t k = 0; k < dim; ++k) {
      const CentralPoly e = d.spec.reduce(projector * CentralPoly::monomial(Rational(1), k));
      const ModuleVector v = ModuleVector::basis_vector(d.spec, key, e);
      domain.insert(coords.encode(v));
      images.push_back(coords.encode(v.scaled(shift)));
    }
    for (auto& x : images) {
      if (!domain.contains(x)) return false;
      image.insert(std::move(x));
    }
    if (image.rank() != domain.rank()) return false;
  }
  return true;
}

ClosureResult::ClosureResult(QuotientSpec spec, const Truncation& trunc)
    : spec_(spec), trunc_(trunc), coords_(spec, basis_enumerate(spec, trunc)) {}

bool ClosureResult::contains(const ModuleVector& v) const {
  auto x = coords_.encode_known(v);
  return x && basis_.contains(*x);
}

std::vector<Generator> closure_generators(const Truncation& trunc) {
  std::vector<Generator> out;
  const int bound = trunc.degree_bound + 2;
  for (int n = -bound; n <= bound; ++n) out.push_back(Generator::L(n));
  for (int n = -bound; n <= bound; ++n) out.push_back(Generator::W(n));
  out.push_back(Generator::z());
  return out;
}

class ClosureBuilder {
 public:
  ClosureBuilder(const WhittakerModule& module, const Truncation& trunc)
      : module_(module), result_(module.spec(), trunc), generators_(closure_generators(trunc)) {}

  ClosureResult run(const ModuleVector& v, bool parallel) {
    if (v.is_zero()) throw std::domain_error("closure of the zero vector");
    std::vector<ModuleVector> frontier;
    if (ModuleVector r = offer(v); !r.is_zero()) {
      frontier.push_back(std::move(r));
    } else {
      throw std::invalid_argument("closure seed lies outside the window");
    }
    while (!frontier.empty()) {
      ++result_.sweeps_;
      const std::vector<ModuleVector> products = parallel ? sweep_parallel(frontier) : sweep_serial(frontier);
      std::vector<ModuleVector> next;
      for (const auto& p : products) {
        if (ModuleVector r = offer(p); !r.is_zero()) next.push_back(std::move(r));
      }
      frontier = std::move(next);
    }
    result_.basis_.make_reduced();
    for (const auto& row : result_.basis_.rows()) result_.span_.push_back(result_.coords_.decode(row));
    return std::move(result_);
  }

 private:
  // Inserts v into the span; returns the new independent residual, or zero.
  ModuleVector offer(const ModuleVector& v) {
    if (v.is_zero()) return module_.zero();
    auto x = result_.coords_.encode_known(v);
    if (!x) {
      ++result_.skipped_;
      return module_.zero();
    }
    linalg::SparseVector r = result_.basis_.reduce(std::move(*x));
    if (r.empty()) return module_.zero();
    result_.basis_.insert_reduced(r);
    return result_.coords_.decode(r);
  }

  ModuleVector product(const ModuleVector& f, const Generator& g) const {
    if (g.is_central()) return f.scaled(CentralPoly::z());
    return module_.act(g, f);
  }

  std::vector<ModuleVector> sweep_serial(const std::vector<ModuleVector>& frontier) const {
    std::vector<ModuleVector> out;
    out.reserve(frontier.size() * generators_.size());
    for (const auto& f : frontier) {
      for (const auto& g : generators_) out.push_back(product(f, g));
    }
    return out;
  }

  std::vector<ModuleVector> sweep_parallel(const std::vector<ModuleVector>& frontier) const {
    const std::size_t per = generators_.size();
    const auto n = static_cast<std::ptrdiff_t>(frontier.size() * per);
    std::vector<ModuleVector> out(frontier.size() * per, module_.zero());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t t = 0; t < n; ++t) {
      const auto u = static_cast<std::size_t>(t);
      try {
        out[u] = product(frontier[u / per], generators_[u % per]);
      } catch (...) {
#pragma omp critical(w22_closure_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
  }

  const WhittakerModule& module_;
  ClosureResult result_;
  std::vector<Generator> generators_;
};

ClosureResult submodule_closure(const WhittakerModule& module, const ModuleVector& v, const Truncation& trunc) {
  return ClosureBuilder(module, trunc).run(v, true);
}

ClosureResult submodule_closure_serial(const WhittakerModule& module, const ModuleVector& v,
                                       const Truncation& trunc) {
  return ClosureBuilder(module, trunc).run(v, false);
}

namespace {

// q w generates the whole module iff q is a unit of S(z) / (p).
bool is_unit(const QuotientSpec& spec, const CentralPoly& q) {
  if (q.is_zero()) return false;
  if (spec.is_universal()) return q.is_constant();
  return gcd(q, spec.modulus()) == CentralPoly(1);
}

std::vector<ModuleVector> structural_candidates(const QuotientSpec& spec, const Rational& probe) {
  std::vector<ModuleVector> out;
  if (spec.is_universal()) {
    out.push_back(ModuleVector::cyclic(spec).scaled(CentralPoly::linear(probe)));
  } else if (spec.residue_dimension() > 1) {
    for (const auto& root : spec.roots()) {
      out.push_back(ModuleVector::cyclic(spec).scaled(CentralPoly::linear(root.xi)));
    }
  }
  return out;
}

}  // namespace

SimplicityVerdict simplicity_check(const WhittakerType& phi, const QuotientSpec& spec, const Truncation& trunc,
                                   const Rational& probe) {
  const WhittakerModule module(phi, spec);
  SimplicityVerdict verdict;
  std::vector<ModuleVector> candidates = structural_candidates(spec, probe);
  for (const auto& label : basis_enumerate(spec, trunc)) candidates.push_back(module.basis_vector(label));
  for (const auto& v : candidates) {
    const DescentResult r = descend(module, v);
    ++verdict.descents;
    if (is_unit(spec, r.witness.q)) continue;
    ClosureResult closure = submodule_closure(module, v, trunc);
    const bool proper = !closure.contains(module.cyclic_vector());
    verdict.witness = SimplicityWitness{v, r.witness.q, std::move(closure), proper};
    return verdict;
  }
  verdict.simple_at_window = true;
  return verdict;
}

}  // namespace w22
