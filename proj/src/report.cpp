#include "w22/report.hpp"

namespace w22 {

namespace {

Json parts_json(const Partition& p) { return Json(std::vector<int>(p.parts().begin(), p.parts().end())); }

}  // namespace

Json to_json(const GeneratorCombination& x) {
  Json terms = Json::array();
  for (const auto& [g, c] : x.terms()) terms.push_back({{"generator", to_string(g)}, {"coefficient", to_string(c)}});
  return {{"text", to_string(x)}, {"terms", terms}};
}

Json to_json(const UEAElement& x) {
  Json terms = Json::array();
  for (const auto& [m, c] : x.terms()) {
    terms.push_back({{"monomial", m.empty() ? "1" : to_string(m)},
                     {"degree", degree(m)},
                     {"height", m.height()},
                     {"coefficient", to_string(c)}});
  }
  return {{"text", to_string(x)}, {"terms", terms}};
}

Json to_json(const ModuleVector& v) {
  Json terms = Json::array();
  for (const auto& [k, c] : v.terms()) {
    terms.push_back({{"lambda", parts_json(k.lambda)}, {"mu", parts_json(k.mu)}, {"coefficient", to_string(c)}});
  }
  return {{"spec", to_string(v.spec())}, {"text", to_string(v)}, {"terms", terms}};
}

Json to_json(const Truncation& t) {
  return {{"degree_bound", t.degree_bound}, {"length_bound", t.length_bound}, {"z_degree_bound", t.z_degree_bound}};
}

Json to_json(const TruncationReport& r) { return {{"truncated", r.truncated}, {"dropped", r.dropped}}; }

Json to_json(const DescentMeasure& m) { return {{"mindeg", m.mindeg}, {"ell", m.ell}}; }

Json to_json(const DescentResult& r) {
  Json steps = Json::array();
  for (const auto& s : r.trace.steps) {
    steps.push_back({{"operator", to_string(s.op)},
                     {"reduces", s.reduces_l_part ? "L" : "W"},
                     {"extremal_part", s.extremal_part},
                     {"before", to_json(s.before)},
                     {"after", to_json(s.after)}});
  }
  return {{"steps", steps}, {"terminal", to_json(r.witness.terminal)}, {"q", to_string(r.witness.q)}};
}

Json to_json(const std::vector<SeriesLayer>& layers) {
  Json out = Json::array();
  for (const auto& l : layers) {
    out.push_back({{"index", l.index},
                   {"cyclic", to_json(l.cyclic)},
                   {"whittaker", l.whittaker},
                   {"proper", l.proper},
                   {"simple_quotient", l.simple_quotient}});
  }
  return out;
}

Json to_json(const Decomposition& d) {
  Json comps = Json::array();
  for (const auto& c : d.components) {
    comps.push_back({{"index", c.index},
                     {"xi", to_string(c.xi)},
                     {"multiplicity", c.multiplicity},
                     {"cofactor_base", to_string(c.cofactor_base)},
                     {"cofactor", to_string(c.cofactor)},
                     {"projector", to_string(c.projector)},
                     {"cyclic", to_json(c.cyclic)}});
  }
  return {{"spec", to_string(d.spec)}, {"bezout_identity", d.bezout_identity}, {"components", comps}};
}

Json to_json(const ClosureResult& c) {
  Json span = Json::array();
  for (const auto& v : c.span()) span.push_back(to_json(v));
  return {{"window", to_json(c.window())},
          {"rank", c.rank()},
          {"complete", c.complete()},
          {"skipped", c.skipped()},
          {"sweeps", c.sweeps()},
          {"span", span}};
}

Json to_json(const SimplicityVerdict& v) {
  Json witness = nullptr;
  if (v.witness) {
    witness = {{"generator", to_json(v.witness->generator)},
               {"q", to_string(v.witness->q)},
               {"proper", v.witness->proper},
               {"closure_rank", v.witness->closure.rank()},
               {"closure_complete", v.witness->closure.complete()}};
  }
  return {{"simple_at_window", v.simple_at_window}, {"descents", v.descents}, {"witness", witness}};
}

Json to_json(const CheckResult& r) {
  return {{"name", r.name}, {"summary", r.summary}, {"passed", r.passed}, {"detail", r.detail}};
}

Json basis_json(const std::vector<ModuleVector>& basis) {
  Json vs = Json::array();
  for (const auto& v : basis) vs.push_back(to_json(v));
  return {{"dimension", basis.size()}, {"basis", vs}};
}

}  // namespace w22
