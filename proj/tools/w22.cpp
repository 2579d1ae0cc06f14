// Command-line front end for the W(2,2) engine.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "w22/parse.hpp"
#include "w22/report.hpp"

namespace {

using namespace w22;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

// Bad user input: reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string phi = "1,1,1,1";
  std::string quotient = "universal";
  std::string trunc;
  std::string format = "text";
  std::uint64_t seed = 7;
  std::string vector = "w";
  std::string expression;
  std::string first, second;
  std::string suite = "all";
  std::string probe = "0";
};

struct RunConfig {
  WhittakerType phi;
  QuotientSpec spec;
  Truncation trunc;
  bool json = false;
  std::uint64_t seed = 7;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, sep);) out.push_back(item);
  return out;
}

WhittakerType parse_phi(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw UsageError("--phi needs four values phi(L1),phi(L2),phi(W1),phi(W2)");
  return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]), parse_rational(parts[3])};
}

Truncation parse_trunc(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw UsageError("--trunc needs three bounds N,H,K");
  int b[3];
  for (int i = 0; i < 3; ++i) {
    std::size_t used = 0;
    try {
      b[i] = std::stoi(parts[static_cast<std::size_t>(i)], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != parts[static_cast<std::size_t>(i)].size() || b[i] < 0) {
      throw UsageError("--trunc bounds must be non-negative integers");
    }
  }
  return {b[0], b[1], b[2]};
}

std::string read_source(const std::string& text) {
  if (text != "-") return text;
  return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

ModuleVector parse_vector(const std::string& text, const WhittakerModule& module) {
  const Expr e = parse(read_source(text));
  if (e.kind != ExprKind::Vector) throw UsageError("--vector must be a vector expression ending in w");
  return std::get<ModuleVector>(eval(e, module));
}

UEAElement parse_element(const std::string& text) {
  const Expr e = parse(read_source(text));
  if (e.kind != ExprKind::Algebra) throw UsageError("expected an algebra expression without w");
  return eval_algebra(e);
}

void emit(const RunConfig& cfg, const std::string& command, const Json& result, const std::string& text) {
  if (!cfg.json) {
    std::cout << text;
    return;
  }
  Json doc = {{"command", command},
              {"config",
               {{"phi", to_string(cfg.phi)},
                {"quotient", to_string(cfg.spec)},
                {"trunc", to_json(cfg.trunc)},
                {"seed", cfg.seed}}},
              {"result", result}};
  std::cout << doc.dump(2) << "\n";
}

std::string basis_text(const std::vector<ModuleVector>& basis) {
  std::string out = "dimension " + std::to_string(basis.size()) + "\n";
  for (const auto& v : basis) out += "  " + to_string(v) + "\n";
  return out;
}

std::string descent_text(const DescentResult& r) {
  std::string out = "terminal: " + to_string(r.witness.terminal) + "\n";
  out += "q: " + to_string(r.witness.q) + "\n";
  out += "steps: " + std::to_string(r.trace.steps.size()) + "\n";
  std::size_t i = 0;
  for (const auto& s : r.trace.steps) {
    out += "  " + std::to_string(++i) + ". " + to_string(s.op) + (s.reduces_l_part ? "  L-part, m0 = " : "  W-part, n0 = ") +
           std::to_string(s.extremal_part) + "  (" + std::to_string(s.before.mindeg) + ", " +
           std::to_string(s.before.ell) + ") -> (" + std::to_string(s.after.mindeg) + ", " +
           std::to_string(s.after.ell) + ")\n";
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int run(const std::string& command, const Options& o, const RunConfig& cfg) {
  const WhittakerModule module(cfg.phi, cfg.spec);
  if (command == "bracket") {
    const GeneratorCombination b = bracket(parse_generator(o.first), parse_generator(o.second));
    emit(cfg, command, to_json(b), to_string(b) + "\n");
  } else if (command == "normalize") {
    const UEAElement x = parse_element(o.expression);
    emit(cfg, command, to_json(x), to_string(x) + "\n");
  } else if (command == "act") {
    const UEAElement u = parse_element(o.expression);
    const ModuleVector v = parse_vector(o.vector, module);
    const ActResult r = module.act(u, v, cfg.trunc);
    std::string text = to_string(r.vector) + "\n";
    if (r.report.truncated) text += "dropped " + std::to_string(r.report.dropped) + " terms outside the window\n";
    emit(cfg, command, {{"vector", to_json(r.vector)}, {"report", to_json(r.report)}}, text);
  } else if (command == "whittaker-solve") {
    const auto basis = whittaker_nullspace(module, cfg.trunc);
    emit(cfg, command, basis_json(basis), basis_text(basis));
  } else if (command == "descend") {
    const ModuleVector v = parse_vector(o.vector, module);
    const DescentResult r = descend(module, v);
    emit(cfg, command, to_json(r), descent_text(r));
  } else if (command == "extract") {
    if (!cfg.spec.is_universal()) throw UsageError("extract works in the universal module");
    const ModuleVector v = parse_vector(o.vector, module);
    const DescentResult r = descend(module, v);
    const CentralPoly q = r.witness.q.monic();
    emit(cfg, command, {{"q", to_string(q)}, {"descent", to_json(r)}}, "q(z) = " + to_string(q) + "\n");
  } else if (command == "ann-check") {
    const UEAElement u = parse_element(o.expression);
    const bool in = ann_contains(module, u);
    emit(cfg, command, {{"element", to_json(u)}, {"annihilates", in}},
         std::string(in ? "annihilates" : "does not annihilate") + " w\n");
  } else if (command == "comp-series") {
    if (cfg.spec.roots().size() != 1) throw UsageError("comp-series needs --quotient \"(z-xi)^a\"");
    const Root root = cfg.spec.roots().front();
    const auto layers = composition_series(cfg.phi, root.xi, root.multiplicity, cfg.trunc);
    std::string text;
    for (const auto& l : layers) {
      text += "V" + std::to_string(l.index) + ": " + to_string(l.cyclic) + "  whittaker " + yes_no(l.whittaker) +
              ", proper " + yes_no(l.proper) + ", simple quotient " + yes_no(l.simple_quotient) + "\n";
    }
    emit(cfg, command, {{"xi", to_string(root.xi)}, {"multiplicity", root.multiplicity}, {"layers", to_json(layers)}},
         text);
  } else if (command == "decompose") {
    if (cfg.spec.is_universal()) throw UsageError("decompose needs --quotient");
    const Decomposition d = decompose(cfg.spec);
    std::string text = "bezout identity: " + yes_no(d.bezout_identity) + "\n";
    for (const auto& c : d.components) {
      text += "component " + std::to_string(c.index + 1) + ": xi = " + to_string(c.xi) +
              ", length " + std::to_string(c.multiplicity) + ", p = " + to_string(c.cofactor_base) +
              ", q = " + to_string(c.cofactor) + ", w_j = " + to_string(c.cyclic) + "\n";
    }
    emit(cfg, command, to_json(d), text);
  } else if (command == "closure") {
    const ModuleVector v = parse_vector(o.vector, module);
    const ClosureResult c = submodule_closure(module, v, cfg.trunc);
    emit(cfg, command, to_json(c),
         "rank " + std::to_string(c.rank()) + " of " + std::to_string(basis_enumerate(cfg.spec, cfg.trunc).size()) +
             ", complete " + yes_no(c.complete()) + " (" + std::to_string(c.skipped()) +
             " products left the window)\n");
  } else if (command == "simplicity") {
    const SimplicityVerdict v = simplicity_check(cfg.phi, cfg.spec, cfg.trunc, parse_rational(o.probe));
    std::string text = v.simple_at_window ? "simple at window" : "not simple";
    text += " (" + std::to_string(v.descents) + " descents)\n";
    if (v.witness) {
      text += "witness: " + to_string(v.witness->generator) + ", q = " + to_string(v.witness->q) +
              ", closure rank " + std::to_string(v.witness->closure.rank()) + ", proper " +
              yes_no(v.witness->proper) + "\n";
    }
    emit(cfg, command, to_json(v), text);
  } else if (command == "verify") {
    const auto results = run_suite(o.suite, VerifyConfig{cfg.trunc, cfg.seed});
    bool all = true;
    Json checks = Json::array();
    std::string text;
    for (const auto& r : results) {
      all = all && r.passed;
      checks.push_back(to_json(r));
      text += std::string(r.passed ? "PASS  " : "FAIL  ") + r.name + "  " + r.detail + "\n";
    }
    emit(cfg, command, {{"passed", all}, {"checks", checks}}, text);
    return all ? kOk : kFailure;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the W(2,2) algebra and its Whittaker modules"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  if (const char* env = std::getenv("W22_TRUNC")) o.trunc = env;
  if (o.trunc.empty()) o.trunc = "4,3,2";
  app.add_option("--phi", o.phi, "phi(L1),phi(L2),phi(W1),phi(W2)")->capture_default_str();
  app.add_option("--quotient", o.quotient, "\"universal\" or a product like \"(z-1)^2*(z+3)\"")
      ->capture_default_str();
  app.add_option("--trunc", o.trunc, "window N,H,K (default from W22_TRUNC)")->capture_default_str();
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--seed", o.seed, "seed for sampled checks")->capture_default_str();

  auto* sub = app.add_subcommand("bracket", "Lie bracket of two generators");
  sub->add_option("left", o.first, "generator, e.g. L[2]")->required();
  sub->add_option("right", o.second, "generator, e.g. W[-2]")->required();
  sub = app.add_subcommand("normalize", "PBW normal form of an algebra expression");
  sub->add_option("expression", o.expression)->required();
  sub = app.add_subcommand("act", "act by an algebra expression on a vector, within the window");
  sub->add_option("expression", o.expression)->required();
  sub->add_option("--vector", o.vector, "vector expression, '-' for stdin")->capture_default_str();
  app.add_subcommand("whittaker-solve", "basis of the Whittaker vectors in the window");
  sub = app.add_subcommand("descend", "drive a vector to a Whittaker vector");
  sub->add_option("--vector", o.vector, "vector expression, '-' for stdin")->required();
  sub = app.add_subcommand("extract", "monic q(z) with q(z) w in the submodule generated by a vector");
  sub->add_option("--vector", o.vector, "vector expression, '-' for stdin")->required();
  sub = app.add_subcommand("ann-check", "whether an algebra expression annihilates w");
  sub->add_option("expression", o.expression)->required();
  app.add_subcommand("comp-series", "composition series of M/(z-xi)^a M");
  app.add_subcommand("decompose", "direct-sum decomposition along the factors of p(z)");
  sub = app.add_subcommand("closure", "submodule generated by a vector, within the window");
  sub->add_option("--vector", o.vector, "vector expression, '-' for stdin")->required();
  sub = app.add_subcommand("simplicity", "simplicity certificate or a proper submodule");
  sub->add_option("--probe", o.probe, "xi used for (z - xi) M in the universal module")->capture_default_str();
  sub = app.add_subcommand("verify", "run the self-checks");
  sub->add_option("--suite", o.suite, "\"all\" or a check name")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  std::optional<RunConfig> cfg;
  try {
    cfg = RunConfig{parse_phi(o.phi), parse_quotient(o.quotient), parse_trunc(o.trunc), o.format == "json", o.seed};
    if (command == "verify" && o.suite != "all") check_summary(o.suite);
  } catch (const std::exception& e) {
    std::cerr << "w22: " << e.what() << "\n";
    return kUsage;
  }
  try {
    return run(command, o, *cfg);
  } catch (const UsageError& e) {
    std::cerr << "w22: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "w22: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "w22: " << e.what() << "\n";
    return kFailure;
  }
}
