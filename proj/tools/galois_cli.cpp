// Command-line surface of the kernel: group / cauchy / resolvent /
// matrices / check. Exit codes: 0 success, 1 mathematical obstruction,
// 2 usage or parse error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "galois/engine.hpp"
#include "galois/factor.hpp"
#include "galois/lattice.hpp"
#include "galois/report.hpp"
#include "galois/symfun.hpp"

namespace {

using namespace galois;

struct GlobalOptions {
  bool json = false;
  unsigned precision = 128;
  int max_degree = 6;
  std::vector<uint64_t> primes;
};

EngineConfig engine_config(const GlobalOptions& opt) {
  EngineConfig cfg;
  cfg.precision_bits = opt.precision;
  cfg.max_degree = opt.max_degree;
  cfg.dedekind_primes = opt.primes;
  return cfg;
}

void emit(const Json& j, bool as_json, const std::string& plain) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << plain;
}

int run_group(const std::string& poly_text, const GlobalOptions& opt) {
  UniPoly f = parse_unipoly(poly_text);
  GaloisResult result = galois_group(f, engine_config(opt));
  if (opt.json) {
    std::cout << json_result(result).dump(2) << "\n";
    return 0;
  }
  std::cout << "polynomial: " << result.f.to_string() << "\n";
  std::cout << "degree: " << result.f.degree() << "\n";
  if (result.reducible) std::cout << "note: f is reducible over Q\n";
  std::cout << "galois group: order " << result.group.order();
  if (result.label) std::cout << " (" << *result.label << ")";
  std::cout << "\ngenerators:";
  for (const Perm& g : result.group.generators()) std::cout << ' ' << g.to_string();
  std::cout << "\nchain:";
  std::cout << " dim " << result.chain.front().algebra->dimension();
  for (const ChainStep& s : result.steps) std::cout << " -> " << s.dim_after;
  std::cout << "\n";
  for (const ChainStep& s : result.steps)
    std::cout << "  descent [" << s.from_order << " -> " << s.to_order
              << "] via factor " << s.chosen_factor << " of R = " << s.resolvent
              << "\n";
  std::cout << "fundamental modules (init degrees";
  for (int d : result.triangular.init_degrees) std::cout << ' ' << d;
  std::cout << "):\n";
  for (size_t i = 0; i < result.triangular.gens.size(); ++i)
    std::cout << "  f" << (i + 1) << " = " << result.triangular.gens[i].to_string()
              << "\n";
  std::cout << "oracles: disc square " << (result.oracles.disc_is_square ? "yes" : "no")
            << ", dedekind types over " << result.oracles.dedekind.size()
            << " primes consistent "
            << (result.oracles.cycle_types_consistent ? "yes" : "no") << "\n";
  return 0;
}

int run_cauchy(const std::string& poly_text, const GlobalOptions& opt) {
  UniPoly f = parse_unipoly(poly_text);
  auto modules = cauchy_modules(f);
  if (opt.json) {
    Json j;
    j["polynomial"] = f.to_string();
    Json mods = Json::array();
    for (const MultiPoly& c : modules) mods.push_back(c.to_string());
    j["cauchy_modules"] = mods;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (size_t i = 0; i < modules.size(); ++i)
    std::cout << "C" << (i + 1) << " = " << modules[i].to_string() << "\n";
  return 0;
}

int run_resolvent(const std::string& poly_text, const std::string& invariant_text,
                  const std::string& group_text, const GlobalOptions& opt) {
  UniPoly f = parse_unipoly(poly_text);
  int n = f.degree();
  if (n < 1) throw MathError("resolvent: degree must be >= 1");
  MultiPoly theta = parse_multipoly(invariant_text, n);
  PermGroup l = group_text.empty() ? PermGroup::symmetric(n)
                                   : group_from_text(group_text, n);

  AlgebraPtr algebra;
  std::string note;
  if (l.order() == PermGroup::symmetric(n).order()) {
    algebra = QuotientAlgebra::symmetric_ideal(f);
    l = PermGroup::symmetric(n);
  } else {
    // find a pure chain node whose Max is conjugate to the requested group
    GaloisResult pipeline = galois_group(f, engine_config(opt));
    const IdealChainNode* found = nullptr;
    for (const IdealChainNode& node : pipeline.chain)
      if (node.supergroup.order() == l.order() &&
          are_conjugate(node.supergroup, l)) { found = &node; break; }
    if (!found)
      throw MathError("resolvent: the pipeline produced no pure ideal with "
                      "Max conjugate to the requested group");
    if (!found->supergroup.same_group(l)) {
      PermGroup sn = PermGroup::symmetric(n);
      for (const Perm& sigma : sn.elements()) {
        if (l.conjugated(sigma).same_group(found->supergroup)) {
          theta = theta.acted_by(sigma);
          note = "invariant transported by " + sigma.to_string() +
                 " onto the computed chain node";
          break;
        }
      }
    }
    l = found->supergroup;
    algebra = found->algebra;
  }

  PermGroup h = stabilizer_in(l, theta);
  InvariantSpec spec{theta, h, l, std::nullopt};
  Resolvent res = resolvent(spec, algebra);

  if (opt.json) {
    Json j;
    j["polynomial"] = f.to_string();
    j["invariant"] = theta.to_string();
    j["group_order"] = l.order();
    j["stabilizer_order"] = h.order();
    j["resolvent"] = res.resolvent.to_string();
    j["separable"] = res.separable;
    Json factors = Json::array();
    for (const auto& [factor, mult] : res.factors) {
      Json e;
      e["factor"] = factor.to_string();
      e["multiplicity"] = mult;
      factors.push_back(e);
    }
    j["factors"] = factors;
    if (!note.empty()) j["note"] = note;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (!note.empty()) std::cout << "note: " << note << "\n";
  std::cout << "R = " << res.resolvent.to_string() << "\n";
  std::cout << "separable: " << (res.separable ? "yes" : "no") << "\n";
  std::cout << "factors:\n";
  for (const auto& [factor, mult] : res.factors)
    std::cout << "  (" << factor.to_string() << ")^" << mult << "\n";
  return 0;
}

int run_matrices(int degree, const GlobalOptions& opt) {
  if (degree < 2 || degree > 5)
    throw MathError("matrices: degree must be between 2 and 5");
  PermGroup sn = PermGroup::symmetric(degree);
  std::vector<PermGroup> classes = subgroup_classes(degree);
  auto matrix = partition_matrix(sn, classes);
  if (opt.json) {
    Json j;
    j["degree"] = degree;
    Json cls = Json::array();
    for (const PermGroup& g : classes) {
      Json e;
      e["order"] = g.order();
      Json gens = Json::array();
      for (const Perm& p : g.generators()) gens.push_back(p.to_string());
      e["generators"] = gens;
      cls.push_back(e);
    }
    j["classes"] = cls;
    j["matrix"] = matrix;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "partition matrix of S" << degree << " over " << classes.size()
            << " subgroup classes (rows H, columns G)\n";
  for (size_t r = 0; r < matrix.size(); ++r) {
    std::cout << "H order " << classes[r].order() << ":";
    for (const auto& partition : matrix[r]) {
      std::cout << " [";
      for (size_t k = 0; k < partition.size(); ++k) {
        if (k) std::cout << ',';
        std::cout << partition[k];
      }
      std::cout << ']';
    }
    std::cout << "\n";
  }
  return 0;
}

int run_check(const std::string& poly_text, const GlobalOptions& opt) {
  UniPoly f = parse_unipoly(poly_text);
  EngineConfig cfg = engine_config(opt);
  OracleReport oracles = dedekind_cycle_types(f, cfg);
  auto factors = factor_rationals(f);

  Json j;
  j["polynomial"] = f.to_string();
  j["degree"] = f.degree();
  j["squarefree"] = is_squarefree(f);
  Json fs = Json::array();
  for (const auto& [factor, mult] : factors) {
    Json e;
    e["factor"] = factor.to_string();
    e["multiplicity"] = mult;
    fs.push_back(e);
  }
  j["rational_factors"] = fs;
  j["discriminant"] = to_string(discriminant(f));
  j["disc_is_square"] = oracles.disc_is_square;
  Json dedekind = Json::array();
  for (const auto& [p, degrees] : oracles.dedekind) {
    Json e;
    e["prime"] = p;
    e["degrees"] = degrees;
    dedekind.push_back(e);
  }
  j["dedekind"] = dedekind;
  j["skipped_primes"] = oracles.skipped_primes;

  if (opt.json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "polynomial: " << f.to_string() << "\n";
  std::cout << "squarefree: " << (is_squarefree(f) ? "yes" : "no") << "\n";
  std::cout << "rational factors:";
  for (const auto& [factor, mult] : factors)
    std::cout << " (" << factor.to_string() << ")^" << mult;
  std::cout << "\ndiscriminant: " << to_string(discriminant(f))
            << (oracles.disc_is_square ? " (square)" : " (not a square)") << "\n";
  for (const auto& [p, degrees] : oracles.dedekind) {
    std::cout << "mod " << p << ": degrees";
    for (int d : degrees) std::cout << ' ' << d;
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Galois group kernel: groups, Galois ideals, resolvents, "
               "Cauchy modules"};
  app.require_subcommand(1);

  GlobalOptions opt;
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_option("--precision", opt.precision, "working precision in bits")
      ->default_val(128);
  app.add_option("--max-degree", opt.max_degree, "largest accepted degree")
      ->default_val(6);
  app.add_option("--primes", opt.primes, "primes for the Dedekind oracle");

  std::string poly_text, invariant_text, group_text;
  int degree = 3;

  CLI::App* group_cmd = app.add_subcommand("group", "full Galois pipeline");
  group_cmd->add_option("polynomial", poly_text)->required();

  CLI::App* cauchy_cmd = app.add_subcommand("cauchy", "Cauchy modules of f");
  cauchy_cmd->add_option("polynomial", poly_text)->required();

  CLI::App* resolvent_cmd =
      app.add_subcommand("resolvent", "exact resolvent of an invariant");
  resolvent_cmd->add_option("polynomial", poly_text)->required();
  resolvent_cmd->add_option("--invariant", invariant_text)->required();
  resolvent_cmd->add_option("--group", group_text,
                            "relative group (label or generators); default S_n");

  CLI::App* matrices_cmd =
      app.add_subcommand("matrices", "partition matrix of S_n");
  matrices_cmd->add_option("--degree", degree)->required();

  CLI::App* check_cmd = app.add_subcommand("check", "oracle-only report");
  check_cmd->add_option("polynomial", poly_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (group_cmd->parsed()) return run_group(poly_text, opt);
    if (cauchy_cmd->parsed()) return run_cauchy(poly_text, opt);
    if (resolvent_cmd->parsed())
      return run_resolvent(poly_text, invariant_text, group_text, opt);
    if (matrices_cmd->parsed()) return run_matrices(degree, opt);
    if (check_cmd->parsed()) return run_check(poly_text, opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    std::cerr << "obstruction: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
