#ifndef GALOIS_ENGINE_HPP
#define GALOIS_ENGINE_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "galois/invariants.hpp"
#include "galois/perm.hpp"
#include "galois/quotient.hpp"
#include "galois/roots.hpp"
#include "galois/unipoly.hpp"

namespace galois {

struct EngineConfig {
  unsigned precision_bits = 128;
  unsigned max_precision_bits = 1u << 15;
  int max_degree = 6;
  std::vector<uint64_t> dedekind_primes;  // empty: first good odd primes
  size_t min_dedekind_primes = 8;
  size_t invariant_budget = 20000;
  int separability_retries = 25;
};

/// One node of the ascending ideal chain: the current quotient and the
/// group currently known to be Max(I, alpha).
struct IdealChainNode {
  AlgebraPtr algebra;
  PermGroup supergroup;
  std::optional<MultiPoly> invariant_used;
  std::optional<UniPoly> factor_used;
};

struct ChainStep {
  long from_order = 0;
  long to_order = 0;
  std::string invariant;
  std::string resolvent;
  std::string chosen_factor;
  size_t dim_before = 0;
  size_t dim_after = 0;
};

struct OracleReport {
  std::vector<std::pair<uint64_t, std::vector<int>>> dedekind;
  std::vector<uint64_t> skipped_primes;
  bool disc_is_square = false;
  bool cycle_types_consistent = false;
  bool disc_consistent = false;
};

struct GaloisResult {
  UniPoly f;
  bool reducible = false;
  PermGroup group;
  std::optional<std::string> label;
  std::vector<IdealChainNode> chain;
  std::vector<ChainStep> steps;
  AlgebraPtr relations_ideal;
  TriangularIdeal triangular;
  OracleReport oracles;
  bool purity_dim_eq_stab = false;
  bool purity_initdeg_product = false;
  bool purity_group_eq_injector = false;
};

struct NoDescent {};

/// One descent attempt along the edge (L = node.supergroup, H-class =
/// `edge`): iterates primitive invariants until the resolvent is separable,
/// then descends through the first simple linear factor, selecting the
/// coset (hence the conjugate of `edge` containing the Galois group)
/// numerically against the canonical root order.
std::variant<IdealChainNode, NoDescent> descend_step(
    const IdealChainNode& node, const PermGroup& edge, RootVector& roots,
    const EngineConfig& config, ChainStep* step_out = nullptr);

/// Cycle types of Frobenius: degree patterns of f mod p over good primes.
OracleReport dedekind_cycle_types(const UniPoly& f, const EngineConfig& config);

/// Subgroup classes G of L whose orbit partition on L/H matches the
/// observed resolvent factor degrees.
std::vector<PermGroup> identify_from_partitions(const std::vector<int>& observed,
                                                const PermGroup& l,
                                                const PermGroup& h);

/// The full pipeline: Cauchy modules, greedy lattice descent, the ideal of
/// relations, the group, triangular generators, and the oracle block.
GaloisResult galois_group(const UniPoly& f, const EngineConfig& config = {});

/// triangularize(M) plus the degree identities deg_{x_i} f_i =
/// #H_{(i-1)}/#H_{(i)} for the point-stabilizer chain of the group.
TriangularIdeal fundamental_modules(const GaloisResult& result);

}  // namespace galois

#endif
