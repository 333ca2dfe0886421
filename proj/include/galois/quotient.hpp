#ifndef GALOIS_QUOTIENT_HPP
#define GALOIS_QUOTIENT_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galois/linalg.hpp"
#include "galois/multipoly.hpp"
#include "galois/perm.hpp"
#include "galois/roots.hpp"
#include "galois/unipoly.hpp"

namespace galois {

/// Triangular generating set {f_1..f_n}: f_i involves x_1..x_i only and is
/// monic of degree d_i in x_i.
struct TriangularIdeal {
  int nvars = 0;
  std::vector<MultiPoly> gens;
  std::vector<int> init_degrees;

  long dimension() const {
    long d = 1;
    for (int k : init_degrees) d *= k;
    return d;
  }
};

/// Checks the triangular shape and fills init_degrees.
TriangularIdeal make_triangular(std::vector<MultiPoly> gens);

class QuotientAlgebra;
using AlgebraPtr = std::shared_ptr<const QuotientAlgebra>;

/// k[x_1..x_n]/I for a zero-dimensional ideal I given by a triangular set
/// plus, along a chain, extra linear relations. The linear basis is always
/// a subset of the root staircase; normal forms, membership, extension and
/// re-triangularization are exact linear algebra over that basis.
class QuotientAlgebra : public std::enable_shared_from_this<QuotientAlgebra> {
 public:
  static AlgebraPtr from_triangular(TriangularIdeal t);

  /// Quotient by the symmetric-relations ideal of f: the Cauchy-module
  /// triangular set; dimension n!. Requires f squarefree.
  static AlgebraPtr symmetric_ideal(const UniPoly& f);

  int nvars() const { return nvars_; }
  size_t dimension() const { return basis_.size(); }
  const std::vector<Expo>& basis() const { return basis_; }
  const TriangularIdeal& root_triangular() const;
  AlgebraPtr parent() const { return parent_; }
  const std::vector<MultiPoly>& added_relations() const { return relations_; }

  /// All ideal generators through the provenance chain: the root triangular
  /// set plus every adjoined relation.
  std::vector<MultiPoly> ideal_generators() const;

  /// Coordinates of p's normal form over basis().
  RatVec coords(const MultiPoly& p) const;
  MultiPoly normal_form(const MultiPoly& p) const;
  bool member(const MultiPoly& p) const;

  /// Quotient by the image ideal of `relations`; relations that are already
  /// members are ignored; a zero-dimensional collapse is an error (an
  /// adjoined polynomial was not a factor value).
  AlgebraPtr extended(const std::vector<MultiPoly>& relations) const;

  /// Matrix of multiplication by theta on the basis (column = theta * b_j).
  RatMatrix multiplication_matrix(const MultiPoly& theta) const;

  /// Lex triangular generators recovered by minimal monic dependencies of
  /// variable powers over the partial staircase (pure ideals only).
  TriangularIdeal triangularize() const;

 private:
  QuotientAlgebra() = default;

  const RatVec& monomial_coords_root(const Expo& e) const;  // memoized
  RatVec chain_project(RatVec root_coords) const;

  int nvars_ = 0;
  TriangularIdeal tri_;                   // root data (empty for children)
  std::vector<Expo> basis_;               // subset of the root staircase
  std::map<Expo, int> basis_index_;
  AlgebraPtr parent_;
  std::vector<MultiPoly> relations_;
  std::vector<RatVec> projection_;        // parent coords -> this coords
  const QuotientAlgebra* root_ = nullptr;

  mutable std::map<Expo, RatVec> nf_cache_;
};

/// Stab_{S_n}(I): permutations whose action maps every generator into the
/// ideal; always a group.
PermGroup decomposition_group(const QuotientAlgebra& a);

/// Inj(I, J) = {sigma | sigma.I contained in J}; a union of cosets in
/// general. Requires I contained in J (the identity must qualify).
PermSet injector(const QuotientAlgebra& a_i, const QuotientAlgebra& a_j);

struct PurityCertificate {
  bool pure = false;
  size_t dimension = 0;
  long stabilizer_order = 0;
  bool triangular_ok = false;  // meaningful when pure
};

/// dim = |Stab(I)| test (conditions 6/7 of the purity equivalences), plus a
/// triangularizability check when pure.
PurityCertificate is_pure(const QuotientAlgebra& a);

struct VarietyReport {
  size_t flagged_count = 0;
  size_t dimension = 0;
  bool count_matches_dimension = false;
  std::vector<Perm> flagged;  // sigma with gens(sigma * alpha) ~ 0
  bool matches_expected = true;
};

/// Numerically enumerates {sigma * alpha}, flags the tuples annihilating
/// all generators within `tolerance`; the count must equal the dimension.
/// `expected` (e.g. Inj(I, M)) is compared against the flagged set if given.
VarietyReport variety_check(const QuotientAlgebra& a, const RootVector& roots,
                            const Rat& tolerance,
                            const std::optional<PermSet>& expected = std::nullopt);

}  // namespace galois

#endif
