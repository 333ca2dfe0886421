#ifndef GALOIS_PERM_HPP
#define GALOIS_PERM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace galois {

/// A permutation of {1..n}, stored as the image list: image(j) = images[j-1].
/// Composition convention: (p*q)(i) = p(q(i)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);

  /// Accepts either an image list "[2,1,3]" or cycle notation "(1 2)(3 4)";
  /// cycle input needs the degree.
  static Perm parse(const std::string& text, int degree = 0);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int point) const { return img_[point - 1]; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  bool is_identity() const;

  /// Image of a point tuple: (sigma*y)_j = y_{sigma(j)}.
  template <typename T>
  std::vector<T> permute_tuple(const std::vector<T>& y) const {
    std::vector<T> out(y.size());
    for (size_t j = 0; j < y.size(); ++j) out[j] = y[img_[j] - 1];
    return out;
  }

  const std::vector<int>& images() const { return img_; }
  std::vector<std::vector<int>> cycles() const;  // nontrivial cycles
  std::vector<int> cycle_type() const;           // all cycle lengths, sorted desc
  bool is_even() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  std::string to_string() const;        // image list form
  std::string to_cycle_string() const;  // cycle form, "()" for identity

  uint64_t key() const;  // packed form for hashing, degree <= 8

 private:
  std::vector<int> img_;
};

class PermGroup;

/// A plain finite set of permutations of common degree (injectors and
/// Max(I,alpha) need not be groups). Kept sorted and duplicate-free.
class PermSet {
 public:
  PermSet() = default;
  PermSet(int degree, std::vector<Perm> members);

  int degree() const { return degree_; }
  size_t size() const { return members_.size(); }
  bool contains(const Perm& p) const;
  bool is_group() const;
  const std::vector<Perm>& members() const { return members_; }

  bool operator==(const PermSet& o) const { return members_ == o.members_; }

 private:
  int degree_ = 0;
  std::vector<Perm> members_;
};

/// Finite permutation group given by generators; the element closure is
/// enumerated eagerly (desk scale, degree <= 8) and kept sorted by image
/// list so that all downstream iteration is canonical.
class PermGroup {
 public:
  PermGroup() = default;

  static PermGroup generated_by(const std::vector<Perm>& gens, int degree = 0);
  static PermGroup from_elements(std::vector<Perm> elements);
  static PermGroup symmetric(int n);
  static PermGroup alternating(int n);
  static PermGroup trivial(int n);

  int degree() const { return degree_; }
  long order() const { return static_cast<long>(elements_.size()); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return gens_; }

  bool contains(const Perm& p) const;
  bool is_subgroup_of(const PermGroup& big) const;
  bool same_group(const PermGroup& o) const;
  bool is_transitive() const;
  bool is_even_only() const;  // contained in A_n

  PermGroup conjugated(const Perm& tau) const;  // tau G tau^-1

  /// Orbit of a point under the natural action, ordered by first discovery
  /// over the canonical element order.
  std::vector<int> orbit_point(int point) const;

  /// Point stabilizer {sigma in G | sigma(point) = point}.
  PermGroup stabilizer_point(int point) const;

  /// Distinct cycle types over all elements, each sorted descending;
  /// the list itself is sorted.
  std::vector<std::vector<int>> cycle_types() const;

  bool operator==(const PermGroup& o) const { return elements_ == o.elements_; }
  bool operator<(const PermGroup& o) const { return elements_ < o.elements_; }

 private:
  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elements_;  // sorted
};

enum class CosetSide { Left, Right };

/// A transversal of H in L. Representatives are the lexicographically least
/// element of each coset, listed in lex order.
struct CosetSystem {
  PermGroup ambient;
  PermGroup subgroup;
  CosetSide side = CosetSide::Left;
  std::vector<Perm> transversal;

  size_t index() const { return transversal.size(); }
};

/// One entry Gr_L(G,H) of the group matrix: the G-orbits on the left cosets
/// of H in L, each orbit carried as (size, symmetric representation of the
/// G-action as a group of that degree).
struct GroupMatrixEntry {
  std::vector<std::pair<int, PermGroup>> orbit_groups;
  std::vector<int> partition;  // orbit sizes, sorted descending
};

Perm compose(const Perm& p, const Perm& q);
PermGroup generate(const std::vector<Perm>& gens, int degree = 0);

/// Orbit of a point under G with deterministic ordering.
std::vector<int> orbit(const PermGroup& g, int point);

CosetSystem transversal(const PermGroup& ambient, const PermGroup& subgroup,
                        CosetSide side);
PermGroup conjugate(const PermGroup& g, const Perm& tau);

/// Normalizer of H in the full symmetric group of its degree, by scan.
PermGroup normalizer(const PermGroup& h);

GroupMatrixEntry group_matrix_entry(const PermGroup& ambient,
                                    const PermGroup& acting,
                                    const PermGroup& modulo);

/// Conjugacy of subgroups inside the symmetric group of their degree.
bool are_conjugate(const PermGroup& a, const PermGroup& b);

/// Matrix of partitions of `ambient` over the given subgroup class
/// representatives: rows indexed by H, columns by G.
std::vector<std::vector<std::vector<int>>> partition_matrix(
    const PermGroup& ambient, const std::vector<PermGroup>& classes);

}  // namespace galois

#endif
