#ifndef GALOIS_LATTICE_HPP
#define GALOIS_LATTICE_HPP

#include <optional>
#include <string>
#include <vector>

#include "galois/perm.hpp"

namespace galois {

/// Every subgroup of g, by closure search over generator extensions.
/// Cached per group; feasible for |g| <= 400 (and any degree <= 5 group).
std::vector<PermGroup> all_subgroups(const PermGroup& g);

/// Conjugacy-class representatives of the subgroups of S_degree
/// (degree <= 5), canonically ordered by (order, element list).
std::vector<PermGroup> subgroup_classes(int degree);

/// All maximal subgroups of g.
std::vector<PermGroup> maximal_subgroups(const PermGroup& g);

/// One maximal subgroup per conjugacy class *in g*, ordered by descending
/// order then canonical element list. S_6 uses the classical curated list;
/// everything else is enumerated.
std::vector<PermGroup> maximal_subgroup_classes(const PermGroup& g);

/// Standard transitive-group label for degree <= 5 (C4, V4, D4, A4, S4, ...).
std::optional<std::string> transitive_label(const PermGroup& g);

/// Looks up a group from a label like "S4"/"A5"/"V4"/"D4"/"C5"/"F20", or a
/// semicolon-separated generator list in image-list or cycle notation.
PermGroup group_from_text(const std::string& text, int degree);

}  // namespace galois

#endif
