#include "galois/perm.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "galois/numbers.hpp"

namespace galois {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
      throw ParseError("not a bijection of {1..n}: invalid image list");
    seen[v - 1] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return Perm(std::move(img));
}

Perm Perm::parse(const std::string& text, int degree) {
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&]() -> int {
    skip_ws();
    size_t start = i;
    while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw ParseError("expected integer in permutation: " + text);
    return std::stoi(text.substr(start, i - start));
  };
  skip_ws();
  if (i >= text.size()) throw ParseError("empty permutation");
  if (text[i] == '[') {
    ++i;
    std::vector<int> img;
    skip_ws();
    if (i < text.size() && text[i] == ']') return Perm(img);
    for (;;) {
      img.push_back(read_int());
      skip_ws();
      if (i < text.size() && text[i] == ',') { ++i; continue; }
      if (i < text.size() && text[i] == ']') { ++i; break; }
      throw ParseError("malformed image list: " + text);
    }
    return Perm(std::move(img));
  }
  if (text[i] == '(') {
    std::vector<std::vector<int>> cycles;
    int max_point = degree;
    while (i < text.size()) {
      skip_ws();
      if (i >= text.size()) break;
      if (text[i] != '(') throw ParseError("malformed cycle notation: " + text);
      ++i;
      std::vector<int> cyc;
      for (;;) {
        skip_ws();
        if (i < text.size() && text[i] == ')') { ++i; break; }
        if (i < text.size() && (text[i] == ',' || text[i] == ' ')) { ++i; continue; }
        cyc.push_back(read_int());
        max_point = std::max(max_point, cyc.back());
      }
      if (!cyc.empty()) cycles.push_back(cyc);
      skip_ws();
    }
    if (max_point == 0) throw ParseError("cannot infer degree of: " + text);
    std::vector<int> img(max_point);
    std::iota(img.begin(), img.end(), 1);
    for (const auto& cyc : cycles)
      for (size_t k = 0; k < cyc.size(); ++k)
        img[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
    return Perm(std::move(img));
  }
  throw ParseError("unrecognized permutation syntax: " + text);
}

Perm Perm::operator*(const Perm& rhs) const { return compose(*this, rhs); }

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (size_t j = 0; j < img_.size(); ++j) inv[img_[j] - 1] = static_cast<int>(j + 1);
  return Perm(std::move(inv));
}

bool Perm::is_identity() const {
  for (size_t j = 0; j < img_.size(); ++j)
    if (img_[j] != static_cast<int>(j + 1)) return false;
  return true;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[start - 1]) continue;
    std::vector<int> cyc{start};
    seen[start - 1] = true;
    for (int p = img_[start - 1]; p != start; p = img_[p - 1]) {
      cyc.push_back(p);
      seen[p - 1] = true;
    }
    if (cyc.size() > 1) out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(img_.size(), false);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[start - 1]) continue;
    int len = 1;
    seen[start - 1] = true;
    for (int p = img_[start - 1]; p != start; p = img_[p - 1]) {
      ++len;
      seen[p - 1] = true;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

bool Perm::is_even() const {
  int transpositions = 0;
  for (int len : cycle_type()) transpositions += len - 1;
  return transpositions % 2 == 0;
}

std::string Perm::to_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t j = 0; j < img_.size(); ++j) {
    if (j) os << ',';
    os << img_[j];
  }
  os << ']';
  return os.str();
}

std::string Perm::to_cycle_string() const {
  auto cyc = cycles();
  if (cyc.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cyc) {
    os << '(';
    for (size_t k = 0; k < c.size(); ++k) {
      if (k) os << ' ';
      os << c[k];
    }
    os << ')';
  }
  return os.str();
}

uint64_t Perm::key() const {
  assert(img_.size() <= 8);
  uint64_t k = img_.size();
  for (int v : img_) k = (k << 4) | static_cast<uint64_t>(v);
  return k;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw MathError("permutation degree mismatch in composition");
  std::vector<int> img(p.degree());
  for (int i = 1; i <= p.degree(); ++i) img[i - 1] = p(q(i));
  return Perm(std::move(img));
}

PermSet::PermSet(int degree, std::vector<Perm> members)
    : degree_(degree), members_(std::move(members)) {
  for (const auto& p : members_)
    if (p.degree() != degree_) throw MathError("PermSet degree mismatch");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool PermSet::contains(const Perm& p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

bool PermSet::is_group() const {
  if (members_.empty()) return false;
  if (!contains(Perm::identity(degree_))) return false;
  for (const auto& a : members_) {
    if (!contains(a.inverse())) return false;
    for (const auto& b : members_)
      if (!contains(a * b)) return false;
  }
  return true;
}

PermGroup PermGroup::generated_by(const std::vector<Perm>& gens, int degree) {
  if (gens.empty() && degree <= 0)
    throw MathError("cannot generate a group from no generators and no degree");
  int n = degree > 0 ? degree : gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != n) throw MathError("generator degree mismatch");

  // plain closure; fine for n <= 8
  std::set<std::vector<int>> seen;
  std::vector<Perm> elems{Perm::identity(n)};
  seen.insert(elems[0].images());
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      Perm next = g * elems[head];
      if (seen.insert(next.images()).second) elems.push_back(std::move(next));
    }
  }
  std::sort(elems.begin(), elems.end());
  PermGroup out;
  out.degree_ = n;
  out.gens_ = gens;
  if (out.gens_.empty()) out.gens_.push_back(Perm::identity(n));
  out.elements_ = std::move(elems);
  return out;
}

PermGroup PermGroup::from_elements(std::vector<Perm> elements) {
  if (elements.empty()) throw MathError("empty element list");
  int n = elements.front().degree();
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  // greedy small generating set
  std::vector<Perm> gens;
  PermGroup span = trivial(n);
  for (const auto& e : elements) {
    if (span.contains(e)) continue;
    gens.push_back(e);
    span = generated_by(gens, n);
    if (span.order() == static_cast<long>(elements.size())) break;
  }
  if (span.elements() != elements)
    throw MathError("from_elements: element list is not closed");
  return span;
}

PermGroup PermGroup::symmetric(int n) {
  if (n == 1) return trivial(1);
  std::vector<int> cyc(n), swp(n);
  std::iota(cyc.begin(), cyc.end(), 1);
  std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
  std::iota(swp.begin(), swp.end(), 1);
  std::swap(swp[0], swp[1]);
  return generated_by({Perm(cyc), Perm(swp)});
}

PermGroup PermGroup::alternating(int n) {
  if (n <= 2) return trivial(n);
  std::vector<Perm> gens;
  for (int k = 3; k <= n; ++k) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    img[0] = 2; img[1] = k; img[k - 1] = 1;  // 3-cycle (1 2 k)
    gens.emplace_back(std::move(img));
  }
  return generated_by(gens, n);
}

PermGroup PermGroup::trivial(int n) { return generated_by({}, n); }

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_subgroup_of(const PermGroup& big) const {
  if (degree_ != big.degree_) return false;
  for (const auto& e : elements_)
    if (!big.contains(e)) return false;
  return true;
}

bool PermGroup::same_group(const PermGroup& o) const {
  return degree_ == o.degree_ && elements_ == o.elements_;
}

bool PermGroup::is_transitive() const {
  return static_cast<int>(orbit_point(1).size()) == degree_;
}

bool PermGroup::is_even_only() const {
  for (const auto& e : elements_)
    if (!e.is_even()) return false;
  return true;
}

PermGroup PermGroup::conjugated(const Perm& tau) const {
  Perm tinv = tau.inverse();
  std::vector<Perm> elems;
  elems.reserve(elements_.size());
  for (const auto& e : elements_) elems.push_back(tau * e * tinv);
  return from_elements(std::move(elems));
}

std::vector<int> PermGroup::orbit_point(int point) const { return orbit(*this, point); }

PermGroup PermGroup::stabilizer_point(int point) const {
  std::vector<Perm> fixed;
  for (const auto& e : elements_)
    if (e(point) == point) fixed.push_back(e);
  return from_elements(std::move(fixed));
}

std::vector<std::vector<int>> PermGroup::cycle_types() const {
  std::set<std::vector<int>> types;
  for (const auto& e : elements_) types.insert(e.cycle_type());
  return {types.begin(), types.end()};
}

PermGroup generate(const std::vector<Perm>& gens, int degree) {
  return PermGroup::generated_by(gens, degree);
}

std::vector<int> orbit(const PermGroup& g, int point) {
  std::vector<int> out;
  std::vector<bool> seen(g.degree() + 1, false);
  for (const auto& e : g.elements()) {
    int image = e(point);
    if (!seen[image]) {
      seen[image] = true;
      out.push_back(image);
    }
  }
  return out;
}

CosetSystem transversal(const PermGroup& ambient, const PermGroup& subgroup,
                        CosetSide side) {
  if (!subgroup.is_subgroup_of(ambient))
    throw MathError("transversal: H is not a subgroup of L");
  // Coset of e: representative = lex-least member; collect one per coset.
  std::map<std::vector<int>, Perm> reps;  // least member image -> least member
  for (const auto& e : ambient.elements()) {
    Perm least = e;
    for (const auto& h : subgroup.elements()) {
      Perm member = side == CosetSide::Left ? e * h : h * e;
      if (member.images() < least.images()) least = member;
    }
    reps.emplace(least.images(), least);
  }
  CosetSystem cs;
  cs.ambient = ambient;
  cs.subgroup = subgroup;
  cs.side = side;
  for (auto& [img, p] : reps) cs.transversal.push_back(p);
  assert(cs.transversal.size() * subgroup.order() ==
         static_cast<size_t>(ambient.order()));
  return cs;
}

PermGroup conjugate(const PermGroup& g, const Perm& tau) { return g.conjugated(tau); }

PermGroup normalizer(const PermGroup& h) {
  PermGroup sn = PermGroup::symmetric(h.degree());
  std::vector<Perm> members;
  for (const auto& sigma : sn.elements()) {
    bool normalizes = true;
    Perm sinv = sigma.inverse();
    for (const auto& gen : h.generators())
      if (!h.contains(sigma * gen * sinv)) { normalizes = false; break; }
    if (normalizes) members.push_back(sigma);
  }
  return PermGroup::from_elements(std::move(members));
}

GroupMatrixEntry group_matrix_entry(const PermGroup& ambient,
                                    const PermGroup& acting,
                                    const PermGroup& modulo) {
  if (!acting.is_subgroup_of(ambient) || !modulo.is_subgroup_of(ambient))
    throw MathError("group_matrix_entry: G and H must be subgroups of L");
  CosetSystem cs = transversal(ambient, modulo, CosetSide::Left);

  // coset id of an ambient element, via its lex-least coset member
  auto coset_id = [&](const Perm& e) {
    Perm least = e;
    for (const auto& h : modulo.elements()) {
      Perm member = e * h;
      if (member.images() < least.images()) least = member;
    }
    for (size_t i = 0; i < cs.transversal.size(); ++i)
      if (cs.transversal[i] == least) return static_cast<int>(i);
    throw MathError("coset identification failed");
  };

  size_t num_cosets = cs.transversal.size();
  std::vector<int> orbit_of(num_cosets, -1);
  GroupMatrixEntry entry;
  for (size_t start = 0; start < num_cosets; ++start) {
    if (orbit_of[start] != -1) continue;
    // orbit of this coset under left multiplication by G, numbered by
    // position in the canonical transversal order
    std::vector<int> members;
    std::vector<bool> in_orbit(num_cosets, false);
    std::vector<size_t> queue{start};
    in_orbit[start] = true;
    while (!queue.empty()) {
      size_t c = queue.back();
      queue.pop_back();
      for (const auto& g : acting.generators()) {
        int next = coset_id(g * cs.transversal[c]);
        if (!in_orbit[next]) {
          in_orbit[next] = true;
          queue.push_back(next);
        }
      }
    }
    for (size_t c = 0; c < num_cosets; ++c)
      if (in_orbit[c]) {
        members.push_back(static_cast<int>(c));
        orbit_of[c] = static_cast<int>(entry.orbit_groups.size());
      }
    // symmetric representation on this orbit
    std::vector<int> index_in_orbit(num_cosets, -1);
    for (size_t k = 0; k < members.size(); ++k) index_in_orbit[members[k]] = static_cast<int>(k);
    std::vector<Perm> images;
    for (const auto& g : acting.generators()) {
      std::vector<int> img(members.size());
      for (size_t k = 0; k < members.size(); ++k)
        img[k] = index_in_orbit[coset_id(g * cs.transversal[members[k]])] + 1;
      images.emplace_back(std::move(img));
    }
    int size = static_cast<int>(members.size());
    entry.orbit_groups.emplace_back(
        size, PermGroup::generated_by(images, size));
  }
  for (const auto& [size, grp] : entry.orbit_groups) entry.partition.push_back(size);
  std::sort(entry.partition.rbegin(), entry.partition.rend());
  return entry;
}

bool are_conjugate(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree() || a.order() != b.order()) return false;
  PermGroup sn = PermGroup::symmetric(a.degree());
  for (const auto& sigma : sn.elements()) {
    Perm sinv = sigma.inverse();
    bool all_in = true;
    for (const auto& gen : a.generators())
      if (!b.contains(sigma * gen * sinv)) { all_in = false; break; }
    if (all_in) return true;  // same order + containment of conjugate => equal
  }
  return false;
}

std::vector<std::vector<std::vector<int>>> partition_matrix(
    const PermGroup& ambient, const std::vector<PermGroup>& classes) {
  for (size_t i = 0; i < classes.size(); ++i)
    for (size_t j = i + 1; j < classes.size(); ++j)
      if (are_conjugate(classes[i], classes[j]))
        throw MathError("partition_matrix: duplicate subgroup classes supplied");
  std::vector<std::vector<std::vector<int>>> rows;
  for (const auto& h : classes) {
    std::vector<std::vector<int>> row;
    for (const auto& g : classes)
      row.push_back(group_matrix_entry(ambient, g, h).partition);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace galois
