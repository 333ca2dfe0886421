#include "galois/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <unordered_map>

#include "galois/numbers.hpp"

namespace galois {

namespace {

// Subgroup search works in the index space of g.elements() with a
// precomputed multiplication table; subgroups are sorted index vectors.
struct GroupTable {
  const PermGroup* g;
  std::vector<std::vector<uint32_t>> mult;
  std::unordered_map<uint64_t, uint32_t> index_of;

  explicit GroupTable(const PermGroup& group) : g(&group) {
    size_t order = group.elements().size();
    for (size_t i = 0; i < order; ++i)
      index_of.emplace(group.elements()[i].key(), static_cast<uint32_t>(i));
    mult.assign(order, std::vector<uint32_t>(order));
    for (size_t a = 0; a < order; ++a)
      for (size_t b = 0; b < order; ++b)
        mult[a][b] = index_of.at((group.elements()[a] * group.elements()[b]).key());
  }

  uint32_t identity() const {
    return index_of.at(Perm::identity(g->degree()).key());
  }

  std::vector<uint32_t> closure(std::vector<uint32_t> gens) const {
    std::vector<bool> seen(mult.size(), false);
    std::vector<uint32_t> elems{identity()};
    seen[identity()] = true;
    for (size_t head = 0; head < elems.size(); ++head)
      for (uint32_t gen : gens) {
        uint32_t next = mult[gen][elems[head]];
        if (!seen[next]) { seen[next] = true; elems.push_back(next); }
      }
    std::sort(elems.begin(), elems.end());
    return elems;
  }
};

struct SubgroupRecord {
  std::vector<uint32_t> elems;  // sorted
  std::vector<uint32_t> gens;
};

std::vector<SubgroupRecord> enumerate_subgroups_indexed(const GroupTable& table) {
  std::set<std::vector<uint32_t>> known;
  std::vector<SubgroupRecord> out;
  SubgroupRecord trivial{{table.identity()}, {}};
  known.insert(trivial.elems);
  out.push_back(trivial);
  for (size_t head = 0; head < out.size(); ++head) {
    SubgroupRecord current = out[head];  // copy: out grows below
    for (uint32_t ext = 0; ext < table.mult.size(); ++ext) {
      if (std::binary_search(current.elems.begin(), current.elems.end(), ext))
        continue;
      std::vector<uint32_t> gens = current.gens;
      gens.push_back(ext);
      std::vector<uint32_t> closed = table.closure(gens);
      if (known.insert(closed).second)
        out.push_back(SubgroupRecord{std::move(closed), std::move(gens)});
    }
  }
  std::sort(out.begin(), out.end(), [](const SubgroupRecord& a, const SubgroupRecord& b) {
    if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
  });
  return out;
}

PermGroup materialize(const GroupTable& table, const std::vector<uint32_t>& elems) {
  std::vector<Perm> members;
  members.reserve(elems.size());
  for (uint32_t idx : elems) members.push_back(table.g->elements()[idx]);
  return PermGroup::from_elements(std::move(members));
}

std::string group_cache_key(const PermGroup& g) {
  std::string key;
  for (const Perm& e : g.elements()) key += e.to_string();
  return key;
}

PermGroup parse_group_gens(const std::string& text, int degree) {
  std::vector<Perm> gens;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    std::string piece = text.substr(start, end - start);
    if (piece.find_first_not_of(" \t") != std::string::npos)
      gens.push_back(Perm::parse(piece, degree));
    start = end + 1;
  }
  if (gens.empty()) throw ParseError("no generators in: " + text);
  for (const Perm& p : gens)
    if (p.degree() != degree)
      throw ParseError("generator degree mismatch in: " + text);
  return PermGroup::generated_by(gens, degree);
}

// classical maximal subgroups of S_6: A_6, S_5 (point stabilizer),
// PGL(2,5) acting on the projective line, S_4 x S_2, S_3 wr S_2, S_2 wr S_3
std::vector<PermGroup> curated_s6_maximals() {
  auto grp = [](std::initializer_list<const char*> gens) {
    std::vector<Perm> parsed;
    for (const char* g : gens) parsed.push_back(Perm::parse(g, 6));
    return PermGroup::generated_by(parsed, 6);
  };
  std::vector<PermGroup> out;
  out.push_back(PermGroup::alternating(6));                       // 360
  out.push_back(grp({"(1 2 3 4 5)", "(1 2)"}));                   // S_5 x S_1, 120
  out.push_back(grp({"(1 2 3 4 5)", "(2 3 5 4)", "(1 6)(2 5)"}));  // PGL(2,5), 120
  out.push_back(grp({"(1 2 3 4)", "(1 2)", "(5 6)"}));            // S_4 x S_2, 48
  out.push_back(grp({"(1 2 3)", "(1 2)", "(4 5 6)", "(4 5)", "(1 4)(2 5)(3 6)"}));  // S_3 wr S_2, 72
  out.push_back(grp({"(1 2)", "(3 4)", "(5 6)", "(1 3)(2 4)", "(3 5)(4 6)"}));      // S_2 wr S_3, 48
  assert(out[2].order() == 120 && out[4].order() == 72 && out[5].order() == 48);
  return out;
}

}  // namespace

std::vector<PermGroup> all_subgroups(const PermGroup& g) {
  static std::map<std::string, std::vector<PermGroup>> cache;
  std::string key = group_cache_key(g);
  auto hit = cache.find(key);
  if (hit != cache.end()) return hit->second;

  if (g.order() > 400 && g.degree() > 5)
    throw MathError("subgroup enumeration capped at order 400 for degree > 5");
  GroupTable table(g);
  std::vector<PermGroup> out;
  for (const SubgroupRecord& rec : enumerate_subgroups_indexed(table))
    out.push_back(materialize(table, rec.elems));
  cache.emplace(std::move(key), out);
  return out;
}

std::vector<PermGroup> subgroup_classes(int degree) {
  if (degree > 5)
    throw MathError("full subgroup class lists are enumerated for degree <= 5 "
                    "only; supply class representatives explicitly beyond that");
  PermGroup sn = PermGroup::symmetric(degree);
  std::vector<PermGroup> subs = all_subgroups(sn);
  std::vector<PermGroup> reps;
  for (const PermGroup& h : subs) {
    bool seen = false;
    for (const PermGroup& rep : reps)
      if (are_conjugate(rep, h)) { seen = true; break; }
    if (!seen) reps.push_back(h);
  }
  std::sort(reps.begin(), reps.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return reps;
}

std::vector<PermGroup> maximal_subgroups(const PermGroup& g) {
  std::vector<PermGroup> subs = all_subgroups(g);
  std::vector<PermGroup> out;
  for (const PermGroup& h : subs) {
    if (h.order() == g.order()) continue;
    bool maximal = true;
    for (const PermGroup& k : subs) {
      if (k.order() <= h.order() || k.order() == g.order()) continue;
      if (h.is_subgroup_of(k)) { maximal = false; break; }
    }
    if (maximal) out.push_back(h);
  }
  return out;
}

std::vector<PermGroup> maximal_subgroup_classes(const PermGroup& g) {
  std::vector<PermGroup> maximals;
  if (g.degree() == 6 && g.order() == 720) {
    maximals = curated_s6_maximals();
  } else {
    std::vector<PermGroup> all = maximal_subgroups(g);
    // dedupe under conjugation by g
    for (const PermGroup& h : all) {
      bool seen = false;
      for (const PermGroup& rep : maximals) {
        if (rep.order() != h.order()) continue;
        for (const Perm& c : g.elements()) {
          bool match = true;
          Perm cinv = c.inverse();
          for (const Perm& gen : h.generators())
            if (!rep.contains(c * gen * cinv)) { match = false; break; }
          if (match) { seen = true; break; }
        }
        if (seen) break;
      }
      if (!seen) maximals.push_back(h);
    }
  }
  std::sort(maximals.begin(), maximals.end(),
            [](const PermGroup& a, const PermGroup& b) {
              if (a.order() != b.order()) return a.order() > b.order();
              return a.elements() < b.elements();
            });
  return maximals;
}

std::optional<std::string> transitive_label(const PermGroup& g) {
  int n = g.degree();
  if (n < 2 || n > 5 || !g.is_transitive()) return std::nullopt;
  long order = g.order();
  bool has_n_cycle = false;
  for (const auto& type : g.cycle_types())
    if (type.size() == 1 && type[0] == n) has_n_cycle = true;
  switch (n) {
    case 2: return "C2";
    case 3: return order == 3 ? "C3" : "S3";
    case 4:
      if (order == 4) return has_n_cycle ? "C4" : "V4";
      if (order == 8) return "D4";
      if (order == 12) return "A4";
      if (order == 24) return "S4";
      break;
    case 5:
      if (order == 5) return "C5";
      if (order == 10) return "D5";
      if (order == 20) return "F20";
      if (order == 60) return "A5";
      if (order == 120) return "S5";
      break;
  }
  return std::nullopt;
}

PermGroup group_from_text(const std::string& text, int degree) {
  std::string t;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw ParseError("empty group description");
  if (t[0] == 'S' || t[0] == 'A' || t[0] == 'C' || t[0] == 'V' ||
      t[0] == 'D' || t[0] == 'F') {
    if (t == "S" + std::to_string(degree)) return PermGroup::symmetric(degree);
    if (t == "A" + std::to_string(degree)) return PermGroup::alternating(degree);
    // remaining labels resolved through the transitive tables
    for (const PermGroup& rep : subgroup_classes(degree)) {
      auto label = transitive_label(rep);
      if (label && *label == t) return rep;
    }
    throw ParseError("unknown group label for degree " +
                     std::to_string(degree) + ": " + text);
  }
  return parse_group_gens(text, degree);
}

}  // namespace galois
