#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "galois/lattice.hpp"
#include "galois/numbers.hpp"
#include "galois/perm.hpp"

using namespace galois;

TEST_CASE("subgroup enumeration counts") {
  CHECK(all_subgroups(PermGroup::symmetric(3)).size() == 6);
  CHECK(all_subgroups(PermGroup::symmetric(4)).size() == 30);
  CHECK(all_subgroups(PermGroup::alternating(4)).size() == 10);
  CHECK(subgroup_classes(3).size() == 4);
  CHECK(subgroup_classes(4).size() == 11);
  CHECK(subgroup_classes(5).size() == 19);
}

TEST_CASE("maximal subgroups") {
  auto s4_max = maximal_subgroup_classes(PermGroup::symmetric(4));
  std::multiset<long> orders;
  for (const PermGroup& m : s4_max) orders.insert(m.order());
  CHECK(orders == std::multiset<long>{12, 8, 6});

  auto s5_max = maximal_subgroup_classes(PermGroup::symmetric(5));
  orders.clear();
  for (const PermGroup& m : s5_max) orders.insert(m.order());
  CHECK(orders == std::multiset<long>{60, 24, 20, 12});

  auto a4_max = maximal_subgroup_classes(PermGroup::alternating(4));
  orders.clear();
  for (const PermGroup& m : a4_max) orders.insert(m.order());
  CHECK(orders == std::multiset<long>{4, 3});
}

TEST_CASE("curated S_6 maximal classes") {
  auto s6_max = maximal_subgroup_classes(PermGroup::symmetric(6));
  std::multiset<long> orders;
  for (const PermGroup& m : s6_max) {
    CHECK(m.is_subgroup_of(PermGroup::symmetric(6)));
    orders.insert(m.order());
  }
  CHECK(orders == std::multiset<long>{360, 120, 120, 72, 48, 48});
  // one S_5 class is transitive (PGL(2,5)), the other is a point stabilizer
  int transitive_120 = 0, intransitive_120 = 0;
  for (const PermGroup& m : s6_max)
    if (m.order() == 120) (m.is_transitive() ? transitive_120 : intransitive_120)++;
  CHECK(transitive_120 == 1);
  CHECK(intransitive_120 == 1);
}

TEST_CASE("partition matrix rows are pairwise distinct for S_3, S_4, S_5") {
  for (int n : {3, 4, 5}) {
    PermGroup sn = PermGroup::symmetric(n);
    auto classes = subgroup_classes(n);
    auto matrix = partition_matrix(sn, classes);
    std::set<std::vector<std::vector<int>>> rows(matrix.begin(), matrix.end());
    CHECK(rows.size() == matrix.size());
    // index-1 sanity: the (H = S_n, G = S_n) entry is the single partition [1]
    CHECK(matrix.back().back() == std::vector<std::vector<int>>::value_type{1});
  }
}

TEST_CASE("duplicate classes are rejected") {
  PermGroup s3 = PermGroup::symmetric(3);
  PermGroup c2a = PermGroup::generated_by({Perm::parse("(1 2)", 3)});
  PermGroup c2b = PermGroup::generated_by({Perm::parse("(1 3)", 3)});
  CHECK_THROWS_AS(partition_matrix(s3, {c2a, c2b}), MathError);
}

TEST_CASE("transitive labels") {
  CHECK(*transitive_label(PermGroup::symmetric(2)) == "C2");
  CHECK(*transitive_label(PermGroup::alternating(3)) == "C3");
  CHECK(*transitive_label(PermGroup::symmetric(3)) == "S3");
  CHECK(*transitive_label(PermGroup::symmetric(4)) == "S4");
  CHECK(*transitive_label(PermGroup::alternating(5)) == "A5");
  CHECK(!transitive_label(PermGroup::generated_by({Perm::parse("(1 2)", 4)}))
             .has_value());  // intransitive

  // generated from the exhaustive enumeration: every transitive class of
  // degree <= 5 carries a unique label
  for (int n : {2, 3, 4, 5}) {
    std::set<std::string> labels;
    size_t transitive_count = 0;
    for (const PermGroup& rep : subgroup_classes(n)) {
      if (!rep.is_transitive()) continue;
      ++transitive_count;
      auto label = transitive_label(rep);
      REQUIRE(label.has_value());
      labels.insert(*label);
    }
    CHECK(labels.size() == transitive_count);
  }
}

TEST_CASE("group_from_text") {
  CHECK(group_from_text("S4", 4).order() == 24);
  CHECK(group_from_text("A4", 4).order() == 12);
  CHECK(group_from_text("D4", 4).order() == 8);
  CHECK(group_from_text("V4", 4).order() == 4);
  CHECK(group_from_text("F20", 5).order() == 20);
  CHECK(group_from_text("(1 2); (3 4)", 4).order() == 4);
  CHECK(group_from_text("[2,1,3,4]", 4).order() == 2);
  CHECK_THROWS_AS(group_from_text("Q8", 4), ParseError);
}
