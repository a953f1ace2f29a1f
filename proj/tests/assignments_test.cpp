#include "extremal/assignments.hpp"
#include "extremal/catalog.hpp"
#include "extremal/errors.hpp"
#include "extremal/families.hpp"
#include "extremal/text.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace extremal;

namespace {

SetPartition sp(std::string_view text) { return parse_set_partition(text); }

// Explicit table of an atomic assignment, closed by brute force from its basic pair.
const ExplicitAssignment& atomic_table(const SetPartition& p) {
  static std::map<SetPartition, ExplicitAssignment> cache;
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  BasicPair star = star_tree(p);
  auto table = brute_smallest({{star.tree, star.center}});
  REQUIRE(table);
  return cache.emplace(p, *table).first->second;
}

// Union of the atomic tables: the assignment a generator family describes,
// built without the single-comparison membership test.
ExplicitAssignment oracle_table(const Assignment& z) {
  const TreeCatalog& cat = TreeCatalog::get(z.n());
  ExplicitAssignment out{z.n(), std::vector<std::uint32_t>(cat.trees().size(), 0)};
  for (const auto& g : z.generators()) {
    const auto& t = atomic_table(g);
    for (std::size_t i = 0; i < out.table.size(); ++i) out.table[i] |= t.table[i];
  }
  return out;
}

Assignment random_family(std::mt19937& rng, const std::vector<SetPartition>& pool, int max_size) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> size(1, max_size);
  std::vector<SetPartition> gens;
  for (int k = size(rng); k > 0; --k) gens.push_back(pool[pick(rng)]);
  return normalize(pool.front().n(), gens);
}

}  // namespace

TEST_CASE("atomic assignments") {
  CHECK(atomic(sp("{1|2|3|4,5,6}")).generators() == std::vector<SetPartition>{sp("{1|2|3|4,5,6}")});
  CHECK(atomic(sp("{1,2|3,4|5,6|7,8}")).n() == 8);
  CHECK_THROWS_AS(atomic(SetPartition::complete(5)), Error);
  CHECK_THROWS_AS(atomic(sp("{1,2,3|4,5}")), Error);
}

TEST_CASE("membership examples") {
  LabeledTree g = parse_tree("(1,2,(3,4,(5,6)))");
  Assignment z = atomic(sp("{1|2|3|4|5,6}"));
  CHECK(member(z, g, 0));
  CHECK(member(z, g, 1));
  CHECK_FALSE(member(z, g, 2));
  CHECK(assigned(z, g) == std::vector<int>{0, 1});

  SetPartition p = sp("{1|2|3|4,5,6}");
  BasicPair own = star_tree(p);
  CHECK(member(atomic(p), own.tree, own.center));
  BasicPair heavy = star_tree(sp("{4|5|6|1,2,3}"));
  CHECK_FALSE(member(atomic(p), heavy.tree, heavy.center));
  CHECK_THROWS_AS(member(z, g, 7), Error);

  Assignment light = weight_assignment({make_rational(1, 3), make_rational(1, 3), make_rational(1, 3), 1, 1});
  LabeledTree two = parse_tree("(1,2,3,(4,5))");
  CHECK(assigned(light, two) == std::vector<int>{two.vertex_of_label(1)});
  for (const auto& t : enumerate_trees(5)) CHECK(assigned(Assignment(5), t).empty());
}

TEST_CASE("extremality examples") {
  auto bad = is_extremal(8, {sp("{1,2|3,4|5,6,7,8}"), sp("{1,2,3,4|5,6|7,8}")});
  CHECK_FALSE(bad.extremal);
  REQUIRE(bad.witness);
  CHECK(bad.witness->bound == sp("{1,2|3,4|5,6|7,8}"));
  CHECK(is_extremal(6, {sp("{1|2|3|4,5,6}"), sp("{2|5|6|1,3,4}")}).extremal);
  for (const auto& p : all_set_partitions(6, 3, 5)) CHECK(is_extremal(6, {p}).extremal);
  CHECK_THROWS_AS(is_extremal(6, {sp("{1|2|3|4,5,6}"), sp("{1|2|3,4,5,6}")}), Error);
}

TEST_CASE("smallest containing assignment") {
  BasicPair a = star_tree(sp("{1,2|3,4|5,6,7,8}"));
  BasicPair b = star_tree(sp("{1,2,3,4|5,6|7,8}"));
  auto z = smallest_containing({{a.tree, a.center}, {b.tree, b.center}});
  REQUIRE(z);
  CHECK(z->generators() == std::vector<SetPartition>{sp("{1,2|3,4|5,6|7,8}")});
  CHECK(is_extremal(*z).extremal);

  for (const auto& p : all_set_partitions(6, 3, 5)) {
    BasicPair s = star_tree(p);
    auto one = smallest_containing({{s.tree, s.center}});
    REQUIRE(one);
    CHECK(*one == atomic(p));
  }

  BasicPair left = star_tree(sp("{1,2,3|4|5|6}"));
  BasicPair right = star_tree(sp("{1|2|3|4,5,6}"));
  std::vector<MarkedTree> pair{{left.tree, left.center}, {right.tree, right.center}};
  auto fast = smallest_containing(pair);
  auto slow = brute_smallest(pair);
  CHECK(fast.has_value() == slow.has_value());
  if (fast && slow) CHECK(explicit_table(*fast) == *slow);
}

TEST_CASE("smallest containing agrees with the brute-force closure") {
  const auto& trees = TreeCatalog::get(6).trees();
  std::mt19937 rng(6);
  std::uniform_int_distribution<std::size_t> tree_pick(0, trees.size() - 1);
  std::uniform_int_distribution<int> count(1, 3);
  int none = 0;
  for (int seed = 0; seed < 50; ++seed) {
    std::vector<MarkedTree> pairs;
    for (int k = count(rng); k > 0; --k) {
      const LabeledTree& t = trees[tree_pick(rng)];
      std::uniform_int_distribution<int> vertex(0, t.vertex_count() - 1);
      pairs.push_back({t, vertex(rng)});
    }
    auto fast = smallest_containing(pairs);
    auto slow = brute_smallest(pairs);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) CHECK(explicit_table(*fast) == *slow);
    else ++none;
  }
  CHECK(none < 50);
}

TEST_CASE("generator families agree with explicit tables on n=6") {
  auto pool = all_set_partitions(6, 3, 5);
  std::mt19937 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    Assignment z = random_family(rng, pool, trial < 100 ? 2 : 5);
    ExplicitAssignment oracle = oracle_table(z);
    CHECK(is_extremal(z).extremal == brute_is_extremal(oracle));
    CHECK(explicit_table(z) == oracle);
    if (is_extremal(z).extremal) CHECK(generators_from_explicit(oracle) == z);
  }
}

TEST_CASE("atomic assignments are the brute-force closures of their pairs") {
  for (int n = 4; n <= 6; ++n)
    for (const auto& p : all_set_partitions(n, 3, n - 1)) {
      BasicPair s = star_tree(p);
      auto closed = brute_smallest({{s.tree, s.center}});
      REQUIRE(closed);
      CHECK(*closed == explicit_table(atomic(p)));
      CHECK(brute_is_extremal(*closed));
    }
}

TEST_CASE("atomic assignments grow with refinement") {
  auto parts = all_set_partitions(6, 3, 5);
  const auto& trees = TreeCatalog::get(6).trees();
  for (const auto& p : parts)
    for (const auto& q : parts) {
      if (p == q || !leq(p, q)) continue;
      Assignment small = atomic(p), large = atomic(q);
      for (const auto& t : trees)
        for (int v = 0; v < t.vertex_count(); ++v)
          if (member(small, t, v)) CHECK(member(large, t, v));
    }
}

TEST_CASE("no extremal assignment assigns a whole tree") {
  auto pool = all_set_partitions(6, 3, 5);
  std::mt19937 rng(5);
  const auto& trees = TreeCatalog::get(6).trees();
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 60; ++trial) {
    Assignment z = random_family(rng, pool, 4);
    if (!is_extremal(z).extremal) continue;
    ++checked;
    for (const auto& t : trees) CHECK(static_cast<int>(assigned(z, t).size()) < t.vertex_count());
  }
  CHECK(checked >= 20);
}

TEST_CASE("membership is invariant under relabeling") {
  std::mt19937 rng(17);
  auto pool = all_set_partitions(6, 3, 5);
  const auto& trees = TreeCatalog::get(6).trees();
  std::vector<int> perm{1, 2, 3, 4, 5, 6};
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    Assignment z = random_family(rng, pool, 3);
    std::vector<SetPartition> moved;
    for (const auto& g : z.generators()) moved.push_back(relabel(g, perm));
    Assignment w = normalize(6, moved);
    for (const auto& t : trees) {
      LabeledTree u = relabel(t, perm);
      for (int v = 0; v < t.vertex_count(); ++v) {
        if (t.labels_at(v) == 0) continue;
        int image = u.vertex_of_label(perm[min_label(t.labels_at(v)) - 1]);
        CHECK(member(z, t, v) == member(w, u, image));
      }
      CHECK(assigned(z, t).size() == assigned(w, u).size());
    }
  }
}

TEST_CASE("union and intersection") {
  CHECK_THROWS_AS(assignment_union(atomic(sp("{1,2|3,4|5,6,7,8}")), atomic(sp("{1,2,3,4|5,6|7,8}"))),
                  NotExtremalError);
  try {
    assignment_union(atomic(sp("{1,2|3,4|5,6,7,8}")), atomic(sp("{1,2,3,4|5,6|7,8}")));
  } catch (const NotExtremalError& e) {
    CHECK(e.witness().bound == sp("{1,2|3,4|5,6|7,8}"));
  }
  Assignment a = atomic(sp("{1|2|3|4,5,6}"));
  Assignment b = atomic(sp("{1|2|3,4|5,6}"));
  Assignment meet = assignment_intersection(a, b);
  CHECK(meet == atomic(sp("{1|2|3,4,5,6}")));
  for (const auto& t : TreeCatalog::get(6).trees())
    for (int v = 0; v < t.vertex_count(); ++v) CHECK(member(meet, t, v) == (member(a, t, v) && member(b, t, v)));
  CHECK(assignment_intersection(a, a) == a);
  Assignment joined = assignment_union(a, atomic(sp("{2|5|6|1,3,4}")));
  CHECK(joined.generators().size() == 2);
}

TEST_CASE("equivalence") {
  Assignment z = atomic(sp("{1|2|3|4,5,6}"));
  CHECK(equivalent(z, z));
  Assignment light = weight_assignment({make_rational(1, 3), make_rational(1, 3), make_rational(1, 3), 1, 1});
  CHECK_FALSE(equivalent(light, Assignment(5)));
  // The centre of this basic pair carries four tails, so it is not an isolated 3-valent difference.
  BasicPair s = star_tree(sp("{1,2|3|4|5}"));
  CHECK(s.tree.valence(s.center) == 4);
  CHECK_FALSE(equivalent(atomic(sp("{1,2|3|4|5}")), Assignment(5)));
  // A 3-valent centre whose neighbours are never assigned together.
  CHECK(equivalent(atomic(sp("{1,2|3|4,5}")), Assignment(5)));
  CHECK_THROWS_AS(equivalent(Assignment(8), Assignment(8)), GuardError);
  CHECK_NOTHROW(equivalent(Assignment(8), Assignment(8), 8));
}

TEST_CASE("explicit round trips") {
  for (const auto& p : all_set_partitions(6, 3, 5)) CHECK(generators_from_explicit(explicit_table(atomic(p))) == atomic(p));
  const TreeCatalog& cat = TreeCatalog::get(6);
  ExplicitAssignment unlabeled{6, std::vector<std::uint32_t>(cat.trees().size(), 0)};
  for (std::size_t t = 0; t < cat.trees().size(); ++t)
    for (int v = 0; v < cat.trees()[t].vertex_count(); ++v)
      if (cat.trees()[t].labels_at(v) == 0) unlabeled.table[t] |= 1u << v;
  Assignment gens = generators_from_explicit(unlabeled);
  CHECK(gens.generators() == set_partitions_of_shape(IntegerPartition({2, 2, 2})));
  CHECK(gens == boggi(6));
  ExplicitAssignment empty{6, std::vector<std::uint32_t>(cat.trees().size(), 0)};
  CHECK(generators_from_explicit(empty).empty());
  CHECK(brute_is_extremal(empty));
}

TEST_CASE("brute-force axioms") {
  CHECK(brute_is_extremal(explicit_table(atomic(sp("{1|2|3|4,5,6}")))));
  const TreeCatalog& cat = TreeCatalog::get(6);
  ExplicitAssignment both{6, std::vector<std::uint32_t>(cat.trees().size(), 0)};
  both.table[cat.index_of(parse_tree("(1,2,3,(4,5,6))"))] = 0b11;
  CHECK_FALSE(brute_is_extremal(both));
  CHECK_THROWS_AS(generators_from_explicit(both), Error);
  CHECK_THROWS_AS(TreeCatalog::get(9), GuardError);
}
