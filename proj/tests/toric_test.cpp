#include "extremal/errors.hpp"
#include "extremal/smooth.hpp"
#include "extremal/toric.hpp"

#include <doctest.h>

using namespace extremal;

namespace {

SimpleGraph complete(int m) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= m; ++u)
    for (int v = u + 1; v <= m; ++v) edges.emplace_back(u, v);
  return SimpleGraph(m, edges);
}

SimpleGraph path(int m) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < m; ++v) edges.emplace_back(v, v + 1);
  return SimpleGraph(m, edges);
}

std::vector<LabelSet> big_tubes(const SimpleGraph& g) {
  std::vector<LabelSet> out;
  for (LabelSet t : tubes(g))
    if (set_size(t) >= 2) out.push_back(t);
  return out;
}

}  // namespace

TEST_CASE("graphs validate their edges") {
  CHECK_THROWS_AS(SimpleGraph(3, {{1, 1}}), Error);
  CHECK_THROWS_AS(SimpleGraph(3, {{1, 2}, {2, 1}}), Error);
  CHECK_THROWS_AS(SimpleGraph(3, {{1, 4}}), Error);
  SimpleGraph g(3, {{3, 1}, {2, 1}});
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}});
  CHECK(g.adjacent(3, 1));
  CHECK_FALSE(g.adjacent(2, 3));
  CHECK(g.neighborhood(1) == make_set({2, 3}));
}

TEST_CASE("tubes") {
  CHECK(big_tubes(path(3)) == std::vector<LabelSet>{make_set({1, 2}), make_set({2, 3}), make_set({1, 2, 3})});
  CHECK(tubes(complete(4)).size() == 15);
  auto p4 = tubes(path(4));
  CHECK(std::find(p4.begin(), p4.end(), make_set({1, 3})) == p4.end());
  CHECK(p4.size() == 10);
}

TEST_CASE("cotransitive and multipartite examples") {
  for (int m = 2; m <= 5; ++m) {
    CHECK(is_cotransitive(complete(m)));
    CHECK(is_complete_multipartite(complete(m)));
  }
  CHECK_FALSE(is_cotransitive(path(4)));
  CHECK_FALSE(is_complete_multipartite(path(4)));
  SimpleGraph claw(4, {{1, 2}, {1, 3}, {1, 4}});
  CHECK(is_cotransitive(claw));
  CHECK(is_complete_multipartite(claw));
  CHECK_THROWS_AS(is_cotransitive(SimpleGraph(4, {{1, 2}, {3, 4}})), Error);
}

TEST_CASE("toric indicators") {
  CHECK_THROWS_AS(indicator_from_graph(complete(2)), Error);
  CHECK_FALSE(is_modular_toric(path(4)));
  SimpleGraph square(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  CHECK(is_modular_toric(square));
  CHECK(is_modular_toric(complete(3)));
  auto family = indicator_from_graph(complete(3));
  for (LabelSet b : family) CHECK_FALSE(has_label(b, 5));
}

TEST_CASE("connected graph counts") {
  const std::size_t expected[] = {0, 1, 1, 4, 38, 728};
  for (int m = 1; m <= 5; ++m) CHECK(all_connected_graphs(m).size() == expected[m]);
}

TEST_CASE("modularity, cotransitivity and multipartiteness coincide") {
  for (int m = 1; m <= 6; ++m)
    for (const auto& g : all_connected_graphs(m)) {
      bool multipartite = is_complete_multipartite(g);
      CHECK(is_cotransitive(g) == multipartite);
      if (m >= 3 && m <= 5) CHECK(is_modular_toric(g) == multipartite);
      if (!multipartite) continue;
      auto t = tubes(g);
      for (LabelSet s = 1; s < full_set(m); ++s) {
        if (set_size(s) < 2 || std::binary_search(t.begin(), t.end(), s)) continue;
        for (LabelSet sub = (s - 1) & s; sub; sub = (sub - 1) & s)
          if (set_size(sub) >= 2) CHECK_FALSE(std::binary_search(t.begin(), t.end(), sub));
      }
    }
}
