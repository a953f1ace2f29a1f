#include "extremal/families.hpp"

#include <algorithm>

namespace extremal {

namespace {

Rational weight_of(const std::vector<Rational>& a, LabelSet s) {
  Rational total = 0;
  for (int l : labels_of(s)) total += a[l - 1];
  return total;
}

std::vector<LabelSet> maximal_sets(std::vector<LabelSet> sets) {
  std::vector<LabelSet> out;
  for (LabelSet s : sets) {
    bool inside = std::any_of(sets.begin(), sets.end(), [s](LabelSet t) { return t != s && is_subset(s, t); });
    if (!inside) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

void validate_weights(const WeightData& a) {
  const int n = static_cast<int>(a.size());
  if (n < 3 || n > kMaxLabels) throw Error("weight data needs between 3 and " + std::to_string(kMaxLabels) + " entries");
  for (int i = 0; i < n; ++i)
    if (a[i] <= 0 || a[i] > 1) throw Error("weight a_" + std::to_string(i + 1) + " = " + to_string(a[i]) + " is outside (0,1]");
  if (sum(a) <= 2) throw Error("weights must total more than 2");
}

Assignment weight_assignment(const WeightData& a) {
  validate_weights(a);
  const int n = static_cast<int>(a.size());
  // The center of the star over P is assigned iff P has a block whose
  // complement C is light. Such P all lie under {complement of C} + singletons(C).
  std::vector<LabelSet> light;
  for (LabelSet c = 1; c < full_set(n); ++c)
    if (set_size(c) >= 2 && set_size(c) <= n - 2 && weight_of(a, c) <= 1) light.push_back(c);
  std::vector<SetPartition> gens;
  for (LabelSet c : maximal_sets(light)) {
    std::vector<LabelSet> blocks{full_set(n) & ~c};
    for (int l : labels_of(c)) blocks.push_back(label_bit(l));
    gens.emplace_back(n, std::move(blocks));
  }
  return normalize(n, std::move(gens));
}

Assignment boggi(int n) {
  if (n < 5) throw Error("the unlabeled-vertex assignment needs n >= 5");
  std::vector<SetPartition> gens;
  for (auto& p : all_set_partitions(n, 3, n - 1)) {
    bool no_singletons = std::all_of(p.blocks().begin(), p.blocks().end(), [](LabelSet b) { return set_size(b) >= 2; });
    if (no_singletons) gens.push_back(std::move(p));
  }
  return normalize(n, std::move(gens));
}

void validate_git(const GitParams& p) {
  const int n = static_cast<int>(p.c.size());
  if (n < 3 || n > kMaxLabels) throw Error("GIT data needs between 3 and " + std::to_string(kMaxLabels) + " weights");
  if (p.d < 1) throw Error("degree d must be positive");
  if (p.gamma < 0 || p.gamma >= 1) throw Error("gamma must lie in [0,1)");
  for (int i = 0; i < n; ++i)
    if (p.c[i] <= 0 || p.c[i] >= 1) throw Error("c_" + std::to_string(i + 1) + " must lie in (0,1)");
  if ((p.d - 1) * p.gamma + sum(p.c) != p.d + 1) throw Error("GIT data must satisfy (d-1)*gamma + sum(c) = d+1");
}

namespace {

bool on_wall(const GitParams& p, LabelSet tail) {
  Rational x = (weight_of(p.c, tail) - 1) / (1 - p.gamma);
  return is_integer(x) && x >= 0 && x <= p.d - 1;
}

}  // namespace

std::optional<LabelSet> first_wall(const GitParams& p) {
  const int n = static_cast<int>(p.c.size());
  for (LabelSet t = 1; t < full_set(n); ++t)
    if (set_size(t) >= 2 && set_size(t) <= n - 2 && on_wall(p, t)) return t;
  return std::nullopt;
}

int sigma_tail(const GitParams& p, LabelSet tail) {
  const int n = static_cast<int>(p.c.size());
  if (tail == full_set(n)) return p.d;
  Rational ct = weight_of(p.c, tail);
  Rational x = (ct - 1) / (1 - p.gamma);
  if (on_wall(p, tail))
    throw Error("tail " + format_set(tail) + " lies on a wall: (c_T - 1)/(1 - gamma) = " + to_string(x));
  Rational total = sum(p.c);
  if (ct < 1) return 0;
  if (ct > total - 1) return p.d;
  return static_cast<int>(ceil_of(x).get_si());
}

int sigma_vertex_via(const GitParams& p, const LabeledTree& tree, int v, int neighbor) {
  LabelSet outside = full_set(tree.n()) & ~tree.branch(v, neighbor);
  int s = sigma_tail(p, outside);
  for (int w : tree.neighbors(v))
    if (w != neighbor) s -= sigma_tail(p, tree.branch(v, w));
  return s;
}

int sigma_vertex(const GitParams& p, const LabeledTree& tree, int v) {
  if (tree.n() != static_cast<int>(p.c.size())) throw Error("GIT data and tree have different label counts");
  const auto& nb = tree.neighbors(v);
  if (nb.empty()) return sigma_tail(p, full_set(tree.n()));
  int best = nb.front();
  for (int w : nb)
    if (lex_less(tree.branch(v, w), tree.branch(v, best))) best = w;
  return sigma_vertex_via(p, tree, v, best);
}

Assignment git_assignment(const GitParams& p) {
  validate_git(p);
  const int n = static_cast<int>(p.c.size());
  std::vector<int> degree(std::size_t{1} << n, -1);
  for (LabelSet t = 1; t < full_set(n); ++t)
    if (set_size(t) >= 2 && set_size(t) <= n - 2) degree[t] = sigma_tail(p, t);
  std::vector<SetPartition> gens;
  for (auto& part : all_set_partitions(n, 3, n - 1)) {
    int center = p.d;
    for (LabelSet b : part.blocks())
      if (set_size(b) >= 2) center -= degree[b];
    if (center == 0) gens.push_back(std::move(part));
  }
  return normalize(n, std::move(gens));
}

Restriction restriction(const Assignment& z, const LabeledTree& tree, int v, int guard) {
  if (member(z, tree, v)) throw Error("restriction is only defined at unassigned vertices");
  std::vector<LabelSet> origin;
  for (int l : labels_of(tree.labels_at(v))) origin.push_back(label_bit(l));
  std::vector<int> nbrs = tree.neighbors(v);
  std::sort(nbrs.begin(), nbrs.end(),
            [&](int a, int b) { return min_label(tree.branch(v, a)) < min_label(tree.branch(v, b)); });
  const int own = static_cast<int>(origin.size());
  for (int w : nbrs) origin.push_back(tree.branch(v, w));
  const int m = static_cast<int>(origin.size());
  if (m > guard) throw GuardError("restriction onto " + std::to_string(m) + " labels refused", guard);

  TreeShape base = tree.shape();
  std::vector<std::pair<int, int>> kept;
  for (auto e : base.edges)
    if (e.first != v && e.second != v) kept.push_back(e);

  std::vector<SetPartition> found;
  for (const auto& star : all_set_partitions(m, 3, m - 1)) {
    TreeShape s = base;
    s.edges = kept;
    s.labels[v] = 0;
    auto attach = [&](int vertex, int new_label) {
      if (new_label <= own)
        s.labels[vertex] |= origin[new_label - 1];
      else
        s.edges.emplace_back(vertex, nbrs[new_label - own - 1]);
    };
    for (LabelSet block : star.blocks()) {
      int holder = v;
      if (set_size(block) >= 2) {
        holder = static_cast<int>(s.labels.size());
        s.labels.push_back(0);
        s.edges.emplace_back(v, holder);
      }
      for (int l : labels_of(block)) attach(holder, l);
    }
    std::vector<int> canon;
    LabeledTree degenerate(s, &canon);
    if (member(z, degenerate, canon[v])) found.push_back(star);
  }
  return {normalize(m, std::move(found)), std::move(origin)};
}

}  // namespace extremal
