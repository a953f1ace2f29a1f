#include "extremal/partitions.hpp"

#include "extremal/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <utility>

namespace extremal {

namespace {

void require_same_n(const SetPartition& p, const SetPartition& q) {
  if (p.n() != q.n())
    throw Error("set partitions on different label counts (" + std::to_string(p.n()) +
                " vs " + std::to_string(q.n()) + ")");
}

void require_same_n(const IntegerPartition& p, const IntegerPartition& q) {
  if (p.n() != q.n())
    throw Error("integer partitions of different totals (" + std::to_string(p.n()) +
                " vs " + std::to_string(q.n()) + ")");
}

// Multiset of parts as (value, multiplicity), values descending.
using Multiset = std::vector<std::pair<int, int>>;

Multiset to_multiset(const std::vector<int>& parts) {
  Multiset m;
  for (int v : parts) {
    if (!m.empty() && m.back().first == v)
      ++m.back().second;
    else
      m.emplace_back(v, 1);
  }
  return m;
}

// Calls f(taken) for every nonempty sub-multiset; taken[i] counts copies of m[i].
void for_each_submultiset(const Multiset& m,
                          const std::function<void(const std::vector<int>&, int)>& f) {
  std::vector<int> taken(m.size(), 0);
  std::function<void(std::size_t, int, bool)> rec = [&](std::size_t i, int total, bool any) {
    if (i == m.size()) {
      if (any) f(taken, total);
      return;
    }
    for (int c = 0; c <= m[i].second; ++c) {
      taken[i] = c;
      rec(i + 1, total + c * m[i].first, any || c > 0);
    }
    taken[i] = 0;
  };
  rec(0, 0, false);
}

std::vector<int> expand_taken(const Multiset& m, const std::vector<int>& taken) {
  std::vector<int> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int c = 0; c < taken[i]; ++c) out.push_back(m[i].first);
  return out;
}

}  // namespace

SetPartition::SetPartition(int n, std::vector<LabelSet> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 1 || n > kMaxLabels)
    throw Error("label count " + std::to_string(n) + " out of range 1.." + std::to_string(kMaxLabels));
  LabelSet seen = 0;
  for (LabelSet b : blocks_) {
    if (b == 0) throw Error("empty block in set partition");
    if (b & seen) throw Error("blocks overlap in set partition");
    seen |= b;
  }
  if (seen != full_set(n)) throw Error("blocks do not cover 1.." + std::to_string(n));
  std::sort(blocks_.begin(), blocks_.end(),
            [](LabelSet a, LabelSet b) { return min_label(a) < min_label(b); });
}

SetPartition SetPartition::complete(int n) {
  std::vector<LabelSet> blocks;
  for (int l = 1; l <= n; ++l) blocks.push_back(label_bit(l));
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::single_block(int n) { return SetPartition(n, {full_set(n)}); }

LabelSet SetPartition::singleton_support() const {
  LabelSet s = 0;
  for (LabelSet b : blocks_)
    if (set_size(b) == 1) s |= b;
  return s;
}

std::size_t SetPartition::block_of(int label) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (has_label(blocks_[i], label)) return i;
  throw Error("label " + std::to_string(label) + " not in partition");
}

std::strong_ordering SetPartition::operator<=>(const SetPartition& other) const {
  if (auto c = n_ <=> other.n_; c != 0) return c;
  std::size_t common = std::min(blocks_.size(), other.blocks_.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (blocks_[i] == other.blocks_[i]) continue;
    return lex_less(blocks_[i], other.blocks_[i]) ? std::strong_ordering::less
                                                  : std::strong_ordering::greater;
  }
  return blocks_.size() <=> other.blocks_.size();
}

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error("integer partition needs at least one part");
  for (int v : parts_)
    if (v < 1) throw Error("integer partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

IntegerPartition IntegerPartition::complete(int n) { return IntegerPartition(std::vector<int>(n, 1)); }

bool leq(const SetPartition& p, const SetPartition& q) {
  require_same_n(p, q);
  for (LabelSet c : q.blocks()) {
    bool inside = false;
    for (LabelSet b : p.blocks())
      if (is_subset(c, b)) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

bool preceq(const SetPartition& p, const SetPartition& q) {
  if (!leq(p, q)) return false;
  LabelSet singles = q.singleton_support();
  for (LabelSet b : p.blocks())
    if (set_size(b) >= 2 && is_subset(b, singles)) return false;
  return true;
}

std::vector<SetPartition> preceq_corruptions(const SetPartition& p) {
  // Blocks of size >= 2 are grouped arbitrarily; each singleton either stays
  // alone or joins one of those groups. A group of singletons alone would be a
  // block inside the singleton support, which is exactly what is excluded.
  std::vector<LabelSet> big, single;
  for (LabelSet b : p.blocks()) (set_size(b) >= 2 ? big : single).push_back(b);

  std::vector<SetPartition> out;
  std::vector<LabelSet> groups;
  std::function<void(std::size_t)> place_singles;
  std::vector<LabelSet> alone;
  place_singles = [&](std::size_t i) {
    if (i == single.size()) {
      if (groups.size() + alone.size() < 3) return;
      std::vector<LabelSet> blocks = groups;
      blocks.insert(blocks.end(), alone.begin(), alone.end());
      out.emplace_back(p.n(), std::move(blocks));
      return;
    }
    alone.push_back(single[i]);
    place_singles(i + 1);
    alone.pop_back();
    for (auto& g : groups) {
      g |= single[i];
      place_singles(i + 1);
      g &= ~single[i];
    }
  };
  std::function<void(std::size_t)> group_big = [&](std::size_t i) {
    if (i == big.size()) {
      place_singles(0);
      return;
    }
    for (std::size_t j = 0; j < groups.size(); ++j) {
      groups[j] |= big[i];
      group_big(i + 1);
      groups[j] &= ~big[i];
    }
    groups.push_back(big[i]);
    group_big(i + 1);
    groups.pop_back();
  };
  group_big(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SetPartition> tight_common_upper_bounds(const SetPartition& q1, const SetPartition& q2) {
  require_same_n(q1, q2);
  auto inside_some = [](LabelSet b, const SetPartition& q) {
    for (LabelSet c : q.blocks())
      if (is_subset(b, c)) return true;
    return false;
  };
  std::vector<LabelSet> pool;
  for (LabelSet b : q1.blocks())
    if (inside_some(b, q2)) pool.push_back(b);
  for (LabelSet c : q2.blocks())
    if (inside_some(c, q1) && std::find(pool.begin(), pool.end(), c) == pool.end())
      pool.push_back(c);

  const LabelSet all = full_set(q1.n());
  std::vector<SetPartition> out;
  std::vector<LabelSet> chosen;
  std::function<void(LabelSet)> cover = [&](LabelSet covered) {
    if (covered == all) {
      SetPartition r(q1.n(), chosen);
      if (leq(q1, r) && leq(q2, r)) out.push_back(std::move(r));
      return;
    }
    LabelSet next = label_bit(min_label(all & ~covered));
    for (LabelSet b : pool) {
      if (!(b & next) || (b & covered)) continue;
      chosen.push_back(b);
      cover(covered | b);
      chosen.pop_back();
    }
  };
  cover(0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_transversal(const SetPartition& p, const SetPartition& q) {
  require_same_n(p, q);
  if (p == q) throw Error("transversality needs two distinct partitions");
  return tight_common_upper_bounds(p, q).empty();
}

bool is_strongly_transversal(const SetPartition& p, const SetPartition& q) {
  require_same_n(p, q);
  for (const auto& a : preceq_corruptions(p))
    for (const auto& b : preceq_corruptions(q)) {
      if (leq(a, b) || leq(b, a)) continue;  // compatible pairs are exempt
      if (!tight_common_upper_bounds(a, b).empty()) return false;
    }
  return true;
}

SetPartition finest_common_coarsening(const SetPartition& p, const SetPartition& q) {
  require_same_n(p, q);
  const int n = p.n();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto absorb = [&](LabelSet b) {
    int root = find(min_label(b) - 1);
    for (int l : labels_of(b)) parent[find(l - 1)] = root;
  };
  for (LabelSet b : p.blocks()) absorb(b);
  for (LabelSet b : q.blocks()) absorb(b);
  std::map<int, LabelSet> classes;
  for (int l = 1; l <= n; ++l) classes[find(l - 1)] |= label_bit(l);
  std::vector<LabelSet> blocks;
  for (const auto& [root, set] : classes) blocks.push_back(set);
  return SetPartition(n, std::move(blocks));
}

IntegerPartition shape(const SetPartition& p) {
  std::vector<int> parts;
  for (LabelSet b : p.blocks()) parts.push_back(set_size(b));
  return IntegerPartition(std::move(parts));
}

bool int_leq(const IntegerPartition& p, const IntegerPartition& q) {
  require_same_n(p, q);
  if (p.size() > q.size()) return false;
  const std::vector<int>& items = q.parts();  // descending
  std::map<std::vector<int>, bool> memo;
  // State: index of the next q part plus the sorted remaining bin capacities.
  std::function<bool(std::size_t, std::vector<int>&)> place = [&](std::size_t i,
                                                                  std::vector<int>& bins) {
    if (i == items.size()) return true;  // sums agree, so every bin is full
    std::vector<int> key = bins;
    std::sort(key.begin(), key.end());
    key.push_back(static_cast<int>(i));
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = false;
    for (std::size_t b = 0; b < bins.size() && !ok; ++b) {
      if (bins[b] < items[i]) continue;
      bool repeat = false;
      for (std::size_t e = 0; e < b; ++e)
        if (bins[e] == bins[b]) repeat = true;
      if (repeat) continue;
      bins[b] -= items[i];
      ok = place(i + 1, bins);
      bins[b] += items[i];
    }
    memo.emplace(std::move(key), ok);
    return ok;
  };
  std::vector<int> bins = p.parts();
  return place(0, bins);
}

namespace {

struct ClosureEntry {
  IntegerPartition partition;
  int depth;
};

// Breadth-first exploration of the replacement rewriting, recording the
// generation in which each partition first appears.
std::vector<ClosureEntry> explore_replacements(const std::vector<IntegerPartition>& family) {
  if (family.empty()) return {};
  const int n = family.front().n();
  for (const auto& p : family)
    if (p.n() != n) throw Error("family members have different totals");

  // For each family member: sum -> list of equal-sum sub-multisets.
  std::map<int, std::set<std::vector<int>>> additions;
  for (const auto& p : family) {
    Multiset m = to_multiset(p.parts());
    for_each_submultiset(m, [&](const std::vector<int>& taken, int total) {
      additions[total].insert(expand_taken(m, taken));
    });
  }

  std::set<IntegerPartition> seen;
  std::vector<ClosureEntry> order;
  std::vector<IntegerPartition> frontier;
  for (const auto& q : all_integer_partitions(n, 3)) {
    for (const auto& p : family)
      if (int_leq(q, p)) {
        if (seen.insert(q).second) {
          order.push_back({q, 0});
          frontier.push_back(q);
        }
        break;
      }
  }
  int depth = 0;
  while (!frontier.empty()) {
    ++depth;
    std::vector<IntegerPartition> next;
    for (const auto& r : frontier) {
      Multiset m = to_multiset(r.parts());
      for_each_submultiset(m, [&](const std::vector<int>& taken, int total) {
        auto it = additions.find(total);
        if (it == additions.end()) return;
        std::vector<int> kept;
        for (std::size_t i = 0; i < m.size(); ++i)
          for (int c = taken[i]; c < m[i].second; ++c) kept.push_back(m[i].first);
        for (const auto& added : it->second) {
          if (kept.size() + added.size() < 3) continue;
          std::vector<int> parts = kept;
          parts.insert(parts.end(), added.begin(), added.end());
          IntegerPartition candidate(std::move(parts));
          if (seen.insert(candidate).second) next.push_back(candidate);
        }
      });
    }
    std::sort(next.begin(), next.end());
    for (const auto& r : next) order.push_back({r, depth});
    frontier = std::move(next);
  }
  return order;
}

}  // namespace

std::set<IntegerPartition> replacement_closure(const std::vector<IntegerPartition>& family) {
  std::set<IntegerPartition> out;
  for (auto& e : explore_replacements(family)) out.insert(std::move(e.partition));
  return out;
}

// Witness: among violators at the smallest replacement depth, the one with the
// fewest parts, ties broken towards the lexicographically smallest.
SpecialCheck is_special_family(const std::vector<IntegerPartition>& family) {
  std::optional<ClosureEntry> best;
  for (const auto& e : explore_replacements(family)) {
    if (best && e.depth > best->depth) break;
    bool covered = std::any_of(family.begin(), family.end(),
                               [&](const IntegerPartition& p) { return int_leq(e.partition, p); });
    if (covered) continue;
    if (!best || e.partition.size() < best->partition.size() ||
        (e.partition.size() == best->partition.size() && e.partition.parts() < best->partition.parts()))
      best = e;
  }
  if (best) return {false, best->partition};
  return {};
}

std::vector<SetPartition> all_set_partitions(int n, int min_blocks, int max_blocks) {
  std::vector<SetPartition> out;
  std::vector<LabelSet> blocks;
  std::function<void(int)> rec = [&](int label) {
    if (label > n) {
      int k = static_cast<int>(blocks.size());
      if (k >= min_blocks && k <= max_blocks) out.emplace_back(n, blocks);
      return;
    }
    // Prune when the remaining labels cannot reach min_blocks.
    if (static_cast<int>(blocks.size()) + (n - label + 1) < min_blocks) return;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      blocks[i] |= label_bit(label);
      rec(label + 1);
      blocks[i] &= ~label_bit(label);
    }
    if (static_cast<int>(blocks.size()) < max_blocks) {
      blocks.push_back(label_bit(label));
      rec(label + 1);
      blocks.pop_back();
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SetPartition> set_partitions_of_shape(const IntegerPartition& p) {
  const int n = p.n();
  std::map<int, int> sizes;
  for (int v : p.parts()) ++sizes[v];
  std::vector<SetPartition> out;
  std::vector<LabelSet> blocks;
  // The block holding the smallest unused label is chosen first, so each
  // partition is produced once.
  std::function<void(LabelSet)> rec = [&](LabelSet unused) {
    if (unused == 0) {
      out.emplace_back(n, blocks);
      return;
    }
    LabelSet first = label_bit(min_label(unused));
    std::vector<int> rest = labels_of(unused & ~first);
    for (auto& [size, count] : sizes) {
      if (count == 0 || size - 1 > static_cast<int>(rest.size())) continue;
      --count;
      std::vector<bool> pick(rest.size(), false);
      std::fill(pick.begin(), pick.begin() + (size - 1), true);
      do {
        LabelSet b = first;
        for (std::size_t i = 0; i < rest.size(); ++i)
          if (pick[i]) b |= label_bit(rest[i]);
        blocks.push_back(b);
        rec(unused & ~b);
        blocks.pop_back();
      } while (std::prev_permutation(pick.begin(), pick.end()));
      ++count;
    }
  };
  rec(full_set(n));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntegerPartition> all_integer_partitions(int n, int min_parts, int max_parts) {
  std::vector<IntegerPartition> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int largest) {
    if (remaining == 0) {
      int k = static_cast<int>(parts.size());
      if (k >= min_parts && k <= max_parts) out.emplace_back(parts);
      return;
    }
    if (static_cast<int>(parts.size()) >= max_parts) return;
    for (int v = std::min(remaining, largest); v >= 1; --v) {
      parts.push_back(v);
      rec(remaining - v, v);
      parts.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

LabelSet relabel(LabelSet s, const std::vector<int>& perm) {
  LabelSet out = 0;
  for (int l : labels_of(s)) out |= label_bit(perm[l - 1]);
  return out;
}

SetPartition relabel(const SetPartition& p, const std::vector<int>& perm) {
  std::vector<LabelSet> blocks;
  for (LabelSet b : p.blocks()) blocks.push_back(relabel(b, perm));
  return SetPartition(p.n(), std::move(blocks));
}

std::vector<SetPartition> maximal_elements(std::vector<SetPartition> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<SetPartition> out;
  for (const auto& p : family) {
    bool dominated = std::any_of(family.begin(), family.end(),
                                 [&](const SetPartition& q) { return q != p && leq(p, q); });
    if (!dominated) out.push_back(p);
  }
  return out;
}

std::vector<IntegerPartition> maximal_elements(std::vector<IntegerPartition> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<IntegerPartition> out;
  for (const auto& p : family) {
    bool dominated = std::any_of(family.begin(), family.end(),
                                 [&](const IntegerPartition& q) { return q != p && int_leq(p, q); });
    if (!dominated) out.push_back(p);
  }
  return out;
}

}  // namespace extremal
