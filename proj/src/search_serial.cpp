#include "search.hpp"

namespace ryser::search {

std::size_t greedy_lower_bound(const Problem& p, const Bitset& chosen, const Bitset& forbidden) {
  // Buckets by remaining edge size, smallest first, index order within.
  std::vector<std::vector<std::size_t>> buckets(p.max_edge_size + 1);
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const auto& e = p.edges[i];
    if (e.intersects(chosen)) continue;
    buckets[e.count_without(forbidden)].push_back(i);
  }
  if (!buckets[0].empty()) return p.edges.size() + 1;
  Bitset used(p.num_vertices);
  std::size_t lb = 0;
  for (const auto& bucket : buckets) {
    for (auto i : bucket) {
      const auto& e = p.edges[i];
      bool disjoint = true;
      for (std::size_t w = 0; w < e.num_words() && disjoint; ++w)
        disjoint = (e.data()[w] & ~forbidden.data()[w] & used.data()[w]) == 0;
      if (!disjoint) continue;
      e.for_each([&](std::size_t v) {
        if (!forbidden.test(v)) used.set(v);
      });
      ++lb;
    }
  }
  return lb;
}

Analysis analyze(const Problem& p, const Bitset& chosen, const Bitset& forbidden, std::size_t depth,
                 std::size_t budget) {
  Analysis a;
  std::size_t best_edge = p.edges.size();
  std::size_t best_size = 0;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const auto& e = p.edges[i];
    if (e.intersects(chosen)) continue;
    const std::size_t s = e.count_without(forbidden);
    if (s == 0) return a;
    if (best_edge == p.edges.size() || s < best_size) {
      best_edge = i;
      best_size = s;
    }
  }
  if (best_edge == p.edges.size()) {
    a.kind = NodeKind::Covered;
    return a;
  }
  if (depth >= budget) return a;
  if (depth + greedy_lower_bound(p, chosen, forbidden) > budget) return a;
  a.kind = NodeKind::Branch;
  p.edges[best_edge].for_each([&](std::size_t v) {
    if (!forbidden.test(v)) a.branch_vertices.push_back(static_cast<std::uint32_t>(v));
  });
  return a;
}

namespace serial {

namespace {

struct Dfs {
  const Problem& p;
  std::size_t budget;
  bool enumerate;
  Control& ctl;
  Outcome out;
  std::uint64_t local_nodes = 0;

  // Returns true when the search should stop.
  bool visit(Bitset& chosen, Bitset& forbidden, std::size_t depth) {
    if ((++local_nodes & 255U) == 0) {
      ctl.nodes.fetch_add(256, std::memory_order_relaxed);
      if (ctl.expired()) return true;
    }
    const auto a = analyze(p, chosen, forbidden, depth, budget);
    if (a.kind == NodeKind::Covered) {
      out.found = true;
      out.covers.push_back(chosen);
      return !enumerate;
    }
    if (a.kind == NodeKind::Dead) return false;
    bool stop = false;
    std::size_t excluded = 0;
    for (auto v : a.branch_vertices) {
      chosen.set(v);
      stop = visit(chosen, forbidden, depth + 1);
      chosen.reset(v);
      if (stop) break;
      forbidden.set(v);
      ++excluded;
    }
    for (std::size_t i = 0; i < excluded; ++i) forbidden.reset(a.branch_vertices[i]);
    return stop;
  }
};

}  // namespace

Outcome run(const Problem& p, const Node& start, std::size_t budget, bool enumerate, Control& ctl) {
  Dfs dfs{p, budget, enumerate, ctl, {}, 0};
  Bitset chosen = start.chosen;
  Bitset forbidden = start.forbidden;
  dfs.visit(chosen, forbidden, start.depth);
  ctl.nodes.fetch_add(dfs.local_nodes & 255U, std::memory_order_relaxed);
  return std::move(dfs.out);
}

}  // namespace serial

}  // namespace ryser::search
