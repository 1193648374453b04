#include <omp.h>

#include <algorithm>
#include <limits>

#include "search.hpp"

namespace ryser::search::parallel {

namespace {

// Expands the tree in DFS order down to `max_depth`, keeping leaves
// (covered nodes) and unexpanded nodes in the order the serial DFS meets them.
void build_frontier(const Problem& p, Node node, std::size_t budget, std::size_t max_depth,
                    std::vector<Node>& frontier) {
  if (node.depth >= max_depth) {
    frontier.push_back(std::move(node));
    return;
  }
  const auto a = analyze(p, node.chosen, node.forbidden, node.depth, budget);
  if (a.kind == NodeKind::Dead) return;
  if (a.kind == NodeKind::Covered) {
    frontier.push_back(std::move(node));
    return;
  }
  Bitset forbidden = node.forbidden;
  for (auto v : a.branch_vertices) {
    Node child{node.chosen, forbidden, node.depth + 1};
    child.chosen.set(v);
    build_frontier(p, std::move(child), budget, max_depth, frontier);
    forbidden.set(v);
  }
}

}  // namespace

Outcome run(const Problem& p, std::size_t budget, bool enumerate, unsigned jobs, Control& ctl) {
  if (jobs == 0) jobs = static_cast<unsigned>(omp_get_max_threads());
  Node root{Bitset(p.num_vertices), Bitset(p.num_vertices), 0};

  std::vector<Node> frontier;
  std::size_t depth = 0;
  while (true) {
    frontier.clear();
    build_frontier(p, root, budget, depth, frontier);
    if (frontier.size() >= 4 * static_cast<std::size_t>(jobs) || depth >= budget) break;
    ++depth;
  }

  const auto n = static_cast<std::int64_t>(frontier.size());
  std::vector<Outcome> parts(frontier.size());
  std::atomic<std::int64_t> first_hit{std::numeric_limits<std::int64_t>::max()};

#pragma omp parallel for schedule(dynamic, 1) num_threads(static_cast<int>(jobs))
  for (std::int64_t i = 0; i < n; ++i) {
    if (!enumerate && i > first_hit.load(std::memory_order_relaxed)) continue;
    if (ctl.timed_out.load(std::memory_order_relaxed)) continue;
    parts[static_cast<std::size_t>(i)] = serial::run(p, frontier[static_cast<std::size_t>(i)], budget, enumerate, ctl);
    if (!enumerate && parts[static_cast<std::size_t>(i)].found) {
      auto cur = first_hit.load();
      while (i < cur && !first_hit.compare_exchange_weak(cur, i)) {
      }
    }
  }

  Outcome out;
  for (auto& part : parts) {
    if (!part.found) continue;
    out.found = true;
    for (auto& c : part.covers) out.covers.push_back(std::move(c));
    if (!enumerate) break;
  }
  return out;
}

}  // namespace ryser::search::parallel
