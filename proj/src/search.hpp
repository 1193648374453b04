#pragma once

// Internal cover-search kernels. The serial DFS is the reference; the OpenMP
// kernel splits the same tree at a shallow frontier and merges results in
// frontier order, so both return identical covers.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <vector>

#include "ryser/bitset.hpp"

namespace ryser::search {

struct Problem {
  std::size_t num_vertices = 0;
  std::vector<Bitset> edges;
  std::size_t max_edge_size = 0;
};

struct Control {
  std::chrono::steady_clock::time_point deadline;
  std::atomic<bool> timed_out{false};
  std::atomic<std::uint64_t> nodes{0};

  bool expired() {
    if (timed_out.load(std::memory_order_relaxed)) return true;
    if (std::chrono::steady_clock::now() >= deadline) {
      timed_out.store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }
};

struct Node {
  Bitset chosen;
  Bitset forbidden;
  std::size_t depth = 0;
};

enum class NodeKind { Covered, Dead, Branch };

struct Analysis {
  NodeKind kind = NodeKind::Dead;
  std::vector<std::uint32_t> branch_vertices;  // allowed vertices of the branching edge
};

/// Classifies a node under cover-size budget `budget`.
Analysis analyze(const Problem& p, const Bitset& chosen, const Bitset& forbidden, std::size_t depth,
                 std::size_t budget);

/// Size of a greedily built family of pairwise disjoint edges (restricted to
/// non-forbidden vertices) among edges not hit by `chosen`.
std::size_t greedy_lower_bound(const Problem& p, const Bitset& chosen, const Bitset& forbidden);

struct Outcome {
  bool found = false;
  std::vector<Bitset> covers;  // first cover only, or all covers, in DFS order
};

namespace serial {
Outcome run(const Problem& p, const Node& start, std::size_t budget, bool enumerate, Control& ctl);
}

namespace parallel {
Outcome run(const Problem& p, std::size_t budget, bool enumerate, unsigned jobs, Control& ctl);
}

}  // namespace ryser::search
