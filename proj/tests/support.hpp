#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ryser/hypergraph.hpp"

namespace testing {

// Random partite hypergraph: `sides` sides of `side_size` vertices, edge
// sizes in {m, m+1} (m = sides-1 when mixed, else sides), distinct edges.
inline ryser::PartiteHypergraph random_partite(std::mt19937_64& rng, std::size_t sides, std::size_t side_size,
                                               std::size_t edges, bool mixed = false) {
  std::vector<std::vector<std::string>> labels(sides);
  for (std::size_t s = 0; s < sides; ++s)
    for (std::size_t p = 0; p < side_size; ++p) labels[s].push_back("x" + std::to_string(s) + "_" + std::to_string(p));
  std::set<std::vector<ryser::VertexId>> seen;
  std::vector<ryser::EdgeSpec> out;
  std::uniform_int_distribution<std::uint32_t> pos(0, static_cast<std::uint32_t>(side_size - 1));
  std::bernoulli_distribution coin(0.5);
  std::size_t attempts = 0;
  while (out.size() < edges && attempts++ < edges * 50) {
    std::vector<ryser::VertexId> e;
    std::size_t skip = mixed && coin(rng) ? rng() % sides : sides;
    for (std::uint32_t s = 0; s < sides; ++s)
      if (s != skip) e.push_back({s, pos(rng)});
    if (seen.insert(e).second) out.push_back({e, {}});
  }
  return ryser::PartiteHypergraph(labels, out, "random");
}

// Maximum matching by exhaustive subset search over edges.
inline std::size_t brute_force_matching(const ryser::PartiteHypergraph& h) {
  const std::size_t m = h.num_edges();
  std::size_t best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    const auto k = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (k <= best) continue;
    std::vector<std::uint32_t> used;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      for (auto v : h.edge(i)) {
        if (std::find(used.begin(), used.end(), v) != used.end()) {
          ok = false;
          break;
        }
        used.push_back(v);
      }
    }
    if (ok) best = k;
  }
  return best;
}

// Copy with sides permuted and vertices shuffled within each side; edges
// are listed in a shuffled order.
inline ryser::PartiteHypergraph relabel(const ryser::PartiteHypergraph& h, std::mt19937_64& rng) {
  const std::size_t r = h.num_sides();
  std::vector<std::uint32_t> side_perm(r);
  std::iota(side_perm.begin(), side_perm.end(), 0U);
  std::shuffle(side_perm.begin(), side_perm.end(), rng);
  std::vector<std::vector<std::uint32_t>> pos_perm(r);
  std::vector<std::vector<std::string>> labels(r);
  for (std::size_t s = 0; s < r; ++s) {
    pos_perm[s].resize(h.side_size(s));
    std::iota(pos_perm[s].begin(), pos_perm[s].end(), 0U);
    std::shuffle(pos_perm[s].begin(), pos_perm[s].end(), rng);
  }
  for (std::size_t s = 0; s < r; ++s) labels[side_perm[s]].resize(h.side_size(s));
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t p = 0; p < h.side_size(s); ++p) labels[side_perm[s]][pos_perm[s][p]] = "y" + std::to_string(s) + "_" + std::to_string(p);
  std::vector<ryser::EdgeSpec> edges;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    std::vector<ryser::VertexId> vs;
    for (const auto& v : h.edge_vertices(e)) vs.push_back({side_perm[v.side], pos_perm[v.side][v.pos]});
    std::sort(vs.begin(), vs.end());
    edges.push_back({vs, {}});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return ryser::PartiteHypergraph(labels, edges, "relabelled");
}

}  // namespace testing
