#include "ryser/oracle.hpp"

#include <cstdint>

#include "ryser/error.hpp"

namespace ryser {

namespace {

constexpr double kMaxSubsets = 1e7;

void check_size(std::size_t n, std::size_t limit) {
  if (n <= 24) return;
  double total = 0, term = 1;
  for (std::size_t i = 0; i <= limit && i <= n; ++i) {
    total += term;
    term = term * static_cast<double>(n - i) / static_cast<double>(i + 1);
  }
  if (total > kMaxSubsets)
    throw Error(ErrorKind::TooLarge, "brute force over " + std::to_string(n) + " vertices up to size " +
                                         std::to_string(limit) + " exceeds the 10^7 subset budget");
}

// Visits every k-subset of {0..n-1} in lexicographic order until f returns true.
template <typename F>
bool for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (f(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool hits_all(const std::vector<std::vector<std::uint32_t>>& edges, const std::vector<char>& mark) {
  for (const auto& e : edges) {
    bool hit = false;
    for (auto v : e)
      if (mark[v]) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> plain_edges(const PartiteHypergraph& h) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t i = 0; i < h.num_edges(); ++i) out.push_back(h.edge(i));
  return out;
}

}  // namespace

std::optional<std::size_t> brute_force_cover_oracle(const PartiteHypergraph& h, std::size_t limit) {
  const std::size_t n = h.num_vertices();
  check_size(n, limit);
  const auto edges = plain_edges(h);
  std::vector<char> mark(n, 0);
  for (std::size_t k = 0; k <= limit && k <= n; ++k) {
    const bool found = for_each_subset(n, k, [&](const std::vector<std::size_t>& s) {
      for (auto v : s) mark[v] = 1;
      const bool ok = hits_all(edges, mark);
      for (auto v : s) mark[v] = 0;
      return ok;
    });
    if (found) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> brute_force_cover_oracle(const PartiteHypergraph& h) {
  return brute_force_cover_oracle(h, h.num_vertices());
}

std::vector<std::vector<VertexId>> brute_force_covers(const PartiteHypergraph& h, std::size_t max_size) {
  const std::size_t n = h.num_vertices();
  check_size(n, max_size);
  const auto edges = plain_edges(h);
  std::vector<char> mark(n, 0);
  std::vector<std::vector<VertexId>> out;
  for (std::size_t k = 0; k <= max_size && k <= n; ++k) {
    for_each_subset(n, k, [&](const std::vector<std::size_t>& s) {
      for (auto v : s) mark[v] = 1;
      if (hits_all(edges, mark)) {
        std::vector<VertexId> c;
        for (auto v : s) c.push_back(h.vertex(static_cast<std::uint32_t>(v)));
        out.push_back(std::move(c));
      }
      for (auto v : s) mark[v] = 0;
      return false;
    });
  }
  return out;
}

}  // namespace ryser
