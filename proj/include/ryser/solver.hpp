#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ryser/hypergraph.hpp"

namespace ryser {

/// Wall-clock budget in seconds: RYSER_TIMEOUT_SECS if set, else 60.
double default_timeout_secs();

struct SolverOptions {
  /// Worker count. 1 runs the serial reference search; 0 uses the OpenMP
  /// default. Results do not depend on this value.
  unsigned jobs = 0;
  double timeout_secs = default_timeout_secs();
  /// Cap on the cover sizes tried; exceeding it yields HintExceeded.
  std::optional<std::size_t> upper_hint;
};

enum class SearchStatus { Complete, Timeout, HintExceeded };

struct CoverResult {
  std::size_t tau = 0;
  std::vector<VertexId> witness;
  /// Every cover of size tau, sorted lexicographically; set when requested.
  std::optional<std::vector<std::vector<VertexId>>> all_min_covers;
  std::uint64_t nodes_explored = 0;
  SearchStatus status = SearchStatus::Complete;

  bool complete() const noexcept { return status == SearchStatus::Complete; }
};

/// Exact cover number by iterative deepening over a branch-and-bound search
/// that branches on a smallest uncovered edge and bounds with a greedy
/// disjoint family. Throws EmptyHypergraph.
CoverResult cover_number(const PartiteHypergraph& h, bool enumerate_all = false, const SolverOptions& opts = {});

struct MatchingResult {
  std::size_t nu = 0;
  std::vector<std::size_t> witness;  // edge indices
  std::uint64_t nodes_explored = 0;
  SearchStatus status = SearchStatus::Complete;

  bool complete() const noexcept { return status == SearchStatus::Complete; }
};

MatchingResult matching_number(const PartiteHypergraph& h, const SolverOptions& opts = {});

struct RatioReport {
  std::size_t r = 0;
  std::size_t tau = 0;
  std::size_t nu = 0;
  double ratio = 0.0;
  bool is_ryser_extremal = false;
  bool complete = true;
  CoverResult cover;
  MatchingResult matching;
};

/// Requires a uniform hypergraph (NonUniform otherwise).
RatioReport verify_ryser_ratio(const PartiteHypergraph& h, const SolverOptions& opts = {});

bool is_cover(const PartiteHypergraph& h, std::span<const VertexId> vertices);
bool is_matching(const PartiteHypergraph& h, std::span<const std::size_t> edges);

}  // namespace ryser
