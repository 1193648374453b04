#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ryser/hypergraph.hpp"
#include "ryser/solver.hpp"

namespace ryser {

/// Base hypergraph T (r-partite, r-uniform, intersecting), the edge S, and
/// the edges F_1..F_r. f_edges[i] is the base edge index of F_{i+1}.
struct ConstructionSpec {
  PartiteHypergraph base;
  std::size_t s_edge = 0;
  std::vector<std::size_t> f_edges;

  std::size_t r() const noexcept { return base.num_sides(); }
  /// The vertex of S in side i (0-based).
  VertexId s_vertex(std::size_t side) const;
};

/// F_i = least-indexed edge other than S through s_i.
ConstructionSpec default_spec(PartiteHypergraph base, std::size_t s_edge);
/// F_1 = ... = F_r = S.
ConstructionSpec all_s_spec(PartiteHypergraph base, std::size_t s_edge);
/// Explicit F choice, f_edges indexed by side.
ConstructionSpec explicit_spec(PartiteHypergraph base, std::size_t s_edge, std::vector<std::size_t> f_edges);

struct SpecViolation {
  std::string condition;
  std::string detail;
  std::vector<std::string> witness;
};

struct ValidationOptions {
  /// Runs the exhaustive check that the minimum covers of base - S are the
  /// sides. Without it the result is only structurally validated.
  bool check_covers = true;
  SolverOptions solver;
};

struct ValidationResult {
  std::vector<SpecViolation> violations;
  bool covers_checked = false;
  std::optional<CoverResult> base_minus_s;  // tau and all minimum covers of base - S

  bool ok() const noexcept { return violations.empty(); }
};

ValidationResult validate_spec(const ConstructionSpec& spec, const ValidationOptions& opts = {});

/// Edge provenance tags: "E1:<base edge>", "E2:<i>[,<j>...]", "E3:<i>", i 1-based.
enum class EdgeFamily { E1, E2, E3 };
struct Provenance {
  EdgeFamily family = EdgeFamily::E1;
  std::vector<std::size_t> indices;
};
std::optional<Provenance> parse_provenance(const std::string& label);

/// The {r, r+1}-uniform (r+1)-partite hypergraph E1 u E2 u E3 with new side
/// r holding v_1..v_r. S is not an edge. Throws SpecInvalid when the spec
/// fails a structural condition.
PartiteHypergraph build_H(const ConstructionSpec& spec);

/// (C u {s_i : v_i in C}) \ {v_1..v_r}, restricted to base vertices.
std::vector<VertexId> cover_mirror(std::span<const VertexId> cover, const ConstructionSpec& spec);

/// Adds one fresh vertex (label "t<n>", appended to the missing side) to
/// every edge of the smaller size. Uniform input is returned unchanged.
/// Throws BadEdgeSize when a small edge misses more than one side.
PartiteHypergraph uniformize(const PartiteHypergraph& h);

/// Edges labelled E2 or E3. Throws MissingLabels when any edge is unlabelled.
PartiteHypergraph extract_S_subhypergraph(const PartiteHypergraph& h);

/// Block sizes for the degree-profile F selection. x holds x_1..x_t; the
/// last block x_{t+1} = r - 1 - sum(x).
struct DegreeProfile {
  std::size_t r = 0;
  std::vector<std::size_t> x;

  std::size_t t() const noexcept { return x.size(); }
  std::ptrdiff_t x_last() const noexcept;
  /// {1, 2x_1, ..., 2x_t, 2x_{t+1}} sorted.
  std::vector<std::size_t> expected_side_degrees() const;
};

/// Strict enforces t+2 < x_i <= floor(sqrt r), the range in which distinct
/// profiles give distinct degree sequences. Relaxed only needs positive
/// blocks, so the selection also works for small r.
enum class ProfileRules { Strict, Relaxed };

void validate_profile(const DegreeProfile& profile, ProfileRules rules = ProfileRules::Strict);

/// Splits S \ {s_1} into consecutive blocks of sizes x_1..x_{t+1} in side
/// order; F_j for j in block i is the line through s_j and the i-th vertex
/// of V_1 \ {s_1}; F_1 is the least-indexed line other than S through s_1.
ConstructionSpec select_F_by_profile(PartiteHypergraph base, std::size_t s_edge, const DegreeProfile& profile,
                                     ProfileRules rules = ProfileRules::Strict);

struct ProfileCount {
  std::size_t r = 0;
  std::size_t t = 0;
  std::size_t lo = 0;  // smallest admissible x
  std::size_t hi = 0;  // floor(sqrt r)
  std::optional<std::uint64_t> count;        // multiset coefficient; nullopt on overflow
  std::optional<std::uint64_t> lower_bound;  // C(t + floor(sqrt r) - (t+2) - 1, t)
  std::string note;
};

std::size_t isqrt(std::size_t n) noexcept;
std::size_t profile_t(std::size_t r, double delta);
ProfileCount profile_count(std::size_t r, double delta);
ProfileCount profile_count_for_t(std::size_t r, std::size_t t);
/// All admissible multisets {x_1..x_t}, each nondecreasing, lexicographic.
std::vector<std::vector<std::size_t>> enumerate_profiles(std::size_t r, std::size_t t);

}  // namespace ryser
