#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ryser/construct.hpp"
#include "ryser/hypergraph.hpp"
#include "ryser/solver.hpp"

namespace ryser {

// ---- minimality ----------------------------------------------------------

enum class DeletionOrder { Ascending, Descending };

struct EdgeCertificate {
  std::size_t edge = 0;  // index in the input hypergraph
  std::size_t tau = 0;   // cover number after deleting the edge
  std::vector<VertexId> witness;
  bool complete = true;
};

struct MinimizationTrace {
  std::size_t target_tau = 0;  // number of sides minus one
  std::vector<std::size_t> deleted;
  std::vector<std::size_t> kept;  // input indices of the edges of `final_graph`
  PartiteHypergraph final_graph;
  /// One per deleted edge: tau stayed at target_tau.
  std::vector<EdgeCertificate> deletion_certificates;
  /// One per kept edge, computed on final_graph: tau drops to target_tau - 1.
  std::vector<EdgeCertificate> kept_certificates;
  bool complete = true;
};

/// Greedily deletes edges (in `order`) while the cover number stays at
/// sides - 1. Throws NotExtremal unless the input is intersecting with
/// cover number sides - 1.
MinimizationTrace minimize(const PartiteHypergraph& h, DeletionOrder order = DeletionOrder::Ascending,
                           const SolverOptions& opts = {});

// ---- isomorphism invariants ---------------------------------------------

struct DegreeFingerprint {
  std::vector<std::pair<std::size_t, std::size_t>> counts;  // (degree, multiplicity), ascending

  /// e.g. "1x4,3x12".
  std::string encode() const;
  friend bool operator==(const DegreeFingerprint&, const DegreeFingerprint&) = default;
};

DegreeFingerprint degree_fingerprint(const PartiteHypergraph& h);

/// Drops vertices of degree zero; sides are kept (possibly empty).
PartiteHypergraph restrict_to_non_isolated(const PartiteHypergraph& h);

struct IsomorphismResult {
  bool isomorphic = false;
  /// Side of `b` receiving each side of `a`; only meaningful when isomorphic.
  std::vector<std::uint32_t> side_map;
  std::vector<std::pair<VertexId, VertexId>> mapping;  // a-vertex -> b-vertex
  bool decided_by_invariants = false;
};

inline constexpr std::size_t kMaxIsoVertices = 64;

/// Isomorphisms are side permutations composed with within-side bijections.
/// Instances that differ in cheap invariants (counts, degree fingerprint)
/// are rejected without search; otherwise both must have at most
/// kMaxIsoVertices vertices (TooLarge).
IsomorphismResult exact_isomorphic(const PartiteHypergraph& a, const PartiteHypergraph& b);

bool verify_isomorphism(const PartiteHypergraph& a, const PartiteHypergraph& b,
                        const std::vector<std::pair<VertexId, VertexId>>& mapping);

// ---- maximality ----------------------------------------------------------

enum class ExtensionClass { Type1, Type2, AlreadyPresent, Violation };
std::string_view to_string(ExtensionClass c) noexcept;

/// A candidate new edge: one existing vertex from every side except
/// `fresh_side`, which (when set) receives a vertex outside V(H).
struct ExtensionCandidate {
  std::optional<std::uint32_t> fresh_side;
  std::vector<VertexId> transversal;
  ExtensionClass cls = ExtensionClass::Violation;
  std::size_t index = 0;  // i (1-based) for Type1 / Type2
};

struct ExtensionOptions {
  bool prune = true;  // false: test every transversal
  SolverOptions solver;
};

struct ExtensionClassification {
  std::size_t r = 0;
  std::size_t tau = 0;
  bool hypotheses_hold = false;  // r >= 5 and F_i distinct, none equal to S
  std::vector<std::string> warnings;
  std::vector<ExtensionCandidate> candidates;
  std::uint64_t transversals_tested = 0;

  std::size_t count(ExtensionClass c) const;
  bool confirmed() const { return count(ExtensionClass::Violation) == 0; }
};

/// Enumerates every covering transversal of H with at most one fresh
/// vertex and classifies it. Throws NotExtremal unless tau(H) = r.
ExtensionClassification classify_extensions(const PartiteHypergraph& h, const ConstructionSpec& spec,
                                            const ExtensionOptions& opts = {});

struct TwinFamily {
  ExtensionClass type = ExtensionClass::Type1;
  std::size_t index = 0;           // i, 1-based
  std::vector<VertexId> core;      // F_i, or F_i - s_i + v_i
  std::uint32_t fresh_side = 0;    // side r for type 1, side i-1 for type 2

  bool contains(std::span<const VertexId> existing, std::uint32_t fresh) const;
};

struct ClosureDescription {
  std::size_t r = 0;
  std::vector<TwinFamily> families;
};

/// The finite description of the maximal closure: H plus 2r twin families.
/// Throws ViolationsPresent when the classification found violations.
ClosureDescription maximal_closure_description(const PartiteHypergraph& h, const ConstructionSpec& spec,
                                               const ExtensionClassification& cls);

}  // namespace ryser
