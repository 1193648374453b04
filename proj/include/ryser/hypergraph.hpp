#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ryser/bitset.hpp"

namespace ryser {

/// A vertex named by its side and its position within that side.
struct VertexId {
  std::uint32_t side = 0;
  std::uint32_t pos = 0;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

/// "side.pos" rendering used by the .rhg format and JSON reports.
std::string to_string(VertexId v);
VertexId parse_vertex_ref(std::string_view text);

struct EdgeSpec {
  std::vector<VertexId> vertices;
  std::string label;  // provenance tag, empty when absent
};

/// Finite partite hypergraph with (possibly) mixed edge sizes in {m, m+1}.
///
/// Vertices are numbered globally side-major; every edge is kept both as a
/// sorted global-id list and as a bitset over that numbering. The constructor
/// rejects partiteness violations, duplicate edges, empty edges, and edge
/// size spreads larger than one.
class PartiteHypergraph {
 public:
  PartiteHypergraph() = default;
  PartiteHypergraph(std::vector<std::vector<std::string>> side_labels, std::vector<EdgeSpec> edges,
                    std::string name = {});

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  std::size_t num_sides() const noexcept { return sides_.size(); }
  std::size_t side_size(std::size_t side) const { return sides_.at(side).size(); }
  const std::vector<std::vector<std::string>>& sides() const noexcept { return sides_; }
  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::uint32_t global_id(VertexId v) const;
  VertexId vertex(std::uint32_t global) const { return vertex_of_[global]; }
  const std::string& vertex_label(VertexId v) const { return sides_.at(v.side).at(v.pos); }
  /// Global ids of side `side`, a contiguous range.
  std::pair<std::uint32_t, std::uint32_t> side_range(std::size_t side) const {
    return {offsets_[side], offsets_[side + 1]};
  }

  const std::vector<std::uint32_t>& edge(std::size_t i) const { return edges_[i]; }
  const Bitset& edge_bits(std::size_t i) const { return bits_[i]; }
  const std::string& edge_label(std::size_t i) const { return labels_[i]; }
  std::vector<VertexId> edge_vertices(std::size_t i) const;
  std::vector<EdgeSpec> edge_specs() const;

  std::size_t min_edge_size() const noexcept { return min_size_; }
  std::size_t max_edge_size() const noexcept { return max_size_; }
  std::optional<std::size_t> uniform_size() const noexcept {
    if (edges_.empty() || min_size_ != max_size_) return std::nullopt;
    return min_size_;
  }
  bool has_labels() const noexcept;

  /// Index of the edge with exactly these global ids (any order).
  std::optional<std::size_t> find_edge(std::span<const std::uint32_t> globals) const;
  std::optional<std::size_t> find_edge(std::span<const VertexId> vertices) const;

  Bitset make_vertex_set() const { return Bitset(num_vertices_); }
  Bitset to_bits(std::span<const VertexId> vertices) const;
  bool covers(const Bitset& vertices) const;

  /// Same vertex set, edges restricted to `keep` (in the given order).
  PartiteHypergraph with_edges(std::span<const std::size_t> keep) const;
  PartiteHypergraph without_edge(std::size_t i) const;
  PartiteHypergraph without_labels() const;

  friend bool operator==(const PartiteHypergraph& a, const PartiteHypergraph& b) {
    return a.name_ == b.name_ && a.sides_ == b.sides_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
  }

 private:
  std::string name_;
  std::vector<std::vector<std::string>> sides_;
  std::vector<std::uint32_t> offsets_;
  std::vector<VertexId> vertex_of_;
  std::size_t num_vertices_ = 0;
  std::vector<std::vector<std::uint32_t>> edges_;
  std::vector<Bitset> bits_;
  std::vector<std::string> labels_;
  std::map<std::vector<std::uint32_t>, std::size_t> index_;
  std::size_t min_size_ = 0;
  std::size_t max_size_ = 0;
};

struct IntersectingResult {
  bool intersecting = true;
  std::optional<std::pair<std::size_t, std::size_t>> disjoint_pair;
};

/// Throws EmptyHypergraph when `h` has no edges.
IntersectingResult is_intersecting(const PartiteHypergraph& h);

/// Multiset of pairwise edge intersection sizes, as size -> number of pairs.
using IntersectionProfile = std::map<std::size_t, std::size_t>;
IntersectionProfile intersection_size_profile(const PartiteHypergraph& h);

/// Pairs (i, j), i < j, whose intersection has exactly `size` vertices.
std::vector<std::pair<std::size_t, std::size_t>> pairs_with_intersection(const PartiteHypergraph& h,
                                                                         std::size_t size);

namespace serial {
IntersectingResult is_intersecting(const PartiteHypergraph& h);
IntersectionProfile intersection_size_profile(const PartiteHypergraph& h);
}  // namespace serial

struct DegreeStats {
  /// per_side[s][pos] = degree of vertex (s, pos).
  std::vector<std::vector<std::size_t>> per_side;

  std::vector<std::size_t> side_multiset(std::size_t side) const;
  std::vector<std::size_t> side_nonzero_multiset(std::size_t side) const;
  std::vector<std::size_t> global_multiset() const;
  std::size_t total() const;
};

DegreeStats degree_stats(const PartiteHypergraph& h);

/// Vertex-disjoint union with sides merged index-wise (side i of the result
/// is side i of `a` followed by side i of `b`).
PartiteHypergraph disjoint_union(const PartiteHypergraph& a, const PartiteHypergraph& b);

}  // namespace ryser
