#include "ryser/hypergraph.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <limits>

#include "ryser/error.hpp"

namespace ryser {

std::string to_string(VertexId v) { return std::to_string(v.side) + "." + std::to_string(v.pos); }

VertexId parse_vertex_ref(std::string_view text) {
  const auto dot = text.find('.');
  VertexId v;
  if (dot == std::string_view::npos) throw Error(ErrorKind::ParseError, "bad vertex ref '" + std::string(text) + "'");
  auto [p1, e1] = std::from_chars(text.data(), text.data() + dot, v.side);
  auto [p2, e2] = std::from_chars(text.data() + dot + 1, text.data() + text.size(), v.pos);
  if (e1 != std::errc{} || p1 != text.data() + dot || e2 != std::errc{} || p2 != text.data() + text.size() ||
      dot == 0 || dot + 1 == text.size()) {
    throw Error(ErrorKind::ParseError, "bad vertex ref '" + std::string(text) + "'");
  }
  return v;
}

PartiteHypergraph::PartiteHypergraph(std::vector<std::vector<std::string>> side_labels,
                                     std::vector<EdgeSpec> edges, std::string name)
    : name_(std::move(name)), sides_(std::move(side_labels)) {
  offsets_.assign(1, 0);
  for (std::size_t s = 0; s < sides_.size(); ++s) {
    for (std::size_t p = 0; p < sides_[s].size(); ++p)
      vertex_of_.push_back({static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(p)});
    offsets_.push_back(static_cast<std::uint32_t>(vertex_of_.size()));
  }
  num_vertices_ = vertex_of_.size();

  edges_.reserve(edges.size());
  bits_.reserve(edges.size());
  labels_.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& spec = edges[i];
    if (spec.vertices.empty()) throw Error(ErrorKind::BadEdgeSize, "edge " + std::to_string(i) + " is empty");
    std::vector<std::uint32_t> ids;
    ids.reserve(spec.vertices.size());
    for (const auto& v : spec.vertices) {
      if (v.side >= sides_.size() || v.pos >= sides_[v.side].size())
        throw Error(ErrorKind::InvalidVertex, "edge " + std::to_string(i) + " references " + to_string(v));
      ids.push_back(global_id(v));
    }
    std::sort(ids.begin(), ids.end());
    for (std::size_t a = 1; a < ids.size(); ++a) {
      if (vertex_of_[ids[a]].side == vertex_of_[ids[a - 1]].side)
        throw Error(ErrorKind::PartitenessViolation,
                    "edge " + std::to_string(i) + " has two vertices in side " + std::to_string(vertex_of_[ids[a]].side));
    }
    if (!index_.emplace(ids, i).second)
      throw Error(ErrorKind::DuplicateEdge, "edge " + std::to_string(i) + " repeats edge " + std::to_string(index_[ids]));
    Bitset b(num_vertices_);
    for (auto g : ids) b.set(g);
    if (i == 0) {
      min_size_ = max_size_ = ids.size();
    } else {
      min_size_ = std::min(min_size_, ids.size());
      max_size_ = std::max(max_size_, ids.size());
    }
    edges_.push_back(std::move(ids));
    bits_.push_back(std::move(b));
    labels_.push_back(std::move(spec.label));
  }
  if (max_size_ > min_size_ + 1)
    throw Error(ErrorKind::NonUniform, "edge sizes span " + std::to_string(min_size_) + ".." + std::to_string(max_size_));
}

std::uint32_t PartiteHypergraph::global_id(VertexId v) const {
  if (v.side >= sides_.size() || v.pos >= sides_[v.side].size())
    throw Error(ErrorKind::InvalidVertex, "no vertex " + to_string(v));
  return offsets_[v.side] + v.pos;
}

std::vector<VertexId> PartiteHypergraph::edge_vertices(std::size_t i) const {
  std::vector<VertexId> out;
  out.reserve(edges_[i].size());
  for (auto g : edges_[i]) out.push_back(vertex_of_[g]);
  return out;
}

std::vector<EdgeSpec> PartiteHypergraph::edge_specs() const {
  std::vector<EdgeSpec> out;
  out.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) out.push_back({edge_vertices(i), labels_[i]});
  return out;
}

bool PartiteHypergraph::has_labels() const noexcept {
  return !labels_.empty() && std::all_of(labels_.begin(), labels_.end(), [](const auto& l) { return !l.empty(); });
}

std::optional<std::size_t> PartiteHypergraph::find_edge(std::span<const std::uint32_t> globals) const {
  std::vector<std::uint32_t> key(globals.begin(), globals.end());
  std::sort(key.begin(), key.end());
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> PartiteHypergraph::find_edge(std::span<const VertexId> vertices) const {
  std::vector<std::uint32_t> ids;
  for (const auto& v : vertices) {
    if (v.side >= sides_.size() || v.pos >= sides_[v.side].size()) return std::nullopt;
    ids.push_back(global_id(v));
  }
  return find_edge(ids);
}

Bitset PartiteHypergraph::to_bits(std::span<const VertexId> vertices) const {
  Bitset b(num_vertices_);
  for (const auto& v : vertices) b.set(global_id(v));
  return b;
}

bool PartiteHypergraph::covers(const Bitset& vertices) const {
  return std::all_of(bits_.begin(), bits_.end(), [&](const Bitset& e) { return e.intersects(vertices); });
}

PartiteHypergraph PartiteHypergraph::with_edges(std::span<const std::size_t> keep) const {
  std::vector<EdgeSpec> specs;
  specs.reserve(keep.size());
  for (auto i : keep) specs.push_back({edge_vertices(i), labels_.at(i)});
  return PartiteHypergraph(sides_, std::move(specs), name_);
}

PartiteHypergraph PartiteHypergraph::without_edge(std::size_t i) const {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < edges_.size(); ++j)
    if (j != i) keep.push_back(j);
  return with_edges(keep);
}

PartiteHypergraph PartiteHypergraph::without_labels() const {
  auto specs = edge_specs();
  for (auto& s : specs) s.label.clear();
  return PartiteHypergraph(sides_, std::move(specs), name_);
}

namespace serial {

IntersectingResult is_intersecting(const PartiteHypergraph& h) {
  if (h.num_edges() == 0) throw Error(ErrorKind::EmptyHypergraph, "is_intersecting needs at least one edge");
  for (std::size_t i = 0; i < h.num_edges(); ++i)
    for (std::size_t j = i + 1; j < h.num_edges(); ++j)
      if (!h.edge_bits(i).intersects(h.edge_bits(j))) return {false, std::pair{i, j}};
  return {};
}

IntersectionProfile intersection_size_profile(const PartiteHypergraph& h) {
  IntersectionProfile out;
  for (std::size_t i = 0; i < h.num_edges(); ++i)
    for (std::size_t j = i + 1; j < h.num_edges(); ++j) ++out[h.edge_bits(i).intersection_count(h.edge_bits(j))];
  return out;
}

}  // namespace serial

IntersectingResult is_intersecting(const PartiteHypergraph& h) {
  if (h.num_edges() == 0) throw Error(ErrorKind::EmptyHypergraph, "is_intersecting needs at least one edge");
  const auto m = static_cast<std::int64_t>(h.num_edges());
  // Smallest (i, j) in lexicographic order, so the witness matches the
  // serial scan.
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
  for (std::int64_t i = 0; i < m; ++i) {
    for (std::int64_t j = i + 1; j < m; ++j) {
      if (!h.edge_bits(static_cast<std::size_t>(i)).intersects(h.edge_bits(static_cast<std::size_t>(j)))) {
        best = std::min(best, i * m + j);
        break;
      }
    }
  }
  if (best == std::numeric_limits<std::int64_t>::max()) return {};
  return {false, std::pair{static_cast<std::size_t>(best / m), static_cast<std::size_t>(best % m)}};
}

IntersectionProfile intersection_size_profile(const PartiteHypergraph& h) {
  const auto m = static_cast<std::int64_t>(h.num_edges());
  const std::size_t width = h.max_edge_size() + 1;
  std::vector<std::size_t> counts(width, 0);
#pragma omp parallel
  {
    std::vector<std::size_t> local(width, 0);
#pragma omp for schedule(dynamic, 8) nowait
    for (std::int64_t i = 0; i < m; ++i)
      for (std::int64_t j = i + 1; j < m; ++j)
        ++local[h.edge_bits(static_cast<std::size_t>(i)).intersection_count(h.edge_bits(static_cast<std::size_t>(j)))];
#pragma omp critical
    for (std::size_t s = 0; s < width; ++s) counts[s] += local[s];
  }
  IntersectionProfile out;
  for (std::size_t s = 0; s < width; ++s)
    if (counts[s]) out[s] = counts[s];
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> pairs_with_intersection(const PartiteHypergraph& h,
                                                                         std::size_t size) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < h.num_edges(); ++i)
    for (std::size_t j = i + 1; j < h.num_edges(); ++j)
      if (h.edge_bits(i).intersection_count(h.edge_bits(j)) == size) out.emplace_back(i, j);
  return out;
}

std::vector<std::size_t> DegreeStats::side_multiset(std::size_t side) const {
  auto v = per_side.at(side);
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::size_t> DegreeStats::side_nonzero_multiset(std::size_t side) const {
  std::vector<std::size_t> v;
  for (auto d : per_side.at(side))
    if (d) v.push_back(d);
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::size_t> DegreeStats::global_multiset() const {
  std::vector<std::size_t> v;
  for (const auto& s : per_side) v.insert(v.end(), s.begin(), s.end());
  std::sort(v.begin(), v.end());
  return v;
}

std::size_t DegreeStats::total() const {
  std::size_t t = 0;
  for (const auto& s : per_side)
    for (auto d : s) t += d;
  return t;
}

DegreeStats degree_stats(const PartiteHypergraph& h) {
  DegreeStats st;
  st.per_side.resize(h.num_sides());
  for (std::size_t s = 0; s < h.num_sides(); ++s) st.per_side[s].assign(h.side_size(s), 0);
  for (std::size_t i = 0; i < h.num_edges(); ++i)
    for (auto g : h.edge(i)) {
      const auto v = h.vertex(g);
      ++st.per_side[v.side][v.pos];
    }
  return st;
}

PartiteHypergraph disjoint_union(const PartiteHypergraph& a, const PartiteHypergraph& b) {
  const std::size_t n = std::max(a.num_sides(), b.num_sides());
  std::vector<std::vector<std::string>> sides(n);
  std::vector<std::uint32_t> shift(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (s < a.num_sides())
      for (const auto& l : a.sides()[s]) sides[s].push_back("a" + l);
    shift[s] = static_cast<std::uint32_t>(sides[s].size());
    if (s < b.num_sides())
      for (const auto& l : b.sides()[s]) sides[s].push_back("b" + l);
  }
  auto edges = a.edge_specs();
  for (auto e : b.edge_specs()) {
    for (auto& v : e.vertices) v.pos += shift[v.side];
    edges.push_back(std::move(e));
  }
  return PartiteHypergraph(std::move(sides), std::move(edges), a.name() + "+" + b.name());
}

}  // namespace ryser
