#include "ryser/construct.hpp"

#include <algorithm>
#include <map>

#include "ryser/error.hpp"

namespace ryser {

namespace {

std::string edge_ref(std::size_t i) { return "edge " + std::to_string(i); }

std::vector<std::string> refs(std::span<const VertexId> vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(to_string(v));
  return out;
}

std::optional<VertexId> vertex_in_side(const PartiteHypergraph& h, std::size_t edge, std::size_t side) {
  for (auto v : h.edge_vertices(edge))
    if (v.side == side) return v;
  return std::nullopt;
}

// Cheap conditions; the exhaustive cover condition is added by validate_spec.
std::vector<SpecViolation> structural_violations(const ConstructionSpec& spec) {
  std::vector<SpecViolation> out;
  const auto& base = spec.base;
  const std::size_t r = base.num_sides();

  if (base.num_edges() == 0 || base.uniform_size() != r) {
    out.push_back({"base_uniform", "base must be r-partite and r-uniform with r = number of sides", {}});
    return out;
  }
  if (spec.s_edge >= base.num_edges()) {
    out.push_back({"index_range", "S edge index out of range", {edge_ref(spec.s_edge)}});
    return out;
  }
  if (spec.f_edges.size() != r) {
    out.push_back({"index_range", "need exactly r edges F_i", {std::to_string(spec.f_edges.size())}});
    return out;
  }
  for (auto f : spec.f_edges) {
    if (f >= base.num_edges()) {
      out.push_back({"index_range", "F edge index out of range", {edge_ref(f)}});
      return out;
    }
  }

  const auto inter = is_intersecting(base);
  if (!inter.intersecting)
    out.push_back({"base_intersecting", "base is not intersecting",
                   {edge_ref(inter.disjoint_pair->first), edge_ref(inter.disjoint_pair->second)}});

  const auto& s_bits = base.edge_bits(spec.s_edge);
  for (std::size_t k = 0; k < base.num_edges(); ++k) {
    if (k == spec.s_edge) continue;
    const auto c = base.edge_bits(k).intersection_count(s_bits);
    if (c != 1) {
      out.push_back({"s_meets_once", "S meets another edge in " + std::to_string(c) + " vertices", {edge_ref(k)}});
      break;
    }
  }

  for (std::size_t i = 0; i < r; ++i) {
    const auto s_i = spec.s_vertex(i);
    if (!base.edge_bits(spec.f_edges[i]).test(base.global_id(s_i))) {
      out.push_back({"s_in_f", "s_" + std::to_string(i + 1) + " not in F_" + std::to_string(i + 1),
                     {to_string(s_i), edge_ref(spec.f_edges[i])}});
    }
  }

  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      Bitset a = base.edge_bits(spec.f_edges[i]);
      Bitset b = base.edge_bits(spec.f_edges[j]);
      a.reset(base.global_id(spec.s_vertex(i)));
      b.reset(base.global_id(spec.s_vertex(j)));
      if (!a.intersects(b)) {
        out.push_back({"f_pairwise", "(F_i - s_i) and (F_j - s_j) are disjoint",
                       {"F_" + std::to_string(i + 1), "F_" + std::to_string(j + 1)}});
      }
    }
  }
  return out;
}

std::string join_indices(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

VertexId ConstructionSpec::s_vertex(std::size_t side) const {
  if (s_edge >= base.num_edges()) throw Error(ErrorKind::SpecInvalid, "S edge index out of range");
  auto v = vertex_in_side(base, s_edge, side);
  if (!v) throw Error(ErrorKind::SpecInvalid, "S has no vertex in side " + std::to_string(side));
  return *v;
}

ConstructionSpec default_spec(PartiteHypergraph base, std::size_t s_edge) {
  ConstructionSpec spec{std::move(base), s_edge, {}};
  const std::size_t r = spec.r();
  for (std::size_t i = 0; i < r; ++i) {
    const auto s_i = spec.base.global_id(spec.s_vertex(i));
    std::optional<std::size_t> f;
    for (std::size_t k = 0; k < spec.base.num_edges() && !f; ++k)
      if (k != s_edge && spec.base.edge_bits(k).test(s_i)) f = k;
    if (!f) throw Error(ErrorKind::LineNotFound, "no edge other than S through s_" + std::to_string(i + 1));
    spec.f_edges.push_back(*f);
  }
  return spec;
}

ConstructionSpec all_s_spec(PartiteHypergraph base, std::size_t s_edge) {
  const std::size_t r = base.num_sides();
  return ConstructionSpec{std::move(base), s_edge, std::vector<std::size_t>(r, s_edge)};
}

ConstructionSpec explicit_spec(PartiteHypergraph base, std::size_t s_edge, std::vector<std::size_t> f_edges) {
  return ConstructionSpec{std::move(base), s_edge, std::move(f_edges)};
}

ValidationResult validate_spec(const ConstructionSpec& spec, const ValidationOptions& opts) {
  ValidationResult res;
  res.violations = structural_violations(spec);
  if (!opts.check_covers) return res;
  const auto& base = spec.base;
  const std::size_t r = base.num_sides();
  if (spec.s_edge >= base.num_edges() || base.num_edges() < 2 || base.uniform_size() != r) return res;

  const auto rest = base.without_edge(spec.s_edge);
  auto cov = cover_number(rest, true, opts.solver);
  res.covers_checked = cov.complete();
  if (!cov.complete()) {
    res.violations.push_back({"covers_incomplete", "cover search did not finish", {}});
  } else {
    if (cov.tau != r - 1) {
      res.violations.push_back({"tau_base_minus_s", "tau(T - S) = " + std::to_string(cov.tau) + ", expected " +
                                                        std::to_string(r - 1),
                                refs(cov.witness)});
    }
    std::vector<std::vector<VertexId>> sides;
    for (std::size_t s = 0; s < r; ++s) {
      std::vector<VertexId> side;
      for (std::size_t p = 0; p < base.side_size(s); ++p)
        side.push_back({static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(p)});
      sides.push_back(std::move(side));
    }
    std::sort(sides.begin(), sides.end());
    if (cov.tau == r - 1 && *cov.all_min_covers != sides) {
      SpecViolation v{"min_covers_are_sides",
                      std::to_string(cov.all_min_covers->size()) + " minimum covers of T - S, not exactly the sides",
                      {}};
      for (const auto& c : *cov.all_min_covers) {
        if (!std::binary_search(sides.begin(), sides.end(), c)) {
          v.witness = refs(c);
          break;
        }
      }
      res.violations.push_back(std::move(v));
    }
  }
  res.base_minus_s = std::move(cov);
  return res;
}

std::optional<Provenance> parse_provenance(const std::string& label) {
  if (label.size() < 4 || label[0] != 'E' || label[2] != ':') return std::nullopt;
  Provenance p;
  switch (label[1]) {
    case '1': p.family = EdgeFamily::E1; break;
    case '2': p.family = EdgeFamily::E2; break;
    case '3': p.family = EdgeFamily::E3; break;
    default: return std::nullopt;
  }
  std::size_t cur = 0;
  bool digit = false;
  for (std::size_t i = 3; i <= label.size(); ++i) {
    if (i == label.size() || label[i] == ',') {
      if (!digit) return std::nullopt;
      p.indices.push_back(cur);
      cur = 0;
      digit = false;
    } else if (label[i] >= '0' && label[i] <= '9') {
      cur = cur * 10 + static_cast<std::size_t>(label[i] - '0');
      digit = true;
    } else {
      return std::nullopt;
    }
  }
  return p;
}

PartiteHypergraph build_H(const ConstructionSpec& spec) {
  auto bad = structural_violations(spec);
  if (!bad.empty()) throw Error(ErrorKind::SpecInvalid, bad.front().condition + ": " + bad.front().detail);

  const auto& base = spec.base;
  const auto r = static_cast<std::uint32_t>(base.num_sides());
  auto sides = base.sides();
  std::vector<std::string> extra;
  for (std::uint32_t i = 1; i <= r; ++i) extra.push_back("v" + std::to_string(i));
  sides.push_back(std::move(extra));

  std::vector<VertexId> s(r);
  for (std::uint32_t i = 0; i < r; ++i) s[i] = spec.s_vertex(i);

  std::vector<EdgeSpec> edges;
  for (std::size_t k = 0; k < base.num_edges(); ++k) {
    if (k == spec.s_edge) continue;
    auto vs = base.edge_vertices(k);
    std::uint32_t hit = r;
    for (std::uint32_t i = 0; i < r; ++i)
      if (std::find(vs.begin(), vs.end(), s[i]) != vs.end()) hit = i;
    vs.push_back({r, hit});
    edges.push_back({std::move(vs), "E1:" + std::to_string(k)});
  }

  std::map<std::vector<VertexId>, std::size_t> e2_slot;
  std::vector<std::vector<std::size_t>> e2_members;
  std::vector<std::vector<VertexId>> e2_vertices;
  for (std::uint32_t i = 0; i < r; ++i) {
    auto vs = base.edge_vertices(spec.f_edges[i]);
    std::sort(vs.begin(), vs.end());
    auto [it, fresh] = e2_slot.emplace(vs, e2_members.size());
    if (fresh) {
      e2_members.emplace_back();
      e2_vertices.push_back(vs);
    }
    e2_members[it->second].push_back(i + 1);
  }
  for (std::size_t k = 0; k < e2_members.size(); ++k)
    edges.push_back({e2_vertices[k], "E2:" + join_indices(e2_members[k])});

  for (std::uint32_t i = 0; i < r; ++i) {
    std::vector<VertexId> vs;
    for (auto v : base.edge_vertices(spec.f_edges[i]))
      if (v != s[i]) vs.push_back(v);
    vs.push_back({r, i});
    edges.push_back({std::move(vs), "E3:" + std::to_string(i + 1)});
  }

  std::string name = "H(" + (base.name().empty() ? std::string("T") : base.name()) + ")";
  return PartiteHypergraph(std::move(sides), std::move(edges), std::move(name));
}

std::vector<VertexId> cover_mirror(std::span<const VertexId> cover, const ConstructionSpec& spec) {
  const auto r = static_cast<std::uint32_t>(spec.r());
  std::vector<VertexId> out;
  for (const auto& v : cover) {
    if (v.side == r) {
      if (v.pos < r) out.push_back(spec.s_vertex(v.pos));
    } else if (v.side < r && v.pos < spec.base.side_size(v.side)) {
      out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PartiteHypergraph uniformize(const PartiteHypergraph& h) {
  if (h.num_edges() == 0 || h.min_edge_size() == h.max_edge_size()) return h;
  const std::size_t small = h.min_edge_size();
  if (h.num_sides() != small + 1)
    throw Error(ErrorKind::BadEdgeSize, "edges of size " + std::to_string(small) + " in a " +
                                            std::to_string(h.num_sides()) + "-partite hypergraph miss more than one side");
  auto sides = h.sides();
  auto edges = h.edge_specs();
  std::size_t fresh = 0;
  for (auto& e : edges) {
    if (e.vertices.size() != small) continue;
    std::vector<bool> present(h.num_sides(), false);
    for (const auto& v : e.vertices) present[v.side] = true;
    const auto missing = static_cast<std::uint32_t>(std::find(present.begin(), present.end(), false) - present.begin());
    e.vertices.push_back({missing, static_cast<std::uint32_t>(sides[missing].size())});
    sides[missing].push_back("t" + std::to_string(++fresh));
  }
  return PartiteHypergraph(std::move(sides), std::move(edges), h.name() + "+u");
}

PartiteHypergraph extract_S_subhypergraph(const PartiteHypergraph& h) {
  if (!h.has_labels()) throw Error(ErrorKind::MissingLabels, "provenance labels are required");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    auto p = parse_provenance(h.edge_label(i));
    if (!p) throw Error(ErrorKind::MissingLabels, "edge " + std::to_string(i) + " has no provenance label");
    if (p->family != EdgeFamily::E1) keep.push_back(i);
  }
  auto out = h.with_edges(keep);
  out.set_name("S(" + h.name() + ")");
  return out;
}

}  // namespace ryser
