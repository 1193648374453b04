#include <algorithm>
#include <map>

#include "ryser/analysis.hpp"
#include "ryser/error.hpp"

namespace ryser {

namespace {

struct IsoData {
  const PartiteHypergraph& h;
  std::size_t n;
  std::vector<Bitset> incidence;                  // vertex -> edges containing it
  std::vector<std::vector<std::size_t>> codeg;    // pairwise codegree
  std::vector<std::vector<std::size_t>> signature;

  explicit IsoData(const PartiteHypergraph& g) : h(g), n(g.num_vertices()) {
    incidence.assign(n, Bitset(g.num_edges()));
    for (std::size_t e = 0; e < g.num_edges(); ++e)
      for (auto v : g.edge(e)) incidence[v].set(e);
    codeg.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t w = 0; w < n; ++w) codeg[u][w] = incidence[u].intersection_count(incidence[w]);
    signature.resize(n);
    for (std::size_t u = 0; u < n; ++u) {
      auto& sig = signature[u];
      sig.push_back(codeg[u][u]);
      sig.push_back(g.side_size(g.vertex(static_cast<std::uint32_t>(u)).side));
      std::vector<std::size_t> edge_sizes;
      incidence[u].for_each([&](std::size_t e) { edge_sizes.push_back(g.edge(e).size()); });
      std::sort(edge_sizes.begin(), edge_sizes.end());
      std::vector<std::pair<std::size_t, std::size_t>> nbr;  // (codegree, neighbour degree)
      for (std::size_t w = 0; w < n; ++w)
        if (w != u && codeg[u][w]) nbr.emplace_back(codeg[u][w], codeg[w][w]);
      std::sort(nbr.begin(), nbr.end());
      sig.push_back(edge_sizes.size());
      sig.insert(sig.end(), edge_sizes.begin(), edge_sizes.end());
      for (auto [c, d] : nbr) {
        sig.push_back(c);
        sig.push_back(d);
      }
    }
  }
};

std::vector<std::size_t> sorted_side_sizes(const PartiteHypergraph& h) {
  std::vector<std::size_t> v;
  for (std::size_t s = 0; s < h.num_sides(); ++s) v.push_back(h.side_size(s));
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::size_t> sorted_edge_sizes(const PartiteHypergraph& h) {
  std::vector<std::size_t> v;
  for (std::size_t e = 0; e < h.num_edges(); ++e) v.push_back(h.edge(e).size());
  std::sort(v.begin(), v.end());
  return v;
}

struct Matcher {
  const IsoData& a;
  const IsoData& b;
  std::vector<std::size_t> order;                  // a-vertices in assignment order
  std::vector<std::vector<std::size_t>> closing;   // edges of a completed at step k
  std::vector<std::int64_t> map_ab, map_ba;
  std::vector<std::int64_t> side_ab, side_ba;

  Matcher(const IsoData& x, const IsoData& y) : a(x), b(y) {
    map_ab.assign(a.n, -1);
    map_ba.assign(b.n, -1);
    side_ab.assign(a.h.num_sides(), -1);
    side_ba.assign(b.h.num_sides(), -1);

    std::map<std::vector<std::size_t>, std::size_t> class_size;
    for (const auto& s : a.signature) ++class_size[s];
    std::vector<bool> placed(a.n, false);
    std::vector<std::size_t> links(a.n, 0);
    for (std::size_t step = 0; step < a.n; ++step) {
      std::size_t best = a.n;
      for (std::size_t u = 0; u < a.n; ++u) {
        if (placed[u]) continue;
        if (best == a.n || links[u] > links[best] ||
            (links[u] == links[best] && class_size[a.signature[u]] < class_size[a.signature[best]]))
          best = u;
      }
      placed[best] = true;
      order.push_back(best);
      for (std::size_t w = 0; w < a.n; ++w)
        if (a.codeg[best][w]) ++links[w];
    }
    std::vector<std::size_t> pos(a.n);
    for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = k;
    closing.resize(a.n);
    for (std::size_t e = 0; e < a.h.num_edges(); ++e) {
      std::size_t last = 0;
      for (auto v : a.h.edge(e)) last = std::max(last, pos[v]);
      closing[last].push_back(e);
    }
  }

  bool feasible(std::size_t u, std::size_t w, std::size_t step) const {
    if (map_ba[w] >= 0 || a.signature[u] != b.signature[w]) return false;
    const auto su = a.h.vertex(static_cast<std::uint32_t>(u)).side;
    const auto sw = b.h.vertex(static_cast<std::uint32_t>(w)).side;
    if (side_ab[su] >= 0) {
      if (side_ab[su] != static_cast<std::int64_t>(sw)) return false;
    } else {
      if (side_ba[sw] >= 0 || a.h.side_size(su) != b.h.side_size(sw)) return false;
    }
    for (std::size_t k = 0; k < step; ++k) {
      const auto x = order[k];
      if (a.codeg[u][x] != b.codeg[w][static_cast<std::size_t>(map_ab[x])]) return false;
    }
    return true;
  }

  bool edges_close(std::size_t step) const {
    for (auto e : closing[step]) {
      std::vector<std::uint32_t> img;
      for (auto v : a.h.edge(e)) img.push_back(static_cast<std::uint32_t>(map_ab[v]));
      if (!b.h.find_edge(img)) return false;
    }
    return true;
  }

  bool search(std::size_t step) {
    if (step == order.size()) return true;
    const auto u = order[step];
    const auto su = a.h.vertex(static_cast<std::uint32_t>(u)).side;
    for (std::size_t w = 0; w < b.n; ++w) {
      if (!feasible(u, w, step)) continue;
      const auto sw = b.h.vertex(static_cast<std::uint32_t>(w)).side;
      const bool new_side = side_ab[su] < 0;
      map_ab[u] = static_cast<std::int64_t>(w);
      map_ba[w] = static_cast<std::int64_t>(u);
      if (new_side) {
        side_ab[su] = sw;
        side_ba[sw] = su;
      }
      if (edges_close(step) && search(step + 1)) return true;
      map_ab[u] = -1;
      map_ba[w] = -1;
      if (new_side) {
        side_ab[su] = -1;
        side_ba[sw] = -1;
      }
    }
    return false;
  }
};

}  // namespace

IsomorphismResult exact_isomorphic(const PartiteHypergraph& a, const PartiteHypergraph& b) {
  IsomorphismResult res;
  if (a.num_sides() != b.num_sides() || a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() ||
      sorted_side_sizes(a) != sorted_side_sizes(b) || sorted_edge_sizes(a) != sorted_edge_sizes(b) ||
      degree_fingerprint(a) != degree_fingerprint(b)) {
    res.decided_by_invariants = true;
    return res;
  }
  if (a.num_vertices() > kMaxIsoVertices)
    throw Error(ErrorKind::TooLarge, "isomorphism search is limited to " + std::to_string(kMaxIsoVertices) +
                                         " vertices per hypergraph");
  const IsoData da(a), db(b);
  Matcher m(da, db);
  if (!m.search(0)) return res;

  res.isomorphic = true;
  for (std::size_t s = 0; s < a.num_sides(); ++s) {
    // Empty sides never get paired by the search; pair them up in order.
    if (m.side_ab[s] < 0) {
      for (std::size_t t = 0; t < b.num_sides(); ++t) {
        if (m.side_ba[t] < 0 && b.side_size(t) == 0) {
          m.side_ab[s] = static_cast<std::int64_t>(t);
          m.side_ba[t] = static_cast<std::int64_t>(s);
          break;
        }
      }
    }
    res.side_map.push_back(static_cast<std::uint32_t>(m.side_ab[s]));
  }
  for (std::size_t u = 0; u < a.num_vertices(); ++u)
    res.mapping.emplace_back(a.vertex(static_cast<std::uint32_t>(u)),
                             b.vertex(static_cast<std::uint32_t>(m.map_ab[u])));
  return res;
}

bool verify_isomorphism(const PartiteHypergraph& a, const PartiteHypergraph& b,
                        const std::vector<std::pair<VertexId, VertexId>>& mapping) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() || mapping.size() != a.num_vertices())
    return false;
  std::vector<std::int64_t> img(a.num_vertices(), -1);
  std::vector<bool> used(b.num_vertices(), false);
  std::map<std::uint32_t, std::uint32_t> side_img;
  for (const auto& [x, y] : mapping) {
    if (x.side >= a.num_sides() || x.pos >= a.side_size(x.side)) return false;
    if (y.side >= b.num_sides() || y.pos >= b.side_size(y.side)) return false;
    const auto gx = a.global_id(x), gy = b.global_id(y);
    if (img[gx] >= 0 || used[gy]) return false;
    img[gx] = gy;
    used[gy] = true;
    auto [it, fresh] = side_img.emplace(x.side, y.side);
    if (!fresh && it->second != y.side) return false;
  }
  std::map<std::uint32_t, std::uint32_t> side_pre;
  for (const auto& [s, t] : side_img)
    if (!side_pre.emplace(t, s).second) return false;
  for (std::size_t e = 0; e < a.num_edges(); ++e) {
    std::vector<std::uint32_t> im;
    for (auto v : a.edge(e)) im.push_back(static_cast<std::uint32_t>(img[v]));
    if (!b.find_edge(im)) return false;
  }
  return true;
}

}  // namespace ryser
