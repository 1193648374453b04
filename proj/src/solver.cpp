#include "ryser/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <string>

#include "ryser/error.hpp"
#include "search.hpp"

namespace ryser {

double default_timeout_secs() {
  if (const char* env = std::getenv("RYSER_TIMEOUT_SECS")) {
    try {
      const double v = std::stod(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return 60.0;
}

namespace {

search::Problem make_problem(const PartiteHypergraph& h) {
  search::Problem p;
  p.num_vertices = h.num_vertices();
  p.edges.reserve(h.num_edges());
  for (std::size_t i = 0; i < h.num_edges(); ++i) p.edges.push_back(h.edge_bits(i));
  p.max_edge_size = h.max_edge_size();
  return p;
}

std::vector<VertexId> to_vertices(const PartiteHypergraph& h, const Bitset& b) {
  std::vector<VertexId> out;
  b.for_each([&](std::size_t g) { out.push_back(h.vertex(static_cast<std::uint32_t>(g))); });
  return out;
}

std::chrono::steady_clock::time_point deadline_after(double secs) {
  return std::chrono::steady_clock::now() +
         std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(secs));
}

search::Outcome run_search(const search::Problem& p, std::size_t budget, bool enumerate, unsigned jobs,
                           search::Control& ctl) {
  if (jobs == 1) {
    search::Node root{Bitset(p.num_vertices), Bitset(p.num_vertices), 0};
    return search::serial::run(p, root, budget, enumerate, ctl);
  }
  return search::parallel::run(p, budget, enumerate, jobs, ctl);
}

}  // namespace

CoverResult cover_number(const PartiteHypergraph& h, bool enumerate_all, const SolverOptions& opts) {
  if (h.num_edges() == 0) throw Error(ErrorKind::EmptyHypergraph, "cover_number needs at least one edge");
  const auto problem = make_problem(h);
  search::Control ctl;
  ctl.deadline = deadline_after(opts.timeout_secs);

  CoverResult res;
  const Bitset empty(problem.num_vertices);
  std::size_t k = std::max<std::size_t>(1, search::greedy_lower_bound(problem, empty, empty));
  while (true) {
    if (opts.upper_hint && k > *opts.upper_hint) {
      res.status = SearchStatus::HintExceeded;
      break;
    }
    auto out = run_search(problem, k, false, opts.jobs, ctl);
    if (ctl.timed_out) {
      res.status = SearchStatus::Timeout;
      break;
    }
    if (out.found) {
      res.tau = k;
      res.witness = to_vertices(h, out.covers.front());
      break;
    }
    ++k;
  }

  if (res.complete() && enumerate_all) {
    auto out = run_search(problem, res.tau, true, opts.jobs, ctl);
    if (ctl.timed_out) {
      res.status = SearchStatus::Timeout;
    } else {
      std::vector<std::vector<VertexId>> covers;
      covers.reserve(out.covers.size());
      for (const auto& c : out.covers) covers.push_back(to_vertices(h, c));
      std::sort(covers.begin(), covers.end());
      res.all_min_covers = std::move(covers);
    }
  }
  res.nodes_explored = ctl.nodes.load();
  return res;
}

namespace {

struct MatchingSearch {
  const PartiteHypergraph& h;
  search::Control& ctl;
  std::size_t min_size;
  std::vector<std::size_t> current;
  std::vector<std::size_t> best;
  std::uint64_t nodes = 0;

  // Edges j >= from disjoint from `used`, capped by the free-vertex count.
  std::size_t upper_bound(std::size_t from, const Bitset& used) const {
    std::size_t compatible = 0;
    for (std::size_t j = from; j < h.num_edges(); ++j)
      if (!h.edge_bits(j).intersects(used)) ++compatible;
    const std::size_t free = h.num_vertices() - used.count();
    return std::min(compatible, free / min_size);
  }

  bool visit(std::size_t from, Bitset& used) {
    if ((++nodes & 255U) == 0 && ctl.expired()) return true;
    if (current.size() > best.size()) best = current;
    if (from >= h.num_edges()) return false;
    if (current.size() + upper_bound(from, used) <= best.size()) return false;
    for (std::size_t j = from; j < h.num_edges(); ++j) {
      const auto& e = h.edge_bits(j);
      if (e.intersects(used)) continue;
      Bitset next = used;
      next |= e;
      current.push_back(j);
      if (visit(j + 1, next)) return true;
      current.pop_back();
      if (current.size() + upper_bound(j + 1, used) <= best.size()) break;
    }
    return false;
  }
};

}  // namespace

MatchingResult matching_number(const PartiteHypergraph& h, const SolverOptions& opts) {
  MatchingResult res;
  if (h.num_edges() == 0) return res;
  search::Control ctl;
  ctl.deadline = deadline_after(opts.timeout_secs);
  MatchingSearch ms{h, ctl, std::max<std::size_t>(1, h.min_edge_size()), {}, {}, 0};
  Bitset used(h.num_vertices());
  ms.visit(0, used);
  res.nu = ms.best.size();
  res.witness = ms.best;
  res.nodes_explored = ms.nodes;
  if (ctl.timed_out) res.status = SearchStatus::Timeout;
  return res;
}

RatioReport verify_ryser_ratio(const PartiteHypergraph& h, const SolverOptions& opts) {
  if (h.num_edges() == 0) throw Error(ErrorKind::EmptyHypergraph, "verify_ryser_ratio needs at least one edge");
  const auto r = h.uniform_size();
  if (!r) throw Error(ErrorKind::NonUniform, "mixed edge sizes; uniformize first");
  RatioReport rep;
  rep.r = *r;
  rep.cover = cover_number(h, false, opts);
  rep.matching = matching_number(h, opts);
  rep.tau = rep.cover.tau;
  rep.nu = rep.matching.nu;
  rep.complete = rep.cover.complete() && rep.matching.complete();
  rep.ratio = rep.nu ? static_cast<double>(rep.tau) / static_cast<double>(rep.nu) : 0.0;
  rep.is_ryser_extremal = rep.complete && rep.tau == (rep.r - 1) * rep.nu;
  return rep;
}

bool is_cover(const PartiteHypergraph& h, std::span<const VertexId> vertices) {
  for (const auto& v : vertices)
    if (v.side >= h.num_sides() || v.pos >= h.side_size(v.side)) return false;
  return h.covers(h.to_bits(vertices));
}

bool is_matching(const PartiteHypergraph& h, std::span<const std::size_t> edges) {
  Bitset used(h.num_vertices());
  for (auto i : edges) {
    if (i >= h.num_edges() || h.edge_bits(i).intersects(used)) return false;
    used |= h.edge_bits(i);
  }
  return true;
}

}  // namespace ryser
