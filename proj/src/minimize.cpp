#include <omp.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "ryser/analysis.hpp"
#include "ryser/error.hpp"

namespace ryser {

namespace {

EdgeCertificate certify_deletion(const PartiteHypergraph& h, std::size_t local, std::size_t original,
                                 const SolverOptions& opts) {
  EdgeCertificate c;
  c.edge = original;
  if (h.num_edges() <= 1) return c;  // nothing left to cover
  const auto res = cover_number(h.without_edge(local), false, opts);
  c.tau = res.tau;
  c.witness = res.witness;
  c.complete = res.complete();
  return c;
}

}  // namespace

MinimizationTrace minimize(const PartiteHypergraph& h, DeletionOrder order, const SolverOptions& opts) {
  if (h.num_edges() == 0 || h.num_sides() == 0) throw Error(ErrorKind::NotExtremal, "empty hypergraph");
  MinimizationTrace t;
  t.target_tau = h.num_sides() - 1;
  if (!is_intersecting(h).intersecting) throw Error(ErrorKind::NotExtremal, "input is not intersecting");
  const auto initial = cover_number(h, false, opts);
  if (!initial.complete()) throw Error(ErrorKind::NotExtremal, "cover number of the input not certified (timeout)");
  if (initial.tau != t.target_tau)
    throw Error(ErrorKind::NotExtremal,
                "tau = " + std::to_string(initial.tau) + ", expected " + std::to_string(t.target_tau));

  std::vector<std::size_t> ids(h.num_edges());
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  std::vector<std::size_t> order_ids = ids;
  if (order == DeletionOrder::Descending) std::reverse(order_ids.begin(), order_ids.end());

  // Edges that are essential now stay essential after further deletions
  // (cover numbers only drop), so one pass reaches a minimal hypergraph.
  std::vector<std::size_t> current = ids;
  for (auto e : order_ids) {
    std::vector<std::size_t> trial;
    for (auto x : current)
      if (x != e) trial.push_back(x);
    if (trial.empty()) continue;
    const auto res = cover_number(h.with_edges(trial), false, opts);
    if (!res.complete()) {
      t.complete = false;
      continue;
    }
    if (res.tau == t.target_tau) {
      t.deleted.push_back(e);
      t.deletion_certificates.push_back({e, res.tau, res.witness, true});
      current = std::move(trial);
    }
  }
  t.kept = current;
  t.final_graph = h.with_edges(current);

  SolverOptions inner = opts;
  inner.jobs = 1;
  const auto n = static_cast<std::int64_t>(current.size());
  t.kept_certificates.resize(current.size());
  int jobs = opts.jobs == 0 ? omp_get_max_threads() : static_cast<int>(opts.jobs);
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    t.kept_certificates[k] = certify_deletion(t.final_graph, k, current[k], inner);
  }
  for (const auto& c : t.kept_certificates)
    if (!c.complete) t.complete = false;
  return t;
}

std::string DegreeFingerprint::encode() const {
  std::string s;
  for (const auto& [d, n] : counts) {
    if (!s.empty()) s += ',';
    s += std::to_string(d) + "x" + std::to_string(n);
  }
  return s;
}

DegreeFingerprint degree_fingerprint(const PartiteHypergraph& h) {
  std::map<std::size_t, std::size_t> m;
  for (auto d : degree_stats(h).global_multiset()) ++m[d];
  DegreeFingerprint f;
  f.counts.assign(m.begin(), m.end());
  return f;
}

PartiteHypergraph restrict_to_non_isolated(const PartiteHypergraph& h) {
  const auto deg = degree_stats(h);
  std::vector<std::vector<std::string>> sides(h.num_sides());
  std::vector<std::vector<std::uint32_t>> remap(h.num_sides());
  for (std::size_t s = 0; s < h.num_sides(); ++s) {
    remap[s].assign(h.side_size(s), 0);
    for (std::size_t p = 0; p < h.side_size(s); ++p) {
      if (deg.per_side[s][p] == 0) continue;
      remap[s][p] = static_cast<std::uint32_t>(sides[s].size());
      sides[s].push_back(h.sides()[s][p]);
    }
  }
  auto edges = h.edge_specs();
  for (auto& e : edges)
    for (auto& v : e.vertices) v.pos = remap[v.side][v.pos];
  return PartiteHypergraph(std::move(sides), std::move(edges), h.name());
}

}  // namespace ryser
