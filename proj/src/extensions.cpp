#include <omp.h>

#include <algorithm>
#include <set>

#include "ryser/analysis.hpp"
#include "ryser/error.hpp"

namespace ryser {

std::string_view to_string(ExtensionClass c) noexcept {
  switch (c) {
    case ExtensionClass::Type1: return "TYPE1";
    case ExtensionClass::Type2: return "TYPE2";
    case ExtensionClass::AlreadyPresent: return "ALREADY_PRESENT";
    case ExtensionClass::Violation: return "VIOLATION";
  }
  return "?";
}

std::size_t ExtensionClassification::count(ExtensionClass c) const {
  return static_cast<std::size_t>(
      std::count_if(candidates.begin(), candidates.end(), [c](const auto& x) { return x.cls == c; }));
}

namespace {

struct Cores {
  std::vector<std::vector<VertexId>> type1;  // F_i
  std::vector<std::vector<VertexId>> type2;  // F_i - s_i + v_i
};

Cores make_cores(const ConstructionSpec& spec) {
  const auto r = static_cast<std::uint32_t>(spec.r());
  Cores c;
  for (std::uint32_t i = 0; i < r; ++i) {
    auto f = spec.base.edge_vertices(spec.f_edges[i]);
    std::sort(f.begin(), f.end());
    c.type1.push_back(f);
    std::vector<VertexId> g;
    for (auto v : f)
      if (v.side != i) g.push_back(v);
    g.push_back({r, i});
    std::sort(g.begin(), g.end());
    c.type2.push_back(std::move(g));
  }
  return c;
}

std::vector<VertexId> drop_side(const std::vector<VertexId>& t, std::uint32_t side) {
  std::vector<VertexId> out;
  for (auto v : t)
    if (v.side != side) out.push_back(v);
  return out;
}

void classify(ExtensionCandidate& c, const PartiteHypergraph& h, const Cores& cores, std::uint32_t r) {
  if (!c.fresh_side && h.find_edge(c.transversal)) {
    c.cls = ExtensionClass::AlreadyPresent;
    return;
  }
  if (!c.fresh_side || *c.fresh_side == r) {
    const auto core = c.fresh_side ? c.transversal : drop_side(c.transversal, r);
    for (std::uint32_t i = 0; i < r; ++i) {
      if (core == cores.type1[i]) {
        c.cls = ExtensionClass::Type1;
        c.index = i + 1;
        return;
      }
    }
  }
  for (std::uint32_t i = 0; i < r; ++i) {
    if (c.fresh_side && *c.fresh_side != i) continue;
    const auto core = c.fresh_side ? c.transversal : drop_side(c.transversal, i);
    if (core == cores.type2[i]) {
      c.cls = ExtensionClass::Type2;
      c.index = i + 1;
      return;
    }
  }
  c.cls = ExtensionClass::Violation;
}

// Covering transversals that skip side `fresh` (num_sides = skip nothing),
// in lexicographic order of the chosen vertices.
struct Enumerator {
  const PartiteHypergraph& h;
  std::uint32_t fresh;
  bool prune;
  std::vector<std::uint32_t> sides;
  std::vector<Bitset> remaining;  // remaining[k] = vertices of sides[k..]
  std::vector<VertexId> current;
  std::vector<std::vector<VertexId>> found;
  std::uint64_t tested = 0;

  Enumerator(const PartiteHypergraph& g, std::uint32_t skip, bool pr) : h(g), fresh(skip), prune(pr) {
    for (std::uint32_t s = 0; s < h.num_sides(); ++s)
      if (s != fresh) sides.push_back(s);
    remaining.assign(sides.size() + 1, Bitset(h.num_vertices()));
    for (std::size_t k = sides.size(); k-- > 0;) {
      remaining[k] = remaining[k + 1];
      auto [lo, hi] = h.side_range(sides[k]);
      for (auto g2 = lo; g2 < hi; ++g2) remaining[k].set(g2);
    }
  }

  bool viable(const Bitset& chosen, std::size_t k) const {
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
      const auto& eb = h.edge_bits(e);
      if (!eb.intersects(chosen) && !eb.intersects(remaining[k])) return false;
    }
    return true;
  }

  void run(Bitset& chosen, std::size_t k) {
    if (k == sides.size()) {
      ++tested;
      if (h.covers(chosen)) found.push_back(current);
      return;
    }
    if (prune && !viable(chosen, k)) return;
    const auto s = sides[k];
    for (std::uint32_t p = 0; p < h.side_size(s); ++p) {
      const VertexId v{s, p};
      const auto g2 = h.global_id(v);
      chosen.set(g2);
      current.push_back(v);
      run(chosen, k + 1);
      current.pop_back();
      chosen.reset(g2);
    }
  }
};

}  // namespace

ExtensionClassification classify_extensions(const PartiteHypergraph& h, const ConstructionSpec& spec,
                                            const ExtensionOptions& opts) {
  ExtensionClassification out;
  const auto r = static_cast<std::uint32_t>(spec.r());
  out.r = r;
  if (h.num_sides() != r + 1)
    throw Error(ErrorKind::SpecInvalid, "H must have r + 1 = " + std::to_string(r + 1) + " sides");

  const auto cov = cover_number(h, false, opts.solver);
  if (!cov.complete()) throw Error(ErrorKind::NotExtremal, "cover number of H not certified (timeout)");
  out.tau = cov.tau;
  if (cov.tau != r) throw Error(ErrorKind::NotExtremal, "tau(H) = " + std::to_string(cov.tau) + ", expected r");

  std::set<std::size_t> distinct(spec.f_edges.begin(), spec.f_edges.end());
  const bool f_ok = distinct.size() == r && !distinct.count(spec.s_edge);
  out.hypotheses_hold = r >= 5 && f_ok;
  if (r < 5) out.warnings.push_back("UniformityTooSmall: r < 5, classification reported without the maximality guarantee");
  if (!f_ok) out.warnings.push_back("F_i are not distinct lines other than S; no maximality guarantee asserted");

  const auto cores = make_cores(spec);
  // Task j < r+1: fresh vertex in side j; task r+1: no fresh vertex.
  const auto tasks = static_cast<std::int64_t>(r) + 2;
  std::vector<std::vector<ExtensionCandidate>> parts(static_cast<std::size_t>(tasks));
  std::vector<std::uint64_t> tested(static_cast<std::size_t>(tasks), 0);
  const int jobs = opts.solver.jobs == 0 ? omp_get_max_threads() : static_cast<int>(opts.solver.jobs);

#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (std::int64_t j = 0; j < tasks; ++j) {
    const auto skip = static_cast<std::uint32_t>(j);  // == r+1 skips nothing
    Enumerator en(h, skip, opts.prune);
    Bitset chosen(h.num_vertices());
    en.run(chosen, 0);
    auto& part = parts[static_cast<std::size_t>(j)];
    for (auto& t : en.found) {
      ExtensionCandidate c;
      if (skip <= r) c.fresh_side = skip;
      c.transversal = std::move(t);
      classify(c, h, cores, r);
      part.push_back(std::move(c));
    }
    tested[static_cast<std::size_t>(j)] = en.tested;
  }
  // Candidates without a fresh vertex first, then by fresh side.
  for (auto& c : parts.back()) out.candidates.push_back(std::move(c));
  for (std::size_t j = 0; j + 1 < parts.size(); ++j)
    for (auto& c : parts[j]) out.candidates.push_back(std::move(c));
  for (auto t : tested) out.transversals_tested += t;
  return out;
}

bool TwinFamily::contains(std::span<const VertexId> existing, std::uint32_t fresh) const {
  std::vector<VertexId> e(existing.begin(), existing.end());
  std::sort(e.begin(), e.end());
  return fresh == fresh_side && e == core;
}

ClosureDescription maximal_closure_description(const PartiteHypergraph& h, const ConstructionSpec& spec,
                                               const ExtensionClassification& cls) {
  if (!cls.confirmed())
    throw Error(ErrorKind::ViolationsPresent,
                std::to_string(cls.count(ExtensionClass::Violation)) + " violating candidates");
  if (h.num_sides() != spec.r() + 1) throw Error(ErrorKind::SpecInvalid, "H must have r + 1 sides");
  ClosureDescription d;
  const auto r = static_cast<std::uint32_t>(spec.r());
  d.r = r;
  const auto cores = make_cores(spec);
  for (std::uint32_t i = 0; i < r; ++i) d.families.push_back({ExtensionClass::Type1, i + 1, cores.type1[i], r});
  for (std::uint32_t i = 0; i < r; ++i) d.families.push_back({ExtensionClass::Type2, i + 1, cores.type2[i], i});
  return d;
}

}  // namespace ryser
