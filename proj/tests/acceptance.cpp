// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each criterion also has a wall-clock limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ryser/analysis.hpp"
#include "ryser/construct.hpp"
#include "ryser/corpus.hpp"
#include "ryser/error.hpp"
#include "ryser/oracle.hpp"
#include "ryser/plane.hpp"
#include "ryser/rhg_io.hpp"
#include "ryser/solver.hpp"

using namespace ryser;

namespace {

struct Ctx {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

PartiteHypergraph T(std::uint32_t q) { return truncate(build_plane(q)); }

std::vector<std::pair<std::string, ConstructionSpec>> specs_for(std::uint32_t q) {
  const auto t = T(q);
  return {{"default", default_spec(t, 0)},
          {"profile", select_F_by_profile(t, 0, small_profile(q + 1), ProfileRules::Relaxed)}};
}

std::vector<VertexId> side_of(const PartiteHypergraph& h, std::uint32_t s) {
  std::vector<VertexId> out;
  for (std::uint32_t p = 0; p < h.side_size(s); ++p) out.push_back({s, p});
  return out;
}

void c1_plane(Ctx& c) {
  for (std::uint32_t q : {2U, 3U, 4U, 5U, 7U, 8U, 9U}) {
    const auto p = build_plane(q);
    const std::size_t n = q * q + q + 1;
    c.expect(p.num_points() == n && p.num_lines() == n, "q=" + std::to_string(q) + " counts");
    const auto ax = check_plane_axioms(p);
    c.expect(ax.ok(), "q=" + std::to_string(q) + " axioms: " + ax.counterexample);
  }
}

void c2_truncated(Ctx& c) {
  for (std::uint32_t q : {2U, 3U, 4U, 5U}) {
    const auto t = T(q);
    const auto tag = "q=" + std::to_string(q);
    c.expect(t.num_sides() == q + 1, tag + " partite");
    c.expect(t.uniform_size() == q + 1, tag + " uniform");
    c.expect(is_intersecting(t).intersecting, tag + " intersecting");
    const auto res = cover_number(t);
    c.expect(res.complete() && res.tau == q && is_cover(t, res.witness) && res.witness.size() == q, tag + " tau");
    if (q <= 3) c.expect(brute_force_cover_oracle(t) == std::optional<std::size_t>{q}, tag + " oracle");
  }
}

void c3_hypotheses(Ctx& c) {
  for (std::uint32_t q : {3U, 4U, 5U}) {
    const auto t = T(q);
    const auto minus_s = t.without_edge(0);
    const auto res = cover_number(minus_s, true);
    std::set<std::vector<VertexId>> sides;
    for (std::uint32_t s = 0; s < t.num_sides(); ++s) sides.insert(side_of(t, s));
    std::set<std::vector<VertexId>> found(res.all_min_covers->begin(), res.all_min_covers->end());
    c.expect(res.complete() && res.tau == q && found == sides, "q=" + std::to_string(q) + " min covers of T-S");
  }
}

void c4_construction(Ctx& c) {
  for (std::uint32_t q : {3U, 4U, 5U}) {
    const std::size_t r = q + 1;
    for (const auto& [name, spec] : specs_for(q)) {
      const auto tag = "q=" + std::to_string(q) + " " + name;
      c.expect(validate_spec(spec).ok(), tag + " spec");
      const auto h = build_H(spec);
      c.expect(is_intersecting(h).intersecting, tag + " H intersecting");
      const auto tau = cover_number(h);
      c.expect(tau.complete() && tau.tau == r && is_cover(h, tau.witness), tag + " tau(H)");
      const auto u = uniformize(h);
      c.expect(u.num_sides() == r + 1 && u.uniform_size() == r + 1, tag + " uniformized shape");
      c.expect(is_intersecting(u).intersecting, tag + " uniformized intersecting");
      const auto rr = verify_ryser_ratio(u);
      c.expect(rr.complete && rr.tau == r && rr.nu == 1 && rr.is_ryser_extremal, tag + " extremal");
    }
  }
}

void c5_mirror(Ctx& c) {
  const auto spec = default_spec(T(3), 0);
  const auto h = build_H(spec);
  const auto minus_s = spec.base.without_edge(spec.s_edge);
  const auto covers = brute_force_covers(h, 4);
  c.expect(!covers.empty(), "covers enumerated");
  for (const auto& cv : covers) c.expect(is_cover(minus_s, cover_mirror(cv, spec)), "mirror of a cover");
}

void c6_intersections(Ctx& c) {
  for (std::uint32_t q : {4U, 5U}) {
    const std::size_t r = q + 1;
    const auto spec = default_spec(T(q), 0);
    std::set<std::size_t> distinct(spec.f_edges.begin(), spec.f_edges.end());
    c.expect(distinct.size() == r && !distinct.count(spec.s_edge), "F distinct and not S");
    const auto h = build_H(spec);
    for (const auto& [size, count] : intersection_size_profile(h))
      c.expect(size == 1 || size == 2 || size == r - 1 || size == r,
               "q=" + std::to_string(q) + " intersection size " + std::to_string(size));
    const auto pairs = pairs_with_intersection(h, r - 1);
    c.expect(pairs.size() == r, "q=" + std::to_string(q) + " r pairs of size r-1");
    std::set<std::size_t> idx;
    for (const auto& [a, b] : pairs) {
      const auto pa = parse_provenance(h.edge_label(a)), pb = parse_provenance(h.edge_label(b));
      const bool ok = pa && pb && pa->family == EdgeFamily::E2 && pb->family == EdgeFamily::E3 &&
                      pa->indices == pb->indices && pa->indices.size() == 1;
      c.expect(ok, "pair is {F_i, F_i - s_i + v_i}");
      if (ok) idx.insert(pa->indices[0]);
    }
    c.expect(idx.size() == r, "every i appears once");
  }
}

void c7_minimality(Ctx& c) {
  for (std::uint32_t q : {3U, 4U}) {
    const std::size_t r = q + 1;
    const auto u = uniformize(build_H(default_spec(T(q), 0)));
    const auto trace = minimize(u);
    const auto tag = "q=" + std::to_string(q);
    c.expect(trace.complete, tag + " complete");
    std::set<std::size_t> kept(trace.kept.begin(), trace.kept.end());
    for (std::size_t e = 0; e < u.num_edges(); ++e) {
      const auto p = parse_provenance(u.edge_label(e));
      if (p && p->family != EdgeFamily::E1) c.expect(kept.count(e) == 1, tag + " S-edge " + u.edge_label(e) + " kept");
    }
    const auto& m = trace.final_graph;
    c.expect(cover_number(m).tau == r, tag + " tau(final) = r");
    for (std::size_t k = 0; k < m.num_edges(); ++k) {
      const auto smaller = m.without_edge(k);
      const auto& cert = trace.kept_certificates.at(k);
      c.expect(cert.witness.size() == r - 1 && is_cover(smaller, cert.witness), tag + " edge certificate");
    }
  }
}

void c8_degrees(Ctx& c) {
  const auto t26 = T(25);
  std::vector<DegreeFingerprint> fps;
  for (auto [x1, expect] : {std::pair<std::size_t, std::vector<std::size_t>>{4, {1, 8, 42}}, {5, {1, 10, 40}}}) {
    const auto spec = select_F_by_profile(t26, 0, DegreeProfile{26, {x1}});
    const auto s = extract_S_subhypergraph(build_H(spec));
    const auto ds = degree_stats(s);
    auto side1 = ds.side_nonzero_multiset(0);
    std::sort(side1.begin(), side1.end());
    c.expect(side1 == expect, "x1=" + std::to_string(x1) + " side-1 degrees");
    std::size_t max_other = 0;
    for (std::size_t side = 1; side < s.num_sides(); ++side)
      for (auto d : ds.side_multiset(side)) max_other = std::max(max_other, d);
    c.expect(max_other <= 6, "x1=" + std::to_string(x1) + " other sides <= 6");
    fps.push_back(degree_fingerprint(s));
  }
  c.expect(fps[0] != fps[1], "fingerprints differ");
  // Direct enumeration of t = 1 profiles for r = 26.
  std::size_t n = 0;
  for (std::size_t x = 1; x <= 26; ++x) {
    try {
      validate_profile(DegreeProfile{26, {x}});
      ++n;
    } catch (const Error&) {
    }
  }
  c.expect(n == 2, "two admissible profiles by enumeration");
  c.expect(profile_count_for_t(26, 1).count == std::optional<std::uint64_t>{2}, "profile_count(26, t=1) = 2");
}

void c9_maximality(Ctx& c) {
  const auto spec = default_spec(T(4), 0);
  const auto h = build_H(spec);
  const auto pruned = classify_extensions(h, spec);
  const auto brute = classify_extensions(h, spec, ExtensionOptions{false, {}});
  c.expect(pruned.hypotheses_hold, "hypotheses of the maximality statement hold");
  c.expect(pruned.count(ExtensionClass::Violation) == 0, "zero violations");
  bool same = pruned.candidates.size() == brute.candidates.size();
  for (std::size_t i = 0; same && i < pruned.candidates.size(); ++i)
    same = pruned.candidates[i].transversal == brute.candidates[i].transversal &&
           pruned.candidates[i].fresh_side == brute.candidates[i].fresh_side &&
           pruned.candidates[i].cls == brute.candidates[i].cls;
  c.expect(same, "pruned search equals brute force");
}

void c10_oracle(Ctx& c) {
  for (const auto& inst : corpus_instances()) {
    const auto& h = inst.graph;
    const bool small = h.num_vertices() <= 24;
    const bool inter = is_intersecting(h).intersecting;
    const bool uniform = h.uniform_size().has_value();
    if (!small && !(uniform && h.num_vertices() <= 400)) continue;
    const auto tau = cover_number(h);
    const auto nu = matching_number(h);
    c.expect(tau.complete() && nu.complete(), inst.name + " complete");
    if (small) c.expect(brute_force_cover_oracle(h) == std::optional<std::size_t>{tau.tau}, inst.name + " oracle");
    if (inter) c.expect(nu.nu == 1, inst.name + " nu = 1");
    if (uniform) c.expect(tau.tau <= *h.uniform_size() * nu.nu, inst.name + " tau <= r nu");
  }
}

void c11_bruck_ryser(Ctx& c) {
  c.expect(bruck_ryser_excluded(6), "6");
  c.expect(!bruck_ryser_excluded(10), "10");
  c.expect(bruck_ryser_excluded(14), "14");
  for (std::uint64_t q = 2; q <= 16; ++q)
    if (as_prime_power(q)) c.expect(!bruck_ryser_excluded(q), "prime power " + std::to_string(q));
}

void c12_determinism(Ctx& c) {
  namespace fs = std::filesystem;
  const auto root = fs::temp_directory_path() / "ryser_acceptance_corpus";
  fs::remove_all(root);
  const auto a = corpus_generate(root / "a");
  const auto b = corpus_generate(root / "b");
  c.expect(a.size() == b.size(), "same file set");
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    c.expect(a[i].filename() == b[i].filename(), "same names");
    c.expect(read_file(a[i]) == read_file(b[i]), a[i].filename().string() + " byte-identical");
    if (a[i].extension() == ".rhg") {
      const auto text = read_file(a[i]);
      c.expect(format_rhg(parse_rhg(text)) == text, a[i].filename().string() + " round trip");
    }
  }
  SolverOptions one, many;
  one.jobs = 1;
  many.jobs = 4;
  for (const auto& inst : corpus_instances()) {
    if (inst.graph.num_vertices() > 80) continue;
    const auto s = cover_number(inst.graph, true, one);
    const auto p = cover_number(inst.graph, true, many);
    c.expect(s.tau == p.tau && s.witness == p.witness && s.all_min_covers == p.all_min_covers,
             inst.name + " cover certificates");
    const auto ms = matching_number(inst.graph, one), mp = matching_number(inst.graph, many);
    c.expect(ms.nu == mp.nu && ms.witness == mp.witness, inst.name + " matching certificates");
  }
  fs::remove_all(root);
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<void(Ctx&)> fn;
  };
  const std::vector<Criterion> all = {
      {1, "plane axioms", 5, c1_plane},
      {2, "truncated plane properties", 10, c2_truncated},
      {3, "minimum covers of T - S are the sides", 60, c3_hypotheses},
      {4, "H intersecting, tau(H) = r, uniformized H extremal", 120, c4_construction},
      {5, "mirrored covers cover T - S", 30, c5_mirror},
      {6, "intersection-size law", 60, c6_intersections},
      {7, "minimality with per-edge certificates", 300, c7_minimality},
      {8, "degree sequences at r = 26", 30, c8_degrees},
      {9, "addable edges are twins", 60, c9_maximality},
      {10, "solver oracle equivalence", 120, c10_oracle},
      {11, "Bruck-Ryser utility", 5, c11_bruck_ryser},
      {12, "determinism and round trip", 120, c12_determinism},
  };
  int failed = 0;
  for (const auto& cr : all) {
    Ctx ctx;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.fn(ctx);
    } catch (const std::exception& e) {
      ctx.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > cr.limit_s) {
      std::ostringstream os;
      os << "runtime " << secs << " s exceeds " << cr.limit_s << " s";
      ctx.failures.push_back(os.str());
    }
    const bool ok = ctx.failures.empty();
    failed += !ok;
    std::printf("[%s] criterion %2d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", cr.id, cr.name, secs);
    for (std::size_t i = 0; i < ctx.failures.size() && i < 10; ++i) std::printf("        %s\n", ctx.failures[i].c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed ? 1 : 0;
}
