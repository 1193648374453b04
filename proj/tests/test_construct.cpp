#include <doctest.h>

#include <algorithm>
#include <set>

#include "ryser/construct.hpp"
#include "ryser/error.hpp"
#include "ryser/oracle.hpp"
#include "ryser/plane.hpp"
#include "support.hpp"

using namespace ryser;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::IoError;
}

std::vector<std::size_t> family(const PartiteHypergraph& h, EdgeFamily f) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < h.num_edges(); ++e)
    if (parse_provenance(h.edge_label(e))->family == f) out.push_back(e);
  return out;
}

bool meets(const PartiteHypergraph& h, std::size_t a, std::size_t b) {
  return h.edge_bits(a).intersects(h.edge_bits(b));
}

}  // namespace

TEST_CASE("hypotheses: minimum covers of T - S are the sides for q >= 3") {
  for (std::uint32_t q : {3U, 4U, 5U}) {
    const auto spec = default_spec(truncate(build_plane(q)), 0);
    const auto v = validate_spec(spec);
    CHECK(v.ok());
    CHECK(v.covers_checked);
    REQUIRE(v.base_minus_s.has_value());
    CHECK(v.base_minus_s->tau == q);
    CHECK(v.base_minus_s->all_min_covers->size() == q + 1);
  }
}

TEST_CASE("hypotheses fail for the Fano truncation") {
  const auto spec = default_spec(truncate(build_plane(2)), 0);
  const auto v = validate_spec(spec);
  CHECK_FALSE(v.ok());
  const bool found = std::any_of(v.violations.begin(), v.violations.end(),
                                 [](const SpecViolation& x) { return x.condition == "min_covers_are_sides"; });
  CHECK(found);
}

TEST_CASE("structural spec violations") {
  const auto t = truncate(build_plane(3));
  auto spec = default_spec(t, 0);
  spec.f_edges[1] = spec.f_edges[0];  // F_2 does not pass through s_2
  CHECK_FALSE(validate_spec(spec).ok());
  CHECK(kind_of([&] { build_H(spec); }) == ErrorKind::SpecInvalid);
  CHECK(kind_of([&] { build_H(explicit_spec(t, 0, {1, 2})); }) == ErrorKind::SpecInvalid);
  CHECK(kind_of([&] { default_spec(t, 99); }) == ErrorKind::SpecInvalid);
}

TEST_CASE("H for q = 3: edge counts and side sizes") {
  const auto spec = default_spec(truncate(build_plane(3)), 0);
  std::set<std::size_t> distinct(spec.f_edges.begin(), spec.f_edges.end());
  CHECK(distinct.size() == 4);
  CHECK(distinct.count(0) == 0);
  const auto h = build_H(spec);
  CHECK(family(h, EdgeFamily::E1).size() == 8);
  CHECK(family(h, EdgeFamily::E2).size() == 4);
  CHECK(family(h, EdgeFamily::E3).size() == 4);
  CHECK(h.num_edges() == 16);
  CHECK(h.num_sides() == 5);
  std::vector<std::size_t> sizes;
  for (std::size_t s = 0; s < 5; ++s) sizes.push_back(h.side_size(s));
  CHECK(sizes == std::vector<std::size_t>{3, 3, 3, 3, 4});
  CHECK(h.sides()[4] == std::vector<std::string>{"v1", "v2", "v3", "v4"});
  CHECK(h.min_edge_size() == 4);
  CHECK(h.max_edge_size() == 5);
}

TEST_CASE("H is intersecting, certified family by family") {
  for (std::uint32_t q : {3U, 4U, 5U}) {
    const auto t = truncate(build_plane(q));
    for (const auto& spec : {default_spec(t, 0), select_F_by_profile(t, 0, DegreeProfile{q + 1, {(q) / 2}},
                                                                       ProfileRules::Relaxed)}) {
      const auto h = build_H(spec);
      const auto e1 = family(h, EdgeFamily::E1), e2 = family(h, EdgeFamily::E2), e3 = family(h, EdgeFamily::E3);
      for (auto a : e1)
        for (auto b : e2) CHECK(meets(h, a, b));
      for (auto a : e2)
        for (auto b : e3) CHECK(meets(h, a, b));
      for (auto a : e1)
        for (auto b : e3) CHECK(meets(h, a, b));
      CHECK(is_intersecting(h).intersecting);
      const auto c = cover_number(h);
      CHECK(c.tau == q + 1);
    }
  }
}

TEST_CASE("all-S spec merges duplicate F edges") {
  const auto spec = all_s_spec(truncate(build_plane(3)), 0);
  const auto h = build_H(spec);
  const auto e2 = family(h, EdgeFamily::E2);
  REQUIRE(e2.size() == 1);
  CHECK(h.edge_label(e2[0]) == "E2:1,2,3,4");
  CHECK(parse_provenance(h.edge_label(e2[0]))->indices == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK(family(h, EdgeFamily::E3).size() == 4);
}

TEST_CASE("cover mirror turns covers of H into covers of T - S") {
  const auto t = truncate(build_plane(3));
  const auto spec = default_spec(t, 0);
  const auto h = build_H(spec);
  const auto base_minus_s = t.without_edge(0);
  const auto covers = brute_force_covers(h, 4);
  CHECK_FALSE(covers.empty());
  for (const auto& c : covers) CHECK(is_cover(base_minus_s, cover_mirror(c, spec)));
}

TEST_CASE("uniformize preserves tau, nu and intersecting") {
  for (std::uint32_t q : {3U, 4U}) {
    const auto h = build_H(default_spec(truncate(build_plane(q)), 0));
    const auto u = uniformize(h);
    CHECK(u.uniform_size() == q + 2);
    CHECK(u.num_sides() == q + 2);
    CHECK(u.num_edges() == h.num_edges());
    CHECK(is_intersecting(u).intersecting == is_intersecting(h).intersecting);
    CHECK(cover_number(u).tau == cover_number(h).tau);
    CHECK(matching_number(u).nu == matching_number(h).nu);
    CHECK(uniformize(u) == u);
    // One fresh tail vertex per padded edge.
    std::size_t tails = 0;
    for (const auto& side : u.sides())
      for (const auto& label : side) tails += label.rfind("t", 0) == 0;
    CHECK(tails == h.num_edges() - (u.num_edges() - tails));
  }
}

TEST_CASE("uniformize rejects edges missing two sides") {
  const PartiteHypergraph h({{"a"}, {"b"}, {"c"}, {"d"}},
                            {{{{0, 0}, {1, 0}, {2, 0}, {3, 0}}, ""}, {{{0, 0}, {1, 0}, {2, 0}}, ""}});
  CHECK_NOTHROW(uniformize(h));
  const PartiteHypergraph g({{"a"}, {"b"}, {"c"}, {"d"}}, {{{{0, 0}, {1, 0}}, ""}, {{{0, 0}, {2, 0}, {3, 0}}, ""}});
  CHECK(kind_of([&] { uniformize(g); }) == ErrorKind::BadEdgeSize);
}

TEST_CASE("S-subhypergraph extraction") {
  const auto h = build_H(default_spec(truncate(build_plane(3)), 0));
  const auto s = extract_S_subhypergraph(h);
  CHECK(s.num_edges() == 8);
  CHECK(s.num_vertices() == h.num_vertices());
  CHECK(kind_of([&] { extract_S_subhypergraph(h.without_labels()); }) == ErrorKind::MissingLabels);
}

TEST_CASE("profile validation") {
  CHECK_NOTHROW(validate_profile(DegreeProfile{26, {4}}));
  CHECK_NOTHROW(validate_profile(DegreeProfile{26, {5}}));
  CHECK(kind_of([] { validate_profile(DegreeProfile{26, {3}}); }) == ErrorKind::ProfileInvalid);
  CHECK(kind_of([] { validate_profile(DegreeProfile{26, {6}}); }) == ErrorKind::ProfileInvalid);
  CHECK(kind_of([] { validate_profile(DegreeProfile{5, {2}}); }) == ErrorKind::ProfileInvalid);
  CHECK_NOTHROW(validate_profile(DegreeProfile{5, {2}}, ProfileRules::Relaxed));
  CHECK(kind_of([] { validate_profile(DegreeProfile{5, {4}}, ProfileRules::Relaxed); }) == ErrorKind::ProfileInvalid);
  CHECK(DegreeProfile{26, {4}}.x_last() == 21);
  CHECK(DegreeProfile{26, {4}}.expected_side_degrees() == std::vector<std::size_t>{1, 8, 42});
}

TEST_CASE("profile selection gives the predicted side-1 degrees") {
  for (std::uint32_t q : {3U, 4U, 5U}) {
    const std::size_t r = q + 1;
    const DegreeProfile prof{r, {(r - 1) / 2}};
    const auto spec = select_F_by_profile(truncate(build_plane(q)), 0, prof, ProfileRules::Relaxed);
    CHECK(validate_spec(spec).ok());
    const auto s = extract_S_subhypergraph(build_H(spec));
    CHECK(degree_stats(s).side_nonzero_multiset(0) == prof.expected_side_degrees());
  }
}

TEST_CASE("profile counting matches brute-force enumeration") {
  for (std::size_t r : {26U, 49U, 81U, 121U, 400U}) {
    for (std::size_t t = 1; t <= 3; ++t) {
      CAPTURE(r);
      CAPTURE(t);
      const auto pc = profile_count_for_t(r, t);
      const std::size_t hi = isqrt(r);
      // Product of [t+3, hi]^t, then sort and deduplicate.
      std::set<std::vector<std::size_t>> brute;
      if (t + 3 <= hi) {
        std::vector<std::size_t> x(t, t + 3);
        while (true) {
          auto sorted = x;
          std::sort(sorted.begin(), sorted.end());
          std::size_t sum = 0;
          for (auto v : sorted) sum += v;
          if (sum + 1 <= r - 1 && t + 1 <= r - 2) brute.insert(sorted);
          std::size_t i = 0;
          while (i < t && x[i] == hi) x[i++] = t + 3;
          if (i == t) break;
          ++x[i];
        }
      }
      const auto listed = enumerate_profiles(r, t);
      CHECK(listed == std::vector<std::vector<std::size_t>>(brute.begin(), brute.end()));
      CHECK(pc.count.value() == brute.size());
    }
  }
  CHECK(profile_count_for_t(26, 1).count == 2u);
  CHECK(enumerate_profiles(26, 1) == std::vector<std::vector<std::size_t>>{{4}, {5}});
}

TEST_CASE("profile t from delta") {
  CHECK(isqrt(26) == 5);
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(1u << 20) == 1024);
  // t = floor(r^(0.5 - delta)).
  CHECK(profile_t(26, 0.3) == 1);
  CHECK(profile_t(26, 0.1) == 3);
  CHECK(profile_count(26, 0.3).t == 1);
  CHECK(profile_count(26, 0.3).count == 2u);
  CHECK(profile_count(26, 0.1).count == 0u);
}

TEST_CASE("all-S spec validates; F_i missing s_i is named") {
  const auto t = truncate(build_plane(3));
  CHECK(validate_spec(all_s_spec(t, 0)).ok());
  auto spec = default_spec(t, 0);
  spec.f_edges[2] = spec.f_edges[0];
  const auto v = validate_spec(spec, ValidationOptions{false, {}});
  const bool named = std::any_of(v.violations.begin(), v.violations.end(),
                                 [](const SpecViolation& x) { return x.condition == "s_in_f"; });
  CHECK(named);
  CHECK_FALSE(v.covers_checked);
}

TEST_CASE("H on a non-plane base: hypotheses checked from scratch") {
  // Two disjoint edges: not intersecting, so the base is rejected.
  const PartiteHypergraph base({{"a", "b"}, {"c", "d"}, {"e", "f"}},
                               {{{{0, 0}, {1, 0}, {2, 0}}, ""}, {{{0, 1}, {1, 1}, {2, 1}}, ""}});
  const auto v = validate_spec(all_s_spec(base, 0));
  const bool named = std::any_of(v.violations.begin(), v.violations.end(),
                                 [](const SpecViolation& x) { return x.condition == "base_intersecting"; });
  CHECK(named);
}
