#include <doctest.h>

#include <algorithm>
#include <random>

#include "ryser/error.hpp"
#include "ryser/oracle.hpp"
#include "ryser/plane.hpp"
#include "ryser/solver.hpp"
#include "support.hpp"

using namespace ryser;

namespace {

SolverOptions with_jobs(unsigned jobs) {
  SolverOptions o;
  o.jobs = jobs;
  return o;
}

}  // namespace

TEST_CASE("cover number agrees with the brute-force oracle on random instances") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    const auto h = testing::random_partite(rng, 2 + trial % 4, 2 + trial % 4, 2 + trial % 13, trial % 2 == 1);
    if (h.num_vertices() > 24) continue;
    CAPTURE(trial);
    const auto res = cover_number(h, true);
    REQUIRE(res.complete());
    CHECK(res.tau == brute_force_cover_oracle(h).value());
    CHECK(res.witness.size() == res.tau);
    CHECK(is_cover(h, res.witness));
    // The enumeration lists exactly the minimum covers found by brute force.
    const auto brute = brute_force_covers(h, res.tau);
    std::vector<std::vector<VertexId>> min_brute;
    for (const auto& c : brute)
      if (c.size() == res.tau) min_brute.push_back(c);
    CHECK(*res.all_min_covers == min_brute);
    auto w = res.witness;
    std::sort(w.begin(), w.end());
    CHECK(std::binary_search(res.all_min_covers->begin(), res.all_min_covers->end(), w));
  }
}

TEST_CASE("parallel search reproduces the serial certificates") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const auto h = testing::random_partite(rng, 3 + trial % 3, 3 + trial % 3, 6 + trial % 20);
    const auto s = cover_number(h, true, with_jobs(1));
    for (unsigned jobs : {2U, 4U}) {
      const auto p = cover_number(h, true, with_jobs(jobs));
      CHECK(p.tau == s.tau);
      CHECK(p.witness == s.witness);
      CHECK(*p.all_min_covers == *s.all_min_covers);
      const auto pw = cover_number(h, false, with_jobs(jobs));
      CHECK(pw.witness == s.witness);
    }
    const auto ms = matching_number(h, with_jobs(1));
    const auto mp = matching_number(h, with_jobs(4));
    CHECK(ms.nu == mp.nu);
    CHECK(ms.witness == mp.witness);
  }
}

TEST_CASE("matching number agrees with exhaustive search") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const auto h = testing::random_partite(rng, 2 + trial % 3, 2 + trial % 4, 2 + trial % 12, trial % 2 == 0);
    const auto m = matching_number(h);
    REQUIRE(m.complete());
    CHECK(m.nu == testing::brute_force_matching(h));
    CHECK(is_matching(h, m.witness));
    CHECK(m.witness.size() == m.nu);
  }
}

TEST_CASE("truncated planes: tau = q, nu = 1") {
  for (std::uint32_t q : {2U, 3U, 4U, 5U}) {
    const auto t = truncate(build_plane(q));
    const auto rep = verify_ryser_ratio(t);
    CHECK(rep.tau == q);
    CHECK(rep.nu == 1);
    CHECK(rep.is_ryser_extremal);
    if (q <= 3) CHECK(brute_force_cover_oracle(t).value() == q);
  }
}

TEST_CASE("disjoint copies of T4 have nu = k and stay extremal") {
  const auto t = truncate(build_plane(3));
  auto u = t;
  for (std::size_t k = 2; k <= 3; ++k) {
    u = disjoint_union(u, t);
    const auto rep = verify_ryser_ratio(u);
    CHECK(rep.nu == k);
    CHECK(rep.tau == 3 * k);
    CHECK(rep.is_ryser_extremal);
    CHECK(rep.tau <= 4 * rep.nu);
  }
}

TEST_CASE("minimum covers of T4 are the sides") {
  const auto t = truncate(build_plane(3));
  const auto res = cover_number(t, true);
  CHECK(res.tau == 3);
  // Every cover of size 3: checked against brute force.
  const auto brute = brute_force_covers(t, 3);
  CHECK(res.all_min_covers->size() == brute.size());
}

TEST_CASE("solver budget controls") {
  const auto t = truncate(build_plane(7));
  SolverOptions tiny;
  tiny.timeout_secs = 1e-9;
  const auto res = cover_number(t, true, tiny);
  CHECK(res.status == SearchStatus::Timeout);
  CHECK_FALSE(res.complete());

  SolverOptions hint;
  hint.upper_hint = 2;
  const auto capped = cover_number(truncate(build_plane(4)), false, hint);
  CHECK(capped.status == SearchStatus::HintExceeded);
}

TEST_CASE("solver errors") {
  const PartiteHypergraph empty({{"a"}, {"b"}}, {});
  CHECK_THROWS_AS(cover_number(empty), Error);
  const PartiteHypergraph mixed({{"a", "b"}, {"c", "d"}, {"e"}},
                                {{{{0, 0}, {1, 0}, {2, 0}}, ""}, {{{0, 1}, {1, 1}}, ""}});
  try {
    verify_ryser_ratio(mixed);
    FAIL("expected NonUniform");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonUniform);
  }
  CHECK_NOTHROW(cover_number(mixed));
}

TEST_CASE("oracle guard") {
  const auto t = truncate(build_plane(7));
  CHECK_THROWS_AS(brute_force_cover_oracle(t), Error);
  CHECK(brute_force_cover_oracle(truncate(build_plane(2)), 1) == std::nullopt);
}

TEST_CASE("small fixed instances") {
  const PartiteHypergraph empty({{"a"}, {"b"}}, {});
  CHECK(matching_number(empty).nu == 0);

  const PartiteHypergraph one({{"a"}, {"b"}, {"c"}, {"d"}}, {{{{0, 0}, {1, 0}, {2, 0}, {3, 0}}, ""}});
  const auto c = cover_number(one, true);
  CHECK(c.tau == 1);
  CHECK(c.all_min_covers->size() == 4);
  CHECK(brute_force_cover_oracle(one) == 1u);

  // 2-uniform star: König case, extremal.
  const PartiteHypergraph star({{"c"}, {"l0", "l1", "l2"}},
                               {{{{0, 0}, {1, 0}}, ""}, {{{0, 0}, {1, 1}}, ""}, {{{0, 0}, {1, 2}}, ""}});
  const auto rep = verify_ryser_ratio(star);
  CHECK(rep.r == 2);
  CHECK(rep.tau == 1);
  CHECK(rep.nu == 1);
  CHECK(rep.is_ryser_extremal);

  CHECK(brute_force_cover_oracle(truncate(build_plane(2))) == 2u);
}

TEST_CASE("intersecting iff nu = 1") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 80; ++trial) {
    const auto h = testing::random_partite(rng, 2 + trial % 4, 2 + trial % 2, 2 + trial % 6, trial % 2 == 0);
    CHECK(is_intersecting(h).intersecting == (matching_number(h).nu == 1));
    const auto tau = cover_number(h).tau;
    CHECK(tau >= matching_number(h).nu);
  }
}
