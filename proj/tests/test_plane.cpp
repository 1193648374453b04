#include <doctest.h>

#include <set>

#include "ryser/error.hpp"
#include "ryser/plane.hpp"

using namespace ryser;

TEST_CASE("PG(2,q) sizes and incidence axioms") {
  for (std::uint32_t q : {2U, 3U, 4U, 5U, 7U, 8U, 9U}) {
    CAPTURE(q);
    const auto plane = build_plane(q);
    const std::size_t n = q * q + q + 1;
    CHECK(plane.num_points() == n);
    CHECK(plane.num_lines() == n);
    for (std::size_t l = 0; l < n; ++l) CHECK(plane.line_points(l).size() == q + 1);
    const auto ax = check_plane_axioms(plane);
    CHECK(ax.ok());
    CHECK(ax.counterexample.empty());
  }
}

TEST_CASE("incidence agrees with a direct dot product") {
  for (std::uint32_t q : {3U, 4U, 8U}) {
    const auto plane = build_plane(q);
    const auto& f = plane.field();
    for (std::size_t l = 0; l < plane.num_lines(); ++l) {
      const auto& L = plane.line(l);
      for (std::size_t p = 0; p < plane.num_points(); ++p) {
        const auto& P = plane.point(p);
        auto dot = f.zero();
        for (int i = 0; i < 3; ++i) dot = f.add(dot, f.mul(P[i], L[i]));
        CHECK(plane.incident(p, l) == (dot == f.zero()));
      }
    }
  }
}

TEST_CASE("points are normalized and distinct") {
  const auto plane = build_plane(5);
  std::set<std::array<std::uint32_t, 3>> seen;
  for (std::size_t i = 0; i < plane.num_points(); ++i) {
    const auto& t = plane.point(i);
    std::size_t first = 0;
    while (t[first].index == 0) ++first;
    CHECK(t[first] == plane.field().one());
    CHECK(seen.insert({t[0].index, t[1].index, t[2].index}).second);
  }
  CHECK(plane.point(0)[2] == plane.field().one());
  CHECK(plane.point(0)[0].index == 0);
}

TEST_CASE("Fano plane dump") {
  const auto plane = build_plane(2);
  const auto dump = plane.dump();
  CHECK(std::count(dump.begin(), dump.end(), '\n') == 7);
  CHECK(dump.rfind("L0 ", 0) == 0);
}

TEST_CASE("truncated plane structure") {
  for (std::uint32_t q : {2U, 3U, 4U, 5U}) {
    CAPTURE(q);
    const auto plane = build_plane(q);
    const auto t = truncate(plane);
    CHECK(t.num_sides() == q + 1);
    for (std::size_t s = 0; s < t.num_sides(); ++s) CHECK(t.side_size(s) == q);
    CHECK(t.num_edges() == q * q);
    CHECK(t.uniform_size() == q + 1);
    CHECK(is_intersecting(t).intersecting);
    CHECK(t.name() == "T" + std::to_string(q + 1));
    // Vertex labels name the plane point, which must not be the deleted one.
    for (const auto& side : t.sides())
      for (const auto& label : side) CHECK(label != "p0");
  }
}

TEST_CASE("truncation at other points gives the same parameters") {
  const auto plane = build_plane(3);
  for (std::size_t v : {1U, 5U, 12U}) {
    const auto t = truncate(plane, v);
    CHECK(t.num_sides() == 4);
    CHECK(t.num_edges() == 9);
    CHECK(is_intersecting(t).intersecting);
  }
}

TEST_CASE("truncate rejects a bad point index") {
  const auto plane = build_plane(3);
  try {
    truncate(plane, 13);
    FAIL("expected InvalidPointIndex");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidPointIndex);
  }
  CHECK_THROWS_AS(build_plane(6), Error);
}

TEST_CASE("Bruck-Ryser exclusion") {
  CHECK(bruck_ryser_excluded(6));
  CHECK_FALSE(bruck_ryser_excluded(10));
  CHECK(bruck_ryser_excluded(14));
  CHECK(bruck_ryser_excluded(21));
  CHECK_FALSE(bruck_ryser_excluded(12));
  for (std::uint64_t q = 2; q <= 16; ++q)
    if (as_prime_power(q)) CHECK_FALSE(bruck_ryser_excluded(q));
}
