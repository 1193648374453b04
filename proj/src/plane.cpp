#include "ryser/plane.hpp"

#include <sstream>

#include "ryser/error.hpp"

namespace ryser {

namespace {

std::vector<ProjTriple> normalized_triples(std::uint32_t q) {
  // Lexicographic order: (0,0,1), (0,1,c), (1,b,c).
  std::vector<ProjTriple> out;
  out.reserve(static_cast<std::size_t>(q) * q + q + 1);
  out.push_back({FieldElement{0}, FieldElement{0}, FieldElement{1}});
  for (std::uint32_t c = 0; c < q; ++c) out.push_back({FieldElement{0}, FieldElement{1}, FieldElement{c}});
  for (std::uint32_t b = 0; b < q; ++b)
    for (std::uint32_t c = 0; c < q; ++c) out.push_back({FieldElement{1}, FieldElement{b}, FieldElement{c}});
  return out;
}

}  // namespace

ProjectivePlane::ProjectivePlane(FiniteField field) : field_(std::move(field)) {
  points_ = normalized_triples(field_.order());
  lines_ = points_;
  line_points_.resize(lines_.size());
  incidence_.assign(lines_.size(), Bitset(points_.size()));
  for (std::size_t l = 0; l < lines_.size(); ++l) {
    const auto& L = lines_[l];
    for (std::size_t p = 0; p < points_.size(); ++p) {
      const auto& P = points_[p];
      auto dot = field_.add(field_.add(field_.mul(P[0], L[0]), field_.mul(P[1], L[1])), field_.mul(P[2], L[2]));
      if (dot.index == 0) {
        line_points_[l].push_back(static_cast<std::uint32_t>(p));
        incidence_[l].set(p);
      }
    }
  }
}

std::string ProjectivePlane::format_triple(const ProjTriple& t) const {
  return "(" + std::to_string(t[0].index) + "," + std::to_string(t[1].index) + "," + std::to_string(t[2].index) + ")";
}

std::string ProjectivePlane::dump() const {
  std::ostringstream out;
  for (std::size_t l = 0; l < lines_.size(); ++l) {
    out << "L" << l << ' ' << format_triple(lines_[l]) << ':';
    for (auto p : line_points_[l]) out << ' ' << format_triple(points_[p]);
    out << '\n';
  }
  return out.str();
}

ProjectivePlane build_plane(const FiniteField& field) { return ProjectivePlane(field); }

ProjectivePlane build_plane(std::uint32_t q) {
  auto pk = as_prime_power(q);
  if (!pk) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  return ProjectivePlane(FiniteField::build(pk->first, pk->second));
}

PartiteHypergraph truncate(const ProjectivePlane& plane, std::size_t v) {
  if (v >= plane.num_points())
    throw Error(ErrorKind::InvalidPointIndex, "point " + std::to_string(v) + " outside plane of " +
                                                  std::to_string(plane.num_points()) + " points");
  std::vector<std::vector<std::string>> sides;
  // point index -> (side, pos)
  std::vector<VertexId> place(plane.num_points());
  for (std::size_t l = 0; l < plane.num_lines(); ++l) {
    if (!plane.incident(v, l)) continue;
    std::vector<std::string> labels;
    const auto side = static_cast<std::uint32_t>(sides.size());
    for (auto p : plane.line_points(l)) {
      if (p == v) continue;
      place[p] = {side, static_cast<std::uint32_t>(labels.size())};
      labels.push_back("p" + std::to_string(p));
    }
    sides.push_back(std::move(labels));
  }
  std::vector<EdgeSpec> edges;
  for (std::size_t l = 0; l < plane.num_lines(); ++l) {
    if (plane.incident(v, l)) continue;
    EdgeSpec e;
    for (auto p : plane.line_points(l)) e.vertices.push_back(place[p]);
    edges.push_back(std::move(e));
  }
  return PartiteHypergraph(std::move(sides), std::move(edges), "T" + std::to_string(plane.order() + 1));
}

bool bruck_ryser_excluded(std::uint64_t n) {
  if (n % 4 != 1 && n % 4 != 2) return false;
  for (std::uint64_t a = 0; a * a <= n; ++a) {
    const std::uint64_t rest = n - a * a;
    std::uint64_t b = 0;
    while ((b + 1) * (b + 1) <= rest) ++b;
    if (b * b == rest) return false;
  }
  return true;
}

PlaneAxioms check_plane_axioms(const ProjectivePlane& plane) {
  PlaneAxioms res;
  const std::size_t q = plane.order();
  const std::size_t n = q * q + q + 1;
  res.counts_ok = plane.num_points() == n && plane.num_lines() == n;
  for (std::size_t l = 0; res.counts_ok && l < plane.num_lines(); ++l)
    if (plane.line_points(l).size() != q + 1) {
      res.counts_ok = false;
      res.counterexample = "line " + std::to_string(l) + " has " + std::to_string(plane.line_points(l).size()) + " points";
    }
  if (!res.counts_ok && res.counterexample.empty()) res.counterexample = "wrong number of points or lines";

  // Two distinct points: exactly one common line.
  std::vector<Bitset> lines_through(plane.num_points(), Bitset(plane.num_lines()));
  for (std::size_t l = 0; l < plane.num_lines(); ++l)
    for (auto p : plane.line_points(l)) lines_through[p].set(l);
  res.points_on_one_line = true;
  for (std::size_t a = 0; a < plane.num_points() && res.points_on_one_line; ++a)
    for (std::size_t b = a + 1; b < plane.num_points(); ++b)
      if (lines_through[a].intersection_count(lines_through[b]) != 1) {
        res.points_on_one_line = false;
        if (res.counterexample.empty())
          res.counterexample = "points " + std::to_string(a) + "," + std::to_string(b) + " not on a unique line";
        break;
      }
  res.lines_meet_once = true;
  for (std::size_t a = 0; a < plane.num_lines() && res.lines_meet_once; ++a)
    for (std::size_t b = a + 1; b < plane.num_lines(); ++b)
      if (plane.incidence(a).intersection_count(plane.incidence(b)) != 1) {
        res.lines_meet_once = false;
        if (res.counterexample.empty())
          res.counterexample = "lines " + std::to_string(a) + "," + std::to_string(b) + " do not meet once";
        break;
      }
  return res;
}

}  // namespace ryser
