#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ryser/bitset.hpp"
#include "ryser/gf.hpp"
#include "ryser/hypergraph.hpp"

namespace ryser {

/// Homogeneous triple, normalized so that its first nonzero coordinate is 1.
using ProjTriple = std::array<FieldElement, 3>;

/// The Desarguesian plane PG(2, q). Points and lines are both the normalized
/// triples in lexicographic order; point P lies on line L iff P . L = 0.
class ProjectivePlane {
 public:
  explicit ProjectivePlane(FiniteField field);

  const FiniteField& field() const noexcept { return field_; }
  std::uint32_t order() const noexcept { return field_.order(); }
  std::size_t num_points() const noexcept { return points_.size(); }
  std::size_t num_lines() const noexcept { return lines_.size(); }

  const ProjTriple& point(std::size_t i) const { return points_.at(i); }
  const ProjTriple& line(std::size_t i) const { return lines_.at(i); }
  /// Incident point indices of line `i`, ascending.
  const std::vector<std::uint32_t>& line_points(std::size_t i) const { return line_points_.at(i); }
  const Bitset& incidence(std::size_t i) const { return incidence_.at(i); }
  bool incident(std::size_t point, std::size_t line) const { return incidence_.at(line).test(point); }

  std::string format_triple(const ProjTriple& t) const;
  /// One text line per plane line, listing its normalized point triples.
  std::string dump() const;

  friend bool operator==(const ProjectivePlane&, const ProjectivePlane&) = default;

 private:
  FiniteField field_;
  std::vector<ProjTriple> points_;
  std::vector<ProjTriple> lines_;
  std::vector<std::vector<std::uint32_t>> line_points_;
  std::vector<Bitset> incidence_;
};

ProjectivePlane build_plane(const FiniteField& field);
/// Convenience: PG(2, q) for a prime power q.
ProjectivePlane build_plane(std::uint32_t q);

struct PlaneAxioms {
  bool counts_ok = false;       // q^2+q+1 points and lines, q+1 points per line
  bool points_on_one_line = false;
  bool lines_meet_once = false;
  std::string counterexample;   // first failure, empty when all hold

  bool ok() const noexcept { return counts_ok && points_on_one_line && lines_meet_once; }
};

/// Exhaustive check over all point pairs and all line pairs.
PlaneAxioms check_plane_axioms(const ProjectivePlane& plane);

/// Deletes point `v` and every line through it. Sides follow the lines
/// through `v` in line order; vertices within a side follow point order and
/// are labelled "p<point index>". Throws InvalidPointIndex.
PartiteHypergraph truncate(const ProjectivePlane& plane, std::size_t v = 0);

/// True iff n = 1 or 2 (mod 4) and n is not a sum of two squares, i.e. a
/// projective plane of order n is ruled out by the Bruck-Ryser criterion.
bool bruck_ryser_excluded(std::uint64_t n);

}  // namespace ryser
