#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ryser/construct.hpp"
#include "ryser/error.hpp"

namespace ryser {

std::size_t isqrt(std::size_t n) noexcept {
  auto s = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

std::ptrdiff_t DegreeProfile::x_last() const noexcept {
  const auto sum = std::accumulate(x.begin(), x.end(), std::size_t{0});
  return static_cast<std::ptrdiff_t>(r) - 1 - static_cast<std::ptrdiff_t>(sum);
}

std::vector<std::size_t> DegreeProfile::expected_side_degrees() const {
  std::vector<std::size_t> d{1};
  for (auto xi : x) d.push_back(2 * xi);
  d.push_back(2 * static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, x_last())));
  std::sort(d.begin(), d.end());
  return d;
}

void validate_profile(const DegreeProfile& profile, ProfileRules rules) {
  const std::size_t r = profile.r;
  const std::size_t t = profile.t();
  auto bad = [](const std::string& msg) { throw Error(ErrorKind::ProfileInvalid, msg); };
  if (r < 3) bad("uniformity must be at least 3");
  if (t + 1 > r - 2) bad("t + 1 must be at most r - 2");
  if (profile.x_last() < 1) bad("x_{t+1} = r - 1 - sum(x) must be positive");
  if (rules == ProfileRules::Strict) {
    if (t == 0) bad("at least one block size is required");
    const std::size_t hi = isqrt(r);
    for (auto xi : profile.x)
      if (xi <= t + 2 || xi > hi)
        bad("x = " + std::to_string(xi) + " outside (" + std::to_string(t + 2) + ", " + std::to_string(hi) + "]");
  } else {
    for (auto xi : profile.x)
      if (xi == 0) bad("block sizes must be positive");
  }
}

ConstructionSpec select_F_by_profile(PartiteHypergraph base, std::size_t s_edge, const DegreeProfile& profile,
                                     ProfileRules rules) {
  validate_profile(profile, rules);
  const std::size_t r = base.num_sides();
  if (profile.r != r)
    throw Error(ErrorKind::ProfileInvalid, "profile is for r = " + std::to_string(profile.r) + ", base has " +
                                               std::to_string(r) + " sides");
  if (s_edge >= base.num_edges()) throw Error(ErrorKind::SpecInvalid, "S edge index out of range");

  ConstructionSpec spec{std::move(base), s_edge, std::vector<std::size_t>(r, 0)};
  const auto& b = spec.base;
  const auto s1 = spec.s_vertex(0);

  std::vector<VertexId> w;
  for (std::uint32_t p = 0; p < b.side_size(0); ++p)
    if (p != s1.pos) w.push_back({0, p});
  if (w.size() < profile.t() + 1)
    throw Error(ErrorKind::ProfileInvalid, "side 1 has too few vertices for " + std::to_string(profile.t() + 1) + " blocks");

  auto line_through = [&](VertexId a, VertexId c) -> std::size_t {
    const auto ga = b.global_id(a), gc = b.global_id(c);
    std::optional<std::size_t> found;
    for (std::size_t k = 0; k < b.num_edges(); ++k) {
      if (b.edge_bits(k).test(ga) && b.edge_bits(k).test(gc)) {
        if (found) throw Error(ErrorKind::LineNotFound, "two lines through " + to_string(a) + " and " + to_string(c));
        found = k;
      }
    }
    if (!found) throw Error(ErrorKind::LineNotFound, "no line through " + to_string(a) + " and " + to_string(c));
    return *found;
  };

  std::vector<std::size_t> blocks = profile.x;
  blocks.push_back(static_cast<std::size_t>(profile.x_last()));
  std::size_t side = 1;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t n = 0; n < blocks[i]; ++n, ++side) spec.f_edges[side] = line_through(spec.s_vertex(side), w[i]);

  const auto g1 = b.global_id(s1);
  std::optional<std::size_t> f1;
  for (std::size_t k = 0; k < b.num_edges() && !f1; ++k)
    if (k != s_edge && b.edge_bits(k).test(g1)) f1 = k;
  if (!f1) throw Error(ErrorKind::LineNotFound, "no line other than S through s_1");
  spec.f_edges[0] = *f1;
  return spec;
}

namespace {

// C(n, k) with exact 128-bit intermediate products; nullopt past 2^64.
std::optional<std::uint64_t> binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace

std::size_t profile_t(std::size_t r, double delta) {
  const double v = std::pow(static_cast<double>(r), 0.5 - delta);
  auto t = static_cast<std::size_t>(std::floor(v + 1e-9));
  return t;
}

ProfileCount profile_count_for_t(std::size_t r, std::size_t t) {
  ProfileCount pc;
  pc.r = r;
  pc.t = t;
  pc.lo = t + 3;
  pc.hi = isqrt(r);
  if (t == 0) {
    pc.count = 0;
    pc.lower_bound = 0;
    pc.note = "degenerate: t = 0";
    return pc;
  }
  if (pc.lo > pc.hi) {
    pc.count = 0;
    pc.lower_bound = 0;
    pc.note = "degenerate: empty value range (" + std::to_string(t + 2) + ", " + std::to_string(pc.hi) + "]";
    return pc;
  }
  const std::uint64_t m = pc.hi - pc.lo + 1;
  pc.count = binomial(m + t - 1, t);
  // t + sqrt(r) - (t+2) - 1 with sqrt(r) rounded down.
  pc.lower_bound = binomial(t + pc.hi - (t + 2) - 1, t);
  return pc;
}

ProfileCount profile_count(std::size_t r, double delta) { return profile_count_for_t(r, profile_t(r, delta)); }

std::vector<std::vector<std::size_t>> enumerate_profiles(std::size_t r, std::size_t t) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t lo = t + 3, hi = isqrt(r);
  if (t == 0 || lo > hi) return out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (cur.size() == t) {
      out.push_back(cur);
      return;
    }
    for (std::size_t x = from; x <= hi; ++x) {
      cur.push_back(x);
      self(self, x);
      cur.pop_back();
    }
  };
  rec(rec, lo);
  return out;
}

}  // namespace ryser
