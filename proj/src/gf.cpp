#include "ryser/gf.hpp"

#include <algorithm>

#include "ryser/error.hpp"

namespace ryser {

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over Z_p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * static_cast<std::uint64_t>(b[i])) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<std::uint32_t>((c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  return poly_mod(std::move(c), m, p);
}

// Monic polynomial of degree d whose lower coefficients are the base-p digits
// of `n`, read low degree first.
Poly monic_from_index(std::uint64_t n, std::uint32_t p, std::uint32_t d) {
  Poly f(d + 1, 0);
  for (std::uint32_t i = 0; i < d; ++i) {
    f[i] = static_cast<std::uint32_t>(n % p);
    n /= p;
  }
  f[d] = 1;
  return f;
}

bool irreducible(const Poly& f, std::uint32_t p) {
  const auto k = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
      if (poly_mod(f, monic_from_index(n, p, d), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> as_prime_power(std::uint64_t n) noexcept {
  if (n < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::pair{static_cast<std::uint32_t>(n), 1U};
  std::uint32_t k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return std::pair{static_cast<std::uint32_t>(p), k};
}

FiniteField FiniteField::build(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(ErrorKind::DegenerateDegree, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) throw Error(ErrorKind::SizeExceeded, "field order exceeds 2^16");
  }

  FiniteField f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = static_cast<std::uint32_t>(q);
  f.pow_.resize(k + 1);
  f.pow_[0] = 1;
  for (std::uint32_t i = 1; i <= k; ++i) f.pow_[i] = f.pow_[i - 1] * p;

  if (k == 1) {
    f.modulus_ = {0, 1};
  } else {
    // Enumerate lower coefficient vectors with c0 as the most significant
    // digit so that iteration order is lexicographic low-degree-first.
    for (std::uint64_t n = 0; n < q; ++n) {
      Poly cand(k + 1, 0);
      std::uint64_t m = n;
      for (std::uint32_t i = k; i-- > 0;) {
        cand[i] = static_cast<std::uint32_t>(m % p);
        m /= p;
      }
      cand[k] = 1;
      if (irreducible(cand, p)) {
        f.modulus_ = std::move(cand);
        break;
      }
    }
  }

  auto to_poly = [&](std::uint32_t idx) {
    Poly a(k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
      a[i] = idx % p;
      idx /= p;
    }
    trim(a);
    return a;
  };
  auto to_index = [&](const Poly& a) {
    std::uint32_t idx = 0;
    for (std::size_t i = 0; i < a.size(); ++i) idx += a[i] * f.pow_[i];
    return idx;
  };

  const std::uint32_t group = f.q_ - 1;
  std::vector<std::uint32_t> powers;
  powers.reserve(group);
  for (std::uint32_t g = 1; g < f.q_; ++g) {
    powers.assign(1, 1);
    const Poly gp = to_poly(g);
    Poly cur = to_poly(1);
    for (std::uint32_t e = 1; e < group; ++e) {
      cur = poly_mulmod(cur, gp, f.modulus_, p);
      const std::uint32_t idx = to_index(cur);
      if (idx == 1) break;
      powers.push_back(idx);
    }
    if (powers.size() == group) break;
  }
  f.exp_ = powers;
  f.log_.assign(f.q_, 0);
  for (std::uint32_t e = 0; e < group; ++e) f.log_[f.exp_[e]] = e;
  return f;
}

FieldElement FiniteField::element(std::uint32_t index) const {
  if (index >= q_) throw std::out_of_range("field element index out of range");
  return {index};
}

FieldElement FiniteField::add(FieldElement a, FieldElement b) const noexcept {
  if (p_ == 2) return {a.index ^ b.index};
  std::uint32_t x = a.index, y = b.index, out = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((x % p_ + y % p_) % p_) * pow_[i];
    x /= p_;
    y /= p_;
  }
  return {out};
}

FieldElement FiniteField::neg(FieldElement a) const noexcept {
  if (p_ == 2) return a;
  std::uint32_t x = a.index, out = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((p_ - x % p_) % p_) * pow_[i];
    x /= p_;
  }
  return {out};
}

FieldElement FiniteField::sub(FieldElement a, FieldElement b) const noexcept { return add(a, neg(b)); }

FieldElement FiniteField::mul(FieldElement a, FieldElement b) const noexcept {
  if (a.index == 0 || b.index == 0) return {0};
  const std::uint32_t group = q_ - 1;
  return {exp_[(log_[a.index] + log_[b.index]) % group]};
}

FieldElement FiniteField::inv(FieldElement a) const {
  if (a.index == 0) throw Error(ErrorKind::ZeroInverse, "zero has no multiplicative inverse");
  const std::uint32_t group = q_ - 1;
  return {exp_[(group - log_[a.index]) % group]};
}

std::vector<std::uint32_t> FiniteField::digits(FieldElement a) const {
  std::vector<std::uint32_t> d(k_, 0);
  std::uint32_t x = a.index;
  for (std::uint32_t i = 0; i < k_; ++i) {
    d[i] = x % p_;
    x /= p_;
  }
  return d;
}

std::string FiniteField::format(FieldElement a) const {
  if (a.index == 0) return "0";
  const auto d = digits(a);
  std::string out;
  for (std::uint32_t i = k_; i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0 || d[i] != 1) out += std::to_string(d[i]);
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

}  // namespace ryser
