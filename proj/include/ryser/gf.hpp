#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ryser {

/// Element of GF(p^k), encoded as the base-p digit vector of its
/// representative polynomial (digit i = coefficient of x^i).
struct FieldElement {
  std::uint32_t index = 0;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

bool is_prime(std::uint64_t n) noexcept;

/// Returns (p, k) with n = p^k, or nullopt when n is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> as_prime_power(std::uint64_t n) noexcept;

/// Immutable finite field GF(p^k) with table-driven multiplication.
class FiniteField {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 16;

  /// Builds GF(p^k) over the lexicographically least monic irreducible
  /// modulus of degree k (coefficients compared from x^0 upwards).
  /// Throws NotPrime, DegenerateDegree or SizeExceeded.
  static FiniteField build(std::uint32_t p, std::uint32_t k);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  std::uint32_t order() const noexcept { return q_; }
  /// Monic modulus coefficients, low degree first, length k+1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  FieldElement element(std::uint32_t index) const;

  FieldElement add(FieldElement a, FieldElement b) const noexcept;
  FieldElement sub(FieldElement a, FieldElement b) const noexcept;
  FieldElement neg(FieldElement a) const noexcept;
  FieldElement mul(FieldElement a, FieldElement b) const noexcept;
  /// Throws ZeroInverse for a = 0.
  FieldElement inv(FieldElement a) const;

  /// A generator of the multiplicative group (least index with order q-1).
  FieldElement primitive() const noexcept { return {exp_.empty() ? 1U : exp_[1 % exp_.size()]}; }

  std::vector<std::uint32_t> digits(FieldElement a) const;
  /// Polynomial rendering, e.g. "x^2+2x+1"; "0" for zero.
  std::string format(FieldElement a) const;

  friend bool operator==(const FiniteField&, const FiniteField&) = default;

 private:
  FiniteField() = default;

  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_;   // p^i
  std::vector<std::uint32_t> exp_;   // exp_[i] = g^i, i < q-1
  std::vector<std::uint32_t> log_;   // log_[a] for a != 0
};

}  // namespace ryser
