#include <doctest.h>

#include <vector>

#include "ryser/error.hpp"
#include "ryser/gf.hpp"

using namespace ryser;

namespace {

// Polynomials over Z_p as digit vectors, low degree first.
using Poly = std::vector<std::uint32_t>;

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& monic, std::uint32_t p) {
  const std::size_t k = monic.size() - 1;
  Poly prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t d = prod.size(); d-- > k;) {
    const auto c = prod[d];
    if (!c) continue;
    for (std::size_t i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + p * p - c * monic[i] % p) % p;
  }
  prod.resize(k);
  return prod;
}

Poly digits_of(std::uint32_t index, std::uint32_t p, std::uint32_t k) {
  Poly d(k);
  for (auto& x : d) {
    x = index % p;
    index /= p;
  }
  return d;
}

// A monic polynomial of degree 2 or 3 is irreducible iff it has no root.
bool has_root(const Poly& monic, std::uint32_t p) {
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t v = 0, pw = 1;
    for (auto c : monic) {
      v = (v + c * pw) % p;
      pw = pw * x % p;
    }
    if (v == 0) return true;
  }
  return false;
}

void check_field_axioms(const FiniteField& f) {
  const auto q = f.order();
  for (std::uint32_t a = 0; a < q; ++a) {
    const auto A = f.element(a);
    CHECK(f.add(A, f.zero()) == A);
    CHECK(f.mul(A, f.one()) == A);
    CHECK(f.add(A, f.neg(A)) == f.zero());
    if (a) CHECK(f.mul(A, f.inv(A)) == f.one());
    for (std::uint32_t b = 0; b < q; ++b) {
      const auto B = f.element(b);
      CHECK(f.add(A, B) == f.add(B, A));
      CHECK(f.mul(A, B) == f.mul(B, A));
      CHECK(f.sub(f.add(A, B), B) == A);
      for (std::uint32_t c = 0; c < q; c += (q > 9 ? 3 : 1)) {
        const auto C = f.element(c);
        CHECK(f.mul(A, f.add(B, C)) == f.add(f.mul(A, B), f.mul(A, C)));
        CHECK(f.mul(f.mul(A, B), C) == f.mul(A, f.mul(B, C)));
      }
    }
  }
}

}  // namespace

TEST_CASE("prime detection and prime powers") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
  CHECK(as_prime_power(8) == std::pair<std::uint32_t, std::uint32_t>{2, 3});
  CHECK(as_prime_power(25) == std::pair<std::uint32_t, std::uint32_t>{5, 2});
  CHECK(as_prime_power(7) == std::pair<std::uint32_t, std::uint32_t>{7, 1});
  CHECK_FALSE(as_prime_power(6).has_value());
  CHECK_FALSE(as_prime_power(1).has_value());
  CHECK_FALSE(as_prime_power(12).has_value());
}

TEST_CASE("prime fields agree with modular arithmetic") {
  for (std::uint32_t p : {2U, 3U, 5U, 7U, 11U, 13U}) {
    const auto f = FiniteField::build(p, 1);
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b) {
        CHECK(f.add(f.element(a), f.element(b)).index == (a + b) % p);
        CHECK(f.mul(f.element(a), f.element(b)).index == (a * b) % p);
      }
  }
}

TEST_CASE("GF(4) multiplication matches polynomial arithmetic mod x^2+x+1") {
  const auto f = FiniteField::build(2, 2);
  CHECK(f.modulus() == Poly{1, 1, 1});
  const Poly monic{1, 1, 1};
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b) {
      const auto expect = poly_mulmod(digits_of(a, 2, 2), digits_of(b, 2, 2), monic, 2);
      CHECK(f.digits(f.mul(f.element(a), f.element(b))) == expect);
      CHECK(f.add(f.element(a), f.element(b)).index == (a ^ b));
    }
  CHECK(f.format(f.element(3)) == "x+1");
}

TEST_CASE("extension fields: least irreducible modulus and polynomial products") {
  struct Case {
    std::uint32_t p, k;
  };
  for (auto [p, k] : {Case{2, 3}, Case{3, 2}, Case{5, 2}, Case{2, 2}, Case{3, 3}, Case{7, 2}}) {
    CAPTURE(p);
    CAPTURE(k);
    const auto f = FiniteField::build(p, k);
    const auto& mod = f.modulus();
    REQUIRE(mod.size() == k + 1);
    CHECK(mod.back() == 1);
    CHECK_FALSE(has_root(mod, p));
    // Every lexicographically smaller monic candidate (x^0 compared first,
    // so smaller = smaller reversed-digit value) must be reducible.
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < k; ++i) total *= p;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Poly cand(k + 1, 0);
      std::uint64_t t = idx;
      for (std::uint32_t i = k; i-- > 0;) {
        cand[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      cand[k] = 1;
      if (cand == mod) break;
      CHECK(has_root(cand, p));
    }
    for (std::uint32_t a = 0; a < f.order(); ++a)
      for (std::uint32_t b = 0; b < f.order(); ++b)
        CHECK(f.digits(f.mul(f.element(a), f.element(b))) == poly_mulmod(digits_of(a, p, k), digits_of(b, p, k), mod, p));
  }
}

TEST_CASE("field axioms hold exhaustively") {
  for (std::uint32_t q : {2U, 3U, 4U, 5U, 7U, 8U, 9U, 16U}) {
    CAPTURE(q);
    const auto pk = *as_prime_power(q);
    check_field_axioms(FiniteField::build(pk.first, pk.second));
  }
}

TEST_CASE("primitive element generates the multiplicative group") {
  for (std::uint32_t q : {2U, 3U, 4U, 8U, 9U, 25U, 27U}) {
    const auto pk = *as_prime_power(q);
    const auto f = FiniteField::build(pk.first, pk.second);
    const auto g = f.primitive();
    std::vector<bool> seen(q, false);
    auto x = f.one();
    for (std::uint32_t i = 0; i + 1 < q; ++i) {
      CHECK_FALSE(seen[x.index]);
      seen[x.index] = true;
      x = f.mul(x, g);
    }
    CHECK(x == f.one());
  }
}

TEST_CASE("field construction errors") {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::IoError;
  };
  CHECK(kind_of([] { FiniteField::build(6, 1); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { FiniteField::build(1, 1); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { FiniteField::build(3, 0); }) == ErrorKind::DegenerateDegree);
  CHECK(kind_of([] { FiniteField::build(2, 17); }) == ErrorKind::SizeExceeded);
  const auto f = FiniteField::build(5, 1);
  CHECK(kind_of([&] { f.inv(f.zero()); }) == ErrorKind::ZeroInverse);
}
