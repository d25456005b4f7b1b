#include <doctest.h>

#include <stdexcept>

#include "cyclicaut/numtheory.hpp"

using namespace cyclicaut;
using namespace cyclicaut::numtheory;

namespace {

Int scan_gcd(Int a, Int b) {
  Int best = 1;
  for (Int d = 1; d <= std::max(a, b); ++d)
    if (a % d == 0 && b % d == 0) best = d;
  return best;
}

bool scan_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d < p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("mod is non-negative") {
  CHECK(mod(-1, 5) == 4);
  CHECK(mod(-10, 5) == 0);
  CHECK(mod(12, 5) == 2);
  CHECK(mod(0, 1) == 0);
}

TEST_CASE("gcd and lcm agree with divisor scans") {
  for (Int a = 1; a <= 40; ++a)
    for (Int b = 1; b <= 40; ++b) {
      const Int g = scan_gcd(a, b);
      REQUIRE(gcd(a, b) == g);
      REQUIRE(lcm(a, b) == a * b / g);
    }
  CHECK(gcd(0, 7) == 7);
  CHECK(gcd_many({12, 18, 30}) == 6);
  CHECK(gcd_many({0, 0, 4}) == 4);
  CHECK(lcm_many({4, 6, 10}) == 60);
}

TEST_CASE("gcd_many and lcm_many reject degenerate input") {
  CHECK_THROWS_AS(gcd_many({0, 0}), std::domain_error);
  CHECK_THROWS_AS(gcd_many({3, -6}), std::domain_error);
  CHECK_THROWS_AS(lcm_many(std::span<const Int>{}), std::domain_error);
  CHECK_THROWS_AS(lcm_many({3, 0}), std::domain_error);
}

TEST_CASE("primality and factorization match trial division") {
  for (Int p = -3; p <= 500; ++p) REQUIRE(is_prime(p) == scan_prime(p));
  for (Int n = 2; n <= 500; ++n) {
    const auto f = factorize(n);
    REQUIRE(f.value() == n);
    Int last = 1;
    for (auto [p, e] : f.factors) {
      REQUIRE(scan_prime(p));
      REQUIRE(p > last);
      REQUIRE(e >= 1);
      last = p;
    }
  }
  CHECK(factorize(360) == Factorization{{{2, 3}, {3, 2}, {5, 1}}});
  CHECK_THROWS_AS(factorize(1), std::domain_error);
}

TEST_CASE("unit sets match residue scans") {
  for (Int n = 2; n <= 60; ++n) {
    std::vector<Int> u, inv, om;
    for (Int k = 1; k < n; ++k) {
      if (scan_gcd(k, n) == 1) u.push_back(k);
      if (k >= 2 && k * k % n == 1) inv.push_back(k);
      if ((1 + k + k * k) % n == 0) om.push_back(k);
    }
    REQUIRE(units(n) == u);
    REQUIRE(involutory_units(n) == inv);
    REQUIRE(omega_units(n) == om);
    for (Int k : u) {
      REQUIRE(mod(k * inverse_mod(k, n), n) == 1);
      Int ord = 1, x = k % n;
      while (x != 1 % n) {
        x = x * k % n;
        ++ord;
      }
      REQUIRE(unit_order(k, n) == ord);
    }
  }
  CHECK(units(2) == std::vector<Int>{1});
  CHECK(involutory_units(8) == std::vector<Int>{3, 5, 7});
  CHECK(omega_units(7) == std::vector<Int>{2, 4});
}

TEST_CASE("primes congruent to 1 mod 3") {
  for (Int n = 2; n <= 200; ++n) {
    bool expect = false;
    for (auto [p, e] : factorize(n).factors) expect = expect || p % 3 == 1;
    REQUIRE(has_prime_1_mod_3(n) == expect);
  }
}

TEST_CASE("unit helpers reject bad arguments") {
  CHECK_THROWS_AS(inverse_mod(2, 4), std::domain_error);
  CHECK_THROWS_AS(unit_order(3, 9), std::domain_error);
  CHECK_THROWS_AS(involutory_units(1), std::domain_error);
  CHECK_THROWS_AS(omega_units(0), std::domain_error);
  CHECK_THROWS_AS(has_prime_1_mod_3(1), std::domain_error);
}
