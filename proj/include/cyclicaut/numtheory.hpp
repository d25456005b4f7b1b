#pragma once

// Exact integer helpers shared by every other module.  Everything here works
// on small moduli (a few hundred at most in practice), so the congruence
// solvers are plain residue scans.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cyclicaut {

using Int = std::int64_t;

namespace numtheory {

/// Prime-power decomposition, primes strictly increasing.
struct Factorization {
  std::vector<std::pair<Int, int>> factors;

  Int value() const;
  bool operator==(const Factorization&) const = default;
};

/// Non-negative representative of `a mod n` (n >= 1).
Int mod(Int a, Int n);

Int gcd(Int a, Int b);
Int lcm(Int a, Int b);

/// gcd of a nonempty list; throws std::domain_error("undefined gcd") when
/// every value is zero.
Int gcd_many(std::span<const Int> values);
Int gcd_many(std::initializer_list<Int> values);

/// lcm of a nonempty list of positive integers.
Int lcm_many(std::span<const Int> values);
Int lcm_many(std::initializer_list<Int> values);

bool is_prime(Int p);

/// Trial division; throws std::domain_error for n < 2.
Factorization factorize(Int n);

/// Residues k in [1, n-1] with gcd(k, n) = 1, ascending.
std::vector<Int> units(Int n);

/// Inverse of a unit mod n; throws std::domain_error when gcd(a, n) != 1.
Int inverse_mod(Int a, Int n);

/// k in [2, n-1] with k^2 = 1 (mod n), ascending.
std::vector<Int> involutory_units(Int n);

/// k in [1, n-1] with 1 + k + k^2 = 0 (mod n), ascending.
std::vector<Int> omega_units(Int n);

/// True iff some prime divisor p of n has p = 1 (mod 3).
bool has_prime_1_mod_3(Int n);

/// Multiplicative order of a unit k mod n.
Int unit_order(Int k, Int n);

}  // namespace numtheory
}  // namespace cyclicaut
