#include "cyclicaut/numtheory.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace cyclicaut::numtheory {

Int Factorization::value() const {
  Int v = 1;
  for (auto [p, e] : factors)
    for (int i = 0; i < e; ++i) v *= p;
  return v;
}

Int mod(Int a, Int n) {
  Int r = a % n;
  return r < 0 ? r + n : r;
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int lcm(Int a, Int b) { return std::lcm(a, b); }

Int gcd_many(std::span<const Int> values) {
  Int g = 0;
  for (Int v : values) {
    if (v < 0) throw std::domain_error("gcd_many: negative value");
    g = std::gcd(g, v);
  }
  if (g == 0) throw std::domain_error("undefined gcd");
  return g;
}

Int gcd_many(std::initializer_list<Int> values) {
  return gcd_many(std::span<const Int>(values.begin(), values.size()));
}

Int lcm_many(std::span<const Int> values) {
  if (values.empty()) throw std::domain_error("lcm_many: empty list");
  Int l = 1;
  for (Int v : values) {
    if (v < 1) throw std::domain_error("lcm_many: values must be positive");
    l = std::lcm(l, v);
  }
  return l;
}

Int lcm_many(std::initializer_list<Int> values) {
  return lcm_many(std::span<const Int>(values.begin(), values.size()));
}

bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Factorization factorize(Int n) {
  if (n < 2) throw std::domain_error("factorize: n must be >= 2, got " + std::to_string(n));
  Factorization f;
  for (Int d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) f.factors.emplace_back(d, e);
  }
  if (n > 1) f.factors.emplace_back(n, 1);
  return f;
}

std::vector<Int> units(Int n) {
  std::vector<Int> out;
  for (Int k = 1; k < n; ++k)
    if (std::gcd(k, n) == 1) out.push_back(k);
  return out;
}

Int inverse_mod(Int a, Int n) {
  a = mod(a, n);
  for (Int k = 1; k < n; ++k)
    if (mod(a * k, n) == 1) return k;
  throw std::domain_error("inverse_mod: " + std::to_string(a) + " is not a unit mod " +
                          std::to_string(n));
}

std::vector<Int> involutory_units(Int n) {
  if (n < 2) throw std::domain_error("involutory_units: n must be >= 2");
  std::vector<Int> out;
  for (Int k = 2; k < n; ++k)
    if (k * k % n == 1) out.push_back(k);
  return out;
}

std::vector<Int> omega_units(Int n) {
  if (n < 2) throw std::domain_error("omega_units: n must be >= 2");
  std::vector<Int> out;
  for (Int k = 1; k < n; ++k)
    if ((1 + k + k * k) % n == 0) out.push_back(k);
  return out;
}

bool has_prime_1_mod_3(Int n) {
  if (n < 2) throw std::domain_error("has_prime_1_mod_3: n must be >= 2");
  for (auto [p, e] : factorize(n).factors)
    if (p % 3 == 1) return true;
  return false;
}

Int unit_order(Int k, Int n) {
  if (std::gcd(mod(k, n), n) != 1) throw std::domain_error("unit_order: not a unit");
  Int x = mod(k, n), ord = 1;
  while (x != mod(1, n)) {
    x = x * k % n;
    ++ord;
  }
  return ord;
}

}  // namespace cyclicaut::numtheory
