#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cyclicaut/curve.hpp"
#include "cyclicaut/errors.hpp"

using namespace cyclicaut;
using namespace cyclicaut::curve;

namespace {

// Riemann-Hurwitz by fixed-point counting: a point over a branch value with
// exponent k has gcd(n, k) preimages.
Int euler_genus(Int n, const std::vector<Int>& exps) {
  Int preimages = 0;
  for (Int k : exps) preimages += std::gcd(n, k);
  const Int twice = n * (static_cast<Int>(exps.size()) - 2) - preimages + 2;
  return twice / 2;
}

Triple brute_canonical(Int n, Triple t) {
  Triple best{n, n, n};
  for (Int k = 1; k < n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    Triple s{k * t[0] % n, k * t[1] % n, k * t[2] % n};
    std::sort(s.begin(), s.end());
    best = std::min(best, s);
  }
  return best;
}

}  // namespace

TEST_CASE("rationals normalize sign and common factors") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("branch point labels round-trip") {
  for (const char* s : {"0", "-1", "1", "3/2", "-7/3", "zeta5^2", "zeta12^7", "inf"})
    CHECK(BranchPoint::from_string(s).to_string() == s);
  CHECK(BranchPoint::root_of_unity(3, 6) == BranchPoint::minus_one());
  CHECK(BranchPoint::root_of_unity(4, 4) == BranchPoint::one());
  CHECK(BranchPoint::root_of_unity(2, 8).to_string() == "zeta4^1");
  CHECK(std::abs(BranchPoint::root_of_unity(1, 4).to_complex() - std::complex<double>(0, 1)) < 1e-15);
  CHECK_THROWS_AS(BranchPoint::infinity().to_complex(), std::domain_error);
  CHECK_THROWS_AS(BranchPoint::from_string("zeta5"), std::domain_error);
  CHECK_THROWS_AS(BranchPoint::from_string("1/x"), std::domain_error);
  CHECK_THROWS_AS(BranchPoint::root_of_unity(1, 0), std::domain_error);
}

TEST_CASE("cover construction reduces exponents and derives infinity") {
  auto c = CyclicCover::make(6, {{BranchPoint::zero(), 7}, {BranchPoint::one(), 12}, {BranchPoint::minus_one(), 2}});
  REQUIRE(c.branches.size() == 2);
  CHECK(c.branches[0].exponent == 1);
  CHECK(c.infinity_exponent == 3);
  CHECK(c.all_exponents() == std::vector<Int>{1, 2, 3});
  CHECK(c.branch_point_count() == 3);

  auto belyi = CyclicCover::belyi(7, 1, 2, 4);
  CHECK(belyi.infinity_exponent == 0);
  CHECK(belyi.equation() == "y^7 = x(x-1)^2(x+1)^4");

  CHECK_THROWS_AS(CyclicCover::make(1, {{BranchPoint::zero(), 1}}), std::domain_error);
  CHECK_THROWS_AS(CyclicCover::make(5, {{BranchPoint::zero(), 1}, {BranchPoint::zero(), 2}}), std::domain_error);
  CHECK_THROWS_AS(CyclicCover::make(5, {{BranchPoint::infinity(), 1}}), std::domain_error);
  CHECK_THROWS_AS(CyclicCover::make(5, {{BranchPoint::zero(), 5}}), std::domain_error);
  CHECK_THROWS_AS(CyclicCover::make(5, {{BranchPoint::zero(), 0}}), std::domain_error);
  CHECK_THROWS_AS(CyclicCover::make(5, {{BranchPoint::zero(), 1}}, Rational(0)), std::domain_error);
}

TEST_CASE("parser accepts products, coefficients and both Fermat orders") {
  auto c = parse_curve("y^7 = x(x-1)^2(x+1)^4");
  CHECK(c == CyclicCover::belyi(7, 1, 2, 4));
  CHECK(parse_curve("  y ^ 7=x*(x - 1)^2 * (x + 1)^4 ") == c);

  auto half = parse_curve("y^3 = -2*(x-1/2)^2 (x+3)");
  CHECK(half.coefficient == Rational(-2));
  CHECK(half.branches[0].point == BranchPoint(Rational(1, 2)));
  CHECK(half.branches[1].point == BranchPoint(Rational(-3)));

  auto f1 = parse_curve_form("y^5 + x^4 = 1");
  auto f2 = parse_curve_form("x^4 + y^5 = 1");
  REQUIRE(f1.fermat_degree);
  CHECK(*f1.fermat_degree == 4);
  CHECK(f1.cover == f2.cover);
  CHECK(f1.cover == fermat(5, 4));
  CHECK_FALSE(parse_curve_form("y^2 = x^3").fermat_degree);
}

TEST_CASE("parser reports the failing position") {
  auto position_of = [](const char* text) -> long {
    try {
      parse_curve(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position_of("y^4 = x(x-1") == 11);
  CHECK(position_of("z^4 = x") == 0);
  CHECK(position_of("y^4 = x^0") == 8);
  CHECK(position_of("y^4 = (x-1/0)") == 11);
  CHECK(position_of("y^4 + x^3 = 2") == 12);
  CHECK(position_of("y^4 =") == 5);
  CHECK_THROWS_AS(parse_curve("y^4 = x x"), std::domain_error);
  CHECK_THROWS_AS(parse_curve("y^1 = x"), std::domain_error);
}

TEST_CASE("Fermat curves have roots of unity as branch points") {
  auto f = fermat(6, 4);
  CHECK(f.branch_point_count() == 5);
  CHECK(f.infinity_exponent == 2);
  CHECK(f.coefficient == Rational(-1));
  CHECK(genus(fermat(5, 5)) == 6);
  for (Int n = 2; n <= 12; ++n) CHECK(genus(fermat(n, n)) == (n - 1) * (n - 2) / 2);
  CHECK_THROWS_AS(fermat(5, 0), std::domain_error);
}

TEST_CASE("genus matches hand values and the preimage count") {
  CHECK(genus(parse_curve("y^2 = x(x-1)(x+1)(x-2)(x-3)")) == 2);
  CHECK(genus(parse_curve("y^2 = x(x-1)(x+1)(x-2)(x-3)(x-4)")) == 2);
  CHECK(genus(parse_curve("y^2 = x(x-1)(x+1)")) == 1);
  CHECK(genus(CyclicCover::belyi(7, 1, 2, 4)) == 3);
  CHECK(genus(CyclicCover::belyi(24, 1, 4, 19)) == 10);
  CHECK_THROWS_AS(genus(parse_curve("y^4 = x^2(x-1)^2")), std::domain_error);
  CHECK_FALSE(is_irreducible(parse_curve("y^6 = x^2(x-1)^4")));

  for (Int n = 2; n <= 18; ++n)
    for (Int a = 1; a < n; ++a)
      for (Int b = 1; b < n; ++b)
        for (Int c = 1; c < n; ++c) {
          auto cover = CyclicCover::make(
              n, {{BranchPoint::zero(), a}, {BranchPoint::one(), b}, {Rational(2), c}});
          if (!is_irreducible(cover)) continue;
          const Int g = genus(cover);
          REQUIRE(g == euler_genus(n, cover.all_exponents()));
          REQUIRE(g == monodromy_genus(cover));
        }
}

TEST_CASE("signatures drop unramified points") {
  CHECK(signature_of(CyclicCover::belyi(7, 1, 2, 4)) == Signature{7, 7, 7});
  CHECK(signature_of(parse_curve("y^6 = x(x-1)^2(x+1)^3")) == Signature{2, 3, 6});
  CHECK(Signature{7, 2, 3}.to_string() == "(2,3,7)");
  CHECK_THROWS_AS(Signature({1, 3}), std::domain_error);
}

TEST_CASE("scaling exponents preserves genus") {
  auto c = CyclicCover::belyi(13, 1, 3, 9);
  for (Int l : {2, 5, 12}) {
    auto s = scale_exponents(c, l);
    CHECK(genus(s) == genus(c));
    CHECK(s.branches[0].exponent == l % 13);
  }
  CHECK_THROWS_AS(scale_exponents(CyclicCover::belyi(8, 1, 2, 5), 2), std::domain_error);
}

TEST_CASE("canonical triples agree with a brute force minimum") {
  for (Int n = 4; n <= 30; ++n)
    for (Int a = 1; a < n; ++a)
      for (Int b = 1; b < n; ++b) {
        const Int c = (2 * n - a - b) % n;
        if (c == 0 || numtheory::gcd_many({n, a, b, c}) != 1) continue;
        const Triple t{a, b, c};
        const Triple canon = canonical_triple(n, t);
        REQUIRE(canon == brute_canonical(n, t));
        const auto orbit = triple_orbit(n, t);
        REQUIRE(std::is_sorted(orbit.begin(), orbit.end()));
        REQUIRE(std::binary_search(orbit.begin(), orbit.end(), t));
        for (const auto& u : orbit) REQUIRE(canonical_triple(n, u) == canon);
      }
  CHECK(canonical_triple(7, 2, 4, 1) == Triple{1, 2, 4});
  CHECK(triple_orbit(7, {1, 2, 4}).size() == 12);
}

TEST_CASE("admissible triple checks") {
  CHECK_NOTHROW(check_admissible_triple(7, {1, 2, 4}));
  CHECK_THROWS_AS(check_admissible_triple(7, {1, 2, 3}), std::domain_error);
  CHECK_THROWS_AS(check_admissible_triple(8, {2, 2, 4}), std::domain_error);
  CHECK_THROWS_AS(check_admissible_triple(7, {0, 3, 4}), std::domain_error);
  CHECK_THROWS_AS(check_admissible_triple(1, {1, 1, 1}), std::domain_error);
}
