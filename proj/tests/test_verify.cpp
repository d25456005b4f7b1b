#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "cyclicaut/verify.hpp"

using namespace cyclicaut;
using namespace cyclicaut::verify;

TEST_CASE("sampled points lie on the curve and depend only on the seed") {
  const auto cover = curve::CyclicCover::belyi(7, 1, 2, 4);
  const auto model = AffineModel::from_cover(cover);
  const auto s = sample_curve(cover, 50, 3);
  REQUIRE(s.points.size() == 50);
  for (const auto& p : s.points) {
    CHECK(point_residual(model, p) <= kTolerance);
    CHECK(std::abs(p.x) >= 0.5 - 1e-12);
    CHECK(std::abs(p.x) <= 2.0 + 1e-12);
    CHECK(std::abs(p.x - 1.0) >= 0.1);
  }
  const auto again = sample_curve(cover, 50, 3);
  const auto other = sample_curve(cover, 50, 4);
  CHECK(same_point(s.points[7], again.points[7]));
  CHECK_FALSE(same_point(s.points[7], other.points[7]));
  CHECK_THROWS_AS(sample_curve(cover, 0, 0), std::domain_error);
}

TEST_CASE("deck transformations") {
  const auto model = AffineModel::from_cover(curve::CyclicCover::belyi(9, 1, 1, 7));
  const auto s = sample_curve(model, 40, 0);
  const auto t = RationalMap::deck(9);
  CHECK(action_residual(model, t, s) <= kTolerance);
  CHECK(verify_map_order(model, t, 9, s));
  CHECK_FALSE(verify_map_order(model, t, 3, s));
  CHECK_FALSE(verify_map_order(model, t, 18, s));
  CHECK(verify_map_order(model, RationalMap::deck(9, 3), 3, s));
  CHECK(verify_map_order(model, RationalMap::identity(), 1, s));
  CHECK_THROWS_AS(verify_map_order(model, t, 0, s), std::domain_error);

  const RationalMap three[] = {t, t, t};
  const RationalMap cubed[] = {RationalMap::deck(9, 3)};
  CHECK(relation_holds(three, cubed, s));
  const RationalMap once[] = {t};
  CHECK_FALSE(relation_holds(three, once, s));
}

TEST_CASE("a map that is not an automorphism leaves the curve") {
  const auto model = AffineModel::from_cover(curve::CyclicCover::belyi(7, 1, 2, 4));
  const auto s = sample_curve(model, 30, 1);
  RationalMap flip;
  flip.x_part.coefficient = -1.0;
  flip.x_part.x_exp = 1;
  flip.y_part.y_exp = 1;
  CHECK(action_residual(model, flip, s) > 1e-3);
  CHECK_FALSE(verify_map_order(model, flip, 2, s));
}

TEST_CASE("family builders reject bad parameters") {
  CHECK_THROWS_AS(accola_maclachlan(1), std::domain_error);
  CHECK_THROWS_AS(period_three(7, 3), std::domain_error);
  CHECK_THROWS_AS(twisted_involution(16, 7), std::domain_error);
  CHECK_THROWS_AS(twisted_involution(15, 2), std::domain_error);
  CHECK_THROWS_AS(verify_family("klein", 7, 0, 10, 0), std::domain_error);
  CHECK_THROWS_AS(verify_family("accola-maclachlan", 7, 0, 10, 0), std::domain_error);
  const auto pt = period_three(13, 3);
  CHECK(pt.alpha == 1);
  CHECK(pt.beta == 2);
  const auto ti = twisted_involution(15, 4);
  CHECK(ti.beta == 1);
}

TEST_CASE("family relations hold and false relations do not") {
  for (std::uint64_t seed : {0u, 5u}) {
    CHECK(verify_family("accola-maclachlan", 10, 0, 40, seed).all_pass());
    CHECK(verify_family("periodthree", 19, 7, 40, seed).all_pass());
    CHECK(verify_family("twistedz2", 12, 5, 40, seed).all_pass());
  }
  const auto ti = twisted_involution(15, 4);
  const auto s = sample_curve(ti.model, 30, 2);
  const RationalMap uvu[] = {ti.u, ti.v, ti.u};
  const std::vector<RationalMap> wrong(5, ti.v);
  CHECK_FALSE(relation_holds(uvu, wrong, s));
}

TEST_CASE("class enumeration") {
  CHECK(enumerate_classes(5).classes.size() == 1);
  CHECK(enumerate_classes(7).classes.size() == 2);
  for (Int n = 4; n <= 24; ++n) {
    const auto e = enumerate_classes(n);
    REQUIRE(e.ordered_triples == static_cast<std::size_t>((n - 1) * (n - 2)));
    std::size_t members = 0;
    for (const auto& c : e.classes) {
      members += c.orbit_size;
      REQUIRE(c.report.canonical_triple == c.canonical);
      const bool all_units = std::gcd(n, c.canonical[0]) == 1 && std::gcd(n, c.canonical[1]) == 1 &&
                             std::gcd(n, c.canonical[2]) == 1;
      if (all_units) {
        REQUIRE(n % 2 == 1);
        REQUIRE(c.report.genus == (n - 1) / 2);
      }
    }
    REQUIRE(members == e.admissible_triples);
  }
  CHECK_THROWS_AS(enumerate_classes(3), std::domain_error);
  CHECK_THROWS_AS(enumerate_classes(61), std::domain_error);
  CHECK_NOTHROW(enumerate_classes(8, 8));
}

TEST_CASE("cross-check passes and names its checks") {
  const auto rep = cross_check(12);
  CHECK(rep.all_pass());
  std::vector<std::string> names;
  for (const auto& c : rep.checks) {
    names.push_back(c.name);
    CHECK(c.n_min == 4);
    CHECK(c.n_max == 12);
  }
  CHECK(names == std::vector<std::string>{"record_agreement", "equivalence_invariance",
                                          "scaling_invariance", "monodromy_genus", "genus_column",
                                          "order_law", "hurwitz_bound", "harvey_admissible",
                                          "default_not_extendable", "no_unit_exponent_cyclic",
                                          "lefschetz_consistency"});
  CHECK_THROWS_AS(cross_check(3), std::domain_error);
  CrossCheckOptions bad;
  bad.n_min = 9;
  bad.n_max = 8;
  CHECK_THROWS_AS(cross_check(bad), std::domain_error);
}

TEST_CASE("cross-check detects an injected genus fault") {
  CrossCheckOptions opt;
  opt.n_max = 10;
  opt.genus = [](const curve::CyclicCover& c) {
    const Int g = curve::genus(c);
    return c.n == 9 ? g + 1 : g;
  };
  const auto rep = cross_check(opt);
  CHECK_FALSE(rep.all_pass());
  bool flagged = false;
  for (const auto& c : rep.checks)
    if (c.name == "monodromy_genus") {
      flagged = !c.pass;
      REQUIRE(c.witness);
      CHECK(c.witness->find("9") != std::string::npos);
    }
  CHECK(flagged);
}

TEST_CASE("cross-check from records catches a tampered record") {
  auto records = enumerate_classes(7).classes;
  for (Int n = 4; n <= 6; ++n) {
    auto more = enumerate_classes(n).classes;
    records.insert(records.end(), more.begin(), more.end());
  }
  CHECK(cross_check_records(records).all_pass());
  records.front().report.group.order += 1;
  const auto rep = cross_check_records(records);
  CHECK_FALSE(rep.all_pass());
  CHECK_FALSE(rep.checks.front().pass);
  CHECK_THROWS_AS(cross_check_records({}), std::domain_error);
}

TEST_CASE("order checks do not depend on the seed") {
  const auto am = accola_maclachlan(4);
  const auto pt = period_three(7, 2);
  const auto ti = twisted_involution(21, 8);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CHECK(verify_map_order(am.model, am.u, 4, sample_curve(am.model, 20, seed)));
    CHECK_FALSE(verify_map_order(am.model, am.u, 2, sample_curve(am.model, 20, seed)));
    CHECK(verify_map_order(pt.model, pt.s, 3, sample_curve(pt.model, 20, seed)));
    CHECK(verify_map_order(ti.model, ti.u, 2, sample_curve(ti.model, 20, seed)));
  }
}

TEST_CASE("the smallest degree has the A.2 class") {
  const auto e = enumerate_classes(4);
  REQUIRE(e.classes.size() == 1);
  CHECK(e.classes[0].canonical == curve::Triple{1, 1, 2});
  CHECK(e.classes[0].report.row == "A.2");
}
