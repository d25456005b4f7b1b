#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cyclicaut/fuchsian.hpp"

using namespace cyclicaut;
using namespace cyclicaut::fuchsian;

namespace {

// Hyperbolic area of a genus-0 group over 2*pi, scaled by `scale` (a
// common multiple of the periods) so it stays integral.
Int scaled_area(const Signature& s, Int scale) {
  Int a = (static_cast<Int>(s.size()) - 2) * scale;
  for (Int m : s.periods) a -= scale / m;
  return a;
}

bool skep_exists(const std::vector<Int>& periods, Int n) {
  std::vector<std::vector<Int>> choices;
  for (Int m : periods) {
    std::vector<Int> ks;
    for (Int k = 1; k < n; ++k)
      if (n / std::gcd(n, k) == m) ks.push_back(k);
    if (ks.empty()) return false;
    choices.push_back(ks);
  }
  std::vector<std::size_t> idx(periods.size(), 0);
  for (;;) {
    Int sum = 0, g = n;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      sum += choices[i][idx[i]];
      g = std::gcd(g, choices[i][idx[i]]);
    }
    if (sum % n == 0 && g == 1) return true;
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
    if (i == idx.size()) return false;
  }
}

std::set<std::pair<int, std::vector<Int>>> case_set(const std::vector<CbMatch>& ms) {
  std::set<std::pair<int, std::vector<Int>>> out;
  for (const auto& m : ms) out.insert({m.case_id, m.outer.periods});
  return out;
}

std::vector<std::string> row_ids(const Signature& s) {
  std::vector<std::string> ids;
  for (const auto& e : gs_extensions(s)) ids.push_back(e.row->id);
  return ids;
}

}  // namespace

TEST_CASE("extension table layout") {
  const auto& t = gs_table();
  REQUIRE(t.size() == 16);
  std::vector<std::string> ids;
  for (const auto& r : t) ids.push_back(r.id);
  CHECK(ids == std::vector<std::string>{"1", "2", "3", "A", "B", "4", "5", "6", "7", "8", "9",
                                        "10", "11", "12", "13", "14"});
  for (std::size_t i = 0; i < t.size(); ++i) CHECK(t[i].normal == (i < 5));
  CHECK(gs_row("12").index == 4);
  CHECK_THROWS_AS(gs_row("15"), std::domain_error);
}

TEST_CASE("extension indices equal the area ratio") {
  std::size_t seen = 0;
  std::set<std::string> rows_hit;
  auto check_all = [&](const std::vector<Int>& periods) {
    const Signature s(periods);
    for (const auto& e : gs_extensions(s)) {
      const Int scale = numtheory::lcm_many(s.periods) * numtheory::lcm_many(e.outer.periods);
      const Int outer_area = scaled_area(e.outer, scale);
      REQUIRE(outer_area > 0);
      REQUIRE(scaled_area(s, scale) == e.index * outer_area);
      REQUIRE(e.index == e.row->index);
      rows_hit.insert(e.row->id);
      ++seen;
    }
  };
  for (Int a = 2; a <= 30; ++a)
    for (Int b = a; b <= 60; ++b)
      for (Int c = b; c <= 120; ++c) check_all({a, b, c});
  for (Int a = 2; a <= 12; ++a)
    for (Int b = a; b <= 12; ++b)
      for (Int c = b; c <= 12; ++c)
        for (Int d = c; d <= 12; ++d) check_all({a, b, c, d});
  CHECK(seen > 100);
  CHECK(rows_hit.size() == 16);
}

TEST_CASE("extensions of specific signatures") {
  auto ext = gs_extensions({5, 10, 10});
  REQUIRE(ext.size() == 2);
  CHECK(ext[1].row->id == "12");
  CHECK(ext[1].outer == Signature{2, 4, 10});
  CHECK(ext[1].index == 4);

  CHECK(row_ids({7, 7, 7}) == std::vector<std::string>{"1", "2", "3", "4"});
  auto seven = gs_extensions({7, 7, 7});
  CHECK(seven[0].outer == Signature{3, 3, 7});
  CHECK(seven[1].outer == Signature{2, 3, 14});
  CHECK(seven[3].outer == Signature{2, 3, 7});
  CHECK(seven[3].index == 24);

  CHECK(gs_extensions({2, 3, 7}).empty());
  CHECK(is_finitely_maximal({2, 3, 12}));
  for (Int n = 3; n <= 30; ++n) {
    if (n >= 5) CHECK_FALSE(is_finitely_maximal({2, n, n}));
    if (n != 4) CHECK(is_finitely_maximal({2, 4, 2 * n}));
  }
  CHECK_FALSE(is_finitely_maximal({2, 4, 8}));
  CHECK_FALSE(is_finitely_maximal({3, 3, 3, 3}));
  CHECK(is_finitely_maximal({2, 2, 3, 5}));
}

TEST_CASE("row guards") {
  CHECK(row_ids({3, 3, 3}).empty());
  CHECK(row_ids({2, 2, 3}).empty());
  CHECK(row_ids({3, 3, 4}) == std::vector<std::string>{"3"});
  CHECK(row_ids({2, 2, 2, 2}).empty());
  CHECK(row_ids({2, 2, 2, 3}).empty());
  CHECK(row_ids({2, 2, 4, 4}) == std::vector<std::string>{"B"});
  CHECK(row_ids({2, 2, 3, 3}) == std::vector<std::string>{"B"});
}

TEST_CASE("lcm admissibility") {
  CHECK(harvey_admissible({7, 7, 7}, 7));
  CHECK_FALSE(harvey_admissible({2, 4, 8}, 8));
  for (Int n = 2; n <= 30; ++n) CHECK(harvey_admissible({n, 2 * n, 2 * n}, 2 * n));
  CHECK_FALSE(harvey_admissible({3, 3, 3}, 9));
  CHECK_FALSE(harvey_admissible(Signature{}, 2));

  for (Int n = 2; n <= 16; ++n) {
    std::vector<Int> divs;
    for (Int d = 2; d <= n; ++d)
      if (n % d == 0) divs.push_back(d);
    for (Int a : divs)
      for (Int b : divs)
        for (Int c : divs) {
          if (a > b || b > c) continue;
          if (skep_exists({a, b, c}, n)) REQUIRE(harvey_admissible({a, b, c}, n));
          for (Int d : divs)
            if (c <= d && skep_exists({a, b, c, d}, n)) REQUIRE(harvey_admissible({a, b, c, d}, n));
        }
  }
}

TEST_CASE("extension chains") {
  auto seven = extension_chains({7, 7, 7});
  REQUIRE(seven.size() == 3);
  const auto live = std::find_if(seven.begin(), seven.end(),
                                 [](const Chain& c) { return c.finish() == Signature{2, 3, 7}; });
  REQUIRE(live != seven.end());
  CHECK(live->equivalent_row == "4");
  CHECK(live->listed_item == 2);
  CHECK_FALSE(live->dead);
  CHECK(live->index() == 24);

  for (Int n = 4; n <= 20; ++n) {
    bool found_dead = false;
    for (const auto& c : extension_chains({n, n, n}))
      if (c.steps.size() == 2 && c.steps[0].outer == Signature{3, 3, n} &&
          c.finish() == Signature{2, 3, 2 * n})
        found_dead = c.dead;
    CHECK(found_dead);
  }

  auto eight = extension_chains({4, 8, 8});
  std::vector<std::optional<int>> items;
  for (const auto& c : eight)
    if (c.finish() == Signature{2, 3, 8} && c.steps.size() == 2) {
      CHECK(c.equivalent_row == "7");
      CHECK(c.index() == 12);
      items.push_back(c.listed_item);
    }
  CHECK(items == std::vector<std::optional<int>>{5, 8});

  for (Int a = 2; a <= 20; ++a)
    for (Int b = a; b <= 40; ++b)
      for (Int c = b; c <= 40; ++c)
        for (const auto& ch : extension_chains({a, b, c})) {
          REQUIRE(ch.steps.size() >= 2);
          for (std::size_t i = 1; i < ch.steps.size(); ++i)
            REQUIRE(ch.steps[i].inner == ch.steps[i - 1].outer);
          if (ch.equivalent_row) REQUIRE(gs_row(*ch.equivalent_row).index == ch.index());
        }
  CHECK(extension_chains({2, 3, 7}).empty());
}

TEST_CASE("skep specifications") {
  auto s = SkepSpec::from_images(12, {1, 3, 8});
  CHECK(s.periods == std::vector<Int>{12, 4, 3});
  CHECK_NOTHROW(s.validate());
  CHECK_THROWS_AS((SkepSpec{7, {7, 7, 7}, {1, 2, 3}}).validate(), std::domain_error);
  CHECK_THROWS_AS((SkepSpec{8, {4, 8, 8}, {1, 2, 5}}).validate(), std::domain_error);
  CHECK_THROWS_AS((SkepSpec{7, {7, 7}, {1, 2, 4}}).validate(), std::domain_error);
  CHECK_THROWS_AS((SkepSpec{1, {}, {}}).validate(), std::domain_error);
  auto c = SkepSpec::from_cover(curve::CyclicCover::belyi(8, 1, 2, 5));
  CHECK(c.periods == std::vector<Int>{8, 4, 8});
}

TEST_CASE("extension criteria") {
  auto seven = cb_extendable(SkepSpec::from_images(7, {1, 2, 4}));
  REQUIRE_FALSE(seven.empty());
  CHECK(seven[0].case_id == 3);
  CHECK(seven[0].multiplier == 3);
  CHECK(seven[0].outer == Signature{3, 3, 7});

  auto twelve = cb_extendable(SkepSpec::from_images(12, {3, 1, 8}));
  CHECK(std::any_of(twelve.begin(), twelve.end(), [](const CbMatch& m) {
    return m.case_id == 5 && m.multiplier == 4 && m.outer == Signature{2, 3, 12};
  }));

  auto five = cb_extendable(SkepSpec::from_images(5, {1, 1, 3}));
  REQUIRE(five.size() == 1);
  CHECK(five[0].case_id == 4);
  CHECK(five[0].multiplier == 2);

  auto quad = cb_extendable(SkepSpec::from_images(6, {1, 5, 2, 4}));
  CHECK(std::any_of(quad.begin(), quad.end(), [](const CbMatch& m) { return m.case_id == 2; }));

  CHECK(cb_extendable(SkepSpec::from_images(11, {1, 2, 8})).empty());
  CHECK_THROWS_AS(cb_extendable(SkepSpec::from_images(5, {1, 4})), std::domain_error);
  CHECK_THROWS_AS(cb_extendable(SkepSpec::from_images(5, {1, 1, 1, 1, 1})), std::domain_error);
}

TEST_CASE("extension criteria ignore the order of the pairs") {
  for (Int n = 4; n <= 20; ++n)
    for (Int a = 1; a < n; ++a)
      for (Int b = a; b < n; ++b) {
        const Int c = (2 * n - a - b) % n;
        if (c < b || numtheory::gcd_many({n, a, b, c}) != 1) continue;
        std::vector<Int> imgs{a, b, c};
        const auto ref = case_set(cb_extendable(SkepSpec::from_images(n, imgs)));
        while (std::next_permutation(imgs.begin(), imgs.end()))
          REQUIRE(case_set(cb_extendable(SkepSpec::from_images(n, imgs))) == ref);
      }
}
