#include <doctest.h>

#include <stdexcept>

#include "cyclicaut/serialize.hpp"

using namespace cyclicaut;
using namespace cyclicaut::serialize;

namespace {

std::vector<std::string> keys(const Json& j) {
  std::vector<std::string> out;
  for (const auto& [k, v] : j.items()) out.push_back(k);
  return out;
}

}  // namespace

TEST_CASE("report keys come in a fixed order") {
  const auto j = to_json(classifier::classify_belyi(7, 1, 2, 4));
  CHECK(keys(j) == std::vector<std::string>{"input", "canonical_triple", "genus", "signature", "row",
                                            "order", "structure", "structure_tag", "base_order",
                                            "chain", "notes"});
  CHECK(j["order"] == 168);
  CHECK(j["structure"] == "PSL(2,7)");
  const auto f = to_json(classifier::classify_fermat(5, 4));
  CHECK(f["order"] == 20);
  CHECK(f["structure"] == "Z4+Z5");
  CHECK(f.contains("presentation"));
  CHECK(to_json(classifier::classify_belyi(7, 1, 2, 4)).dump() == j.dump());
}

TEST_CASE("reports round-trip") {
  auto round = [](const classifier::ClassificationReport& r) {
    const auto j = to_json(r);
    REQUIRE(to_json(report_from_json(Json::parse(j.dump()))) == j);
  };
  for (Int n = 4; n <= 20; ++n)
    for (Int a = 1; a < n; ++a)
      for (Int b = a; b < n; ++b) {
        const Int c = (2 * n - a - b) % n;
        if (c < b || numtheory::gcd_many({n, a, b, c}) != 1) continue;
        round(classifier::classify_belyi(n, a, b, c));
      }
  round(classifier::classify_lefschetz(13, 3));
  round(classifier::classify_fermat(4, 3));
  round(classifier::classify_fermat(8, 4));
  const auto parsed = curve::parse_curve("y^3 = -2/5*(x-1/2)^2 (x+3)");
  CHECK(cover_from_json(to_json(parsed)) == parsed);
}

TEST_CASE("malformed report JSON is rejected") {
  auto j = to_json(classifier::classify_belyi(7, 1, 2, 4));
  auto missing = j;
  missing.erase("row");
  CHECK_THROWS_AS(report_from_json(missing), std::domain_error);
  auto wrong_text = j;
  wrong_text["structure"] = "Z7";
  CHECK_THROWS_AS(report_from_json(wrong_text), std::domain_error);
  auto wrong_inf = j;
  wrong_inf["input"]["infinity_exponent"] = 3;
  CHECK_THROWS_AS(report_from_json(wrong_inf), std::domain_error);
  auto bad_kind = j;
  bad_kind["structure_tag"]["kind"] = "HUGE";
  CHECK_THROWS_AS(report_from_json(bad_kind), std::domain_error);
  CHECK_THROWS_AS(report_from_json(Json::array()), std::domain_error);
}

TEST_CASE("presentations round-trip") {
  const auto p = grouptheory::parse_presentation("<u,v | u^4, v^8, (u*v)^2, u^2*v*u^2*v^3>");
  const auto j = to_json(p);
  CHECK(j["text"] == p.to_string());
  CHECK(presentation_from_json(j) == p);
  const auto counted = presentation_from_json(Json::parse(R"({"generator_count": 1, "relators": [[1,1,1]]})"));
  CHECK(grouptheory::coset_enumerate(counted) == 3);
  CHECK_THROWS_AS(presentation_from_json(Json::parse(R"({"generators": ["a"], "relators": [[2]]})")),
                  std::domain_error);
}

TEST_CASE("table, enumeration and check output") {
  const auto table = gs_table_json();
  REQUIRE(table.size() == 16);
  CHECK(table[2]["guards"]["min_n_plus_m"] == 7);
  CHECK(table[5]["normal"] == false);

  const auto e = verify::enumerate_classes(7);
  const auto ej = to_json(e);
  CHECK(ej["classes"].size() == 2);
  const auto recs = records_from_json(Json::parse(ej.dump()));
  REQUIRE(recs.size() == 2);
  CHECK(recs[1].canonical == e.classes[1].canonical);
  CHECK(to_json(recs[1].report) == to_json(e.classes[1].report));
  Json both = Json::array({ej, to_json(verify::enumerate_classes(5))});
  CHECK(records_from_json(both).size() == 3);

  const auto cj = to_json(verify::cross_check(8));
  CHECK(cj["checks"][0]["n_range"] == Json::array({4, 8}));
  CHECK_FALSE(cj["checks"][0].contains("witness"));
}
