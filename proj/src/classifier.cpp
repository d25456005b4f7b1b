#include "cyclicaut/classifier.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace cyclicaut::classifier {

using fuchsian::ChainStep;
using grouptheory::Presentation;
using grouptheory::Word;
using numtheory::mod;

namespace {

constexpr std::array<std::pair<StructureKind, const char*>, 9> kKindNames{{
    {StructureKind::Cyclic, "CYCLIC"},
    {StructureKind::CyclicSemidirectC2, "CYCLIC_SEMIDIRECT_C2"},
    {StructureKind::CyclicSemidirectC3, "CYCLIC_SEMIDIRECT_C3"},
    {StructureKind::CentralExtension, "CENTRAL_EXT"},
    {StructureKind::DirectSumSemidirect, "DIRECT_SUM_SEMIDIRECT"},
    {StructureKind::Named, "NAMED"},
    {StructureKind::Dihedral, "DIHEDRAL"},
    {StructureKind::Abelian, "ABELIAN"},
    {StructureKind::NonsplitExtension, "NONSPLIT_EXT"},
}};

std::string z(Int m) { return "Z" + std::to_string(m); }

}  // namespace

std::string to_string(StructureKind kind) {
  for (auto [k, name] : kKindNames)
    if (k == kind) return name;
  throw std::logic_error("unnamed structure kind");
}

StructureKind structure_kind_from_string(std::string_view name) {
  for (auto [k, text] : kKindNames)
    if (name == text) return k;
  throw std::domain_error("unknown structure kind '" + std::string(name) + "'");
}

std::string StructureTag::display() const {
  auto param = [&](std::size_t i) {
    if (i >= params.size()) throw std::logic_error("structure tag is missing parameters");
    return params[i];
  };
  switch (kind) {
    case StructureKind::Cyclic:
      return z(param(0));
    case StructureKind::CyclicSemidirectC2:
      return z(param(0)) + " x| Z2";
    case StructureKind::CyclicSemidirectC3:
      return z(param(0)) + " x| Z3";
    case StructureKind::CentralExtension:
      return "(central " + z(param(0)) + ")." + quotient;
    case StructureKind::DirectSumSemidirect:
      return "(" + z(param(0)) + "+" + z(param(1)) + ") x| " + quotient;
    case StructureKind::Named:
      return quotient;
    case StructureKind::Dihedral:
      return "D" + std::to_string(param(0));
    case StructureKind::Abelian: {
      std::string s;
      for (Int f : params) s += (s.empty() ? "" : "+") + z(f);
      return s.empty() ? "1" : s;
    }
    case StructureKind::NonsplitExtension:
      return "(" + z(param(0)) + " x| Z2).Z2";
  }
  throw std::logic_error("unhandled structure kind");
}

Int ClassificationReport::chain_index() const {
  Int total = 1;
  for (const auto& s : chain) total *= s.index;
  return total;
}

namespace {

ChainStep step(Signature inner, Signature outer, const char* row) {
  return {std::move(inner), std::move(outer), row, fuchsian::gs_row(row).index};
}

bool orbit_contains(const std::vector<Triple>& orbit, Triple t) {
  return std::binary_search(orbit.begin(), orbit.end(), t);
}

struct RowMatch {
  std::string row;
  Int order = 0;
  Int row_genus = 0;
  StructureTag tag;
  std::vector<ChainStep> chain;
};

struct ExactRow {
  Int n;
  Triple triple;
  const char* row;
  Int order;
  Int genus;
  StructureTag tag;
};

const std::vector<ExactRow>& exact_rows() {
  static const std::vector<ExactRow> rows = {
      {8, {1, 2, 5}, "B.3", 96, 3, {StructureKind::DirectSumSemidirect, {4, 4}, "S3"}},
      {7, {1, 2, 4}, "C.2", 168, 3, StructureTag::named("PSL(2,7)")},
      {12, {1, 3, 8}, "D.1", 48, 3, {StructureKind::CentralExtension, {4}, "A4"}},
      {8, {1, 3, 4}, "E.1", 48, 2, StructureTag::named("GL(2,3)")},
      {12, {1, 4, 7}, "E.2", 72, 4, {StructureKind::CentralExtension, {3}, "S4"}},
      {24, {1, 4, 19}, "E.3", 144, 10, {StructureKind::CentralExtension, {6}, "S4"}},
  };
  return rows;
}

std::vector<ChainStep> exact_chain(const std::string& row) {
  if (row == "B.3") return {step({4, 8, 8}, {2, 8, 8}, "3"), step({2, 8, 8}, {2, 3, 8}, "11")};
  if (row == "C.2") return {step({7, 7, 7}, {3, 3, 7}, "1"), step({3, 3, 7}, {2, 3, 7}, "6")};
  if (row == "D.1") return {step({3, 4, 12}, {2, 3, 12}, "13")};
  if (row == "E.1") return {step({2, 8, 8}, {2, 3, 8}, "11")};
  if (row == "E.2") return {step({3, 12, 12}, {2, 3, 12}, "11")};
  if (row == "E.3") return {step({6, 24, 24}, {2, 3, 24}, "11")};
  throw std::logic_error("no chain for row " + row);
}

std::optional<RowMatch> match_row(Int n, const std::vector<Triple>& orbit) {
  for (const auto& r : exact_rows())
    if (r.n == n && orbit_contains(orbit, r.triple))
      return RowMatch{r.row, r.order, r.genus, r.tag, exact_chain(r.row)};

  if (orbit_contains(orbit, {1, 1, n - 2})) {
    if (n % 2 == 1)
      return RowMatch{"A.1", 2 * n, (n - 1) / 2, StructureTag::cyclic(2 * n),
                      {step({n, n, n}, {2, n, 2 * n}, "3")}};
    return RowMatch{"A.2",
                    4 * n,
                    n / 2 - 1,
                    {StructureKind::CentralExtension, {2}, "D" + std::to_string(2 * n)},
                    {step({n / 2, n, n}, {2, n, n}, "3"), step({2, n, n}, {2, 4, n}, "3")}};
  }

  if (n % 8 == 0 && n > 8 && orbit_contains(orbit, {1, n / 2 - 2, n / 2 + 1}))
    return RowMatch{"B.2",
                    4 * n,
                    n / 2 - 1,
                    {StructureKind::NonsplitExtension, {n}, {}},
                    {step({n / 2, n, n}, {2, n, n}, "3"), step({2, n, n}, {2, 4, n}, "3")}};

  for (Int b : numtheory::involutory_units(n)) {
    if (b == n - 1 || !orbit_contains(orbit, {1, b, n - 1 - b})) continue;
    const Int m = n / std::gcd(n, b + 1);
    return RowMatch{"B.1",
                    2 * n,
                    (n - std::gcd(n, b + 1)) / 2,
                    {StructureKind::CyclicSemidirectC2, {n, b}, {}},
                    {step({n, n, m}, {2, n, 2 * m}, "3")}};
  }

  if (n % 2 == 1 && n > 7 && numtheory::has_prime_1_mod_3(n))
    for (Int b : numtheory::omega_units(n))
      if (orbit_contains(orbit, {1, b, b * b % n}))
        return RowMatch{"C.1",
                        3 * n,
                        (n - 1) / 2,
                        {StructureKind::CyclicSemidirectC3, {n, b}, {}},
                        {step({n, n, n}, {3, 3, n}, "1")}};
  return std::nullopt;
}

Presentation cyclic_presentation(Int m) {
  return Presentation::with_count(1, {Word(static_cast<std::size_t>(m), 1)});
}

Word pw(int g, Int e) { return grouptheory::power({g}, e); }

using grouptheory::commutator;
using grouptheory::concat;
using grouptheory::power;

Presentation named(std::vector<std::string> names, std::vector<Word> relators) {
  Presentation p;
  p.generators = std::move(names);
  p.relators = std::move(relators);
  p.validate();
  return p;
}

// <s,t | s^3, t^n, s t s^-1 t^-k>
Presentation order_three_twist(Int n, Int k) {
  return named({"s", "t"}, {pw(1, 3), pw(2, n), concat({1, 2, -1}, pw(2, -k))});
}

}  // namespace

ClassificationReport classify_belyi(Int n, Int a, Int b, Int c) {
  if (n < 4) throw std::domain_error("belyi classification needs n >= 4, got " + std::to_string(n));
  const Triple input{a, b, c};
  curve::check_admissible_triple(n, input);

  ClassificationReport rep;
  rep.cover = curve::CyclicCover::belyi(n, a, b, c);
  rep.canonical_triple = curve::canonical_triple(n, input);
  rep.genus = curve::genus(rep.cover);
  rep.signature = curve::signature_of(rep.cover);
  rep.base_order = n;

  const auto orbit = curve::triple_orbit(n, input);
  if (auto m = match_row(n, orbit)) {
    if (m->row_genus != rep.genus)
      throw std::logic_error("row " + m->row + " genus " + std::to_string(m->row_genus) +
                             " disagrees with curve genus " + std::to_string(rep.genus));
    rep.row = m->row;
    rep.group.order = m->order;
    rep.group.structure = m->tag;
    rep.chain = std::move(m->chain);
  } else {
    rep.row = "DEFAULT";
    rep.group.order = n;
    rep.group.structure = StructureTag::cyclic(n);
  }
  rep.group.presentation = presentation_for(rep);
  return rep;
}

Int lefschetz_canonical(Int p, Int a) {
  if (!numtheory::is_prime(p)) throw std::domain_error(std::to_string(p) + " is not prime");
  if (a < 1 || a > p - 2)
    throw std::domain_error("Lefschetz exponent must lie in [1, p-2], got " + std::to_string(a));
  const Int half = (p - 1) / 2;
  if (a > half) a = p - a - 1;
  if (a == half) a = 1;
  return a;
}

bool lefschetz_isomorphic(Int p, Int a, Int b) {
  if (!numtheory::is_prime(p)) throw std::domain_error(std::to_string(p) + " is not prime");
  auto zero = [p](Int v) { return mod(v, p) == 0; };
  return a == b || zero(a * b + b + 1) || zero(a * b + a + 1) || zero(a + b + a * b) ||
         mod(a * b, p) == 1;
}

ClassificationReport classify_lefschetz(Int p, Int a) {
  if (!numtheory::is_prime(p) || p < 5)
    throw std::domain_error("Lefschetz classification needs a prime p >= 5, got " +
                            std::to_string(p));
  const Int k = lefschetz_canonical(p, a);

  ClassificationReport rep;
  rep.cover = curve::CyclicCover::make(
      p, {{curve::BranchPoint::zero(), k}, {curve::BranchPoint::minus_one(), 1}});
  const Triple t{k, 1, p - 1 - k};
  rep.canonical_triple = curve::canonical_triple(p, t);
  rep.genus = curve::genus(rep.cover);
  rep.signature = curve::signature_of(rep.cover);
  rep.base_order = p;

  if (k == 1) {
    rep.row = "LEFSCHETZ.1";
    rep.group = {2 * p, StructureTag::cyclic(2 * p), std::nullopt};
    rep.chain = {step({p, p, p}, {2, p, 2 * p}, "3")};
  } else if (p == 7 && k == 2) {
    rep.row = "LEFSCHETZ.2";
    rep.group = {168, StructureTag::named("PSL(2,7)"), std::nullopt};
    rep.chain = exact_chain("C.2");
  } else if (p % 3 == 1 && p > 7 && mod(1 + k + k * k, p) == 0) {
    rep.row = "LEFSCHETZ.3";
    rep.group = {3 * p, {StructureKind::CyclicSemidirectC3, {p, k}, {}}, std::nullopt};
    rep.chain = {step({p, p, p}, {3, 3, p}, "1")};
  } else {
    rep.row = "LEFSCHETZ.4";
    rep.group = {p, StructureTag::cyclic(p), std::nullopt};
  }
  rep.group.presentation = presentation_for(rep);
  return rep;
}

ClassificationReport classify_fermat(Int n, Int d) {
  if (d < 2 || d > n)
    throw std::domain_error("Fermat classification needs 2 <= d <= n, got n=" + std::to_string(n) +
                            " d=" + std::to_string(d));
  ClassificationReport rep;
  rep.cover = curve::fermat(n, d);
  rep.genus = curve::genus(rep.cover);
  if (rep.genus < 2)
    throw std::domain_error("Fermat curve of genus " + std::to_string(rep.genus) +
                            " is below hyperbolic range");
  const Int l = std::lcm(d, n);
  rep.signature = Signature{d, n, l};

  auto set = [&](const char* row, Int order, StructureTag tag, Int base,
                 std::vector<ChainStep> chain) {
    rep.row = row;
    rep.group.order = order;
    rep.group.structure = std::move(tag);
    rep.base_order = base;
    rep.chain = std::move(chain);
  };

  if (d >= 4) {
    if (d == n)
      set("FERMAT.1", 6 * n * n, {StructureKind::DirectSumSemidirect, {n, n}, "S3"}, n * n,
          {step({n, n, n}, {2, 3, 2 * n}, "2")});
    else if (n % d != 0)
      set("FERMAT.2", d * n, {StructureKind::Abelian, {d, n}, {}}, d * n, {});
    else
      set("FERMAT.3", 2 * d * n,
          {StructureKind::CentralExtension, {d}, "D" + std::to_string(2 * n)}, d * n,
          {step({d, n, n}, {2, n, 2 * d}, "3")});
  } else if (d == 2) {
    if (n % 2 == 1)
      set("FERMAT.4", 2 * n, StructureTag::cyclic(2 * n), 2 * n, {});
    else
      set("FERMAT.5", 4 * n, {StructureKind::DirectSumSemidirect, {2, n}, "Z2"}, 2 * n,
          {step({2, n, n}, {2, 4, n}, "3")});
  } else {
    if (n % 3 == 0)
      set("FERMAT.6", 6 * n, {StructureKind::DirectSumSemidirect, {3, n}, "Z2"}, 3 * n,
          {step({3, n, n}, {2, 6, n}, "3")});
    else if (n == 4)
      set("FERMAT.7", 48, {StructureKind::CentralExtension, {4}, "A4"}, 12,
          {step({3, 4, 12}, {2, 3, 12}, "13")});
    else
      set("FERMAT.8", 3 * n, StructureTag::cyclic(3 * n), 3 * n, {});
  }
  rep.group.presentation = presentation_for(rep);
  return rep;
}

bool dihedral_four_branch(Int n, Int k1, Int k2, Int k3, Int k4) {
  if (n < 2) throw std::domain_error("cover degree must be >= 2");
  const std::array<Int, 4> k{k1, k2, k3, k4};
  Int total = 0;
  for (Int e : k) {
    if (e < 1 || e > n - 1) throw std::domain_error("exponents must lie in [1, n-1]");
    total += e;
  }
  if (total % n != 0) throw std::domain_error("exponents must sum to 0 mod n");
  if (numtheory::gcd_many({n, k1, k2, k3, k4}) != 1)
    throw std::domain_error("gcd(n, exponents) must be 1");
  std::array<Int, 4> g{};
  for (std::size_t i = 0; i < 4; ++i) g[i] = std::gcd(n, k[i]);
  std::sort(g.begin(), g.end());
  return g[0] == g[1] && g[2] == g[3];
}

bool stability_normal(Int p, Int r) {
  if (!numtheory::is_prime(p)) throw std::domain_error(std::to_string(p) + " is not prime");
  if (r < 1) throw std::domain_error("branch point count must be positive");
  return r > 2 * p;
}

std::optional<Presentation> presentation_for(const ClassificationReport& report) {
  const Int n = report.cover.n;
  const auto& tag = report.group.structure;
  const std::string& row = report.row;

  if (tag.kind == StructureKind::Cyclic) return cyclic_presentation(tag.params.at(0));

  if (row == "A.2")
    return named({"u", "v"},
                 {pw(1, 4), pw(2, n), power({1, 2}, 2), commutator(pw(1, 2), {2})});
  if (row == "B.1")
    return named({"u", "v"}, {pw(1, 2), pw(2, n), concat({1, 2, 1}, pw(2, -tag.params.at(1)))});
  if (row == "B.2")
    return named({"u", "v"}, {pw(1, 4), pw(2, n), power({1, 2}, 2),
                              concat(concat(pw(1, 2), {2}), concat(pw(1, 2), pw(2, n / 2 - 1)))});
  if (tag.kind == StructureKind::CyclicSemidirectC3)
    return order_three_twist(tag.params.at(0), tag.params.at(1));

  if (row == "FERMAT.2")
    return named({"s", "t"}, {pw(1, tag.params.at(0)), pw(2, tag.params.at(1)), commutator({1}, {2})});
  if (row == "FERMAT.3") {
    const Int d = tag.params.at(0);
    return named({"s", "t", "u"}, {pw(1, d), pw(2, n), pw(3, 2), commutator({1}, {2}),
                                   commutator({1}, {3}), concat(power({3, 2}, 2), {1})});
  }
  if (row == "FERMAT.5" || row == "FERMAT.6") {
    const Int e = row == "FERMAT.5" ? 2 : 3;
    return named({"a", "b", "u"},
                 {pw(1, n), pw(2, n), power({1, 2}, e), commutator({1}, {2}), pw(3, 2),
                  {3, 1, 3, -2}, {3, 2, 3, -1}});
  }
  if (row == "FERMAT.7")
    return named({"u1", "u2"},
                 {pw(1, 2), pw(2, 3), commutator({1}, power({1, 2}, 3))});
  return std::nullopt;
}

}  // namespace cyclicaut::classifier
