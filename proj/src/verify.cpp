#include "cyclicaut/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cyclicaut::verify {

using curve::Triple;
using numtheory::mod;

namespace {

constexpr double kPoleRadius = 1e-12;

Complex ipow(Complex z, Int e) {
  if (e < 0) {
    if (std::abs(z) < kPoleRadius) throw PoleHit("negative power of zero");
    return 1.0 / ipow(z, -e);
  }
  Complex result{1.0, 0.0};
  while (e > 0) {
    if (e & 1) result *= z;
    z *= z;
    e >>= 1;
  }
  return result;
}

Complex unit_root(Int num, Int den) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(num) /
                             static_cast<double>(den));
}

Complex to_complex(const curve::Rational& r) {
  return {static_cast<double>(r.num) / static_cast<double>(r.den), 0.0};
}

}  // namespace

Complex AffineModel::rhs(Complex x) const {
  Complex v = coefficient;
  for (const auto& [root, e] : factors) v *= ipow(x - root, e);
  return v;
}

AffineModel AffineModel::from_cover(const curve::CyclicCover& cover) {
  AffineModel m;
  m.n = cover.n;
  m.coefficient = to_complex(cover.coefficient);
  for (const auto& b : cover.branches) m.factors.emplace_back(b.point.to_complex(), b.exponent);
  return m;
}

Complex Monomial::eval(Complex x, Complex y) const {
  Complex v = coefficient * ipow(x, x_exp) * ipow(y, y_exp);
  for (const auto& [root, e] : linear) v *= ipow(x - root, e);
  return v;
}

RationalMap RationalMap::identity() {
  RationalMap m;
  m.x_part.x_exp = 1;
  m.y_part.y_exp = 1;
  return m;
}

RationalMap RationalMap::deck(Int n, Int power) {
  RationalMap m = identity();
  m.y_part.coefficient = unit_root(power, n);
  return m;
}

CurvePoint RationalMap::apply(CurvePoint p) const {
  return {x_part.eval(p.x, p.y), y_part.eval(p.x, p.y)};
}

namespace {

CurvePoint draw_point(const AffineModel& model, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> radius_sq(0.25, 4.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (;;) {
    const Complex x = std::polar(std::sqrt(radius_sq(rng)), angle(rng));
    bool clear = std::all_of(model.factors.begin(), model.factors.end(),
                             [&](const auto& f) { return std::abs(x - f.first) >= 0.1; });
    if (!clear) continue;
    const Complex r = model.rhs(x);
    return {x, std::pow(r, 1.0 / static_cast<double>(model.n))};
  }
}

}  // namespace

CurveSample sample_curve(const AffineModel& model, std::size_t count, std::uint64_t seed) {
  if (count == 0) throw std::domain_error("sample count must be positive");
  if (model.n < 1) throw std::domain_error("curve degree must be positive");
  std::mt19937_64 rng(seed);
  CurveSample s;
  s.points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) s.points.push_back(draw_point(model, rng));
  return s;
}

CurveSample sample_curve(const curve::CyclicCover& cover, std::size_t count, std::uint64_t seed) {
  return sample_curve(AffineModel::from_cover(cover), count, seed);
}

double point_residual(const AffineModel& model, CurvePoint p) {
  const Complex lhs = ipow(p.y, model.n);
  const Complex rhs = model.rhs(p.x);
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  return std::abs(lhs - rhs) / scale;
}

double action_residual(const AffineModel& model, const RationalMap& map, const CurveSample& samples,
                       std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  double worst = 0.0;
  for (CurvePoint p : samples.points) {
    for (int attempt = 0;; ++attempt) {
      try {
        worst = std::max(worst, point_residual(model, map.apply(p)));
        break;
      } catch (const PoleHit&) {
        if (attempt > 100) throw;
        p = draw_point(model, rng);
      }
    }
  }
  return worst;
}

bool same_point(CurvePoint a, CurvePoint b, double tol) {
  auto close = [tol](Complex u, Complex v) {
    const double scale = std::max({std::abs(u), std::abs(v), 1e-300});
    return std::abs(u - v) <= tol * scale;
  };
  return close(a.x, b.x) && close(a.y, b.y);
}

bool verify_map_order(const AffineModel& model, const RationalMap& map, Int k,
                      const CurveSample& samples) {
  if (k < 1) throw std::domain_error("claimed order must be positive");
  std::vector<CurvePoint> cur = samples.points;
  for (Int j = 1; j <= k; ++j) {
    for (auto& p : cur) {
      p = map.apply(p);
      if (point_residual(model, p) > kTolerance) return false;
    }
    bool identity = true;
    for (std::size_t i = 0; i < cur.size() && identity; ++i)
      identity = same_point(cur[i], samples.points[i]);
    if (identity != (j == k)) return false;
  }
  return true;
}

bool relation_holds(std::span<const RationalMap> lhs, std::span<const RationalMap> rhs,
                    const CurveSample& samples, double tol) {
  for (const auto& p : samples.points) {
    CurvePoint l = p, r = p;
    for (const auto& m : lhs) l = m.apply(l);
    for (const auto& m : rhs) r = m.apply(r);
    if (!same_point(l, r, tol)) return false;
  }
  return true;
}

AccolaMaclachlan accola_maclachlan(Int m) {
  if (m < 2) throw std::domain_error("Accola-Maclachlan family needs m >= 2");
  AccolaMaclachlan am;
  am.model.n = 2 * m;
  am.model.factors = {{Complex{1.0, 0.0}, 1}, {Complex{-1.0, 0.0}, 1}};
  am.u.x_part.x_exp = 1;
  am.u.x_part.y_exp = -m;
  am.u.y_part.coefficient = unit_root(1, 2 * m);
  am.u.y_part.y_exp = -1;
  am.v = RationalMap::deck(2 * m);
  am.u_squared_expected = RationalMap::identity();
  am.u_squared_expected.x_part.coefficient = -1.0;
  return am;
}

PeriodThree period_three(Int n, Int k) {
  if (n < 2 || mod(1 + k + k * k, n) != 0)
    throw std::domain_error("period-three model needs 1 + k + k^2 = 0 mod n");
  PeriodThree pt;
  pt.k = k;
  pt.alpha = (1 + k + k * k) / n;
  pt.beta = (k * k * k - 1) / n;
  const Complex j = unit_root(1, 3);
  const Complex j2 = j * j;
  pt.model.n = n;
  pt.model.factors = {{Complex{1.0, 0.0}, 1}, {j, k}, {j2, k * k}};
  pt.s.x_part.coefficient = j;
  pt.s.x_part.x_exp = 1;
  pt.s.y_part.coefficient = unit_root(pt.alpha, 3);
  pt.s.y_part.y_exp = k;
  pt.s.y_part.linear = {{j2, -pt.beta}};
  pt.t = RationalMap::deck(n);
  return pt;
}

TwistedInvolution twisted_involution(Int n, Int b) {
  if (n % 8 == 0) throw std::domain_error("twisted involution formula needs n not divisible by 8");
  if (b < 2 || b >= n || b * b % n != 1)
    throw std::domain_error("twisted involution needs b^2 = 1 mod n with 2 <= b < n");
  TwistedInvolution ti;
  ti.b = b;
  ti.beta = (b * b - 1) / n;
  bool found = false;
  for (Int l : {0, 1})
    if (mod(n * l - (b + 1), 2) == 0 && mod(l + b * l - ti.beta, 2) == 0) {
      ti.l = l;
      found = true;
      break;
    }
  if (!found) throw std::domain_error("no sign l satisfies the parity conditions");
  ti.model.n = n;
  ti.model.factors = {{Complex{-1.0, 0.0}, b}, {Complex{1.0, 0.0}, 1}};
  ti.u.x_part.coefficient = -1.0;
  ti.u.x_part.x_exp = 1;
  ti.u.y_part.coefficient = ti.l == 1 ? -1.0 : 1.0;
  ti.u.y_part.y_exp = b;
  ti.u.y_part.linear = {{Complex{-1.0, 0.0}, -ti.beta}};
  ti.v = RationalMap::deck(n);
  return ti;
}

bool ActionReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ActionCheck& c) { return c.pass; });
}

namespace {

std::string model_equation(const AffineModel& m) {
  std::ostringstream out;
  out << "y^" << m.n << " =";
  for (const auto& [root, e] : m.factors) {
    out << " (x - (" << root.real() << (root.imag() < 0 ? "" : "+") << root.imag() << "i))";
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

ActionCheck residual_check(std::string name, const AffineModel& model, const RationalMap& map,
                           const CurveSample& samples, std::uint64_t seed) {
  const double r = action_residual(model, map, samples, seed);
  return {std::move(name), r <= kTolerance, r};
}

std::vector<RationalMap> repeat(const RationalMap& m, Int k) {
  return std::vector<RationalMap>(static_cast<std::size_t>(k), m);
}

}  // namespace

ActionReport verify_family(std::string_view family, Int n, Int param, std::size_t count,
                           std::uint64_t seed) {
  ActionReport rep;
  rep.family = std::string(family);
  auto order_check = [&](std::string name, const AffineModel& model, const RationalMap& map, Int k,
                         const CurveSample& s) {
    rep.checks.push_back({std::move(name), verify_map_order(model, map, k, s), 0.0});
  };
  auto relation_check = [&](std::string name, std::span<const RationalMap> lhs,
                            std::span<const RationalMap> rhs, const CurveSample& s) {
    rep.checks.push_back({std::move(name), relation_holds(lhs, rhs, s), 0.0});
  };

  if (family == "accola-maclachlan") {
    if (n < 4 || n % 2 != 0) throw std::domain_error("accola-maclachlan needs an even degree >= 4");
    const auto am = accola_maclachlan(n / 2);
    const auto s = sample_curve(am.model, count, seed);
    rep.equation = model_equation(am.model);
    rep.checks.push_back(residual_check("residual u", am.model, am.u, s, seed));
    rep.checks.push_back(residual_check("residual v", am.model, am.v, s, seed));
    order_check("u^4 = 1", am.model, am.u, 4, s);
    order_check("v^" + std::to_string(n) + " = 1", am.model, am.v, n, s);
    const RationalMap uu[] = {am.u, am.u};
    const RationalMap expected[] = {am.u_squared_expected};
    relation_check("u^2 = (-x, y)", uu, expected, s);
  } else if (family == "periodthree") {
    const auto pt = period_three(n, param);
    const auto s = sample_curve(pt.model, count, seed);
    rep.equation = model_equation(pt.model);
    rep.checks.push_back(residual_check("residual S", pt.model, pt.s, s, seed));
    rep.checks.push_back(residual_check("residual T", pt.model, pt.t, s, seed));
    order_check("S^3 = 1", pt.model, pt.s, 3, s);
    order_check("T^" + std::to_string(n) + " = 1", pt.model, pt.t, n, s);
    const RationalMap st[] = {pt.t, pt.s};
    auto tks = repeat(pt.t, pt.k);
    tks.insert(tks.begin(), pt.s);
    relation_check("ST = T^" + std::to_string(pt.k) + "S", st, tks, s);
  } else if (family == "twistedz2") {
    const auto ti = twisted_involution(n, param);
    const auto s = sample_curve(ti.model, count, seed);
    rep.equation = model_equation(ti.model);
    rep.checks.push_back(residual_check("residual u", ti.model, ti.u, s, seed));
    rep.checks.push_back(residual_check("residual v", ti.model, ti.v, s, seed));
    order_check("u^2 = 1", ti.model, ti.u, 2, s);
    order_check("v^" + std::to_string(n) + " = 1", ti.model, ti.v, n, s);
    const RationalMap uvu[] = {ti.u, ti.v, ti.u};
    const auto vb = repeat(ti.v, ti.b);
    relation_check("uvu = v^" + std::to_string(ti.b), uvu, vb, s);
  } else {
    throw std::domain_error("unknown family '" + std::string(family) +
                            "' (expected accola-maclachlan, periodthree or twistedz2)");
  }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

bool same_verdict(const classifier::ClassificationReport& a,
                  const classifier::ClassificationReport& b) {
  return a.row == b.row && a.group.order == b.group.order &&
         a.group.structure == b.group.structure;
}

std::string describe(Int n, const Triple& t) {
  std::ostringstream os;
  os << "(" << n << ";" << t[0] << "," << t[1] << "," << t[2] << ")";
  return os.str();
}

struct Collected {
  std::size_t ordered = 0;
  std::map<Triple, std::vector<Triple>> classes;
};

Collected collect(Int n) {
  Collected c;
  for (Int a = 1; a < n; ++a)
    for (Int b = 1; b < n; ++b) {
      const Int cc = mod(-a - b, n);
      if (cc == 0) continue;
      ++c.ordered;
      if (numtheory::gcd_many({n, a, b, cc}) != 1) continue;
      const Triple t{a, b, cc};
      c.classes[curve::canonical_triple(n, t)].push_back(t);
    }
  return c;
}

}  // namespace

Enumeration enumerate_classes(Int n, Int cap) {
  if (n < 4) throw std::domain_error("enumeration needs n >= 4, got " + std::to_string(n));
  if (n > cap)
    throw std::domain_error("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                            std::to_string(cap));
  const Collected c = collect(n);
  if (c.ordered != static_cast<std::size_t>((n - 1) * (n - 2)))
    throw std::logic_error("ordered triple count disagrees with (n-1)(n-2)");

  Enumeration e;
  e.n = n;
  e.ordered_triples = c.ordered;
  for (const auto& [canon, members] : c.classes) {
    e.admissible_triples += members.size();
    ClassRecord rec{n, canon, members.size(), classifier::classify_belyi(n, canon[0], canon[1], canon[2])};
    for (const auto& t : members) {
      auto other = classifier::classify_belyi(n, t[0], t[1], t[2]);
      if (!same_verdict(other, rec.report))
        throw std::logic_error("class " + describe(n, canon) + " member " + describe(n, t) +
                               " classifies as " + other.row + ", representative as " +
                               rec.report.row);
    }
    e.classes.push_back(std::move(rec));
  }
  return e;
}

bool CrossCheckReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

class Ledger {
 public:
  Ledger(Int lo, Int hi) {
    for (const char* name : kNames) results_.push_back({name, lo, hi, true, std::nullopt});
  }

  void fail(std::string_view name, const std::string& witness) {
    for (auto& r : results_)
      if (r.name == name) {
        if (r.pass) r.witness = witness;
        r.pass = false;
        return;
      }
    throw std::logic_error("unknown check " + std::string(name));
  }

  void expect(bool ok, std::string_view name, const std::function<std::string()>& witness) {
    if (!ok) fail(name, witness());
  }

  CrossCheckReport report() const { return {results_}; }

  static constexpr const char* kNames[] = {
      "record_agreement",    "equivalence_invariance", "scaling_invariance", "monodromy_genus",
      "genus_column",        "order_law",              "hurwitz_bound",      "harvey_admissible",
      "default_not_extendable", "no_unit_exponent_cyclic", "lefschetz_consistency",
  };

 private:
  std::vector<CheckResult> results_;
};

void check_record(const ClassRecord& rec, const CrossCheckOptions& opt, Ledger& led,
                  bool& hurwitz_equality_seen) {
  using classifier::classify_belyi;
  const Int n = rec.n;
  const Triple& t = rec.canonical;
  const std::string who = describe(n, t);

  classifier::ClassificationReport fresh;
  try {
    fresh = classify_belyi(n, t[0], t[1], t[2]);
  } catch (const std::logic_error& e) {
    led.fail("genus_column", who + ": " + e.what());
    return;
  }
  led.expect(same_verdict(fresh, rec.report) && fresh.genus == rec.report.genus &&
                 fresh.canonical_triple == rec.report.canonical_triple,
             "record_agreement", [&] { return who + ": recorded " + rec.report.row + ", fresh " + fresh.row; });
  const auto& rep = fresh;

  const auto members = curve::triple_orbit(n, t);
  led.expect(rec.orbit_size == members.size(), "record_agreement", [&] {
    return who + ": recorded orbit size " + std::to_string(rec.orbit_size) + ", actual " +
           std::to_string(members.size());
  });
  for (const auto& m : members) {
    auto other = classify_belyi(n, m[0], m[1], m[2]);
    if (!same_verdict(other, rep)) {
      led.fail("equivalence_invariance", who + " vs " + describe(n, m));
      break;
    }
  }

  for (Int l : numtheory::units(n)) {
    auto scaled = curve::scale_exponents(rep.cover, l);
    auto e = scaled.all_exponents();
    if (e.size() != 3) {
      led.fail("scaling_invariance", who + " loses a branch point under l=" + std::to_string(l));
      break;
    }
    auto other = classify_belyi(n, e[0], e[1], e[2]);
    if (!same_verdict(other, rep) || curve::genus(scaled) != rep.genus) {
      led.fail("scaling_invariance", who + " under l=" + std::to_string(l));
      break;
    }
  }

  const Int g_test = opt.genus(rep.cover);
  const Int g_ref = curve::monodromy_genus(rep.cover);
  led.expect(g_test == g_ref, "monodromy_genus", [&] {
    return who + ": genus " + std::to_string(g_test) + ", monodromy " + std::to_string(g_ref);
  });

  const Int g = rep.genus;
  bool law = rep.group.order == rep.base_order * rep.chain_index();
  if (law && g >= 2 && !rep.chain.empty()) {
    law = rep.chain.front().inner == rep.signature;
    for (std::size_t i = 0; law && i < rep.chain.size(); ++i) {
      const auto& s = rep.chain[i];
      if (i + 1 < rep.chain.size()) law = s.outer == rep.chain[i + 1].inner;
      const auto exts = fuchsian::gs_extensions(s.inner);
      law = law && std::any_of(exts.begin(), exts.end(), [&](const fuchsian::Extension& x) {
              return x.row->id == s.row && x.outer == s.outer && x.index == s.index;
            });
    }
  }
  led.expect(law, "order_law", [&] { return who + " row " + rep.row; });

  if (g >= 2) {
    const Int bound = 84 * (g - 1);
    const bool klein = n == 7 && t == Triple{1, 2, 4};
    led.expect(rep.group.order <= bound && ((rep.group.order == bound) == klein), "hurwitz_bound",
               [&] { return who + ": |G|=" + std::to_string(rep.group.order) + ", 84(g-1)=" +
                            std::to_string(bound); });
    if (klein && rep.group.order == bound) hurwitz_equality_seen = true;
  }

  led.expect(fuchsian::harvey_admissible(rep.signature, n), "harvey_admissible",
             [&] { return who + " signature " + rep.signature.to_string(); });

  if (rep.row == "DEFAULT") {
    auto matches = fuchsian::cb_extendable(fuchsian::SkepSpec::from_images(n, {t[0], t[1], t[2]}));
    led.expect(matches.empty(), "default_not_extendable", [&] {
      return who + " extends by case " + std::to_string(matches.front().case_id);
    });
  }

  const bool any_unit = std::any_of(t.begin(), t.end(), [n](Int x) { return std::gcd(x, n) == 1; });
  if (!any_unit)
    led.expect(rep.group.structure == classifier::StructureTag::cyclic(n), "no_unit_exponent_cyclic",
               [&] { return who + " gives " + rep.group.structure.display(); });

  if (n >= 5 && numtheory::is_prime(n)) {
    const Int a = mod(t[0] * numtheory::inverse_mod(t[1], n), n);
    auto lef = classifier::classify_lefschetz(n, a);
    led.expect(lef.group.order == rep.group.order &&
                   lef.group.structure.kind == rep.group.structure.kind,
               "lefschetz_consistency", [&] {
                 return who + ": belyi " + std::to_string(rep.group.order) + ", Lefschetz a=" +
                        std::to_string(a) + " gives " + std::to_string(lef.group.order);
               });
  }
}

}  // namespace

CrossCheckReport cross_check_records(const std::vector<ClassRecord>& records,
                                     const CrossCheckOptions& options) {
  if (records.empty()) throw std::domain_error("no class records to check");
  Int lo = records.front().n, hi = records.front().n;
  for (const auto& r : records) {
    lo = std::min(lo, r.n);
    hi = std::max(hi, r.n);
  }
  if (lo < 4) throw std::domain_error("cross-check needs n >= 4");
  Ledger led(lo, hi);
  bool equality_seen = false;
  for (const auto& rec : records) check_record(rec, options, led, equality_seen);
  if (lo <= 7 && hi >= 7 && !equality_seen)
    led.fail("hurwitz_bound", "(7;1,2,4) does not attain 84(g-1)");
  return led.report();
}

CrossCheckReport cross_check(const CrossCheckOptions& options) {
  if (options.n_max < 4)
    throw std::domain_error("cross-check needs n_max >= 4, got " + std::to_string(options.n_max));
  if (options.n_min < 4 || options.n_min > options.n_max)
    throw std::domain_error("cross-check range must satisfy 4 <= n_min <= n_max");
  std::vector<ClassRecord> records;
  for (Int n = options.n_min; n <= options.n_max; ++n)
    for (const auto& [canon, members] : collect(n).classes) {
      ClassRecord rec{n, canon, members.size(), {}};
      try {
        rec.report = classifier::classify_belyi(n, canon[0], canon[1], canon[2]);
      } catch (const std::logic_error&) {
        // check_record reports the failure
      }
      records.push_back(std::move(rec));
    }
  return cross_check_records(records, options);
}

CrossCheckReport cross_check(Int n_max) {
  CrossCheckOptions opt;
  opt.n_max = n_max;
  return cross_check(opt);
}

}  // namespace cyclicaut::verify
