#pragma once

// Independent checks of the classification: numerical tests that explicit
// automorphism formulas act on sampled curve points, and the exhaustive
// sweep over belyi triples.

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclicaut/classifier.hpp"
#include "cyclicaut/curve.hpp"

namespace cyclicaut::verify {

using Complex = std::complex<double>;

/// y^n = coefficient * prod (x - root)^exponent.  Exponents are kept as
/// given (they may exceed n), unlike curve::CyclicCover.
struct AffineModel {
  Int n = 2;
  Complex coefficient{1.0, 0.0};
  std::vector<std::pair<Complex, Int>> factors;

  Complex rhs(Complex x) const;
  static AffineModel from_cover(const curve::CyclicCover& cover);
};

/// coefficient * x^x_exp * y^y_exp * prod (x - root)^exponent, all
/// exponents integers (possibly negative).
struct Monomial {
  Complex coefficient{1.0, 0.0};
  Int x_exp = 0;
  Int y_exp = 0;
  std::vector<std::pair<Complex, Int>> linear;

  Complex eval(Complex x, Complex y) const;
};

struct CurvePoint {
  Complex x;
  Complex y;
};

/// (x, y) -> (x_part(x, y), y_part(x, y)).
struct RationalMap {
  Monomial x_part;
  Monomial y_part;

  static RationalMap identity();
  /// (x, y) -> (x, zeta * y) with zeta = exp(2 pi i / n).
  static RationalMap deck(Int n, Int power = 1);

  CurvePoint apply(CurvePoint p) const;
};

/// Raised when a map is evaluated at one of its poles.
struct PoleHit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CurveSample {
  std::vector<CurvePoint> points;
};

/// x uniform by area on 0.5 <= |x| <= 2 and at least 0.1 from every finite
/// root; y the principal n-th root of the right-hand side.
CurveSample sample_curve(const AffineModel& model, std::size_t count, std::uint64_t seed);
CurveSample sample_curve(const curve::CyclicCover& cover, std::size_t count, std::uint64_t seed);

/// Relative residual of the curve equation at a point.
double point_residual(const AffineModel& model, CurvePoint p);

/// Largest residual at the mapped points.  A sample that lands on a pole
/// is replaced by a fresh point drawn from `seed`.
double action_residual(const AffineModel& model, const RationalMap& map, const CurveSample& samples,
                       std::uint64_t seed = 0);

inline constexpr double kTolerance = 1e-8;

bool same_point(CurvePoint a, CurvePoint b, double tol = kTolerance);

/// The k-fold iterate is the identity on every sample and no smaller
/// iterate is.
bool verify_map_order(const AffineModel& model, const RationalMap& map, Int k,
                      const CurveSample& samples);

/// Applies `lhs` and `rhs` as sequences (first element applied first) and
/// compares the images at every sample.
bool relation_holds(std::span<const RationalMap> lhs, std::span<const RationalMap> rhs,
                    const CurveSample& samples, double tol = kTolerance);

/// y^{2m} = x^2 - 1 with u(x,y) = (x/y^m, zeta/y), zeta = exp(i pi / m).
struct AccolaMaclachlan {
  AffineModel model;
  RationalMap u;
  RationalMap v;
  RationalMap u_squared_expected;
};
AccolaMaclachlan accola_maclachlan(Int m);

/// y^n = (x-1)(x-j)^k(x-j^2)^{k^2}, S(x,y) = (jx, j^alpha y^k (x-j^2)^-beta).
struct PeriodThree {
  AffineModel model;
  RationalMap s;
  RationalMap t;
  Int k = 0;
  Int alpha = 0;
  Int beta = 0;
};
PeriodThree period_three(Int n, Int k);

/// y^n = (x+1)^b (x-1), u(x,y) = (-x, (-1)^l y^b (x+1)^-beta).
struct TwistedInvolution {
  AffineModel model;
  RationalMap u;
  RationalMap v;
  Int b = 0;
  Int beta = 0;
  Int l = 0;
};
TwistedInvolution twisted_involution(Int n, Int b);

struct ActionCheck {
  std::string name;
  bool pass = false;
  double residual = 0.0;
};

struct ActionReport {
  std::string family;
  std::string equation;
  std::vector<ActionCheck> checks;
  bool all_pass() const;
};

/// Builds one of the explicit families ("accola-maclachlan" with curve
/// degree `n`, "periodthree" with twist `param`, "twistedz2" with twist
/// `param`) and checks residuals, claimed orders and relations on `count`
/// sampled points.
ActionReport verify_family(std::string_view family, Int n, Int param, std::size_t count,
                           std::uint64_t seed);

// ---------------------------------------------------------------------------

struct ClassRecord {
  Int n = 0;
  curve::Triple canonical{};
  std::size_t orbit_size = 0;
  classifier::ClassificationReport report;
};

struct Enumeration {
  Int n = 0;
  /// Ordered triples with a+b+c = 0 (mod n) before the gcd filter.
  std::size_t ordered_triples = 0;
  std::size_t admissible_triples = 0;
  std::vector<ClassRecord> classes;
};

inline constexpr Int kDefaultEnumerationCap = 60;

/// Classifies every admissible triple for this n, grouped by canonical
/// form; throws std::logic_error if two members of a class disagree.
Enumeration enumerate_classes(Int n, Int cap = kDefaultEnumerationCap);

struct CheckResult {
  std::string name;
  Int n_min = 0;
  Int n_max = 0;
  bool pass = true;
  std::optional<std::string> witness;
};

struct CrossCheckReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

struct CrossCheckOptions {
  Int n_min = 4;
  Int n_max = 30;
  /// Genus under test; the monodromy count is the reference.
  std::function<Int(const curve::CyclicCover&)> genus = [](const curve::CyclicCover& c) {
    return curve::genus(c);
  };
};

CrossCheckReport cross_check(Int n_max);
CrossCheckReport cross_check(const CrossCheckOptions& options);

/// Same checks, driven by previously enumerated class records.  Each
/// recorded report must agree with a fresh classification.
CrossCheckReport cross_check_records(const std::vector<ClassRecord>& records,
                                     const CrossCheckOptions& options = {});

}  // namespace cyclicaut::verify
