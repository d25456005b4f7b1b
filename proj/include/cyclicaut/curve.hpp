#pragma once

// Cyclic covers y^n = c * prod (x - e_i)^{k_i} of the Riemann sphere.
//
// A cover is stored in reduced form: every finite exponent lies in [1, n-1]
// and the exponent over infinity is whatever makes the total sum vanish mod n.
// Branch point labels are exact (rationals or roots of unity); their position
// never matters for genus or signature, only for sampling and reporting.

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cyclicaut/numtheory.hpp"

namespace cyclicaut::curve {

struct Rational {
  Int num = 0;
  Int den = 1;

  Rational() = default;
  Rational(Int n, Int d = 1);

  bool operator==(const Rational&) const = default;
};

/// exp(2*pi*i*k/order), stored with gcd(k, order) = 1 and order >= 3.  The
/// rational roots of unity 1 and -1 are represented as `Rational`.
struct RootOfUnity {
  Int k = 0;
  Int order = 1;
  bool operator==(const RootOfUnity&) const = default;
};

struct Infinity {
  bool operator==(const Infinity&) const = default;
};

class BranchPoint {
 public:
  BranchPoint() = default;
  BranchPoint(Rational r) : value_(r) {}
  BranchPoint(Infinity i) : value_(i) {}

  /// Normalizes the label; 1 and -1 come back as rationals.
  static BranchPoint root_of_unity(Int k, Int order);

  static BranchPoint zero() { return Rational(0); }
  static BranchPoint one() { return Rational(1); }
  static BranchPoint minus_one() { return Rational(-1); }
  static BranchPoint infinity() { return Infinity{}; }

  bool is_infinity() const { return std::holds_alternative<Infinity>(value_); }
  std::complex<double> to_complex() const;

  /// "0", "-1", "3/2", "zeta5^2", "inf".
  std::string to_string() const;
  static BranchPoint from_string(std::string_view text);

  bool operator==(const BranchPoint&) const = default;

 private:
  std::variant<Rational, RootOfUnity, Infinity> value_;
};

struct Branch {
  BranchPoint point;
  Int exponent = 1;
  bool operator==(const Branch&) const = default;
};

struct CyclicCover {
  Int n = 2;
  std::vector<Branch> branches;
  Int infinity_exponent = 0;
  Rational coefficient{1};

  /// Builds a reduced cover: exponents are taken mod n, factors whose
  /// exponent vanishes mod n are dropped, and the infinity exponent is
  /// derived.  Throws std::domain_error on n < 2, repeated or infinite
  /// branch points, or when no branch point survives.
  static CyclicCover make(Int n, std::vector<Branch> raw, Rational coefficient = Rational(1));

  /// y^n = x^a (x-1)^b (x+1)^c.
  static CyclicCover belyi(Int n, Int a, Int b, Int c);

  /// Finite exponents followed by the infinity exponent when it is nonzero.
  std::vector<Int> all_exponents() const;
  std::size_t branch_point_count() const;

  /// Human-readable equation, e.g. "y^7 = x(x-1)^2(x+1)^4".
  std::string equation() const;

  bool operator==(const CyclicCover&) const = default;
};

/// Genus-0 Fuchsian signature, treated as a multiset: periods are kept
/// sorted ascending and must all be >= 2.
struct Signature {
  int genus = 0;
  std::vector<Int> periods;

  Signature() = default;
  Signature(std::initializer_list<Int> periods_in);
  explicit Signature(std::vector<Int> periods_in);

  std::size_t size() const { return periods.size(); }
  std::string to_string() const;
  bool operator==(const Signature&) const = default;
  auto operator<=>(const Signature&) const = default;
};

struct CurveForm {
  CyclicCover cover;
  /// Set for input written as y^n + x^d = 1.
  std::optional<Int> fermat_degree;
};

/// Parses `y^N = [c] prod` where each factor is x^K, (x-R)^K or (x+R)^K, or
/// the Fermat form `y^N + x^D = 1`.
CurveForm parse_curve_form(std::string_view text);
CyclicCover parse_curve(std::string_view text);

/// y^n + x^d = 1 as a cyclic n-fold cover: d branch points at the d-th roots
/// of unity with exponent 1.
CyclicCover fermat(Int n, Int d);

bool is_irreducible(const CyclicCover& cover);

/// Riemann-Hurwitz genus; infinity counts as a branch point when its
/// exponent is nonzero.  Throws std::domain_error on reducible covers.
Int genus(const CyclicCover& cover);

Signature signature_of(const CyclicCover& cover);

/// Replaces each exponent k by l*k mod n.  Requires gcd(l, n) = 1.
CyclicCover scale_exponents(const CyclicCover& cover, Int l);

using Triple = std::array<Int, 3>;

/// Least representative, in lexicographic order, of the sorted triples
/// k*(a,b,c) mod n over all units k.
Triple canonical_triple(Int n, Int a, Int b, Int c);
Triple canonical_triple(Int n, const Triple& t);

/// Every ordered triple k*tau(a,b,c) mod n, deduplicated and sorted.
std::vector<Triple> triple_orbit(Int n, const Triple& t);

/// Throws std::domain_error unless 1 <= a,b,c <= n-1, a+b+c = 0 (mod n) and
/// gcd(n,a,b,c) = 1.
void check_admissible_triple(Int n, const Triple& t);

/// Genus from the cycle structure of the sheet permutations s -> s + k
/// (mod n) at every branch point.  Independent of genus().
Int monodromy_genus(const CyclicCover& cover);

}  // namespace cyclicaut::curve
