#include "cyclicaut/curve.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cyclicaut/errors.hpp"

namespace cyclicaut::curve {

using numtheory::mod;

Rational::Rational(Int n, Int d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Int g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

BranchPoint BranchPoint::root_of_unity(Int k, Int order) {
  if (order < 1) throw std::domain_error("root of unity needs a positive order");
  k = mod(k, order);
  Int g = std::gcd(k, order);
  k /= g;
  order /= g;
  if (order == 1) return Rational(1);
  if (order == 2) return Rational(-1);
  BranchPoint p;
  p.value_ = RootOfUnity{k, order};
  return p;
}

std::complex<double> BranchPoint::to_complex() const {
  if (auto r = std::get_if<Rational>(&value_))
    return {static_cast<double>(r->num) / static_cast<double>(r->den), 0.0};
  if (auto z = std::get_if<RootOfUnity>(&value_))
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(z->k) /
                               static_cast<double>(z->order));
  throw std::domain_error("infinity has no complex coordinate");
}

std::string BranchPoint::to_string() const {
  if (auto r = std::get_if<Rational>(&value_)) {
    if (r->den == 1) return std::to_string(r->num);
    return std::to_string(r->num) + "/" + std::to_string(r->den);
  }
  if (auto z = std::get_if<RootOfUnity>(&value_))
    return "zeta" + std::to_string(z->order) + "^" + std::to_string(z->k);
  return "inf";
}

namespace {

Int parse_int(std::string_view s) {
  if (s.empty()) throw std::domain_error("empty integer");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::domain_error("bad integer '" + std::string(s) + "'");
  Int v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::domain_error("bad integer '" + std::string(s) + "'");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? -v : v;
}

}  // namespace

BranchPoint BranchPoint::from_string(std::string_view text) {
  if (text == "inf") return Infinity{};
  if (text.starts_with("zeta")) {
    auto caret = text.find('^');
    if (caret == std::string_view::npos) throw std::domain_error("bad root of unity label");
    return root_of_unity(parse_int(text.substr(caret + 1)), parse_int(text.substr(4, caret - 4)));
  }
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

// ---------------------------------------------------------------------------

CyclicCover CyclicCover::make(Int n, std::vector<Branch> raw, Rational coefficient) {
  if (n < 2) throw std::domain_error("cover degree must be >= 2, got " + std::to_string(n));
  if (coefficient.num == 0) throw std::domain_error("zero leading coefficient");
  CyclicCover c;
  c.n = n;
  c.coefficient = coefficient;
  Int total = 0;
  for (auto& b : raw) {
    if (b.point.is_infinity()) throw std::domain_error("infinity cannot be an explicit branch point");
    if (b.exponent < 1) throw std::domain_error("exponents must be positive");
    for (const auto& seen : raw)
      if (&seen != &b && seen.point == b.point) throw std::domain_error("non-distinct roots");
    Int k = mod(b.exponent, n);
    if (k == 0) continue;
    c.branches.push_back({b.point, k});
    total += k;
  }
  if (c.branches.empty()) throw std::domain_error("no branch points");
  c.infinity_exponent = mod(-total, n);
  return c;
}

CyclicCover CyclicCover::belyi(Int n, Int a, Int b, Int c) {
  return make(n, {{BranchPoint::zero(), a}, {BranchPoint::one(), b}, {BranchPoint::minus_one(), c}});
}

std::vector<Int> CyclicCover::all_exponents() const {
  std::vector<Int> out;
  out.reserve(branches.size() + 1);
  for (const auto& b : branches) out.push_back(b.exponent);
  if (infinity_exponent != 0) out.push_back(infinity_exponent);
  return out;
}

std::size_t CyclicCover::branch_point_count() const {
  return branches.size() + (infinity_exponent != 0 ? 1 : 0);
}

std::string CyclicCover::equation() const {
  std::ostringstream os;
  os << "y^" << n << " = ";
  if (!(coefficient == Rational(1))) {
    if (coefficient == Rational(-1))
      os << "-";
    else
      os << BranchPoint(coefficient).to_string() << "*";
  }
  for (const auto& b : branches) {
    auto label = b.point.to_string();
    if (label == "0")
      os << "x";
    else if (label[0] == '-')
      os << "(x+" << label.substr(1) << ")";
    else
      os << "(x-" << label << ")";
    if (b.exponent != 1) os << "^" << b.exponent;
  }
  return os.str();
}

Signature::Signature(std::initializer_list<Int> periods_in)
    : Signature(std::vector<Int>(periods_in)) {}

Signature::Signature(std::vector<Int> periods_in) : periods(std::move(periods_in)) {
  for (Int m : periods)
    if (m < 2) throw std::domain_error("signature periods must be >= 2");
  std::sort(periods.begin(), periods.end());
}

std::string Signature::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < periods.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(periods[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// Curve grammar.

namespace {

class CurveParser {
 public:
  explicit CurveParser(std::string_view text) : text_(text) {}

  CurveForm parse() {
    skip();
    if (peek() == 'x') return parse_fermat_x_first();
    expect('y');
    Int n = exponent_or_one();
    skip();
    if (peek() == '+') {
      ++pos_;
      skip();
      expect('x');
      Int d = exponent_or_one();
      expect('=');
      expect_literal_one();
      return fermat_form(n, d);
    }
    expect('=');
    return parse_product(n);
  }

 private:
  CurveForm parse_fermat_x_first() {
    expect('x');
    Int d = exponent_or_one();
    expect('+');
    expect('y');
    Int n = exponent_or_one();
    expect('=');
    expect_literal_one();
    return fermat_form(n, d);
  }

  CurveForm fermat_form(Int n, Int d) {
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    if (n < 2) throw std::domain_error("cover degree must be >= 2, got " + std::to_string(n));
    if (d < 1) fail("Fermat degree must be positive");
    return {fermat(n, d), d};
  }

  CurveForm parse_product(Int n) {
    if (n < 2) throw std::domain_error("cover degree must be >= 2, got " + std::to_string(n));
    skip();
    Rational coefficient(1);
    if (peek() == '-' || std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = rational_literal();
      skip();
      if (peek() == '*') ++pos_;
    }
    std::vector<Branch> raw;
    bool first = true;
    for (;;) {
      skip();
      if (pos_ == text_.size()) break;
      if (!first && peek() == '*') {
        ++pos_;
        skip();
      }
      raw.push_back(factor());
      first = false;
    }
    if (raw.empty()) fail("expected at least one factor");
    for (std::size_t i = 0; i < raw.size(); ++i)
      for (std::size_t j = i + 1; j < raw.size(); ++j)
        if (raw[i].point == raw[j].point) throw std::domain_error("non-distinct roots");
    return {CyclicCover::make(n, std::move(raw), coefficient), std::nullopt};
  }

  Branch factor() {
    if (peek() == 'x') {
      ++pos_;
      return {BranchPoint::zero(), exponent_or_one()};
    }
    expect('(');
    expect('x');
    skip();
    BranchPoint point = BranchPoint::zero();
    if (peek() == '-' || peek() == '+') {
      bool minus = peek() == '-';
      ++pos_;
      skip();
      Rational r = rational_literal();
      point = Rational(minus ? r.num : -r.num, r.den);
    }
    expect(')');
    return {point, exponent_or_one()};
  }

  Int exponent_or_one() {
    skip();
    if (peek() != '^') return 1;
    ++pos_;
    skip();
    std::size_t at = pos_;
    Int k = unsigned_int();
    if (k < 1) throw ParseError("exponent must be positive", at);
    return k;
  }

  Rational rational_literal() {
    skip();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
      skip();
    }
    Int num = unsigned_int();
    Int den = 1;
    skip();
    if (peek() == '/') {
      ++pos_;
      skip();
      std::size_t at = pos_;
      den = unsigned_int();
      if (den == 0) throw ParseError("zero denominator", at);
    }
    return Rational(neg ? -num : num, den);
  }

  Int unsigned_int() {
    std::size_t start = pos_;
    Int v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > 100000000000LL) throw ParseError("integer too large", start);
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  void expect_literal_one() {
    skip();
    std::size_t at = pos_;
    if (unsigned_int() != 1) throw ParseError("Fermat form must read '= 1'", at);
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::string got = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
    throw ParseError(what + ", got " + got, pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

CurveForm parse_curve_form(std::string_view text) { return CurveParser(text).parse(); }

CyclicCover parse_curve(std::string_view text) { return parse_curve_form(text).cover; }

CyclicCover fermat(Int n, Int d) {
  if (d < 1) throw std::domain_error("Fermat degree must be positive");
  std::vector<Branch> raw;
  for (Int k = 0; k < d; ++k) raw.push_back({BranchPoint::root_of_unity(k, d), 1});
  // 1 - x^d = -prod (x - zeta^k)
  return CyclicCover::make(n, std::move(raw), Rational(-1));
}

// ---------------------------------------------------------------------------

bool is_irreducible(const CyclicCover& cover) {
  Int g = cover.n;
  for (const auto& b : cover.branches) g = std::gcd(g, b.exponent);
  return g == 1;
}

namespace {

void require_irreducible(const CyclicCover& cover, const char* who) {
  if (!is_irreducible(cover))
    throw std::domain_error(std::string(who) + ": reducible cover " + cover.equation());
}

}  // namespace

Int genus(const CyclicCover& cover) {
  require_irreducible(cover, "genus");
  const Int n = cover.n;
  const auto ks = cover.all_exponents();
  const auto m = static_cast<Int>(ks.size());
  Int twice = 2 + (m - 2) * n;
  for (Int k : ks) twice -= std::gcd(n, k);
  if (twice < 0 || twice % 2 != 0)
    throw std::logic_error("genus formula produced " + std::to_string(twice) + "/2 for " +
                           cover.equation());
  return twice / 2;
}

Signature signature_of(const CyclicCover& cover) {
  require_irreducible(cover, "signature_of");
  std::vector<Int> periods;
  for (Int k : cover.all_exponents()) {
    Int m = cover.n / std::gcd(cover.n, k);
    if (m > 1) periods.push_back(m);
  }
  return Signature(std::move(periods));
}

CyclicCover scale_exponents(const CyclicCover& cover, Int l) {
  if (std::gcd(mod(l, cover.n), cover.n) != 1)
    throw std::domain_error("scale_exponents: " + std::to_string(l) + " is not prime to " +
                            std::to_string(cover.n));
  std::vector<Branch> raw;
  for (const auto& b : cover.branches) raw.push_back({b.point, mod(l * b.exponent, cover.n)});
  return CyclicCover::make(cover.n, std::move(raw), cover.coefficient);
}

void check_admissible_triple(Int n, const Triple& t) {
  if (n < 2) throw std::domain_error("triple modulus must be >= 2");
  for (Int x : t)
    if (x < 1 || x > n - 1)
      throw std::domain_error("triple entries must lie in [1, n-1]");
  if ((t[0] + t[1] + t[2]) % n != 0) throw std::domain_error("a+b+c must vanish mod n");
  if (numtheory::gcd_many({n, t[0], t[1], t[2]}) != 1)
    throw std::domain_error("gcd(n,a,b,c) must be 1 (reducible curve)");
}

Triple canonical_triple(Int n, const Triple& t) {
  check_admissible_triple(n, t);
  Triple best{n, n, n};
  for (Int k : numtheory::units(n)) {
    Triple s{k * t[0] % n, k * t[1] % n, k * t[2] % n};
    std::sort(s.begin(), s.end());
    if (s < best) best = s;
  }
  return best;
}

Triple canonical_triple(Int n, Int a, Int b, Int c) { return canonical_triple(n, Triple{a, b, c}); }

std::vector<Triple> triple_orbit(Int n, const Triple& t) {
  std::vector<Triple> out;
  for (Int k : numtheory::units(n)) {
    Triple s{k * t[0] % n, k * t[1] % n, k * t[2] % n};
    std::sort(s.begin(), s.end());
    do out.push_back(s);
    while (std::next_permutation(s.begin(), s.end()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Int monodromy_genus(const CyclicCover& cover) {
  require_irreducible(cover, "monodromy_genus");
  const Int n = cover.n;
  std::vector<Int> product(static_cast<std::size_t>(n));
  std::iota(product.begin(), product.end(), Int{0});

  Int ramification = 0;
  for (Int k : cover.all_exponents()) {
    std::vector<Int> sigma(static_cast<std::size_t>(n));
    for (Int s = 0; s < n; ++s) sigma[s] = (s + k) % n;

    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    Int cycles = 0;
    for (Int s = 0; s < n; ++s) {
      if (seen[s]) continue;
      ++cycles;
      for (Int t = s; !seen[t]; t = sigma[t]) seen[t] = true;
    }
    ramification += n - cycles;

    for (auto& p : product) p = sigma[p];
  }
  for (Int s = 0; s < n; ++s)
    if (product[s] != s) throw std::logic_error("monodromy product is not the identity");

  // 2 - 2g = 2n - sum (n - c_j)
  Int twice = ramification - 2 * n + 2;
  if (twice < 0 || twice % 2 != 0) throw std::logic_error("monodromy Euler characteristic is odd");
  return twice / 2;
}

}  // namespace cyclicaut::curve
