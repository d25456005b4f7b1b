#include "cyclicaut/fuchsian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cyclicaut::fuchsian {

using numtheory::mod;

const std::vector<GsRow>& gs_table() {
  static const std::vector<GsRow> table = {
      {"1", "(n,n,n)", "(3,3,n)", 3, true, 4, 0},
      {"2", "(n,n,n)", "(2,3,2n)", 6, true, 4, 0},
      {"3", "(n,n,m)", "(2,n,2m)", 2, true, 3, 7},
      {"A", "(n,n,n,n)", "(2,2,2,n)", 4, true, 3, 0},
      {"B", "(n,n,m,m)", "(2,2,n,m)", 2, true, 0, 5},
      {"4", "(7,7,7)", "(2,3,7)", 24, false, 0, 0},
      {"5", "(2,7,7)", "(2,3,7)", 9, false, 0, 0},
      {"6", "(3,3,7)", "(2,3,7)", 8, false, 0, 0},
      {"7", "(4,8,8)", "(2,3,8)", 12, false, 0, 0},
      {"8", "(3,8,8)", "(2,3,8)", 10, false, 0, 0},
      {"9", "(9,9,9)", "(2,3,9)", 12, false, 0, 0},
      {"10", "(4,4,5)", "(2,4,5)", 6, false, 0, 0},
      {"11", "(n,4n,4n)", "(2,3,4n)", 6, false, 2, 0},
      {"12", "(n,2n,2n)", "(2,4,2n)", 4, false, 3, 0},
      {"13", "(3,n,3n)", "(2,3,3n)", 4, false, 3, 0},
      {"14", "(2,n,2n)", "(2,3,2n)", 3, false, 4, 0},
  };
  return table;
}

const GsRow& gs_row(std::string_view id) {
  for (const auto& row : gs_table())
    if (row.id == id) return row;
  throw std::domain_error("no table row '" + std::string(id) + "'");
}

namespace {

// A pattern entry: `coeff` times parameter `var`, or the literal `coeff`
// when var is 0.
struct Term {
  Int coeff = 1;
  char var = 0;
};

std::vector<Term> parse_pattern(const std::string& text) {
  std::vector<Term> terms;
  Term cur;
  bool have_digits = false;
  auto flush = [&] {
    if (!have_digits && cur.var == 0) throw std::logic_error("bad table pattern " + text);
    terms.push_back(cur);
    cur = Term{};
    have_digits = false;
  };
  for (char ch : text) {
    if (ch == '(' || ch == ' ') continue;
    if (ch == ',' || ch == ')') {
      flush();
    } else if (ch >= '0' && ch <= '9') {
      cur.coeff = have_digits ? cur.coeff * 10 + (ch - '0') : ch - '0';
      have_digits = true;
    } else {
      cur.var = ch;
    }
  }
  return terms;
}

using Binding = std::map<char, Int>;

bool bind_terms(const std::vector<Term>& pattern, const std::vector<Int>& periods, Binding& out) {
  if (pattern.size() != periods.size()) return false;
  Binding b;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    const auto& t = pattern[i];
    if (t.var == 0) {
      if (periods[i] != t.coeff) return false;
      continue;
    }
    if (periods[i] % t.coeff != 0) return false;
    Int v = periods[i] / t.coeff;
    auto [it, inserted] = b.emplace(t.var, v);
    if (!inserted && it->second != v) return false;
  }
  out = std::move(b);
  return true;
}

bool guards_hold(const GsRow& row, const Binding& b) {
  auto get = [&](char v) -> Int {
    auto it = b.find(v);
    return it == b.end() ? 0 : it->second;
  };
  if (row.min_n && get('n') < row.min_n) return false;
  if (row.min_n_plus_m && get('n') + get('m') < row.min_n_plus_m) return false;
  return true;
}

Signature instantiate(const std::vector<Term>& pattern, const Binding& b) {
  std::vector<Int> periods;
  for (const auto& t : pattern) periods.push_back(t.var == 0 ? t.coeff : t.coeff * b.at(t.var));
  return Signature(std::move(periods));
}

}  // namespace

bool harvey_admissible(const Signature& sig, Int n) {
  const auto& ps = sig.periods;
  if (ps.empty()) return false;
  if (numtheory::lcm_many(ps) != n) return false;
  if (ps.size() == 1) return false;
  for (std::size_t skip = 0; skip < ps.size(); ++skip) {
    Int l = 1;
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (i != skip) l = std::lcm(l, ps[i]);
    if (l != n) return false;
  }
  return true;
}

std::vector<Extension> gs_extensions(const Signature& sig) {
  std::vector<Extension> out;
  for (const auto& row : gs_table()) {
    const auto inner = parse_pattern(row.inner);
    const auto outer = parse_pattern(row.outer);
    if (inner.size() != sig.size()) continue;
    std::vector<Int> order = sig.periods;
    std::sort(order.begin(), order.end());
    do {
      Binding b;
      if (!bind_terms(inner, order, b) || !guards_hold(row, b)) continue;
      Signature target = instantiate(outer, b);
      bool seen = std::any_of(out.begin(), out.end(), [&](const Extension& e) {
        return e.row == &row && e.outer == target;
      });
      if (!seen) out.push_back({&row, std::move(target), row.index});
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return out;
}

bool is_finitely_maximal(const Signature& sig) { return gs_extensions(sig).empty(); }

// ---------------------------------------------------------------------------

Int Chain::index() const {
  Int total = 1;
  for (const auto& s : steps) total *= s.index;
  return total;
}

namespace {

std::optional<int> listed_item(const Chain& chain) {
  if (chain.steps.size() != 2) return std::nullopt;
  const auto& first = chain.steps[0].row;
  const auto& second = chain.steps[1].row;
  const auto& p = chain.start().periods;
  bool all_equal = p.size() == 3 && p[0] == p[1] && p[1] == p[2];
  if (first == "1" && second == "3") return 1;
  if (first == "1" && second == "6") return 2;
  if (first == "1" && second == "13") return 3;
  if (first == "3" && second == "3") return 4;
  if (first == "3" && second == "11") return 5;
  if (first == "3" && second == "14") return all_equal ? 6 : 7;
  if (first == "12" && second == "14") return 8;
  return std::nullopt;
}

void extend(std::vector<ChainStep>& path, std::vector<Chain>& out) {
  const Signature at = path.back().outer;
  for (const auto& ext : gs_extensions(at)) {
    path.push_back({at, ext.outer, ext.row->id, ext.index});
    if (path.size() >= 2) out.push_back(Chain{path, std::nullopt, std::nullopt, false});
    extend(path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<Chain> extension_chains(const Signature& sig) {
  std::vector<Chain> out;
  for (const auto& first : gs_extensions(sig)) {
    std::vector<ChainStep> path{{sig, first.outer, first.row->id, first.index}};
    extend(path, out);
  }
  const auto singles = gs_extensions(sig);
  for (auto& chain : out) {
    for (const auto& e : singles)
      if (e.outer == chain.finish() && e.index == chain.index()) {
        chain.equivalent_row = e.row->id;
        break;
      }
    chain.listed_item = listed_item(chain);
    chain.dead = chain.listed_item == 1 || chain.listed_item == 3 || chain.listed_item == 6;
  }
  return out;
}

// ---------------------------------------------------------------------------

SkepSpec SkepSpec::from_images(Int n, std::vector<Int> images) {
  SkepSpec s;
  s.n = n;
  for (Int& k : images) {
    k = mod(k, n);
    Int g = std::gcd(n, k);
    s.periods.push_back(n / g);
  }
  s.images = std::move(images);
  return s;
}

SkepSpec SkepSpec::from_cover(const curve::CyclicCover& cover) {
  return from_images(cover.n, cover.all_exponents());
}

void SkepSpec::validate() const {
  if (n < 2) throw std::domain_error("skep target order must be >= 2");
  if (periods.size() != images.size())
    throw std::domain_error("skep needs one image per period");
  Int total = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    Int k = mod(images[i], n);
    if (k == 0 || n / std::gcd(n, k) != periods[i])
      throw std::domain_error("image T^" + std::to_string(images[i]) + " does not have order " +
                              std::to_string(periods[i]));
    total += k;
  }
  if (total % n != 0) throw std::domain_error("skep images must multiply to the identity");
}

namespace {

bool all_equal_to(const std::vector<Int>& v, Int x) {
  return std::all_of(v.begin(), v.end(), [x](Int p) { return p == x; });
}

void case_one(const SkepSpec& s, std::vector<CbMatch>& out) {
  if (s.periods.size() != 4 || !all_equal_to(s.periods, s.n) || s.n < 3) return;
  const Int n = s.n;
  const Int inv = numtheory::inverse_mod(s.images[0], n);
  const Int a = mod(s.images[1] * inv, n);
  const Int b = mod(s.images[2] * inv, n);
  const Int c = mod(s.images[3] * inv, n);
  if (mod(a * b % n * c, n) != 1 % n) return;
  if (a * a % n != 1 || b * b % n != 1 || c * c % n != 1) return;
  if ((1 + a + b + c) % n != 0) return;
  out.push_back({1, Signature{2, 2, 2, n}, 4, "extends; group structure not determined"});
}

void case_two(const SkepSpec& s, std::vector<CbMatch>& out) {
  if (s.periods.size() != 4) return;
  auto p = s.periods;
  std::sort(p.begin(), p.end());
  if (p[0] != p[1] || p[2] != p[3] || p[0] + p[2] < 5) return;
  out.push_back({2, Signature{2, 2, p[0], p[2]}, 2, "dihedral extension"});
}

void case_three(const SkepSpec& s, std::vector<CbMatch>& out) {
  if (s.periods.size() != 3 || !all_equal_to(s.periods, s.n) || s.n < 4) return;
  const Int n = s.n;
  const auto& z = s.images;
  for (Int k = 2; k < n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    bool forward = mod(k * z[0], n) == mod(z[1], n) && mod(k * z[1], n) == mod(z[2], n) &&
                   mod(k * z[2], n) == mod(z[0], n);
    bool backward = mod(k * z[0], n) == mod(z[2], n) && mod(k * z[2], n) == mod(z[1], n) &&
                    mod(k * z[1], n) == mod(z[0], n);
    if (forward || backward) {
      out.push_back({3, Signature{3, 3, n}, 3, "order-3 twist by " + std::to_string(k)});
      return;
    }
  }
}

void case_four(const SkepSpec& s, std::vector<CbMatch>& out) {
  if (s.periods.size() != 3) return;
  const Int n = s.n;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      const Int p = s.periods[i];
      const Int m = s.periods[3 - i - j];
      if (s.periods[j] != p || p != n || p < 3 || p + m < 7 || p % m != 0) continue;
      const Int k = mod(s.images[j] * numtheory::inverse_mod(s.images[i], n), n);
      if (k * k % n != 1 % n) continue;
      Signature outer{2, p, 2 * m};
      bool seen = std::any_of(out.begin(), out.end(),
                              [&](const CbMatch& c) { return c.case_id == 4 && c.outer == outer; });
      if (!seen)
        out.push_back({4, outer, 2, k == 1 ? "equal images swapped" : "involution " + std::to_string(k)});
    }
}

void case_five(const SkepSpec& s, std::vector<CbMatch>& out) {
  if (s.periods.size() != 3 || s.n != 12) return;
  auto p = s.periods;
  std::sort(p.begin(), p.end());
  if (p != std::vector<Int>{3, 4, 12}) return;
  const std::vector<Int> target{1, 3, 8};
  for (Int k : numtheory::units(12)) {
    std::vector<Int> scaled;
    for (Int z : s.images) scaled.push_back(mod(k * z, 12));
    std::sort(scaled.begin(), scaled.end());
    if (scaled == target) {
      out.push_back({5, Signature{2, 3, 12}, 4, "images equivalent to (1,3,8)"});
      return;
    }
  }
}

}  // namespace

std::vector<CbMatch> cb_extendable(const SkepSpec& skep) {
  skep.validate();
  if (skep.periods.size() != 3 && skep.periods.size() != 4)
    throw std::domain_error("extension criteria need 3 or 4 periods");
  std::vector<CbMatch> out;
  case_one(skep, out);
  case_two(skep, out);
  case_three(skep, out);
  case_four(skep, out);
  case_five(skep, out);
  return out;
}

}  // namespace cyclicaut::fuchsian
