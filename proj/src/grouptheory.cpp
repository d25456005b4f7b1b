#include "cyclicaut/grouptheory.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "cyclicaut/errors.hpp"

namespace cyclicaut::grouptheory {

// ---------------------------------------------------------------------------
// Words

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& g : out) g = -g;
  return out;
}

Word concat(const Word& x, const Word& y) {
  Word out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

Word power(const Word& w, Int e) {
  const Word base = e < 0 ? inverse(w) : w;
  Word out;
  for (Int i = 0; i < (e < 0 ? -e : e); ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

Word commutator(const Word& x, const Word& y) {
  return concat(concat(inverse(x), inverse(y)), concat(x, y));
}

Word cyclically_reduce(Word w) {
  Word stack;
  for (int g : w) {
    if (!stack.empty() && stack.back() == -g)
      stack.pop_back();
    else
      stack.push_back(g);
  }
  std::size_t lo = 0, hi = stack.size();
  while (hi - lo >= 2 && stack[lo] == -stack[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(stack.begin() + static_cast<std::ptrdiff_t>(lo),
              stack.begin() + static_cast<std::ptrdiff_t>(hi));
}

// ---------------------------------------------------------------------------
// Presentations

Presentation Presentation::with_count(int generator_count, std::vector<Word> relators) {
  Presentation p;
  for (int i = 0; i < generator_count; ++i)
    p.generators.push_back(generator_count <= 26 ? std::string(1, static_cast<char>('a' + i))
                                                 : "g" + std::to_string(i + 1));
  p.relators = std::move(relators);
  p.validate();
  return p;
}

void Presentation::validate() const {
  const int count = generator_count();
  for (const auto& w : relators) {
    if (w.empty()) throw std::domain_error("empty relator");
    for (int g : w)
      if (g == 0 || g > count || g < -count)
        throw std::domain_error("relator uses generator index " + std::to_string(g) + " of " +
                                std::to_string(count));
  }
}

std::string Presentation::to_string() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < generators.size(); ++i) os << (i ? "," : "") << generators[i];
  os << " |";
  for (std::size_t r = 0; r < relators.size(); ++r) {
    os << (r ? ", " : " ");
    const auto& w = relators[r];
    bool first = true;
    for (std::size_t i = 0; i < w.size();) {
      const int g = std::abs(w[i]);
      Int e = 0;
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) {
        e += w[j] > 0 ? 1 : -1;
        ++j;
      }
      os << (first ? "" : "*") << generators[static_cast<std::size_t>(g - 1)];
      if (e != 1) os << "^" << e;
      first = false;
      i = j;
    }
  }
  os << ">";
  return os.str();
}

namespace {

class PresentationParser {
 public:
  explicit PresentationParser(std::string_view text) : text_(text) {}

  Presentation parse() {
    Presentation p;
    expect('<');
    for (;;) {
      auto name = identifier();
      if (std::find(p.generators.begin(), p.generators.end(), name) != p.generators.end())
        throw ParseError("duplicate generator '" + name + "'", pos_);
      p.generators.push_back(name);
      skip();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    names_ = &p.generators;
    expect('|');
    skip();
    if (peek() != '>') {
      for (;;) {
        std::size_t at = pos_;
        Word w = word();
        skip();
        if (peek() == '=') {
          ++pos_;
          w = concat(w, inverse(word()));
        }
        if (w.empty()) throw ParseError("relator is the empty word", at);
        p.relators.push_back(std::move(w));
        skip();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect('>');
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return p;
  }

 private:
  Word word() {
    Word w = factor();
    for (;;) {
      skip();
      char c = peek();
      if (c == '*') {
        ++pos_;
        w = concat(w, factor());
      } else if (c == '(' || c == '[' || std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        w = concat(w, factor());
      } else {
        return w;
      }
    }
  }

  Word factor() {
    Word base = atom();
    skip();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    Int e = number();
    return power(base, neg ? -e : e);
  }

  Word atom() {
    skip();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Word w = word();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word x = word();
      expect(',');
      Word y = word();
      expect(']');
      return commutator(x, y);
    }
    if (c == '1') {
      ++pos_;
      return {};
    }
    std::size_t at = pos_;
    auto name = identifier();
    auto it = std::find(names_->begin(), names_->end(), name);
    if (it == names_->end()) throw ParseError("unknown generator '" + name + "'", at);
    return {static_cast<int>(it - names_->begin()) + 1};
  }

  std::string identifier() {
    skip();
    std::size_t start = pos_;
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      fail("expected a generator name");
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Int number() {
    std::size_t start = pos_;
    Int v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) throw ParseError("exponent too large", start);
      ++pos_;
    }
    if (pos_ == start) fail("expected an exponent");
    return v;
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
  const std::vector<std::string>* names_ = nullptr;
};

}  // namespace

Presentation parse_presentation(std::string_view text) { return PresentationParser(text).parse(); }

// ---------------------------------------------------------------------------
// Coset enumeration (HLT with coincidence processing and lookahead)

namespace {

class CosetTable {
 public:
  CosetTable(int generators, std::size_t max_cosets, std::vector<std::vector<int>> relators)
      : cols_(2 * generators), max_(max_cosets), relators_(std::move(relators)) {
    grow(1);
    add_row();
  }

  Int run() {
    std::size_t alpha = 0;
    while (alpha < next_) {
      if (!alive(alpha)) {
        ++alpha;
        continue;
      }
      bool restarted = false;
      for (const auto& r : relators_) {
        if (!alive(alpha)) break;
        if (!ensure_room(r.size(), alpha)) {
          restarted = true;
          break;
        }
        scan(static_cast<int>(alpha), r, true);
      }
      if (restarted) continue;
      if (alive(alpha)) {
        for (int x = 0; x < cols_; ++x) {
          if (at(alpha, x) >= 0) continue;
          if (!ensure_room(1, alpha)) {
            restarted = true;
            break;
          }
          define(static_cast<int>(alpha), x);
        }
        if (restarted) continue;
      }
      ++alpha;
    }
    return static_cast<Int>(live_);
  }

 private:
  int& at(std::size_t c, int x) { return table_[c * static_cast<std::size_t>(cols_) + x]; }
  bool alive(std::size_t c) const { return parent_[c] == static_cast<int>(c); }

  void grow(std::size_t rows) {
    if (rows <= allocated_) return;
    allocated_ = std::min(max_, std::max(rows, 2 * allocated_));
    table_.resize(allocated_ * static_cast<std::size_t>(cols_), -1);
    parent_.resize(allocated_, -1);
  }

  int add_row() {
    grow(next_ + 1);
    const auto c = static_cast<int>(next_++);
    parent_[c] = c;
    ++live_;
    return c;
  }

  void define(int a, int x) {
    const int b = add_row();
    at(a, x) = b;
    at(b, x ^ 1) = a;
  }

  // Returns false when the table was renumbered; `alpha` then holds the new
  // index of the first live coset at or after the old one.
  bool ensure_room(std::size_t need, std::size_t& alpha) {
    need += static_cast<std::size_t>(cols_);
    if (next_ + need <= max_) return true;
    alpha = compact(alpha);
    lookahead();
    alpha = compact(alpha);
    const std::size_t free = max_ - next_;
    if (free < need || free < max_ / 16)
      throw BudgetExceeded("coset enumeration exceeded " + std::to_string(max_) + " cosets");
    return false;
  }

  int rep(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      int up = parent_[c];
      parent_[c] = r;
      c = up;
    }
    return r;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    int a = rep(k), b = rep(l);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
    --live_;
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const int g = queue[h];
      for (int x = 0; x < cols_; ++x) {
        const int d = at(g, x);
        if (d < 0) continue;
        at(d, x ^ 1) = -1;
        const int mu = rep(g);
        const int nu = rep(d);
        if (at(mu, x) >= 0) {
          merge(nu, at(mu, x), queue);
        } else if (at(nu, x ^ 1) >= 0) {
          merge(mu, at(nu, x ^ 1), queue);
        } else {
          at(mu, x) = nu;
          at(nu, x ^ 1) = mu;
        }
      }
    }
  }

  void scan(int alpha, const std::vector<int>& w, bool fill) {
    int f = alpha, b = alpha;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[i]) >= 0) f = at(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, w[j] ^ 1) >= 0) b = at(b, w[j--] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[i]) = b;
        at(b, w[i] ^ 1) = f;
        return;
      }
      if (!fill) return;
      define(f, w[i]);
    }
  }

  void lookahead() {
    for (std::size_t c = 0; c < next_; ++c)
      for (const auto& r : relators_) {
        if (!alive(c)) break;
        scan(static_cast<int>(c), r, false);
      }
  }

  std::size_t compact(std::size_t alpha) {
    std::vector<int> index(next_, -1);
    int k = 0;
    for (std::size_t c = 0; c < next_; ++c)
      if (alive(c)) index[c] = k++;
    std::size_t new_alpha = static_cast<std::size_t>(k);
    for (std::size_t c = alpha; c < next_; ++c)
      if (alive(c)) {
        new_alpha = static_cast<std::size_t>(index[c]);
        break;
      }
    std::vector<int> table(table_.size(), -1);
    for (std::size_t c = 0; c < next_; ++c) {
      if (!alive(c)) continue;
      for (int x = 0; x < cols_; ++x) {
        const int e = at(c, x);
        table[static_cast<std::size_t>(index[c]) * cols_ + x] = e < 0 ? -1 : index[rep(e)];
      }
    }
    table_ = std::move(table);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(parent_.begin(), parent_.begin() + k, 0);
    next_ = static_cast<std::size_t>(k);
    return new_alpha;
  }

  int cols_;
  std::size_t max_;
  std::vector<std::vector<int>> relators_;
  std::vector<int> table_;
  std::vector<int> parent_;
  std::size_t allocated_ = 0;
  std::size_t next_ = 0;
  std::size_t live_ = 0;
};

int column(int g) { return g > 0 ? 2 * (g - 1) : 2 * (-g - 1) + 1; }

}  // namespace

Int coset_enumerate(const Presentation& pres, std::size_t max_cosets) {
  pres.validate();
  if (max_cosets < 1) throw std::domain_error("max_cosets must be positive");
  if (pres.generator_count() == 0) return 1;
  std::vector<std::vector<int>> relators;
  for (const auto& w : pres.relators) {
    Word r = cyclically_reduce(w);
    if (r.empty()) continue;
    std::vector<int> cols;
    cols.reserve(r.size());
    for (int g : r) cols.push_back(column(g));
    relators.push_back(std::move(cols));
  }
  if (max_cosets < 2 * static_cast<std::size_t>(pres.generator_count()) + 2)
    throw BudgetExceeded("coset enumeration exceeded " + std::to_string(max_cosets) + " cosets");
  CosetTable table(pres.generator_count(), max_cosets, std::move(relators));
  return table.run();
}

// ---------------------------------------------------------------------------
// Smith normal form

std::string AbelianInvariants::to_string() const {
  std::string out;
  if (free_rank > 0) out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (Int d : torsion) out += (out.empty() ? "Z" : "+Z") + std::to_string(d);
  return out.empty() ? "1" : out;
}

std::vector<Int> smith_diagonal(IntMatrix a, std::size_t cols) {
  const std::size_t rows = a.size();
  for (const auto& row : a)
    if (row.size() != cols) throw std::domain_error("ragged integer matrix");
  const std::size_t n = std::min(rows, cols);
  std::vector<Int> diag;

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Least nonzero absolute value in the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) {
        while (diag.size() < n) diag.push_back(0);
        return diag;
      }
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);

      const Int p = a[t][t];
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const Int q = a[i][t] / p;
        if (q != 0)
          for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        dirty |= a[i][t] != 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const Int q = a[t][j] / p;
        if (q != 0)
          for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        dirty |= a[t][j] != 0;
      }
      if (dirty) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % p != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(std::llabs(a[t][t]));
  }
  return diag;
}

AbelianInvariants abelian_invariants(const IntMatrix& matrix, std::size_t cols) {
  AbelianInvariants inv;
  std::size_t rank = 0;
  for (Int d : smith_diagonal(matrix, cols)) {
    if (d == 0) continue;
    ++rank;
    if (d > 1) inv.torsion.push_back(d);
  }
  inv.free_rank = static_cast<Int>(cols - rank);
  return inv;
}

AbelianInvariants abelianization(const Presentation& pres) {
  pres.validate();
  const auto cols = static_cast<std::size_t>(pres.generator_count());
  IntMatrix m;
  for (const auto& w : pres.relators) {
    std::vector<Int> row(cols, 0);
    for (int g : w) row[static_cast<std::size_t>(std::abs(g) - 1)] += g > 0 ? 1 : -1;
    m.push_back(std::move(row));
  }
  return abelian_invariants(m, cols);
}

// ---------------------------------------------------------------------------
// Permutation groups

PermutationSet PermutationSet::from_cycles(std::string_view text, int degree) {
  std::vector<std::vector<std::vector<int>>> cycle_lists;
  std::vector<std::vector<int>> current;
  bool any = false;
  int largest = 0;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) { throw ParseError(what, pos); };

  auto finish = [&] {
    if (any) cycle_lists.push_back(std::move(current));
    current.clear();
    any = false;
  };
  while (pos < text.size()) {
    char c = text[pos];
    if (c == ';' || c == '\n') {
      finish();
      ++pos;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
    } else if (c == '(') {
      ++pos;
      std::vector<int> cycle;
      for (;;) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          break;
        }
        std::size_t start = pos;
        int v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
          v = v * 10 + (text[pos++] - '0');
        if (pos == start) fail("expected a point");
        if (v < 1) fail("points are numbered from 1");
        cycle.push_back(v - 1);
        largest = std::max(largest, v);
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (pos < text.size() && text[pos] == ',') ++pos;
      }
      current.push_back(std::move(cycle));
      any = true;
    } else {
      fail(std::string("unexpected '") + c + "'");
    }
  }
  finish();
  if (cycle_lists.empty()) throw ParseError("no permutations given", 0);

  PermutationSet set;
  set.degree = std::max(degree, largest);
  for (const auto& cycles : cycle_lists) {
    std::vector<int> img(static_cast<std::size_t>(set.degree));
    std::iota(img.begin(), img.end(), 0);
    std::vector<bool> touched(static_cast<std::size_t>(set.degree), false);
    for (const auto& cyc : cycles)
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        if (touched[cyc[i]]) throw std::domain_error("cycles of one permutation must be disjoint");
        touched[cyc[i]] = true;
        img[cyc[i]] = cyc[(i + 1) % cyc.size()];
      }
    set.generators.push_back(std::move(img));
  }
  set.validate();
  return set;
}

void PermutationSet::validate() const {
  if (degree < 1) throw std::domain_error("permutation degree must be positive");
  for (const auto& g : generators) {
    if (g.size() != static_cast<std::size_t>(degree))
      throw std::domain_error("permutation has the wrong degree");
    std::vector<bool> hit(g.size(), false);
    for (int v : g) {
      if (v < 0 || v >= degree || hit[v]) throw std::domain_error("image list is not a bijection");
      hit[v] = true;
    }
  }
}

namespace {

struct PermHash {
  std::size_t operator()(const std::vector<int>& p) const {
    std::size_t h = 1469598103934665603ULL;
    for (int v : p) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
    return h;
  }
};

// Elements in breadth-first discovery order.
struct Closure {
  std::vector<std::vector<int>> elements;
  std::unordered_map<std::vector<int>, std::size_t, PermHash> index;
};

Closure close(const PermutationSet& perms, std::size_t max_size) {
  perms.validate();
  Closure cl;
  std::vector<int> id(static_cast<std::size_t>(perms.degree));
  std::iota(id.begin(), id.end(), 0);
  cl.index.emplace(id, 0);
  cl.elements.push_back(std::move(id));
  for (std::size_t h = 0; h < cl.elements.size(); ++h) {
    for (const auto& s : perms.generators) {
      std::vector<int> prod(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) prod[i] = s[cl.elements[h][i]];
      if (cl.index.contains(prod)) continue;
      if (cl.elements.size() >= max_size)
        throw BudgetExceeded("permutation closure exceeded " + std::to_string(max_size) +
                             " elements");
      cl.index.emplace(prod, cl.elements.size());
      cl.elements.push_back(std::move(prod));
    }
  }
  return cl;
}

}  // namespace

Int perm_order(const PermutationSet& perms, std::size_t max_size) {
  return static_cast<Int>(close(perms, max_size).elements.size());
}

Fingerprint fingerprint(const Presentation& pres, std::size_t max_cosets) {
  Fingerprint fp;
  fp.order = coset_enumerate(pres, max_cosets);
  fp.abelian = abelianization(pres);
  Int abelian_order = 1;
  for (Int d : fp.abelian.torsion) abelian_order *= d;
  fp.is_abelian = fp.abelian.free_rank == 0 && abelian_order == fp.order;
  return fp;
}

Fingerprint fingerprint(const PermutationSet& perms, std::size_t max_size) {
  const Closure cl = close(perms, max_size);
  const std::size_t k = perms.generators.size();
  const std::size_t deg = static_cast<std::size_t>(perms.degree);

  // Exponent-sum vector of the BFS-tree word reaching each element.
  std::vector<std::vector<Int>> tree(cl.elements.size());
  tree[0].assign(k, 0);
  IntMatrix rows;
  for (std::size_t h = 0; h < cl.elements.size(); ++h) {
    for (std::size_t s = 0; s < k; ++s) {
      std::vector<int> prod(deg);
      for (std::size_t i = 0; i < deg; ++i) prod[i] = perms.generators[s][cl.elements[h][i]];
      const std::size_t target = cl.index.at(prod);
      std::vector<Int> word = tree[h];
      word[s] += 1;
      if (tree[target].empty()) {
        tree[target] = word;
        continue;
      }
      std::vector<Int> row(k);
      bool zero = true;
      for (std::size_t j = 0; j < k; ++j) {
        row[j] = word[j] - tree[target][j];
        zero &= row[j] == 0;
      }
      if (!zero) rows.push_back(std::move(row));
    }
  }

  Fingerprint fp;
  fp.order = static_cast<Int>(cl.elements.size());
  fp.abelian = abelian_invariants(rows, k);
  fp.is_abelian = true;
  for (std::size_t a = 0; a < k && fp.is_abelian; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      const auto& x = perms.generators[a];
      const auto& y = perms.generators[b];
      bool commute = true;
      for (std::size_t i = 0; i < deg; ++i) commute &= x[y[i]] == y[x[i]];
      if (!commute) {
        fp.is_abelian = false;
        break;
      }
    }
  return fp;
}

}  // namespace cyclicaut::grouptheory
