#pragma once

// Finitely presented and permutation groups, just enough to certify group
// orders and abelian invariants: HLT coset enumeration over the trivial
// subgroup, integer Smith normal form, and breadth-first permutation closure.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cyclicaut/numtheory.hpp"

namespace cyclicaut::grouptheory {

/// Signed 1-based generator indices; -i is the inverse of generator i.
using Word = std::vector<int>;

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;
inline constexpr std::size_t kDefaultMaxSize = 10'000'000;

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  /// Generators named a, b, c, ... (or g1, g2, ... past 26).
  static Presentation with_count(int generator_count, std::vector<Word> relators);

  int generator_count() const { return static_cast<int>(generators.size()); }

  /// Throws std::domain_error on an empty relator or an index outside
  /// [1, generator_count].
  void validate() const;

  /// "<a,b | a^2, b^3, (a*b)^7>" style; round-trips through
  /// parse_presentation.
  std::string to_string() const;

  bool operator==(const Presentation&) const = default;
};

/// Text form `<a,b | a^2, b^3, (a*b)^7, [a,b], a*b = b*a>`.  Factors are
/// generator names, parenthesized words and commutators, optionally raised
/// to an integer power (negative allowed); `*` or whitespace concatenates;
/// `1` is the empty word.
Presentation parse_presentation(std::string_view text);

Word inverse(const Word& w);
Word power(const Word& w, Int e);
Word commutator(const Word& x, const Word& y);
Word concat(const Word& x, const Word& y);
/// Free reduction followed by cyclic reduction.
Word cyclically_reduce(Word w);

/// Order of the presented group.  Throws BudgetExceeded when the coset
/// table cannot be kept within `max_cosets` rows.
Int coset_enumerate(const Presentation& pres, std::size_t max_cosets = kDefaultMaxCosets);

struct AbelianInvariants {
  /// Torsion invariant factors, each >= 2 and dividing the next.
  std::vector<Int> torsion;
  Int free_rank = 0;

  /// "Z2+Z4", "Z^2+Z3", "1" for the trivial group.
  std::string to_string() const;
  bool operator==(const AbelianInvariants&) const = default;
};

using IntMatrix = std::vector<std::vector<Int>>;

/// Diagonal of the Smith normal form (absolute values, divisibility chain),
/// of length min(rows, cols).
std::vector<Int> smith_diagonal(IntMatrix matrix, std::size_t cols);

/// Invariants of the abelian group Z^cols / (row span of `matrix`).
AbelianInvariants abelian_invariants(const IntMatrix& matrix, std::size_t cols);

AbelianInvariants abelianization(const Presentation& pres);

/// Permutations of {0, ..., degree-1}, stored as image lists.
struct PermutationSet {
  int degree = 0;
  std::vector<std::vector<int>> generators;

  /// Parses 1-based cycle notation, generators separated by ';' or
  /// newlines: "(1,2,3)(4,5); (1,4)".  The degree is the largest point
  /// mentioned unless `degree` is larger.
  static PermutationSet from_cycles(std::string_view text, int degree = 0);

  void validate() const;
};

Int perm_order(const PermutationSet& perms, std::size_t max_size = kDefaultMaxSize);

struct Fingerprint {
  Int order = 0;
  AbelianInvariants abelian;
  bool is_abelian = false;
};

Fingerprint fingerprint(const Presentation& pres, std::size_t max_cosets = kDefaultMaxCosets);

/// Abelian invariants come from the presentation read off the Cayley
/// graph: one relator w_g s w_{gs}^{-1} per element g and generator s.
Fingerprint fingerprint(const PermutationSet& perms, std::size_t max_size = kDefaultMaxSize);

}  // namespace cyclicaut::grouptheory
