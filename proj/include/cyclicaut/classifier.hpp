#pragma once

// Full automorphism groups of cyclic covers: belyi triples, prime-degree
// (Lefschetz) covers, Fermat curves, plus the four-point dihedral test and
// the many-branch-point normality test.

#include <optional>
#include <string>
#include <vector>

#include "cyclicaut/curve.hpp"
#include "cyclicaut/fuchsian.hpp"
#include "cyclicaut/grouptheory.hpp"

namespace cyclicaut::classifier {

using curve::Signature;
using curve::Triple;

enum class StructureKind {
  Cyclic,              // params {m}
  CyclicSemidirectC2,  // params {n, twist}
  CyclicSemidirectC3,  // params {n, twist}
  CentralExtension,    // params {center}, quotient
  DirectSumSemidirect, // params {p, q}, quotient
  Named,               // quotient holds the name
  Dihedral,            // params {order}
  Abelian,             // params = invariant factors
  NonsplitExtension,   // params {n}: (Z_n x| Z2).Z2
};

std::string to_string(StructureKind kind);
StructureKind structure_kind_from_string(std::string_view name);

struct StructureTag {
  StructureKind kind = StructureKind::Cyclic;
  std::vector<Int> params;
  std::string quotient;

  static StructureTag cyclic(Int m) { return {StructureKind::Cyclic, {m}, {}}; }
  static StructureTag named(std::string name) { return {StructureKind::Named, {}, std::move(name)}; }

  /// ASCII rendering, e.g. "Z18", "Z4+Z5", "(central Z4).A4", "PSL(2,7)".
  std::string display() const;
  bool operator==(const StructureTag&) const = default;
};

struct GroupDescriptor {
  Int order = 1;
  StructureTag structure;
  std::optional<grouptheory::Presentation> presentation;
};

struct ClassificationReport {
  curve::CyclicCover cover;
  std::optional<Triple> canonical_triple;
  Int genus = 0;
  Signature signature;
  /// "A.1" ... "E.3", "DEFAULT", "LEFSCHETZ.1" ... "LEFSCHETZ.4",
  /// "FERMAT.1" ... "FERMAT.8".
  std::string row;
  GroupDescriptor group;
  /// Order of the group uniformized by the first signature in the chain.
  Int base_order = 1;
  std::vector<fuchsian::ChainStep> chain;
  std::vector<std::string> notes;

  Int chain_index() const;
};

/// Requires n >= 4, 1 <= a,b,c <= n-1, a+b+c = 0 (mod n), gcd(n,a,b,c) = 1.
ClassificationReport classify_belyi(Int n, Int a, Int b, Int c);

/// Representative in [1, (p-1)/2) of the class of y^p = x^a (x+1).
Int lefschetz_canonical(Int p, Int a);

bool lefschetz_isomorphic(Int p, Int a, Int b);

/// p prime >= 5, 1 <= a <= p-2.
ClassificationReport classify_lefschetz(Int p, Int a);

/// y^n + x^d = 1 with 2 <= d <= n and genus >= 2.
ClassificationReport classify_fermat(Int n, Int d);

/// The four exponents pair up with equal gcd against n.
bool dihedral_four_branch(Int n, Int k1, Int k2, Int k3, Int k4);

/// True when r > 2p: the deck group is then normal with polyhedral quotient.
bool stability_normal(Int p, Int r);

std::optional<grouptheory::Presentation> presentation_for(const ClassificationReport& report);

}  // namespace cyclicaut::classifier
