#pragma once

// Genus-0 signatures that admit a finite-index Fuchsian extension, the lcm
// test for surface-kernel maps onto Z_n, and the extension criteria for
// cyclic actions.

#include <optional>
#include <string>
#include <vector>

#include "cyclicaut/curve.hpp"

namespace cyclicaut::fuchsian {

using curve::Signature;

/// One row of the extension table.  Patterns are written over the
/// parameters n and m, e.g. "(n,4n,4n)"; guards are the side
/// conditions.
struct GsRow {
  std::string id;
  std::string inner;
  std::string outer;
  Int index = 1;
  bool normal = false;
  Int min_n = 0;
  Int min_n_plus_m = 0;
};

/// The full table in row order: 1, 2, 3, A, B, 4, ..., 14.
const std::vector<GsRow>& gs_table();
const GsRow& gs_row(std::string_view id);

struct Extension {
  const GsRow* row = nullptr;
  Signature outer;
  Int index = 1;
};

/// n equals the lcm of all periods and the lcm of every subset obtained by
/// dropping one period.
bool harvey_admissible(const Signature& sig, Int n);

/// Every table row whose inner pattern matches `sig`, deduplicated by
/// (row, outer signature), in table order.
std::vector<Extension> gs_extensions(const Signature& sig);

bool is_finitely_maximal(const Signature& sig);

struct ChainStep {
  Signature inner;
  Signature outer;
  std::string row;
  Int index = 1;
};

struct Chain {
  std::vector<ChainStep> steps;
  /// Single row from the start signature with the same final outer
  /// signature and total index, when one exists.
  std::optional<std::string> equivalent_row;
  /// Position in the known list of two-step composites (1..8).
  std::optional<int> listed_item;
  /// Composite known not to be realized by a cyclic action.
  bool dead = false;

  Int index() const;
  const Signature& start() const { return steps.front().inner; }
  const Signature& finish() const { return steps.back().outer; }
};

/// All composites of two or more table rows starting at `sig`.
std::vector<Chain> extension_chains(const Signature& sig);

/// A surface-kernel map from a genus-0 group onto Z_n sending the i-th
/// elliptic generator to T^{images[i]}.  `periods` keeps the caller's order,
/// paired with `images`.
struct SkepSpec {
  Int n = 2;
  std::vector<Int> periods;
  std::vector<Int> images;

  /// Periods n / gcd(n, k) for the given exponents.
  static SkepSpec from_images(Int n, std::vector<Int> images);
  static SkepSpec from_cover(const curve::CyclicCover& cover);

  /// Throws std::domain_error when an image has the wrong order or the
  /// images do not sum to 0 mod n.
  void validate() const;
};

struct CbMatch {
  int case_id = 0;
  Signature outer;
  Int multiplier = 1;
  std::string note;
};

/// Every extension case that applies; empty means the Z_n action does not
/// extend.  Requires 3 or 4 periods.
std::vector<CbMatch> cb_extendable(const SkepSpec& skep);

}  // namespace cyclicaut::fuchsian
