#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace isolation {

enum class FamilyKind {
  Clique,              // {K_k}
  MinRegular,          // regular graphs of degree >= k-1
  ChromaticAtLeast,    // graphs with chromatic number >= k
  RegularOrChromatic,  // union of the two above
  Cycles,              // all cycles
};

/// Symbolic graph family. `k` is ignored for Cycles.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Clique;
  int k = 1;

  static FamilySpec clique(int k);
  static FamilySpec min_regular(int k);
  static FamilySpec chromatic_at_least(int k);
  static FamilySpec regular_or_chromatic(int k);
  static FamilySpec cycles();

  /// F_{l,k} for l in {1, 2, 3}.
  static FamilySpec indexed(int l, int k);

  std::string name() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::string_view family_keyword(FamilyKind kind);
/// Accepts the CLI keywords clique, minreg, chrom, union, cycles.
std::optional<FamilyKind> parse_family_keyword(std::string_view word);

}  // namespace isolation
