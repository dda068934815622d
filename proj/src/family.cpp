#include "isolation/family.hpp"

#include <stdexcept>

namespace isolation {
namespace {

FamilySpec make(FamilyKind kind, int k) {
  if (k < 1) throw std::invalid_argument("family parameter k must be >= 1, got " + std::to_string(k));
  return FamilySpec{kind, k};
}

}  // namespace

FamilySpec FamilySpec::clique(int k) { return make(FamilyKind::Clique, k); }
FamilySpec FamilySpec::min_regular(int k) { return make(FamilyKind::MinRegular, k); }
FamilySpec FamilySpec::chromatic_at_least(int k) { return make(FamilyKind::ChromaticAtLeast, k); }
FamilySpec FamilySpec::regular_or_chromatic(int k) { return make(FamilyKind::RegularOrChromatic, k); }
FamilySpec FamilySpec::cycles() { return FamilySpec{FamilyKind::Cycles, 3}; }

FamilySpec FamilySpec::indexed(int l, int k) {
  switch (l) {
    case 1: return min_regular(k);
    case 2: return chromatic_at_least(k);
    case 3: return regular_or_chromatic(k);
    default: throw std::invalid_argument("family index must be 1, 2 or 3, got " + std::to_string(l));
  }
}

std::string FamilySpec::name() const {
  if (kind == FamilyKind::Cycles) return "cycles";
  return std::string(family_keyword(kind)) + "(" + std::to_string(k) + ")";
}

std::string_view family_keyword(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Clique: return "clique";
    case FamilyKind::MinRegular: return "minreg";
    case FamilyKind::ChromaticAtLeast: return "chrom";
    case FamilyKind::RegularOrChromatic: return "union";
    case FamilyKind::Cycles: return "cycles";
  }
  return "?";
}

std::optional<FamilyKind> parse_family_keyword(std::string_view word) {
  for (auto kind : {FamilyKind::Clique, FamilyKind::MinRegular, FamilyKind::ChromaticAtLeast,
                    FamilyKind::RegularOrChromatic, FamilyKind::Cycles}) {
    if (family_keyword(kind) == word) return kind;
  }
  return std::nullopt;
}

}  // namespace isolation
