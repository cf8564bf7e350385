#ifndef FINLOC_HEYTING_LAWS_HPP
#define FINLOC_HEYTING_LAWS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "finloc/frame.hpp"

namespace finloc {

/// Families for the two infinitary laws are exhausted up to this frame size.
inline constexpr std::size_t kExhaustiveFamilyLimit = 12;
/// Otherwise this many seeded random families are drawn per law.
inline constexpr std::size_t kSampledFamilies = 1000;

struct LawCheck {
  std::string law; // "H1" .. "H12"
  std::string statement;
  bool passed = true;
  // Elements of the first counterexample, in the order the statement names
  // them (for H11/H12: the family members followed by b).
  std::vector<ElementId> witness;
  std::string detail;
};

struct HeytingLawReport {
  std::vector<LawCheck> laws;

  bool all_passed() const;
  std::vector<LawCheck> failures() const;
};

/// Check the twelve standard implication identities on `frame`. Binary and
/// ternary laws run over all tuples; the family laws run over all subsets
/// when size() <= 12 and over kSampledFamilies random subsets otherwise.
HeytingLawReport verify_heyting_laws(const Frame &frame, std::uint64_t seed = 0);

} // namespace finloc

#endif
