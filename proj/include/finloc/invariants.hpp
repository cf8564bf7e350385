#ifndef FINLOC_INVARIANTS_HPP
#define FINLOC_INVARIANTS_HPP

#include <cstdint>
#include <vector>

#include "finloc/frame.hpp"
#include "finloc/report.hpp"
#include "finloc/sublocale.hpp"

namespace finloc {

struct InvariantOptions {
  std::uint64_t seed = 0;
  // Frames with more elements skip the checks that enumerate S(L).
  EnumerationLimits limits;
  std::size_t coframe_samples = 100;
};

/// Every property the library can check on one frame: Heyting laws, the
/// adjunction defining →, sublocale constructions, nucleus identities,
/// Booleanization/DeMorganization structure, nearly-open maps on dense
/// sublocales and the coframe law of S(L). Empty result means all hold.
std::vector<LawFailure> check_invariants(const Frame &frame,
                                         const InvariantOptions &options = {});

} // namespace finloc

#endif
