#ifndef FINLOC_DEMORGAN_HPP
#define FINLOC_DEMORGAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "finloc/frame.hpp"
#include "finloc/sublocale.hpp"

namespace finloc {

/// B_L = {a | a = a**}, cross-checked against {a* | a ∈ L}. Throws
/// IntegrityError if the two sets differ or the result is not a dense
/// sublocale.
Sublocale booleanization(const Frame &frame);

/// B_L as the intersection of all dense open sublocales, cross-checked
/// against ⋂_a o(a ∨ a*). Throws IntegrityError on disagreement.
Sublocale booleanization_via_dense_opens(const Frame &frame);

/// M_L = ⋂_a o(a* ∨ a**), the largest dense extremally disconnected
/// sublocale. Only the distinct generators a* ∨ a** are intersected.
/// Throws IntegrityError if the result is not dense, fitted and ED.
Sublocale demorganization(const Frame &frame);

/// a* ∨ a** = 1 for all a, cross-checked against "the closure of every open
/// sublocale is open". Throws IntegrityError on disagreement.
bool is_extremally_disconnected(const Frame &frame);
/// First element with a* ∨ a** != 1, if any.
std::optional<ElementId> extremal_disconnectedness_witness(const Frame &frame);

/// a ∨ a* = 1 for all a.
bool is_boolean(const Frame &frame);

// Predicates on sublocales, evaluated on the induced frame.
bool is_extremally_disconnected(const Sublocale &s);
bool is_boolean(const Sublocale &s);

/// Least dense sublocale found by exhaustive enumeration. Throws
/// OracleFailure if there is no unique minimum.
Sublocale oracle_least_dense(const Frame &frame,
                             const EnumerationLimits &limits = {});
/// Largest dense extremally disconnected sublocale by enumeration.
Sublocale oracle_largest_dense_ed(const Frame &frame,
                                  const EnumerationLimits &limits = {});
/// The only sublocale that is dense and Boolean; also required to equal
/// booleanization(frame).
Sublocale oracle_unique_boolean_dense(const Frame &frame,
                                      const EnumerationLimits &limits = {});

struct NearlyOpenReport {
  bool passed = true;
  // Elements a with ν(a*) != ν(a)* in the sublocale.
  std::vector<ElementId> witnesses;
};

/// Check that the surjection onto a dense sublocale commutes with
/// pseudocomplements. Throws NotDense when `s` is not dense.
NearlyOpenReport verify_nearly_open(const Frame &frame, const Sublocale &s);

} // namespace finloc

#endif
