#ifndef FINLOC_SUBLOCALE_HPP
#define FINLOC_SUBLOCALE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "finloc/frame.hpp"

namespace finloc {

/**
 * A sublocale of a finite frame, stored as its set of members: a subset
 * containing top, closed under meets, and closed under a → (-) for every
 * ambient a.
 *
 * Equality and inclusion are only defined between sublocales of the same
 * Frame instance; anything else throws FrameMismatch.
 */
class Sublocale {
public:
  /// Validates the closure conditions; throws NotASublocale otherwise.
  static Sublocale from_members(const Frame &frame, ElementSet members);
  /// For sets already known to be sublocales (results of the operations in
  /// this header).
  static Sublocale assume_valid(const Frame &frame, ElementSet members);

  const Frame &frame() const { return frame_; }
  const ElementSet &members() const { return members_; }
  std::size_t size() const { return members_.count(); }
  bool contains(ElementId a) const;

  bool is_subset_of(const Sublocale &other) const;
  bool operator==(const Sublocale &other) const;

  /// Member labels in element order.
  std::vector<std::string> labels() const;

private:
  Sublocale(Frame frame, ElementSet members)
      : frame_(std::move(frame)), members_(std::move(members)) {}
  void require_same_frame(const Sublocale &other) const;

  Frame frame_;
  ElementSet members_;
};

/// The frame surjection onto a sublocale, seen as a map L → L:
/// a ↦ the least member above a.
struct Nucleus {
  Frame frame;
  std::vector<ElementId> table;

  ElementId operator()(ElementId a) const { return table.at(a.value()); }
};

/// A sublocale viewed as a frame in its own right. Local element i is the
/// i-th member in ambient element order.
struct InducedFrame {
  Frame frame;
  std::vector<ElementId> to_ambient;
  std::vector<std::optional<ElementId>> from_ambient;

  ElementId ambient(ElementId local) const { return to_ambient.at(local.value()); }
  /// Throws InvalidElement when `a` is not a member.
  ElementId local(ElementId a) const;
};

bool is_sublocale(const Frame &frame, const ElementSet &s);

/// The whole frame, the greatest sublocale.
Sublocale whole_sublocale(const Frame &frame);
/// {1}, the least sublocale.
Sublocale void_sublocale(const Frame &frame);

/// o(a) = {a → b | b ∈ L}.
Sublocale open_sublocale(const Frame &frame, ElementId a);
/// c(a) = ↑a.
Sublocale closed_sublocale(const Frame &frame, ElementId a);

/// Smallest closed sublocale containing s: c(⋀s).
Sublocale closure(const Sublocale &s);
/// ⋀s = 0.
bool is_dense(const Sublocale &s);

/// Intersection of all open sublocales containing s.
Sublocale fitting(const Sublocale &s);
bool is_fitted(const Sublocale &s);

/// Meet in S(L); the empty list gives the whole frame.
Sublocale intersect_sublocales(const Frame &frame,
                               std::span<const Sublocale> list);
/// Join in S(L): all meets of subsets of the union. Empty list gives {1}.
Sublocale join_sublocales(const Frame &frame, std::span<const Sublocale> list);
/// Frame taken from the list; throws EmptyList when it is empty.
Sublocale intersect_sublocales(std::span<const Sublocale> list);
Sublocale join_sublocales(std::span<const Sublocale> list);

Nucleus nucleus_of(const Sublocale &s);
InducedFrame induced_frame(const Sublocale &s);

struct EnumerationLimits {
  std::size_t max_elements = 16;
};

/// Every sublocale of the frame, sorted by member bitset value. Throws
/// TooLarge above limits.max_elements.
std::vector<Sublocale> enumerate_sublocales(const Frame &frame,
                                            const EnumerationLimits &limits = {});

/// Points: p != 1 with a ∧ b <= p implying a <= p or b <= p.
ElementSet prime_elements(const Frame &frame);
/// Whether b(p) = {1, p} is an open sublocale. Throws NotPrime.
bool is_isolated_point(const Frame &frame, ElementId p);

struct CoframeLawReport {
  bool passed = true;
  bool exhaustive = false;
  std::size_t sublocale_count = 0;
  std::size_t checks = 0;
  std::string witness; // empty on success
};

/// Check S ∨ ⋂T_i = ⋂(S ∨ T_i) in S(L). Exhaustive over all (S, T1, T2) when
/// the frame has at most `exhaustive_limit` sublocales, otherwise `samples`
/// seeded draws of S and a family of one to three T's.
CoframeLawReport verify_coframe_law(const Frame &frame, std::size_t samples,
                                    std::uint64_t seed,
                                    std::size_t exhaustive_limit = 200,
                                    const EnumerationLimits &limits = {});

} // namespace finloc

#endif
