#ifndef FINLOC_FRAME_HPP
#define FINLOC_FRAME_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "finloc/bitset.hpp"

namespace finloc {

/// Index of an element inside one particular Frame.
struct ElementId {
  std::uint32_t index = 0;

  constexpr ElementId() = default;
  constexpr explicit ElementId(std::size_t i)
      : index(static_cast<std::uint32_t>(i)) {}

  constexpr std::size_t value() const { return index; }
  auto operator<=>(const ElementId &) const = default;
};

/// Subset of a frame's elements, indexed by ElementId::index.
using ElementSet = Bitset;

struct FrameLimits {
  std::size_t max_elements = std::size_t{1} << 16;
};

/**
 * A finite frame: a finite distributive lattice, which is automatically a
 * complete Heyting algebra. All binary operations are precomputed into
 * size*size tables at construction.
 *
 * Frame is an immutable handle; copies share the same tables. Two handles
 * denote "the same frame" only if they come from the same construction
 * (same_as), which is how sublocale operations detect mixed-up inputs.
 */
class Frame {
public:
  std::size_t size() const;
  ElementId bottom() const;
  ElementId top() const;

  /// Range-checked conversion of a raw index.
  ElementId at(std::size_t index) const;
  std::vector<ElementId> elements() const;

  bool leq(ElementId a, ElementId b) const;
  ElementId meet(ElementId a, ElementId b) const;
  ElementId join(ElementId a, ElementId b) const;
  /// a → b, the largest c with a ∧ c <= b.
  ElementId heyting(ElementId a, ElementId b) const;
  /// a* = a → 0.
  ElementId pseudocomplement(ElementId a) const;
  bool is_dense_element(ElementId a) const;

  /// Infimum of a set; the empty set gives top.
  ElementId big_meet(const ElementSet &s) const;
  /// Supremum of a set; the empty set gives bottom.
  ElementId big_join(const ElementSet &s) const;

  const ElementSet &up_set(ElementId a) const;
  const ElementSet &down_set(ElementId a) const;
  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet full_set() const { return ElementSet::full(size()); }
  ElementSet make_set(std::initializer_list<ElementId> ids) const;

  const std::string &label(ElementId a) const;
  const std::vector<std::string> &labels() const;
  std::optional<ElementId> find(std::string_view label) const;
  /// Lookup by label; throws InvalidElement when absent.
  ElementId element(std::string_view label) const;

  bool same_as(const Frame &other) const { return data_ == other.data_; }

  /// Copy of this frame whose implication table is replaced verbatim.
  /// Nothing is validated: this exists to inject faults and check that the
  /// law verifier catches them.
  Frame with_heyting_table_unchecked(std::vector<ElementId> table) const;

private:
  struct Data;
  explicit Frame(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  void check(ElementId a) const;

  std::shared_ptr<const Data> data_;

  friend Frame build_frame(std::size_t, const std::vector<ElementSet> &,
                           std::vector<std::string>, const FrameLimits &);
};

using OrderPair = std::pair<std::size_t, std::size_t>;

/**
 * Build a frame from `size` elements and a relation given as (lower, upper)
 * pairs. The reflexive-transitive closure is taken first, so cover pairs are
 * enough. Validation order: antisymmetry, lattice, distributivity.
 *
 * Missing labels default to the element index.
 */
Frame build_frame(std::size_t size, std::span<const OrderPair> pairs,
                  std::vector<std::string> labels = {},
                  const FrameLimits &limits = {});

/// Same, from a relation matrix given as one "up-row" per element
/// (row[i] holds every j with i <= j, not necessarily closed).
Frame build_frame(std::size_t size, const std::vector<ElementSet> &up_rows,
                  std::vector<std::string> labels = {},
                  const FrameLimits &limits = {});

} // namespace finloc

#endif
