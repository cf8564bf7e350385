#ifndef FINLOC_FRAME_SPEC_HPP
#define FINLOC_FRAME_SPEC_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "finloc/builders.hpp"
#include "finloc/frame.hpp"

namespace finloc {

struct FrameSpec;

/// Explicit lattice: element labels and order pairs between labels.
struct LatticeSpec {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> leq;
  // Optional implication table (row a, column b holds the index of a → b)
  // used verbatim instead of the computed one. Only meant for fault
  // injection; verify reports the resulting law violations.
  std::optional<std::vector<std::vector<std::size_t>>> heyting;

  bool operator==(const LatticeSpec &) const = default;
};

struct StandardSpec {
  StandardFamily family = StandardFamily::chain;
  std::size_t n = 1;

  bool operator==(const StandardSpec &) const = default;
};

struct ProductSpec {
  std::shared_ptr<const FrameSpec> left, right;

  bool operator==(const ProductSpec &o) const;
};

/// Serialized description of a frame:
///
///   {"kind": "topology" | "poset" | "lattice" | "standard" | "product",
///    "name": optional string,
///    "payload": {...}}
struct FrameSpec {
  std::variant<TopologySpec, PosetSpec, LatticeSpec, StandardSpec, ProductSpec>
      payload;
  std::optional<std::string> name;

  std::string kind() const;
  bool operator==(const FrameSpec &) const = default;
};

/// Parse and validate (by building the frame). Errors: MalformedJson with
/// line/column or field path, UnknownKind, and the builders' own errors.
FrameSpec parse_frame_spec(std::string_view text, const FrameLimits &limits = {});
/// Parse without building the frame.
FrameSpec parse_frame_spec_unvalidated(std::string_view text);

/// Compact canonical JSON.
std::string serialize_frame_spec(const FrameSpec &spec);

Frame build_frame(const FrameSpec &spec, const FrameLimits &limits = {});

/// Name from the spec, or "<kind>" when unnamed.
std::string display_name(const FrameSpec &spec);

} // namespace finloc

#endif
