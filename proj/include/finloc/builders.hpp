#ifndef FINLOC_BUILDERS_HPP
#define FINLOC_BUILDERS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "finloc/frame.hpp"

namespace finloc {

/// A finite topology: named points and the list of open sets.
struct TopologySpec {
  std::vector<std::string> points;
  std::vector<std::vector<std::string>> opens;

  bool operator==(const TopologySpec &) const = default;
};

/// A finite poset given by its cover (or any generating) pairs.
struct PosetSpec {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers; // (lower, upper)

  bool operator==(const PosetSpec &) const = default;
};

enum class StandardFamily { chain, boolean };

/// Validate a topology; throws NotATopology naming the failing condition.
void validate_topology(const TopologySpec &spec);

/// Frame of opens ordered by inclusion. Elements are sorted by (cardinality,
/// point-index order) and labelled in open-set notation, e.g. "{x,y}", "∅".
Frame from_topology(const TopologySpec &spec, const FrameLimits &limits = {});

/// Frame of down-closed subsets of a poset, labelled like from_topology.
Frame downset_frame(const PosetSpec &spec, const FrameLimits &limits = {});

/// Chain of n elements labelled "0".."n-1", or the Boolean algebra 2^n with
/// subset labels over points "1".."n".
Frame standard_frame(StandardFamily kind, std::size_t n,
                     const FrameLimits &limits = {});

/// Componentwise-ordered product; element (i, j) has index i*|G| + j and
/// label "(label_i,label_j)".
Frame product_frame(const Frame &f, const Frame &g,
                    const FrameLimits &limits = {});

inline constexpr std::size_t kMaxRandomPoints = 6;
inline constexpr std::size_t kMaxEnumeratedPoints = 4;

/// Topology generated by a random subbasis of n subsets; deterministic per
/// seed, not uniformly distributed. Points are named "p1".."pn".
TopologySpec random_topology(std::size_t n_points, std::uint64_t seed);

/// Every topology on n labelled points ("p1".."pn"), ordered by the bitmask
/// of their family of opens. Throws TooLarge for n > 4.
std::vector<TopologySpec> enumerate_topologies(std::size_t n_points);
/// Streaming form; returns the number of topologies visited.
std::size_t for_each_topology(std::size_t n_points,
                              const std::function<void(TopologySpec)> &visit);

/// Named regression fixtures.
namespace fixtures {
/// Sierpiński space: the 3-chain 0 < m < 1.
TopologySpec c3_topology();
/// Discrete two-point space: the four-element Boolean algebra.
TopologySpec b4_topology();
/// X = {x,y,z} with opens ∅,{x},{y},{x,y},X: five elements, not
/// extremally disconnected.
TopologySpec f5_topology();

Frame c3();
Frame b4();
Frame f5();
} // namespace fixtures

} // namespace finloc

#endif
