#include "finloc/builders.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "finloc/errors.hpp"

namespace finloc {

namespace {

using PointSet = Bitset;

std::map<std::string, std::size_t, std::less<>>
index_names(const std::vector<std::string> &names, const char *what) {
  std::map<std::string, std::size_t, std::less<>> idx;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!idx.emplace(names[i], i).second)
      throw InputError(std::string("duplicate ") + what + " name '" + names[i] +
                       "'");
  return idx;
}

std::string set_label(const PointSet &s, const std::vector<std::string> &names) {
  if (s.none())
    return "∅";
  std::string out = "{";
  bool first = true;
  for (auto i : s) {
    if (!first)
      out += ',';
    out += names[i];
    first = false;
  }
  return out + "}";
}

// Cardinality first, then lexicographic on the ascending member lists.
bool set_order(const PointSet &a, const PointSet &b) {
  auto ca = a.count(), cb = b.count();
  if (ca != cb)
    return ca < cb;
  auto ma = a.members(), mb = b.members();
  return ma < mb;
}

// Frame of a family of subsets ordered by inclusion.
Frame inclusion_frame(std::vector<PointSet> sets,
                      const std::vector<std::string> &point_names,
                      const FrameLimits &limits) {
  std::sort(sets.begin(), sets.end(), set_order);
  const auto n = sets.size();
  if (n > limits.max_elements)
    throw TooLarge("frame of " + std::to_string(n) +
                   " elements exceeds the cap of " +
                   std::to_string(limits.max_elements));
  std::vector<ElementSet> rows(n, ElementSet(n));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(set_label(sets[i], point_names));
    for (std::size_t j = 0; j < n; ++j)
      if (sets[i].is_subset_of(sets[j]))
        rows[i].set(j);
  }
  return build_frame(n, rows, std::move(labels), limits);
}

std::vector<PointSet> topology_sets(const TopologySpec &spec) {
  auto idx = index_names(spec.points, "point");
  const auto n = spec.points.size();
  std::set<PointSet> uniq;
  for (std::size_t k = 0; k < spec.opens.size(); ++k) {
    PointSet s(n);
    for (const auto &p : spec.opens[k]) {
      auto it = idx.find(p);
      if (it == idx.end())
        throw NotATopology("open #" + std::to_string(k) +
                           " mentions unknown point '" + p + "'");
      s.set(it->second);
    }
    uniq.insert(std::move(s));
  }
  std::vector<PointSet> sets(uniq.begin(), uniq.end());

  if (!uniq.count(PointSet(n)))
    throw NotATopology("the empty set is not listed as open");
  if (!uniq.count(PointSet::full(n)))
    throw NotATopology("the whole point set is not listed as open");
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!uniq.count(sets[i] | sets[j]))
        throw NotATopology("union of " + set_label(sets[i], spec.points) +
                           " and " + set_label(sets[j], spec.points) +
                           " is not open");
      if (!uniq.count(sets[i] & sets[j]))
        throw NotATopology("intersection of " +
                           set_label(sets[i], spec.points) + " and " +
                           set_label(sets[j], spec.points) + " is not open");
    }
  return sets;
}

std::vector<std::string> numbered_points(std::size_t n) {
  std::vector<std::string> pts;
  for (std::size_t i = 1; i <= n; ++i)
    pts.push_back("p" + std::to_string(i));
  return pts;
}

TopologySpec topology_from_masks(std::size_t n_points,
                                 const std::vector<std::uint64_t> &masks) {
  TopologySpec t;
  t.points = numbered_points(n_points);
  for (auto m : masks) {
    std::vector<std::string> open;
    for (std::size_t i = 0; i < n_points; ++i)
      if ((m >> i) & 1u)
        open.push_back(t.points[i]);
    t.opens.push_back(std::move(open));
  }
  return t;
}

} // namespace

void validate_topology(const TopologySpec &spec) { (void)topology_sets(spec); }

Frame from_topology(const TopologySpec &spec, const FrameLimits &limits) {
  return inclusion_frame(topology_sets(spec), spec.points, limits);
}

Frame downset_frame(const PosetSpec &spec, const FrameLimits &limits) {
  auto idx = index_names(spec.elements, "poset element");
  const auto n = spec.elements.size();
  std::vector<PointSet> below(n, PointSet(n)); // strict, then closed
  for (const auto &[lo, hi] : spec.covers) {
    auto l = idx.find(lo), h = idx.find(hi);
    if (l == idx.end() || h == idx.end())
      throw InvalidElement("cover (" + lo + ", " + hi +
                           ") mentions an unknown element");
    if (l->second == h->second)
      throw CyclicPoset("element '" + lo + "' covers itself");
    below[h->second].set(l->second);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (below[i].test(k))
        below[i] |= below[k];
  for (std::size_t i = 0; i < n; ++i)
    if (below[i].test(i))
      throw CyclicPoset("cover relation has a cycle through '" +
                        spec.elements[i] + "'");

  // Linear extension: fewer strict predecessors first.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i)
    order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return below[a].count() < below[b].count();
  });

  // Walk the extension deciding membership; an element may join only once
  // everything below it already has.
  std::vector<PointSet> downsets;
  PointSet cur(n);
  auto rec = [&](auto &&self, std::size_t k) -> void {
    if (k == n) {
      if (downsets.size() >= limits.max_elements)
        throw TooLarge("downset frame exceeds the cap of " +
                       std::to_string(limits.max_elements) + " elements");
      downsets.push_back(cur);
      return;
    }
    self(self, k + 1);
    auto x = order[k];
    if (below[x].is_subset_of(cur)) {
      cur.set(x);
      self(self, k + 1);
      cur.reset(x);
    }
  };
  rec(rec, 0);
  return inclusion_frame(std::move(downsets), spec.elements, limits);
}

Frame standard_frame(StandardFamily kind, std::size_t n,
                     const FrameLimits &limits) {
  if (kind == StandardFamily::chain) {
    if (n == 0)
      throw InputError("a chain needs at least one element");
    if (n > limits.max_elements)
      throw TooLarge("chain of " + std::to_string(n) +
                     " elements exceeds the cap of " +
                     std::to_string(limits.max_elements));
    std::vector<OrderPair> covers;
    for (std::size_t i = 0; i + 1 < n; ++i)
      covers.emplace_back(i, i + 1);
    return build_frame(n, covers, {}, limits);
  }

  if (n >= 63 || (std::size_t{1} << n) > limits.max_elements)
    throw TooLarge("Boolean algebra 2^" + std::to_string(n) +
                   " exceeds the cap of " + std::to_string(limits.max_elements) +
                   " elements");
  const std::size_t size = std::size_t{1} << n;
  std::vector<OrderPair> covers;
  std::vector<std::string> labels;
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i)
    names.push_back(std::to_string(i));
  for (std::size_t mask = 0; mask < size; ++mask) {
    labels.push_back(set_label(PointSet::from_mask(n, mask), names));
    for (std::size_t i = 0; i < n; ++i)
      if (!((mask >> i) & 1u))
        covers.emplace_back(mask, mask | (std::size_t{1} << i));
  }
  return build_frame(size, covers, std::move(labels), limits);
}

Frame product_frame(const Frame &f, const Frame &g, const FrameLimits &limits) {
  const auto nf = f.size(), ng = g.size();
  if (nf * ng > limits.max_elements)
    throw TooLarge("product of " + std::to_string(nf) + " and " +
                   std::to_string(ng) + " elements exceeds the cap of " +
                   std::to_string(limits.max_elements));
  const auto n = nf * ng;
  std::vector<ElementSet> rows(n, ElementSet(n));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < nf; ++i)
    for (std::size_t j = 0; j < ng; ++j) {
      labels.push_back("(" + f.label(ElementId(i)) + "," +
                       g.label(ElementId(j)) + ")");
      auto &row = rows[i * ng + j];
      for (auto k : f.up_set(ElementId(i)))
        for (auto l : g.up_set(ElementId(j)))
          row.set(k * ng + l);
    }
  return build_frame(n, rows, std::move(labels), limits);
}

TopologySpec random_topology(std::size_t n_points, std::uint64_t seed) {
  if (n_points > kMaxRandomPoints)
    throw TooLarge("random topologies are limited to " +
                   std::to_string(kMaxRandomPoints) + " points");
  const std::uint64_t full = (std::uint64_t{1} << n_points) - 1;
  std::mt19937_64 rng(seed);
  std::set<std::uint64_t> opens{0, full};
  for (std::size_t i = 0; i < n_points; ++i)
    opens.insert(rng() & full);
  // Close under pairwise union and intersection.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint64_t> cur(opens.begin(), opens.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        grew |= opens.insert(cur[i] | cur[j]).second;
        grew |= opens.insert(cur[i] & cur[j]).second;
      }
  }
  return topology_from_masks(n_points,
                             std::vector<std::uint64_t>(opens.begin(), opens.end()));
}

std::size_t for_each_topology(std::size_t n_points,
                              const std::function<void(TopologySpec)> &visit) {
  if (n_points > kMaxEnumeratedPoints)
    throw TooLarge("exhaustive topology enumeration is limited to " +
                   std::to_string(kMaxEnumeratedPoints) + " points");
  const std::uint64_t subsets = std::uint64_t{1} << n_points;
  const std::uint64_t full = subsets - 1;
  // A family is a bitmask over the 2^n subsets; ∅ and X are forced in.
  const std::uint64_t forced = (std::uint64_t{1} << 0) | (std::uint64_t{1} << full);
  std::size_t count = 0;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
    if ((fam & forced) != forced)
      continue;
    bool closed = true;
    for (std::uint64_t u = 0; u < subsets && closed; ++u) {
      if (!((fam >> u) & 1u))
        continue;
      for (std::uint64_t v = u + 1; v < subsets; ++v)
        if (((fam >> v) & 1u) &&
            (!((fam >> (u | v)) & 1u) || !((fam >> (u & v)) & 1u))) {
          closed = false;
          break;
        }
    }
    if (!closed)
      continue;
    std::vector<std::uint64_t> masks;
    for (std::uint64_t u = 0; u < subsets; ++u)
      if ((fam >> u) & 1u)
        masks.push_back(u);
    ++count;
    visit(topology_from_masks(n_points, masks));
  }
  return count;
}

std::vector<TopologySpec> enumerate_topologies(std::size_t n_points) {
  std::vector<TopologySpec> out;
  for_each_topology(n_points, [&](TopologySpec t) { out.push_back(std::move(t)); });
  return out;
}

namespace fixtures {

TopologySpec c3_topology() { return {{"x", "y"}, {{}, {"x"}, {"x", "y"}}}; }

TopologySpec b4_topology() {
  return {{"x", "y"}, {{}, {"x"}, {"y"}, {"x", "y"}}};
}

TopologySpec f5_topology() {
  return {{"x", "y", "z"}, {{}, {"x"}, {"y"}, {"x", "y"}, {"x", "y", "z"}}};
}

Frame c3() { return from_topology(c3_topology()); }
Frame b4() { return from_topology(b4_topology()); }
Frame f5() { return from_topology(f5_topology()); }

} // namespace fixtures

} // namespace finloc
