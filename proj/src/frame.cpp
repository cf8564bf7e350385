#include "finloc/frame.hpp"

#include <algorithm>

#include "finloc/errors.hpp"

namespace finloc {

struct Frame::Data {
  std::size_t size = 0;
  ElementId bottom, top;
  std::vector<ElementSet> up;   // up[a] = ↑a
  std::vector<ElementSet> down; // down[a] = ↓a
  std::vector<ElementId> meet;
  std::vector<ElementId> join;
  std::vector<ElementId> heyting;
  std::vector<std::string> labels;

  std::size_t cell(ElementId a, ElementId b) const {
    return a.value() * size + b.value();
  }
};

namespace {

std::string name_of(const std::vector<std::string> &labels, std::size_t i) {
  return "'" + labels[i] + "'";
}

} // namespace

std::size_t Frame::size() const { return data_->size; }
ElementId Frame::bottom() const { return data_->bottom; }
ElementId Frame::top() const { return data_->top; }

void Frame::check(ElementId a) const {
  if (a.value() >= data_->size)
    throw InvalidElement("element index " + std::to_string(a.value()) +
                         " out of range for frame of size " +
                         std::to_string(data_->size));
}

ElementId Frame::at(std::size_t index) const {
  if (index >= data_->size)
    throw InvalidElement("element index " + std::to_string(index) +
                         " out of range for frame of size " +
                         std::to_string(data_->size));
  return ElementId(index);
}

std::vector<ElementId> Frame::elements() const {
  std::vector<ElementId> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i)
    out.emplace_back(i);
  return out;
}

bool Frame::leq(ElementId a, ElementId b) const {
  check(a);
  check(b);
  return data_->up[a.value()].test(b.value());
}

ElementId Frame::meet(ElementId a, ElementId b) const {
  check(a);
  check(b);
  return data_->meet[data_->cell(a, b)];
}

ElementId Frame::join(ElementId a, ElementId b) const {
  check(a);
  check(b);
  return data_->join[data_->cell(a, b)];
}

ElementId Frame::heyting(ElementId a, ElementId b) const {
  check(a);
  check(b);
  return data_->heyting[data_->cell(a, b)];
}

ElementId Frame::pseudocomplement(ElementId a) const {
  return heyting(a, bottom());
}

bool Frame::is_dense_element(ElementId a) const {
  return pseudocomplement(a) == bottom();
}

ElementId Frame::big_meet(const ElementSet &s) const {
  if (s.universe() != size())
    throw InvalidElement("element set universe does not match frame size");
  ElementId acc = top();
  for (auto i : s)
    acc = data_->meet[data_->cell(acc, ElementId(i))];
  return acc;
}

ElementId Frame::big_join(const ElementSet &s) const {
  if (s.universe() != size())
    throw InvalidElement("element set universe does not match frame size");
  ElementId acc = bottom();
  for (auto i : s)
    acc = data_->join[data_->cell(acc, ElementId(i))];
  return acc;
}

const ElementSet &Frame::up_set(ElementId a) const {
  check(a);
  return data_->up[a.value()];
}

const ElementSet &Frame::down_set(ElementId a) const {
  check(a);
  return data_->down[a.value()];
}

ElementSet Frame::make_set(std::initializer_list<ElementId> ids) const {
  ElementSet s(size());
  for (auto id : ids) {
    check(id);
    s.set(id.value());
  }
  return s;
}

const std::string &Frame::label(ElementId a) const {
  check(a);
  return data_->labels[a.value()];
}

const std::vector<std::string> &Frame::labels() const { return data_->labels; }

std::optional<ElementId> Frame::find(std::string_view label) const {
  const auto &ls = data_->labels;
  auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end())
    return std::nullopt;
  return ElementId(static_cast<std::size_t>(it - ls.begin()));
}

ElementId Frame::element(std::string_view label) const {
  if (auto id = find(label))
    return *id;
  throw InvalidElement("no element labelled '" + std::string(label) + "'");
}

Frame Frame::with_heyting_table_unchecked(std::vector<ElementId> table) const {
  if (table.size() != size() * size())
    throw InputError("implication table must have size*size entries");
  for (auto id : table)
    check(id);
  auto copy = std::make_shared<Data>(*data_);
  copy->heyting = std::move(table);
  return Frame(std::move(copy));
}

Frame build_frame(std::size_t size, std::span<const OrderPair> pairs,
                  std::vector<std::string> labels, const FrameLimits &limits) {
  if (size > limits.max_elements)
    throw TooLarge("frame of " + std::to_string(size) +
                   " elements exceeds the cap of " +
                   std::to_string(limits.max_elements));
  std::vector<ElementSet> rows(size, ElementSet(size));
  for (auto [lo, hi] : pairs) {
    if (lo >= size || hi >= size)
      throw InvalidElement("order pair (" + std::to_string(lo) + ", " +
                           std::to_string(hi) + ") references an index >= " +
                           std::to_string(size));
    rows[lo].set(hi);
  }
  return build_frame(size, rows, std::move(labels), limits);
}

Frame build_frame(std::size_t size, const std::vector<ElementSet> &up_rows,
                  std::vector<std::string> labels, const FrameLimits &limits) {
  if (size == 0)
    throw NotALattice("a frame needs at least one element");
  if (size > limits.max_elements)
    throw TooLarge("frame of " + std::to_string(size) +
                   " elements exceeds the cap of " +
                   std::to_string(limits.max_elements));
  if (up_rows.size() != size)
    throw InputError("relation matrix must have one row per element");
  if (labels.empty())
    for (std::size_t i = 0; i < size; ++i)
      labels.push_back(std::to_string(i));
  if (labels.size() != size)
    throw InputError("expected " + std::to_string(size) + " labels, got " +
                     std::to_string(labels.size()));

  auto d = std::make_shared<Frame::Data>();
  d->size = size;
  d->labels = std::move(labels);

  // Reflexive-transitive closure (Warshall over bit rows).
  auto &up = d->up;
  up = up_rows;
  for (std::size_t i = 0; i < size; ++i) {
    if (up[i].universe() != size)
      throw InputError("relation row has the wrong universe size");
    up[i].set(i);
  }
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t i = 0; i < size; ++i)
      if (up[i].test(k))
        up[i] |= up[k];

  d->down.assign(size, ElementSet(size));
  for (std::size_t i = 0; i < size; ++i)
    for (auto j : up[i])
      d->down[j].set(i);

  for (std::size_t i = 0; i < size; ++i)
    for (auto j : up[i])
      if (j != i && up[j].test(i))
        throw NotAntisymmetric("order has a cycle through " +
                               name_of(d->labels, i) + " and " +
                               name_of(d->labels, j));

  auto full = ElementSet::full(size);
  std::optional<std::size_t> bottom, top;
  for (std::size_t i = 0; i < size; ++i) {
    if (up[i] == full)
      bottom = i;
    if (d->down[i] == full)
      top = i;
  }
  if (!bottom)
    throw NotALattice("no least element");
  if (!top)
    throw NotALattice("no greatest element");
  d->bottom = ElementId(*bottom);
  d->top = ElementId(*top);

  // The meet of a and b is the lower bound whose down-set is largest, provided
  // that down-set swallows every other lower bound; joins are dual.
  auto extremum = [&](const ElementSet &bounds,
                      const std::vector<ElementSet> &cone)
      -> std::optional<std::size_t> {
    std::size_t best = size, best_count = 0;
    for (auto m : bounds) {
      auto c = cone[m].count();
      if (best == size || c > best_count) {
        best = m;
        best_count = c;
      }
    }
    if (best == size || !bounds.is_subset_of(cone[best]))
      return std::nullopt;
    return best;
  };

  d->meet.resize(size * size);
  d->join.resize(size * size);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = a; b < size; ++b) {
      auto m = extremum(d->down[a] & d->down[b], d->down);
      if (!m)
        throw NotALattice(name_of(d->labels, a) + " and " +
                          name_of(d->labels, b) + " have no meet");
      auto j = extremum(up[a] & up[b], up);
      if (!j)
        throw NotALattice(name_of(d->labels, a) + " and " +
                          name_of(d->labels, b) + " have no join");
      d->meet[a * size + b] = d->meet[b * size + a] = ElementId(*m);
      d->join[a * size + b] = d->join[b * size + a] = ElementId(*j);
    }
  }

  auto M = [&](std::size_t a, std::size_t b) {
    return d->meet[a * size + b].value();
  };
  auto J = [&](std::size_t a, std::size_t b) {
    return d->join[a * size + b].value();
  };
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      for (std::size_t c = b + 1; c < size; ++c)
        if (M(a, J(b, c)) != J(M(a, b), M(a, c)))
          throw NotDistributive(
              a, b, c,
              "not distributive: a=" + name_of(d->labels, a) +
                  ", b=" + name_of(d->labels, b) +
                  ", c=" + name_of(d->labels, c) +
                  " violate a∧(b∨c) = (a∧b)∨(a∧c)");

  // a → b = ⋁{c | a ∧ c <= b}; distributivity makes this the maximum.
  d->heyting.resize(size * size);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) {
      std::size_t acc = *bottom;
      for (std::size_t c = 0; c < size; ++c)
        if (up[M(a, c)].test(b))
          acc = J(acc, c);
      d->heyting[a * size + b] = ElementId(acc);
    }

  return Frame(std::move(d));
}

} // namespace finloc
