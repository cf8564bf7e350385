#include "finloc/sublocale.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "finloc/errors.hpp"

namespace finloc {

Sublocale Sublocale::from_members(const Frame &frame, ElementSet members) {
  if (members.universe() != frame.size())
    throw InvalidElement("element set universe does not match frame size");
  if (!is_sublocale(frame, members))
    throw NotASublocale(members.to_string() + " is not a sublocale");
  return Sublocale(frame, std::move(members));
}

Sublocale Sublocale::assume_valid(const Frame &frame, ElementSet members) {
  return Sublocale(frame, std::move(members));
}

bool Sublocale::contains(ElementId a) const {
  frame_.at(a.value());
  return members_.test(a.value());
}

void Sublocale::require_same_frame(const Sublocale &other) const {
  if (!frame_.same_as(other.frame_))
    throw FrameMismatch("sublocales belong to different frames");
}

bool Sublocale::is_subset_of(const Sublocale &other) const {
  require_same_frame(other);
  return members_.is_subset_of(other.members_);
}

bool Sublocale::operator==(const Sublocale &other) const {
  require_same_frame(other);
  return members_ == other.members_;
}

std::vector<std::string> Sublocale::labels() const {
  std::vector<std::string> out;
  for (auto i : members_)
    out.push_back(frame_.label(ElementId(i)));
  return out;
}

ElementId InducedFrame::local(ElementId a) const {
  if (a.value() >= from_ambient.size() || !from_ambient[a.value()])
    throw InvalidElement("element " + std::to_string(a.value()) +
                         " is not a member of the sublocale");
  return *from_ambient[a.value()];
}

namespace {

void require_frame(const Frame &frame, const Sublocale &s) {
  if (!frame.same_as(s.frame()))
    throw FrameMismatch("sublocale belongs to a different frame");
}

// Smallest meet-closed set containing `seed` and top.
ElementSet meet_closure(const Frame &f, ElementSet seed) {
  seed.set(f.top().value());
  std::vector<std::size_t> members = seed.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      auto m = f.meet(ElementId(members[i]), ElementId(members[j])).value();
      if (!seed.test(m)) {
        seed.set(m);
        members.push_back(m);
      }
    }
  return seed;
}

} // namespace

bool is_sublocale(const Frame &f, const ElementSet &s) {
  if (s.universe() != f.size())
    return false;
  if (!s.test(f.top().value()))
    return false;
  // Pairwise meets plus top give all meets in a finite lattice.
  for (auto x : s)
    for (auto y : s) {
      if (y >= x)
        break;
      if (!s.test(f.meet(ElementId(x), ElementId(y)).value()))
        return false;
    }
  for (auto x : s)
    for (std::size_t a = 0; a < f.size(); ++a)
      if (!s.test(f.heyting(ElementId(a), ElementId(x)).value()))
        return false;
  return true;
}

Sublocale whole_sublocale(const Frame &f) {
  return Sublocale::assume_valid(f, f.full_set());
}

Sublocale void_sublocale(const Frame &f) {
  return Sublocale::assume_valid(f, f.make_set({f.top()}));
}

Sublocale open_sublocale(const Frame &f, ElementId a) {
  ElementSet s = f.empty_set();
  for (auto b : f.elements())
    s.set(f.heyting(a, b).value());
  return Sublocale::assume_valid(f, std::move(s));
}

Sublocale closed_sublocale(const Frame &f, ElementId a) {
  return Sublocale::assume_valid(f, f.up_set(a));
}

Sublocale closure(const Sublocale &s) {
  return closed_sublocale(s.frame(), s.frame().big_meet(s.members()));
}

bool is_dense(const Sublocale &s) {
  return s.frame().big_meet(s.members()) == s.frame().bottom();
}

Sublocale fitting(const Sublocale &s) {
  const auto &f = s.frame();
  ElementSet acc = f.full_set();
  for (auto a : f.elements()) {
    auto o = open_sublocale(f, a);
    if (s.members().is_subset_of(o.members()))
      acc &= o.members();
  }
  return Sublocale::assume_valid(f, std::move(acc));
}

bool is_fitted(const Sublocale &s) { return fitting(s) == s; }

Sublocale intersect_sublocales(const Frame &f, std::span<const Sublocale> list) {
  ElementSet acc = f.full_set();
  for (const auto &s : list) {
    require_frame(f, s);
    acc &= s.members();
  }
  return Sublocale::assume_valid(f, std::move(acc));
}

Sublocale join_sublocales(const Frame &f, std::span<const Sublocale> list) {
  ElementSet acc = f.empty_set();
  for (const auto &s : list) {
    require_frame(f, s);
    acc |= s.members();
  }
  return Sublocale::assume_valid(f, meet_closure(f, std::move(acc)));
}

Sublocale intersect_sublocales(std::span<const Sublocale> list) {
  if (list.empty())
    throw EmptyList("intersection of an empty list needs the ambient frame");
  return intersect_sublocales(list.front().frame(), list);
}

Sublocale join_sublocales(std::span<const Sublocale> list) {
  if (list.empty())
    throw EmptyList("join of an empty list needs the ambient frame");
  return join_sublocales(list.front().frame(), list);
}

Nucleus nucleus_of(const Sublocale &s) {
  const auto &f = s.frame();
  Nucleus nu{f, {}};
  nu.table.reserve(f.size());
  for (auto a : f.elements())
    nu.table.push_back(f.big_meet(f.up_set(a) & s.members()));
  return nu;
}

InducedFrame induced_frame(const Sublocale &s) {
  const auto &f = s.frame();
  InducedFrame out{f, {}, std::vector<std::optional<ElementId>>(f.size())};
  std::vector<std::string> labels;
  for (auto i : s.members()) {
    out.from_ambient[i] = ElementId(out.to_ambient.size());
    out.to_ambient.emplace_back(i);
    labels.push_back(f.label(ElementId(i)));
  }
  const auto n = out.to_ambient.size();
  std::vector<ElementSet> rows(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (f.leq(out.to_ambient[i], out.to_ambient[j]))
        rows[i].set(j);
  out.frame = build_frame(n, rows, std::move(labels));
  return out;
}

std::vector<Sublocale> enumerate_sublocales(const Frame &f,
                                            const EnumerationLimits &limits) {
  const auto n = f.size();
  if (n > limits.max_elements)
    throw TooLarge("sublocale enumeration is capped at " +
                   std::to_string(limits.max_elements) + " elements, frame has " +
                   std::to_string(n));
  if (n > 40)
    throw TooLarge("sublocale enumeration cannot exceed 40 elements");

  using Mask = std::uint64_t;
  const auto top = f.top().value();
  std::vector<std::uint8_t> meet(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      meet[a * n + b] = static_cast<std::uint8_t>(f.meet(ElementId(a), ElementId(b)).value());
  // implication_image[s] = {a → s | a ∈ L}
  std::vector<Mask> implication_image(n, 0);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t a = 0; a < n; ++a)
      implication_image[s] |= Mask{1} << f.heyting(ElementId(a), ElementId(s)).value();

  std::vector<std::size_t> free_positions;
  for (std::size_t i = 0; i < n; ++i)
    if (i != top)
      free_positions.push_back(i);
  const auto k_max = free_positions.size();

  auto expand = [&](Mask compact) {
    Mask m = Mask{1} << top;
    for (std::size_t i = 0; compact; ++i, compact >>= 1)
      if (compact & 1u)
        m |= Mask{1} << free_positions[i];
    return m;
  };
  auto meet_closed = [&](Mask m) {
    for (Mask xs = m; xs; xs &= xs - 1) {
      auto x = static_cast<std::size_t>(std::countr_zero(xs));
      for (Mask ys = xs & (xs - 1); ys; ys &= ys - 1) {
        auto y = static_cast<std::size_t>(std::countr_zero(ys));
        if (!((m >> meet[x * n + y]) & 1u))
          return false;
      }
    }
    return true;
  };
  auto implication_closed = [&](Mask m) {
    Mask img = 0;
    for (Mask xs = m; xs; xs &= xs - 1)
      img |= implication_image[static_cast<std::size_t>(std::countr_zero(xs))];
    return (img & ~m) == 0;
  };

  // Candidates always contain top; the rest is walked by increasing
  // popcount (Gosper's hack over the non-top positions).
  std::vector<Mask> found;
  const Mask limit = Mask{1} << k_max;
  for (std::size_t k = 0; k <= k_max; ++k) {
    Mask c = (k == 0) ? 0 : (Mask{1} << k) - 1;
    while (c < limit) {
      auto m = expand(c);
      if (meet_closed(m) && implication_closed(m))
        found.push_back(m);
      if (c == 0)
        break;
      Mask lo = c & (~c + 1);
      Mask hi = c + lo;
      c = (((hi ^ c) >> 2) / lo) | hi;
    }
  }
  std::sort(found.begin(), found.end());

  std::vector<Sublocale> out;
  out.reserve(found.size());
  for (auto m : found)
    out.push_back(Sublocale::assume_valid(f, ElementSet::from_mask(n, m)));
  return out;
}

ElementSet prime_elements(const Frame &f) {
  ElementSet primes = f.empty_set();
  for (auto p : f.elements()) {
    if (p == f.top())
      continue;
    bool prime = true;
    for (auto a : f.elements()) {
      for (auto b : f.elements())
        if (f.leq(f.meet(a, b), p) && !f.leq(a, p) && !f.leq(b, p)) {
          prime = false;
          break;
        }
      if (!prime)
        break;
    }
    if (prime)
      primes.set(p.value());
  }
  return primes;
}

bool is_isolated_point(const Frame &f, ElementId p) {
  f.at(p.value());
  if (!prime_elements(f).test(p.value()))
    throw NotPrime("'" + f.label(p) + "' is not a prime element");
  auto point = f.make_set({f.top(), p});
  for (auto u : f.elements())
    if (open_sublocale(f, u).members() == point)
      return true;
  return false;
}

CoframeLawReport verify_coframe_law(const Frame &f, std::size_t samples,
                                    std::uint64_t seed,
                                    std::size_t exhaustive_limit,
                                    const EnumerationLimits &limits) {
  auto subs = enumerate_sublocales(f, limits);
  const auto count = subs.size();
  CoframeLawReport rep;
  rep.sublocale_count = count;

  std::map<ElementSet, std::size_t> index;
  for (std::size_t i = 0; i < count; ++i)
    index.emplace(subs[i].members(), i);
  auto lookup = [&](const ElementSet &s) {
    auto it = index.find(s);
    if (it == index.end())
      throw IntegrityError("S(L) is not closed under its own operations: " +
                           s.to_string());
    return it->second;
  };

  std::vector<std::size_t> join(count * count), inter(count * count);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      const Sublocale pair[] = {subs[i], subs[j]};
      join[i * count + j] = lookup(join_sublocales(f, pair).members());
      inter[i * count + j] = lookup(intersect_sublocales(f, pair).members());
    }
  auto J = [&](std::size_t a, std::size_t b) { return join[a * count + b]; };
  auto I = [&](std::size_t a, std::size_t b) { return inter[a * count + b]; };
  auto describe = [&](std::size_t i) { return subs[i].members().to_string(); };

  if (count <= exhaustive_limit) {
    rep.exhaustive = true;
    for (std::size_t s = 0; s < count; ++s)
      for (std::size_t t1 = 0; t1 < count; ++t1)
        for (std::size_t t2 = 0; t2 < count; ++t2) {
          ++rep.checks;
          if (J(s, I(t1, t2)) != I(J(s, t1), J(s, t2))) {
            rep.passed = false;
            rep.witness = "S=" + describe(s) + " T1=" + describe(t1) +
                          " T2=" + describe(t2);
            return rep;
          }
        }
    return rep;
  }

  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    auto s = static_cast<std::size_t>(rng() % count);
    auto family_size = 1 + static_cast<std::size_t>(rng() % 3);
    std::vector<std::size_t> ts;
    for (std::size_t i = 0; i < family_size; ++i)
      ts.push_back(static_cast<std::size_t>(rng() % count));
    std::size_t lhs_inner = ts[0], rhs = J(s, ts[0]);
    for (std::size_t i = 1; i < ts.size(); ++i) {
      lhs_inner = I(lhs_inner, ts[i]);
      rhs = I(rhs, J(s, ts[i]));
    }
    ++rep.checks;
    if (J(s, lhs_inner) != rhs) {
      rep.passed = false;
      rep.witness = "S=" + describe(s);
      for (auto t : ts)
        rep.witness += " T=" + describe(t);
      return rep;
    }
  }
  return rep;
}

} // namespace finloc
