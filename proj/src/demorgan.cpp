#include "finloc/demorgan.hpp"

#include <set>

#include "finloc/errors.hpp"

namespace finloc {

namespace {

ElementId star(const Frame &f, ElementId a) { return f.pseudocomplement(a); }

void require_frame(const Frame &f, const Sublocale &s) {
  if (!f.same_as(s.frame()))
    throw FrameMismatch("sublocale belongs to a different frame");
}

// Intersection of o(g) over a set of generators.
ElementSet intersect_opens(const Frame &f, const std::set<ElementId> &gens) {
  ElementSet acc = f.full_set();
  for (auto g : gens)
    acc &= open_sublocale(f, g).members();
  return acc;
}

} // namespace

Sublocale booleanization(const Frame &f) {
  ElementSet regular = f.empty_set(), pseudo = f.empty_set();
  for (auto a : f.elements()) {
    if (star(f, star(f, a)) == a)
      regular.set(a.value());
    pseudo.set(star(f, a).value());
  }
  if (regular != pseudo)
    throw IntegrityError("regular elements " + regular.to_string() +
                         " differ from pseudocomplements " + pseudo.to_string());
  if (!is_sublocale(f, regular))
    throw IntegrityError("regular elements do not form a sublocale");
  auto b = Sublocale::assume_valid(f, std::move(regular));
  if (!is_dense(b))
    throw IntegrityError("Booleanization is not dense");
  return b;
}

Sublocale booleanization_via_dense_opens(const Frame &f) {
  std::set<ElementId> dense, joins;
  for (auto a : f.elements()) {
    if (f.is_dense_element(a))
      dense.insert(a);
    joins.insert(f.join(a, star(f, a)));
  }
  auto via_dense = intersect_opens(f, dense);
  auto via_joins = intersect_opens(f, joins);
  if (via_dense != via_joins)
    throw IntegrityError("intersection of dense opens " + via_dense.to_string() +
                         " differs from ⋂ o(a∨a*) " + via_joins.to_string());
  return Sublocale::assume_valid(f, std::move(via_dense));
}

Sublocale demorganization(const Frame &f) {
  std::set<ElementId> gens;
  for (auto a : f.elements())
    gens.insert(f.join(star(f, a), star(f, star(f, a))));
  auto m = Sublocale::assume_valid(f, intersect_opens(f, gens));
  if (!is_dense(m))
    throw IntegrityError("DeMorganization is not dense");
  if (!is_fitted(m))
    throw IntegrityError("DeMorganization is not fitted");
  if (!is_extremally_disconnected(m))
    throw IntegrityError("DeMorganization is not extremally disconnected");
  return m;
}

std::optional<ElementId> extremal_disconnectedness_witness(const Frame &f) {
  for (auto a : f.elements())
    if (f.join(star(f, a), star(f, star(f, a))) != f.top())
      return a;
  return std::nullopt;
}

bool is_extremally_disconnected(const Frame &f) {
  const bool by_elements = !extremal_disconnectedness_witness(f).has_value();

  std::set<ElementSet> opens;
  for (auto a : f.elements())
    opens.insert(open_sublocale(f, a).members());
  bool by_closures = true;
  for (auto a : f.elements())
    if (!opens.count(closure(open_sublocale(f, a)).members())) {
      by_closures = false;
      break;
    }
  if (by_elements != by_closures)
    throw IntegrityError(
        "a*∨a** = 1 test and closure-of-opens test disagree on extremal "
        "disconnectedness");
  return by_elements;
}

bool is_boolean(const Frame &f) {
  for (auto a : f.elements())
    if (f.join(a, star(f, a)) != f.top())
      return false;
  return true;
}

bool is_extremally_disconnected(const Sublocale &s) {
  return is_extremally_disconnected(induced_frame(s).frame);
}

bool is_boolean(const Sublocale &s) { return is_boolean(induced_frame(s).frame); }

namespace {

std::string describe(const std::vector<Sublocale> &xs) {
  std::string out;
  for (const auto &x : xs)
    out += (out.empty() ? "" : ", ") + x.members().to_string();
  return out.empty() ? "none" : out;
}

} // namespace

Sublocale oracle_least_dense(const Frame &f, const EnumerationLimits &limits) {
  std::vector<Sublocale> dense;
  for (auto &s : enumerate_sublocales(f, limits))
    if (is_dense(s))
      dense.push_back(std::move(s));
  std::vector<Sublocale> minima;
  for (const auto &s : dense) {
    bool least = true;
    for (const auto &t : dense)
      if (!s.is_subset_of(t)) {
        least = false;
        break;
      }
    if (least)
      minima.push_back(s);
  }
  if (minima.size() != 1)
    throw OracleFailure("no unique least dense sublocale; candidates: " +
                        describe(minima));
  return minima.front();
}

Sublocale oracle_largest_dense_ed(const Frame &f,
                                  const EnumerationLimits &limits) {
  std::vector<Sublocale> candidates;
  for (auto &s : enumerate_sublocales(f, limits))
    if (is_dense(s) && is_extremally_disconnected(s))
      candidates.push_back(std::move(s));
  std::vector<Sublocale> maxima;
  for (const auto &s : candidates) {
    bool largest = true;
    for (const auto &t : candidates)
      if (!t.is_subset_of(s)) {
        largest = false;
        break;
      }
    if (largest)
      maxima.push_back(s);
  }
  if (maxima.size() != 1)
    throw OracleFailure(
        "no unique largest dense extremally disconnected sublocale; "
        "candidates: " +
        describe(maxima));
  return maxima.front();
}

Sublocale oracle_unique_boolean_dense(const Frame &f,
                                      const EnumerationLimits &limits) {
  std::vector<Sublocale> hits;
  for (auto &s : enumerate_sublocales(f, limits))
    if (is_dense(s) && is_boolean(s))
      hits.push_back(std::move(s));
  if (hits.size() != 1)
    throw OracleFailure("expected exactly one dense Boolean sublocale, found: " +
                        describe(hits));
  if (!(hits.front() == booleanization(f)))
    throw OracleFailure("the dense Boolean sublocale " +
                        hits.front().members().to_string() +
                        " differs from the regular elements");
  return hits.front();
}

NearlyOpenReport verify_nearly_open(const Frame &f, const Sublocale &s) {
  require_frame(f, s);
  if (!is_dense(s))
    throw NotDense("sublocale " + s.members().to_string() + " is not dense");
  auto nu = nucleus_of(s);
  auto ind = induced_frame(s);
  NearlyOpenReport rep;
  for (auto a : f.elements()) {
    auto lhs = nu(star(f, a));
    auto rhs = ind.ambient(ind.frame.pseudocomplement(ind.local(nu(a))));
    if (lhs != rhs) {
      rep.passed = false;
      rep.witnesses.push_back(a);
    }
  }
  return rep;
}

} // namespace finloc
