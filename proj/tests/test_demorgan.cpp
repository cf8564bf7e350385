#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "finloc/builders.hpp"
#include "finloc/demorgan.hpp"
#include "finloc/errors.hpp"
#include "oracle.hpp"

using namespace finloc;

namespace {

ElementSet by_labels(const Frame &f, std::initializer_list<const char *> labels) {
  ElementSet s = f.empty_set();
  for (auto l : labels)
    s.set(f.element(l).value());
  return s;
}

std::vector<Frame> corpus_frames() {
  std::vector<Frame> out;
  for (const auto &t : oracle::small_corpus()) {
    auto f = from_topology(t);
    if (f.size() <= 16)
      out.push_back(f);
  }
  out.push_back(standard_frame(StandardFamily::chain, 6));
  out.push_back(product_frame(fixtures::c3(), fixtures::f5()));
  out.push_back(downset_frame({{"a", "b", "c", "d"}, {{"a", "c"}, {"b", "c"}, {"b", "d"}}}));
  return out;
}

} // namespace

TEST_CASE("booleanization on the fixtures") {
  auto c3 = fixtures::c3(), b4 = fixtures::b4(), f5 = fixtures::f5();
  CHECK(booleanization(c3).members() == by_labels(c3, {"∅", "{x,y}"}));
  CHECK(booleanization(b4) == whole_sublocale(b4));
  CHECK(booleanization(f5).members() ==
        by_labels(f5, {"∅", "{x}", "{y}", "{x,y,z}"}));

  CHECK(booleanization_via_dense_opens(c3).members() == by_labels(c3, {"∅", "{x,y}"}));
  CHECK(booleanization_via_dense_opens(f5).members() ==
        by_labels(f5, {"∅", "{x}", "{y}", "{x,y,z}"}));
  CHECK(booleanization_via_dense_opens(b4) == whole_sublocale(b4));
}

TEST_CASE("demorganization on the fixtures") {
  auto c3 = fixtures::c3(), b4 = fixtures::b4(), f5 = fixtures::f5();
  CHECK(demorganization(f5).members() ==
        by_labels(f5, {"∅", "{x}", "{y}", "{x,y,z}"}));
  CHECK(demorganization(c3) == whole_sublocale(c3));
  CHECK(demorganization(b4) == whole_sublocale(b4));
}

TEST_CASE("extremal disconnectedness and Booleanness") {
  auto c3 = fixtures::c3(), b4 = fixtures::b4(), f5 = fixtures::f5();
  CHECK(is_extremally_disconnected(c3));
  CHECK_FALSE(is_extremally_disconnected(f5));
  CHECK(extremal_disconnectedness_witness(f5) == f5.element("{x}"));
  CHECK_FALSE(extremal_disconnectedness_witness(c3).has_value());
  for (std::size_t n = 0; n <= 4; ++n)
    CHECK(is_extremally_disconnected(standard_frame(StandardFamily::boolean, n)));

  CHECK(is_boolean(b4));
  CHECK_FALSE(is_boolean(c3));
  CHECK(is_boolean(demorganization(f5)));
}

TEST_CASE("oracles on the fixtures") {
  auto c3 = fixtures::c3(), b4 = fixtures::b4(), f5 = fixtures::f5();
  CHECK(oracle_least_dense(c3).members() == by_labels(c3, {"∅", "{x,y}"}));
  CHECK(oracle_least_dense(f5).members() ==
        by_labels(f5, {"∅", "{x}", "{y}", "{x,y,z}"}));
  CHECK(oracle_least_dense(b4) == whole_sublocale(b4));

  CHECK(oracle_largest_dense_ed(f5).members() ==
        by_labels(f5, {"∅", "{x}", "{y}", "{x,y,z}"}));
  CHECK(oracle_largest_dense_ed(c3) == whole_sublocale(c3));
  CHECK(oracle_largest_dense_ed(b4) == whole_sublocale(b4));

  CHECK(oracle_unique_boolean_dense(c3).members() == by_labels(c3, {"∅", "{x,y}"}));
  CHECK(oracle_unique_boolean_dense(f5).members() ==
        by_labels(f5, {"∅", "{x}", "{y}", "{x,y,z}"}));
  CHECK(oracle_unique_boolean_dense(b4) == whole_sublocale(b4));

  CHECK_THROWS_AS(oracle_least_dense(standard_frame(StandardFamily::boolean, 5)), TooLarge);
}

TEST_CASE("verify_nearly_open") {
  auto c3 = fixtures::c3(), f5 = fixtures::f5();
  auto s = Sublocale::from_members(c3, by_labels(c3, {"∅", "{x,y}"}));
  CHECK(verify_nearly_open(c3, s).passed);
  CHECK(verify_nearly_open(f5, booleanization(f5)).passed);
  CHECK(verify_nearly_open(f5, whole_sublocale(f5)).passed);
  CHECK_THROWS_AS(verify_nearly_open(f5, closed_sublocale(f5, f5.element("{x}"))),
                  NotDense);
}

TEST_CASE("a corrupted kernel surfaces as IntegrityError") {
  // In the 3-chain, replace 1* = 0 by 1* = m. Then * cycles 0 -> 1 -> m -> 0,
  // so ** has no fixed points while * is onto.
  auto c3 = fixtures::c3();
  std::vector<ElementId> table;
  for (auto a : c3.elements())
    for (auto b : c3.elements())
      table.push_back(c3.heyting(a, b));
  auto m = c3.element("{x}");
  table[c3.top().value() * c3.size() + c3.bottom().value()] = m;
  auto bad = c3.with_heyting_table_unchecked(table);
  CHECK_THROWS_AS(booleanization(bad), IntegrityError);
}

TEST_CASE("witness pair: strictness both ways") {
  auto c3 = fixtures::c3(), f5 = fixtures::f5();
  auto bc = booleanization(c3), mc = demorganization(c3);
  CHECK(bc.is_subset_of(mc));
  CHECK_FALSE(bc == mc);
  auto bf = booleanization(f5), mf = demorganization(f5);
  CHECK(bf == mf);
  CHECK_FALSE(mf == whole_sublocale(f5));
}

TEST_CASE("structural invariants over the corpus") {
  for (const auto &f : corpus_frames()) {
    CAPTURE(f.size());
    auto b = booleanization(f);
    auto m = demorganization(f);
    auto whole = whole_sublocale(f);
    CHECK(b == booleanization_via_dense_opens(f));
    CHECK(b == oracle_least_dense(f));
    CHECK(b == oracle_unique_boolean_dense(f));
    CHECK(m == oracle_largest_dense_ed(f));
    CHECK(b.is_subset_of(m));
    CHECK(is_fitted(b));
    CHECK(is_fitted(m));
    CHECK(is_extremally_disconnected(f) == (m == whole));
    CHECK(is_boolean(f) == (b == whole));

    // Dense elements are exactly the joins b ∨ b*.
    ElementSet dense = f.empty_set(), joins = f.empty_set();
    for (auto a : f.elements()) {
      if (f.is_dense_element(a))
        dense.set(a.value());
      joins.set(f.join(a, f.pseudocomplement(a)).value());
    }
    CHECK(dense == joins);

    for (const auto &s : enumerate_sublocales(f))
      if (is_dense(s))
        CHECK(verify_nearly_open(f, s).passed);
  }
}
