#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "finloc/builders.hpp"
#include "finloc/errors.hpp"
#include "finloc/heyting_laws.hpp"
#include "finloc/sublocale.hpp"
#include "oracle.hpp"

using namespace finloc;

namespace {

struct F5 {
  Frame f = fixtures::f5();
  ElementId zero = f.element("∅"), a = f.element("{x}"), b = f.element("{y}"),
            ab = f.element("{x,y}"), one = f.element("{x,y,z}");
  Sublocale s(std::initializer_list<ElementId> ids) const {
    return Sublocale::from_members(f, f.make_set(ids));
  }
};

struct C3 {
  Frame f = fixtures::c3();
  ElementId zero = f.element("∅"), m = f.element("{x}"), one = f.element("{x,y}");
  Sublocale s(std::initializer_list<ElementId> ids) const {
    return Sublocale::from_members(f, f.make_set(ids));
  }
};

// Frames small enough for the subset-exhaustive oracle.
std::vector<Frame> tiny_frames() {
  std::vector<Frame> out;
  for (const auto &t : oracle::small_corpus()) {
    auto f = from_topology(t);
    if (f.size() <= 8)
      out.push_back(f);
  }
  out.push_back(standard_frame(StandardFamily::chain, 5));
  out.push_back(product_frame(fixtures::c3(), fixtures::c3()));
  return out;
}

} // namespace

TEST_CASE("is_sublocale examples") {
  C3 c;
  F5 g;
  auto b4 = fixtures::b4();
  CHECK(is_sublocale(c.f, c.f.make_set({c.one})));
  CHECK(is_sublocale(c.f, c.f.make_set({c.zero, c.one})));
  CHECK_FALSE(is_sublocale(b4, b4.make_set({b4.bottom(), b4.top()})));
  CHECK(is_sublocale(g.f, g.f.make_set({g.zero, g.a, g.b, g.one})));
  CHECK_FALSE(is_sublocale(g.f, g.f.make_set({g.a})));
  CHECK_THROWS_AS(Sublocale::from_members(b4, b4.make_set({b4.bottom(), b4.top()})),
                  NotASublocale);
}

TEST_CASE("open and closed sublocales") {
  F5 g;
  CHECK(open_sublocale(g.f, g.one) == whole_sublocale(g.f));
  CHECK(closed_sublocale(g.f, g.zero) == whole_sublocale(g.f));
  CHECK(open_sublocale(g.f, g.zero) == void_sublocale(g.f));
  CHECK(open_sublocale(g.f, g.ab) == g.s({g.zero, g.a, g.b, g.one}));
  CHECK(closed_sublocale(g.f, g.a) == g.s({g.a, g.ab, g.one}));
}

TEST_CASE("closure and density") {
  C3 c;
  F5 g;
  CHECK(closure(void_sublocale(g.f)) == void_sublocale(g.f));
  CHECK(closure(g.s({g.zero, g.a, g.b, g.one})) == whole_sublocale(g.f));
  CHECK(closure(c.s({c.m, c.one})) == c.s({c.m, c.one}));

  CHECK(is_dense(whole_sublocale(g.f)));
  CHECK(is_dense(c.s({c.zero, c.one})));
  CHECK_FALSE(is_dense(c.s({c.m, c.one})));
}

TEST_CASE("fitting") {
  F5 g;
  CHECK(fitting(void_sublocale(g.f)) == void_sublocale(g.f));
  CHECK(fitting(closed_sublocale(g.f, g.ab)) == whole_sublocale(g.f));
  CHECK(is_fitted(g.s({g.zero, g.a, g.b, g.one})));
  CHECK_FALSE(is_fitted(closed_sublocale(g.f, g.ab)));
}

TEST_CASE("joins and intersections in S(L)") {
  F5 g;
  auto some = g.s({g.zero, g.a, g.b, g.one});
  std::vector<Sublocale> pair{void_sublocale(g.f), some};
  CHECK(join_sublocales(pair) == some);

  std::vector<Sublocale> closeds{closed_sublocale(g.f, g.a), closed_sublocale(g.f, g.b)};
  CHECK(join_sublocales(closeds) == whole_sublocale(g.f));
  std::vector<Sublocale> opens{open_sublocale(g.f, g.a), open_sublocale(g.f, g.b)};
  CHECK(intersect_sublocales(opens) == void_sublocale(g.f));

  std::vector<Sublocale> none;
  CHECK(intersect_sublocales(g.f, none) == whole_sublocale(g.f));
  CHECK(join_sublocales(g.f, none) == void_sublocale(g.f));
  CHECK_THROWS_AS(intersect_sublocales(none), EmptyList);
  CHECK_THROWS_AS(join_sublocales(none), EmptyList);
}

TEST_CASE("sublocales of different frames do not compare") {
  auto f1 = fixtures::c3(), f2 = fixtures::c3();
  CHECK_THROWS_AS((void)(whole_sublocale(f1) == whole_sublocale(f2)), FrameMismatch);
  std::vector<Sublocale> mixed{whole_sublocale(f1), whole_sublocale(f2)};
  CHECK_THROWS_AS(join_sublocales(mixed), FrameMismatch);
}

TEST_CASE("nucleus_of") {
  C3 c;
  F5 g;
  auto id = nucleus_of(whole_sublocale(g.f));
  for (auto x : g.f.elements())
    CHECK(id(x) == x);
  auto nu = nucleus_of(c.s({c.zero, c.one}));
  CHECK(nu(c.m) == c.one);
  CHECK(nu(c.zero) == c.zero);
  CHECK(nucleus_of(g.s({g.zero, g.a, g.b, g.one}))(g.ab) == g.one);
}

TEST_CASE("induced_frame") {
  F5 g;
  auto whole = induced_frame(whole_sublocale(g.f));
  CHECK(whole.frame.labels() == g.f.labels());

  auto ind = induced_frame(g.s({g.zero, g.a, g.b, g.one}));
  REQUIRE(ind.frame.size() == 4);
  auto la = ind.local(g.a), lb = ind.local(g.b);
  CHECK(ind.ambient(ind.frame.join(la, lb)) == g.one);
  CHECK(ind.ambient(ind.frame.meet(la, lb)) == g.zero);
  CHECK_THROWS_AS(ind.local(g.ab), InvalidElement);

  C3 c;
  auto two = induced_frame(c.s({c.zero, c.one}));
  CHECK(two.frame.size() == 2);
  CHECK(two.frame.join(two.frame.bottom(), two.frame.pseudocomplement(two.frame.bottom())) ==
        two.frame.top());
}

TEST_CASE("enumerate_sublocales examples") {
  C3 c;
  auto subs = enumerate_sublocales(c.f);
  REQUIRE(subs.size() == 4);
  std::set<ElementSet> got;
  for (const auto &s : subs)
    got.insert(s.members());
  CHECK(got == std::set<ElementSet>{c.f.make_set({c.one}), c.f.make_set({c.zero, c.one}),
                                    c.f.make_set({c.m, c.one}), c.f.full_set()});

  auto b4 = fixtures::b4();
  auto bsubs = enumerate_sublocales(b4);
  REQUIRE(bsubs.size() == 4);
  for (auto x : b4.elements()) {
    auto up = closed_sublocale(b4, x);
    CHECK(std::any_of(bsubs.begin(), bsubs.end(), [&](const Sublocale &s) { return s == up; }));
  }

  CHECK(enumerate_sublocales(standard_frame(StandardFamily::boolean, 0)).size() == 1);
  CHECK_THROWS_AS(enumerate_sublocales(standard_frame(StandardFamily::boolean, 5)), TooLarge);
  // Sublocales of a Boolean algebra are its principal up-sets.
  CHECK(enumerate_sublocales(standard_frame(StandardFamily::boolean, 4)).size() == 16);
  CHECK_THROWS_AS(enumerate_sublocales(fixtures::f5(), EnumerationLimits{4}), TooLarge);
}

TEST_CASE("enumeration output is sorted by member bitset") {
  auto subs = enumerate_sublocales(fixtures::f5());
  for (std::size_t i = 1; i < subs.size(); ++i)
    CHECK(subs[i - 1].members() < subs[i].members());
}

TEST_CASE("enumerate_sublocales and is_sublocale agree with the subset oracle") {
  for (const auto &f : tiny_frames()) {
    auto expected = oracle::all_sublocales(f);
    auto subs = enumerate_sublocales(f);
    std::vector<oracle::Mask> got;
    for (const auto &s : subs)
      got.push_back(s.members().to_mask());
    REQUIRE(got == expected);
    std::set<oracle::Mask> exp(expected.begin(), expected.end());
    for (oracle::Mask m = 0; m < (oracle::Mask{1} << f.size()); ++m)
      CHECK(is_sublocale(f, ElementSet::from_mask(f.size(), m)) == (exp.count(m) > 0));
  }
}

TEST_CASE("points") {
  C3 c;
  CHECK(prime_elements(c.f) == c.f.make_set({c.zero, c.m}));
  CHECK(is_isolated_point(c.f, c.zero));
  CHECK_FALSE(is_isolated_point(c.f, c.m));
  CHECK_THROWS_AS(is_isolated_point(c.f, c.one), NotPrime);

  auto b4 = fixtures::b4();
  auto a = b4.element("{x}"), b = b4.element("{y}");
  CHECK(prime_elements(b4) == b4.make_set({a, b}));
  CHECK(is_isolated_point(b4, a));
  CHECK(is_isolated_point(b4, b));

  F5 g;
  CHECK(prime_elements(g.f) == g.f.make_set({g.a, g.b, g.ab}));
}

TEST_CASE("coframe law on the fixtures") {
  for (auto f : {fixtures::c3(), fixtures::b4(), fixtures::f5()}) {
    auto rep = verify_coframe_law(f, 100, 1);
    CHECK(rep.passed);
    CHECK(rep.exhaustive);
    CHECK(rep.checks == rep.sublocale_count * rep.sublocale_count * rep.sublocale_count);
  }
  auto sampled = verify_coframe_law(fixtures::f5(), 50, 2, 0);
  CHECK(sampled.passed);
  CHECK_FALSE(sampled.exhaustive);
  CHECK(sampled.checks == 50);
}

TEST_CASE("S(L) identities over the corpus") {
  for (const auto &f : tiny_frames()) {
    auto whole = whole_sublocale(f), nothing = void_sublocale(f);
    for (auto a : f.elements()) {
      auto o = open_sublocale(f, a), c = closed_sublocale(f, a);
      REQUIRE(is_sublocale(f, o.members()));
      REQUIRE(is_sublocale(f, c.members()));
      std::vector<Sublocale> oc{o, c};
      CHECK(intersect_sublocales(oc) == nothing);
      CHECK(join_sublocales(oc) == whole);
      CHECK(is_dense(o) == f.is_dense_element(a));
      for (auto b : f.elements()) {
        std::vector<Sublocale> cs{c, closed_sublocale(f, b)};
        std::vector<Sublocale> os{o, open_sublocale(f, b)};
        CHECK(intersect_sublocales(cs) == closed_sublocale(f, f.join(a, b)));
        CHECK(join_sublocales(cs) == closed_sublocale(f, f.meet(a, b)));
        CHECK(intersect_sublocales(os) == open_sublocale(f, f.meet(a, b)));
        CHECK(join_sublocales(os) == open_sublocale(f, f.join(a, b)));
      }
    }
  }
}

TEST_CASE("nuclei, (LM) and induced frames for every sublocale") {
  for (const auto &f : tiny_frames()) {
    for (const auto &s : enumerate_sublocales(f)) {
      auto nu = nucleus_of(s);
      for (auto a : f.elements()) {
        CHECK(f.leq(a, nu(a)));
        CHECK(nu(nu(a)) == nu(a));
        CHECK(s.contains(nu(a)));
        for (auto b : f.elements())
          CHECK(nu(f.meet(a, b)) == f.meet(nu(a), nu(b)));
        for (auto x : s.members())
          CHECK(f.heyting(nu(a), ElementId(x)) == f.heyting(a, ElementId(x)));
      }

      auto ind = induced_frame(s);
      CHECK(verify_heyting_laws(ind.frame).all_passed());
      CHECK(ind.ambient(ind.frame.bottom()) == f.big_meet(s.members()));
      for (auto x : ind.frame.elements())
        for (auto y : ind.frame.elements()) {
          auto ax = ind.ambient(x), ay = ind.ambient(y);
          CHECK(ind.ambient(ind.frame.meet(x, y)) == f.meet(ax, ay));
          CHECK(ind.ambient(ind.frame.heyting(x, y)) == f.heyting(ax, ay));
          CHECK(ind.ambient(ind.frame.join(x, y)) == nu(f.join(ax, ay)));
        }
      if (is_dense(s))
        for (auto x : ind.frame.elements())
          CHECK(ind.ambient(ind.frame.pseudocomplement(x)) ==
                f.pseudocomplement(ind.ambient(x)));
    }
  }
}

TEST_CASE("fitting is a closure operator and fitted means an intersection of opens") {
  for (const auto &f : tiny_frames()) {
    auto subs = enumerate_sublocales(f);
    // Intersections of families of opens, closed under pairwise ∩.
    std::set<ElementSet> opens_closed;
    for (auto a : f.elements())
      opens_closed.insert(open_sublocale(f, a).members());
    opens_closed.insert(f.full_set());
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<ElementSet> cur(opens_closed.begin(), opens_closed.end());
      for (const auto &x : cur)
        for (const auto &y : cur)
          grew |= opens_closed.insert(x & y).second;
    }
    for (const auto &s : subs) {
      auto fs = fitting(s);
      CHECK(s.is_subset_of(fs));
      CHECK(fitting(fs) == fs);
      CHECK(is_fitted(s) == (opens_closed.count(s.members()) > 0));
      for (const auto &t : subs)
        if (s.is_subset_of(t))
          CHECK(fs.is_subset_of(fitting(t)));
    }
  }
}

TEST_CASE("coframe law exhaustively on small corpus frames") {
  for (const auto &f : tiny_frames())
    CHECK(verify_coframe_law(f, 0, 0).passed);
}
