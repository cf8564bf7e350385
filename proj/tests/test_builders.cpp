#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "finloc/builders.hpp"
#include "finloc/errors.hpp"
#include "finloc/heyting_laws.hpp"
#include "oracle.hpp"

using namespace finloc;

namespace {

bool is_chain(const Frame &f) {
  for (auto a : f.elements())
    for (auto b : f.elements())
      if (!f.leq(a, b) && !f.leq(b, a))
        return false;
  return true;
}

// Four elements, bottom and top plus two incomparable atoms.
bool is_diamond(const Frame &f) {
  if (f.size() != 4)
    return false;
  std::vector<ElementId> mid;
  for (auto a : f.elements())
    if (a != f.bottom() && a != f.top())
      mid.push_back(a);
  return mid.size() == 2 && !f.leq(mid[0], mid[1]) && !f.leq(mid[1], mid[0]);
}

} // namespace

TEST_CASE("from_topology: fixtures") {
  auto c3 = fixtures::c3();
  CHECK(c3.size() == 3);
  CHECK(is_chain(c3));
  CHECK(c3.labels() == std::vector<std::string>{"∅", "{x}", "{x,y}"});

  auto f5 = fixtures::f5();
  CHECK(f5.size() == 5);
  CHECK(f5.labels() ==
        std::vector<std::string>{"∅", "{x}", "{y}", "{x,y}", "{x,y,z}"});
  CHECK(f5.join(f5.element("{x}"), f5.element("{y}")) == f5.element("{x,y}"));

  CHECK(is_diamond(fixtures::b4()));
}

TEST_CASE("from_topology rejects non-topologies") {
  CHECK_THROWS_AS(from_topology({{"x"}, {{"x"}}}), NotATopology);
  CHECK_THROWS_AS(from_topology({{"x", "y"}, {{}, {"x"}}}), NotATopology);
  CHECK_THROWS_AS(from_topology({{"x", "y", "z"}, {{}, {"x"}, {"y"}, {"x", "y", "z"}}}),
                  NotATopology); // {x}∪{y} missing
  CHECK_THROWS_AS(
      from_topology({{"x", "y", "z"}, {{}, {"x", "y"}, {"y", "z"}, {"x", "y", "z"}}}),
      NotATopology); // {y} missing
  CHECK_THROWS_AS(from_topology({{"x"}, {{}, {"q"}, {"x"}}}), NotATopology);
  CHECK_THROWS_AS(from_topology({{"x", "x"}, {{}, {"x"}}}), InputError);
}

TEST_CASE("downset_frame") {
  auto one = downset_frame({{"p"}, {}});
  CHECK(one.size() == 2);

  auto anti = downset_frame({{"p", "q"}, {}});
  CHECK(is_diamond(anti));

  auto chain = downset_frame({{"low", "high"}, {{"low", "high"}}});
  CHECK(is_chain(chain));
  CHECK(chain.labels() == std::vector<std::string>{"∅", "{low}", "{low,high}"});

  CHECK_THROWS_AS(downset_frame({{"p", "q"}, {{"p", "q"}, {"q", "p"}}}), CyclicPoset);
  CHECK_THROWS_AS(downset_frame({{"p"}, {{"p", "p"}}}), CyclicPoset);
  CHECK_THROWS_AS(downset_frame({{"p"}, {{"p", "r"}}}), InvalidElement);
}

TEST_CASE("downset frames of random posets are valid frames") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    PosetSpec p;
    const std::size_t n = 1 + rng() % 6;
    for (std::size_t i = 0; i < n; ++i)
      p.elements.push_back("e" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng() % 3 == 0)
          p.covers.emplace_back(p.elements[i], p.elements[j]);
    auto f = downset_frame(p);
    CHECK(verify_heyting_laws(f).all_passed());
    // A downset frame of an n-chain... at least n+1 elements, at most 2^n.
    CHECK(f.size() >= n + 1);
    CHECK(f.size() <= (std::size_t{1} << n));
  }
}

TEST_CASE("standard_frame") {
  auto c3 = standard_frame(StandardFamily::chain, 3);
  CHECK(c3.size() == 3);
  CHECK(is_chain(c3));
  CHECK(is_diamond(standard_frame(StandardFamily::boolean, 2)));

  auto trivial = standard_frame(StandardFamily::boolean, 0);
  CHECK(trivial.size() == 1);
  CHECK(trivial.top() == trivial.bottom());

  CHECK_THROWS_AS(standard_frame(StandardFamily::chain, 0), InputError);
  CHECK_THROWS_AS(standard_frame(StandardFamily::boolean, 17), TooLarge);
  CHECK_THROWS_AS(standard_frame(StandardFamily::chain, 10, FrameLimits{5}), TooLarge);
}

TEST_CASE("product_frame") {
  auto c2 = standard_frame(StandardFamily::chain, 2);
  auto c3 = fixtures::c3();
  auto p = product_frame(c3, c2);
  CHECK(p.size() == 6);
  CHECK(p.label(ElementId(0)) == "(∅,0)");

  auto one = standard_frame(StandardFamily::boolean, 0);
  auto f5 = fixtures::f5();
  auto same = product_frame(f5, one);
  REQUIRE(same.size() == f5.size());
  for (auto a : f5.elements())
    for (auto b : f5.elements())
      CHECK(same.leq(a, b) == f5.leq(a, b));

  CHECK(is_diamond(product_frame(c2, c2)));
  CHECK_THROWS_AS(product_frame(f5, f5, FrameLimits{20}), TooLarge);
}

TEST_CASE("product order and implication are componentwise") {
  auto f = fixtures::f5(), g = fixtures::c3();
  auto p = product_frame(f, g);
  const auto ng = g.size();
  auto pair = [&](ElementId a, ElementId b) { return ElementId(a.value() * ng + b.value()); };
  for (auto a1 : f.elements())
    for (auto b1 : g.elements())
      for (auto a2 : f.elements())
        for (auto b2 : g.elements()) {
          CHECK(p.leq(pair(a1, b1), pair(a2, b2)) == (f.leq(a1, a2) && g.leq(b1, b2)));
          CHECK(p.heyting(pair(a1, b1), pair(a2, b2)) ==
                pair(f.heyting(a1, a2), g.heyting(b1, b2)));
        }
}

TEST_CASE("random_topology") {
  auto t1 = random_topology(1, 99);
  CHECK(t1.points == std::vector<std::string>{"p1"});
  CHECK(t1.opens == std::vector<std::vector<std::string>>{{}, {"p1"}});

  CHECK(random_topology(3, 7) == random_topology(3, 7));
  for (std::uint64_t seed = 0; seed < 1000; ++seed)
    CHECK_NOTHROW(validate_topology(random_topology(4, seed)));
  CHECK_THROWS_AS(random_topology(7, 0), TooLarge);
}

TEST_CASE("enumerate_topologies matches the preorder count") {
  CHECK(enumerate_topologies(0).size() == 1);
  const std::size_t expected[] = {1, 4, 29, 355};
  for (std::size_t n = 1; n <= 4; ++n) {
    auto all = enumerate_topologies(n);
    CHECK(all.size() == expected[n - 1]);
    CHECK(all.size() == oracle::count_preorders(n));
    std::set<std::vector<std::vector<std::string>>> distinct;
    for (const auto &t : all) {
      CHECK_NOTHROW(validate_topology(t));
      distinct.insert(t.opens);
    }
    CHECK(distinct.size() == all.size());
  }
  CHECK_THROWS_AS(enumerate_topologies(5), TooLarge);
  std::size_t seen = 0;
  CHECK(for_each_topology(3, [&](TopologySpec) { ++seen; }) == 29);
  CHECK(seen == 29);
}
