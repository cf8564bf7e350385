#include "finloc/heyting_laws.hpp"

#include <functional>
#include <random>

namespace finloc {

bool HeytingLawReport::all_passed() const {
  for (const auto &l : laws)
    if (!l.passed)
      return false;
  return true;
}

std::vector<LawCheck> HeytingLawReport::failures() const {
  std::vector<LawCheck> out;
  for (const auto &l : laws)
    if (!l.passed)
      out.push_back(l);
  return out;
}

namespace {

LawCheck start(std::string law, std::string statement) {
  LawCheck c;
  c.law = std::move(law);
  c.statement = std::move(statement);
  return c;
}

class LawRunner {
public:
  explicit LawRunner(const Frame &f) : f_(f), elems_(f.elements()) {}

  LawCheck unary(std::string law, std::string statement,
                 const std::function<bool(ElementId)> &holds) const {
    LawCheck c = start(std::move(law), std::move(statement));
    for (auto a : elems_)
      if (!holds(a))
        return fail(std::move(c), {a});
    return c;
  }

  LawCheck binary(std::string law, std::string statement,
                  const std::function<bool(ElementId, ElementId)> &holds) const {
    LawCheck c = start(std::move(law), std::move(statement));
    for (auto a : elems_)
      for (auto b : elems_)
        if (!holds(a, b))
          return fail(std::move(c), {a, b});
    return c;
  }

  LawCheck ternary(
      std::string law, std::string statement,
      const std::function<bool(ElementId, ElementId, ElementId)> &holds) const {
    LawCheck c = start(std::move(law), std::move(statement));
    for (auto a : elems_)
      for (auto b : elems_)
        for (auto x : elems_)
          if (!holds(a, b, x))
            return fail(std::move(c), {a, b, x});
    return c;
  }

  // `holds(family, b)`; families are every subset, or a seeded sample.
  LawCheck family(std::string law, std::string statement, std::uint64_t seed,
                  const std::function<bool(const ElementSet &, ElementId)>
                      &holds) const {
    LawCheck c = start(std::move(law), std::move(statement));
    const auto n = f_.size();
    auto check_one = [&](const ElementSet &fam) -> bool {
      for (auto b : elems_)
        if (!holds(fam, b)) {
          std::vector<ElementId> w;
          for (auto i : fam)
            w.emplace_back(i);
          w.push_back(b);
          c = fail(std::move(c), std::move(w));
          c.detail = "family " + describe(fam) + ", b = '" + f_.label(b) + "'";
          return false;
        }
      return true;
    };
    if (n <= kExhaustiveFamilyLimit) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
        if (!check_one(ElementSet::from_mask(n, mask)))
          return c;
    } else {
      std::mt19937_64 rng(seed);
      for (std::size_t k = 0; k < kSampledFamilies; ++k) {
        ElementSet fam(n);
        for (std::size_t i = 0; i < n; ++i)
          if (rng() & 1u)
            fam.set(i);
        if (!check_one(fam))
          return c;
      }
    }
    return c;
  }

private:
  std::string describe(const ElementSet &s) const {
    std::string out = "{";
    bool first = true;
    for (auto i : s) {
      if (!first)
        out += ", ";
      out += "'" + f_.label(ElementId(i)) + "'";
      first = false;
    }
    return out + "}";
  }

  LawCheck fail(LawCheck c, std::vector<ElementId> witness) const {
    c.passed = false;
    c.witness = std::move(witness);
    std::string d;
    static const char *names[] = {"a", "b", "c"};
    for (std::size_t i = 0; i < c.witness.size() && i < 3; ++i) {
      if (i)
        d += ", ";
      d += std::string(names[i]) + " = '" + f_.label(c.witness[i]) + "'";
    }
    c.detail = d;
    return c;
  }

  const Frame &f_;
  std::vector<ElementId> elems_;
};

} // namespace

HeytingLawReport verify_heyting_laws(const Frame &f, std::uint64_t seed) {
  LawRunner run(f);
  auto imp = [&](ElementId a, ElementId b) { return f.heyting(a, b); };
  auto m = [&](ElementId a, ElementId b) { return f.meet(a, b); };
  auto j = [&](ElementId a, ElementId b) { return f.join(a, b); };
  const auto one = f.top();

  HeytingLawReport r;
  r.laws.push_back(run.unary("H1", "1→a = a",
                             [&](ElementId a) { return imp(one, a) == a; }));
  r.laws.push_back(run.binary("H2", "a≤b ⟺ a→b = 1", [&](ElementId a, ElementId b) {
    return f.leq(a, b) == (imp(a, b) == one);
  }));
  r.laws.push_back(run.binary("H3", "a ≤ b→a", [&](ElementId a, ElementId b) {
    return f.leq(a, imp(b, a));
  }));
  r.laws.push_back(run.binary("H4", "a→b = a→(a∧b)", [&](ElementId a, ElementId b) {
    return imp(a, b) == imp(a, m(a, b));
  }));
  r.laws.push_back(run.binary("H5", "a∧(a→b) = a∧b", [&](ElementId a, ElementId b) {
    return m(a, imp(a, b)) == m(a, b);
  }));
  r.laws.push_back(run.ternary(
      "H6", "a∧b = a∧c ⟺ a→b = a→c", [&](ElementId a, ElementId b, ElementId c) {
        return (m(a, b) == m(a, c)) == (imp(a, b) == imp(a, c));
      }));
  r.laws.push_back(run.ternary(
      "H7", "(a∧b)→c = a→(b→c) = b→(a→c)",
      [&](ElementId a, ElementId b, ElementId c) {
        auto lhs = imp(m(a, b), c);
        return lhs == imp(a, imp(b, c)) && lhs == imp(b, imp(a, c));
      }));
  r.laws.push_back(run.binary("H8", "a = (a∨b)∧(b→a)", [&](ElementId a, ElementId b) {
    return a == m(j(a, b), imp(b, a));
  }));
  r.laws.push_back(run.binary("H9", "a ≤ (a→b)→b", [&](ElementId a, ElementId b) {
    return f.leq(a, imp(imp(a, b), b));
  }));
  r.laws.push_back(
      run.binary("H10", "((a→b)→b)→b = a→b", [&](ElementId a, ElementId b) {
        return imp(imp(imp(a, b), b), b) == imp(a, b);
      }));
  r.laws.push_back(run.family(
      "H11", "(⋁ a_i)→b = ⋀(a_i→b)", seed,
      [&](const ElementSet &fam, ElementId b) {
        ElementId rhs = one;
        for (auto i : fam)
          rhs = m(rhs, imp(ElementId(i), b));
        return imp(f.big_join(fam), b) == rhs;
      }));
  r.laws.push_back(run.family(
      "H12", "b→(⋀ a_i) = ⋀(b→a_i)", seed + 1,
      [&](const ElementSet &fam, ElementId b) {
        ElementId rhs = one;
        for (auto i : fam)
          rhs = m(rhs, imp(b, ElementId(i)));
        return imp(b, f.big_meet(fam)) == rhs;
      }));
  return r;
}

} // namespace finloc
