#include "finloc/invariants.hpp"

#include <functional>

#include "finloc/demorgan.hpp"
#include "finloc/errors.hpp"
#include "finloc/heyting_laws.hpp"

namespace finloc {

namespace {

class Collector {
public:
  explicit Collector(const Frame &f) : f_(f) {}

  void fail(std::string law, std::string detail,
            std::initializer_list<ElementId> witness = {}) {
    LawFailure lf{std::move(law), std::move(detail), {}};
    for (auto w : witness)
      lf.witness.push_back(f_.label(w));
    out.push_back(std::move(lf));
  }

  // Runs `body`, turning an IntegrityError into a failure under `law`.
  void guard(const std::string &law, const std::function<void()> &body) {
    try {
      body();
    } catch (const IntegrityError &e) {
      fail(law, e.what());
    }
  }

  std::string set_label(const ElementSet &s) const {
    std::string out = "{";
    bool first = true;
    for (auto i : s) {
      out += (first ? "" : ", ") + f_.label(ElementId(i));
      first = false;
    }
    return out + "}";
  }

  std::vector<LawFailure> out;

private:
  const Frame &f_;
};

void check_adjunction(const Frame &f, Collector &c) {
  for (auto a : f.elements())
    for (auto b : f.elements())
      for (auto x : f.elements())
        if (f.leq(x, f.heyting(a, b)) != f.leq(f.meet(a, x), b)) {
          c.fail("adjunction", "c ≤ a→b disagrees with a∧c ≤ b", {a, b, x});
          return;
        }
}

void check_dense_elements(const Frame &f, Collector &c) {
  for (auto a : f.elements()) {
    bool of_form = false;
    for (auto b : f.elements())
      if (f.join(b, f.pseudocomplement(b)) == a)
        of_form = true;
    if (f.is_dense_element(a) != of_form) {
      c.fail("dense-element", "dense elements are exactly those of the form b∨b*",
             {a});
      return;
    }
  }
}

void check_open_closed(const Frame &f, Collector &c) {
  const auto whole = whole_sublocale(f);
  const auto none = void_sublocale(f);
  for (auto a : f.elements()) {
    auto o = open_sublocale(f, a);
    auto k = closed_sublocale(f, a);
    if (!is_sublocale(f, o.members()) || !is_sublocale(f, k.members()))
      c.fail("open-closed", "o(a) or c(a) is not a sublocale", {a});
    else if (!(intersect_sublocales(std::vector<Sublocale>{o, k}) == none))
      c.fail("open-closed", "o(a) ∩ c(a) is not the void sublocale", {a});
    else if (!(join_sublocales(std::vector<Sublocale>{o, k}) == whole))
      c.fail("open-closed", "o(a) ∨ c(a) is not L", {a});
    else if (!(closure(o) == closed_sublocale(f, f.pseudocomplement(a))))
      c.fail("open-closed", "closure of o(a) is not c(a*)", {a});
    else
      continue;
    return;
  }
}

void check_structure(const Frame &f, Collector &c) {
  c.guard("booleanization", [&] {
    auto b = booleanization(f);
    auto m = demorganization(f);
    if (!b.is_subset_of(m))
      c.fail("B⊆M", "booleanization is not contained in the DeMorganization");
    if (!is_dense(b) || !is_dense(m))
      c.fail("dense", "B_L or M_L is not dense");
    if (!is_fitted(b))
      c.fail("fitted-B", "booleanization is not fitted");
    if (!is_fitted(m))
      c.fail("fitted-M", "DeMorganization is not fitted");
    if (!is_boolean(b))
      c.fail("boolean-B", "booleanization is not a Boolean frame");
    if (!is_extremally_disconnected(m))
      c.fail("ed-M", "DeMorganization is not extremally disconnected");
    if (is_extremally_disconnected(f) != (m.size() == f.size()))
      c.fail("ed⟺M=L", "extremal disconnectedness disagrees with M_L = L");
    if (is_boolean(f) != (b.size() == f.size()))
      c.fail("boolean⟺B=L", "Booleanness disagrees with B_L = L");
    if (!(booleanization_via_dense_opens(f) == b))
      c.fail("booleanization", "dense-open intersection differs");
  });
}

void check_sublocale(const Frame &f, const Sublocale &s, const Sublocale &b,
                     Collector &c) {
  const auto nu = nucleus_of(s);
  for (auto a : f.elements()) {
    auto v = nu(a);
    if (!f.leq(a, v) || nu(v) != v || !s.contains(v)) {
      c.fail("nucleus", "ν is not an inflationary idempotent onto " +
                            c.set_label(s.members()), {a});
      return;
    }
    if ((v == a) != s.contains(a)) {
      c.fail("nucleus", "fixed points of ν differ from " + c.set_label(s.members()),
             {a});
      return;
    }
    for (auto x : f.elements())
      if (nu(f.meet(a, x)) != f.meet(v, nu(x))) {
        c.fail("nucleus", "ν does not preserve meets on " +
                              c.set_label(s.members()), {a, x});
        return;
      }
    for (auto m : s.members())
      if (f.heyting(v, ElementId(m)) != f.heyting(a, ElementId(m))) {
        c.fail("LM", "ν(a)→s ≠ a→s in " + c.set_label(s.members()),
               {a, ElementId(m)});
        return;
      }
  }

  auto fit = fitting(s);
  if (!s.is_subset_of(fit) || !is_fitted(fit) || !(fitting(fit) == fit))
    c.fail("fitting", "fitting is not a closure onto fitted sublocales for " +
                          c.set_label(s.members()));

  if (!is_dense(s))
    return;
  if (!b.is_subset_of(s))
    c.fail("least-dense", "booleanization is not below dense " +
                              c.set_label(s.members()));
  auto nearly = verify_nearly_open(f, s);
  if (!nearly.passed) {
    LawFailure lf{"nearly-open", "ν(a*) ≠ ν(a)* in " + c.set_label(s.members()), {}};
    for (auto w : nearly.witnesses)
      lf.witness.push_back(f.label(w));
    c.out.push_back(std::move(lf));
  }
}

} // namespace

std::vector<LawFailure> check_invariants(const Frame &f,
                                         const InvariantOptions &options) {
  Collector c(f);
  for (const auto &law : verify_heyting_laws(f, options.seed).failures()) {
    LawFailure lf{law.law, law.statement + ": " + law.detail, {}};
    for (auto w : law.witness)
      lf.witness.push_back(f.label(w));
    c.out.push_back(std::move(lf));
  }
  // Everything below presumes a lawful implication.
  if (!c.out.empty())
    return std::move(c.out);

  check_adjunction(f, c);
  check_dense_elements(f, c);
  check_open_closed(f, c);
  check_structure(f, c);
  if (!c.out.empty() || f.size() > options.limits.max_elements)
    return std::move(c.out);

  c.guard("sublocales", [&] {
    auto b = booleanization(f);
    for (const auto &s : enumerate_sublocales(f, options.limits))
      check_sublocale(f, s, b, c);
    // Exhaustive only for small S(L); the sampled mode keeps corpus sweeps fast.
    auto coframe = verify_coframe_law(f, options.coframe_samples, options.seed,
                                      40, options.limits);
    if (!coframe.passed)
      c.fail("coframe", coframe.witness);
  });
  return std::move(c.out);
}

} // namespace finloc
