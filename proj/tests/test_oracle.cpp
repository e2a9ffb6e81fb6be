#include <gtest/gtest.h>

#include "liftaut/oracle.hpp"
#include "liftaut/todd_coxeter.hpp"
#include "support.hpp"

using namespace liftaut;

namespace {

struct Loaded {
  Presentation pres;
  FiniteGroup group;
};

Loaded load(const std::string& name) {
  const auto doc = parse_presentation_document(support::read_fixture(name));
  return {doc.presentation, todd_coxeter(doc.presentation, 10000).group};
}

/// |Aut| by checking every bijection-candidate tuple against the regular
/// permutation model: independent of the early-rejection search.
std::size_t count_automorphisms_naively(const Loaded& l) {
  const auto& g = l.group;
  std::size_t count = 0;
  std::vector<std::size_t> pick(l.pres.generator_count(), 0);
  const auto elems = g.elements();
  for (;;) {
    std::vector<Element> images;
    for (auto i : pick) images.push_back(elems[i]);
    const auto map = extend_to_homomorphism(g, images, g);
    if (map && std::set<Element>(map->begin(), map->end()).size() == g.order()) ++count;
    std::size_t i = pick.size();
    while (i > 0 && ++pick[i - 1] == elems.size()) pick[--i] = 0;
    if (i == 0) break;
  }
  return count;
}

}  // namespace

TEST(Oracle, AutomorphismGroupOrders) {
  EXPECT_EQ(bf_automorphism_group(load("c4.pres").pres, load("c4.pres").group).size(), 2u);
  const auto q8 = load("q8.pres");
  EXPECT_EQ(bf_automorphism_group(q8.pres, q8.group).size(), 24u);
  const auto h = load("heisenberg.pres");
  EXPECT_EQ(bf_automorphism_group(h.pres, h.group).size(), 432u);
  const auto m = load("metacyclic_x3.pres");
  EXPECT_EQ(bf_automorphism_group(m.pres, m.group).size(), 162u);
  const auto c = load("c2c2c4.pres");
  EXPECT_EQ(bf_automorphism_group(c.pres, c.group).size(), count_automorphisms_naively(c));
}

TEST(Oracle, AutomorphismGroupMatchesNaiveCount) {
  for (const auto& name : {"c6_x.pres", "q8.pres", "c2c4.pres", "heisenberg.pres"}) {
    const auto l = load(name);
    EXPECT_EQ(bf_automorphism_group(l.pres, l.group).size(), count_automorphisms_naively(l))
        << name;
  }
}

TEST(Oracle, CompositionTableIsAGroup) {
  const auto l = load("q8.pres");
  const auto t = bf_automorphism_group(l.pres, l.group);
  const auto& a = t.group;
  EXPECT_EQ(a.order(), 24u);
  EXPECT_EQ(t.automorphism(a.identity()).images, l.group.generators());
  // (alpha * beta)(x) = beta(alpha(x)).
  for (const auto& alpha : a.elements())
    for (const auto& beta : a.elements())
      for (const auto& x : l.group.elements())
        ASSERT_EQ(t.apply(a.multiply(alpha, beta), x), t.apply(beta, t.apply(alpha, x)));
  EXPECT_TRUE(std::is_sorted(t.automorphisms.begin(), t.automorphisms.end()));
  // Aut(Q8) is S4: center trivial.
  EXPECT_EQ(center(a).size(), 1u);
}

TEST(Oracle, QuotientAutomorphismCounts) {
  auto count = [](const std::string& name) {
    const auto s = support::load_setting(name);
    return bf_quotient_auts(s->presentation(), s->group(), s->subgroup()).size();
  };
  EXPECT_EQ(count("c4.pres"), 1u);
  EXPECT_EQ(count("c6_x.pres"), 1u);
  EXPECT_EQ(count("q8.pres"), 6u);          // GL(2,2)
  EXPECT_EQ(count("heisenberg.pres"), 48u);  // GL(2,3)
  EXPECT_EQ(count("metacyclic_x3.pres"), 48u);
}

TEST(Oracle, QuotientAutomorphismsAreValidAndDistinct) {
  const auto s = support::load_setting("metacyclic_x9.pres");
  const auto phis = bf_quotient_auts(s->presentation(), s->group(), s->subgroup());
  std::set<std::vector<Element>> images;
  for (const auto& phi : phis) {
    EXPECT_NO_THROW(validate_quotient_aut(phi, s->presentation(), s->group(), s->quotient()));
    std::vector<Element> im;
    for (const auto& w : phi.rep_words)
      im.push_back(s->quotient().project(evaluate_at_generators(w, s->group())));
    images.insert(im);
  }
  EXPECT_EQ(images.size(), phis.size());
}

TEST(Oracle, LiftCountsOnSmallFixtures) {
  const auto c4 = support::load_setting("c4.pres");
  const auto p = make_lift_problem(c4, identity_quotient_aut(c4->presentation()));
  EXPECT_EQ(bf_hom_lifts(p).size(), 2u);
  EXPECT_EQ(bf_aut_lifts(p).size(), 2u);
  const auto c6 = support::load_setting("c6_x2.pres");
  const auto q = make_lift_problem(c6, identity_quotient_aut(c6->presentation()));
  EXPECT_EQ(bf_hom_lifts(q).size(), 3u);
  EXPECT_EQ(bf_aut_lifts(q).size(), 2u);
}

TEST(Oracle, CompareReportsMatchAndMismatch) {
  const auto s = support::load_setting("q8.pres");
  for (const auto& phi : bf_quotient_auts(s->presentation(), s->group(), s->subgroup())) {
    const auto p = make_lift_problem(s, phi);
    const auto ok = compare(p);
    EXPECT_TRUE(ok.match);
    EXPECT_FALSE(ok.counterexample.has_value());
    EXPECT_EQ(ok.solver_hom, 4u);
    EXPECT_EQ(ok.oracle_aut, 4u);

    auto hom = solve_hom_lifts(p);
    const auto dropped = hom.lifts.back().psi;
    hom.lifts.pop_back();
    const auto bad = compare_reports(p, hom, solve_aut_lifts(p));
    EXPECT_FALSE(bad.match);
    ASSERT_TRUE(bad.counterexample.has_value());
    EXPECT_EQ(bad.counterexample->side, "oracle-only");
    EXPECT_EQ(bad.counterexample->psi, dropped);
  }
}

TEST(Oracle, BudgetExceeded) {
  const auto s = support::load_setting("metacyclic_x3.pres");
  const auto p = make_lift_problem(s, identity_quotient_aut(s->presentation()));
  try {
    bf_hom_lifts(p, OracleBudget{10, 10});
    FAIL();
  } catch (const LiftError& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
  EXPECT_THROW(bf_automorphism_group(s->presentation(), s->group(), OracleBudget{10, 100}),
               LiftError);
}
