#ifndef LIFTAUT_ORACLE_HPP
#define LIFTAUT_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "liftaut/error.hpp"
#include "liftaut/group.hpp"
#include "liftaut/lifting.hpp"
#include "liftaut/presentation.hpp"

// Exhaustive ground truth. Nothing here touches exponent matrices, residue
// vectors or the linear solver.

namespace liftaut {

struct OracleBudget {
  /// Cap on candidate tuples for lift enumeration (|N|^n).
  std::uint64_t lift_candidates = 1'000'000;
  /// Cap on candidate tuples for automorphism-group enumeration (|G|^n).
  std::uint64_t aut_candidates = 100'000'000;
};

namespace detail {

inline void check_budget(std::size_t base, std::size_t exponent,
                         std::uint64_t budget, const std::string& what) {
  long double total = 1;
  for (std::size_t i = 0; i < exponent; ++i) total *= static_cast<long double>(base);
  if (total > static_cast<long double>(budget))
    throw LiftError(ErrorCode::BudgetExceeded,
                    what + ": " + std::to_string(base) + "^" +
                        std::to_string(exponent) + " candidates exceed the budget of " +
                        std::to_string(budget));
}

/// Depth-first search over tuples g_i in candidates[i]. Each relator is
/// checked as soon as the last generator it mentions is assigned, shortest
/// relators first, so failing prefixes are cut early.
template <class Visit>
void search_relator_tuples(const Presentation& pres, const FiniteGroup& g,
                           const std::vector<std::vector<Element>>& candidates,
                           Visit&& visit) {
  const std::size_t n = pres.generator_count();
  std::vector<std::vector<const FreeWord*>> due(n);
  for (const auto& r : pres.relators) {
    if (r.empty()) continue;
    std::size_t last = 0;
    for (const auto& l : r.letters()) last = std::max(last, l.gen);
    due[last].push_back(&r);
  }
  for (auto& d : due)
    std::stable_sort(d.begin(), d.end(), [](const FreeWord* a, const FreeWord* b) {
      return a->length() < b->length();
    });

  std::vector<Element> tuple(n, g.identity());
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      visit(tuple);
      return;
    }
    for (const auto& c : candidates[i]) {
      tuple[i] = c;
      bool ok = true;
      for (const auto* r : due[i])
        if (evaluate(*r, tuple, g) != g.identity()) {
          ok = false;
          break;
        }
      if (ok) self(self, i + 1);
    }
  };
  recurse(recurse, 0);
}

}  // namespace detail

/// All tuples g with g_i in xbar_i N at which every relator vanishes.
inline std::set<Endomorphism> bf_hom_lifts(const LiftProblem& p,
                                           const OracleBudget& budget = {}) {
  const auto& g = p.group();
  const auto& n_elems = p.setting->subgroup();
  const std::size_t n = p.presentation().generator_count();
  detail::check_budget(n_elems.size(), n, budget.lift_candidates, "lift oracle");

  std::vector<std::vector<Element>> candidates(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& z : n_elems)
      candidates[i].push_back(g.multiply(p.representatives[i], z));

  std::set<Endomorphism> out;
  detail::search_relator_tuples(p.presentation(), g, candidates,
                                [&](const std::vector<Element>& t) {
                                  out.insert(Endomorphism{t});
                                });
  return out;
}

/// The homomorphic lifts that are bijective (image is all of G).
inline std::set<Endomorphism> bf_aut_lifts(const LiftProblem& p,
                                           const OracleBudget& budget = {}) {
  std::set<Endomorphism> out;
  for (const auto& psi : bf_hom_lifts(p, budget))
    if (generates(p.group(), psi.images)) out.insert(psi);
  return out;
}

/// Aut(G) as image tuples, composition maps and a composition engine.
/// Product convention matches permutations: a*b applies a first, then b.
struct AutGroupTable {
  FiniteGroup base;
  /// Sorted lexicographically by image indices.
  std::vector<Endomorphism> automorphisms;
  /// element_maps[a][x] = image of base element x under automorphism a.
  std::vector<std::vector<Element>> element_maps;
  /// Element index i corresponds to automorphisms[i].
  FiniteGroup group;

  std::size_t size() const noexcept { return automorphisms.size(); }

  std::optional<std::size_t> find(const std::vector<Element>& images) const {
    const auto it = std::lower_bound(automorphisms.begin(), automorphisms.end(),
                                     Endomorphism{images});
    if (it == automorphisms.end() || it->images != images) return std::nullopt;
    return static_cast<std::size_t>(it - automorphisms.begin());
  }

  Element element_of(const std::vector<Element>& images) const {
    const auto i = find(images);
    if (!i)
      throw LiftError(ErrorCode::NotInSubgroup, "tuple is not an automorphism");
    return group.element(*i);
  }

  const Endomorphism& automorphism(Element a) const {
    return automorphisms[group.check(a).index];
  }

  Element apply(Element a, Element x) const {
    return element_maps[group.check(a).index][base.check(x).index];
  }
};

/// Enumerates Aut(G) by brute force over image tuples. Images must have the
/// same order as the generators they replace, satisfy every relator
/// (checked with early rejection) and generate G.
inline AutGroupTable bf_automorphism_group(const Presentation& pres,
                                           const FiniteGroup& g,
                                           const OracleBudget& budget = {}) {
  check_realizes(pres, g);
  const std::size_t n = pres.generator_count();
  detail::check_budget(g.order(), n, budget.aut_candidates, "automorphism oracle");

  std::vector<std::int64_t> orders;
  for (const auto& e : g.elements()) orders.push_back(element_order(g, e));
  std::vector<std::vector<Element>> candidates(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& e : g.elements())
      if (orders[e.index] == orders[g.generator(i).index]) candidates[i].push_back(e);

  AutGroupTable table;
  table.base = g;
  detail::search_relator_tuples(pres, g, candidates,
                                [&](const std::vector<Element>& t) {
                                  if (generates(g, t))
                                    table.automorphisms.push_back(Endomorphism{t});
                                });
  std::sort(table.automorphisms.begin(), table.automorphisms.end());

  for (const auto& a : table.automorphisms) {
    auto map = extend_to_homomorphism(g, a.images, g);
    if (!map)
      throw LiftError(ErrorCode::AssertionFailed,
                      "relator-satisfying tuple failed to extend");
    table.element_maps.push_back(std::move(*map));
  }

  const std::size_t size = table.automorphisms.size();
  std::uint32_t identity = 0;
  std::vector<std::uint32_t> mult(size * size);
  std::vector<Element> images(n);
  for (std::size_t a = 0; a < size; ++a) {
    if (table.automorphisms[a].images == g.generators())
      identity = static_cast<std::uint32_t>(a);
    for (std::size_t b = 0; b < size; ++b) {
      for (std::size_t i = 0; i < n; ++i)
        images[i] = table.element_maps[b][table.automorphisms[a].images[i].index];
      const auto c = table.find(images);
      if (!c)
        throw LiftError(ErrorCode::AssertionFailed,
                        "automorphisms not closed under composition");
      mult[a * size + b] = static_cast<std::uint32_t>(*c);
    }
  }

  table.group = FiniteGroup::from_table(
      mult, size, identity, detail::greedy_generators(mult, size, identity));
  return table;
}

/// Aut(G/N), one QuotientAutSpec per automorphism. Candidate image tuples on
/// the quotient are tested for extending to an endomorphism via Cayley-graph
/// consistency, then for surjectivity. Representative words are the
/// shortlex words of the images in the quotient, read as words of G.
inline std::vector<QuotientAutSpec> bf_quotient_auts(
    const Presentation& pres, const FiniteGroup& g,
    const std::vector<Element>& subgroup, const OracleBudget& budget = {}) {
  check_realizes(pres, g);
  const auto quotient = quotient_engine(g, subgroup);
  const auto& q = quotient.group;
  const std::size_t n = pres.generator_count();
  detail::check_budget(q.order(), n, budget.aut_candidates, "quotient automorphism oracle");

  std::vector<std::int64_t> orders;
  for (const auto& e : q.elements()) orders.push_back(element_order(q, e));
  std::vector<std::vector<Element>> candidates(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& e : q.elements())
      if (orders[e.index] == orders[q.generator(i).index]) candidates[i].push_back(e);

  const auto words = shortlex_words(q);
  std::vector<QuotientAutSpec> out;
  std::vector<std::size_t> pick(n, 0);
  if (std::any_of(candidates.begin(), candidates.end(),
                  [](const auto& c) { return c.empty(); }))
    return out;
  std::vector<Element> images(n);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) images[i] = candidates[i][pick[i]];
    if (generates(q, images) && extend_to_homomorphism(q, images, q)) {
      QuotientAutSpec spec;
      for (const auto& e : images) spec.rep_words.push_back(words[e.index]);
      out.push_back(std::move(spec));
    }
    std::size_t i = n;
    while (i > 0 && ++pick[i - 1] == candidates[i - 1].size()) pick[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

struct Counterexample {
  /// "homomorphic" or "automorphic".
  std::string kind;
  /// "solver-only" or "oracle-only".
  std::string side;
  Endomorphism psi;
  /// Solver coordinates, when the endomorphism came from the solver.
  std::vector<BigVector> v;
};

struct ComparisonReport {
  QuotientAutSpec phi;
  std::size_t solver_hom = 0;
  std::size_t oracle_hom = 0;
  std::size_t solver_aut = 0;
  std::size_t oracle_aut = 0;
  bool match = false;
  std::optional<Counterexample> counterexample;
};

namespace detail {

inline std::optional<Counterexample> first_difference(
    const std::string& kind, const LiftReport& report,
    const std::set<Endomorphism>& oracle) {
  const auto solver = report.endomorphisms();
  std::optional<Counterexample> best;
  for (const auto& l : report.lifts)
    if (!oracle.count(l.psi) && (!best || l.psi < best->psi))
      best = Counterexample{kind, "solver-only", l.psi, l.v};
  if (best) return best;
  for (const auto& psi : oracle)
    if (!solver.count(psi)) return Counterexample{kind, "oracle-only", psi, {}};
  return std::nullopt;
}

}  // namespace detail

/// Compares solver reports against the exhaustive oracle, as sets.
inline ComparisonReport compare_reports(const LiftProblem& p,
                                        const LiftReport& hom,
                                        const LiftReport& aut,
                                        const OracleBudget& budget = {}) {
  const auto oracle_hom = bf_hom_lifts(p, budget);
  std::set<Endomorphism> oracle_aut;
  for (const auto& psi : oracle_hom)
    if (generates(p.group(), psi.images)) oracle_aut.insert(psi);

  ComparisonReport r;
  r.phi = p.phi;
  r.solver_hom = hom.lifts.size();
  r.oracle_hom = oracle_hom.size();
  r.solver_aut = aut.lifts.size();
  r.oracle_aut = oracle_aut.size();
  r.counterexample = detail::first_difference("homomorphic", hom, oracle_hom);
  if (!r.counterexample)
    r.counterexample = detail::first_difference("automorphic", aut, oracle_aut);
  r.match = !r.counterexample && r.solver_hom == hom.endomorphisms().size() &&
            r.solver_aut == aut.endomorphisms().size();
  return r;
}

inline ComparisonReport compare(const LiftProblem& p,
                                const OracleBudget& budget = {}) {
  return compare_reports(p, solve_hom_lifts(p), solve_aut_lifts(p), budget);
}

}  // namespace liftaut

#endif  // LIFTAUT_ORACLE_HPP
