#ifndef LIFTAUT_CASESTUDY_HPP
#define LIFTAUT_CASESTUDY_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "liftaut/error.hpp"
#include "liftaut/group.hpp"
#include "liftaut/lifting.hpp"
#include "liftaut/oracle.hpp"
#include "liftaut/presentation.hpp"
#include "liftaut/todd_coxeter.hpp"

namespace liftaut {

/// The metacyclic group G = <x, y | x^{p^{n-1}}, y^p, x^y = x^{1+p^{n-2}}>
/// of order p^n (p odd, n >= 4) and its automorphism group A = Aut(G).
struct CaseStudyConfig {
  std::int64_t p = 3;
  std::int64_t n = 4;
  /// Upper bound on |A| = (p-1) p^n.
  std::int64_t max_aut_order = 5000;
  std::size_t max_cosets = 200'000;
  OracleBudget budget;
};

namespace detail {

inline std::int64_t ipow(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline bool is_prime(std::int64_t m) {
  if (m < 2) return false;
  for (std::int64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  return to_int64(inverse_mod(BigInt(a), BigInt(m)));
}

/// Multiplicative order of a modulo m (a coprime to m).
inline std::int64_t multiplicative_order(std::int64_t a, std::int64_t m) {
  std::int64_t k = 1, x = a % m;
  while (x != 1 % m) {
    x = x * a % m;
    ++k;
  }
  return k;
}

inline std::vector<std::int64_t> primitive_roots(std::int64_t m) {
  std::int64_t phi = 0;
  for (std::int64_t u = 1; u < m; ++u)
    if (std::gcd(u, m) == 1) ++phi;
  std::vector<std::int64_t> out;
  for (std::int64_t a = 2; a < m; ++a)
    if (std::gcd(a, m) == 1 && multiplicative_order(a, m) == phi) out.push_back(a);
  return out;
}

[[noreturn]] inline void assertion_failed(const std::string& step) {
  throw LiftError(ErrorCode::AssertionFailed, step);
}

}  // namespace detail

inline void check_config(const CaseStudyConfig& cfg) {
  if (cfg.p == 2) throw LiftError(ErrorCode::Config, "p must be odd");
  if (!detail::is_prime(cfg.p)) throw LiftError(ErrorCode::Config, "p must be an odd prime");
  if (cfg.n < 4) throw LiftError(ErrorCode::Config, "n must be >= 4");
  const long double aut_order =
      static_cast<long double>(cfg.p - 1) * std::pow(static_cast<long double>(cfg.p),
                                                     static_cast<long double>(cfg.n));
  if (aut_order > static_cast<long double>(cfg.max_aut_order))
    throw LiftError(ErrorCode::Config,
                    "(p-1)p^n exceeds the configured limit of " +
                        std::to_string(cfg.max_aut_order));
}

inline Presentation metacyclic_presentation(const CaseStudyConfig& cfg) {
  check_config(cfg);
  const auto x = FreeWord::generator(0), y = FreeWord::generator(1);
  const std::int64_t twist = 1 + detail::ipow(cfg.p, cfg.n - 2);
  return Presentation{
      {"x", "y"},
      {FreeWord::generator(0, detail::ipow(cfg.p, cfg.n - 1)),
       FreeWord::generator(1, cfg.p),
       inverse(y) * x * y * FreeWord::generator(0, -twist)}};
}

/// The three-generator presentation of A with parameters a, j, k.
/// a enters literally; a^{-1} is taken modulo p.
inline Presentation aut_presentation(const CaseStudyConfig& cfg, std::int64_t a,
                                         std::int64_t j, std::int64_t k) {
  const auto x1 = FreeWord::generator(0), x2 = FreeWord::generator(1),
             x3 = FreeWord::generator(2);
  const std::int64_t p = cfg.p;
  const std::int64_t e = (p - 1) * detail::ipow(p, cfg.n - 3);
  const std::int64_t a_inv = detail::mod_inverse(a % p, p);
  return Presentation{
      {"x1", "x2", "x3"},
      {FreeWord::generator(0, p), FreeWord::generator(1, p),
       FreeWord::generator(2, (p - 1) * detail::ipow(p, cfg.n - 2)),
       FreeWord::generator(0, -a) * inverse(x3) * x1 * x3 * FreeWord::generator(2, j * e),
       FreeWord::generator(1, -a_inv) * inverse(x3) * x2 * x3 *
           FreeWord::generator(2, k * e),
       inverse(x1) * inverse(x2) * x1 * x2 * FreeWord::generator(2, -e)}};
}

struct GeneratorData {
  Element x1, x2, x3;
  std::int64_t a = 0;
  std::int64_t a_inverse = 0;  // modulo p
  std::int64_t j = 0;
  std::int64_t k = 0;
  /// The modulus a was drawn as a primitive root of: p^{n-2} or p^{n-1}.
  std::int64_t a_modulus = 0;
  bool x1_is_conjugation_by_x = false;
};

/// G, A = Aut(G) and the standard generators of A.
struct AutomorphismGroupA {
  CaseStudyConfig cfg;
  Presentation g_presentation;
  PermutationEngine g_engine;
  AutGroupTable table;
  GeneratorData data;
  Presentation presentation;
  /// A with generators (x1, x2, x3); same elements as table.group.
  FiniteGroup group;
  /// Order of the group the found presentation defines (coset enumeration).
  std::size_t presentation_order = 0;

  const FiniteGroup& g() const { return g_engine.group; }

  /// Conjugation h -> c^{-1} h c as an element of A.
  Element conjugation(Element c) const {
    const auto& gg = g();
    return table.element_of({conjugate(gg, gg.generator(0), c),
                             conjugate(gg, gg.generator(1), c)});
  }
};

/// Builds G by coset enumeration, A by brute force, then searches for
/// (a, j, k, x1, x2, x3) satisfying the six relators with <x1,x2,x3> = A.
inline AutomorphismGroupA build_aut_A(const CaseStudyConfig& cfg) {
  check_config(cfg);
  AutomorphismGroupA out;
  out.cfg = cfg;
  out.g_presentation = metacyclic_presentation(cfg);
  out.g_engine = todd_coxeter(out.g_presentation, cfg.max_cosets);
  const std::int64_t p = cfg.p;
  if (static_cast<std::int64_t>(out.g().order()) != detail::ipow(p, cfg.n))
    detail::assertion_failed("|G| != p^n");

  out.table = bf_automorphism_group(out.g_presentation, out.g(), cfg.budget);
  const auto& a_group = out.table.group;
  if (static_cast<std::int64_t>(a_group.order()) != (p - 1) * detail::ipow(p, cfg.n))
    detail::assertion_failed("|Aut(G)| != (p-1)p^n");

  const std::int64_t x3_order = (p - 1) * detail::ipow(p, cfg.n - 2);
  const std::int64_t e = (p - 1) * detail::ipow(p, cfg.n - 3);
  std::vector<std::int64_t> orders;
  for (const auto& el : a_group.elements()) orders.push_back(element_order(a_group, el));

  std::set<Element> inner;
  for (const auto& c : out.g().elements()) inner.insert(out.conjugation(c));
  const Element conj_x = out.conjugation(out.g().generator(0));

  std::vector<Element> x3_cands, order_p;
  for (const auto& el : a_group.elements()) {
    if (orders[el.index] == x3_order) x3_cands.push_back(el);
    if (orders[el.index] == p) order_p.push_back(el);
  }
  // x1: conjugation by x first, then the rest of Inn(G), then everything else.
  std::vector<Element> x1_cands;
  if (orders[conj_x.index] == p) x1_cands.push_back(conj_x);
  for (const auto& el : order_p)
    if (el != conj_x && inner.count(el)) x1_cands.push_back(el);
  for (const auto& el : order_p)
    if (!inner.count(el)) x1_cands.push_back(el);

  const auto& A = a_group;
  const auto one = A.identity();
  for (const std::int64_t modulus : {detail::ipow(p, cfg.n - 2), detail::ipow(p, cfg.n - 1)}) {
    for (const std::int64_t a : detail::primitive_roots(modulus)) {
      const std::int64_t a_inv = detail::mod_inverse(a % p, p);
      for (const auto& x3 : x3_cands) {
        const auto x3_inv = A.inverse(x3);
        const auto x3_e = power(A, x3, e);
        for (const auto& x1 : x1_cands) {
          // x1^{-a} x3^{-1} x1 x3 x3^{j e} = 1
          const auto t1 = A.multiply(power(A, x1, -a), A.multiply(A.multiply(x3_inv, x1), x3));
          std::optional<std::int64_t> j;
          for (std::int64_t c = 0; c < p && !j; ++c)
            if (A.multiply(t1, power(A, x3_e, c)) == one) j = c;
          if (!j) continue;
          for (const auto& x2 : order_p) {
            if (A.multiply(commutator(A, x1, x2), A.inverse(x3_e)) != one) continue;
            const auto t2 =
                A.multiply(power(A, x2, -a_inv), A.multiply(A.multiply(x3_inv, x2), x3));
            std::optional<std::int64_t> k;
            for (std::int64_t c = 0; c < p && !k; ++c)
              if (A.multiply(t2, power(A, x3_e, c)) == one) k = c;
            if (!k || !generates(A, {x1, x2, x3})) continue;

            out.data = GeneratorData{x1, x2, x3, a, a_inv, *j, *k, modulus, x1 == conj_x};
            out.presentation = aut_presentation(cfg, a, *j, *k);
            out.group = A.with_generators({x1, x2, x3});
            check_realizes(out.presentation, out.group);
            out.presentation_order = todd_coxeter(out.presentation, cfg.max_cosets).degree;
            if (out.presentation_order != A.order())
              detail::assertion_failed("found presentation does not define a group of order |A|");
            return out;
          }
        }
      }
    }
  }
  throw LiftError(ErrorCode::SearchFailed,
                  "no (a, j, k, x1, x2, x3) satisfies the presentation of Aut(G)");
}

inline std::int64_t center_generator_exponent(const CaseStudyConfig& cfg) {
  return cfg.p - 1;
}

/// Z(A) by exhaustive commutation; must equal <x3^{p-1}> of order p^{n-2}.
inline std::vector<Element> verify_center(const AutomorphismGroupA& a) {
  const auto& A = a.group;
  const auto z = center(A);
  const auto z_gen = power(A, a.data.x3, a.cfg.p - 1);
  if (z != subgroup_closure(A, std::vector<Element>{z_gen}))
    detail::assertion_failed("Z(A) != <x3^(p-1)>");
  if (static_cast<std::int64_t>(z.size()) != detail::ipow(a.cfg.p, a.cfg.n - 2))
    detail::assertion_failed("|Z(A)| != p^(n-2)");
  return z;
}

/// Inn(G) computed as all conjugations; must equal <x1, x3^{(p-1)p^{n-3}}>.
inline std::vector<Element> verify_inner(const AutomorphismGroupA& a) {
  std::set<Element> direct;
  for (const auto& c : a.g().elements()) direct.insert(a.conjugation(c));
  const std::vector<Element> inner(direct.begin(), direct.end());
  const auto e = (a.cfg.p - 1) * detail::ipow(a.cfg.p, a.cfg.n - 3);
  const auto generated =
      subgroup_closure(a.group, std::vector<Element>{a.data.x1, power(a.group, a.data.x3, e)});
  if (inner != generated) detail::assertion_failed("Inn(G) != <x1, x3^((p-1)p^(n-3))>");
  if (inner.size() * center(a.g()).size() != a.g().order())
    detail::assertion_failed("|Inn(G)| != |G/Z(G)|");
  return inner;
}

struct SurjectivityReport {
  std::size_t quotient_order = 0;
  std::size_t quotient_aut_count = 0;
  std::size_t expected_fiber = 0;
  /// Per phi, in bf_quotient_auts order.
  std::vector<std::size_t> hom_counts;
  std::vector<std::size_t> aut_counts;
  std::size_t aut_a_order = 0;
  bool every_phi_lifts = false;
  bool all_lifts_automorphic = false;
  bool residues_as_predicted = false;
  bool representative_independent = false;
  bool order_consistent = false;
};

/// Lifts every phi in Aut(A/Z). Each must have exactly p^{n-3} homomorphic
/// lifts, all automorphic; |Aut(A)| must be p^{n-3} |Aut(A/Z)|. With
/// representatives of x1, x2 taken inside K = <x1, x2>, w_1..w_3 vanish and
/// p^{n-3} divides w_4..w_6.
inline SurjectivityReport verify_pi_surjective(const AutomorphismGroupA& a,
                                               const std::vector<Element>& z) {
  const auto& A = a.group;
  const std::int64_t p = a.cfg.p;
  const std::int64_t fiber = detail::ipow(p, a.cfg.n - 3);
  const auto setting = LiftSetting::create(
      a.presentation, A,
      CentralSubgroupSpec{{FreeWord::generator(2, center_generator_exponent(a.cfg))}});
  if (setting->subgroup() != z) detail::assertion_failed("central spec does not give Z");

  SurjectivityReport r;
  r.quotient_order = setting->quotient().group.order();
  r.expected_fiber = static_cast<std::size_t>(fiber);
  const auto phis = bf_quotient_auts(a.presentation, A, z, a.cfg.budget);
  r.quotient_aut_count = phis.size();

  const auto k_group = subgroup_closure(A, std::vector<Element>{a.data.x1, a.data.x2});
  const auto words = shortlex_words(A);
  r.every_phi_lifts = r.all_lifts_automorphic = true;
  r.residues_as_predicted = r.representative_independent = true;

  for (const auto& phi : phis) {
    const auto problem = make_lift_problem(setting, phi);
    const auto hom = solve_hom_lifts(problem);
    const auto aut = solve_aut_lifts(problem);
    r.hom_counts.push_back(hom.lifts.size());
    r.aut_counts.push_back(aut.lifts.size());
    if (hom.lifts.size() != r.expected_fiber) r.every_phi_lifts = false;
    if (aut.endomorphisms() != hom.endomorphisms()) r.all_lifts_automorphic = false;

    QuotientAutSpec in_k = phi;
    for (std::size_t i = 0; i < 2; ++i) {
      std::optional<Element> rep;
      for (const auto& zz : z) {
        const auto cand = A.multiply(problem.representatives[i], zz);
        if (std::binary_search(k_group.begin(), k_group.end(), cand) && (!rep || cand < *rep))
          rep = cand;
      }
      if (!rep) detail::assertion_failed("phi(x_i Z) does not meet K");
      in_k.rep_words[i] = words[rep->index];
    }
    const auto normalized = make_lift_problem(setting, in_k);
    const auto w = build_residue_vector(normalized)[0];
    for (std::size_t row = 0; row < 3; ++row)
      if (w[row] != 0) r.residues_as_predicted = false;
    for (std::size_t row = 3; row < 6; ++row)
      if (w[row] % fiber != 0) r.residues_as_predicted = false;
    if (solve_hom_lifts(normalized).endomorphisms() != hom.endomorphisms())
      r.representative_independent = false;
  }

  r.aut_a_order = bf_automorphism_group(a.presentation, A, a.cfg.budget).size();
  r.order_consistent = r.aut_a_order == r.expected_fiber * r.quotient_aut_count;
  if (!r.every_phi_lifts) detail::assertion_failed("some phi does not have p^(n-3) lifts");
  if (!r.all_lifts_automorphic) detail::assertion_failed("some lift is not automorphic");
  if (!r.residues_as_predicted) detail::assertion_failed("residue vector shape");
  if (!r.representative_independent) detail::assertion_failed("lifts depend on representatives");
  if (!r.order_consistent) detail::assertion_failed("|Aut(A)| != p^(n-3) |Aut(A/Z)|");
  return r;
}

struct WitnessReport {
  QuotientAutSpec phi;
  Endomorphism psi;
  std::vector<Element> inner;        // I
  std::vector<Element> inner_center;  // IZ
  std::vector<Element> psi_inner;     // psi(I)
  std::vector<Element> psi_inner_center;
  bool phi_is_quotient_automorphism = false;
  bool phi_moves_iz_mod_z = false;
  bool psi_fixes_z = false;
  std::size_t automorphic_lift_count = 0;
  bool verdict = false;
};

/// phi = (x2^{a^{-1}}, x1^a, x3^{-1}) on A/Z, lifted to psi in Aut(A) with
/// psi(I) != I.
inline WitnessReport noncharacteristic_witness(const AutomorphismGroupA& a,
                                               const std::vector<Element>& z,
                                               const std::vector<Element>& inner) {
  const auto& A = a.group;
  WitnessReport r;
  r.inner = inner;
  r.phi.rep_words = {FreeWord::generator(1, a.data.a_inverse),
                     FreeWord::generator(0, a.data.a), FreeWord::generator(2, -1)};

  const auto setting = LiftSetting::create(
      a.presentation, A,
      CentralSubgroupSpec{{FreeWord::generator(2, center_generator_exponent(a.cfg))}});
  try {
    validate_quotient_aut(r.phi, a.presentation, A, setting->quotient());
  } catch (const LiftError& e) {
    detail::assertion_failed(std::string("witness phi is not in Aut(A/Z): ") + e.what());
  }
  r.phi_is_quotient_automorphism = true;

  std::vector<Element> seeds = inner;
  seeds.insert(seeds.end(), z.begin(), z.end());
  r.inner_center = subgroup_closure(A, seeds);

  const auto& quotient = setting->quotient();
  const auto& q = quotient.group;
  std::vector<Element> q_images;
  for (const auto& w : r.phi.rep_words)
    q_images.push_back(quotient.project(evaluate_at_generators(w, A)));
  const auto q_map = *extend_to_homomorphism(q, q_images, q);
  std::set<Element> iz_mod_z, phi_iz_mod_z;
  for (const auto& e : r.inner_center) {
    iz_mod_z.insert(quotient.project(e));
    phi_iz_mod_z.insert(q_map[quotient.project(e).index]);
  }
  r.phi_moves_iz_mod_z = iz_mod_z != phi_iz_mod_z;
  if (!r.phi_moves_iz_mod_z) detail::assertion_failed("phi fixes IZ/Z");

  const auto problem = make_lift_problem(setting, r.phi);
  const auto lifts = solve_aut_lifts(problem);
  r.automorphic_lift_count = lifts.lifts.size();
  if (lifts.lifts.empty()) detail::assertion_failed("witness phi has no automorphic lift");
  r.psi = lifts.lifts.front().psi;

  const auto map = *extend_to_homomorphism(A, r.psi.images, A);
  auto image_of = [&](const std::vector<Element>& s) {
    std::vector<Element> out;
    for (const auto& e : s) out.push_back(map[e.index]);
    std::sort(out.begin(), out.end());
    return out;
  };
  r.psi_inner = image_of(r.inner);
  r.psi_inner_center = image_of(r.inner_center);
  r.psi_fixes_z = image_of(z) == z;
  if (!r.psi_fixes_z) detail::assertion_failed("psi moves Z");
  if (r.psi_inner_center == r.inner_center) detail::assertion_failed("psi fixes IZ");
  r.verdict = r.psi_inner != r.inner;
  if (!r.verdict) detail::assertion_failed("psi fixes I");
  return r;
}

struct CaseStudyReport {
  CaseStudyConfig cfg;
  GeneratorData data;
  std::size_t g_order = 0;
  std::size_t g_center_order = 0;
  std::size_t a_order = 0;
  std::size_t presentation_order = 0;
  std::size_t z_order = 0;
  std::size_t quotient_order = 0;
  bool quotient_center_trivial = false;
  std::size_t inner_order = 0;
  bool k_center_is_z_cap_k = false;
  bool commutator_is_z_power = false;
  SurjectivityReport surjectivity;
  WitnessReport witness;
  Presentation presentation;
};

/// G -> A -> Z(A) -> Inn(G) -> lifting every phi -> witness.
inline CaseStudyReport run_case_study(const CaseStudyConfig& cfg) {
  const auto a = build_aut_A(cfg);
  CaseStudyReport r;
  r.cfg = cfg;
  r.data = a.data;
  r.presentation = a.presentation;
  r.g_order = a.g().order();
  r.g_center_order = center(a.g()).size();
  r.a_order = a.group.order();
  r.presentation_order = a.presentation_order;

  const auto z = verify_center(a);
  r.z_order = z.size();
  const auto quotient = quotient_engine(a.group, z);
  r.quotient_order = quotient.group.order();
  r.quotient_center_trivial = center(quotient.group).size() == 1;
  if (!r.quotient_center_trivial) detail::assertion_failed("A/Z has nontrivial center");

  const auto inner = verify_inner(a);
  r.inner_order = inner.size();

  // K = <x1, x2>: Z(K) = Z cap K and [x1, x2] = z^{p^{n-3}}.
  const auto& A = a.group;
  const auto k = subgroup_closure(A, std::vector<Element>{a.data.x1, a.data.x2});
  std::vector<Element> k_center, z_cap_k;
  for (const auto& h : k) {
    if (commutes(A, h, a.data.x1) && commutes(A, h, a.data.x2)) k_center.push_back(h);
    if (std::binary_search(z.begin(), z.end(), h)) z_cap_k.push_back(h);
  }
  r.k_center_is_z_cap_k = k_center == z_cap_k;
  const auto zgen = power(A, a.data.x3, cfg.p - 1);
  const auto zpow = power(A, zgen, detail::ipow(cfg.p, cfg.n - 3));
  r.commutator_is_z_power =
      commutator(A, a.data.x1, a.data.x2) == zpow &&
      z_cap_k == subgroup_closure(A, std::vector<Element>{zpow});
  if (!r.k_center_is_z_cap_k) detail::assertion_failed("Z(K) != Z cap K");
  if (!r.commutator_is_z_power) detail::assertion_failed("K cap Z != <[x1,x2]> = <z^(p^(n-3))>");

  r.surjectivity = verify_pi_surjective(a, z);
  r.witness = noncharacteristic_witness(a, z, inner);
  return r;
}

}  // namespace liftaut

#endif  // LIFTAUT_CASESTUDY_HPP
