#ifndef LIFTAUT_REPORT_HPP
#define LIFTAUT_REPORT_HPP

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "liftaut/casestudy.hpp"
#include "liftaut/lifting.hpp"
#include "liftaut/oracle.hpp"
#include "liftaut/todd_coxeter.hpp"

// JSON and plain-text renderings. Integers of unbounded size are written as
// decimal strings; output is a pure function of its input.

namespace liftaut {

using json = nlohmann::ordered_json;

namespace detail {

inline json to_json(const BigVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

inline json to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

inline json words_json(const std::vector<FreeWord>& words,
                       const std::vector<std::string>& names) {
  json out = json::array();
  for (const auto& w : words) out.push_back(format_word(w, names));
  return out;
}

inline json images_json(const Endomorphism& psi, const std::vector<FreeWord>& words,
                        const std::vector<std::string>& names) {
  json out = json::array();
  for (const auto& e : psi.images) out.push_back(format_word(words[e.index], names));
  return out;
}

inline std::string count_string(const std::optional<BigInt>& c) {
  return c ? to_string(*c) : std::string("infinite");
}

}  // namespace detail

inline json lift_report_json(const LiftProblem& p, const LiftReport& r) {
  const auto& names = p.presentation().names;
  const auto words = shortlex_words(p.group());
  json out;
  out["kind"] = r.kind == LiftReport::Kind::Homomorphic ? "homomorphic" : "automorphic";
  out["construction"] = r.construction;
  out["generators"] = names;
  out["central"] = detail::words_json(p.setting->central().z_words, names);
  out["phi"] = detail::words_json(r.phi.rep_words, names);
  out["matrix"] = detail::to_json(r.matrix);
  if (r.kind == LiftReport::Kind::Automorphic)
    out["extended_matrix"] = detail::to_json(r.extended_matrix);
  json moduli = json::array();
  for (const auto& m : r.moduli) moduli.push_back(to_string(m));
  out["moduli"] = moduli;
  json residues = json::array();
  for (const auto& w : r.residues) residues.push_back(detail::to_json(w));
  out["residues"] = residues;

  json targets = json::array();
  for (const auto& t : r.targets) {
    json jt;
    jt["label"] = t.label;
    json rhs = json::array(), solvable = json::array(), counts = json::array();
    for (const auto& w : t.rhs) rhs.push_back(detail::to_json(w));
    for (const auto& s : t.solutions) {
      solvable.push_back(s.solvable);
      counts.push_back(detail::count_string(s.count));
    }
    jt["rhs"] = rhs;
    jt["solvable"] = solvable;
    jt["block_counts"] = counts;
    jt["count"] = to_string(t.count);
    targets.push_back(jt);
  }
  out["targets"] = targets;

  out["lift_count"] = r.lifts.size();
  json lifts = json::array();
  for (const auto& l : r.lifts) {
    json jl;
    jl["target"] = l.target;
    json v = json::array();
    for (const auto& b : l.v) v.push_back(detail::to_json(b));
    jl["v"] = v;
    jl["images"] = detail::images_json(l.psi, words, names);
    jl["automorphic"] = l.automorphic;
    lifts.push_back(jl);
  }
  out["lifts"] = lifts;
  return out;
}

inline std::string lift_report_text(const LiftProblem& p, const LiftReport& r) {
  const auto& names = p.presentation().names;
  const auto words = shortlex_words(p.group());
  std::ostringstream os;
  os << (r.kind == LiftReport::Kind::Homomorphic ? "homomorphic" : "automorphic")
     << " lifts (" << r.construction << ")\n";
  os << "phi:";
  for (const auto& w : r.phi.rep_words) os << ' ' << format_word(w, names);
  os << "\nmatrix:\n";
  const auto& m = r.kind == LiftReport::Kind::Automorphic ? r.extended_matrix : r.matrix;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << " ";
    for (std::size_t j = 0; j < m.cols(); ++j) os << ' ' << m(i, j);
    os << '\n';
  }
  for (std::size_t j = 0; j < r.residues.size(); ++j) {
    os << "w" << (j + 1) << " (mod " << r.moduli[j] << "):";
    for (const auto& x : r.residues[j]) os << ' ' << x;
    os << '\n';
  }
  os << r.lifts.size() << " lift(s)\n";
  for (const auto& l : r.lifts) {
    os << " ";
    for (std::size_t i = 0; i < l.psi.images.size(); ++i)
      os << ' ' << names[i] << "->" << format_word(words[l.psi.images[i].index], names);
    os << (l.automorphic ? "  [automorphic]" : "") << '\n';
  }
  return os.str();
}

inline json comparison_json(const LiftProblem& p, const ComparisonReport& c) {
  const auto& names = p.presentation().names;
  json out;
  out["phi"] = detail::words_json(c.phi.rep_words, names);
  out["solver_hom"] = c.solver_hom;
  out["oracle_hom"] = c.oracle_hom;
  out["solver_aut"] = c.solver_aut;
  out["oracle_aut"] = c.oracle_aut;
  out["match"] = c.match;
  if (c.counterexample) {
    const auto words = shortlex_words(p.group());
    json ce;
    ce["kind"] = c.counterexample->kind;
    ce["side"] = c.counterexample->side;
    ce["images"] = detail::images_json(c.counterexample->psi, words, names);
    json v = json::array();
    for (const auto& b : c.counterexample->v) v.push_back(detail::to_json(b));
    ce["v"] = v;
    out["counterexample"] = ce;
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

inline std::string comparison_text(const LiftProblem& p, const ComparisonReport& c) {
  const auto& names = p.presentation().names;
  std::ostringstream os;
  os << "phi:";
  for (const auto& w : c.phi.rep_words) os << ' ' << format_word(w, names);
  os << "  hom " << c.solver_hom << '/' << c.oracle_hom << "  aut " << c.solver_aut << '/'
     << c.oracle_aut << "  " << (c.match ? "match" : "MISMATCH") << '\n';
  if (c.counterexample) {
    const auto words = shortlex_words(p.group());
    os << "  counterexample (" << c.counterexample->kind << ", " << c.counterexample->side
       << "):";
    for (std::size_t i = 0; i < c.counterexample->psi.images.size(); ++i)
      os << ' ' << names[i] << "->"
         << format_word(words[c.counterexample->psi.images[i].index], names);
    os << '\n';
  }
  return os.str();
}

inline json engine_json(const PermutationEngine& e) {
  json out;
  out["degree"] = e.degree;
  json gens = json::array();
  for (const auto& perm : e.generators) gens.push_back(perm);
  out["generators"] = gens;
  return out;
}

inline json case_study_json(const CaseStudyReport& r) {
  const auto& names = r.presentation.names;
  json out;
  out["p"] = r.cfg.p;
  out["n"] = r.cfg.n;
  json params;
  params["a"] = r.data.a;
  params["a_modulus"] = r.data.a_modulus;
  params["a_inverse_mod_p"] = r.data.a_inverse;
  params["j"] = r.data.j;
  params["k"] = r.data.k;
  params["x1_is_conjugation_by_x"] = r.data.x1_is_conjugation_by_x;
  out["parameters"] = params;
  json rels = json::array();
  for (const auto& w : r.presentation.relators) rels.push_back(format_word(w, names));
  out["presentation"] = rels;
  out["order_G"] = r.g_order;
  out["order_Z_G"] = r.g_center_order;
  out["order_A"] = r.a_order;
  out["order_presented"] = r.presentation_order;
  out["order_Z"] = r.z_order;
  out["order_A_mod_Z"] = r.quotient_order;
  out["order_Inn_G"] = r.inner_order;
  out["order_Aut_A_mod_Z"] = r.surjectivity.quotient_aut_count;
  out["order_Aut_A"] = r.surjectivity.aut_a_order;
  out["expected_fiber"] = r.surjectivity.expected_fiber;
  out["hom_lift_counts"] = r.surjectivity.hom_counts;
  out["aut_lift_counts"] = r.surjectivity.aut_counts;
  json checks;
  checks["center_of_quotient_trivial"] = r.quotient_center_trivial;
  checks["Z_K_equals_Z_cap_K"] = r.k_center_is_z_cap_k;
  checks["K_cap_Z_generated_by_commutator"] = r.commutator_is_z_power;
  checks["every_phi_lifts"] = r.surjectivity.every_phi_lifts;
  checks["all_lifts_automorphic"] = r.surjectivity.all_lifts_automorphic;
  checks["residues_as_predicted"] = r.surjectivity.residues_as_predicted;
  checks["representative_independent"] = r.surjectivity.representative_independent;
  checks["order_consistent"] = r.surjectivity.order_consistent;
  out["checks"] = checks;
  json w;
  w["phi"] = detail::words_json(r.witness.phi.rep_words, names);
  w["automorphic_lifts"] = r.witness.automorphic_lift_count;
  w["phi_moves_IZ_mod_Z"] = r.witness.phi_moves_iz_mod_z;
  w["psi_fixes_Z"] = r.witness.psi_fixes_z;
  w["psi_moves_IZ"] = r.witness.psi_inner_center != r.witness.inner_center;
  w["psi_moves_Inn_G"] = r.witness.verdict;
  out["witness"] = w;
  out["verdict"] = r.witness.verdict ? "Inn(G) is not characteristic in Aut(G)"
                                     : "no witness";
  return out;
}

inline std::string case_study_text(const CaseStudyReport& r) {
  const auto& s = r.surjectivity;
  std::ostringstream os;
  os << "G = metacyclic(" << r.cfg.p << ", " << r.cfg.n << "), |G| = " << r.g_order << '\n'
     << "A = Aut(G), |A| = " << r.a_order << "  (presentation defines " << r.presentation_order
     << ")\n"
     << "parameters: a = " << r.data.a << " (primitive root mod " << r.data.a_modulus
     << "), j = " << r.data.j << ", k = " << r.data.k << '\n'
     << "|Z(A)| = " << r.z_order << ", |A/Z| = " << r.quotient_order
     << ", |Inn(G)| = " << r.inner_order << '\n'
     << "|Aut(A/Z)| = " << s.quotient_aut_count << ", |Aut(A)| = " << s.aut_a_order << '\n';
  std::size_t lo = 0, hi = 0;
  if (!s.hom_counts.empty()) {
    lo = *std::min_element(s.hom_counts.begin(), s.hom_counts.end());
    hi = *std::max_element(s.hom_counts.begin(), s.hom_counts.end());
  }
  os << "homomorphic lifts per phi: " << lo << (lo == hi ? "" : ".." + std::to_string(hi))
     << " (expected " << s.expected_fiber << "), all automorphic: "
     << (s.all_lifts_automorphic ? "yes" : "no") << '\n'
     << "witness: psi(Inn(G)) " << (r.witness.verdict ? "!=" : "==") << " Inn(G)\n"
     << (r.witness.verdict ? "Inn(G) is not characteristic in Aut(G)\n" : "");
  return os.str();
}

}  // namespace liftaut

#endif  // LIFTAUT_REPORT_HPP
