#ifndef LIFTAUT_LIFTING_HPP
#define LIFTAUT_LIFTING_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "liftaut/bigint.hpp"
#include "liftaut/error.hpp"
#include "liftaut/group.hpp"
#include "liftaut/modlinalg.hpp"
#include "liftaut/presentation.hpp"
#include "liftaut/words.hpp"

namespace liftaut {

/// m x n matrix whose row k is the exponent-sum vector of relator k.
inline IntMatrix build_exponent_matrix(const Presentation& pres) {
  IntMatrix m(pres.relator_count(), pres.generator_count());
  for (std::size_t k = 0; k < pres.relator_count(); ++k) {
    const auto row = exponent_vector(pres.relators[k], pres.generator_count());
    for (std::size_t j = 0; j < row.size(); ++j) m(k, j) = row[j];
  }
  return m;
}

/// Everything about (G, N) that does not depend on the quotient
/// automorphism: validated once, shared by every problem built on it.
class LiftSetting {
 public:
  static std::shared_ptr<const LiftSetting> create(Presentation pres,
                                                   FiniteGroup group,
                                                   CentralSubgroupSpec central) {
    check_presentation(pres);
    check_realizes(pres, group);
    validate_central(central, pres, group);

    auto s = std::shared_ptr<LiftSetting>(new LiftSetting());
    s->pres_ = std::move(pres);
    s->group_ = std::move(group);
    s->central_ = std::move(central);
    for (const auto& f : s->central_.z_words)
      s->z_elements_.push_back(evaluate_at_generators(f, s->group_));
    s->subgroup_ = subgroup_closure(s->group_, s->z_elements_);
    s->log_ = std::make_unique<CentralLog>(s->group_, s->z_elements_);

    // Blockwise solving needs N to be the internal direct product of the
    // cyclic groups <z_j>.
    std::size_t product = 1;
    for (auto o : s->log_->orders()) product *= static_cast<std::size_t>(o);
    if (product != s->subgroup_.size())
      throw LiftError(ErrorCode::DependentCentralGenerators,
                      "central generators must be independent: |N| = " +
                          std::to_string(s->subgroup_.size()) +
                          " but the product of their orders is " +
                          std::to_string(product));

    s->quotient_ = quotient_engine(s->group_, s->subgroup_);
    s->matrix_ = build_exponent_matrix(s->pres_);
    return s;
  }

  const Presentation& presentation() const noexcept { return pres_; }
  const FiniteGroup& group() const noexcept { return group_; }
  const CentralSubgroupSpec& central() const noexcept { return central_; }
  const std::vector<Element>& z_elements() const noexcept { return z_elements_; }
  const std::vector<std::int64_t>& z_orders() const noexcept {
    return log_->orders();
  }
  /// Elements of N, sorted.
  const std::vector<Element>& subgroup() const noexcept { return subgroup_; }
  std::size_t subgroup_order() const noexcept { return subgroup_.size(); }
  const QuotientEngine& quotient() const noexcept { return quotient_; }
  const CentralLog& log() const noexcept { return *log_; }
  const IntMatrix& exponent_matrix() const noexcept { return matrix_; }
  std::size_t block_count() const noexcept { return z_elements_.size(); }

  bool in_subgroup(Element e) const { return log_->contains(e); }

 private:
  LiftSetting() = default;

  Presentation pres_;
  FiniteGroup group_;
  CentralSubgroupSpec central_;
  std::vector<Element> z_elements_;
  std::vector<Element> subgroup_;
  std::unique_ptr<CentralLog> log_;
  QuotientEngine quotient_;
  IntMatrix matrix_;
};

/// A setting plus one quotient automorphism phi and its evaluated coset
/// representatives.
struct LiftProblem {
  std::shared_ptr<const LiftSetting> setting;
  QuotientAutSpec phi;
  std::vector<Element> representatives;

  const FiniteGroup& group() const { return setting->group(); }
  const Presentation& presentation() const { return setting->presentation(); }
};

inline LiftProblem make_lift_problem(std::shared_ptr<const LiftSetting> setting,
                                     QuotientAutSpec phi) {
  validate_quotient_aut(phi, setting->presentation(), setting->group(),
                        setting->quotient());
  LiftProblem p{std::move(setting), std::move(phi), {}};
  for (const auto& w : p.phi.rep_words)
    p.representatives.push_back(evaluate_at_generators(w, p.group()));
  return p;
}

inline LiftProblem make_lift_problem(Presentation pres, FiniteGroup group,
                                     CentralSubgroupSpec central,
                                     QuotientAutSpec phi) {
  return make_lift_problem(
      LiftSetting::create(std::move(pres), std::move(group), std::move(central)),
      std::move(phi));
}

namespace detail {

/// Per block j: -log_j(word(xbar)) reduced into [0, order(z_j)). Throws
/// ResidueOutsideN(k) when word k does not land in N.
inline std::vector<BigVector> residues_of(const LiftProblem& p,
                                          const std::vector<FreeWord>& words) {
  const auto& s = *p.setting;
  std::vector<BigVector> w(s.block_count(), BigVector(words.size()));
  for (std::size_t k = 0; k < words.size(); ++k) {
    const auto value = evaluate(words[k], p.representatives, p.group());
    if (!s.in_subgroup(value))
      throw LiftError(ErrorCode::ResidueOutsideN,
                      "word " + std::to_string(k) +
                          " evaluated at the representatives is not in N",
                      k);
    const auto exps = s.log().log(value);
    for (std::size_t j = 0; j < s.block_count(); ++j)
      w[j][k] = floor_mod(BigInt(-exps[j]), BigInt(s.z_orders()[j]));
  }
  return w;
}

inline IntMatrix scaled(const IntMatrix& m, const BigInt& factor) {
  IntMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= factor;
  return out;
}

}  // namespace detail

/// w_j for every central generator z_j: r_k(xbar) = prod_j z_j^{-w_{j,k}}.
inline std::vector<BigVector> build_residue_vector(const LiftProblem& p) {
  return detail::residues_of(p, p.presentation().relators);
}

/// One right-hand side of the lifting systems, with a solution set per
/// central block.
struct LiftTarget {
  std::string label;
  IntMatrix matrix;
  std::vector<BigVector> rhs;
  std::vector<SolutionSet> solutions;
  BigInt count = 0;
};

struct Lift {
  std::size_t target = 0;
  /// v_j for each block j.
  std::vector<BigVector> v;
  Endomorphism psi;
  bool automorphic = false;
};

struct LiftReport {
  enum class Kind { Homomorphic, Automorphic };
  Kind kind = Kind::Homomorphic;
  /// "homomorphic", "cyclic-prime-power", "cyclic-units" or "generator-tuples".
  std::string construction;
  IntMatrix matrix;
  IntMatrix extended_matrix;
  std::vector<BigVector> residues;
  std::vector<BigInt> moduli;
  std::vector<LiftTarget> targets;
  std::vector<Lift> lifts;
  /// Representative words used for phi.
  QuotientAutSpec phi;

  std::set<Endomorphism> endomorphisms() const {
    std::set<Endomorphism> out;
    for (const auto& l : lifts) out.insert(l.psi);
    return out;
  }
};

/// g_i = xbar_i * prod_j z_j^{v_{j,i}}. Checks that every relator vanishes.
inline Endomorphism materialize(const LiftProblem& p,
                                const std::vector<BigVector>& v) {
  const auto& s = *p.setting;
  const auto& g = p.group();
  if (v.size() != s.block_count())
    throw LiftError(ErrorCode::IndexOutOfRange, "need one vector per central block");
  Endomorphism psi;
  for (std::size_t i = 0; i < p.representatives.size(); ++i) {
    auto gi = p.representatives[i];
    for (std::size_t j = 0; j < v.size(); ++j)
      gi = g.multiply(gi, power(g, s.z_elements()[j],
                                to_int64(floor_mod(v[j][i], BigInt(s.z_orders()[j])))));
    psi.images.push_back(gi);
  }
  const auto& rels = p.presentation().relators;
  for (std::size_t k = 0; k < rels.size(); ++k)
    if (evaluate(rels[k], psi.images, g) != g.identity())
      throw LiftError(ErrorCode::NotASolution,
                      "relator " + std::to_string(k) +
                          " does not vanish at the materialized images",
                      k);
  return psi;
}

/// psi is an automorphism iff psi(N) = N. Cross-checked against
/// surjectivity; disagreement is an internal error.
inline bool is_automorphism(const LiftProblem& p, const Endomorphism& psi) {
  const auto& s = *p.setting;
  const auto& g = p.group();
  std::vector<Element> z_images;
  for (const auto& f : s.central().z_words)
    z_images.push_back(evaluate(f, psi.images, g));
  const bool preserves_n = subgroup_closure(g, z_images) == s.subgroup();
  const bool surjective = generates(g, psi.images);
  if (preserves_n != surjective)
    throw LiftError(ErrorCode::CriterionMismatch,
                    "psi(N) = N disagrees with surjectivity");
  return preserves_n;
}

namespace detail {

/// Solves one target across all blocks and appends its lifts to the report.
inline void solve_target(const LiftProblem& p, LiftTarget target,
                         LiftReport& report, bool automorphic_by_construction) {
  const auto& s = *p.setting;
  const std::size_t idx = report.targets.size();
  std::vector<std::vector<BigVector>> per_block;
  BigInt count = 1;
  for (std::size_t j = 0; j < s.block_count(); ++j) {
    const BigInt mod = s.z_orders()[j];
    target.solutions.push_back(solve(target.matrix, target.rhs[j], mod));
    per_block.push_back(enumerate(target.solutions.back(), kAllSolutions));
    count *= *target.solutions.back().count;
  }
  target.count = count;

  // Cartesian product, block 0 outermost: lexicographic in (v_1, .., v_t).
  std::vector<std::size_t> pick(per_block.size(), 0);
  const bool empty = std::any_of(per_block.begin(), per_block.end(),
                                 [](const auto& b) { return b.empty(); });
  std::size_t made = 0;
  while (!empty) {
    Lift lift;
    lift.target = idx;
    for (std::size_t j = 0; j < per_block.size(); ++j)
      lift.v.push_back(per_block[j][pick[j]]);
    lift.psi = materialize(p, lift.v);
    lift.automorphic =
        automorphic_by_construction ? true : is_automorphism(p, lift.psi);
    report.lifts.push_back(std::move(lift));
    ++made;
    std::size_t j = pick.size();
    while (j > 0 && ++pick[j - 1] == per_block[j - 1].size()) pick[--j] = 0;
    if (j == 0) break;
  }
  if (BigInt(made) != count)
    throw LiftError(ErrorCode::AssertionFailed, "solution count mismatch");
  report.targets.push_back(std::move(target));
}

inline void check_distinct(const LiftReport& report) {
  if (report.endomorphisms().size() != report.lifts.size())
    throw LiftError(ErrorCode::AssertionFailed,
                    "distinct solutions produced equal endomorphisms");
}

inline BigVector concat(BigVector a, const BigVector& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline IntMatrix stack(const IntMatrix& top, const std::vector<BigVector>& rows) {
  IntMatrix out = top;
  for (const auto& r : rows) out.append_row(r);
  return out;
}

}  // namespace detail

/// Solves M v_j = w_j (mod order(z_j)) for each block and materializes every
/// combination. The lifts of phi correspond one-to-one with these tuples.
inline LiftReport solve_hom_lifts(const LiftProblem& p) {
  const auto& s = *p.setting;
  LiftReport report;
  report.kind = LiftReport::Kind::Homomorphic;
  report.construction = "homomorphic";
  report.phi = p.phi;
  report.matrix = s.exponent_matrix();
  report.residues = build_residue_vector(p);
  for (auto o : s.z_orders()) report.moduli.push_back(o);

  LiftTarget target;
  target.label = "hom";
  target.matrix = report.matrix;
  target.rhs = report.residues;
  detail::solve_target(p, std::move(target), report, false);
  detail::check_distinct(report);
  return report;
}

/// Systems whose union of solutions is the set of automorphic lifts for a
/// cyclic N = <z> with z = f(x). `f_row` is the exponent-sum vector of f,
/// `w_f` satisfies f(xbar) = z^{-w_f}; `order` is #N, 0 for infinite N.
///  - infinite: [M; f_row] v = [w; w_f +- 1] over the integers;
///  - #N = p^k: [M; (#N/p) f_row] v = [w; (#N/p)(w_f + k)] mod #N, k = 1..p-1;
///  - otherwise: [M; f_row] v = [w; w_f + u] mod #N, u a unit mod #N.
struct CyclicAutomorphicSystems {
  std::string construction;
  IntMatrix matrix;
  std::vector<std::string> labels;
  std::vector<LinearSystem> systems;
};

inline CyclicAutomorphicSystems cyclic_automorphic_systems(
    const IntMatrix& m, const BigVector& w, const BigVector& f_row,
    const BigInt& w_f, const BigInt& order) {
  CyclicAutomorphicSystems out;
  if (order == 0) {
    out.construction = "cyclic-infinite";
    out.matrix = detail::stack(m, {f_row});
    for (const int sign : {1, -1}) {
      out.labels.push_back(sign > 0 ? "+1" : "-1");
      out.systems.push_back({out.matrix, detail::concat(w, {w_f + sign}), BigInt(0)});
    }
    return out;
  }
  const auto n = order.convert_to<std::uint64_t>();
  if (n == 1) {
    // Trivial N: every homomorphic lift is automorphic; a single target.
    out.construction = "cyclic-trivial";
    out.matrix = m;
    out.labels.push_back("trivial");
    out.systems.push_back({m, w, order});
    return out;
  }
  if (is_prime_power(n)) {
    out.construction = "cyclic-prime-power";
    const BigInt p = smallest_prime_factor(n);
    const BigInt scale = order / p;
    BigVector row = f_row;
    for (auto& x : row) x *= scale;
    out.matrix = detail::stack(m, {row});
    for (BigInt k = 1; k < p; ++k) {
      out.labels.push_back("k=" + to_string(k));
      out.systems.push_back(
          {out.matrix, detail::concat(w, {floor_mod(scale * w_f + k * scale, order)}),
           order});
    }
    return out;
  }
  out.construction = "cyclic-units";
  out.matrix = detail::stack(m, {f_row});
  for (BigInt u = 1; u < order; ++u) {
    if (gcd(u, order) != 1) continue;
    out.labels.push_back("u=" + to_string(u));
    out.systems.push_back(
        {out.matrix, detail::concat(w, {floor_mod(w_f + u, order)}), order});
  }
  return out;
}

/// Automorphic lifts: homomorphic lifts whose image of N is N, found by
/// adding the rows of the N-generator words and enumerating admissible
/// images of the generators of N.
inline LiftReport solve_aut_lifts(const LiftProblem& p) {
  const auto& s = *p.setting;
  const auto& g = p.group();
  const std::size_t n = p.presentation().generator_count();
  LiftReport report;
  report.kind = LiftReport::Kind::Automorphic;
  report.phi = p.phi;
  report.matrix = s.exponent_matrix();
  report.residues = build_residue_vector(p);
  for (auto o : s.z_orders()) report.moduli.push_back(o);

  const auto& fs = s.central().z_words;
  std::vector<BigVector> f_rows;
  for (const auto& f : fs) {
    BigVector row;
    for (auto e : exponent_vector(f, n)) row.push_back(e);
    f_rows.push_back(std::move(row));
  }
  const auto w_f = detail::residues_of(p, fs);  // [block][i]

  if (s.block_count() == 1) {
    const auto sys = cyclic_automorphic_systems(report.matrix, report.residues[0],
                                                f_rows[0], w_f[0][0],
                                                BigInt(s.z_orders()[0]));
    report.construction = sys.construction;
    report.extended_matrix = sys.matrix;
    for (std::size_t k = 0; k < sys.systems.size(); ++k) {
      LiftTarget target;
      target.label = sys.labels[k];
      target.matrix = sys.matrix;
      target.rhs = {sys.systems[k].rhs};
      detail::solve_target(p, std::move(target), report, true);
    }
  } else {
    // Images z_i' of the N-generators: same orders, jointly generating N.
    report.construction = "generator-tuples";
    report.extended_matrix = detail::stack(report.matrix, f_rows);
    const std::size_t t = s.block_count();
    std::vector<std::vector<Element>> candidates(t);
    for (std::size_t i = 0; i < t; ++i)
      for (const auto& e : s.subgroup())
        if (element_order(g, e) == s.z_orders()[i]) candidates[i].push_back(e);
    if (std::any_of(candidates.begin(), candidates.end(),
                    [](const auto& c) { return c.empty(); }))
      candidates.clear();

    std::vector<std::size_t> pick(t, 0);
    while (!candidates.empty()) {
      std::vector<Element> images;
      for (std::size_t i = 0; i < t; ++i) images.push_back(candidates[i][pick[i]]);
      if (subgroup_closure(g, images) == s.subgroup()) {
        LiftTarget target;
        target.matrix = report.extended_matrix;
        std::vector<std::vector<std::int64_t>> c;
        for (const auto& z : images) c.push_back(s.log().log(z));
        for (std::size_t i = 0; i < t; ++i) {
          target.label += (i ? "," : "") + std::string("(");
          for (std::size_t j = 0; j < t; ++j)
            target.label += (j ? " " : "") + std::to_string(c[i][j]);
          target.label += ")";
        }
        for (std::size_t j = 0; j < t; ++j) {
          BigVector extra;
          for (std::size_t i = 0; i < t; ++i)
            extra.push_back(floor_mod(w_f[j][i] + c[i][j], BigInt(s.z_orders()[j])));
          target.rhs.push_back(detail::concat(report.residues[j], extra));
        }
        detail::solve_target(p, std::move(target), report, true);
      }
      std::size_t i = t;
      while (i > 0 && ++pick[i - 1] == candidates[i - 1].size()) pick[--i] = 0;
      if (i == 0) break;
    }
  }
  detail::check_distinct(report);

  // Executable check of the construction: it must produce exactly the
  // homomorphic lifts that map N onto N.
  std::set<Endomorphism> filtered;
  for (const auto& l : solve_hom_lifts(p).lifts)
    if (l.automorphic) filtered.insert(l.psi);
  if (filtered != report.endomorphisms())
    throw LiftError(ErrorCode::CriterionMismatch,
                    "target construction disagrees with filtered homomorphic lifts");
  for (const auto& l : report.lifts)
    if (!is_automorphism(p, l.psi))
      throw LiftError(ErrorCode::CriterionMismatch,
                      "constructed lift is not an automorphism");
  return report;
}

/// For squarefree #N a homomorphic lift exists iff an automorphic one does,
/// so existence is decided by the homomorphic systems alone.
inline bool squarefree_existence(const LiftProblem& p) {
  const auto& s = *p.setting;
  if (!is_squarefree(s.subgroup_order()))
    throw LiftError(ErrorCode::NotSquarefree,
                    "#N = " + std::to_string(s.subgroup_order()) +
                        " is not squarefree");
  const auto w = build_residue_vector(p);
  for (std::size_t j = 0; j < s.block_count(); ++j)
    if (!solve(s.exponent_matrix(), w[j], BigInt(s.z_orders()[j])).solvable)
      return false;
  return true;
}

}  // namespace liftaut

#endif  // LIFTAUT_LIFTING_HPP
