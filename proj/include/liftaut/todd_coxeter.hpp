#ifndef LIFTAUT_TODD_COXETER_HPP
#define LIFTAUT_TODD_COXETER_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "liftaut/error.hpp"
#include "liftaut/group.hpp"
#include "liftaut/presentation.hpp"

namespace liftaut {

/// Regular permutation representation of a finitely presented group:
/// generator i acts on the cosets of the trivial subgroup by right
/// multiplication with x_i. The group's element index equals the coset
/// number, coset 0 being the identity.
struct PermutationEngine {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  FiniteGroup group;
};

namespace detail {

/// HLT coset enumeration over the trivial subgroup. Columns are ordered
/// x_1, x_1^-1, x_2, x_2^-1, ...; column c ^ 1 is the inverse column.
class CosetEnumerator {
 public:
  static constexpr std::int64_t kUndefined = -1;

  CosetEnumerator(std::size_t generator_count, std::size_t max_cosets)
      : columns_(2 * generator_count), max_cosets_(max_cosets) {
    new_row();
  }

  void run(const std::vector<std::vector<std::size_t>>& relators) {
    for (std::size_t c = 0; c < forward_.size(); ++c) {
      if (!live(c)) continue;
      for (const auto& r : relators) {
        scan_and_fill(static_cast<std::int64_t>(c), r);
        if (!live(c)) break;
      }
      for (std::size_t col = 0; col < columns_ && live(c); ++col)
        if (at(c, col) == kUndefined) define(static_cast<std::int64_t>(c), col);
    }
  }

  /// Renumbers live cosets in BFS order from coset 0 and returns the action
  /// of each generator (positive columns only).
  std::vector<Permutation> standardized_action() {
    std::vector<std::int64_t> renumber(forward_.size(), kUndefined);
    std::vector<std::size_t> order{0};
    renumber[0] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (std::size_t col = 0; col < columns_; ++col) {
        const auto target = at(order[head], col);
        if (target == kUndefined)
          throw LiftError(ErrorCode::AssertionFailed, "incomplete coset table");
        const auto t = static_cast<std::size_t>(rep(target));
        if (renumber[t] == kUndefined) {
          renumber[t] = static_cast<std::int64_t>(order.size());
          order.push_back(t);
        }
      }
    }
    std::vector<Permutation> action(columns_ / 2,
                                    Permutation(order.size(), 0));
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t g = 0; g < columns_ / 2; ++g)
        action[g][i] = static_cast<std::uint32_t>(
            renumber[static_cast<std::size_t>(rep(at(order[i], 2 * g)))]);
    return action;
  }

 private:
  bool live(std::size_t c) const {
    return forward_[c] == static_cast<std::int64_t>(c);
  }
  std::int64_t& at(std::size_t c, std::size_t col) {
    return table_[c * columns_ + col];
  }

  void new_row() {
    if (forward_.size() >= max_cosets_)
      throw LiftError(ErrorCode::CosetLimitExceeded,
                      "coset limit of " + std::to_string(max_cosets_) +
                          " exceeded (group may be infinite or the limit too small)");
    forward_.push_back(static_cast<std::int64_t>(forward_.size()));
    table_.resize(table_.size() + columns_, kUndefined);
  }

  void define(std::int64_t c, std::size_t col) {
    new_row();
    const auto d = static_cast<std::int64_t>(forward_.size() - 1);
    at(static_cast<std::size_t>(c), col) = d;
    at(static_cast<std::size_t>(d), col ^ 1) = c;
  }

  void scan_and_fill(std::int64_t c, const std::vector<std::size_t>& word) {
    if (word.empty()) return;
    std::int64_t f = c, b = c;
    std::size_t i = 0, j = word.size();  // unscanned letters are [i, j)
    for (;;) {
      while (i < j && at(static_cast<std::size_t>(f), word[i]) != kUndefined)
        f = at(static_cast<std::size_t>(f), word[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i &&
             at(static_cast<std::size_t>(b), word[j - 1] ^ 1) != kUndefined)
        b = at(static_cast<std::size_t>(b), word[--j] ^ 1);
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        // Deduction closes the cycle.
        at(static_cast<std::size_t>(f), word[i]) = b;
        at(static_cast<std::size_t>(b), word[i] ^ 1) = f;
        return;
      }
      define(f, word[i]);
    }
  }

  std::int64_t rep(std::int64_t c) {
    std::int64_t root = c;
    while (forward_[static_cast<std::size_t>(root)] != root)
      root = forward_[static_cast<std::size_t>(root)];
    while (forward_[static_cast<std::size_t>(c)] != root) {
      const auto next = forward_[static_cast<std::size_t>(c)];
      forward_[static_cast<std::size_t>(c)] = root;
      c = next;
    }
    return root;
  }

  void merge(std::int64_t a, std::int64_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    const auto lo = std::min(a, b), hi = std::max(a, b);
    forward_[static_cast<std::size_t>(hi)] = lo;
    queue_.push_back(hi);
  }

  void coincidence(std::int64_t a, std::int64_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const auto dead = static_cast<std::size_t>(queue_[head]);
      for (std::size_t col = 0; col < columns_; ++col) {
        const auto target = at(dead, col);
        if (target == kUndefined) continue;
        at(static_cast<std::size_t>(target), col ^ 1) = kUndefined;
        const auto mu = rep(static_cast<std::int64_t>(dead));
        const auto nu = rep(target);
        if (at(static_cast<std::size_t>(mu), col) != kUndefined)
          merge(nu, at(static_cast<std::size_t>(mu), col));
        else if (at(static_cast<std::size_t>(nu), col ^ 1) != kUndefined)
          merge(mu, at(static_cast<std::size_t>(nu), col ^ 1));
        else {
          at(static_cast<std::size_t>(mu), col) = nu;
          at(static_cast<std::size_t>(nu), col ^ 1) = mu;
        }
      }
    }
  }

  std::size_t columns_;
  std::size_t max_cosets_;
  std::vector<std::int64_t> forward_;  // union-find; live iff forward_[c] == c
  std::vector<std::int64_t> table_;
  std::vector<std::int64_t> queue_;
};

inline std::vector<std::size_t> expand_to_columns(const FreeWord& w) {
  std::vector<std::size_t> cols;
  for (const auto& l : w.letters()) {
    const std::size_t col = 2 * l.gen + (l.exp < 0 ? 1 : 0);
    for (std::int64_t k = 0; k < (l.exp < 0 ? -l.exp : l.exp); ++k)
      cols.push_back(col);
  }
  return cols;
}

}  // namespace detail

/// Enumerates the cosets of the trivial subgroup. Throws CosetLimitExceeded
/// once more than `max_cosets` cosets have been defined in total.
inline PermutationEngine todd_coxeter(const Presentation& pres,
                                      std::size_t max_cosets) {
  check_presentation(pres);
  if (max_cosets < 1)
    throw LiftError(ErrorCode::Config, "max_cosets must be at least 1");
  std::vector<std::vector<std::size_t>> relators;
  for (const auto& r : pres.relators) relators.push_back(detail::expand_to_columns(r));

  detail::CosetEnumerator enumerator(pres.generator_count(), max_cosets);
  enumerator.run(relators);

  PermutationEngine engine;
  engine.generators = enumerator.standardized_action();
  engine.degree = engine.generators.front().size();
  engine.group = FiniteGroup::from_right_action(engine.generators, engine.degree, 0);
  check_realizes(pres, engine.group);
  return engine;
}

}  // namespace liftaut

#endif  // LIFTAUT_TODD_COXETER_HPP
