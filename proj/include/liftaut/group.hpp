#ifndef LIFTAUT_GROUP_HPP
#define LIFTAUT_GROUP_HPP

#include <algorithm>
#include <atomic>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "liftaut/engine_concept.hpp"
#include "liftaut/error.hpp"
#include "liftaut/words.hpp"

namespace liftaut {

/// Handle to an element of a FiniteGroup. `universe` identifies the element
/// set it belongs to; handles from different universes never compare equal
/// and are rejected by group operations.
struct Element {
  std::uint32_t index = 0;
  std::uint32_t universe = 0;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element& a, const Element& b) {
    if (auto c = a.universe <=> b.universe; c != 0) return c;
    return a.index <=> b.index;
  }
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept {
    return (static_cast<std::size_t>(e.universe) << 32) ^ e.index;
  }
};

/// Images of the generators x_1..x_n; the homomorphism they define (if any)
/// is recovered by evaluating words.
struct Endomorphism {
  std::vector<Element> images;

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;
  friend auto operator<=>(const Endomorphism&, const Endomorphism&) = default;
};

using Permutation = std::vector<std::uint32_t>;

namespace detail {

/// Greedy generating set of a group given by its Cayley table: scan
/// elements in index order, keep each one not yet in the span.
inline std::vector<std::uint32_t> greedy_generators(
    const std::vector<std::uint32_t>& table, std::size_t order,
    std::uint32_t identity) {
  std::vector<std::uint32_t> gens;
  std::vector<bool> in_span(order, false);
  in_span[identity] = true;
  std::size_t span = 1;
  for (std::uint32_t e = 0; e < order && span < order; ++e) {
    if (in_span[e]) continue;
    gens.push_back(e);
    std::vector<std::uint32_t> queue{identity};
    std::fill(in_span.begin(), in_span.end(), false);
    in_span[identity] = true;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (auto s : gens) {
        const auto f = table[queue[head] * order + s];
        if (!in_span[f]) {
          in_span[f] = true;
          queue.push_back(f);
        }
      }
    span = queue.size();
  }
  return gens;
}

}  // namespace detail

/// A finite group stored as a dense Cayley table. Immutable after
/// construction; copies share the table, so copying is cheap and
/// `with_generators` can re-mark generators without rebuilding anything.
class FiniteGroup {
 public:
  using element_type = Element;

  FiniteGroup() = default;

  /// `table[a * order + b]` is the index of a*b; `identity` is the index of
  /// the identity. Generators must generate the whole group.
  static FiniteGroup from_table(std::vector<std::uint32_t> table,
                                std::size_t order, std::uint32_t identity,
                                std::vector<std::uint32_t> generators) {
    if (table.size() != order * order)
      throw LiftError(ErrorCode::AssertionFailed, "table size mismatch");
    auto data = std::make_shared<Data>();
    data->universe = next_universe();
    data->order = order;
    data->identity = identity;
    data->table = std::move(table);
    data->inverse.assign(order, 0);
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        if (data->table[a * order + b] == identity) {
          data->inverse[a] = static_cast<std::uint32_t>(b);
          break;
        }
      }
    }
    FiniteGroup g;
    g.data_ = std::move(data);
    for (auto i : generators) g.gens_.push_back(g.element(i));
    g.check_generates();
    return g;
  }

  /// Builds the group from its regular right action: `action[i][e]` is the
  /// index of e * g_i. Elements are indexed as in the action, identity at
  /// `identity`.
  static FiniteGroup from_right_action(
      const std::vector<std::vector<std::uint32_t>>& action,
      std::size_t order, std::uint32_t identity = 0) {
    // Spanning tree from the identity: e = parent(e) * g_{via(e)}.
    std::vector<std::uint32_t> parent(order, 0), via(order, 0), bfs;
    std::vector<bool> seen(order, false);
    seen[identity] = true;
    bfs.push_back(identity);
    for (std::size_t head = 0; head < bfs.size(); ++head) {
      const auto e = bfs[head];
      for (std::size_t i = 0; i < action.size(); ++i) {
        const auto f = action[i][e];
        if (!seen[f]) {
          seen[f] = true;
          parent[f] = e;
          via[f] = static_cast<std::uint32_t>(i);
          bfs.push_back(f);
        }
      }
    }
    if (bfs.size() != order)
      throw LiftError(ErrorCode::AssertionFailed,
                      "generators do not act transitively");

    std::vector<std::uint32_t> table(order * order, 0);
    for (std::size_t a = 0; a < order; ++a) {
      table[a * order + identity] = static_cast<std::uint32_t>(a);
      for (std::size_t k = 1; k < bfs.size(); ++k) {
        const auto b = bfs[k];
        table[a * order + b] = action[via[b]][table[a * order + parent[b]]];
      }
    }
    std::vector<std::uint32_t> gens;
    for (const auto& row : action) gens.push_back(row[identity]);
    return from_table(std::move(table), order, identity, std::move(gens));
  }

  /// Closure of permutation generators; (p*q)[x] = q[p[x]], so the product
  /// applies p first. Element 0 is the identity; the rest follow BFS order.
  static FiniteGroup from_permutations(const std::vector<Permutation>& gens,
                                       std::vector<Permutation>* elements_out =
                                           nullptr) {
    const std::size_t degree = gens.empty() ? 0 : gens.front().size();
    Permutation id(degree);
    for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);

    std::map<Permutation, std::uint32_t> index;
    std::vector<Permutation> elems{id};
    index.emplace(id, 0);
    std::vector<std::vector<std::uint32_t>> action(gens.size());
    for (std::size_t head = 0; head < elems.size(); ++head) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Permutation prod(degree);
        for (std::size_t x = 0; x < degree; ++x)
          prod[x] = gens[i][elems[head][x]];
        auto [it, inserted] =
            index.emplace(prod, static_cast<std::uint32_t>(elems.size()));
        if (inserted) elems.push_back(std::move(prod));
        action[i].push_back(it->second);
      }
    }
    if (elements_out) *elements_out = elems;
    return from_right_action(action, elems.size(), 0);
  }

  /// Same element set, different designated generators.
  FiniteGroup with_generators(const std::vector<Element>& gens) const {
    FiniteGroup g = *this;
    g.gens_.clear();
    for (const auto& e : gens) g.gens_.push_back(check(e));
    g.check_generates();
    return g;
  }

  Element identity() const { return element(data_->identity); }

  Element multiply(Element a, Element b) const {
    check(a);
    check(b);
    return element(data_->table[a.index * data_->order + b.index]);
  }

  Element inverse(Element a) const {
    check(a);
    return element(data_->inverse[a.index]);
  }

  Element generator(std::size_t i) const {
    if (i >= gens_.size())
      throw LiftError(ErrorCode::IndexOutOfRange,
                      "generator " + std::to_string(i) + " out of range");
    return gens_[i];
  }

  const std::vector<Element>& generators() const noexcept { return gens_; }
  std::size_t generator_count() const noexcept { return gens_.size(); }
  std::size_t order() const noexcept { return data_ ? data_->order : 0; }
  std::uint32_t universe() const noexcept { return data_->universe; }

  Element element(std::size_t index) const {
    if (index >= data_->order)
      throw LiftError(ErrorCode::IndexOutOfRange,
                      "element index " + std::to_string(index));
    return Element{static_cast<std::uint32_t>(index), data_->universe};
  }

  /// All elements in index order.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(order());
    for (std::size_t i = 0; i < order(); ++i) out.push_back(element(i));
    return out;
  }

  bool owns(Element e) const noexcept {
    return data_ && e.universe == data_->universe && e.index < data_->order;
  }

  Element check(Element e) const {
    if (!owns(e))
      throw LiftError(ErrorCode::EngineMismatch,
                      "element does not belong to this engine");
    return e;
  }

 private:
  struct Data {
    std::uint32_t universe = 0;
    std::size_t order = 0;
    std::uint32_t identity = 0;
    std::vector<std::uint32_t> table;
    std::vector<std::uint32_t> inverse;
  };

  static std::uint32_t next_universe() {
    static std::atomic<std::uint32_t> counter{1};
    return counter.fetch_add(1);
  }

  void check_generates() const;

  std::shared_ptr<const Data> data_;
  std::vector<Element> gens_;
};

static_assert(GroupEngine<FiniteGroup>);

/// Smallest subgroup containing `seeds`, sorted by element index.
inline std::vector<Element> subgroup_closure(const FiniteGroup& g,
                                             std::span<const Element> seeds) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Element> out{g.identity()};
  seen[g.identity().index] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& s : seeds) {
      const auto e = g.multiply(out[head], s);
      if (!seen[e.index]) {
        seen[e.index] = true;
        out.push_back(e);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Element> subgroup_closure(const FiniteGroup& g,
                                             const std::vector<Element>& seeds) {
  return subgroup_closure(g, std::span<const Element>(seeds));
}

inline void FiniteGroup::check_generates() const {
  if (subgroup_closure(*this, gens_).size() != order())
    throw LiftError(ErrorCode::NotSurjective,
                    "designated generators do not generate the group");
}

inline std::int64_t element_order(const FiniteGroup& g, Element h) {
  std::int64_t k = 1;
  for (auto x = g.check(h); x != g.identity(); x = g.multiply(x, h)) ++k;
  return k;
}

inline bool commutes(const FiniteGroup& g, Element a, Element b) {
  return g.multiply(a, b) == g.multiply(b, a);
}

inline bool is_central(const FiniteGroup& g, Element h) {
  for (const auto& x : g.generators())
    if (!commutes(g, h, x)) return false;
  return true;
}

inline std::vector<Element> center(const FiniteGroup& g) {
  std::vector<Element> out;
  for (const auto& e : g.elements())
    if (is_central(g, e)) out.push_back(e);
  return out;
}

/// h^{-1} a h.
inline Element conjugate(const FiniteGroup& g, Element a, Element h) {
  return g.multiply(g.multiply(g.inverse(h), a), h);
}

/// a^{-1} b^{-1} a b.
inline Element commutator(const FiniteGroup& g, Element a, Element b) {
  return g.multiply(g.multiply(g.inverse(a), g.inverse(b)), g.multiply(a, b));
}

/// Discrete logarithms in the subgroup generated by commuting elements
/// z_1..z_t. Each element of the subgroup maps to the lexicographically least
/// exponent tuple (a_1..a_t), 0 <= a_j < order(z_j), with prod z_j^{a_j} = h.
class CentralLog {
 public:
  CentralLog(const FiniteGroup& g, std::vector<Element> gens)
      : group_(g), gens_(std::move(gens)) {
    for (const auto& z : gens_) orders_.push_back(element_order(group_, z));
    std::vector<std::int64_t> tuple(gens_.size(), 0);
    // Odometer with the last coordinate fastest gives lexicographic order.
    for (;;) {
      auto h = group_.identity();
      for (std::size_t j = 0; j < gens_.size(); ++j)
        h = group_.multiply(h, power(group_, gens_[j], tuple[j]));
      table_.try_emplace(h.index, tuple);
      std::size_t j = gens_.size();
      while (j > 0 && ++tuple[j - 1] == orders_[j - 1]) tuple[--j] = 0;
      if (j == 0) break;
    }
  }

  std::vector<std::int64_t> log(Element h) const {
    const auto it = table_.find(group_.check(h).index);
    if (it == table_.end())
      throw LiftError(ErrorCode::NotInSubgroup,
                      "element is not in the central subgroup");
    return it->second;
  }

  bool contains(Element h) const {
    return group_.owns(h) && table_.count(h.index) > 0;
  }

  /// Number of distinct elements of the subgroup.
  std::size_t subgroup_size() const { return table_.size(); }
  const std::vector<std::int64_t>& orders() const { return orders_; }
  const std::vector<Element>& generators() const { return gens_; }

 private:
  FiniteGroup group_;
  std::vector<Element> gens_;
  std::vector<std::int64_t> orders_;
  std::unordered_map<std::uint32_t, std::vector<std::int64_t>> table_;
};

inline std::vector<std::int64_t> central_log(const FiniteGroup& g, Element h,
                                             const std::vector<Element>& zs) {
  for (std::size_t j = 0; j < zs.size(); ++j)
    if (!is_central(g, zs[j]))
      throw LiftError(ErrorCode::NotCentral, "central_log generator is not central",
                      j);
  return CentralLog(g, zs).log(h);
}

/// G/N realized on cosets, with the projection from G.
struct QuotientEngine {
  FiniteGroup group;
  /// projection[i] is the coset of the element with index i.
  std::vector<std::uint32_t> projection;
  /// Least-index element of each coset.
  std::vector<Element> representatives;
  std::uint32_t source_universe = 0;

  Element project(Element e) const {
    if (e.universe != source_universe || e.index >= projection.size())
      throw LiftError(ErrorCode::EngineMismatch,
                      "element does not belong to the parent engine");
    return group.element(projection[e.index]);
  }
};

/// Builds G/N. N must be a normal subgroup given as its element set.
inline QuotientEngine quotient_engine(const FiniteGroup& g,
                                      const std::vector<Element>& subgroup) {
  std::vector<bool> in_n(g.order(), false);
  for (const auto& e : subgroup) in_n[g.check(e).index] = true;
  if (!in_n[g.identity().index])
    throw LiftError(ErrorCode::NotSubgroup, "subgroup lacks the identity");
  for (const auto& a : subgroup)
    for (const auto& b : subgroup)
      if (!in_n[g.multiply(a, b).index])
        throw LiftError(ErrorCode::NotSubgroup, "set is not closed");
  for (const auto& a : subgroup)
    for (const auto& x : g.generators())
      if (!in_n[conjugate(g, a, x).index])
        throw LiftError(ErrorCode::NotNormal, "subgroup is not normal");

  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  QuotientEngine q;
  q.source_universe = g.universe();
  q.projection.assign(g.order(), kUnset);
  // Identity coset first so the quotient identity has index 0.
  std::vector<Element> order_of_visit{g.identity()};
  for (const auto& e : g.elements())
    if (e != g.identity()) order_of_visit.push_back(e);
  for (const auto& e : order_of_visit) {
    if (q.projection[e.index] != kUnset) continue;
    const auto coset = static_cast<std::uint32_t>(q.representatives.size());
    Element least = e;
    for (const auto& n : subgroup) {
      const auto en = g.multiply(e, n);
      q.projection[en.index] = coset;
      least = std::min(least, en);
    }
    q.representatives.push_back(least);
  }

  const std::size_t qn = q.representatives.size();
  std::vector<std::uint32_t> table(qn * qn);
  for (std::size_t a = 0; a < qn; ++a)
    for (std::size_t b = 0; b < qn; ++b)
      table[a * qn + b] = q.projection[g.multiply(q.representatives[a],
                                                  q.representatives[b])
                                           .index];
  std::vector<std::uint32_t> gens;
  for (const auto& x : g.generators()) gens.push_back(q.projection[x.index]);
  q.group = FiniteGroup::from_table(std::move(table), qn, 0, std::move(gens));
  return q;
}

/// Shortlex-least word for every element (indexed by element index), by
/// breadth-first search over the Cayley graph. Letters are ordered
/// x_1, x_1^-1, x_2, x_2^-1, ...
inline std::vector<FreeWord> shortlex_words(const FiniteGroup& g) {
  std::vector<std::optional<std::vector<Letter>>> paths(g.order());
  std::vector<Element> queue{g.identity()};
  paths[g.identity().index] = std::vector<Letter>{};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto e = queue[head];
    for (std::size_t i = 0; i < g.generator_count(); ++i) {
      for (const std::int64_t sign : {1, -1}) {
        const auto step = sign > 0 ? g.generator(i) : g.inverse(g.generator(i));
        const auto f = g.multiply(e, step);
        if (paths[f.index]) continue;
        auto path = *paths[e.index];
        path.push_back({i, sign});
        paths[f.index] = std::move(path);
        queue.push_back(f);
      }
    }
  }
  std::vector<FreeWord> out;
  out.reserve(g.order());
  for (const auto& p : paths) out.push_back(reduce(*p));
  return out;
}

inline FreeWord word_for_element(const FiniteGroup& g, Element h) {
  return shortlex_words(g)[g.check(h).index];
}

/// Tries to extend x_i -> images[i] to a homomorphism source -> target.
/// Returns the full element map (indexed by source element index) when the
/// assignment is consistent on every Cayley-graph edge, which is exactly the
/// condition for a homomorphism to exist.
inline std::optional<std::vector<Element>> extend_to_homomorphism(
    const FiniteGroup& source, const std::vector<Element>& images,
    const FiniteGroup& target) {
  if (images.size() != source.generator_count())
    throw LiftError(ErrorCode::IndexOutOfRange, "wrong number of images");
  std::vector<std::optional<Element>> map(source.order());
  std::vector<Element> queue{source.identity()};
  map[source.identity().index] = target.identity();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto e = queue[head];
    const auto fe = *map[e.index];
    for (std::size_t i = 0; i < images.size(); ++i) {
      const auto f = source.multiply(e, source.generator(i));
      const auto ff = target.multiply(fe, images[i]);
      if (!map[f.index]) {
        map[f.index] = ff;
        queue.push_back(f);
      } else if (*map[f.index] != ff) {
        return std::nullopt;
      }
    }
  }
  std::vector<Element> out;
  out.reserve(map.size());
  for (const auto& m : map) out.push_back(*m);
  return out;
}

/// True when the images generate the whole group.
inline bool generates(const FiniteGroup& g, const std::vector<Element>& images) {
  return subgroup_closure(g, images).size() == g.order();
}

}  // namespace liftaut

#endif  // LIFTAUT_GROUP_HPP
