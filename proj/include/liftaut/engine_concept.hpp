#ifndef LIFTAUT_ENGINE_CONCEPT_HPP
#define LIFTAUT_ENGINE_CONCEPT_HPP

#include <concepts>
#include <cstddef>
#include <cstdint>

namespace liftaut {

/// The contract every concrete group realization satisfies. Elements are
/// opaque values with equality and a total order within their engine.
template <class E>
concept GroupEngine = requires(const E& g, typename E::element_type a,
                               std::size_t i) {
  typename E::element_type;
  { g.identity() } -> std::same_as<typename E::element_type>;
  { g.multiply(a, a) } -> std::same_as<typename E::element_type>;
  { g.inverse(a) } -> std::same_as<typename E::element_type>;
  { g.generator(i) } -> std::same_as<typename E::element_type>;
  { g.generator_count() } -> std::convertible_to<std::size_t>;
  { g.order() } -> std::convertible_to<std::size_t>;
  { a == a } -> std::convertible_to<bool>;
  { a < a } -> std::convertible_to<bool>;
};

/// a^e by square-and-multiply; negative e goes through the inverse.
template <GroupEngine E>
typename E::element_type power(const E& g, typename E::element_type a,
                               std::int64_t e) {
  if (e < 0) {
    a = g.inverse(a);
    e = -e;
  }
  auto result = g.identity();
  while (e > 0) {
    if (e & 1) result = g.multiply(result, a);
    e >>= 1;
    if (e > 0) a = g.multiply(a, a);
  }
  return result;
}

}  // namespace liftaut

#endif  // LIFTAUT_ENGINE_CONCEPT_HPP
