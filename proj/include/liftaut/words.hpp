#ifndef LIFTAUT_WORDS_HPP
#define LIFTAUT_WORDS_HPP

#include <cctype>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "liftaut/engine_concept.hpp"
#include "liftaut/error.hpp"

namespace liftaut {

/// One run x_gen^exp of a word. In a reduced word exp is never zero.
struct Letter {
  std::size_t gen = 0;
  std::int64_t exp = 0;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

class FreeWord;
FreeWord reduce(std::span<const Letter> raw);

/// A freely reduced word in run-length form: adjacent letters have distinct
/// generators and every exponent is nonzero. The empty word is the identity.
class FreeWord {
 public:
  FreeWord() = default;

  static FreeWord generator(std::size_t gen, std::int64_t exp = 1) {
    return reduce(std::vector<Letter>{{gen, exp}});
  }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  std::size_t size() const noexcept { return letters_.size(); }

  /// Sum of |exp|, i.e. the length of the word over letters x^{+-1}.
  std::int64_t length() const noexcept {
    std::int64_t total = 0;
    for (const auto& l : letters_) total += l.exp < 0 ? -l.exp : l.exp;
    return total;
  }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  friend FreeWord reduce(std::span<const Letter> raw);
  std::vector<Letter> letters_;
};

/// Free reduction to normal form. A single stack pass reaches the fixpoint:
/// merging can only ever expose the previous top of the stack.
inline FreeWord reduce(std::span<const Letter> raw) {
  FreeWord w;
  auto& out = w.letters_;
  for (const auto& l : raw) {
    if (l.exp == 0) continue;
    if (!out.empty() && out.back().gen == l.gen) {
      out.back().exp += l.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return w;
}

inline FreeWord reduce(const std::vector<Letter>& raw) {
  return reduce(std::span<const Letter>(raw));
}

inline FreeWord inverse(const FreeWord& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  for (auto& l : out) l.exp = -l.exp;
  return reduce(out);
}

inline FreeWord concat(const FreeWord& u, const FreeWord& v) {
  std::vector<Letter> raw = u.letters();
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  return reduce(raw);
}

inline FreeWord operator*(const FreeWord& u, const FreeWord& v) {
  return concat(u, v);
}

/// w^e as a word (e may be negative).
inline FreeWord word_power(const FreeWord& w, std::int64_t e) {
  const FreeWord base = e < 0 ? inverse(w) : w;
  FreeWord out;
  for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) out = concat(out, base);
  return out;
}

/// Signed exponent sum of each generator: the image of w in Z^n.
inline std::vector<std::int64_t> exponent_vector(const FreeWord& w,
                                                 std::size_t n) {
  std::vector<std::int64_t> v(n, 0);
  for (const auto& l : w.letters()) {
    if (l.gen >= n)
      throw LiftError(ErrorCode::IndexOutOfRange,
                      "generator index " + std::to_string(l.gen) +
                          " out of range for " + std::to_string(n) +
                          " generators");
    v[l.gen] += l.exp;
  }
  return v;
}

/// Substitutes images[gen] for each generator and multiplies out in the
/// engine. Runs are evaluated by square-and-multiply.
template <GroupEngine E>
typename E::element_type evaluate(
    const FreeWord& w, std::span<const typename E::element_type> images,
    const E& engine) {
  auto acc = engine.identity();
  for (const auto& l : w.letters()) {
    if (l.gen >= images.size())
      throw LiftError(ErrorCode::IndexOutOfRange,
                      "word uses generator " + std::to_string(l.gen) +
                          " but only " + std::to_string(images.size()) +
                          " images were supplied");
    acc = engine.multiply(acc, power(engine, images[l.gen], l.exp));
  }
  return acc;
}

template <GroupEngine E>
typename E::element_type evaluate(
    const FreeWord& w, const std::vector<typename E::element_type>& images,
    const E& engine) {
  return evaluate(w, std::span<const typename E::element_type>(images),
                  engine);
}

/// Evaluates at the engine's own generators.
template <GroupEngine E>
typename E::element_type evaluate_at_generators(const FreeWord& w,
                                                const E& engine) {
  std::vector<typename E::element_type> gens;
  gens.reserve(engine.generator_count());
  for (std::size_t i = 0; i < engine.generator_count(); ++i)
    gens.push_back(engine.generator(i));
  return evaluate(w, gens, engine);
}

namespace detail {

inline bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
inline bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

inline std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace detail

/// Parses `term (* term)*` or `1`, where term is `name` or `name^int`.
/// Whitespace is ignored.
inline FreeWord parse_word(std::string_view text,
                           std::span<const std::string> names) {
  const std::string s = detail::strip_spaces(text);
  if (s.empty()) throw LiftError(ErrorCode::EmptyToken, "empty word");
  if (s == "1") return {};

  std::vector<Letter> raw;
  std::size_t pos = 0;
  while (true) {
    if (pos >= s.size() || s[pos] == '*')
      throw LiftError(ErrorCode::EmptyToken,
                      "empty term at offset " + std::to_string(pos) + " in '" +
                          s + "'");
    if (!detail::is_name_start(s[pos]))
      throw LiftError(ErrorCode::Syntax, "unexpected character '" +
                                             std::string(1, s[pos]) +
                                             "' in '" + s + "'");
    const std::size_t start = pos;
    while (pos < s.size() && detail::is_name_char(s[pos])) ++pos;
    const std::string name = s.substr(start, pos - start);

    std::size_t gen = names.size();
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) gen = i;
    if (gen == names.size())
      throw LiftError(ErrorCode::UnknownGenerator,
                      "unknown generator '" + name + "'");

    std::int64_t exp = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      std::size_t end = pos;
      if (end < s.size() && (s[end] == '-' || s[end] == '+')) ++end;
      while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end])))
        ++end;
      std::string_view digits(s.data() + pos, end - pos);
      if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
      const auto [ptr, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), exp);
      if (digits.empty() || ec != std::errc() ||
          ptr != digits.data() + digits.size())
        throw LiftError(ErrorCode::MalformedExponent,
                        "malformed exponent after '" + name + "^' in '" + s +
                            "'");
      pos = end;
    }
    raw.push_back({gen, exp});

    if (pos == s.size()) break;
    if (s[pos] != '*')
      throw LiftError(ErrorCode::Syntax, "expected '*' at offset " +
                                             std::to_string(pos) + " in '" +
                                             s + "'");
    ++pos;
  }
  return reduce(raw);
}

inline FreeWord parse_word(std::string_view text,
                           const std::vector<std::string>& names) {
  return parse_word(text, std::span<const std::string>(names));
}

/// Inverse of parse_word: `x^2*y^-1`, or `1` for the identity.
inline std::string format_word(const FreeWord& w,
                               std::span<const std::string> names) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += '*';
    out += l.gen < names.size() ? names[l.gen] : "g" + std::to_string(l.gen);
    if (l.exp != 1) out += '^' + std::to_string(l.exp);
  }
  return out;
}

inline std::string format_word(const FreeWord& w,
                               const std::vector<std::string>& names) {
  return format_word(w, std::span<const std::string>(names));
}

}  // namespace liftaut

#endif  // LIFTAUT_WORDS_HPP
