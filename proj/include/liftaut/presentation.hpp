#ifndef LIFTAUT_PRESENTATION_HPP
#define LIFTAUT_PRESENTATION_HPP

#include <cstddef>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "liftaut/error.hpp"
#include "liftaut/group.hpp"
#include "liftaut/words.hpp"

namespace liftaut {

/// <x_1..x_n | r_1..r_m>.
struct Presentation {
  std::vector<std::string> names;
  std::vector<FreeWord> relators;

  std::size_t generator_count() const noexcept { return names.size(); }
  std::size_t relator_count() const noexcept { return relators.size(); }

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Words f_1..f_t whose values generate the central subgroup N.
struct CentralSubgroupSpec {
  std::vector<FreeWord> z_words;

  friend bool operator==(const CentralSubgroupSpec&,
                         const CentralSubgroupSpec&) = default;
};

/// One representative word per generator: x_i N is sent to rep_i N.
struct QuotientAutSpec {
  std::vector<FreeWord> rep_words;

  friend bool operator==(const QuotientAutSpec&,
                         const QuotientAutSpec&) = default;
  friend auto operator<=>(const QuotientAutSpec&,
                          const QuotientAutSpec&) = default;
};

struct PresentationDocument {
  Presentation presentation;
  CentralSubgroupSpec central;
};

inline void check_presentation(const Presentation& pres) {
  if (pres.names.empty())
    throw LiftError(ErrorCode::Syntax, "presentation needs a generator");
  std::set<std::string> seen;
  for (const auto& n : pres.names) {
    if (n.empty() || !detail::is_name_start(n.front()))
      throw LiftError(ErrorCode::Syntax, "invalid generator name '" + n + "'");
    for (char c : n)
      if (!detail::is_name_char(c))
        throw LiftError(ErrorCode::Syntax,
                        "invalid generator name '" + n + "'");
    if (!seen.insert(n).second)
      throw LiftError(ErrorCode::DuplicateGenerator,
                      "duplicate generator '" + n + "'");
  }
  for (std::size_t k = 0; k < pres.relators.size(); ++k)
    for (const auto& l : pres.relators[k].letters())
      if (l.gen >= pres.names.size())
        throw LiftError(ErrorCode::IndexOutOfRange,
                        "relator uses an undeclared generator", k);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

/// Splits "key: value"; returns false when the line has no colon.
inline bool split_keyword(std::string_view line, std::string_view& key,
                          std::string_view& value) {
  const auto colon = line.find(':');
  if (colon == std::string_view::npos) return false;
  key = trim(line.substr(0, colon));
  value = trim(line.substr(colon + 1));
  return true;
}

[[noreturn]] inline void rethrow_at_line(const LiftError& e, std::size_t line) {
  throw LiftError(e.code(),
                  "line " + std::to_string(line) + ": " + e.message(),
                  line);
}

}  // namespace detail

/// Line-oriented format:
///   generators: x y        (exactly once, first)
///   relator: x^2*y^-1      (any number)
///   central: x^2           (any number)
///   # comment
inline PresentationDocument parse_presentation_document(std::string_view text) {
  PresentationDocument doc;
  bool have_generators = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::string_view key, value;
    if (!detail::split_keyword(line, key, value))
      throw LiftError(ErrorCode::Syntax,
                      "line " + std::to_string(line_no) + ": expected 'keyword: ...'",
                      line_no);
    if (key == "generators") {
      if (have_generators)
        throw LiftError(ErrorCode::Syntax,
                        "line " + std::to_string(line_no) +
                            ": duplicate 'generators:' line",
                        line_no);
      std::istringstream names{std::string(value)};
      std::string name;
      while (names >> name) doc.presentation.names.push_back(name);
      try {
        check_presentation(doc.presentation);
      } catch (const LiftError& e) {
        detail::rethrow_at_line(e, line_no);
      }
      have_generators = true;
      continue;
    }
    if (!have_generators)
      throw LiftError(ErrorCode::Syntax,
                      "line " + std::to_string(line_no) +
                          ": 'generators:' must come first",
                      line_no);
    if (key != "relator" && key != "central")
      throw LiftError(ErrorCode::Syntax,
                      "line " + std::to_string(line_no) + ": unknown keyword '" +
                          std::string(key) + "'",
                      line_no);
    FreeWord w;
    try {
      w = parse_word(value, doc.presentation.names);
    } catch (const LiftError& e) {
      detail::rethrow_at_line(e, line_no);
    }
    if (key == "relator")
      doc.presentation.relators.push_back(std::move(w));
    else
      doc.central.z_words.push_back(std::move(w));
  }
  if (!have_generators)
    throw LiftError(ErrorCode::Syntax, "missing 'generators:' line");
  return doc;
}

inline Presentation parse_presentation(std::string_view text) {
  return parse_presentation_document(text).presentation;
}

inline std::string format_presentation(const Presentation& pres,
                                       const CentralSubgroupSpec& central = {}) {
  std::string out = "generators:";
  for (const auto& n : pres.names) out += " " + n;
  out += "\n";
  for (const auto& r : pres.relators)
    out += "relator: " + format_word(r, pres.names) + "\n";
  for (const auto& z : central.z_words)
    out += "central: " + format_word(z, pres.names) + "\n";
  return out;
}

/// `image: word` lines, exactly one per generator in generator order.
inline QuotientAutSpec parse_quotient_aut(std::string_view text,
                                          const Presentation& pres) {
  QuotientAutSpec spec;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::string_view key, value;
    if (!detail::split_keyword(line, key, value) || key != "image")
      throw LiftError(ErrorCode::Syntax,
                      "line " + std::to_string(line_no) + ": expected 'image: word'",
                      line_no);
    try {
      spec.rep_words.push_back(parse_word(value, pres.names));
    } catch (const LiftError& e) {
      detail::rethrow_at_line(e, line_no);
    }
  }
  if (spec.rep_words.size() != pres.generator_count())
    throw LiftError(ErrorCode::Syntax,
                    "expected " + std::to_string(pres.generator_count()) +
                        " 'image:' lines, found " +
                        std::to_string(spec.rep_words.size()));
  return spec;
}

inline std::string format_quotient_aut(const QuotientAutSpec& spec,
                                       const Presentation& pres) {
  std::string out;
  for (const auto& w : spec.rep_words)
    out += "image: " + format_word(w, pres.names) + "\n";
  return out;
}

/// Checks that the engine's generators satisfy every relator.
inline void check_realizes(const Presentation& pres, const FiniteGroup& g) {
  if (g.generator_count() != pres.generator_count())
    throw LiftError(ErrorCode::IndexOutOfRange,
                    "engine has " + std::to_string(g.generator_count()) +
                        " generators, presentation has " +
                        std::to_string(pres.generator_count()));
  for (std::size_t k = 0; k < pres.relators.size(); ++k)
    if (evaluate_at_generators(pres.relators[k], g) != g.identity())
      throw LiftError(ErrorCode::NotHomomorphism,
                      "relator " + std::to_string(k) + " fails in the engine", k);
}

/// Every z-word must evaluate to an element commuting with all generators.
inline void validate_central(const CentralSubgroupSpec& spec,
                             const Presentation& pres, const FiniteGroup& g) {
  if (spec.z_words.empty())
    throw LiftError(ErrorCode::NotCentral, "no central generator words given");
  for (std::size_t i = 0; i < spec.z_words.size(); ++i) {
    for (const auto& l : spec.z_words[i].letters())
      if (l.gen >= pres.generator_count())
        throw LiftError(ErrorCode::IndexOutOfRange,
                        "central word uses an undeclared generator", i);
    if (!is_central(g, evaluate_at_generators(spec.z_words[i], g)))
      throw LiftError(ErrorCode::NotCentral,
                      "central word " + std::to_string(i) + " (" +
                          format_word(spec.z_words[i], pres.names) +
                          ") is not central",
                      i);
  }
}

/// Checks that x_i N -> rep_i N is an automorphism of G/N, given the quotient.
inline void validate_quotient_aut(const QuotientAutSpec& spec,
                                  const Presentation& pres,
                                  const FiniteGroup& g,
                                  const QuotientEngine& quotient) {
  if (spec.rep_words.size() != pres.generator_count())
    throw LiftError(ErrorCode::IndexOutOfRange,
                    "need one representative word per generator");
  std::vector<Element> images;
  for (const auto& w : spec.rep_words)
    images.push_back(quotient.project(evaluate_at_generators(w, g)));
  const auto& q = quotient.group;
  for (std::size_t k = 0; k < pres.relators.size(); ++k)
    if (evaluate(pres.relators[k], images, q) != q.identity())
      throw LiftError(ErrorCode::NotHomomorphism,
                      "relator " + std::to_string(k) +
                          " does not vanish in the quotient",
                      k);
  // The relators of G/N also include words for N; the Cayley-graph check
  // covers them without needing those words.
  if (!extend_to_homomorphism(q, images, q))
    throw LiftError(ErrorCode::NotHomomorphism,
                    "map is not well defined on the quotient",
                    pres.relators.size());
  if (!generates(q, images))
    throw LiftError(ErrorCode::NotSurjective,
                    "images do not generate the quotient");
}

inline void validate_quotient_aut(const QuotientAutSpec& spec,
                                  const Presentation& pres,
                                  const FiniteGroup& g,
                                  const std::vector<Element>& subgroup) {
  validate_quotient_aut(spec, pres, g, quotient_engine(g, subgroup));
}

/// The identity automorphism of G/N, with x_i as its own representative.
inline QuotientAutSpec identity_quotient_aut(const Presentation& pres) {
  QuotientAutSpec spec;
  for (std::size_t i = 0; i < pres.generator_count(); ++i)
    spec.rep_words.push_back(FreeWord::generator(i));
  return spec;
}

}  // namespace liftaut

#endif  // LIFTAUT_PRESENTATION_HPP
