#include <functional>

#include <gtest/gtest.h>

#include "liftaut/presentation.hpp"
#include "liftaut/todd_coxeter.hpp"
#include "support.hpp"

using namespace liftaut;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const LiftError& e) {
    return e.code();
  }
  return ErrorCode::Config;
}

std::optional<std::size_t> index_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const LiftError& e) {
    return e.index();
  }
  return std::nullopt;
}

}  // namespace

TEST(Presentation, ParsesDocument) {
  const auto doc = parse_presentation_document(support::read_fixture("q8.pres"));
  EXPECT_EQ(doc.presentation.names, (std::vector<std::string>{"i", "j"}));
  EXPECT_EQ(doc.presentation.relator_count(), 3u);
  ASSERT_EQ(doc.central.z_words.size(), 1u);
  EXPECT_EQ(format_word(doc.central.z_words[0], doc.presentation.names), "i^2");
}

TEST(Presentation, FormatRoundTrip) {
  for (const auto& name : support::corpus()) {
    const auto doc = parse_presentation_document(support::read_fixture(name));
    const auto again =
        parse_presentation_document(format_presentation(doc.presentation, doc.central));
    EXPECT_EQ(again.presentation, doc.presentation) << name;
    EXPECT_EQ(again.central, doc.central) << name;
  }
}

TEST(Presentation, SyntaxErrorsCarryLineNumbers) {
  EXPECT_EQ(code_of([] { parse_presentation("relator: x\ngenerators: x\n"); }),
            ErrorCode::Syntax);
  EXPECT_EQ(index_of([] { parse_presentation("generators: x\n\nrelator: x^\n"); }), 3u);
  EXPECT_EQ(code_of([] { parse_presentation("generators: x\nrelator: x^\n"); }),
            ErrorCode::MalformedExponent);
  EXPECT_EQ(code_of([] { parse_presentation("generators: x\nrelator: y\n"); }),
            ErrorCode::UnknownGenerator);
  EXPECT_EQ(code_of([] { parse_presentation("generators: x x\n"); }),
            ErrorCode::DuplicateGenerator);
  EXPECT_EQ(code_of([] { parse_presentation("generators: x\ngenerators: y\n"); }),
            ErrorCode::Syntax);
  EXPECT_EQ(code_of([] { parse_presentation("generators: x\nfoo: x\n"); }),
            ErrorCode::Syntax);
  EXPECT_EQ(code_of([] { parse_presentation("# nothing\n"); }), ErrorCode::Syntax);
}

TEST(Presentation, MetacyclicFixtureIsOrder81) {
  const auto doc = parse_presentation_document(support::read_fixture("metacyclic_x3.pres"));
  EXPECT_EQ(todd_coxeter(doc.presentation, 1000).degree, 81u);
}

TEST(Presentation, PhiFileNeedsOneLinePerGenerator) {
  const auto pres = parse_presentation(support::read_fixture("q8.pres"));
  EXPECT_EQ(parse_quotient_aut("image: j\nimage: i*j\n", pres).rep_words.size(), 2u);
  EXPECT_EQ(code_of([&] { parse_quotient_aut("image: j\n", pres); }), ErrorCode::Syntax);
  EXPECT_EQ(code_of([&] { parse_quotient_aut("image: j\nmap: i\n", pres); }),
            ErrorCode::Syntax);
  EXPECT_EQ(index_of([&] { parse_quotient_aut("image: j\nimage: i^x\n", pres); }), 2u);
  const QuotientAutSpec spec{{parse_word("j", pres.names), parse_word("i*j^-1", pres.names)}};
  EXPECT_EQ(parse_quotient_aut(format_quotient_aut(spec, pres), pres), spec);
}

TEST(Presentation, ValidateCentral) {
  const auto doc = parse_presentation_document(support::read_fixture("metacyclic_x3.pres"));
  const auto g = todd_coxeter(doc.presentation, 1000).group;
  EXPECT_NO_THROW(validate_central(doc.central, doc.presentation, g));
  const CentralSubgroupSpec bad{{parse_word("x^3", {"x", "y"}), parse_word("y", {"x", "y"})}};
  EXPECT_EQ(code_of([&] { validate_central(bad, doc.presentation, g); }),
            ErrorCode::NotCentral);
  EXPECT_EQ(index_of([&] { validate_central(bad, doc.presentation, g); }), 1u);
  // x generates a non-central cyclic subgroup
  EXPECT_EQ(code_of([&] {
              validate_central({{FreeWord::generator(0)}}, doc.presentation, g);
            }),
            ErrorCode::NotCentral);
}

TEST(Presentation, ValidateQuotientAut) {
  const auto doc = parse_presentation_document(support::read_fixture("q8.pres"));
  const auto g = todd_coxeter(doc.presentation, 1000).group;
  const auto n = subgroup_closure(g, std::vector<Element>{
                                          evaluate_at_generators(doc.central.z_words[0], g)});
  const auto& names = doc.presentation.names;
  EXPECT_NO_THROW(validate_quotient_aut(identity_quotient_aut(doc.presentation),
                                        doc.presentation, g, n));
  // i -> i, j -> i: not surjective on C2 x C2
  EXPECT_EQ(code_of([&] {
              validate_quotient_aut({{parse_word("i", names), parse_word("i", names)}},
                                    doc.presentation, g, n);
            }),
            ErrorCode::NotSurjective);
  // i -> 1, j -> j: homomorphism but not onto
  EXPECT_EQ(code_of([&] {
              validate_quotient_aut({{FreeWord(), parse_word("j", names)}}, doc.presentation,
                                    g, n);
            }),
            ErrorCode::NotSurjective);
}

TEST(Presentation, QuotientMapMustBeWellDefined) {
  // C4/<x^2> is C2; x -> x^2 would send the generator to the identity.
  const auto doc = parse_presentation_document(support::read_fixture("c4.pres"));
  const auto g = todd_coxeter(doc.presentation, 100).group;
  const auto n = subgroup_closure(g, std::vector<Element>{power(g, g.generator(0), 2)});
  EXPECT_EQ(code_of([&] {
              validate_quotient_aut({{FreeWord::generator(0, 2)}}, doc.presentation, g, n);
            }),
            ErrorCode::NotSurjective);

  // C2 x C4 / <c^2>: a -> c, c -> c satisfies every relator of G in the
  // quotient but is not onto.
  const auto d2 = parse_presentation_document(support::read_fixture("c2c4.pres"));
  const auto g2 = todd_coxeter(d2.presentation, 100).group;
  const auto n2 = subgroup_closure(g2, std::vector<Element>{power(g2, g2.generator(1), 2)});
  EXPECT_EQ(code_of([&] {
              validate_quotient_aut({{FreeWord::generator(1), FreeWord::generator(1)}},
                                    d2.presentation, g2, n2);
            }),
            ErrorCode::NotSurjective);
}

TEST(Presentation, NonHomomorphismNamesRelator) {
  // S3 = <a, b | a^2, b^3, (ab)^2>, N trivial; a -> b, b -> a breaks a^2.
  const Presentation s3{{"a", "b"},
                        {FreeWord::generator(0, 2), FreeWord::generator(1, 3),
                         word_power(FreeWord::generator(0) * FreeWord::generator(1), 2)}};
  const auto g = todd_coxeter(s3, 100).group;
  const std::vector<Element> trivial{g.identity()};
  EXPECT_EQ(code_of([&] {
              validate_quotient_aut({{FreeWord::generator(1), FreeWord::generator(0)}}, s3, g,
                                    trivial);
            }),
            ErrorCode::NotHomomorphism);
  EXPECT_EQ(index_of([&] {
              validate_quotient_aut({{FreeWord::generator(1), FreeWord::generator(0)}}, s3, g,
                                    trivial);
            }),
            0u);
}
