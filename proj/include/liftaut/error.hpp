#ifndef LIFTAUT_ERROR_HPP
#define LIFTAUT_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace liftaut {

enum class ErrorCode {
  // parsing
  Syntax,
  UnknownGenerator,
  MalformedExponent,
  EmptyToken,
  DuplicateGenerator,
  // validation
  NotCentral,
  NotHomomorphism,
  NotSurjective,
  DependentCentralGenerators,
  EngineMismatch,
  IndexOutOfRange,
  // engines
  CosetLimitExceeded,
  NotInSubgroup,
  NotSubgroup,
  NotNormal,
  // linear algebra
  InfiniteSolutionSet,
  // lifting
  ResidueOutsideN,
  NotASolution,
  CriterionMismatch,
  NotSquarefree,
  // oracle / case study
  BudgetExceeded,
  SearchFailed,
  AssertionFailed,
  Config,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "Syntax";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::MalformedExponent: return "MalformedExponent";
    case ErrorCode::EmptyToken: return "EmptyToken";
    case ErrorCode::DuplicateGenerator: return "DuplicateGenerator";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::DependentCentralGenerators: return "DependentCentralGenerators";
    case ErrorCode::EngineMismatch: return "EngineMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::CosetLimitExceeded: return "CosetLimitExceeded";
    case ErrorCode::NotInSubgroup: return "NotInSubgroup";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::InfiniteSolutionSet: return "InfiniteSolutionSet";
    case ErrorCode::ResidueOutsideN: return "ResidueOutsideN";
    case ErrorCode::NotASolution: return "NotASolution";
    case ErrorCode::CriterionMismatch: return "CriterionMismatch";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SearchFailed: return "SearchFailed";
    case ErrorCode::AssertionFailed: return "AssertionFailed";
    case ErrorCode::Config: return "Config";
  }
  return "Unknown";
}

/// Every failure in the library is reported as a LiftError carrying a code,
/// optionally the index of the offending item (relator, generator word, line).
class LiftError : public std::runtime_error {
 public:
  LiftError(ErrorCode code, const std::string& what,
            std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        message_(what),
        index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }
  /// The message without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::optional<std::size_t> index_;
};

}  // namespace liftaut

#endif  // LIFTAUT_ERROR_HPP
