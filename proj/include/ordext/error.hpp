#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ordext {

enum class ErrorKind {
  NotFiniteType,
  RankMismatch,
  LinearlyDependent,
  GroupTooLarge,
  NotReduced,
  WordMismatch,
  MissingEmbedding,
  SearchSpaceTooLarge,
  HypothesisNotMet,
  NoTwistingElement,
  DetNotGInvariant,
  HypothesesViolated,
  ParabolicIsBorel,
  IncomparableEntry,
  SmallPrime,
  NotClosedRootSet,
  InvalidArgument,
  ParseError,
  Overflow,
};

const char* to_string(ErrorKind kind);

// Guard kinds signal that a theorem hypothesis is missing, as opposed to bad
// input. The CLI maps them to a distinct exit code.
bool is_hypothesis_guard(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<std::string> details = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& details() const noexcept { return details_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> details_;
};

}  // namespace ordext
