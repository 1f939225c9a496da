#include "ordext/error.hpp"

namespace ordext {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotFiniteType: return "NotFiniteType";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::LinearlyDependent: return "LinearlyDependent";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::WordMismatch: return "WordMismatch";
    case ErrorKind::MissingEmbedding: return "MissingEmbedding";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::NoTwistingElement: return "NoTwistingElement";
    case ErrorKind::DetNotGInvariant: return "DetNotGInvariant";
    case ErrorKind::HypothesesViolated: return "HypothesesViolated";
    case ErrorKind::ParabolicIsBorel: return "ParabolicIsBorel";
    case ErrorKind::IncomparableEntry: return "IncomparableEntry";
    case ErrorKind::SmallPrime: return "SmallPrime";
    case ErrorKind::NotClosedRootSet: return "NotClosedRootSet";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

bool is_hypothesis_guard(ErrorKind kind) {
  return kind == ErrorKind::HypothesisNotMet ||
         kind == ErrorKind::NoTwistingElement ||
         kind == ErrorKind::HypothesesViolated;
}

namespace {
std::string compose(ErrorKind kind, const std::string& message,
                    const std::vector<std::string>& details) {
  std::string out = std::string(to_string(kind)) + ": " + message;
  for (const auto& d : details) out += "\n  - " + d;
  return out;
}
}  // namespace

Error::Error(ErrorKind kind, const std::string& message,
             std::vector<std::string> details)
    : std::runtime_error(compose(kind, message, details)),
      kind_(kind),
      details_(std::move(details)) {}

}  // namespace ordext
