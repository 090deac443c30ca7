#include "edim/error.hpp"

namespace edim {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedElement: return "MalformedElement";
    case ErrorKind::TrivialSocle: return "TrivialSocle";
    case ErrorKind::UnsupportedFamilyMix: return "UnsupportedFamilyMix";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::MalformedMuGenerator: return "MalformedMuGenerator";
    case ErrorKind::UnsupportedComponent: return "UnsupportedComponent";
    case ErrorKind::NotSpinFamily: return "NotSpinFamily";
    case ErrorKind::NotSpFamily: return "NotSpFamily";
    case ErrorKind::NotSLFamily: return "NotSLFamily";
    case ErrorKind::NoAdmissibleLift: return "NoAdmissibleLift";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::ExtensionHypothesisFailed: return "ExtensionHypothesisFailed";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::ValueOutOfRange: return "ValueOutOfRange";
    case ErrorKind::MalformedReport: return "MalformedReport";
  }
  return "Unknown";
}

namespace {
std::string compose(ErrorKind kind, const std::string& detail,
                    std::optional<std::size_t> position) {
  std::string msg(to_string(kind));
  if (position) msg += " at offset " + std::to_string(*position);
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}
}  // namespace

Error::Error(ErrorKind kind, const std::string& detail,
             std::optional<std::size_t> position)
    : std::runtime_error(compose(kind, detail, position)),
      kind_(kind),
      detail_(detail),
      position_(position) {}

}  // namespace edim
