#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace edim {

enum class ErrorKind {
  MalformedElement,
  TrivialSocle,
  UnsupportedFamilyMix,
  BadParameter,
  MalformedMuGenerator,
  UnsupportedComponent,
  NotSpinFamily,
  NotSpFamily,
  NotSLFamily,
  NoAdmissibleLift,
  TooLarge,
  HypothesisFailed,
  ExtensionHypothesisFailed,
  NotReduced,
  SyntaxError,
  ArityMismatch,
  ValueOutOfRange,
  MalformedReport,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `position` is set for parse errors
/// and is a byte offset into the source text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail,
        std::optional<std::size_t> position = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::string detail_;
  std::optional<std::size_t> position_;
};

}  // namespace edim
