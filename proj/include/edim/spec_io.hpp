#pragma once

// The group-description language and report serialization.
//
//   group   := product ( "/" mu )?
//   product := factor ( "*" factor )*
//   factor  := "Spin(" int ")" | "Sp(" int ")" | "SL(" int ")" | "E6" | factor "^" int
//   mu      := "[" tuple ( "," tuple )* "]"
//
// A tuple has one entry per factor; Spin(4k) contributes a nested pair (a,b).
// Sp(N) is the group of rank N/2. Whitespace is ignored between tokens.

#include <string>
#include <string_view>

#include "edim/engine.hpp"

namespace edim::spec_io {

inline constexpr int kSchemaVersion = 1;

/// Errors: SyntaxError, ArityMismatch, ValueOutOfRange (all positioned).
catalog::GroupSpec parse(std::string_view text);

/// One mu-style tuple against the center coordinates of `factors`, e.g. "(1,3)".
abelian::GroupElement parse_element(std::string_view text, const std::vector<catalog::SimpleFactor>& factors);

/// Canonical text; parse(render(s)) == s.
std::string render(const catalog::GroupSpec& spec);
std::string render_element(const abelian::GroupElement& x, const std::vector<catalog::SimpleFactor>& factors);

enum class Format { Json, Text };

std::string emit(const engine::EdReport& report, Format format);

/// Inverse of emit(report, Format::Json). Throws MalformedReport.
engine::EdReport parse_report(std::string_view json);

}  // namespace edim::spec_io
