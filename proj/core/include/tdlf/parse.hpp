#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tdlf/seminorm.hpp"
#include "tdlf/seqspec.hpp"
#include "tdlf/series.hpp"
#include "tdlf/submodule.hpp"

namespace tdlf {

struct ParseOptions {
  std::uint64_t prime = 5;
  /// Absolute p-adic precision given to every literal coefficient.
  std::int64_t precision = 32;
  /// Field used when the literal carries neither O(t^N) nor tail(...).
  std::optional<FieldKind> field;
};

/// Series literal such as "p^2*t^-1 + t", "1 + t + O(t^6)" or
/// "1 + tail(v>=left 0 slope 1; right 3)"; a JSON document is also accepted.
/// Throws ParseError with the 1-based line and column of the problem.
Series parse_series(const std::string& text, const ParseOptions& opts);

/// Literal that parse_series maps back to `s` when every coefficient has
/// the absolute precision used for parsing. Coefficients are written with
/// symmetric residues.
std::string render(const Series& s);

SeqSpec parse_seqspec(const std::string& text);
SeminormSpec parse_seminorm(const std::string& text, FieldKind fallback = FieldKind::MixedChar);
/// JSON or one of the names accepted by named().
SubmoduleSpec parse_submodule(const std::string& text, FieldKind fallback = FieldKind::MixedChar);

}  // namespace tdlf
