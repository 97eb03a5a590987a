#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "tdlf/padic.hpp"
#include "tdlf/seminorm.hpp"
#include "tdlf/series.hpp"
#include "tdlf/submodule.hpp"

namespace tdlf {

/// π_x(y) = Σ_i x_i y_{-i}, the t^0 coefficient of xy.
///
/// With a target the value is reported modulo p^target, and
/// PrecisionExhausted is thrown if it is not known that far.
PAdic pairing(const Series& x, const Series& y, std::optional<std::int64_t> target = std::nullopt);

/// Values a_i = w(t^{-i}) of a linear form: explicit on [lo, hi], and
/// outside the window described by valuation lower bounds (Const(+inf)
/// meaning the values vanish).
struct FunctionalValues {
  FieldKind field = FieldKind::MixedChar;
  std::uint64_t prime = 2;
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  std::map<std::int64_t, PAdic> values;
  TailSpec left = TailSpec::constant(ExtInt::plus_inf());
  TailSpec right = TailSpec::constant(ExtInt::plus_inf());
};

/// The series x = Σ a_i t^i with π_x(t^{-i}) = a_i. Throws
/// NonConvergentValues if the values cannot come from a continuous form.
Series functional_from_values(const FunctionalValues& a);

/// Σ p^{1-k_{-i}} t^i.
SubmoduleSpec pseudo_polar(const SubmoduleSpec& m);
/// Σ p^{-k_{-i}} t^i.
SubmoduleSpec polar(const SubmoduleSpec& m);

/// n_i = -k_{-i}: ‖x‖ <= q^e iff sup_{y in b} |π_x(y)| <= q^e.
/// Throws NotBounded (equal characteristic) or NotCompactoid (mixed).
SeminormSpec dual_seminorm(const SubmoduleSpec& b);

/// For compactoid b and c, an index j with c - k_j < 0, i.e.
/// q^c·|π_j|_b < 1 = |π_j|_{O{{t}}}.
std::int64_t ctopology_witness_index(const SubmoduleSpec& b, std::int64_t c);

}  // namespace tdlf
