#pragma once

#include <cstdint>

#include "tdlf/padic.hpp"
#include "tdlf/seqspec.hpp"
#include "tdlf/series.hpp"

namespace tdlf {

/// ‖x‖ = sup_i |x_i| q^{n_i}, the gauge seminorm of Σ p^{n_i} t^i.
struct SeminormSpec {
  SeqSpec seq;
  FieldKind field = FieldKind::MixedChar;
  friend bool operator==(const SeminormSpec&, const SeminormSpec&) = default;
};

/// Throws NonAdmissibleSequence naming the violated condition.
void validate(const SeminormSpec& spec);
bool is_admissible(const SeminormSpec& spec);

/// Largest i with n_i != -inf, or -inf when n is identically -inf.
/// Only meaningful for equal-characteristic specs.
ExtInt last_finite_index(const SeqSpec& n);

/// Exponent e with ‖x‖ = q^e (Exact) or ‖x‖ <= q^e (UpperBound).
ExponentResult eval_exponent(const SeminormSpec& spec, const Series& x);

enum class BallMembership : std::uint8_t { Inside, Outside, Unknown };
const char* to_string(BallMembership b) noexcept;

/// Whether ‖x‖ <= q^e.
BallMembership closed_ball_test(const SeminormSpec& spec, const Series& x, std::int64_t e);

/// An index N past the window of x such that ‖x - S_n‖ < q^{-precision}
/// for every n >= N.
std::int64_t convergence_index(const SeminormSpec& spec, const Series& x, std::int64_t precision);

}  // namespace tdlf
