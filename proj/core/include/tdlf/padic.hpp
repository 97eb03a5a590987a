#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tdlf/ext_int.hpp"

namespace tdlf {

using BigInt = boost::multiprecision::cpp_int;

/// Whether an exponent or valuation is attained or only a bound.
enum class Exactness : std::uint8_t { Exact, UpperBound };

/// ‖x‖ = q^exponent; exponent -inf means ‖x‖ = 0.
struct ExponentResult {
  ExtInt exponent;
  Exactness exactness = Exactness::Exact;

  bool exact() const noexcept { return exactness == Exactness::Exact; }
  friend bool operator==(const ExponentResult&, const ExponentResult&) = default;
};

std::ostream& operator<<(std::ostream& os, const ExponentResult& r);

/// v_p(n) for n != 0.
std::int64_t p_valuation(const BigInt& n, std::uint64_t p);
BigInt pow_p(std::uint64_t p, std::int64_t e);

/// A p-adic number of Q_p known modulo p^a (absolute precision a).
///
/// Three states:
///  - exact zero (valuation +inf, precision +inf);
///  - zero within precision: x ≡ 0 mod p^a, valuation only known to be >= a;
///  - nonzero: x = p^v · u + O(p^a) with v < a and u a unit modulo p^(a-v),
///    stored as 0 < u < p^(a-v), p ∤ u.
class PAdic {
 public:
  /// Exact zero.
  static PAdic zero(std::uint64_t p);
  /// Known to be ≡ 0 modulo p^a.
  static PAdic zero_mod(std::uint64_t p, std::int64_t a);
  /// num/den reduced modulo p^a. den must be nonzero; p may divide it.
  static PAdic from_rational(std::uint64_t p, const BigInt& num, const BigInt& den, std::int64_t a);
  static PAdic from_integer(std::uint64_t p, const BigInt& n, std::int64_t a) { return from_rational(p, n, 1, a); }
  /// p^v · u + O(p^a); u must be coprime to p, v < a.
  static PAdic from_parts(std::uint64_t p, std::int64_t v, const BigInt& u, std::int64_t a);
  /// p^v with relative precision r (known modulo p^(v+r)).
  static PAdic power(std::uint64_t p, std::int64_t v, std::int64_t relative_precision);

  std::uint64_t prime() const noexcept { return p_; }
  bool is_exact_zero() const noexcept { return state_ == State::ExactZero; }
  bool is_zero_within_precision() const noexcept { return state_ == State::ZeroMod; }
  bool is_nonzero() const noexcept { return state_ == State::Nonzero; }

  /// Absolute precision; +inf only for exact zero.
  ExtInt precision() const noexcept { return precision_; }
  /// Exact valuation for nonzero values and exact zero; for zero within
  /// precision this is the lower bound a (see valuation_is_exact()).
  ExtInt valuation() const noexcept;
  bool valuation_is_exact() const noexcept { return state_ != State::ZeroMod; }
  /// Precision minus valuation for nonzero values.
  std::int64_t relative_precision() const;
  const BigInt& unit() const noexcept { return unit_; }
  /// Base-p digits of the unit, lowest first, length precision - valuation.
  std::vector<std::uint64_t> unit_digits() const;

  /// |x| = q^e. Exact for nonzero values and exact zero (e = -inf); for zero
  /// within precision a the result is the upper bound -a.
  ExponentResult abs_exponent() const;

  /// x · p^(-base) as an integer modulo p^(precision - base). Requires
  /// base <= valuation lower bound and finite precision.
  BigInt scaled_residue(std::int64_t base) const;

  /// True iff x - y is zero within the smaller of the two precisions.
  bool agrees_with(const PAdic& other) const;
  /// Same value reported to precision min(precision, a).
  PAdic truncated(std::int64_t a) const;

  PAdic operator-() const;
  friend PAdic operator+(const PAdic& x, const PAdic& y);
  friend PAdic operator-(const PAdic& x, const PAdic& y);
  friend PAdic operator*(const PAdic& x, const PAdic& y);

  /// Structural equality (same state, precision, valuation and unit).
  friend bool operator==(const PAdic& x, const PAdic& y);

  std::string to_string() const;

 private:
  enum class State : std::uint8_t { ExactZero, ZeroMod, Nonzero };

  PAdic(std::uint64_t p, State s, ExtInt precision, std::int64_t valuation, BigInt unit)
      : p_(p), state_(s), precision_(precision), valuation_(valuation), unit_(std::move(unit)) {}

  std::uint64_t p_ = 2;
  State state_ = State::ExactZero;
  ExtInt precision_ = ExtInt::plus_inf();
  std::int64_t valuation_ = 0;  // meaningful only when Nonzero
  BigInt unit_ = 0;
};

std::ostream& operator<<(std::ostream& os, const PAdic& x);

PAdic add(const PAdic& x, const PAdic& y);
PAdic mul(const PAdic& x, const PAdic& y);
ExponentResult abs_exponent(const PAdic& x);

}  // namespace tdlf
