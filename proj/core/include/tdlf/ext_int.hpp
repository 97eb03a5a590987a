#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace tdlf {

/// An element of Z ∪ {-inf, +inf}.
///
/// Exponents of p-adic ideals live here: p^{+inf} is the zero ideal and
/// p^{-inf} is all of K. Addition saturates towards the infinite operand;
/// +inf + -inf throws IndeterminateForm rather than producing a value.
/// Finite arithmetic throws std::overflow_error instead of wrapping.
class ExtInt {
 public:
  enum class Kind : std::uint8_t { MinusInf, Finite, PlusInf };

  constexpr ExtInt() noexcept = default;
  constexpr ExtInt(std::int64_t v) noexcept : kind_(Kind::Finite), value_(v) {}  // NOLINT

  static constexpr ExtInt plus_inf() noexcept { return ExtInt(Kind::PlusInf); }
  static constexpr ExtInt minus_inf() noexcept { return ExtInt(Kind::MinusInf); }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  constexpr bool is_plus_inf() const noexcept { return kind_ == Kind::PlusInf; }
  constexpr bool is_minus_inf() const noexcept { return kind_ == Kind::MinusInf; }
  constexpr bool is_infinite() const noexcept { return kind_ != Kind::Finite; }

  /// The finite value; throws std::logic_error on ±inf.
  std::int64_t value() const;

  friend constexpr bool operator==(const ExtInt& a, const ExtInt& b) noexcept {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) noexcept {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  ExtInt operator-() const noexcept;
  friend ExtInt operator+(const ExtInt& a, const ExtInt& b);
  friend ExtInt operator-(const ExtInt& a, const ExtInt& b);
  /// Multiplication by a finite integer; 0 * ±inf throws IndeterminateForm.
  friend ExtInt operator*(std::int64_t k, const ExtInt& a);

  ExtInt& operator+=(const ExtInt& o) { return *this = *this + o; }
  ExtInt& operator-=(const ExtInt& o) { return *this = *this - o; }

  /// "+inf", "-inf" or the decimal value.
  std::string to_string() const;
  /// Inverse of to_string(); std::nullopt on malformed input.
  static std::optional<ExtInt> from_string(const std::string& s);

 private:
  constexpr explicit ExtInt(Kind k) noexcept : kind_(k) {}

  Kind kind_ = Kind::Finite;
  std::int64_t value_ = 0;
};

/// Sum in which +inf absorbs everything, including -inf.
///
/// This is the exponent of a product of ideals p^a · p^b when p^{+inf} = {0}
/// annihilates even p^{-inf} = K.
ExtInt dominated_sum(const ExtInt& a, const ExtInt& b);

/// a - b where -inf - x = -inf and x - (+inf) = -inf.
///
/// Exponent of sup |x_i| q^{n_i} style quotients: a zero coefficient or a
/// zero weight contributes nothing.
ExtInt excess(const ExtInt& a, const ExtInt& b);

std::ostream& operator<<(std::ostream& os, const ExtInt& v);

/// Checked int64 helpers shared by the tail arithmetic.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
/// Floor and ceiling of a / b for b != 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

}  // namespace tdlf
