#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <utility>
#include <variant>
#include <vector>

#include "tdlf/ext_int.hpp"
#include "tdlf/padic.hpp"
#include "tdlf/seqspec.hpp"

namespace tdlf {

enum class FieldKind : std::uint8_t { EqualChar, MixedChar };

const char* to_string(FieldKind k) noexcept;

/// Lower bound on a valuation together with whether it is attained.
struct ValuationResult {
  ExtInt valuation;
  bool exact = true;
  friend bool operator==(const ValuationResult&, const ValuationResult&) = default;
};

/// Element of K((t)) known modulo t^trunc: Σ_{order <= i < trunc} x_i t^i.
///
/// `trunc` is +inf for an exactly known Laurent polynomial. Absent
/// coefficients are exact zeros.
class EqualCharSeries {
 public:
  EqualCharSeries(std::uint64_t p, std::int64_t order, ExtInt trunc, std::map<std::int64_t, PAdic> coeffs);

  static EqualCharSeries zero(std::uint64_t p) { return {p, 0, ExtInt::plus_inf(), {}}; }
  static EqualCharSeries monomial(const PAdic& c, std::int64_t i) { return {c.prime(), i, ExtInt::plus_inf(), {{i, c}}}; }

  std::uint64_t prime() const noexcept { return p_; }
  std::int64_t order() const noexcept { return order_; }
  ExtInt trunc() const noexcept { return trunc_; }
  const std::map<std::int64_t, PAdic>& coeffs() const noexcept { return coeffs_; }

  /// Coefficient at i; throws PrecisionExhausted for i >= trunc.
  PAdic coefficient(std::int64_t i) const;

  /// Nonzero coefficients whose valuation is exactly known.
  std::vector<std::pair<std::int64_t, ExtInt>> exact_valuations() const;
  /// Valuation lower bounds for every coefficient not in exact_valuations()
  /// (+inf where the coefficient is an exact zero or exactly known).
  SeqSpec bound_only_valuations() const;

  friend bool operator==(const EqualCharSeries&, const EqualCharSeries&) = default;

 private:
  std::uint64_t p_;
  std::int64_t order_;
  ExtInt trunc_;
  std::map<std::int64_t, PAdic> coeffs_;
};

/// v(x_i) >= base + slope·(lo - i) for every i < lo; slope >= 1.
struct LeftBound {
  std::int64_t slope = 1;
  std::int64_t base = 0;
  friend bool operator==(const LeftBound&, const LeftBound&) = default;
};

/// Element of K{{t}}: explicit coefficients on [lo, hi] plus valuation
/// guarantees on both sides. A missing tail bound means the coefficients
/// there are exact zeros; a right bound d means v(x_i) >= d for i > hi.
///
/// The window may be empty (lo = hi + 1).
class MixedSeries {
 public:
  MixedSeries(std::uint64_t p, std::int64_t lo, std::int64_t hi, std::map<std::int64_t, PAdic> coeffs,
              std::optional<LeftBound> left = std::nullopt, std::optional<std::int64_t> right = std::nullopt);

  static MixedSeries zero(std::uint64_t p) { return {p, 0, -1, {}}; }
  static MixedSeries monomial(const PAdic& c, std::int64_t i) { return {c.prime(), i, i, {{i, c}}}; }
  /// Finitely supported element.
  static MixedSeries from_terms(std::uint64_t p, std::map<std::int64_t, PAdic> terms);

  std::uint64_t prime() const noexcept { return p_; }
  std::int64_t lo() const noexcept { return lo_; }
  std::int64_t hi() const noexcept { return hi_; }
  const std::map<std::int64_t, PAdic>& coeffs() const noexcept { return coeffs_; }
  const std::optional<LeftBound>& left() const noexcept { return left_; }
  const std::optional<std::int64_t>& right() const noexcept { return right_; }

  /// Coefficient at any index; tail indices give exact zero or zero within
  /// the guaranteed precision.
  PAdic coefficient(std::int64_t i) const;
  /// Lower bound for inf_i v(x_i).
  ExtInt floor() const;

  /// Lower bounds for v(x_i) at every index.
  SeqSpec valuation_bounds() const;
  /// Same with the window replaced by +inf (only tail indices count).
  SeqSpec tail_valuation_bounds() const;
  std::vector<std::pair<std::int64_t, ExtInt>> exact_valuations() const;
  SeqSpec bound_only_valuations() const;

  friend bool operator==(const MixedSeries&, const MixedSeries&) = default;

 private:
  std::uint64_t p_;
  std::int64_t lo_;
  std::int64_t hi_;
  std::map<std::int64_t, PAdic> coeffs_;
  std::optional<LeftBound> left_;
  std::optional<std::int64_t> right_;
};

using Series = std::variant<EqualCharSeries, MixedSeries>;

FieldKind kind_of(const Series& s) noexcept;
std::uint64_t prime_of(const Series& s) noexcept;
std::vector<std::pair<std::int64_t, ExtInt>> exact_valuations(const Series& s);
SeqSpec bound_only_valuations(const Series& s);

EqualCharSeries add(const EqualCharSeries& x, const EqualCharSeries& y);
EqualCharSeries neg(const EqualCharSeries& x);
EqualCharSeries sub(const EqualCharSeries& x, const EqualCharSeries& y);
EqualCharSeries mul(const EqualCharSeries& x, const EqualCharSeries& y);

MixedSeries add(const MixedSeries& x, const MixedSeries& y);
MixedSeries neg(const MixedSeries& x);
MixedSeries sub(const MixedSeries& x, const MixedSeries& y);
/// Product. With a target, every window coefficient is reported modulo
/// p^target and PrecisionExhausted is thrown if the inputs cannot certify it.
MixedSeries mul(const MixedSeries& x, const MixedSeries& y, std::optional<std::int64_t> target = std::nullopt);

Series add(const Series& x, const Series& y);
Series sub(const Series& x, const Series& y);
Series neg(const Series& x);
Series mul(const Series& x, const Series& y, std::optional<std::int64_t> target = std::nullopt);

/// S_n = Σ_{i <= n} x_i t^i.
EqualCharSeries partial_sum(const EqualCharSeries& x, std::int64_t n);
MixedSeries partial_sum(const MixedSeries& x, std::int64_t n);
Series partial_sum(const Series& x, std::int64_t n);
/// x - S_n = Σ_{i > n} x_i t^i, computed without cancellation.
EqualCharSeries remainder(const EqualCharSeries& x, std::int64_t n);
MixedSeries remainder(const MixedSeries& x, std::int64_t n);
Series remainder(const Series& x, std::int64_t n);

/// Coefficient of t^k in xy.
PAdic product_coefficient(const Series& x, const Series& y, std::int64_t k);

/// v_F(x) = inf_i v(x_i); exact when attained by a known coefficient.
ValuationResult vF_exponent(const MixedSeries& x);

/// (inf v(x_i), least i attaining it).
std::pair<ExtInt, ExtInt> rank2_mixed(const MixedSeries& x);
/// (index of the first nonzero coefficient, its valuation).
std::pair<ExtInt, ExtInt> rank2_equal(const EqualCharSeries& x);

std::ostream& operator<<(std::ostream& os, const Series& s);

}  // namespace tdlf
