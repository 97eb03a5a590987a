#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

#include "tdlf/ext_int.hpp"

namespace tdlf {

/// Behaviour of a sequence outside its explicit window: either a constant
/// in Z ∪ {±inf} or the affine function i ↦ slope·i + offset.
///
/// An affine tail with slope 0 is stored as the corresponding constant, so
/// two tails are equal iff they agree at every index.
class TailSpec {
 public:
  static TailSpec constant(ExtInt c) noexcept;
  static TailSpec affine(std::int64_t slope, std::int64_t offset) noexcept;

  bool is_constant() const noexcept { return !is_affine_; }
  bool is_affine() const noexcept { return is_affine_; }
  /// Constant value; for an affine tail this throws std::logic_error.
  ExtInt constant_value() const;
  /// Slope and offset; a finite constant c reads as slope 0, offset c.
  std::int64_t slope() const;
  std::int64_t offset() const;
  /// True for Const(±inf).
  bool is_infinite() const noexcept { return !is_affine_ && constant_.is_infinite(); }

  ExtInt at(std::int64_t i) const;

  friend bool operator==(const TailSpec&, const TailSpec&) = default;

 private:
  bool is_affine_ = false;
  ExtInt constant_{};
  std::int64_t slope_ = 0;
  std::int64_t offset_ = 0;
};

std::ostream& operator<<(std::ostream& os, const TailSpec& t);

/// A map Z → Z ∪ {±inf} given by explicit values on [lo, hi] and a tail on
/// each side.
///
/// The representation is canonical: the window is the smallest one that
/// reproduces the function, and when a single window index is ambiguous the
/// index where the two tails cross is preferred (then the smallest valid
/// index, or 0 when both tails coincide). Structural equality is therefore
/// pointwise equality.
class SeqSpec {
 public:
  SeqSpec(std::int64_t lo, std::vector<ExtInt> window, TailSpec left, TailSpec right);

  /// Constant sequence.
  static SeqSpec constant(ExtInt c);
  /// Window from a map with contiguous keys; throws std::invalid_argument on gaps.
  static SeqSpec from_map(const std::map<std::int64_t, ExtInt>& window, TailSpec left, TailSpec right);
  /// Value `v` at index `at`, `rest` everywhere else.
  static SeqSpec delta(std::int64_t at, ExtInt v, ExtInt rest);
  /// Evaluate `f` on [lo, hi] and attach the given tails.
  template <class F>
  static SeqSpec tabulate(std::int64_t lo, std::int64_t hi, TailSpec left, TailSpec right, F&& f) {
    std::vector<ExtInt> w;
    w.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t i = lo; i <= hi; ++i) w.push_back(f(i));
    return SeqSpec(lo, std::move(w), left, right);
  }

  std::int64_t lo() const noexcept { return lo_; }
  std::int64_t hi() const noexcept { return lo_ + static_cast<std::int64_t>(window_.size()) - 1; }
  const std::vector<ExtInt>& window() const noexcept { return window_; }
  const TailSpec& left() const noexcept { return left_; }
  const TailSpec& right() const noexcept { return right_; }

  ExtInt at(std::int64_t i) const;

  /// Whether any value (window or tail) equals +inf / -inf.
  bool attains_plus_inf() const;
  bool attains_minus_inf() const;

  /// sup / inf over the whole of Z, or over an index range whose ends may
  /// be infinite. An empty range gives -inf for sup and +inf for inf.
  ExtInt sup() const;
  ExtInt inf() const;
  ExtInt sup_over(ExtInt from, ExtInt to) const;
  ExtInt inf_over(ExtInt from, ExtInt to) const;

  friend bool operator==(const SeqSpec&, const SeqSpec&) = default;

 private:
  void canonicalize();

  std::int64_t lo_;
  std::vector<ExtInt> window_;
  TailSpec left_;
  TailSpec right_;
};

std::ostream& operator<<(std::ostream& os, const SeqSpec& s);

ExtInt value_at(const SeqSpec& s, std::int64_t i);

SeqSpec pointwise_min(const SeqSpec& a, const SeqSpec& b);
SeqSpec pointwise_max(const SeqSpec& a, const SeqSpec& b);
/// Saturating pointwise sum; +inf + -inf anywhere throws IndeterminateForm.
SeqSpec pointwise_sum(const SeqSpec& a, const SeqSpec& b);
/// Pointwise excess(a_i, b_i) (see ExtInt excess()).
SeqSpec pointwise_excess(const SeqSpec& a, const SeqSpec& b);
/// i ↦ a - s(-i), with a - (+inf) = -inf and a - (-inf) = +inf.
SeqSpec reflect_affine(const SeqSpec& s, std::int64_t a);
/// i ↦ s(i) + c.
SeqSpec shift_add(const SeqSpec& s, std::int64_t c);
/// i ↦ s(i + d): moves every value d places to the left.
SeqSpec translate(const SeqSpec& s, std::int64_t d);
/// Replace window values by `v` (keeps tails); helper for tail-only bounds.
SeqSpec with_window_filled(const SeqSpec& s, ExtInt v);

/// (a ⊞ b)(k) = inf_{i+j=k} a(i) + b(j), where any pair with a +inf member
/// contributes +inf.
///
/// Throws NonRepresentableTail if the result has no constant/affine tail
/// presentation (cannot happen for valid inputs).
SeqSpec minplus_convolve(const SeqSpec& a, const SeqSpec& b);

}  // namespace tdlf
