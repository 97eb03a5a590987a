#include "tdlf/seqspec.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>

#include "tdlf/errors.hpp"

namespace tdlf {

namespace {

// Output windows wider than this indicate runaway tail crossings.
constexpr std::int64_t kMaxWindow = std::int64_t{1} << 24;

void check_window_width(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("SeqSpec window must be non-empty");
  if (checked_sub(hi, lo) > kMaxWindow) throw NonRepresentableTail("SeqSpec window exceeds 2^24 entries");
}

// sup / inf of a tail over the index range [from, to] (ends may be infinite).
ExtInt tail_extreme(const TailSpec& t, ExtInt from, ExtInt to, bool want_sup) {
  if (from > to) return want_sup ? ExtInt::minus_inf() : ExtInt::plus_inf();
  if (t.is_constant()) return t.constant_value();
  const std::int64_t s = t.slope();
  // Increasing functions peak at the right end, decreasing at the left end.
  const ExtInt end = ((s > 0) == want_sup) ? to : from;
  if (end.is_infinite()) return want_sup ? ExtInt::plus_inf() : ExtInt::minus_inf();
  return t.at(end.value());
}

// Winner of min/max between two tails as i → ±inf, and the index beyond which
// the winner is attained (nullopt when the two never cross).
struct TailPick {
  TailSpec tail;
  std::optional<std::int64_t> bound;
};

TailPick pick_tail(const TailSpec& a, const TailSpec& b, bool want_min, bool right_side) {
  const ExtInt absorbing = want_min ? ExtInt::minus_inf() : ExtInt::plus_inf();
  const ExtInt neutral = want_min ? ExtInt::plus_inf() : ExtInt::minus_inf();
  if (a.is_constant() && a.constant_value() == absorbing) return {a, std::nullopt};
  if (b.is_constant() && b.constant_value() == absorbing) return {b, std::nullopt};
  if (a.is_constant() && a.constant_value() == neutral) return {b, std::nullopt};
  if (b.is_constant() && b.constant_value() == neutral) return {a, std::nullopt};

  const std::int64_t sa = a.slope(), oa = a.offset();
  const std::int64_t sb = b.slope(), ob = b.offset();
  if (sa == sb) {
    const bool a_wins = want_min ? oa <= ob : oa >= ob;
    return {a_wins ? a : b, std::nullopt};
  }
  // Toward +inf the smaller slope is eventually smaller; toward -inf the larger.
  const bool a_wins = (want_min == right_side) ? sa < sb : sa > sb;
  const TailSpec& w = a_wins ? a : b;
  const TailSpec& l = a_wins ? b : a;
  // Crossing where w(i) = l(i): i* = (o_l - o_w) / (s_w - s_l).
  const std::int64_t num = checked_sub(l.offset(), w.offset());
  const std::int64_t den = checked_sub(w.slope(), l.slope());
  const std::int64_t bound = right_side ? checked_add(floor_div(num, den), 1) : checked_sub(ceil_div(num, den), 1);
  return {w, bound};
}

template <class Op>
SeqSpec pointwise_select(const SeqSpec& a, const SeqSpec& b, bool want_min, Op op) {
  const TailPick left = pick_tail(a.left(), b.left(), want_min, false);
  const TailPick right = pick_tail(a.right(), b.right(), want_min, true);
  std::int64_t lo = std::min(a.lo(), b.lo());
  std::int64_t hi = std::max(a.hi(), b.hi());
  if (left.bound) lo = std::min(lo, *left.bound);
  if (right.bound) hi = std::max(hi, *right.bound);
  check_window_width(lo, hi);
  return SeqSpec::tabulate(lo, hi, left.tail, right.tail, [&](std::int64_t i) { return op(a.at(i), b.at(i)); });
}

template <class Op>
TailSpec linear_tail(const TailSpec& a, const TailSpec& b, std::int64_t sign, Op op) {
  if (a.is_infinite() || b.is_infinite()) return TailSpec::constant(op(a.at(0), b.at(0)));
  return TailSpec::affine(checked_add(a.slope(), checked_mul(sign, b.slope())),
                          checked_add(a.offset(), checked_mul(sign, b.offset())));
}

template <class Op>
SeqSpec pointwise_linear(const SeqSpec& a, const SeqSpec& b, std::int64_t sign, Op op) {
  const std::int64_t lo = std::min(a.lo(), b.lo());
  const std::int64_t hi = std::max(a.hi(), b.hi());
  check_window_width(lo, hi);
  return SeqSpec::tabulate(lo, hi, linear_tail(a.left(), b.left(), sign, op),
                           linear_tail(a.right(), b.right(), sign, op),
                           [&](std::int64_t i) { return op(a.at(i), b.at(i)); });
}

// One term of the min-plus decomposition: the convolution of a single piece
// of `a` (window point or tail ray) with a single piece of `b`. Each term is
// affine (or constant) beyond its thresholds on either side.
struct ConvTerm {
  std::function<ExtInt(std::int64_t)> eval;
  TailSpec left;
  std::int64_t left_thr;  // eval(k) == left.at(k) for k <= left_thr
  TailSpec right;
  std::int64_t right_thr;  // eval(k) == right.at(k) for k >= right_thr
};

TailSpec fit_tail(const std::function<ExtInt(std::int64_t)>& f, std::int64_t k0) {
  const ExtInt v0 = f(k0);
  const ExtInt v1 = f(checked_add(k0, 1));
  if (v0.is_infinite() || v1.is_infinite()) {
    if (v0 != v1) throw NonRepresentableTail("min-plus term changes between finite and infinite values");
    return TailSpec::constant(v0);
  }
  const std::int64_t slope = checked_sub(v1.value(), v0.value());
  return TailSpec::affine(slope, checked_sub(v0.value(), checked_mul(slope, k0)));
}

bool is_plus_inf_tail(const TailSpec& t) { return t.is_constant() && t.constant_value().is_plus_inf(); }
bool is_minus_inf_tail(const TailSpec& t) { return t.is_constant() && t.constant_value().is_minus_inf(); }

// Term whose support is k <= d (left-bounded) or k >= d (right-bounded) and
// is affine across it.
ConvTerm one_sided_term(std::function<ExtInt(std::int64_t)> eval, std::int64_t d, bool supported_left) {
  ConvTerm t;
  t.eval = std::move(eval);
  if (supported_left) {
    t.left = fit_tail(t.eval, checked_sub(d, 1));
    t.left_thr = d;
    t.right = TailSpec::constant(ExtInt::plus_inf());
    t.right_thr = checked_add(d, 1);
  } else {
    t.left = TailSpec::constant(ExtInt::plus_inf());
    t.left_thr = checked_sub(d, 1);
    t.right = fit_tail(t.eval, d);
    t.right_thr = d;
  }
  return t;
}

// Term defined on all of Z, affine on each side of the breakpoint b.
ConvTerm two_sided_term(std::function<ExtInt(std::int64_t)> eval, std::int64_t b) {
  ConvTerm t;
  t.eval = std::move(eval);
  t.left = fit_tail(t.eval, checked_sub(b, 1));
  t.left_thr = b;
  t.right = fit_tail(t.eval, b);
  t.right_thr = b;
  return t;
}

// Affine h(i) = F(i) + G(k - i); its minimum over an interval sits at an end.
ExtInt pair_sum(const TailSpec& f, std::int64_t i, const TailSpec& g, std::int64_t j) {
  return dominated_sum(f.at(i), g.at(j));
}

void add_ray_ray_terms(const SeqSpec& a, const SeqSpec& b, std::vector<ConvTerm>& terms) {
  const TailSpec fl = a.left(), fr = a.right(), gl = b.left(), gr = b.right();
  const std::int64_t la = a.lo(), ha = a.hi(), lb = b.lo(), hb = b.hi();

  // left ⊞ left: i in [k - lb + 1, la - 1], non-empty iff k <= la + lb - 2.
  if (!is_plus_inf_tail(fl) && !is_plus_inf_tail(gl)) {
    const std::int64_t d = checked_sub(checked_add(la, lb), 2);
    terms.push_back(one_sided_term(
        [=](std::int64_t k) -> ExtInt {
          if (k > d) return ExtInt::plus_inf();
          const std::int64_t i0 = k - lb + 1, i1 = la - 1;
          return std::min(pair_sum(fl, i0, gl, k - i0), pair_sum(fl, i1, gl, k - i1));
        },
        d, true));
  }
  // right ⊞ right: i in [ha + 1, k - hb - 1], non-empty iff k >= ha + hb + 2.
  if (!is_plus_inf_tail(fr) && !is_plus_inf_tail(gr)) {
    const std::int64_t d = checked_add(checked_add(ha, hb), 2);
    terms.push_back(one_sided_term(
        [=](std::int64_t k) -> ExtInt {
          if (k < d) return ExtInt::plus_inf();
          const std::int64_t i0 = ha + 1, i1 = k - hb - 1;
          return std::min(pair_sum(fr, i0, gr, k - i0), pair_sum(fr, i1, gr, k - i1));
        },
        d, false));
  }
  // left(a) ⊞ right(b): i <= min(la - 1, k - hb - 1), unbounded below.
  if (!is_plus_inf_tail(fl) && !is_plus_inf_tail(gr)) {
    const bool diverges = is_minus_inf_tail(fl) || is_minus_inf_tail(gr) || fl.slope() > gr.slope();
    const std::int64_t brk = checked_add(la, hb);
    terms.push_back(two_sided_term(
        [=](std::int64_t k) -> ExtInt {
          if (diverges) return ExtInt::minus_inf();
          const std::int64_t i = std::min(la - 1, k - hb - 1);
          return pair_sum(fl, i, gr, k - i);
        },
        brk));
  }
  // right(a) ⊞ left(b): i >= max(ha + 1, k - lb + 1), unbounded above.
  if (!is_plus_inf_tail(fr) && !is_plus_inf_tail(gl)) {
    const bool diverges = is_minus_inf_tail(fr) || is_minus_inf_tail(gl) || fr.slope() < gl.slope();
    const std::int64_t brk = checked_add(ha, lb);
    terms.push_back(two_sided_term(
        [=](std::int64_t k) -> ExtInt {
          if (diverges) return ExtInt::minus_inf();
          const std::int64_t i = std::max(ha + 1, k - lb + 1);
          return pair_sum(fr, i, gl, k - i);
        },
        brk));
  }
}

// A window point (at, v) of one operand against a tail ray of the other.
void add_point_ray_terms(const SeqSpec& pts, const SeqSpec& rays, std::vector<ConvTerm>& terms) {
  const TailSpec gl = rays.left(), gr = rays.right();
  const std::int64_t lr = rays.lo(), hr = rays.hi();
  for (std::int64_t i0 = pts.lo(); i0 <= pts.hi(); ++i0) {
    const ExtInt v = pts.at(i0);
    if (v.is_plus_inf()) continue;
    if (!is_plus_inf_tail(gl)) {
      const std::int64_t d = checked_add(i0, lr - 1);  // k - i0 < lr
      terms.push_back(one_sided_term(
          [=](std::int64_t k) -> ExtInt { return k > d ? ExtInt::plus_inf() : dominated_sum(v, gl.at(k - i0)); }, d,
          true));
    }
    if (!is_plus_inf_tail(gr)) {
      const std::int64_t d = checked_add(i0, hr + 1);  // k - i0 > hr
      terms.push_back(one_sided_term(
          [=](std::int64_t k) -> ExtInt { return k < d ? ExtInt::plus_inf() : dominated_sum(v, gr.at(k - i0)); }, d,
          false));
    }
  }
}

struct Asymptote {
  TailSpec tail = TailSpec::constant(ExtInt::plus_inf());
  std::int64_t bound;
};

// Pointwise minimum of the terms' tails on one side.
Asymptote combine_asymptotes(const std::vector<ConvTerm>& terms, bool right_side, std::int64_t start) {
  Asymptote out{TailSpec::constant(ExtInt::plus_inf()), start};
  for (const auto& t : terms) {
    out.bound = right_side ? std::max(out.bound, t.right_thr) : std::min(out.bound, t.left_thr);
  }
  for (const auto& t : terms) {
    const TailPick p = pick_tail(out.tail, right_side ? t.right : t.left, /*want_min=*/true, right_side);
    out.tail = p.tail;
  }
  // Once the winner is known, step past every crossing with the other terms.
  for (const auto& t : terms) {
    const TailPick p = pick_tail(out.tail, right_side ? t.right : t.left, true, right_side);
    if (p.bound) out.bound = right_side ? std::max(out.bound, *p.bound) : std::min(out.bound, *p.bound);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- TailSpec

TailSpec TailSpec::constant(ExtInt c) noexcept {
  TailSpec t;
  t.constant_ = c;
  return t;
}

TailSpec TailSpec::affine(std::int64_t slope, std::int64_t offset) noexcept {
  if (slope == 0) return constant(ExtInt(offset));
  TailSpec t;
  t.is_affine_ = true;
  t.slope_ = slope;
  t.offset_ = offset;
  return t;
}

ExtInt TailSpec::constant_value() const {
  if (is_affine_) throw std::logic_error("constant_value() on an affine tail");
  return constant_;
}

std::int64_t TailSpec::slope() const {
  if (is_affine_) return slope_;
  if (constant_.is_infinite()) throw std::logic_error("slope() on an infinite constant tail");
  return 0;
}

std::int64_t TailSpec::offset() const {
  if (is_affine_) return offset_;
  return constant_.value();
}

ExtInt TailSpec::at(std::int64_t i) const {
  if (!is_affine_) return constant_;
  return ExtInt(checked_add(checked_mul(slope_, i), offset_));
}

std::ostream& operator<<(std::ostream& os, const TailSpec& t) {
  if (t.is_constant()) return os << "Const(" << t.constant_value() << ")";
  return os << "Affine(" << t.slope() << ", " << t.offset() << ")";
}

// ----------------------------------------------------------------- SeqSpec

SeqSpec::SeqSpec(std::int64_t lo, std::vector<ExtInt> window, TailSpec left, TailSpec right)
    : lo_(lo), window_(std::move(window)), left_(left), right_(right) {
  if (window_.empty()) throw std::invalid_argument("SeqSpec window must be non-empty");
  canonicalize();
}

SeqSpec SeqSpec::constant(ExtInt c) {
  return SeqSpec(0, {c}, TailSpec::constant(c), TailSpec::constant(c));
}

SeqSpec SeqSpec::from_map(const std::map<std::int64_t, ExtInt>& window, TailSpec left, TailSpec right) {
  if (window.empty()) throw std::invalid_argument("SeqSpec window must be non-empty");
  const std::int64_t lo = window.begin()->first;
  std::vector<ExtInt> values;
  std::int64_t expect = lo;
  for (const auto& [i, v] : window) {
    if (i != expect) throw std::invalid_argument("SeqSpec window keys must be contiguous");
    values.push_back(v);
    ++expect;
  }
  return SeqSpec(lo, std::move(values), left, right);
}

SeqSpec SeqSpec::delta(std::int64_t at, ExtInt v, ExtInt rest) {
  return SeqSpec(at, {v}, TailSpec::constant(rest), TailSpec::constant(rest));
}

void SeqSpec::canonicalize() {
  std::size_t first = 0;
  std::size_t last = window_.size();
  std::int64_t lo = lo_;
  while (last - first > 1 && window_[first] == left_.at(lo)) {
    ++first;
    ++lo;
  }
  while (last - first > 1 && window_[last - 1] == right_.at(lo + static_cast<std::int64_t>(last - first) - 1)) --last;
  if (first != 0 || last != window_.size()) {
    window_ = std::vector<ExtInt>(window_.begin() + static_cast<std::ptrdiff_t>(first),
                                  window_.begin() + static_cast<std::ptrdiff_t>(last));
    lo_ = lo;
  }
  if (window_.size() != 1) return;

  // A single window index may be movable; pick a representative.
  const std::int64_t w = lo_;
  const ExtInt val = window_[0];
  if (left_ == right_) {
    if (val == left_.at(w)) {
      lo_ = 0;
      window_[0] = left_.at(0);
    }
    return;
  }
  auto f = [&](std::int64_t i) { return i < w ? left_.at(i) : (i > w ? right_.at(i) : val); };
  auto valid = [&](std::int64_t c) {
    for (std::int64_t i = w; i < c; ++i)
      if (f(i) != left_.at(i)) return false;
    for (std::int64_t i = c + 1; i <= w; ++i)
      if (f(i) != right_.at(i)) return false;
    return true;
  };
  std::optional<std::int64_t> chosen;
  for (std::int64_t c = w - 2; c <= w + 2; ++c) {
    if (!valid(c)) continue;
    if (left_.at(c) == right_.at(c)) {
      chosen = c;
      break;
    }
    if (!chosen) chosen = c;
  }
  if (chosen && *chosen != w) {
    const ExtInt v = f(*chosen);
    lo_ = *chosen;
    window_[0] = v;
  }
}

ExtInt SeqSpec::at(std::int64_t i) const {
  if (i < lo_) return left_.at(i);
  if (i > hi()) return right_.at(i);
  return window_[static_cast<std::size_t>(i - lo_)];
}

bool SeqSpec::attains_plus_inf() const {
  if (left_.is_constant() && left_.constant_value().is_plus_inf()) return true;
  if (right_.is_constant() && right_.constant_value().is_plus_inf()) return true;
  return std::any_of(window_.begin(), window_.end(), [](const ExtInt& v) { return v.is_plus_inf(); });
}

bool SeqSpec::attains_minus_inf() const {
  if (left_.is_constant() && left_.constant_value().is_minus_inf()) return true;
  if (right_.is_constant() && right_.constant_value().is_minus_inf()) return true;
  return std::any_of(window_.begin(), window_.end(), [](const ExtInt& v) { return v.is_minus_inf(); });
}

ExtInt SeqSpec::sup_over(ExtInt from, ExtInt to) const {
  ExtInt best = ExtInt::minus_inf();
  const ExtInt wlo = std::max(from, ExtInt(lo_));
  const ExtInt whi = std::min(to, ExtInt(hi()));
  if (wlo <= whi)
    for (std::int64_t i = wlo.value(); i <= whi.value(); ++i) best = std::max(best, at(i));
  best = std::max(best, tail_extreme(left_, from, std::min(to, ExtInt(lo_ - 1)), true));
  best = std::max(best, tail_extreme(right_, std::max(from, ExtInt(hi() + 1)), to, true));
  return best;
}

ExtInt SeqSpec::inf_over(ExtInt from, ExtInt to) const {
  ExtInt best = ExtInt::plus_inf();
  const ExtInt wlo = std::max(from, ExtInt(lo_));
  const ExtInt whi = std::min(to, ExtInt(hi()));
  if (wlo <= whi)
    for (std::int64_t i = wlo.value(); i <= whi.value(); ++i) best = std::min(best, at(i));
  best = std::min(best, tail_extreme(left_, from, std::min(to, ExtInt(lo_ - 1)), false));
  best = std::min(best, tail_extreme(right_, std::max(from, ExtInt(hi() + 1)), to, false));
  return best;
}

ExtInt SeqSpec::sup() const { return sup_over(ExtInt::minus_inf(), ExtInt::plus_inf()); }
ExtInt SeqSpec::inf() const { return inf_over(ExtInt::minus_inf(), ExtInt::plus_inf()); }

std::ostream& operator<<(std::ostream& os, const SeqSpec& s) {
  os << "SeqSpec{left=" << s.left() << ", window=[";
  for (std::int64_t i = s.lo(); i <= s.hi(); ++i) os << (i == s.lo() ? "" : ", ") << i << ":" << s.at(i);
  return os << "], right=" << s.right() << "}";
}

// -------------------------------------------------------------- operations

ExtInt value_at(const SeqSpec& s, std::int64_t i) { return s.at(i); }

SeqSpec pointwise_min(const SeqSpec& a, const SeqSpec& b) {
  return pointwise_select(a, b, true, [](ExtInt x, ExtInt y) { return std::min(x, y); });
}

SeqSpec pointwise_max(const SeqSpec& a, const SeqSpec& b) {
  return pointwise_select(a, b, false, [](ExtInt x, ExtInt y) { return std::max(x, y); });
}

SeqSpec pointwise_sum(const SeqSpec& a, const SeqSpec& b) {
  return pointwise_linear(a, b, 1, [](ExtInt x, ExtInt y) { return x + y; });
}

SeqSpec pointwise_excess(const SeqSpec& a, const SeqSpec& b) {
  return pointwise_linear(a, b, -1, [](ExtInt x, ExtInt y) { return excess(x, y); });
}

namespace {

TailSpec reflect_tail(const TailSpec& t, std::int64_t a) {
  if (t.is_constant()) return TailSpec::constant(ExtInt(a) - t.constant_value());
  // a - (s·(-i) + o) = s·i + (a - o)
  return TailSpec::affine(t.slope(), checked_sub(a, t.offset()));
}

TailSpec shift_tail(const TailSpec& t, std::int64_t c) {
  if (t.is_constant()) return TailSpec::constant(t.constant_value() + ExtInt(c));
  return TailSpec::affine(t.slope(), checked_add(t.offset(), c));
}

}  // namespace

SeqSpec reflect_affine(const SeqSpec& s, std::int64_t a) {
  return SeqSpec::tabulate(-s.hi(), -s.lo(), reflect_tail(s.right(), a), reflect_tail(s.left(), a),
                           [&](std::int64_t i) { return ExtInt(a) - s.at(-i); });
}

SeqSpec shift_add(const SeqSpec& s, std::int64_t c) {
  return SeqSpec::tabulate(s.lo(), s.hi(), shift_tail(s.left(), c), shift_tail(s.right(), c),
                           [&](std::int64_t i) { return s.at(i) + ExtInt(c); });
}

SeqSpec translate(const SeqSpec& s, std::int64_t d) {
  auto move = [d](const TailSpec& t) {
    if (t.is_constant()) return t;
    return TailSpec::affine(t.slope(), checked_add(checked_mul(t.slope(), d), t.offset()));
  };
  return SeqSpec::tabulate(checked_sub(s.lo(), d), checked_sub(s.hi(), d), move(s.left()), move(s.right()),
                           [&](std::int64_t i) { return s.at(i + d); });
}

SeqSpec with_window_filled(const SeqSpec& s, ExtInt v) {
  return SeqSpec(s.lo(), std::vector<ExtInt>(s.window().size(), v), s.left(), s.right());
}

SeqSpec minplus_convolve(const SeqSpec& a, const SeqSpec& b) {
  std::vector<ConvTerm> terms;
  add_ray_ray_terms(a, b, terms);
  add_point_ray_terms(a, b, terms);
  add_point_ray_terms(b, a, terms);

  // Window ⊞ window pairs land on [a.lo + b.lo, a.hi + b.hi].
  const std::int64_t plo = checked_add(a.lo(), b.lo());
  const std::int64_t phi = checked_add(a.hi(), b.hi());
  const Asymptote left = combine_asymptotes(terms, false, plo - 1);
  const Asymptote right = combine_asymptotes(terms, true, phi + 1);
  check_window_width(left.bound, right.bound);

  std::vector<ExtInt> values(static_cast<std::size_t>(right.bound - left.bound + 1), ExtInt::plus_inf());
  for (std::int64_t i = a.lo(); i <= a.hi(); ++i) {
    for (std::int64_t j = b.lo(); j <= b.hi(); ++j) {
      auto& slot = values[static_cast<std::size_t>(i + j - left.bound)];
      slot = std::min(slot, dominated_sum(a.at(i), b.at(j)));
    }
  }
  for (const auto& t : terms) {
    for (std::int64_t k = left.bound; k <= right.bound; ++k) {
      auto& slot = values[static_cast<std::size_t>(k - left.bound)];
      slot = std::min(slot, t.eval(k));
    }
  }
  return SeqSpec(left.bound, std::move(values), left.tail, right.tail);
}

}  // namespace tdlf
