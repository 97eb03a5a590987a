#include "tdlf/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tdlf/errors.hpp"

namespace tdlf {

namespace {

void check_prime_arg(std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("series prime must be >= 2");
}

void check_same_prime(std::uint64_t a, std::uint64_t b) {
  if (a != b) throw IncompatiblePrimes("series over p=" + std::to_string(a) + " and p=" + std::to_string(b));
}

void drop_exact_zeros(std::map<std::int64_t, PAdic>& m) {
  std::erase_if(m, [](const auto& kv) { return kv.second.is_exact_zero(); });
}

// SeqSpec over [lo, hi] that tolerates an empty window (lo = hi + 1).
template <class F>
SeqSpec spec_on(std::int64_t lo, std::int64_t hi, const TailSpec& left, const TailSpec& right, F&& f) {
  if (lo > hi) return SeqSpec(lo, {right.at(lo)}, left, right);
  return SeqSpec::tabulate(lo, hi, left, right, f);
}

ExtInt bound_only(const PAdic& c) {
  return c.is_zero_within_precision() ? c.precision() : ExtInt::plus_inf();
}

void accumulate(std::map<std::int64_t, PAdic>& m, std::int64_t k, const PAdic& v) {
  auto it = m.find(k);
  if (it == m.end())
    m.emplace(k, v);
  else
    it->second = it->second + v;
}

}  // namespace

const char* to_string(FieldKind k) noexcept { return k == FieldKind::EqualChar ? "equal" : "mixed"; }

// ---------------------------------------------------------------- equal char

EqualCharSeries::EqualCharSeries(std::uint64_t p, std::int64_t order, ExtInt trunc,
                                 std::map<std::int64_t, PAdic> coeffs)
    : p_(p), order_(order), trunc_(trunc), coeffs_(std::move(coeffs)) {
  check_prime_arg(p);
  if (trunc_.is_minus_inf()) throw std::invalid_argument("truncation order -inf");
  if (trunc_.is_finite() && order_ > trunc_.value())
    throw std::invalid_argument("series order above truncation order");
  for (const auto& [i, c] : coeffs_) {
    check_same_prime(p_, c.prime());
    if (i < order_ || ExtInt(i) >= trunc_)
      throw std::invalid_argument("coefficient index " + std::to_string(i) + " outside [order, trunc)");
  }
  drop_exact_zeros(coeffs_);
  // Every index in [order, trunc) is known, so the order is determined.
  if (!coeffs_.empty())
    order_ = coeffs_.begin()->first;
  else
    order_ = trunc_.is_finite() ? trunc_.value() : 0;
}

PAdic EqualCharSeries::coefficient(std::int64_t i) const {
  if (ExtInt(i) >= trunc_)
    throw PrecisionExhausted("coefficient t^" + std::to_string(i) + " lies beyond O(t^" + trunc_.to_string() + ")");
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? PAdic::zero(p_) : it->second;
}

std::vector<std::pair<std::int64_t, ExtInt>> EqualCharSeries::exact_valuations() const {
  std::vector<std::pair<std::int64_t, ExtInt>> out;
  for (const auto& [i, c] : coeffs_)
    if (c.is_nonzero()) out.emplace_back(i, c.valuation());
  return out;
}

SeqSpec EqualCharSeries::bound_only_valuations() const {
  const TailSpec left = TailSpec::constant(ExtInt::plus_inf());
  auto f = [&](std::int64_t i) {
    auto it = coeffs_.find(i);
    return it == coeffs_.end() ? ExtInt::plus_inf() : bound_only(it->second);
  };
  if (trunc_.is_finite())
    return spec_on(order_, trunc_.value() - 1, left, TailSpec::constant(ExtInt::minus_inf()), f);
  const std::int64_t hi = coeffs_.empty() ? order_ : std::max(order_, coeffs_.rbegin()->first);
  return spec_on(order_, hi, left, TailSpec::constant(ExtInt::plus_inf()), f);
}

EqualCharSeries add(const EqualCharSeries& x, const EqualCharSeries& y) {
  check_same_prime(x.prime(), y.prime());
  const ExtInt trunc = std::min(x.trunc(), y.trunc());
  std::map<std::int64_t, PAdic> out;
  for (const auto* s : {&x, &y})
    for (const auto& [i, c] : s->coeffs())
      if (ExtInt(i) < trunc) accumulate(out, i, c);
  std::int64_t order = std::min(x.order(), y.order());
  if (trunc.is_finite()) order = std::min(order, trunc.value());
  return {x.prime(), order, trunc, std::move(out)};
}

EqualCharSeries neg(const EqualCharSeries& x) {
  std::map<std::int64_t, PAdic> out;
  for (const auto& [i, c] : x.coeffs()) out.emplace(i, -c);
  return {x.prime(), x.order(), x.trunc(), std::move(out)};
}

EqualCharSeries sub(const EqualCharSeries& x, const EqualCharSeries& y) { return add(x, neg(y)); }

EqualCharSeries mul(const EqualCharSeries& x, const EqualCharSeries& y) {
  check_same_prime(x.prime(), y.prime());
  // x = t^ox(·) + O(t^Nx): the product is known modulo t^min(ox+Ny, oy+Nx).
  const ExtInt trunc = std::min(ExtInt(x.order()) + y.trunc(), ExtInt(y.order()) + x.trunc());
  std::map<std::int64_t, PAdic> out;
  for (const auto& [i, a] : x.coeffs())
    for (const auto& [j, b] : y.coeffs()) {
      const std::int64_t k = checked_add(i, j);
      if (ExtInt(k) < trunc) accumulate(out, k, a * b);
    }
  return {x.prime(), checked_add(x.order(), y.order()), trunc, std::move(out)};
}

EqualCharSeries partial_sum(const EqualCharSeries& x, std::int64_t n) {
  std::map<std::int64_t, PAdic> out;
  for (const auto& [i, c] : x.coeffs())
    if (i <= n) out.emplace(i, c);
  const ExtInt trunc = ExtInt(n) < x.trunc() ? ExtInt::plus_inf() : x.trunc();
  return {x.prime(), x.order(), trunc, std::move(out)};
}

EqualCharSeries remainder(const EqualCharSeries& x, std::int64_t n) {
  std::map<std::int64_t, PAdic> out;
  for (const auto& [i, c] : x.coeffs())
    if (i > n) out.emplace(i, c);
  ExtInt order = std::max(ExtInt(x.order()), ExtInt(n) + ExtInt(1));
  order = std::min(order, x.trunc());
  return {x.prime(), order.value(), x.trunc(), std::move(out)};
}

std::pair<ExtInt, ExtInt> rank2_equal(const EqualCharSeries& x) {
  for (const auto& [i, c] : x.coeffs()) {
    if (c.is_zero_within_precision())
      throw PrecisionExhausted("coefficient of t^" + std::to_string(i) + " is zero only within precision");
    return {ExtInt(i), c.valuation()};
  }
  if (x.trunc().is_plus_inf()) throw ZeroElement("rank-two valuation of 0");
  throw PrecisionExhausted("all known coefficients vanish below O(t^" + x.trunc().to_string() + ")");
}

// ---------------------------------------------------------------- mixed char

MixedSeries::MixedSeries(std::uint64_t p, std::int64_t lo, std::int64_t hi, std::map<std::int64_t, PAdic> coeffs,
                         std::optional<LeftBound> left, std::optional<std::int64_t> right)
    : p_(p), lo_(lo), hi_(hi), coeffs_(std::move(coeffs)), left_(left), right_(right) {
  check_prime_arg(p);
  if (lo_ > hi_ + 1) throw std::invalid_argument("mixed series window has lo > hi + 1");
  if (left_ && left_->slope < 1) throw std::invalid_argument("left tail slope must be >= 1");
  for (const auto& [i, c] : coeffs_) {
    check_same_prime(p_, c.prime());
    if (i < lo_ || i > hi_)
      throw std::invalid_argument("coefficient index " + std::to_string(i) + " outside the window");
  }
  drop_exact_zeros(coeffs_);
  if (!right_) {
    // Trailing exact zeros fold into the zero right tail.
    hi_ = coeffs_.empty() ? lo_ - 1 : coeffs_.rbegin()->first;
  }
  if (!left_) {
    if (coeffs_.empty())
      lo_ = hi_ + 1;
    else
      lo_ = coeffs_.begin()->first;
  }
  if (!left_ && !right_ && coeffs_.empty()) {
    lo_ = 0;
    hi_ = -1;
  }
}

MixedSeries MixedSeries::from_terms(std::uint64_t p, std::map<std::int64_t, PAdic> terms) {
  if (terms.empty()) return zero(p);
  const std::int64_t lo = terms.begin()->first, hi = terms.rbegin()->first;
  return {p, lo, hi, std::move(terms)};
}

PAdic MixedSeries::coefficient(std::int64_t i) const {
  if (i < lo_) {
    if (!left_) return PAdic::zero(p_);
    return PAdic::zero_mod(p_, checked_add(left_->base, checked_mul(left_->slope, checked_sub(lo_, i))));
  }
  if (i > hi_) return right_ ? PAdic::zero_mod(p_, *right_) : PAdic::zero(p_);
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? PAdic::zero(p_) : it->second;
}

ExtInt MixedSeries::floor() const {
  ExtInt f = ExtInt::plus_inf();
  for (const auto& [i, c] : coeffs_) f = std::min(f, c.valuation());
  if (left_) f = std::min(f, ExtInt(checked_add(left_->base, left_->slope)));
  if (right_) f = std::min(f, ExtInt(*right_));
  return f;
}

namespace {

TailSpec left_tail_spec(const std::optional<LeftBound>& b, std::int64_t lo) {
  if (!b) return TailSpec::constant(ExtInt::plus_inf());
  // base + s·(lo - i) = -s·i + (base + s·lo)
  return TailSpec::affine(-b->slope, checked_add(b->base, checked_mul(b->slope, lo)));
}

TailSpec right_tail_spec(const std::optional<std::int64_t>& d) {
  return TailSpec::constant(d ? ExtInt(*d) : ExtInt::plus_inf());
}

}  // namespace

SeqSpec MixedSeries::valuation_bounds() const {
  return spec_on(lo_, hi_, left_tail_spec(left_, lo_), right_tail_spec(right_), [&](std::int64_t i) {
    auto it = coeffs_.find(i);
    return it == coeffs_.end() ? ExtInt::plus_inf() : it->second.valuation();
  });
}

SeqSpec MixedSeries::tail_valuation_bounds() const {
  return spec_on(lo_, hi_, left_tail_spec(left_, lo_), right_tail_spec(right_),
                 [](std::int64_t) { return ExtInt::plus_inf(); });
}

std::vector<std::pair<std::int64_t, ExtInt>> MixedSeries::exact_valuations() const {
  std::vector<std::pair<std::int64_t, ExtInt>> out;
  for (const auto& [i, c] : coeffs_)
    if (c.is_nonzero()) out.emplace_back(i, c.valuation());
  return out;
}

SeqSpec MixedSeries::bound_only_valuations() const {
  return spec_on(lo_, hi_, left_tail_spec(left_, lo_), right_tail_spec(right_), [&](std::int64_t i) {
    auto it = coeffs_.find(i);
    return it == coeffs_.end() ? ExtInt::plus_inf() : bound_only(it->second);
  });
}

MixedSeries add(const MixedSeries& x, const MixedSeries& y) {
  check_same_prime(x.prime(), y.prime());
  const bool x_zero = x.coeffs().empty() && !x.left() && !x.right();
  const bool y_zero = y.coeffs().empty() && !y.left() && !y.right();
  if (x_zero) return y;
  if (y_zero) return x;
  const std::int64_t lo = std::min(x.lo(), y.lo());
  const std::int64_t hi = std::max(x.hi(), y.hi());
  std::map<std::int64_t, PAdic> out;
  for (std::int64_t i = lo; i <= hi; ++i) {
    PAdic c = x.coefficient(i) + y.coefficient(i);
    if (!c.is_exact_zero()) out.emplace(i, std::move(c));
  }
  std::optional<LeftBound> left;
  for (const auto* s : {&x, &y}) {
    if (!s->left()) continue;
    // Re-anchor at the common lo: base + s·(lo_s - i) >= base' + s_min·(lo - i).
    const LeftBound b{s->left()->slope, checked_add(s->left()->base, checked_mul(s->left()->slope, s->lo() - lo))};
    left = left ? LeftBound{std::min(left->slope, b.slope), std::min(left->base, b.base)} : b;
  }
  std::optional<std::int64_t> right;
  for (const auto* s : {&x, &y})
    if (s->right()) right = right ? std::min(*right, *s->right()) : *s->right();
  return {x.prime(), lo, hi, std::move(out), left, right};
}

MixedSeries neg(const MixedSeries& x) {
  std::map<std::int64_t, PAdic> out;
  for (const auto& [i, c] : x.coeffs()) out.emplace(i, -c);
  return {x.prime(), x.lo(), x.hi(), std::move(out), x.left(), x.right()};
}

MixedSeries sub(const MixedSeries& x, const MixedSeries& y) { return add(x, neg(y)); }

MixedSeries mul(const MixedSeries& x, const MixedSeries& y, std::optional<std::int64_t> target) {
  check_same_prime(x.prime(), y.prime());
  const std::uint64_t p = x.prime();
  const SeqSpec vx = x.valuation_bounds(), vy = y.valuation_bounds();
  const SeqSpec vz = minplus_convolve(vx, vy);
  // Valuation bound on the part of z_k involving at least one tail coefficient.
  const SeqSpec tail_part =
      pointwise_min(minplus_convolve(x.tail_valuation_bounds(), vy), minplus_convolve(vx, y.tail_valuation_bounds()));

  std::map<std::int64_t, PAdic> exact;
  for (const auto& [i, a] : x.coeffs())
    for (const auto& [j, b] : y.coeffs()) accumulate(exact, checked_add(i, j), a * b);

  std::int64_t lo = vz.lo(), hi = vz.hi();
  if (!exact.empty()) {
    lo = std::min(lo, exact.begin()->first);
    hi = std::max(hi, exact.rbegin()->first);
  }

  std::map<std::int64_t, PAdic> out;
  for (std::int64_t k = lo; k <= hi; ++k) {
    auto it = exact.find(k);
    PAdic c = it == exact.end() ? PAdic::zero(p) : it->second;
    const ExtInt t = tail_part.at(k);
    if (t.is_minus_inf()) throw PrecisionExhausted("tail bounds do not certify coefficient " + std::to_string(k));
    if (t.is_finite()) c = c + PAdic::zero_mod(p, t.value());
    if (target && !c.is_exact_zero()) {
      if (c.precision() < ExtInt(*target))
        throw PrecisionExhausted("coefficient of t^" + std::to_string(k) + " known only modulo p^" +
                                 c.precision().to_string() + ", below target " + std::to_string(*target));
      c = c.truncated(*target);
    }
    if (!c.is_exact_zero()) out.emplace(k, std::move(c));
  }

  std::optional<LeftBound> left;
  const TailSpec& lt = vz.left();
  if (lt.is_affine() && lt.slope() <= -1) {
    left = LeftBound{-lt.slope(), checked_add(lt.offset(), checked_mul(lt.slope(), lo))};
  } else if (!(lt.is_constant() && lt.constant_value().is_plus_inf())) {
    throw NonRepresentableTail("product has no left valuation bound tending to +inf");
  }
  std::optional<std::int64_t> right;
  const TailSpec& rt = vz.right();
  if (rt.is_constant() && rt.constant_value().is_plus_inf()) {
  } else if (rt.is_constant() && rt.constant_value().is_finite()) {
    right = rt.constant_value().value();
  } else if (rt.is_affine() && rt.slope() > 0) {
    right = rt.at(hi + 1).value();
  } else {
    throw NonRepresentableTail("product has no right valuation floor");
  }
  if (target) {
    if (left && checked_add(left->base, left->slope) < *target)
      throw PrecisionExhausted("left tail of the product is not certified to the target precision");
    if (right && *right < *target)
      throw PrecisionExhausted("right tail of the product is not certified to the target precision");
  }
  return {p, lo, hi, std::move(out), left, right};
}

MixedSeries partial_sum(const MixedSeries& x, std::int64_t n) {
  std::map<std::int64_t, PAdic> out;
  if (n < x.lo()) {
    if (!x.left()) return MixedSeries::zero(x.prime());
    const LeftBound b{x.left()->slope,
                      checked_add(x.left()->base, checked_mul(x.left()->slope, checked_sub(x.lo(), n + 1)))};
    return {x.prime(), n + 1, n, {}, b, std::nullopt};
  }
  const std::int64_t hi = std::max(n, x.lo() - 1);
  for (std::int64_t i = x.lo(); i <= hi; ++i) {
    PAdic c = x.coefficient(i);
    if (!c.is_exact_zero()) out.emplace(i, std::move(c));
  }
  return {x.prime(), x.lo(), hi, std::move(out), x.left(), std::nullopt};
}

MixedSeries remainder(const MixedSeries& x, std::int64_t n) {
  std::map<std::int64_t, PAdic> out;
  if (n >= x.hi()) return {x.prime(), n + 1, n, {}, std::nullopt, x.right()};
  for (std::int64_t i = n + 1; i <= x.hi(); ++i) {
    PAdic c = x.coefficient(i);
    if (!c.is_exact_zero()) out.emplace(i, std::move(c));
  }
  return {x.prime(), n + 1, x.hi(), std::move(out), std::nullopt, x.right()};
}

ValuationResult vF_exponent(const MixedSeries& x) {
  ExtInt exact = ExtInt::plus_inf(), bound = ExtInt::plus_inf();
  for (const auto& [i, c] : x.coeffs()) {
    if (c.is_nonzero())
      exact = std::min(exact, c.valuation());
    else
      bound = std::min(bound, c.precision());
  }
  if (x.left()) bound = std::min(bound, ExtInt(checked_add(x.left()->base, x.left()->slope)));
  if (x.right()) bound = std::min(bound, ExtInt(*x.right()));
  if (exact <= bound) return {exact, true};
  return {bound, false};
}

std::pair<ExtInt, ExtInt> rank2_mixed(const MixedSeries& x) {
  if (x.coeffs().empty() && !x.left() && !x.right()) throw ZeroElement("rank-two valuation of 0");
  const ValuationResult v = vF_exponent(x);
  if (!v.exact || v.valuation.is_plus_inf())
    throw PrecisionExhausted("v_F is only bounded below by " + v.valuation.to_string());
  if (x.left() && ExtInt(checked_add(x.left()->base, x.left()->slope)) <= v.valuation)
    throw PrecisionExhausted("left tail bound does not exclude a smaller index of valuation " +
                             v.valuation.to_string());
  for (const auto& [i, c] : x.coeffs()) {
    if (c.is_nonzero()) {
      if (c.valuation() == v.valuation) return {v.valuation, ExtInt(i)};
    } else if (c.precision() <= v.valuation) {
      throw PrecisionExhausted("coefficient of t^" + std::to_string(i) + " is not certified above v_F");
    }
  }
  throw std::logic_error("rank2_mixed: minimum not attained");
}

// ---------------------------------------------------------------- variant

FieldKind kind_of(const Series& s) noexcept {
  return std::holds_alternative<EqualCharSeries>(s) ? FieldKind::EqualChar : FieldKind::MixedChar;
}

std::uint64_t prime_of(const Series& s) noexcept {
  return std::visit([](const auto& v) { return v.prime(); }, s);
}

std::vector<std::pair<std::int64_t, ExtInt>> exact_valuations(const Series& s) {
  return std::visit([](const auto& v) { return v.exact_valuations(); }, s);
}

SeqSpec bound_only_valuations(const Series& s) {
  return std::visit([](const auto& v) { return v.bound_only_valuations(); }, s);
}

namespace {

template <class F>
Series dispatch2(const Series& x, const Series& y, F&& f) {
  if (x.index() != y.index()) throw KindMismatch("equal- and mixed-characteristic operands");
  if (const auto* ex = std::get_if<EqualCharSeries>(&x)) return Series(f(*ex, std::get<EqualCharSeries>(y)));
  return Series(f(std::get<MixedSeries>(x), std::get<MixedSeries>(y)));
}

}  // namespace

Series add(const Series& x, const Series& y) {
  return dispatch2(x, y, [](const auto& a, const auto& b) { return add(a, b); });
}

Series sub(const Series& x, const Series& y) {
  return dispatch2(x, y, [](const auto& a, const auto& b) { return sub(a, b); });
}

Series neg(const Series& x) {
  return std::visit([](const auto& a) { return Series(neg(a)); }, x);
}

Series mul(const Series& x, const Series& y, std::optional<std::int64_t> target) {
  return dispatch2(x, y, [&](const auto& a, const auto& b) {
    if constexpr (std::is_same_v<std::decay_t<decltype(a)>, MixedSeries>)
      return mul(a, b, target);
    else
      return mul(a, b);
  });
}

Series partial_sum(const Series& x, std::int64_t n) {
  return std::visit([n](const auto& a) { return Series(partial_sum(a, n)); }, x);
}

Series remainder(const Series& x, std::int64_t n) {
  return std::visit([n](const auto& a) { return Series(remainder(a, n)); }, x);
}

PAdic product_coefficient(const Series& x, const Series& y, std::int64_t k) {
  const Series z = mul(x, y);
  return std::visit([k](const auto& s) { return s.coefficient(k); }, z);
}

std::ostream& operator<<(std::ostream& os, const Series& s) {
  std::visit(
      [&](const auto& v) {
        bool first = true;
        for (const auto& [i, c] : v.coeffs()) {
          os << (first ? "" : " + ") << "(" << c << ")*t^" << i;
          first = false;
        }
        if (first) os << "0";
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, EqualCharSeries>) {
          if (v.trunc().is_finite()) os << " + O(t^" << v.trunc() << ")";
        } else {
          if (v.left()) os << " + [left v>=" << v.left()->base << "+" << v.left()->slope << "*(lo-i)]";
          if (v.right()) os << " + [right v>=" << *v.right() << "]";
        }
      },
      s);
  return os;
}

}  // namespace tdlf
