#include "tdlf/seminorm.hpp"

#include <algorithm>

#include "tdlf/errors.hpp"

namespace tdlf {

namespace {

bool is_const(const TailSpec& t, ExtInt v) { return t.is_constant() && t.constant_value() == v; }

void check_kind(const SeminormSpec& spec, const Series& x) {
  if (kind_of(x) != spec.field)
    throw KindMismatch(std::string("seminorm over ") + to_string(spec.field) + "-characteristic field applied to " +
                       to_string(kind_of(x)) + "-characteristic series");
}

}  // namespace

void validate(const SeminormSpec& spec) {
  const SeqSpec& n = spec.seq;
  if (n.attains_plus_inf()) throw NonAdmissibleSequence("seminorm sequence takes the value +inf");
  if (spec.field == FieldKind::EqualChar) {
    if (!is_const(n.right(), ExtInt::minus_inf()))
      throw NonAdmissibleSequence("equal characteristic: n_i must be -inf for all large i");
    return;
  }
  const TailSpec& l = n.left();
  if (!(l.is_constant() || l.slope() >= 1))
    throw NonAdmissibleSequence("mixed characteristic: n_i must be bounded above");
  const TailSpec& r = n.right();
  if (!(is_const(r, ExtInt::minus_inf()) || (r.is_affine() && r.slope() <= -1)))
    throw NonAdmissibleSequence("mixed characteristic: n_i must tend to -inf as i -> +inf");
}

bool is_admissible(const SeminormSpec& spec) {
  try {
    validate(spec);
    return true;
  } catch (const NonAdmissibleSequence&) {
    return false;
  }
}

ExtInt last_finite_index(const SeqSpec& n) {
  if (!is_const(n.right(), ExtInt::minus_inf())) return ExtInt::plus_inf();
  const auto& w = n.window();
  for (std::size_t k = w.size(); k-- > 0;)
    if (!w[k].is_minus_inf()) return ExtInt(n.lo() + static_cast<std::int64_t>(k));
  if (is_const(n.left(), ExtInt::minus_inf())) return ExtInt::minus_inf();
  return ExtInt(n.lo() - 1);
}

ExponentResult eval_exponent(const SeminormSpec& spec, const Series& x) {
  validate(spec);
  check_kind(spec, x);
  if (const auto* e = std::get_if<EqualCharSeries>(&x)) {
    const ExtInt k = last_finite_index(spec.seq);
    if (k >= e->trunc())
      throw PrecisionExhausted("series known modulo t^" + e->trunc().to_string() + " but the seminorm reaches t^" +
                               k.to_string());
  }
  ExtInt exact = ExtInt::minus_inf();
  for (const auto& [i, v] : exact_valuations(x)) exact = std::max(exact, excess(spec.seq.at(i), v));
  const ExtInt bound = pointwise_excess(spec.seq, bound_only_valuations(x)).sup();
  if (bound.is_minus_inf() || bound < exact) return {exact, Exactness::Exact};
  return {bound, Exactness::UpperBound};
}

const char* to_string(BallMembership b) noexcept {
  switch (b) {
    case BallMembership::Inside: return "inside";
    case BallMembership::Outside: return "outside";
    case BallMembership::Unknown: break;
  }
  return "unknown";
}

BallMembership closed_ball_test(const SeminormSpec& spec, const Series& x, std::int64_t e) {
  const ExponentResult r = eval_exponent(spec, x);
  if (!r.exact()) return BallMembership::Unknown;
  return r.exponent <= ExtInt(e) ? BallMembership::Inside : BallMembership::Outside;
}

std::int64_t convergence_index(const SeminormSpec& spec, const Series& x, std::int64_t precision) {
  validate(spec);
  check_kind(spec, x);
  const SeqSpec& n = spec.seq;
  if (const auto* e = std::get_if<EqualCharSeries>(&x)) {
    const ExtInt k = last_finite_index(n);
    std::int64_t top = e->coeffs().empty() ? e->order() : e->coeffs().rbegin()->first;
    return k.is_finite() ? std::max(top, k.value()) : top;
  }
  const auto& m = std::get<MixedSeries>(x);
  std::int64_t idx = std::max(m.hi(), n.hi());
  if (m.right() && n.right().is_affine()) {
    // m_s·i + o < d - precision for i > N.
    const std::int64_t s = n.right().slope(), o = n.right().offset();
    idx = std::max(idx, floor_div(checked_add(checked_sub(o, *m.right()), precision), -s));
  }
  return idx;
}

}  // namespace tdlf
