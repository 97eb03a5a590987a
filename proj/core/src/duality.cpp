#include "tdlf/duality.hpp"

#include <algorithm>

#include "tdlf/errors.hpp"

namespace tdlf {

PAdic pairing(const Series& x, const Series& y, std::optional<std::int64_t> target) {
  PAdic v = product_coefficient(x, y, 0);
  if (!target) return v;
  if (v.precision() < ExtInt(*target))
    throw PrecisionExhausted("pairing known modulo p^" + v.precision().to_string() + ", below target " +
                             std::to_string(*target));
  return v.truncated(*target);
}

Series functional_from_values(const FunctionalValues& a) {
  auto is_plus_inf = [](const TailSpec& t) { return t.is_constant() && t.constant_value().is_plus_inf(); };
  for (const auto& [i, c] : a.values)
    if (i < a.lo || i > a.hi) throw std::invalid_argument("functional value outside its window");
  if (a.field == FieldKind::EqualChar) {
    if (!is_plus_inf(a.left)) throw NonConvergentValues("values w(t^i) do not vanish for all large i");
    const ExtInt trunc = is_plus_inf(a.right) ? ExtInt::plus_inf() : ExtInt(a.hi + 1);
    return EqualCharSeries(a.prime, std::min(a.lo, a.hi + 1), trunc, a.values);
  }
  std::optional<LeftBound> left;
  if (a.left.is_affine() && a.left.slope() <= -1) {
    left = LeftBound{-a.left.slope(), checked_add(a.left.offset(), checked_mul(a.left.slope(), a.lo))};
  } else if (!is_plus_inf(a.left)) {
    throw NonConvergentValues("values w(t^i) do not tend to 0 as i -> +inf");
  }
  std::optional<std::int64_t> right;
  if (a.right.is_constant() && a.right.constant_value().is_finite()) {
    right = a.right.constant_value().value();
  } else if (a.right.is_affine() && a.right.slope() > 0) {
    right = a.right.at(a.hi + 1).value();
  } else if (!is_plus_inf(a.right)) {
    throw NonConvergentValues("values w(t^i) are unbounded");
  }
  return MixedSeries(a.prime, a.lo, a.hi, a.values, left, right);
}

SubmoduleSpec pseudo_polar(const SubmoduleSpec& m) { return {reflect_affine(m.seq, 1), m.field}; }

SubmoduleSpec polar(const SubmoduleSpec& m) { return {reflect_affine(m.seq, 0), m.field}; }

SeminormSpec dual_seminorm(const SubmoduleSpec& b) {
  if (b.field == FieldKind::EqualChar) {
    if (!is_bounded(b)) throw NotBounded("dual seminorm needs a bounded submodule");
  } else if (!is_compactoid(b)) {
    throw NotCompactoid("dual seminorm needs a compactoid submodule");
  }
  SeminormSpec n{reflect_affine(b.seq, 0), b.field};
  validate(n);
  return n;
}

std::int64_t ctopology_witness_index(const SubmoduleSpec& b, std::int64_t c) {
  if (!is_compactoid(b) || b.field != FieldKind::MixedChar)
    throw NotCompactoid("c-topology witness needs a compactoid submodule of K{{t}}");
  const TailSpec& l = b.seq.left();
  std::int64_t j = b.seq.lo() - 1;
  if (l.is_affine()) {
    // s·j + o > c with s <= -1.
    j = std::min(j, floor_div(checked_sub(c, l.offset()), l.slope()) - 1);
  }
  while (!(b.seq.at(j) > ExtInt(c))) --j;
  return j;
}

}  // namespace tdlf
