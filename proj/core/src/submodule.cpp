#include "tdlf/submodule.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tdlf/errors.hpp"

namespace tdlf {

namespace {

bool is_const(const TailSpec& t, ExtInt v) { return t.is_constant() && t.constant_value() == v; }

void check_same_field(const SubmoduleSpec& a, const SubmoduleSpec& b) {
  if (a.field != b.field) throw KindMismatch("submodules of different fields");
}

SubmoduleSpec make(FieldKind f, std::int64_t lo, std::vector<ExtInt> w, ExtInt left, ExtInt right) {
  return {SeqSpec(lo, std::move(w), TailSpec::constant(left), TailSpec::constant(right)), f};
}

constexpr ExtInt kPinf = ExtInt::plus_inf();
constexpr ExtInt kMinf = ExtInt::minus_inf();

// p^v t^i as a series of the given kind.
Series monomial(FieldKind f, std::uint64_t p, std::int64_t v, std::int64_t i, std::int64_t precision) {
  const PAdic c = PAdic::power(p, v, precision);
  if (f == FieldKind::EqualChar) return EqualCharSeries::monomial(c, i);
  return MixedSeries::monomial(c, i);
}

}  // namespace

bool is_open_lattice(const SubmoduleSpec& m) {
  const SeqSpec& k = m.seq;
  if (k.attains_plus_inf()) return false;
  if (m.field == FieldKind::EqualChar) return is_const(k.right(), kMinf);
  if (k.sup().is_plus_inf()) return false;
  return is_const(k.right(), kMinf) || (k.right().is_affine() && k.right().slope() < 0);
}

bool is_bounded(const SubmoduleSpec& m) {
  const SeqSpec& k = m.seq;
  if (m.field == FieldKind::EqualChar) return is_const(k.left(), kPinf) && !k.attains_minus_inf();
  return k.inf() > kMinf;
}

bool is_compactoid(const SubmoduleSpec& m) {
  if (!is_bounded(m)) return false;
  if (m.field == FieldKind::EqualChar) return true;
  const TailSpec& l = m.seq.left();
  return is_const(l, kPinf) || (l.is_affine() && l.slope() <= -1);
}

const char* to_string(Membership m) noexcept {
  switch (m) {
    case Membership::In: return "in";
    case Membership::Out: return "out";
    case Membership::Unknown: break;
  }
  return "unknown";
}

Membership membership(const SubmoduleSpec& m, const Series& x) {
  if (kind_of(x) != m.field) throw KindMismatch("membership: series and submodule of different fields");
  ExtInt exact = kMinf;
  for (const auto& [i, v] : exact_valuations(x)) exact = std::max(exact, excess(m.seq.at(i), v));
  if (exact > ExtInt(0)) return Membership::Out;
  const ExtInt bound = pointwise_excess(m.seq, bound_only_valuations(x)).sup();
  return bound <= ExtInt(0) ? Membership::In : Membership::Unknown;
}

SubmoduleSpec sum(const SubmoduleSpec& a, const SubmoduleSpec& b) {
  check_same_field(a, b);
  return {pointwise_min(a.seq, b.seq), a.field};
}

SubmoduleSpec intersect(const SubmoduleSpec& a, const SubmoduleSpec& b) {
  check_same_field(a, b);
  return {pointwise_max(a.seq, b.seq), a.field};
}

SubmoduleSpec scale(const SubmoduleSpec& m, const PAdic& a) {
  if (a.is_exact_zero()) return {SeqSpec::constant(kPinf), m.field};
  if (a.is_zero_within_precision())
    throw PrecisionExhausted("scaling by an element known only to be 0 mod p^" + a.precision().to_string());
  return scale_by_power(m, a.valuation().value());
}

SubmoduleSpec scale_by_power(const SubmoduleSpec& m, std::int64_t e) { return {shift_add(m.seq, e), m.field}; }

SubmoduleSpec product_bound(const SubmoduleSpec& a, const SubmoduleSpec& b) {
  check_same_field(a, b);
  return {minplus_convolve(a.seq, b.seq), a.field};
}

Classification classify(const SubmoduleSpec& m) {
  Classification c;
  c.open_lattice = is_open_lattice(m);
  c.bounded = is_bounded(m);
  c.compactoid = is_compactoid(m);
  return c;
}

const std::vector<std::string>& named_modules() {
  static const std::vector<std::string> names{"K[[t]]", "O+tK[[t]]", "O{{t}}", "p{{t}}", "rank2_mixed", "tK[[t]]"};
  return names;
}

SubmoduleSpec named(const std::string& name) {
  using F = FieldKind;
  if (name == "K[[t]]") return make(F::EqualChar, 0, {kMinf}, kPinf, kMinf);
  if (name == "O+tK[[t]]") return make(F::EqualChar, 0, {ExtInt(0)}, kPinf, kMinf);
  if (name == "tK[[t]]") return make(F::EqualChar, 0, {kPinf}, kPinf, kMinf);
  if (name == "O{{t}}") return {SeqSpec::constant(ExtInt(0)), F::MixedChar};
  if (name == "p{{t}}") return {SeqSpec::constant(ExtInt(1)), F::MixedChar};
  if (name == "rank2_mixed") return make(F::MixedChar, 0, {ExtInt(0)}, ExtInt(1), ExtInt(0));
  throw UnknownName("unknown module name '" + name + "'");
}

Classification known_classification(const std::string& name) {
  Classification c = classify(named(name));
  // Every named module is closed and complete. The power-series rings and
  // their rank-two variants are c-compact; the K{{t}} ones are not.
  c.complete = true;
  c.closed = true;
  c.c_compact = named(name).field == FieldKind::EqualChar;
  return c;
}

ExtInt seminorm_bound(const SeminormSpec& n, const SubmoduleSpec& m) {
  if (n.field != m.field) throw KindMismatch("seminorm and submodule of different fields");
  // x_i ranges over p^{k_i}; |x_i| q^{n_i} peaks at q^{n_i - k_i}.
  return pointwise_excess(n.seq, m.seq).sup();
}

ExtInt sup_norm_bound(const SubmoduleSpec& m) { return -m.seq.inf(); }

UnboundednessWitness unboundedness_witness(const SubmoduleSpec& m, std::uint64_t prime, std::int64_t target,
                                           std::int64_t precision) {
  if (is_bounded(m)) throw std::invalid_argument("unboundedness_witness: the module is bounded");
  const SeqSpec& k = m.seq;
  const FieldKind f = m.field;
  UnboundednessWitness w{{SeqSpec::constant(kMinf), f}, {}};

  // A coordinate equal to K: one weight at that index, p^{-target}·t^i.
  for (std::int64_t i = k.lo(); i <= k.hi(); ++i)
    if (k.at(i).is_minus_inf()) {
      w.seminorm.seq = SeqSpec::delta(i, ExtInt(0), kMinf);
      w.elements.push_back(monomial(f, prime, -target, i, precision));
      return w;
    }
  if (is_const(k.left(), kMinf) || is_const(k.right(), kMinf)) {
    const std::int64_t i = is_const(k.left(), kMinf) ? k.lo() - 1 : k.hi() + 1;
    w.seminorm.seq = SeqSpec::delta(i, ExtInt(0), kMinf);
    w.elements.push_back(monomial(f, prime, -target, i, precision));
    return w;
  }

  if (f == FieldKind::EqualChar) {
    // Nonzero coordinates at arbitrarily negative indices: n_i = -i + k_i there.
    const TailSpec& l = k.left();
    const std::int64_t start = std::min<std::int64_t>(k.lo(), 0);
    const TailSpec nl = TailSpec::affine(checked_sub(l.slope(), 1), l.offset());
    w.seminorm.seq = SeqSpec(start, {kMinf}, nl, TailSpec::constant(kMinf));
    const std::int64_t i = std::min(start - 1, -target);
    w.elements.push_back(monomial(f, prime, l.at(i).value(), i, precision));
    w.elements.push_back(monomial(f, prime, l.at(i - 1).value(), i - 1, precision));
    return w;
  }

  const TailSpec& l = k.left();
  if (l.is_affine() && l.slope() > 0) {
    // Coefficients unbounded towards -inf: n_i = 0 for i <= 0.
    w.seminorm.seq = SeqSpec(0, {ExtInt(0)}, TailSpec::constant(ExtInt(0)), TailSpec::constant(kMinf));
    const std::int64_t i =
        std::min({k.lo() - 1, std::int64_t{0}, floor_div(checked_sub(-target, l.offset()), l.slope())});
    w.elements.push_back(monomial(f, prime, l.at(i).value(), i, precision));
    w.elements.push_back(monomial(f, prime, l.at(i - 1).value(), i - 1, precision));
    return w;
  }

  // Coefficients unbounded towards +inf: n_i = floor(k_i / 2) for i >= 0.
  const TailSpec& r = k.right();
  if (!(r.is_affine() && r.slope() < 0)) throw std::logic_error("unboundedness_witness: unexpected shape");
  const std::int64_t s = r.slope(), o = r.offset();
  const std::int64_t start = std::max<std::int64_t>(k.hi() + 1, 0);
  // floor(k_i/2) - k_i >= target  <=>  k_i <= -2·target.
  const std::int64_t i = std::max(start, ceil_div(checked_add(checked_mul(2, target), o), -s));
  auto half = [&](std::int64_t j) { return ExtInt(floor_div(r.at(j).value(), 2)); };
  if (s % 2 == 0) {
    w.seminorm.seq = SeqSpec(start, {half(start)}, TailSpec::constant(kMinf), TailSpec::affine(s / 2, floor_div(o, 2)));
  } else {
    // Odd slope: i ↦ floor(k_i/2) has no affine presentation, so the
    // sequence stops one index past the witnesses.
    w.seminorm.seq = SeqSpec::tabulate(start, i + 1, TailSpec::constant(kMinf), TailSpec::constant(kMinf), half);
  }
  w.elements.push_back(monomial(f, prime, r.at(i).value(), i, precision));
  w.elements.push_back(monomial(f, prime, r.at(i + 1).value(), i + 1, precision));
  return w;
}

}  // namespace tdlf
