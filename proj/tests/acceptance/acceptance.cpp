// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "brute.hpp"
#include "tdlf/duality.hpp"
#include "tdlf/errors.hpp"
#include "tdlf/json_io.hpp"
#include "tdlf/oracle.hpp"
#include "tdlf/parse.hpp"
#include "tdlf/seminorm.hpp"
#include "tdlf/submodule.hpp"

namespace {

using brute::kMinusInf;
using brute::kPlusInf;
using tdlf::BigInt;
using tdlf::ExtInt;
using tdlf::FieldKind;
using tdlf::MixedSeries;
using tdlf::PAdic;
using tdlf::SeqSpec;
using tdlf::Series;
using tdlf::SubmoduleSpec;
using tdlf::TailSpec;
namespace oracle = tdlf::oracle;

constexpr std::uint64_t kP = 5;
constexpr std::int64_t kPrecision = 32;

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Collects failures; the first few are kept for the report.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (examples_.size() < 3) examples_.push_back(what());
  }
  std::size_t checks() const { return checks_; }
  std::size_t failures() const { return failures_; }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream os;
    os << summary << "; " << checks_ << " checks, " << failures_ << " failures";
    for (const auto& e : examples_) os << "\n    " << e;
    return {failures_ == 0 && checks_ > 0, os.str()};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> examples_;
};

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

SeqSpec fn_spec(std::int64_t lo, std::int64_t hi, TailSpec l, TailSpec r, std::function<ExtInt(std::int64_t)> f) {
  return SeqSpec::tabulate(lo, hi, l, r, f);
}

// Tail of i ↦ a - s(-i) built from the opposite tail of s.
TailSpec reflected_tail(const TailSpec& t, std::int64_t a) {
  if (t.is_constant()) {
    const ExtInt c = t.constant_value();
    return TailSpec::constant(c.is_plus_inf() ? kMinusInf : c.is_minus_inf() ? kPlusInf : ExtInt(a - c.value()));
  }
  return TailSpec::affine(t.slope(), a - t.offset());
}

ExtInt reflected_value(const ExtInt& v, std::int64_t a) {
  return v.is_plus_inf() ? kMinusInf : v.is_minus_inf() ? kPlusInf : ExtInt(a - v.value());
}

// Σ p^{a - k_{-i}} t^i assembled independently of reflect_affine.
SeqSpec expected_reflection(const SeqSpec& k, std::int64_t a) {
  const std::int64_t reach = std::max(std::abs(k.lo()), std::abs(k.hi())) + 3;
  return fn_spec(-reach, reach, reflected_tail(k.right(), a), reflected_tail(k.left(), a),
                 [&](std::int64_t i) { return reflected_value(k.at(-i), a); });
}

ExtInt pairing_valuation(const Series& x, const Series& y) { return tdlf::pairing(x, y).valuation(); }

// ---------------------------------------------------------------------------

Outcome criterion_polar_table() {
  Tally t;
  const auto byte_equal = [&](const SubmoduleSpec& got, const SubmoduleSpec& want, const std::string& label) {
    const std::string g = tdlf::to_json(got).dump(), w = tdlf::to_json(want).dump();
    t.check(got == want && g == w, [&] { return label + ": got " + g + ", want " + w; });
  };
  const auto mixed = [](SeqSpec s) { return SubmoduleSpec{std::move(s), FieldKind::MixedChar}; };
  const auto equal = [](SeqSpec s) { return SubmoduleSpec{std::move(s), FieldKind::EqualChar}; };

  // Fixed rows.
  const SubmoduleSpec o_curly = mixed(SeqSpec::constant(ExtInt(0)));
  const SubmoduleSpec p_curly = mixed(SeqSpec::constant(ExtInt(1)));
  byte_equal(tdlf::pseudo_polar(tdlf::named("O{{t}}")), p_curly, "pseudo-polar O{{t}}");
  byte_equal(tdlf::polar(tdlf::named("O{{t}}")), o_curly, "polar O{{t}}");

  const auto rank2_equal = [](std::int64_t at0) {
    return SeqSpec(0, {ExtInt(at0)}, TailSpec::constant(kPlusInf), TailSpec::constant(kMinusInf));
  };
  byte_equal(tdlf::pseudo_polar(tdlf::named("O+tK[[t]]")), equal(rank2_equal(1)), "pseudo-polar O+tK[[t]]");
  byte_equal(tdlf::polar(tdlf::named("O+tK[[t]]")), equal(rank2_equal(0)), "polar O+tK[[t]]");

  // Generic rows: open lattice ↦ compactoid, basic compactoid ↦ open lattice.
  oracle::Rng rng(1001);
  for (const FieldKind f : {FieldKind::EqualChar, FieldKind::MixedChar}) {
    for (int n = 0; n < 250; ++n) {
      const SubmoduleSpec lat = oracle::random_lattice(rng, f);
      const SubmoduleSpec pp = tdlf::pseudo_polar(lat), po = tdlf::polar(lat);
      byte_equal(pp, {expected_reflection(lat.seq, 1), f}, "pseudo-polar of lattice " + str(lat.seq));
      byte_equal(po, {expected_reflection(lat.seq, 0), f}, "polar of lattice " + str(lat.seq));
      t.check(tdlf::is_compactoid(pp) && tdlf::is_compactoid(po),
              [&] { return "polar of lattice not compactoid: " + str(lat.seq); });

      const SubmoduleSpec b = oracle::random_compactoid(rng, f);
      const SubmoduleSpec bp = tdlf::pseudo_polar(b), bo = tdlf::polar(b);
      byte_equal(bp, {expected_reflection(b.seq, 1), f}, "pseudo-polar of compactoid " + str(b.seq));
      byte_equal(bo, {expected_reflection(b.seq, 0), f}, "polar of compactoid " + str(b.seq));
      t.check(tdlf::is_open_lattice(bp) && tdlf::is_open_lattice(bo),
              [&] { return "polar of compactoid not an open lattice: " + str(b.seq); });
    }
  }

  // Disputed rows: pinned to the general formula.
  const SubmoduleSpec t_k = equal(fn_spec(0, 1, TailSpec::constant(kPlusInf), TailSpec::constant(kMinusInf),
                                           [](std::int64_t i) { return i <= 0 ? kPlusInf : kMinusInf; }));
  byte_equal(tdlf::named("tK[[t]]"), t_k, "named tK[[t]]");
  byte_equal(tdlf::pseudo_polar(tdlf::named("K[[t]]")), t_k, "pseudo-polar K[[t]]");
  const SubmoduleSpec rank2_gamma =
      mixed(fn_spec(0, 0, TailSpec::constant(ExtInt(1)), TailSpec::constant(ExtInt(0)),
                    [](std::int64_t) { return ExtInt(1); }));
  byte_equal(tdlf::pseudo_polar(tdlf::named("rank2_mixed")), rank2_gamma, "pseudo-polar rank-2 ring");
  const SubmoduleSpec rank2_polar =
      mixed(fn_spec(0, 0, TailSpec::constant(ExtInt(0)), TailSpec::constant(ExtInt(-1)),
                    [](std::int64_t) { return ExtInt(0); }));
  byte_equal(tdlf::polar(tdlf::named("rank2_mixed")), rank2_polar, "polar rank-2 ring");

  // Pairing oracle on [-10, 10]: every x in the formula value pairs into p
  // with every y in A; off-by-one enlargements are refuted.
  std::size_t counterexamples = 0, total_pairs = 0;
  for (const std::string name : {"K[[t]]", "rank2_mixed"}) {
    std::size_t pairs = 0;
    const SubmoduleSpec a = tdlf::named(name);
    const SubmoduleSpec g = tdlf::pseudo_polar(a);
    oracle::SampleConfig cfg;
    cfg.window_lo = -10;
    cfg.window_hi = 10;
    cfg.prime = kP;
    cfg.count = 25;
    for (std::uint64_t round = 0; pairs < 500; ++round) {
      cfg.seed = 2 * round;
      const auto xs = oracle::sample_elements(g, cfg);
      cfg.seed = 2 * round + 1;
      const auto ys = oracle::sample_elements(a, cfg);
      for (std::size_t k = 0; k < xs.size() && k < ys.size() && pairs < 500; ++k) {
        ++pairs;
        if (pairing_valuation(xs[k], ys[ys.size() - 1 - k]) < ExtInt(1)) ++counterexamples;
      }
    }
    total_pairs += pairs;
    // Maximality: raising any coordinate bound by one admits a y with |π_x(y)| = 1.
    for (std::int64_t i = -10; i <= 10; ++i) {
      const ExtInt b = g.seq.at(i);
      if (b.is_minus_inf()) continue;
      const std::int64_t vx = b.is_plus_inf() ? 40 : b.value() - 1;
      const ExtInt kj = a.seq.at(-i);
      const std::int64_t vy = kj.is_minus_inf() ? -vx : kj.value();
      const PAdic cx = PAdic::power(kP, vx, 8), cy = PAdic::power(kP, vy, 8);
      const bool eq = a.field == FieldKind::EqualChar;
      const Series xs = eq ? Series(tdlf::EqualCharSeries::monomial(cx, i)) : Series(MixedSeries::monomial(cx, i));
      const Series ys = eq ? Series(tdlf::EqualCharSeries::monomial(cy, -i)) : Series(MixedSeries::monomial(cy, -i));
      t.check(tdlf::membership(a, ys) == tdlf::Membership::In && pairing_valuation(xs, ys) < ExtInt(1),
              [&] { return name + ": enlarging coordinate " + std::to_string(i) + " not refuted"; });
    }
  }
  t.check(counterexamples == 0, [&] { return std::to_string(counterexamples) + " pairing counterexamples"; });

  // The table's printed values for the disputed rows admit a refuting pair.
  {
    const Series x = tdlf::EqualCharSeries::monomial(PAdic::from_integer(kP, 1, 8), 0);  // 1 ∈ K[[t]]
    const Series y = tdlf::EqualCharSeries::monomial(PAdic::from_rational(kP, 1, 5, 8), 0);
    t.check(pairing_valuation(x, y) < ExtInt(1), [] { return std::string("K[[t]] row not refuted"); });
  }
  return t.outcome("fixed rows, generic rows, disputed rows with " + std::to_string(total_pairs) + " oracle pairs");
}

Outcome criterion_involution() {
  Tally t;
  oracle::Rng rng(1002);
  for (int n = 0; n < 1000; ++n) {
    const SubmoduleSpec m = oracle::random_submodule(rng, n % 2 ? FieldKind::MixedChar : FieldKind::EqualChar);
    const SubmoduleSpec back = tdlf::pseudo_polar(tdlf::pseudo_polar(m));
    bool ok = back.field == m.field;
    for (std::int64_t i = -50; i <= 50 && ok; ++i) ok = back.seq.at(i) == m.seq.at(i);
    t.check(ok, [&] { return "A^pp != A for " + str(m.seq); });
  }
  return t.outcome("1000 random specs, pointwise on [-50,50]");
}

Outcome criterion_gauge() {
  Tally t;
  oracle::Rng rng(1003);
  std::size_t finite = 0;
  for (int n = 0; n < 500; ++n) {
    const FieldKind f = n % 2 ? FieldKind::MixedChar : FieldKind::EqualChar;
    const SubmoduleSpec lat = oracle::random_lattice(rng, f);
    const Series x = oracle::random_element(rng, f, kP, -8, 8, 4, kPrecision);
    const auto r = tdlf::eval_exponent({lat.seq, f}, x);
    // Smallest e with x in p^{-e}Λ, by scanning.
    ExtInt minimal = kPlusInf;
    if (tdlf::membership(tdlf::scale_by_power(lat, 1000), x) == tdlf::Membership::In) {
      minimal = kMinusInf;
    } else {
      for (std::int64_t e = -200; e <= 200; ++e) {
        if (tdlf::membership(tdlf::scale(lat, PAdic::power(kP, -e, 4)), x) == tdlf::Membership::In) {
          minimal = ExtInt(e);
          break;
        }
      }
    }
    if (minimal.is_finite()) ++finite;
    t.check(r.exact() && r.exponent == minimal,
            [&] { return "lattice " + str(lat.seq) + ": gauge " + str(minimal) + " vs " + str(r); });
  }
  return t.outcome("500 (lattice, element) pairs, " + std::to_string(finite) + " with finite gauge");
}

Outcome criterion_dual_seminorm() {
  Tally t;
  oracle::Rng rng(1004);
  std::size_t exact_cases = 0;
  for (int n = 0; n < 200; ++n) {
    const FieldKind f = n % 2 ? FieldKind::MixedChar : FieldKind::EqualChar;
    const SubmoduleSpec b = oracle::random_compactoid(rng, f);
    const Series x = oracle::random_element(rng, f, kP, -8, 8, 4, kPrecision);
    const auto expected = tdlf::eval_exponent(tdlf::dual_seminorm(b), x);
    oracle::SampleConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(n);
    cfg.prime = kP;
    ExtInt best = kMinusInf, inexact_ceiling = kMinusInf;
    for (const auto& y : oracle::sample_elements(b, cfg)) {
      const auto e = tdlf::pairing(x, y).abs_exponent();
      if (e.exact())
        best = std::max(best, e.exponent);
      else
        inexact_ceiling = std::max(inexact_ceiling, e.exponent);
    }
    if (!expected.exact() || inexact_ceiling > best) continue;
    ++exact_cases;
    t.check(best == expected.exponent, [&] {
      return "B=" + str(b.seq) + " x=" + tdlf::render(x) + ": sampled " + str(best) + " vs " + str(expected);
    });
  }
  return t.outcome("200 (compactoid, element) pairs, " + std::to_string(exact_cases) + " exact");
}

Outcome criterion_ultrametric() {
  Tally t;
  oracle::Rng rng(1005);
  std::size_t exact_sum = 0, exact_scale = 0;
  for (int n = 0; n < 2000; ++n) {
    const FieldKind f = n % 2 ? FieldKind::MixedChar : FieldKind::EqualChar;
    const tdlf::SeminormSpec spec = oracle::random_seminorm(rng, f);
    const auto element = [&]() -> Series {
      if (f == FieldKind::MixedChar && rng.chance(1, 3)) return oracle::random_tailed_element(rng, kP, kPrecision);
      return oracle::random_element(rng, f, kP, -8, 8, 4, kPrecision);
    };
    const Series x = element(), y = element();
    const auto ex = tdlf::eval_exponent(spec, x), ey = tdlf::eval_exponent(spec, y);
    const auto es = tdlf::eval_exponent(spec, tdlf::add(x, y));
    if (ex.exact() && ey.exact() && es.exact()) {
      ++exact_sum;
      t.check(es.exponent <= std::max(ex.exponent, ey.exponent),
              [&] { return "ultrametric: " + tdlf::render(x) + " , " + tdlf::render(y); });
    }
    const std::int64_t v = rng.uniform(-5, 5);
    const PAdic lambda = oracle::random_padic(rng, kP, v, kPrecision);
    const Series c = f == FieldKind::MixedChar ? Series(MixedSeries::monomial(lambda, 0))
                                               : Series(tdlf::EqualCharSeries::monomial(lambda, 0));
    const auto el = tdlf::eval_exponent(spec, tdlf::mul(c, x));
    if (ex.exact() && el.exact()) {
      ++exact_scale;
      const ExtInt want = ex.exponent.is_finite() ? ExtInt(ex.exponent.value() - v) : ex.exponent;
      t.check(el.exponent == want, [&] { return "scaling by p^" + std::to_string(v) + ": " + tdlf::render(x); });
    }
  }
  return t.outcome("2000 triples, " + std::to_string(exact_sum) + " exact sums, " + std::to_string(exact_scale) +
                   " exact scalings");
}

Outcome criterion_product_bound() {
  Tally t;
  oracle::Rng rng(1006);
  for (int n = 0; n < 500; ++n) {
    const FieldKind f = n % 2 ? FieldKind::MixedChar : FieldKind::EqualChar;
    const SubmoduleSpec a = oracle::random_submodule(rng, f), b = oracle::random_submodule(rng, f);
    const SubmoduleSpec c = tdlf::product_bound(a, b);
    for (std::int64_t k = -20; k <= 20; ++k) {
      const std::int64_t lo = std::min(a.seq.lo(), k - b.seq.hi()) - 2;
      const std::int64_t hi = std::max(a.seq.hi(), k - b.seq.lo()) + 2;
      const ExtInt want = oracle::brute_minplus(a.seq, b.seq, k, lo, hi);
      t.check(c.seq.at(k) == want,
              [&] { return str(a.seq) + " ⊞ " + str(b.seq) + " at " + std::to_string(k) + ": " + str(c.seq.at(k)); });
    }
  }
  for (int n = 0; n < 500; ++n) {
    const FieldKind f = n % 2 ? FieldKind::MixedChar : FieldKind::EqualChar;
    const SubmoduleSpec a = oracle::random_submodule(rng, f), b = oracle::random_submodule(rng, f);
    oracle::SampleConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(n);
    cfg.count = 2;
    cfg.prime = kP;
    cfg.window_lo = -8;
    cfg.window_hi = 8;
    const auto xs = oracle::sample_elements(a, cfg);
    const auto ys = oracle::sample_elements(b, cfg);
    const Series& x = xs[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(xs.size()) - 1))];
    const Series& y = ys[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(ys.size()) - 1))];
    const SubmoduleSpec c = tdlf::product_bound(a, b);
    t.check(tdlf::membership(c, tdlf::mul(x, y)) == tdlf::Membership::In,
            [&] { return "product " + tdlf::render(x) + " · " + tdlf::render(y) + " escapes " + str(c.seq); });
  }
  for (int n = 0; n < 500; ++n) {
    const SubmoduleSpec a = oracle::random_bounded(rng, FieldKind::MixedChar);
    const SubmoduleSpec b = oracle::random_bounded(rng, FieldKind::MixedChar);
    t.check(tdlf::is_bounded(tdlf::product_bound(a, b)), [&] { return "bounded product " + str(a.seq); });
    const SubmoduleSpec c = oracle::random_compactoid(rng, FieldKind::MixedChar);
    const SubmoduleSpec d = oracle::random_compactoid(rng, FieldKind::MixedChar);
    t.check(tdlf::is_compactoid(tdlf::product_bound(c, d)), [&] { return "compactoid product " + str(c.seq); });
  }
  return t.outcome("500 spec pairs x 41 indices, 500 element products, 1000 closure checks");
}

Outcome criterion_classification() {
  Tally t;
  struct Row {
    const char* name;
    bool open_lattice, bounded, compactoid, c_compact, complete, closed;
  };
  // Facts for p{{t}} and tK[[t]] follow from O{{t}} and K[[t]] by scaling.
  const std::array<Row, 6> rows{{
      {"K[[t]]", false, false, false, true, true, true},
      {"O+tK[[t]]", false, false, false, true, true, true},
      {"tK[[t]]", false, false, false, true, true, true},
      {"O{{t}}", false, true, false, false, true, true},
      {"p{{t}}", false, true, false, false, true, true},
      {"rank2_mixed", false, true, false, false, true, true},
  }};
  for (const Row& r : rows) {
    const tdlf::Classification c = tdlf::known_classification(r.name);
    const tdlf::Classification want{r.open_lattice, r.bounded, r.compactoid, r.complete, r.c_compact, r.closed};
    t.check(c == want, [&] { return std::string(r.name) + ": " + tdlf::to_json(c).dump(); });
  }
  const SubmoduleSpec o = tdlf::named("O{{t}}");
  // Not barrelled: O{{t}} is a closed lattice that is not open.
  t.check(!tdlf::is_open_lattice(o) && tdlf::is_bounded(o) && tdlf::known_classification("O{{t}}").closed == true,
          [] { return std::string("O{{t}} barrelledness witness"); });
  // Not bornological: the sup norm (n_i = 0) is not admissible, yet bounded on
  // every bounded spec; its unit ball is O{{t}}.
  const tdlf::SeminormSpec sup_norm{SeqSpec::constant(ExtInt(0)), FieldKind::MixedChar};
  t.check(!tdlf::is_admissible(sup_norm), [] { return std::string("sup norm reported admissible"); });
  oracle::Rng rng(1007);
  for (int n = 0; n < 500; ++n) {
    const SubmoduleSpec b = oracle::random_bounded(rng, FieldKind::MixedChar);
    const ExtInt bound = tdlf::sup_norm_bound(b);
    t.check(bound < kPlusInf && bound == -b.seq.inf(), [&] { return "sup norm unbounded on " + str(b.seq); });
  }
  return t.outcome("six named modules, barrelled and bornological witnesses");
}

Outcome criterion_unboundedness() {
  Tally t;
  oracle::Rng rng(1008);
  for (int n = 0; n < 100; ++n) {
    const FieldKind f = n % 2 ? FieldKind::MixedChar : FieldKind::EqualChar;
    const SubmoduleSpec m = oracle::random_unbounded(rng, f);
    const auto w = tdlf::unboundedness_witness(m, kP, 10);
    t.check(tdlf::is_admissible(w.seminorm) && !w.elements.empty(),
            [&] { return "witness seminorm for " + str(m.seq) + " not admissible"; });
    for (const auto& x : w.elements) {
      const auto e = tdlf::eval_exponent(w.seminorm, x);
      t.check(tdlf::membership(m, x) == tdlf::Membership::In && e.exponent >= ExtInt(10),
              [&] { return str(m.seq) + ": element " + tdlf::render(x) + " exponent " + str(e); });
    }
  }
  return t.outcome("100 unbounded specs, target exponent 10");
}

Outcome criterion_convergence() {
  Tally t;
  oracle::Rng rng(1009);
  for (int n = 0; n < 100; ++n) {
    const MixedSeries x = oracle::random_tailed_element(rng, kP, kPrecision);
    for (int s = 0; s < 20; ++s) {
      const tdlf::SeminormSpec spec = oracle::random_seminorm(rng, FieldKind::MixedChar);
      const std::int64_t big_n = tdlf::convergence_index(spec, x, kPrecision);
      ExtInt prev = kPlusInf;
      bool monotone = true;
      for (std::int64_t k = x.hi(); k <= big_n; ++k) {
        const ExtInt e = tdlf::eval_exponent(spec, tdlf::remainder(x, k)).exponent;
        monotone = monotone && e <= prev;
        prev = e;
      }
      t.check(monotone && prev < ExtInt(-kPrecision), [&] {
        return "x=" + tdlf::render(x) + " n=" + str(spec.seq) + " N=" + std::to_string(big_n) + " last " + str(prev);
      });
    }
  }
  return t.outcome("100 tailed elements x 20 seminorms");
}

// Literal generator for the round-trip check.
std::string random_literal(oracle::Rng& rng, FieldKind& field) {
  std::ostringstream os;
  const int terms = static_cast<int>(rng.uniform(1, 5));
  for (int k = 0; k < terms; ++k) {
    const bool neg = rng.chance(1, 3);
    if (k == 0)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    const std::int64_t c = rng.uniform(1, 999);
    const std::int64_t pe = rng.uniform(-4, 6);
    const std::int64_t te = rng.uniform(-9, 9);
    switch (rng.uniform(0, 4)) {
      case 0: os << c << "*p^" << pe << "*t^" << te; break;
      case 1: os << c << " p^" << pe << " t^(" << te << ")"; break;
      case 2: os << "p^" << pe << "*t^" << te << "/" << (rng.uniform(1, 60) * 5 + 1); break;
      case 3: os << c << "*t^" << te; break;
      default: os << c; break;
    }
  }
  switch (rng.uniform(0, 2)) {
    case 0:
      field = FieldKind::EqualChar;
      os << " + O(t^" << rng.uniform(-3, 12) << ")";
      break;
    case 1: {
      field = FieldKind::MixedChar;
      os << " + tail(v>=";
      const std::int64_t d = rng.uniform(-2, 40);
      if (rng.chance(1, 2))
        os << "left " << rng.uniform(-3, 20) << " slope " << rng.uniform(1, 4) << "; right " << d;
      else
        os << d;
      os << ")";
      break;
    }
    default: field = FieldKind::MixedChar; break;
  }
  return os.str();
}

std::string run_cli(const std::string& args) {
#ifdef TDLF_CLI_PATH
  const std::string cmd = std::string("'") + TDLF_CLI_PATH + "' " + args + " 2>&1";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return out + "<status " + std::to_string(status) + ">";
#else
  (void)args;
  return {};
#endif
}

Outcome criterion_round_trip() {
  Tally t;
  oracle::Rng rng(1010);
  for (int n = 0; n < 1000; ++n) {
    FieldKind field = FieldKind::MixedChar;
    const std::string literal = random_literal(rng, field);
    const tdlf::ParseOptions opts{kP, kPrecision, std::nullopt};
    try {
      const Series x = tdlf::parse_series(literal, opts);
      const std::string text = tdlf::render(x);
      const Series y = tdlf::parse_series(text, opts);
      t.check(tdlf::kind_of(x) == field && y == x && tdlf::render(y) == text,
              [&] { return "'" + literal + "' renders as '" + text + "'"; });
    } catch (const std::exception& e) {
      t.check(false, [&] { return "'" + literal + "': " + e.what(); });
    }
  }
#ifdef TDLF_CLI_PATH
  const std::vector<std::string> commands{
      R"cli(--prime 5 norm --series "t^-3/p" --seminorm '{"window":{},"left":{"kind":"const","value":0},"right":{"kind":"const","value":"-inf"},"field":"mixed"}')cli",
      R"cli(--prime 5 classify --module 'O{{t}}')cli",
      R"cli(--prime 5 pseudo-polar --module 'O{{t}}')cli",
      R"cli(--prime 5 polar --module rank2_mixed)cli",
      R"cli(--prime 7 eval --op mul --series "1 + 3*t - p*t^-2" --with "2 - t^-1 + tail(v>=left 1 slope 1; right 4)")cli",
      R"cli(--prime 5 pair --x "t^-1 + 2" --y "3*t + 1")cli",
      R"cli(--prime 5 product-bound --a 'O{{t}}' --b rank2_mixed)cli",
      R"cli(--prime 5 dual-norm --module '{"window":{"0":0},"left":{"kind":"affine","slope":-1,"offset":0},"right":{"kind":"const","value":0},"field":"mixed"}')cli",
      R"cli(--prime 5 --field equal valuation --series "p^3*t^-2 + t")cli",
      R"cli(--prime 3 --seed 42 --window -6,6 oracle sample --module rank2_mixed --count 4)cli",
      R"cli(--prime 5 eval --series "t^^2")cli",
  };
  for (const auto& c : commands) {
    const std::string first = run_cli(c), second = run_cli(c);
    t.check(!first.empty() && first == second, [&] { return "CLI output differs for: " + c; });
  }
#else
  t.check(false, [] { return std::string("CLI not built; determinism unchecked"); });
#endif
  return t.outcome("1000 generated literals, CLI determinism");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
  };
  const std::array<Criterion, 10> criteria{{
      {1, "polar table fixtures", criterion_polar_table},
      {2, "pseudo-polar involution", criterion_involution},
      {3, "gauge equals seminorm exponent", criterion_gauge},
      {4, "dual seminorm equals sup of pairings", criterion_dual_seminorm},
      {5, "ultrametric axioms", criterion_ultrametric},
      {6, "product bound soundness", criterion_product_bound},
      {7, "classification fixtures", criterion_classification},
      {8, "unboundedness witnesses", criterion_unboundedness},
      {9, "remainder convergence", criterion_convergence},
      {10, "round trip and determinism", criterion_round_trip},
  }};
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << " (" << ms << " ms): " << o.detail
              << std::endl;
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
