#include "tdlf/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "tdlf/errors.hpp"

namespace tdlf::oracle {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(gen_());
  const std::uint64_t n = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t r;
  do r = gen_();
  while (r >= limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + r % n);
}

bool Rng::chance(std::uint64_t num, std::uint64_t den) {
  return static_cast<std::uint64_t>(uniform(0, static_cast<std::int64_t>(den) - 1)) < num;
}

ExtInt brute_seminorm(const SeminormSpec& spec, const Series& x, std::int64_t lo, std::int64_t hi) {
  ExtInt best = ExtInt::minus_inf();
  for (std::int64_t i = lo; i <= hi; ++i) {
    const PAdic c = std::visit([i](const auto& s) { return s.coefficient(i); }, x);
    best = std::max(best, excess(spec.seq.at(i), c.valuation()));
  }
  return best;
}

ExtInt brute_minplus(const SeqSpec& a, const SeqSpec& b, std::int64_t k, std::int64_t lo, std::int64_t hi) {
  if (lo > std::min(a.lo(), k - b.hi()) || hi < std::max(a.hi(), k - b.lo()))
    throw WindowInsufficient("window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                             "] does not reach the tails at k = " + std::to_string(k));
  auto h = [&](std::int64_t i) { return dominated_sum(a.at(i), b.at(k - i)); };
  ExtInt best = ExtInt::plus_inf();
  for (std::int64_t i = lo - 1; i <= hi + 1; ++i) best = std::min(best, h(i));
  // Beyond the window h is affine (or constant infinite): it either keeps
  // its last value's trend away from the minimum or decreases forever.
  if (h(lo - 2) < h(lo - 1)) return ExtInt::minus_inf();
  if (h(hi + 2) < h(hi + 1)) return ExtInt::minus_inf();
  return best;
}

PAdic random_padic(Rng& rng, std::uint64_t p, std::int64_t v, std::int64_t relative_precision) {
  BigInt u = 0;
  do {
    u = 0;
    for (std::int64_t d = 0; d < relative_precision; ++d)
      u = u * p + static_cast<std::uint64_t>(rng.uniform(0, static_cast<std::int64_t>(p) - 1));
  } while (u % p == 0);
  return PAdic::from_parts(p, v, u, checked_add(v, relative_precision));
}

namespace {

constexpr ExtInt kPinf = ExtInt::plus_inf();
constexpr ExtInt kMinf = ExtInt::minus_inf();

ExtInt random_value(Rng& rng, bool allow_plus, bool allow_minus) {
  if (allow_plus && rng.chance(1, 8)) return kPinf;
  if (allow_minus && rng.chance(1, 8)) return kMinf;
  return ExtInt(rng.uniform(-5, 5));
}

std::vector<ExtInt> random_window(Rng& rng, bool allow_plus, bool allow_minus, std::size_t max_width = 6) {
  const auto width = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_width)));
  std::vector<ExtInt> w;
  for (std::size_t i = 0; i < width; ++i) w.push_back(random_value(rng, allow_plus, allow_minus));
  return w;
}

TailSpec random_affine(Rng& rng, std::int64_t smin, std::int64_t smax) {
  return TailSpec::affine(rng.uniform(smin, smax), rng.uniform(-5, 5));
}

TailSpec random_const(Rng& rng, bool allow_plus, bool allow_minus) {
  return TailSpec::constant(random_value(rng, allow_plus, allow_minus));
}

SeqSpec build(Rng& rng, std::vector<ExtInt> w, TailSpec l, TailSpec r) {
  return SeqSpec(rng.uniform(-6, 6), std::move(w), l, r);
}

Series make_series(FieldKind f, std::uint64_t p, std::map<std::int64_t, PAdic> terms) {
  if (f == FieldKind::MixedChar) return MixedSeries::from_terms(p, std::move(terms));
  const std::int64_t order = terms.empty() ? 0 : terms.begin()->first;
  return EqualCharSeries(p, order, ExtInt::plus_inf(), std::move(terms));
}

}  // namespace

SeqSpec random_seqspec(Rng& rng) {
  auto tail = [&] { return rng.chance(1, 2) ? random_const(rng, true, true) : random_affine(rng, -3, 3); };
  TailSpec l = tail();
  TailSpec r = tail();
  return build(rng, random_window(rng, true, true), l, r);
}

SubmoduleSpec random_lattice(Rng& rng, FieldKind f) {
  if (f == FieldKind::EqualChar) {
    TailSpec l = rng.chance(1, 2) ? random_const(rng, false, true) : random_affine(rng, -3, 3);
    return {build(rng, random_window(rng, false, true), l, TailSpec::constant(kMinf)), f};
  }
  TailSpec l = rng.chance(1, 2) ? random_const(rng, false, true) : random_affine(rng, 1, 3);
  TailSpec r = rng.chance(1, 3) ? TailSpec::constant(kMinf) : random_affine(rng, -3, -1);
  return {build(rng, random_window(rng, false, true), l, r), f};
}

SeminormSpec random_seminorm(Rng& rng, FieldKind f) {
  SubmoduleSpec m = random_lattice(rng, f);
  return {m.seq, f};
}

SubmoduleSpec random_bounded(Rng& rng, FieldKind f) {
  if (f == FieldKind::EqualChar) {
    TailSpec r = rng.chance(1, 2) ? random_const(rng, true, false) : random_affine(rng, -3, 3);
    return {build(rng, random_window(rng, true, false), TailSpec::constant(kPinf), r), f};
  }
  TailSpec l = rng.chance(1, 2) ? random_const(rng, true, false) : random_affine(rng, -3, 0);
  TailSpec r = rng.chance(1, 2) ? random_const(rng, true, false) : random_affine(rng, 0, 3);
  return {build(rng, random_window(rng, true, false), l, r), f};
}

SubmoduleSpec random_compactoid(Rng& rng, FieldKind f) {
  if (f == FieldKind::EqualChar) return random_bounded(rng, f);
  TailSpec l = rng.chance(1, 3) ? TailSpec::constant(kPinf) : random_affine(rng, -3, -1);
  TailSpec r = rng.chance(1, 2) ? random_const(rng, true, false) : random_affine(rng, 0, 3);
  return {build(rng, random_window(rng, true, false), l, r), f};
}

SubmoduleSpec random_unbounded(Rng& rng, FieldKind f) {
  for (;;) {
    SubmoduleSpec m = random_submodule(rng, f);
    if (!is_bounded(m)) return m;
  }
}

SubmoduleSpec random_submodule(Rng& rng, FieldKind f) { return {random_seqspec(rng), f}; }

Series random_element(Rng& rng, FieldKind f, std::uint64_t p, std::int64_t lo, std::int64_t hi, std::size_t terms,
                      std::int64_t precision) {
  std::map<std::int64_t, PAdic> m;
  for (std::size_t t = 0; t < terms; ++t)
    m.insert_or_assign(rng.uniform(lo, hi), random_padic(rng, p, rng.uniform(-6, 6), precision));
  return make_series(f, p, std::move(m));
}

MixedSeries random_tailed_element(Rng& rng, std::uint64_t p, std::int64_t precision) {
  const std::int64_t lo = rng.uniform(-6, 2);
  const std::int64_t hi = lo + rng.uniform(0, 6);
  std::map<std::int64_t, PAdic> m;
  for (std::int64_t i = lo; i <= hi; ++i)
    if (rng.chance(2, 3)) m.emplace(i, random_padic(rng, p, rng.uniform(-4, 4), precision));
  std::optional<LeftBound> left;
  if (rng.chance(2, 3)) left = LeftBound{rng.uniform(1, 3), rng.uniform(-4, 4)};
  std::optional<std::int64_t> right;
  if (rng.chance(3, 4)) right = rng.uniform(-4, 4);
  return MixedSeries(p, lo, hi, std::move(m), left, right);
}

std::vector<Series> sample_elements(const SubmoduleSpec& m, const SampleConfig& cfg) {
  Rng rng(cfg.seed);
  const std::uint64_t p = cfg.prime;
  auto valuation_at = [&](std::int64_t i) {
    const ExtInt k = m.seq.at(i);
    if (k.is_minus_inf()) return rng.uniform(-8, 8);
    return checked_add(k.value(), rng.uniform(0, 3));
  };
  std::vector<Series> out;
  for (std::int64_t i = cfg.window_lo; i <= cfg.window_hi; ++i) {
    const ExtInt k = m.seq.at(i);
    if (k.is_plus_inf()) continue;
    const std::int64_t v = k.is_finite() ? k.value() : rng.uniform(-8, 8);
    out.push_back(make_series(m.field, p, {{i, PAdic::power(p, v, cfg.precision)}}));
  }
  std::vector<std::int64_t> free;
  for (std::int64_t i = cfg.window_lo; i <= cfg.window_hi; ++i)
    if (!m.seq.at(i).is_plus_inf()) free.push_back(i);
  for (std::size_t c = 0; c < cfg.count; ++c) {
    std::map<std::int64_t, PAdic> terms;
    if (!free.empty()) {
      const auto n = rng.uniform(1, std::min<std::int64_t>(6, static_cast<std::int64_t>(free.size())));
      for (std::int64_t t = 0; t < n; ++t) {
        const std::int64_t i = free[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(free.size()) - 1))];
        terms.insert_or_assign(i, random_padic(rng, p, valuation_at(i), cfg.precision));
      }
    }
    out.push_back(make_series(m.field, p, std::move(terms)));
  }
  for (const Series& s : out)
    if (membership(m, s) != Membership::In) throw std::logic_error("sample_elements produced a non-member");
  return out;
}

}  // namespace tdlf::oracle
