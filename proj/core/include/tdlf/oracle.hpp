#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tdlf/seminorm.hpp"
#include "tdlf/seqspec.hpp"
#include "tdlf/series.hpp"
#include "tdlf/submodule.hpp"

namespace tdlf::oracle {

/// Deterministic source of bounded integers: std::mt19937_64 (whose output
/// sequence is fixed by the standard) with rejection sampling on top, so the
/// draws are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  /// Uniform on [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den);
  std::uint64_t next() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

struct SampleConfig {
  std::uint64_t seed = 0;
  std::size_t count = 16;
  std::int64_t window_lo = -20;
  std::int64_t window_hi = 20;
  /// Relative p-adic precision of sampled coefficients.
  std::int64_t precision = 32;
  std::uint64_t prime = 5;
};

/// max_{lo <= i <= hi} (n_i - v(x_i)) by enumeration.
ExtInt brute_seminorm(const SeminormSpec& spec, const Series& x, std::int64_t lo, std::int64_t hi);

/// min_i a(i) + b(k - i) by enumeration over [lo, hi]. Outside the window
/// the summand is affine in i; its trend decides the exterior. Throws
/// WindowInsufficient when the window does not reach the tails.
ExtInt brute_minplus(const SeqSpec& a, const SeqSpec& b, std::int64_t k, std::int64_t lo, std::int64_t hi);

/// Elements of m: the boundary monomials p^{k_i} t^i for i in the window,
/// then cfg.count random finitely supported elements.
std::vector<Series> sample_elements(const SubmoduleSpec& m, const SampleConfig& cfg);

/// Random generators for property tests.
SeqSpec random_seqspec(Rng& rng);
/// Lattice sequence; also an admissible seminorm sequence.
SubmoduleSpec random_lattice(Rng& rng, FieldKind f);
SeminormSpec random_seminorm(Rng& rng, FieldKind f);
SubmoduleSpec random_bounded(Rng& rng, FieldKind f);
SubmoduleSpec random_compactoid(Rng& rng, FieldKind f);
SubmoduleSpec random_unbounded(Rng& rng, FieldKind f);
SubmoduleSpec random_submodule(Rng& rng, FieldKind f);
/// Finitely supported element with `terms` nonzero coefficients in [lo, hi]
/// (exact polynomial in the equal characteristic case).
Series random_element(Rng& rng, FieldKind f, std::uint64_t p, std::int64_t lo, std::int64_t hi, std::size_t terms,
                      std::int64_t precision = 32);
/// Mixed element with random tail bounds.
MixedSeries random_tailed_element(Rng& rng, std::uint64_t p, std::int64_t precision = 32);
PAdic random_padic(Rng& rng, std::uint64_t p, std::int64_t v, std::int64_t relative_precision);

}  // namespace tdlf::oracle
