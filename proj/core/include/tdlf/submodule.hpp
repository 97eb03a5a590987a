#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tdlf/padic.hpp"
#include "tdlf/seminorm.hpp"
#include "tdlf/seqspec.hpp"
#include "tdlf/series.hpp"

namespace tdlf {

/// The O-submodule Σ_i p^{k_i} t^i (p^{+inf} = 0, p^{-inf} = K).
struct SubmoduleSpec {
  SeqSpec seq;
  FieldKind field = FieldKind::MixedChar;
  friend bool operator==(const SubmoduleSpec&, const SubmoduleSpec&) = default;
};

bool is_open_lattice(const SubmoduleSpec& m);
bool is_bounded(const SubmoduleSpec& m);
bool is_compactoid(const SubmoduleSpec& m);

enum class Membership : std::uint8_t { In, Out, Unknown };
const char* to_string(Membership m) noexcept;

/// Whether v(x_i) >= k_i for every i, certified from the known data of x.
Membership membership(const SubmoduleSpec& m, const Series& x);

SubmoduleSpec sum(const SubmoduleSpec& a, const SubmoduleSpec& b);
SubmoduleSpec intersect(const SubmoduleSpec& a, const SubmoduleSpec& b);
/// a·m; throws PrecisionExhausted when a is zero only within precision.
SubmoduleSpec scale(const SubmoduleSpec& m, const PAdic& a);
/// p^e·m.
SubmoduleSpec scale_by_power(const SubmoduleSpec& m, std::int64_t e);
/// A submodule containing every product xy with x in a and y in b.
SubmoduleSpec product_bound(const SubmoduleSpec& a, const SubmoduleSpec& b);

struct Classification {
  bool open_lattice = false;
  bool bounded = false;
  bool compactoid = false;
  // Known facts about the named modules; not decided by the library.
  std::optional<bool> complete;
  std::optional<bool> c_compact;
  std::optional<bool> closed;
  friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify(const SubmoduleSpec& m);

/// "K[[t]]", "O+tK[[t]]", "O{{t}}", "p{{t}}", "rank2_mixed", "tK[[t]]".
const std::vector<std::string>& named_modules();
SubmoduleSpec named(const std::string& name);
/// classify(named(name)) together with the recorded complete / c-compact /
/// closed facts.
Classification known_classification(const std::string& name);

/// sup_{x in m} of the exponent of ‖x‖ under n: sup_i (n_i - k_i).
ExtInt seminorm_bound(const SeminormSpec& n, const SubmoduleSpec& m);

/// sup_{x in m} of the exponent of sup_i |x_i|: -inf_i k_i.
ExtInt sup_norm_bound(const SubmoduleSpec& m);

/// An admissible seminorm and elements of an unbounded m whose seminorm
/// exponents are all >= target.
struct UnboundednessWitness {
  SeminormSpec seminorm;
  std::vector<Series> elements;
};

/// Throws std::invalid_argument if m is bounded.
UnboundednessWitness unboundedness_witness(const SubmoduleSpec& m, std::uint64_t prime, std::int64_t target,
                                           std::int64_t precision = 32);

}  // namespace tdlf
