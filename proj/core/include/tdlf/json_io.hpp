#pragma once

#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "tdlf/duality.hpp"
#include "tdlf/padic.hpp"
#include "tdlf/seminorm.hpp"
#include "tdlf/seqspec.hpp"
#include "tdlf/series.hpp"
#include "tdlf/submodule.hpp"

namespace tdlf {

/// Orders object keys that spell integers numerically ("-2" < "-1" < "10"),
/// and all other keys lexicographically after them.
struct NumericKeyLess {
  using is_transparent = void;
  bool operator()(const std::string& a, const std::string& b) const;
};

template <class K, class V, class... Rest>
using numeric_key_map = std::map<K, V, NumericKeyLess>;

/// JSON value with canonically ordered object keys; dump() is byte-stable.
using Json = nlohmann::basic_json<numeric_key_map>;

Json to_json(const ExtInt& v);
Json to_json(const TailSpec& t);
Json to_json(const SeqSpec& s);
Json to_json(const SeminormSpec& s);
Json to_json(const SubmoduleSpec& s);
Json to_json(const PAdic& x);
Json to_json(const Series& s);
Json to_json(const ExponentResult& r);
Json to_json(const Classification& c);

/// Decoders throw ParseError on malformed documents.
ExtInt ext_int_from_json(const Json& j);
TailSpec tail_from_json(const Json& j);
/// An empty window places the left tail on i < 0 and the right tail on i >= 0.
SeqSpec seqspec_from_json(const Json& j);
FieldKind field_from_json(const Json& j, FieldKind fallback);
SeminormSpec seminorm_from_json(const Json& j, FieldKind fallback = FieldKind::MixedChar);
SubmoduleSpec submodule_from_json(const Json& j, FieldKind fallback = FieldKind::MixedChar);
PAdic padic_from_json(const Json& j, std::uint64_t prime);
Series series_from_json(const Json& j);

/// Parses text as JSON, converting syntax errors to ParseError.
Json parse_json(const std::string& text);

}  // namespace tdlf
