#include "tdlf/json_io.hpp"

#include <charconv>
#include <optional>

#include "tdlf/errors.hpp"

namespace tdlf {

namespace {

std::optional<std::int64_t> as_integer_key(const std::string& s) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (s.empty() || s == "-0") return std::nullopt;
  if (s.size() > 1 && s[0] == '0') return std::nullopt;
  if (s.size() > 2 && s[0] == '-' && s[1] == '0') return std::nullopt;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return v;
}

[[noreturn]] void fail(const std::string& what) { throw ParseError(what, 1, 1); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) fail(std::string("expected an object with field '") + name + "'");
  auto it = j.find(name);
  if (it == j.end()) fail(std::string("missing field '") + name + "'");
  return *it;
}

std::int64_t integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string("field '") + what + "' must be an integer");
  return j.get<std::int64_t>();
}

std::uint64_t prime_field(const Json& j) {
  const std::int64_t p = integer(field(j, "prime"), "prime");
  if (p < 2) fail("prime must be >= 2");
  return static_cast<std::uint64_t>(p);
}

std::int64_t key_index(const std::string& key) {
  auto v = as_integer_key(key);
  if (!v) fail("window key '" + key + "' is not an integer");
  return *v;
}

}  // namespace

bool NumericKeyLess::operator()(const std::string& a, const std::string& b) const {
  const auto x = as_integer_key(a), y = as_integer_key(b);
  if (x && y) return *x < *y;
  if (x != y && (x || y)) return x.has_value();
  return a < b;
}

Json to_json(const ExtInt& v) {
  if (v.is_finite()) return Json(v.value());
  return Json(v.to_string());
}

Json to_json(const TailSpec& t) {
  Json j = Json::object();
  if (t.is_constant()) {
    j["kind"] = "const";
    j["value"] = to_json(t.constant_value());
  } else {
    j["kind"] = "affine";
    j["slope"] = t.slope();
    j["offset"] = t.offset();
  }
  return j;
}

Json to_json(const SeqSpec& s) {
  Json w = Json::object();
  for (std::size_t k = 0; k < s.window().size(); ++k)
    w[std::to_string(s.lo() + static_cast<std::int64_t>(k))] = to_json(s.window()[k]);
  Json j = Json::object();
  j["window"] = std::move(w);
  j["left"] = to_json(s.left());
  j["right"] = to_json(s.right());
  return j;
}

Json to_json(const SeminormSpec& s) {
  Json j = to_json(s.seq);
  j["field"] = to_string(s.field);
  return j;
}

Json to_json(const SubmoduleSpec& s) {
  Json j = to_json(s.seq);
  j["field"] = to_string(s.field);
  j["role"] = "submodule";
  return j;
}

Json to_json(const PAdic& x) {
  Json j = Json::object();
  if (x.is_exact_zero()) {
    j["valuation"] = "+inf";
  } else if (x.is_zero_within_precision()) {
    j["valuation_lower_bound"] = to_json(x.precision());
    j["precision"] = to_json(x.precision());
  } else {
    j["valuation"] = to_json(x.valuation());
    j["precision"] = to_json(x.precision());
    Json d = Json::array();
    for (auto digit : x.unit_digits()) d.push_back(digit);
    j["digits"] = std::move(d);
  }
  return j;
}

Json to_json(const Series& s) {
  Json j = Json::object();
  Json coeffs = Json::object();
  std::visit([&](const auto& v) {
    for (const auto& [i, c] : v.coeffs()) coeffs[std::to_string(i)] = to_json(c);
    j["prime"] = v.prime();
  }, s);
  j["coeffs"] = std::move(coeffs);
  if (const auto* e = std::get_if<EqualCharSeries>(&s)) {
    j["field"] = "equal";
    j["trunc"] = to_json(e->trunc());
  } else {
    const auto& m = std::get<MixedSeries>(s);
    j["field"] = "mixed";
    j["lo"] = m.lo();
    j["hi"] = m.hi();
    if (m.left()) {
      j["left"] = Json::object();
      j["left"]["slope"] = m.left()->slope;
      j["left"]["base"] = m.left()->base;
    } else {
      j["left"] = nullptr;
    }
    j["right"] = m.right() ? Json(*m.right()) : Json(nullptr);
  }
  return j;
}

Json to_json(const ExponentResult& r) {
  Json j = Json::object();
  j["exponent"] = to_json(r.exponent);
  j["exact"] = r.exact();
  return j;
}

Json to_json(const Classification& c) {
  Json j = Json::object();
  j["open_lattice"] = c.open_lattice;
  j["bounded"] = c.bounded;
  j["compactoid"] = c.compactoid;
  if (c.complete) j["complete"] = *c.complete;
  if (c.c_compact) j["c_compact"] = *c.c_compact;
  if (c.closed) j["closed"] = *c.closed;
  return j;
}

ExtInt ext_int_from_json(const Json& j) {
  if (j.is_number_integer()) return ExtInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "+inf" || s == "-inf") return *ExtInt::from_string(s);
  }
  fail("expected an integer, \"+inf\" or \"-inf\", got " + j.dump());
}

TailSpec tail_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (kind == "const") return TailSpec::constant(ext_int_from_json(field(j, "value")));
  if (kind == "affine")
    return TailSpec::affine(integer(field(j, "slope"), "slope"), integer(field(j, "offset"), "offset"));
  fail("tail kind must be \"const\" or \"affine\"");
}

SeqSpec seqspec_from_json(const Json& j) {
  const Json& w = field(j, "window");
  if (!w.is_object()) fail("'window' must be an object");
  const TailSpec left = tail_from_json(field(j, "left"));
  const TailSpec right = tail_from_json(field(j, "right"));
  if (w.empty()) return SeqSpec(0, {right.at(0)}, left, right);
  std::map<std::int64_t, ExtInt> m;
  for (auto it = w.begin(); it != w.end(); ++it) m.emplace(key_index(it.key()), ext_int_from_json(it.value()));
  try {
    return SeqSpec::from_map(m, left, right);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

FieldKind field_from_json(const Json& j, FieldKind fallback) {
  auto it = j.find("field");
  if (it == j.end()) return fallback;
  if (*it == "equal") return FieldKind::EqualChar;
  if (*it == "mixed") return FieldKind::MixedChar;
  fail("field must be \"equal\" or \"mixed\"");
}

SeminormSpec seminorm_from_json(const Json& j, FieldKind fallback) {
  return {seqspec_from_json(j), field_from_json(j, fallback)};
}

SubmoduleSpec submodule_from_json(const Json& j, FieldKind fallback) {
  return {seqspec_from_json(j), field_from_json(j, fallback)};
}

PAdic padic_from_json(const Json& j, std::uint64_t prime) {
  if (!j.is_object()) fail("p-adic coefficient must be an object");
  if (j.contains("valuation_lower_bound")) {
    const ExtInt a = ext_int_from_json(field(j, "valuation_lower_bound"));
    if (!a.is_finite()) fail("valuation_lower_bound must be finite");
    return PAdic::zero_mod(prime, a.value());
  }
  const ExtInt v = ext_int_from_json(field(j, "valuation"));
  if (v.is_plus_inf()) return PAdic::zero(prime);
  if (!v.is_finite()) fail("valuation must be an integer or \"+inf\"");
  const std::int64_t a = integer(field(j, "precision"), "precision");
  const Json& d = field(j, "digits");
  if (!d.is_array() || static_cast<std::int64_t>(d.size()) != a - v.value())
    fail("digits must list precision - valuation base-p digits");
  BigInt u = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) {
    if (!it->is_number_unsigned() || it->get<std::uint64_t>() >= prime) fail("digit out of range");
    u = u * prime + it->get<std::uint64_t>();
  }
  if (u % prime == 0) fail("lowest digit of a unit must be nonzero");
  return PAdic::from_parts(prime, v.value(), u, a);
}

Series series_from_json(const Json& j) {
  const std::uint64_t p = prime_field(j);
  const FieldKind f = field_from_json(j, FieldKind::MixedChar);
  std::map<std::int64_t, PAdic> coeffs;
  const Json& c = field(j, "coeffs");
  if (!c.is_object()) fail("'coeffs' must be an object");
  for (auto it = c.begin(); it != c.end(); ++it) coeffs.emplace(key_index(it.key()), padic_from_json(it.value(), p));
  try {
    if (f == FieldKind::EqualChar) {
      const ExtInt trunc = ext_int_from_json(field(j, "trunc"));
      std::int64_t order = coeffs.empty() ? (trunc.is_finite() ? trunc.value() : 0) : coeffs.begin()->first;
      return EqualCharSeries(p, order, trunc, std::move(coeffs));
    }
    std::optional<LeftBound> left;
    if (const Json& l = field(j, "left"); !l.is_null())
      left = LeftBound{integer(field(l, "slope"), "slope"), integer(field(l, "base"), "base")};
    std::optional<std::int64_t> right;
    if (const Json& r = field(j, "right"); !r.is_null()) right = integer(r, "right");
    return MixedSeries(p, integer(field(j, "lo"), "lo"), integer(field(j, "hi"), "hi"), std::move(coeffs), left,
                       right);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t upto = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("malformed JSON", line, col);
  }
}

}  // namespace tdlf
