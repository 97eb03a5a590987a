#include "tdlf/parse.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

#include "tdlf/errors.hpp"
#include "tdlf/json_io.hpp"

namespace tdlf {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

struct Term {
  BigInt num = 1;
  BigInt den = 1;
  std::int64_t pexp = 0;
  std::int64_t texp = 0;
};

class SeriesParser {
 public:
  SeriesParser(const std::string& text, const ParseOptions& opts) : s_(text), opts_(opts) {}

  Series run() {
    skip_ws();
    if (at_end()) error("empty series literal");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        advance();
        skip_ws();
      } else if (!first) {
        error("expected '+' or '-'");
      }
      first = false;
      if (starts_with("O(")) {
        if (negative) error("O(t^N) cannot be subtracted");
        parse_big_o();
      } else if (starts_with("tail(")) {
        if (negative) error("tail(...) cannot be subtracted");
        parse_tail();
      } else {
        if (seen_tail_) error("terms must precede O(t^N) / tail(...)");
        add_term(parse_term(), negative);
      }
      skip_ws();
    }
    return build();
  }

 private:
  // ---- scanning
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  bool starts_with(const char* w) const { return s_.compare(pos_, std::char_traits<char>::length(w), w) == 0; }
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  [[noreturn]] void error(const std::string& what) const { throw ParseError(what, line_, col_); }
  void expect(char c) {
    if (peek() != c) error(std::string("expected '") + c + "'");
    advance();
  }
  void expect_word(const char* w) {
    if (!starts_with(w)) error(std::string("expected '") + w + "'");
    for (std::size_t k = 0; w[k]; ++k) advance();
  }

  BigInt parse_unsigned_big() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected a digit");
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      advance();
    }
    return BigInt(digits);
  }

  std::int64_t parse_signed() {
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      advance();
    }
    const std::size_t l = line_, c = col_;
    const BigInt v = parse_unsigned_big();
    if (v > BigInt(std::numeric_limits<std::int64_t>::max())) throw ParseError("integer out of range", l, c);
    const auto x = static_cast<std::int64_t>(v);
    return neg ? -x : x;
  }

  std::int64_t parse_exponent() {
    if (peek() != '^') return 1;
    advance();
    if (peek() == '(') {
      advance();
      const std::int64_t e = parse_signed();
      expect(')');
      return e;
    }
    return parse_signed();
  }

  // ---- terms
  bool factor_start() const {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'p' || c == 't';
  }

  void parse_factor(Term& t, bool divide) {
    const std::size_t l = line_, c = col_;
    if (peek() == 'p') {
      advance();
      const std::int64_t e = parse_exponent();
      t.pexp = divide ? checked_sub(t.pexp, e) : checked_add(t.pexp, e);
    } else if (peek() == 't') {
      advance();
      const std::int64_t e = parse_exponent();
      t.texp = divide ? checked_sub(t.texp, e) : checked_add(t.texp, e);
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      BigInt n = parse_unsigned_big();
      if (divide) {
        if (n == 0) throw ParseError("division by zero", l, c);
        if (n % opts_.prime == 0) throw ParseError("denominator divisible by p; write p^-k instead", l, c);
        t.den *= n;
      } else {
        t.num *= n;
      }
    } else {
      error("expected an integer, p or t");
    }
  }

  Term parse_term() {
    Term t;
    if (!factor_start()) error("expected an integer, p or t");
    parse_factor(t, false);
    for (;;) {
      skip_ws();
      if (peek() == '*' || peek() == '/') {
        const bool divide = peek() == '/';
        advance();
        skip_ws();
        parse_factor(t, divide);
      } else if (factor_start()) {
        parse_factor(t, false);
      } else {
        return t;
      }
    }
  }

  void add_term(const Term& t, bool negative) {
    BigInt num = negative ? BigInt(-t.num) : t.num;
    BigInt den = t.den;
    if (t.pexp >= 0)
      num *= pow_p(opts_.prime, t.pexp);
    else
      den *= pow_p(opts_.prime, -t.pexp);
    PAdic c = PAdic::from_rational(opts_.prime, num, den, opts_.precision);
    auto it = terms_.find(t.texp);
    if (it == terms_.end())
      terms_.emplace(t.texp, std::move(c));
    else
      it->second = it->second + c;
  }

  // ---- tails
  void parse_big_o() {
    if (seen_tail_) error("only one O(t^N) or tail(...) is allowed");
    seen_tail_ = true;
    expect_word("O(");
    skip_ws();
    expect('t');
    trunc_ = parse_exponent();
    skip_ws();
    expect(')');
  }

  void parse_tail() {
    if (seen_tail_) error("only one O(t^N) or tail(...) is allowed");
    seen_tail_ = true;
    mixed_tail_ = true;
    expect_word("tail(");
    skip_ws();
    expect_word("v");
    skip_ws();
    expect_word(">=");
    for (;;) {
      skip_ws();
      if (starts_with("left")) {
        expect_word("left");
        skip_ws();
        const std::int64_t b = parse_signed();
        skip_ws();
        expect_word("slope");
        skip_ws();
        const std::size_t l = line_, c = col_;
        const std::int64_t sl = parse_signed();
        if (sl < 1) throw ParseError("left tail slope must be >= 1", l, c);
        left_ = LeftBound{sl, b};
      } else if (starts_with("right")) {
        expect_word("right");
        skip_ws();
        right_ = parse_signed();
      } else if (starts_with("window")) {
        expect_word("window");
        skip_ws();
        const std::int64_t lo = parse_signed();
        skip_ws();
        const std::size_t l = line_, c = col_;
        const std::int64_t hi = parse_signed();
        if (lo > hi + 1) throw ParseError("window needs lo <= hi + 1", l, c);
        window_ = std::make_pair(lo, hi);
      } else {
        right_ = parse_signed();
      }
      skip_ws();
      if (peek() == ';') {
        advance();
        continue;
      }
      expect(')');
      return;
    }
  }

  Series build() {
    FieldKind f = opts_.field.value_or(FieldKind::MixedChar);
    if (trunc_) {
      if (opts_.field == FieldKind::MixedChar) error("O(t^N) only applies to equal-characteristic series");
      f = FieldKind::EqualChar;
    }
    if (mixed_tail_) {
      if (opts_.field == FieldKind::EqualChar) error("tail(...) only applies to mixed-characteristic series");
      f = FieldKind::MixedChar;
    }
    std::erase_if(terms_, [](const auto& kv) { return kv.second.is_exact_zero(); });
    if (f == FieldKind::EqualChar) {
      const ExtInt trunc = trunc_ ? ExtInt(*trunc_) : ExtInt::plus_inf();
      std::erase_if(terms_, [&](const auto& kv) { return ExtInt(kv.first) >= trunc; });
      std::int64_t order = terms_.empty() ? (trunc_ ? *trunc_ : 0) : terms_.begin()->first;
      return EqualCharSeries(opts_.prime, order, trunc, std::move(terms_));
    }
    std::int64_t lo = 0, hi = -1;
    if (!terms_.empty()) {
      lo = terms_.begin()->first;
      hi = terms_.rbegin()->first;
    }
    if (window_) {
      if (!terms_.empty() && (terms_.begin()->first < window_->first || terms_.rbegin()->first > window_->second))
        error("terms lie outside the declared window");
      std::tie(lo, hi) = *window_;
    }
    return MixedSeries(opts_.prime, lo, hi, std::move(terms_), left_, right_);
  }

  const std::string& s_;
  const ParseOptions& opts_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  std::map<std::int64_t, PAdic> terms_;
  bool seen_tail_ = false;
  bool mixed_tail_ = false;
  std::optional<std::int64_t> trunc_;
  std::optional<LeftBound> left_;
  std::optional<std::int64_t> right_;
  std::optional<std::pair<std::int64_t, std::int64_t>> window_;
};

std::string power(char base, std::int64_t e) {
  if (e == 1) return std::string(1, base);
  return std::string(1, base) + "^" + std::to_string(e);
}

// Symmetric residue of the unit times p^v times t^i, with trivial factors dropped.
std::pair<bool, std::string> render_term(const PAdic& c, std::int64_t i) {
  std::vector<std::string> factors;
  bool negative = false;
  if (c.is_zero_within_precision()) {
    factors.push_back(power('p', c.precision().value()));
  } else {
    const BigInt m = pow_p(c.prime(), c.relative_precision());
    BigInt u = c.unit();
    if (u * 2 > m) {
      u = m - u;
      negative = true;
    }
    const std::int64_t v = c.valuation().value();
    if (u != 1 || (v == 0 && i == 0)) factors.push_back(u.str());
    if (v != 0) factors.push_back(power('p', v));
  }
  if (i != 0) factors.push_back(power('t', i));
  std::string out;
  for (const auto& f : factors) out += (out.empty() ? "" : "*") + f;
  return {negative, out};
}

}  // namespace

Series parse_series(const std::string& text, const ParseOptions& opts) {
  if (opts.prime < 2) throw std::invalid_argument("prime must be >= 2");
  const std::string t = trim(text);
  if (!t.empty() && t.front() == '{') {
    Series s = series_from_json(parse_json(t));
    if (prime_of(s) != opts.prime)
      throw IncompatiblePrimes("series JSON is over p=" + std::to_string(prime_of(s)) + ", expected p=" +
                               std::to_string(opts.prime));
    return s;
  }
  return SeriesParser(text, opts).run();
}

std::string render(const Series& s) {
  std::ostringstream os;
  bool first = true;
  std::visit(
      [&](const auto& v) {
        for (const auto& [i, c] : v.coeffs()) {
          auto [negative, body] = render_term(c, i);
          if (first)
            os << (negative ? "-" : "");
          else
            os << (negative ? " - " : " + ");
          os << body;
          first = false;
        }
      },
      s);
  if (first) os << "0";
  if (const auto* e = std::get_if<EqualCharSeries>(&s)) {
    if (e->trunc().is_finite()) os << " + O(t^" << e->trunc() << ")";
  } else {
    const auto& m = std::get<MixedSeries>(s);
    if (m.left() || m.right()) {
      os << " + tail(v>=window " << m.lo() << " " << m.hi();
      if (m.left()) os << "; left " << m.left()->base << " slope " << m.left()->slope;
      if (m.right()) os << "; right " << *m.right();
      os << ")";
    }
  }
  return os.str();
}

SeqSpec parse_seqspec(const std::string& text) { return seqspec_from_json(parse_json(text)); }

SeminormSpec parse_seminorm(const std::string& text, FieldKind fallback) {
  return seminorm_from_json(parse_json(text), fallback);
}

SubmoduleSpec parse_submodule(const std::string& text, FieldKind fallback) {
  const std::string t = trim(text);
  if (!t.empty() && t.front() == '{') return submodule_from_json(parse_json(t), fallback);
  return named(t);
}

}  // namespace tdlf
