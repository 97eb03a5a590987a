#include "tdlf/ext_int.hpp"

#include <charconv>
#include <stdexcept>

#include "tdlf/errors.hpp"

namespace tdlf {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("tdlf: integer overflow in addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("tdlf: integer overflow in subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("tdlf: integer overflow in multiplication");
  return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

std::int64_t ExtInt::value() const {
  if (kind_ != Kind::Finite) throw std::logic_error("ExtInt::value() on an infinite value");
  return value_;
}

ExtInt ExtInt::operator-() const noexcept {
  switch (kind_) {
    case Kind::PlusInf: return minus_inf();
    case Kind::MinusInf: return plus_inf();
    case Kind::Finite: break;
  }
  return ExtInt(-value_);
}

ExtInt operator+(const ExtInt& a, const ExtInt& b) {
  if (a.is_finite() && b.is_finite()) return ExtInt(checked_add(a.value_, b.value_));
  if ((a.is_plus_inf() && b.is_minus_inf()) || (a.is_minus_inf() && b.is_plus_inf()))
    throw IndeterminateForm("+inf + -inf has no value");
  return a.is_finite() ? b : a;
}

ExtInt operator-(const ExtInt& a, const ExtInt& b) { return a + (-b); }

ExtInt operator*(std::int64_t k, const ExtInt& a) {
  if (a.is_finite()) return ExtInt(checked_mul(k, a.value_));
  if (k == 0) throw IndeterminateForm("0 * inf has no value");
  return k > 0 ? a : -a;
}

ExtInt dominated_sum(const ExtInt& a, const ExtInt& b) {
  if (a.is_plus_inf() || b.is_plus_inf()) return ExtInt::plus_inf();
  return a + b;
}

ExtInt excess(const ExtInt& a, const ExtInt& b) {
  if (a.is_minus_inf() || b.is_plus_inf()) return ExtInt::minus_inf();
  return a - b;
}

std::string ExtInt::to_string() const {
  switch (kind_) {
    case Kind::PlusInf: return "+inf";
    case Kind::MinusInf: return "-inf";
    case Kind::Finite: break;
  }
  return std::to_string(value_);
}

std::optional<ExtInt> ExtInt::from_string(const std::string& s) {
  if (s == "+inf" || s == "inf") return plus_inf();
  if (s == "-inf") return minus_inf();
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
  return ExtInt(v);
}

std::ostream& operator<<(std::ostream& os, const ExtInt& v) { return os << v.to_string(); }

}  // namespace tdlf
