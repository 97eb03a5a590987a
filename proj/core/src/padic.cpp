#include "tdlf/padic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tdlf/errors.hpp"

namespace tdlf {

namespace {

void check_prime(std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("p-adic prime must be >= 2");
}

void check_same_prime(const PAdic& x, const PAdic& y) {
  if (x.prime() != y.prime())
    throw IncompatiblePrimes("p-adic operands over p=" + std::to_string(x.prime()) + " and p=" +
                             std::to_string(y.prime()));
}

BigInt mod_positive(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

// Inverse of a modulo m (gcd(a, m) = 1).
BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  BigInt old_r = mod_positive(a, m), r = m;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::invalid_argument("mod_inverse: not invertible");
  return mod_positive(old_s, m);
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const ExponentResult& r) {
  return os << r.exponent << (r.exact() ? " (exact)" : " (upper bound)");
}

std::int64_t p_valuation(const BigInt& n, std::uint64_t p) {
  if (n == 0) throw std::invalid_argument("p_valuation(0)");
  BigInt m = n;
  std::int64_t v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

BigInt pow_p(std::uint64_t p, std::int64_t e) {
  if (e < 0) throw std::invalid_argument("pow_p: negative exponent");
  return boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e));
}

PAdic PAdic::zero(std::uint64_t p) {
  check_prime(p);
  return PAdic(p, State::ExactZero, ExtInt::plus_inf(), 0, 0);
}

PAdic PAdic::zero_mod(std::uint64_t p, std::int64_t a) {
  check_prime(p);
  return PAdic(p, State::ZeroMod, ExtInt(a), 0, 0);
}

PAdic PAdic::from_parts(std::uint64_t p, std::int64_t v, const BigInt& u, std::int64_t a) {
  check_prime(p);
  if (v >= a) return zero_mod(p, a);
  const BigInt m = pow_p(p, a - v);
  BigInt unit = mod_positive(u, m);
  if (unit == 0 || unit % p == 0) throw std::invalid_argument("PAdic::from_parts: unit divisible by p");
  return PAdic(p, State::Nonzero, ExtInt(a), v, std::move(unit));
}

PAdic PAdic::from_rational(std::uint64_t p, const BigInt& num, const BigInt& den, std::int64_t a) {
  check_prime(p);
  if (den == 0) throw std::invalid_argument("PAdic::from_rational: zero denominator");
  if (num == 0) return zero(p);
  BigInt n = num, d = den;
  std::int64_t v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  while (d % p == 0) {
    d /= p;
    --v;
  }
  if (v >= a) return zero_mod(p, a);
  const BigInt m = pow_p(p, a - v);
  return PAdic(p, State::Nonzero, ExtInt(a), v, mod_positive(n * mod_inverse(d, m), m));
}

PAdic PAdic::power(std::uint64_t p, std::int64_t v, std::int64_t relative_precision) {
  if (relative_precision < 1) throw std::invalid_argument("PAdic::power: relative precision must be >= 1");
  return from_parts(p, v, 1, checked_add(v, relative_precision));
}

ExtInt PAdic::valuation() const noexcept {
  switch (state_) {
    case State::ExactZero: return ExtInt::plus_inf();
    case State::ZeroMod: return precision_;
    case State::Nonzero: break;
  }
  return ExtInt(valuation_);
}

std::int64_t PAdic::relative_precision() const {
  if (state_ != State::Nonzero) throw std::logic_error("relative_precision() of a zero p-adic");
  return precision_.value() - valuation_;
}

std::vector<std::uint64_t> PAdic::unit_digits() const {
  std::vector<std::uint64_t> digits;
  if (state_ != State::Nonzero) return digits;
  BigInt u = unit_;
  const std::int64_t r = relative_precision();
  digits.reserve(static_cast<std::size_t>(r));
  for (std::int64_t i = 0; i < r; ++i) {
    digits.push_back(static_cast<std::uint64_t>(u % p_));
    u /= p_;
  }
  return digits;
}

ExponentResult PAdic::abs_exponent() const {
  switch (state_) {
    case State::ExactZero: return {ExtInt::minus_inf(), Exactness::Exact};
    case State::ZeroMod: return {-precision_, Exactness::UpperBound};
    case State::Nonzero: break;
  }
  return {ExtInt(-valuation_), Exactness::Exact};
}

BigInt PAdic::scaled_residue(std::int64_t base) const {
  if (precision_.is_infinite()) {
    if (state_ == State::ExactZero) return 0;
    throw std::logic_error("scaled_residue of infinite precision value");
  }
  if (base > precision_.value()) throw std::invalid_argument("scaled_residue: base above precision");
  if (state_ != State::Nonzero) return 0;
  if (base > valuation_) throw std::invalid_argument("scaled_residue: base above valuation");
  return unit_ * pow_p(p_, valuation_ - base);
}

bool PAdic::agrees_with(const PAdic& other) const {
  check_same_prime(*this, other);
  const PAdic d = *this - other;
  return !d.is_nonzero();
}

PAdic PAdic::truncated(std::int64_t a) const {
  if (state_ == State::ExactZero || precision_ <= ExtInt(a)) return *this;
  if (state_ == State::ZeroMod) return zero_mod(p_, a);
  return from_parts(p_, valuation_, unit_, a);
}

PAdic PAdic::operator-() const {
  if (state_ != State::Nonzero) return *this;
  const BigInt m = pow_p(p_, relative_precision());
  return PAdic(p_, State::Nonzero, precision_, valuation_, m - unit_);
}

PAdic operator+(const PAdic& x, const PAdic& y) {
  check_same_prime(x, y);
  if (x.is_exact_zero()) return y;
  if (y.is_exact_zero()) return x;
  const std::int64_t a = std::min(x.precision_, y.precision_).value();
  const std::int64_t base = std::min({x.valuation(), y.valuation(), ExtInt(a)}).value();
  if (base >= a) return PAdic::zero_mod(x.p_, a);
  const BigInt m = pow_p(x.p_, a - base);
  const BigInt s = mod_positive(x.scaled_residue(base) + y.scaled_residue(base), m);
  if (s == 0) return PAdic::zero_mod(x.p_, a);
  BigInt u = s;
  std::int64_t v = base;
  while (u % x.p_ == 0) {
    u /= x.p_;
    ++v;
  }
  return PAdic(x.p_, PAdic::State::Nonzero, ExtInt(a), v, mod_positive(u, pow_p(x.p_, a - v)));
}

PAdic operator-(const PAdic& x, const PAdic& y) { return x + (-y); }

PAdic operator*(const PAdic& x, const PAdic& y) {
  check_same_prime(x, y);
  if (x.is_exact_zero() || y.is_exact_zero()) return PAdic::zero(x.p_);
  // Zero within precision a times something of valuation >= w lies in p^(a+w).
  if (!x.is_nonzero() || !y.is_nonzero()) return PAdic::zero_mod(x.p_, (x.valuation() + y.valuation()).value());
  const std::int64_t v = checked_add(x.valuation_, y.valuation_);
  const std::int64_t r = std::min(x.relative_precision(), y.relative_precision());
  const BigInt m = pow_p(x.p_, r);
  return PAdic(x.p_, PAdic::State::Nonzero, ExtInt(checked_add(v, r)), v, mod_positive(x.unit_ * y.unit_, m));
}

bool operator==(const PAdic& x, const PAdic& y) {
  return x.p_ == y.p_ && x.state_ == y.state_ && x.precision_ == y.precision_ && x.valuation_ == y.valuation_ &&
         x.unit_ == y.unit_;
}

std::string PAdic::to_string() const {
  std::ostringstream os;
  switch (state_) {
    case State::ExactZero: return "0";
    case State::ZeroMod: os << "O(p^" << precision_ << ")"; return os.str();
    case State::Nonzero: break;
  }
  os << unit_;
  if (valuation_ != 0) os << "*p^" << valuation_;
  os << " + O(p^" << precision_ << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PAdic& x) { return os << x.to_string(); }

PAdic add(const PAdic& x, const PAdic& y) { return x + y; }
PAdic mul(const PAdic& x, const PAdic& y) { return x * y; }
ExponentResult abs_exponent(const PAdic& x) { return x.abs_exponent(); }

}  // namespace tdlf
