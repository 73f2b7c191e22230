#include "takiff/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

namespace takiff {

namespace {

__int128 wide_gcd(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  if (s.empty()) throw std::invalid_argument("empty number in '" + std::string(whole) + "'");
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(n, d);
}

Rational Rational::from_wide(__int128 n, __int128 d) {
  if (d == 0) throw std::domain_error("division by zero");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (!fits(n) || !fits(d)) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(n);
  r.den_ = static_cast<std::int64_t>(d);
  return r;
}

std::int64_t Rational::to_integer() const {
  if (den_ != 1) throw std::domain_error("rational " + str() + " is not an integer");
  return num_;
}

Rational Rational::operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) return *this = from_wide(static_cast<__int128>(num_) + o.num_, 1);
  return *this = from_wide(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                           static_cast<__int128>(den_) * o.den_);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  return *this = from_wide(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("division by zero");
  return *this = from_wide(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 l = static_cast<__int128>(a.num_) * b.den_;
  __int128 r = static_cast<__int128>(b.num_) * a.den_;
  return l <=> r;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s, text));
  std::int64_t n = parse_int(s.substr(0, slash), text);
  std::int64_t d = parse_int(s.substr(slash + 1), text);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace takiff
