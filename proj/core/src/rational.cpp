#include "sctool/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace sctool {

namespace {

void normalize(long long& num, long long& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
}

long long checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw std::overflow_error("rational arithmetic overflow");
  return static_cast<long long>(v);
}

}  // namespace

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
  normalize(num_, den_);
}

Rational& Rational::operator+=(const Rational& o) {
  const long long g = std::gcd(den_, o.den_);
  const long long lhs_scale = o.den_ / g;
  const long long rhs_scale = den_ / g;
  num_ = checked(static_cast<__int128>(num_) * lhs_scale +
                 static_cast<__int128>(o.num_) * rhs_scale);
  den_ = checked(static_cast<__int128>(den_) * lhs_scale);
  normalize(num_, den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  num_ = checked(static_cast<__int128>(num_) * o.num_);
  den_ = checked(static_cast<__int128>(den_) * o.den_);
  normalize(num_, den_);
  return *this;
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num_) * b.den_ <
         static_cast<__int128>(b.num_) * a.den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::parse(std::string_view text) {
  const auto parse_ll = [](std::string_view s,
                           long long& out) -> bool {
    if (s.empty()) return false;
    const auto [ptr, ec] =
        std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
  };
  long long num = 0, den = 1;
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!parse_ll(text, num)) return std::nullopt;
  } else {
    if (!parse_ll(text.substr(0, slash), num)) return std::nullopt;
    if (!parse_ll(text.substr(slash + 1), den)) return std::nullopt;
    if (den == 0) return std::nullopt;
  }
  return Rational(num, den);
}

}  // namespace sctool
