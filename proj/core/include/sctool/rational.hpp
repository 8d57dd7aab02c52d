#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace sctool {

// Exact rational arithmetic for misrepresentation costs.  Values are kept
// normalized (gcd 1, positive denominator), so equality is field-wise.
// Numerators stay tiny at the profile sizes this library handles; comparisons
// and products still go through 128-bit intermediates to be safe.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long num) : num_(num) {}  // NOLINT: implicit by design
  Rational(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational operator-() const { return Rational(-num_, den_); }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  bool negative() const { return num_ < 0; }
  bool zero() const { return num_ == 0; }

  // "p" when the denominator is 1, "p/q" otherwise.
  std::string str() const;

  // Accepts "p" or "p/q" (q > 0 after sign normalization); nullopt on junk.
  static std::optional<Rational> parse(std::string_view text);

 private:
  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace sctool
