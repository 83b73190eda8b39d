#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace antipode {

using Int = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(n) {}
  Rat(long long n) : v_(static_cast<long>(n)) {}
  Rat(unsigned long n) : v_(n) {}
  Rat(const Int& n) : v_(n) {}
  Rat(const Int& num, const Int& den);
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses `p` or `p/q` (optional leading minus sign on p).
  static Rat parse(std::string_view text);

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Int floor() const;
  Int ceil() const;
  /// Nearest integer, ties to even.
  Int round_half_even() const;
  /// floor(x + 1/2); ties go up. Used where a half-open fundamental domain is needed.
  Int round_half_up() const;

  double to_double() const { return v_.get_d(); }
  std::string str() const;

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat abs(const Rat& r);
Rat pow(const Rat& base, long exponent);

/// Returns r when x = r^2 for some rational r >= 0, otherwise -1.
Rat exact_sqrt_or_negative(const Rat& x);

/// Decimal value of sqrt(x), correctly rounded to `digits` significant digits.
std::string decimal_sqrt(const Rat& x, int digits = 10);

/// Decimal value of x, correctly rounded to `digits` significant digits (ties to even).
std::string decimal(const Rat& x, int digits = 10);

using RatVector = std::vector<Rat>;

Rat dot(const RatVector& a, const RatVector& b);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator*(const Rat& s, const RatVector& v);
bool is_zero(const RatVector& v);

}  // namespace antipode
