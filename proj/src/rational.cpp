#include "antipode/rational.hpp"

#include <cctype>
#include <ostream>

#include "antipode/errors.hpp"

namespace antipode {

namespace {

bool parse_integer(std::string_view s, Int& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return out.set_str(digits, 10) == 0;
}

// 10^e as an integer.
Int pow10(unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// Places a decimal point into `digits` (a string of significant digits) so
// that the value equals 0.d1d2... * 10^exp10.
std::string place_point(const std::string& digits, long exp10, bool negative) {
  std::string out = negative ? "-" : "";
  const long n = static_cast<long>(digits.size());
  if (exp10 <= 0) {
    out += "0.";
    out.append(static_cast<std::size_t>(-exp10), '0');
    out += digits;
  } else if (exp10 >= n) {
    out += digits;
    out.append(static_cast<std::size_t>(exp10 - n), '0');
  } else {
    out += digits.substr(0, static_cast<std::size_t>(exp10));
    out += '.';
    out += digits.substr(static_cast<std::size_t>(exp10));
  }
  return out;
}

}  // namespace

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw MathError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  Int num;
  Int den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) throw InputError("bad rational: '" + std::string(text) + "'");
  } else {
    const auto d = text.substr(slash + 1);
    if (!parse_integer(text.substr(0, slash), num) || d.empty() || d[0] == '-' || d[0] == '+' ||
        !parse_integer(d, den)) {
      throw InputError("bad rational: '" + std::string(text) + "'");
    }
    if (den == 0) throw InputError("bad rational (zero denominator): '" + std::string(text) + "'");
  }
  return Rat(num, den);
}

Int Rat::floor() const {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Int Rat::ceil() const {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Int Rat::round_half_up() const { return (*this + Rat(1, 2)).floor(); }

Int Rat::round_half_even() const {
  const Int f = floor();
  const Rat frac = *this - Rat(f);
  const int c = cmp(frac.v_, mpq_class(1, 2));
  if (c < 0) return f;
  if (c > 0) return f + 1;
  return (mpz_even_p(f.get_mpz_t()) != 0) ? f : Int(f + 1);
}

std::string Rat::str() const { return v_.get_str(10); }

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw MathError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

Rat pow(const Rat& base, long exponent) {
  if (exponent < 0) return Rat(1) / pow(base, -exponent);
  Int n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rat(n, d);
}

Rat exact_sqrt_or_negative(const Rat& x) {
  if (x.sign() < 0) return Rat(-1);
  const Int n = x.num();
  const Int d = x.den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0) {
    return Rat(-1);
  }
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rat(rn, rd);
}

std::string decimal_sqrt(const Rat& x, int digits) {
  if (x.sign() < 0) throw MathError("square root of a negative rational");
  if (x.is_zero()) return "0";
  if (digits < 1) throw InputError("need at least one significant digit");
  const Int p = x.num();
  const Int q = x.den();
  // Find the decimal exponent e with 10^(e-1) <= sqrt(x) < 10^e.
  long e = 0;
  auto ge_pow = [&](long k) {  // sqrt(x) >= 10^k  <=>  p >= q * 10^(2k)
    if (k >= 0) return p >= q * pow10(static_cast<unsigned long>(2 * k));
    return p * pow10(static_cast<unsigned long>(-2 * k)) >= q;
  };
  while (ge_pow(e)) ++e;
  while (!ge_pow(e - 1)) --e;
  // N = floor(sqrt(x) * 10^(digits - e)).
  const long shift = digits - e;
  Int num = p;
  Int den = q;
  if (shift >= 0) {
    num *= pow10(static_cast<unsigned long>(2 * shift));
  } else {
    den *= pow10(static_cast<unsigned long>(-2 * shift));
  }
  Int floor_sq = num / den;
  Int n;
  mpz_sqrt(n.get_mpz_t(), floor_sq.get_mpz_t());
  // Round up when sqrt(num/den) >= n + 1/2, i.e. 4*num >= (2n+1)^2 * den.
  const Int twice = 2 * n + 1;
  if (4 * num >= twice * twice * den) n += 1;
  std::string s = n.get_str(10);
  if (static_cast<long>(s.size()) > digits) {  // carried into a new decade
    s.pop_back();
    ++e;
  }
  return place_point(s, e, false);
}

std::string decimal(const Rat& x, int digits) {
  if (x.is_zero()) return "0";
  if (digits < 1) throw InputError("need at least one significant digit");
  const bool negative = x.sign() < 0;
  const Rat a = abs(x);
  long e = 0;
  auto ge_pow = [&](long k) {
    if (k >= 0) return a >= Rat(pow10(static_cast<unsigned long>(k)));
    return a * Rat(pow10(static_cast<unsigned long>(-k))) >= Rat(1);
  };
  while (ge_pow(e)) ++e;
  while (!ge_pow(e - 1)) --e;
  const long shift = digits - e;
  Rat scaled = shift >= 0 ? a * Rat(pow10(static_cast<unsigned long>(shift)))
                          : a / Rat(pow10(static_cast<unsigned long>(-shift)));
  Int n = scaled.round_half_even();
  std::string s = n.get_str(10);
  if (static_cast<long>(s.size()) > digits) {
    s.pop_back();
    ++e;
  }
  return place_point(s, e, negative);
}

Rat dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw InputError("dot: length mismatch");
  mpq_class acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].raw() * b[i].raw();
  return Rat(acc);
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw InputError("vector add: length mismatch");
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw InputError("vector subtract: length mismatch");
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVector operator*(const Rat& s, const RatVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

bool is_zero(const RatVector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace antipode
