#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace rasacx {

using Integer = mpz_class;

// Arbitrary-precision rational kept canonical at all times: denominator > 0,
// gcd(|numerator|, denominator) = 1. All arithmetic and ordering are exact.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}
  Rational(long n) : q_(mpz_class(n)) {}
  Rational(const Integer& n) : q_(n) {}
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
  Rational(const Integer& num, const Integer& den);

  // Accepts "a" or "a/b" in base 10, optional leading sign on a, b > 0.
  // Input need not be reduced; the result is. Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  // Canonical text form: "a/b", or just "a" when the value is an integer.
  std::string str() const;

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return mpq_sgn(q_.get_mpq_t()); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) <=> 0;
  }

 private:
  mpq_class q_;
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
Rational pow(const Rational& base, unsigned long exp);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

// C(n, k) as an exact integer-valued rational; 0 when k < 0 or k > n.
Rational binomial_coefficient(long n, long k);

// e_k(values): sum of products over all k-element subsets. e_0 = 1.
// Throws std::out_of_range unless 0 <= k <= values.size().
Rational elementary_symmetric(const std::vector<Rational>& values, std::size_t k);

// e_0..e_m in one pass over the values.
std::vector<Rational> elementary_symmetric_all(const std::vector<Rational>& values);

}  // namespace rasacx
