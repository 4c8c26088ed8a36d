#include "rasacx/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace rasacx {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw std::domain_error("division by zero rational");
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("not a rational: \"" + std::string(text) + "\"");
  };
  std::size_t i = 0;
  auto scan_digits = [&] {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) fail();
  };
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  scan_digits();
  std::size_t slash = std::string_view::npos;
  if (i < text.size()) {
    if (text[i] != '/') fail();
    slash = i++;
    scan_digits();
    if (i != text.size()) fail();
  }
  std::string num_text(text.substr(0, slash == std::string_view::npos ? text.size() : slash));
  if (num_text.front() == '+') num_text.erase(0, 1);
  // Base 10 always; the default base detection would read 010 as octal.
  Integer num(num_text, 10);
  if (slash == std::string_view::npos) return Rational(num);
  Integer den(std::string(text.substr(slash + 1)), 10);
  if (den == 0) fail();
  return Rational(num, den);
}

std::string Rational::str() const {
  std::string s = q_.get_num().get_str();
  if (!is_integer()) s += "/" + q_.get_den().get_str();
  return s;
}

Rational pow(const Rational& base, unsigned long exp) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exp);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exp);
  return Rational(num, den);
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational binomial_coefficient(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

std::vector<Rational> elementary_symmetric_all(const std::vector<Rational>& values) {
  std::vector<Rational> e(values.size() + 1, Rational(0));
  e[0] = Rational(1);
  std::size_t used = 0;
  for (const Rational& x : values) {
    ++used;
    for (std::size_t l = used; l >= 1; --l) e[l] += e[l - 1] * x;
  }
  return e;
}

Rational elementary_symmetric(const std::vector<Rational>& values, std::size_t k) {
  if (k > values.size()) {
    throw std::out_of_range("elementary_symmetric: k exceeds number of values");
  }
  return elementary_symmetric_all(values)[k];
}

}  // namespace rasacx
