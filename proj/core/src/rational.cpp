#include "mombound/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "mombound/errors.hpp"

namespace mombound {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw InputError("invalid integer literal '" + std::string(s) + "'");
  Integer v(std::string(s), 10);
  return negative ? Integer(-v) : v;
}

Integer pow10(unsigned e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InputError("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '+') den_text.remove_prefix(1);
    if (!all_digits(den_text)) throw InputError("invalid denominator in '" + std::string(text) + "'");
    Integer den(std::string(den_text), 10);
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  std::string_view s = text;
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    Integer ev = parse_integer(s.substr(e + 1));
    if (!ev.fits_slong_p() || abs(ev) > 100000) throw InputError("exponent out of range in '" + std::string(text) + "'");
    exponent = ev.get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw InputError("invalid decimal literal '" + std::string(text) + "'");
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) throw InputError("invalid number '" + std::string(text) + "'");
    digits = std::string(s);
  }
  Integer mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  Rational q;
  if (exponent >= 0) {
    q = Rational(mantissa * pow10(static_cast<unsigned>(exponent)));
  } else {
    q = Rational(mantissa, pow10(static_cast<unsigned>(-exponent)));
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational exact_from_double(double x) {
  if (!std::isfinite(x)) throw InputError("cannot convert non-finite double to rational");
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

double to_double(const Rational& q) { return q.get_d(); }

Rational rationalize(double x, std::uint64_t max_denominator) {
  if (!std::isfinite(x)) throw InputError("cannot rationalize non-finite value");
  if (max_denominator == 0) max_denominator = 1;
  const Rational exact = exact_from_double(x);
  const Integer cap(std::to_string(max_denominator), 10);
  // Convergents h/k of the continued fraction of the exact binary value.
  Integer h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  Rational rest = exact;
  for (;;) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    Integer h = a * h1 + h2;
    Integer k = a * k1 + k2;
    if (k > cap) {
      // The best semiconvergent may still beat the last convergent.
      Integer a_max = (cap - k2) / k1;
      Rational last(h1, k1);
      last.canonicalize();
      if (a_max > 0) {
        Rational semi(a_max * h1 + h2, a_max * k1 + k2);
        semi.canonicalize();
        if (abs(semi - exact) < abs(last - exact)) return semi;
      }
      return last;
    }
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
    Rational frac = rest - Rational(a);
    if (frac == 0) break;
    rest = 1 / frac;
  }
  Rational r(h1, k1);
  r.canonicalize();
  return r;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer odd_double_factorial(unsigned k) {
  if (k == 0) return 1;
  Integer r;
  mpz_2fac_ui(r.get_mpz_t(), 2 * k - 1);
  return r;
}

Rational power(const Rational& base, unsigned e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

}  // namespace mombound
