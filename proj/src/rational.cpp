#include "pclyap/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <limits>
#include <ostream>

namespace pclyap {

using boost::multiprecision::cpp_int;

Rational::Rational(long long num, long long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = rep(num);
  v_ /= den;
}

bool Rational::is_integer() const { return denominator(v_) == 1; }

bool Rational::fits_int64() const {
  if (!is_integer()) return false;
  const cpp_int n = numerator(v_);
  return n >= std::numeric_limits<std::int64_t>::min() &&
         n <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t Rational::to_int64() const {
  if (!fits_int64()) throw DomainError("rational does not fit in int64");
  return numerator(v_).convert_to<std::int64_t>();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << to_string(r);
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

cpp_int pow10(unsigned long long e) {
  cpp_int r = 1;
  const cpp_int ten = 10;
  for (unsigned long long i = 0; i < e; ++i) r *= ten;
  return r;
}

// cpp_int's string constructor treats a leading '0' as an octal prefix;
// drop leading zeros so scanned digit strings are always read as decimal.
cpp_int decimal_digits_to_int(const std::string& digits) {
  const std::size_t first = digits.find_first_not_of('0');
  if (first == std::string::npos) return 0;
  return cpp_int(digits.substr(first));
}

Rational parse_fraction(const std::string& text, std::size_t slash) {
  std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  bool negative = false;
  if (!num.empty() && (num[0] == '+' || num[0] == '-')) {
    negative = num[0] == '-';
    num = num.substr(1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed fraction: '" + text + "'");
  cpp_int n = decimal_digits_to_int(num);
  const cpp_int d = decimal_digits_to_int(den);
  if (d == 0) throw ParseError("zero denominator: '" + text + "'");
  if (negative) n = -n;
  return Rational(Rational::rep(n, d));
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty number");
  if (const auto slash = text.find('/'); slash != std::string::npos)
    return parse_fraction(text, slash);

  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;  // mantissa with the dot removed
  long long frac_digits = 0;
  bool seen_dot = false;
  for (; i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) ||
                             text[i] == '.');
       ++i) {
    if (text[i] == '.') {
      if (seen_dot) throw ParseError("malformed number: '" + text + "'");
      seen_dot = true;
    } else {
      digits += text[i];
      if (seen_dot) ++frac_digits;
    }
  }
  if (digits.empty()) throw ParseError("malformed number: '" + text + "'");

  long long exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    std::string exp_digits = text.substr(i);
    i = text.size();
    if (!all_digits(exp_digits) || exp_digits.size() > 4)
      throw ParseError("malformed exponent: '" + text + "'");
    exponent = std::stoll(exp_digits);
    if (exp_negative) exponent = -exponent;
  }
  if (i != text.size()) throw ParseError("malformed number: '" + text + "'");

  cpp_int num = decimal_digits_to_int(digits);
  cpp_int den = 1;
  const long long scale = exponent - frac_digits;
  if (scale >= 0)
    num *= pow10(static_cast<unsigned long long>(scale));
  else
    den = pow10(static_cast<unsigned long long>(-scale));
  if (negative) num = -num;
  return Rational(Rational::rep(num, den));
}

std::string to_string(const Rational& r) {
  const cpp_int num = numerator(r.value());
  const cpp_int den = denominator(r.value());
  if (den == 1) return num.str();

  // Check for a finite decimal expansion: den == 2^a * 5^b with few digits.
  cpp_int rest = den;
  unsigned twos = 0, fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  const unsigned digits = twos > fives ? twos : fives;
  if (rest != 1 || digits > 40) return num.str() + "/" + den.str();

  cpp_int mag = num < 0 ? cpp_int(-num) : num;
  const cpp_int p = pow10(digits);
  mag = mag * p / den;  // exact: den divides 10^digits
  std::string frac = cpp_int(mag % p).str();
  frac.insert(frac.begin(), digits - frac.size(), '0');
  std::string out = num < 0 ? "-" : "";
  out += cpp_int(mag / p).str();
  out += '.';
  out += frac;
  return out;
}

}  // namespace pclyap
