#include "qmason/field.hpp"

#include <cctype>

namespace qmason {

Rational::Rational(long num, long den) {
  if (den == 0) throw domain_error("Rational: zero denominator");
  v_ = mpq_class(num);
  v_ /= mpq_class(den);
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw domain_error("Rational: zero denominator");
  v_ = mpq_class(num);
  v_ /= mpq_class(den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  std::string s = v_.get_num().get_str();
  if (v_.get_den() != 1) {
    s += '/';
    s += v_.get_den().get_str();
  }
  return s;
}

Rational pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base.is_zero()) {
    if (e < 0) throw domain_error("Rational: inverse of zero");
    return Rational(0);
  }
  mpz_class num = base.num();
  mpz_class den = base.den();
  const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), k);
  mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), k);
  if (e < 0) return Rational(pd, pn);
  return Rational(pn, pd);
}

namespace {

bool parse_uint_digits(std::string_view text, std::size_t& pos, mpz_class& out) {
  const std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) return false;
  out = mpz_class(std::string(text.substr(start, pos - start)), 10);
  return true;
}

// rational := '-'? digits ('/' digits)?
bool parse_rational_at(std::string_view text, std::size_t& pos, Rational& out) {
  bool neg = false;
  std::size_t p = pos;
  if (p < text.size() && (text[p] == '-' || text[p] == '+')) {
    neg = text[p] == '-';
    ++p;
  }
  mpz_class num;
  if (!parse_uint_digits(text, p, num)) return false;
  mpz_class den = 1;
  if (p < text.size() && text[p] == '/') {
    std::size_t p2 = p + 1;
    if (!parse_uint_digits(text, p2, den) || den == 0) return false;
    p = p2;
  }
  if (neg) num = -num;
  out = Rational(num, den);
  pos = p;
  return true;
}

}  // namespace

std::optional<Rational> Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  Rational r;
  if (!parse_rational_at(text, pos, r) || pos != text.size()) return std::nullopt;
  return r;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  const Rational re = re_ * o.re_ - im_ * o.im_;
  const Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = re;
  im_ = im;
  return *this;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw domain_error("GaussianRational: inverse of zero");
  const Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw domain_error("GaussianRational: division by zero");
  return *this *= o.inverse();
}

std::strong_ordering canonical_cmp(const GaussianRational& a, const GaussianRational& b) {
  return a <=> b;
}

GaussianRational pow(const GaussianRational& base, long e) {
  if (e == 0) return GaussianRational(1);
  if (base.is_zero()) {
    if (e < 0) throw domain_error("GaussianRational: inverse of zero");
    return GaussianRational(0);
  }
  GaussianRational b = e < 0 ? base.inverse() : base;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  GaussianRational acc(1);
  while (k > 0) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string imag;
  const Rational mag = im_.abs();
  if (!mag.is_one()) imag = mag.str();
  imag += 'i';
  if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + imag;
  return re_.str() + (im_.sign() < 0 ? "-" : "+") + imag;
}

std::optional<GaussianRational> GaussianRational::parse(std::string_view text) {
  // term := rational 'i'? | sign? 'i'
  // value := term (sign term)?   with at most one imaginary part, listed last
  std::size_t pos = 0;
  Rational first;
  bool first_imag = false;
  if (pos < text.size() &&
      (text[pos] == 'i' ||
       ((text[pos] == '-' || text[pos] == '+') && pos + 1 < text.size() && text[pos + 1] == 'i'))) {
    first = Rational(text[pos] == '-' ? -1 : 1);
    pos += text[pos] == 'i' ? 1 : 2;
    first_imag = true;
  } else {
    if (!parse_rational_at(text, pos, first)) return std::nullopt;
    if (pos < text.size() && text[pos] == 'i') {
      ++pos;
      first_imag = true;
    }
  }
  if (pos == text.size())
    return first_imag ? GaussianRational(Rational(0), first) : GaussianRational(first);

  if (first_imag) return std::nullopt;  // imaginary part must come last
  if (text[pos] != '+' && text[pos] != '-') return std::nullopt;
  Rational second;
  if (pos + 1 < text.size() && text[pos + 1] == 'i') {
    second = Rational(text[pos] == '-' ? -1 : 1);
    pos += 2;
  } else {
    if (!parse_rational_at(text, pos, second)) return std::nullopt;
    if (pos >= text.size() || text[pos] != 'i') return std::nullopt;
    ++pos;
  }
  if (pos != text.size()) return std::nullopt;
  return GaussianRational(first, second);
}

}  // namespace qmason
