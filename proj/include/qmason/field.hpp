#ifndef QMASON_FIELD_HPP
#define QMASON_FIELD_HPP

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qmason {

// Raised on violated preconditions: division by zero, inadmissible q,
// zero-polynomial inputs and the like.
class domain_error : public std::domain_error {
public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Exact rational number, always in canonical form: denominator positive,
// gcd(|num|, den) = 1.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts "a" or "a/b" with optional leading '-'; b must be positive.
  static std::optional<Rational> parse(std::string_view text);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  // Canonical text form: "3", "-1/2".
  std::string str() const;

private:
  mpq_class v_;
};

Rational pow(const Rational& base, long e);

// Exact element of Q(i). All arithmetic is exact; components stay canonical.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(long n) : re_(n) {}  // NOLINT: implicit on purpose
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  // Accepts the canonical forms "3", "-1/2", "2+1/3i", "-i", "2i", "1-i".
  static std::optional<GaussianRational> parse(std::string_view text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  // re^2 + im^2; equals |x|^2, so norm(q) != 1 decides |q| != 1 exactly.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational conj() const { return {re_, -im_}; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  // Total order: real part first, imaginary part breaks ties. Used for
  // deterministic head selection and multiset keys, not for analysis.
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
    if (auto c = a.re_ <=> b.re_; c != std::strong_ordering::equal) return c;
    return a.im_ <=> b.im_;
  }

  GaussianRational inverse() const;

  // Canonical text form, bit-exact round trip with parse().
  std::string str() const;

private:
  Rational re_;
  Rational im_;
};

inline Rational norm(const GaussianRational& x) { return x.norm(); }

std::strong_ordering canonical_cmp(const GaussianRational& a, const GaussianRational& b);

GaussianRational pow(const GaussianRational& base, long e);

}  // namespace qmason

#endif  // QMASON_FIELD_HPP
