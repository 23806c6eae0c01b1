#ifndef QMASON_POLY_HPP
#define QMASON_POLY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qmason/field.hpp"

namespace qmason {

// Univariate polynomial over Q(i) in dense coefficient form. coeff(k) is the
// coefficient of z^k. The zero polynomial is the empty sequence; otherwise the
// leading coefficient is nonzero.
class DensePoly {
public:
  DensePoly() = default;
  explicit DensePoly(GaussianRational constant);
  static DensePoly from_coeffs(std::vector<GaussianRational> coeffs);
  static DensePoly one() { return DensePoly(GaussianRational(1)); }
  static DensePoly var();  // z

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  GaussianRational coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : GaussianRational(0);
  }
  const GaussianRational& leading() const;
  std::span<const GaussianRational> coeffs() const { return c_; }

  GaussianRational eval(const GaussianRational& x) const;

  DensePoly operator-() const;
  DensePoly& operator+=(const DensePoly& o);
  DensePoly& operator-=(const DensePoly& o);

  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b);
  friend DensePoly operator*(const GaussianRational& s, const DensePoly& p);

  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }

  // Canonical print: descending powers, explicit '*', exact coefficients;
  // non-real coefficients parenthesized. Reparses to the same polynomial.
  std::string str() const;

private:
  void normalize();
  std::vector<GaussianRational> c_;
};

// p(c*z): coefficient of z^k gets multiplied by c^k. c must be nonzero.
DensePoly scale_arg(const DensePoly& p, const GaussianRational& c);

DensePoly pow(const DensePoly& p, unsigned e);

struct DivRem {
  DensePoly quot;
  DensePoly rem;
};

// Exact Euclidean division p = quot*d + rem with deg rem < deg d.
DivRem divrem(const DensePoly& p, const DensePoly& d);

// True when d divides p exactly.
bool divides(const DensePoly& d, const DensePoly& p);

DensePoly monic(const DensePoly& p);

// Monic gcd; gcd(p, 0) = monic(p). Both arguments zero is an error.
DensePoly euclid_gcd(DensePoly p, DensePoly r);

// Classical derivative (used by the classical radical only).
DensePoly derivative(const DensePoly& p);

// Polynomial as a nonzero leading constant and a finite root multiset,
// lead * prod (z - r). Roots are kept canonically sorted so that equal
// multisets compare equal.
class FactoredPoly {
public:
  FactoredPoly() : lead_(1) {}
  explicit FactoredPoly(GaussianRational lead, std::vector<GaussianRational> roots = {});

  const GaussianRational& lead() const { return lead_; }
  const std::vector<GaussianRational>& roots() const { return roots_; }
  std::size_t degree() const { return roots_.size(); }
  bool is_constant() const { return roots_.empty(); }

  FactoredPoly operator-() const { return FactoredPoly(-lead_, roots_); }
  friend FactoredPoly operator*(const FactoredPoly& a, const FactoredPoly& b);

  friend bool operator==(const FactoredPoly& a, const FactoredPoly& b) {
    return a.lead_ == b.lead_ && a.roots_ == b.roots_;
  }

private:
  GaussianRational lead_;
  std::vector<GaussianRational> roots_;  // sorted by canonical_cmp
};

DensePoly expand(const FactoredPoly& f);

// Result of rational root extraction. Always p = expand(factored) * residual;
// complete means residual == 1 (all roots of p are rational).
struct RationalSplit {
  bool complete = false;
  FactoredPoly factored;
  DensePoly residual;
};

// Finds every rational root of p by the rational root theorem (divisor
// candidates of the cleared-denominator constant and leading coefficients)
// with repeated deflation. Roots outside Q, including Gaussian ones, stay in
// the residual: they can only enter through factored input.
RationalSplit extract_rational_roots(const DensePoly& p);

}  // namespace qmason

#endif  // QMASON_POLY_HPP
