#include "qmason/poly.hpp"

#include <algorithm>
#include <set>

namespace qmason {

DensePoly::DensePoly(GaussianRational constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

DensePoly DensePoly::from_coeffs(std::vector<GaussianRational> coeffs) {
  DensePoly p;
  p.c_ = std::move(coeffs);
  p.normalize();
  return p;
}

DensePoly DensePoly::var() {
  return from_coeffs({GaussianRational(0), GaussianRational(1)});
}

void DensePoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const GaussianRational& DensePoly::leading() const {
  if (c_.empty()) throw domain_error("DensePoly: zero polynomial has no leading coefficient");
  return c_.back();
}

GaussianRational DensePoly::eval(const GaussianRational& x) const {
  GaussianRational acc(0);
  for (std::size_t k = c_.size(); k-- > 0;) {
    acc *= x;
    acc += c_[k];
  }
  return acc;
}

DensePoly DensePoly::operator-() const {
  DensePoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

DensePoly& DensePoly::operator+=(const DensePoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  normalize();
  return *this;
}

DensePoly& DensePoly::operator-=(const DensePoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  normalize();
  return *this;
}

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() || b.is_zero()) return DensePoly();
  std::vector<GaussianRational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return DensePoly::from_coeffs(std::move(out));
}

DensePoly operator*(const GaussianRational& s, const DensePoly& p) {
  if (s.is_zero()) return DensePoly();
  std::vector<GaussianRational> out(p.c_.begin(), p.c_.end());
  for (auto& c : out) c *= s;
  return DensePoly::from_coeffs(std::move(out));
}

DensePoly scale_arg(const DensePoly& p, const GaussianRational& c) {
  if (c.is_zero()) throw domain_error("scale_arg: scale factor must be nonzero");
  std::vector<GaussianRational> out(p.coeffs().begin(), p.coeffs().end());
  GaussianRational ck(1);
  for (std::size_t k = 1; k < out.size(); ++k) {
    ck *= c;
    out[k] *= ck;
  }
  return DensePoly::from_coeffs(std::move(out));
}

DensePoly pow(const DensePoly& p, unsigned e) {
  DensePoly acc = DensePoly::one();
  DensePoly b = p;
  while (e > 0) {
    if (e & 1u) acc = acc * b;
    b = b * b;
    e >>= 1u;
  }
  return acc;
}

DivRem divrem(const DensePoly& p, const DensePoly& d) {
  if (d.is_zero()) throw domain_error("divrem: division by the zero polynomial");
  if (p.degree() < d.degree()) return {DensePoly(), p};
  std::vector<GaussianRational> rem(p.coeffs().begin(), p.coeffs().end());
  std::vector<GaussianRational> quot(p.degree() - d.degree() + 1);
  const GaussianRational dl = d.leading();
  const int dd = d.degree();
  for (int k = p.degree(); k >= dd; --k) {
    if (rem[k].is_zero()) continue;
    const GaussianRational f = rem[k] / dl;
    quot[k - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= f * d.coeff(j);
  }
  return {DensePoly::from_coeffs(std::move(quot)), DensePoly::from_coeffs(std::move(rem))};
}

bool divides(const DensePoly& d, const DensePoly& p) {
  return divrem(p, d).rem.is_zero();
}

DensePoly monic(const DensePoly& p) {
  if (p.is_zero()) return p;
  return p.leading().inverse() * p;
}

DensePoly euclid_gcd(DensePoly p, DensePoly r) {
  if (p.is_zero() && r.is_zero()) throw domain_error("euclid_gcd: gcd(0, 0) undefined");
  while (!r.is_zero()) {
    DensePoly rem = divrem(p, r).rem;
    p = std::move(r);
    r = std::move(rem);
  }
  return monic(p);
}

DensePoly derivative(const DensePoly& p) {
  if (p.is_constant()) return DensePoly();
  std::vector<GaussianRational> out(static_cast<std::size_t>(p.degree()));
  for (int k = 1; k <= p.degree(); ++k)
    out[k - 1] = GaussianRational(Rational(k)) * p.coeff(k);
  return DensePoly::from_coeffs(std::move(out));
}

std::string DensePoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const GaussianRational& c = c_[k];
    if (c.is_zero()) continue;
    std::string coeff_txt;
    bool negative = false;
    if (c.is_real()) {
      negative = c.re().sign() < 0;
      const Rational mag = c.re().abs();
      if (!mag.is_one() || k == 0) coeff_txt = mag.str();
    } else {
      coeff_txt = "(" + c.str() + ")";
    }
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    out += coeff_txt;
    if (k > 0) {
      if (!coeff_txt.empty()) out += '*';
      out += 'z';
      if (k > 1) out += '^' + std::to_string(k);
    }
  }
  return out;
}

FactoredPoly::FactoredPoly(GaussianRational lead, std::vector<GaussianRational> roots)
    : lead_(std::move(lead)), roots_(std::move(roots)) {
  if (lead_.is_zero()) throw domain_error("FactoredPoly: leading constant must be nonzero");
  std::sort(roots_.begin(), roots_.end());
}

FactoredPoly operator*(const FactoredPoly& a, const FactoredPoly& b) {
  std::vector<GaussianRational> roots = a.roots_;
  roots.insert(roots.end(), b.roots_.begin(), b.roots_.end());
  return FactoredPoly(a.lead_ * b.lead_, std::move(roots));
}

DensePoly expand(const FactoredPoly& f) {
  DensePoly p(f.lead());
  for (const auto& r : f.roots())
    p = p * DensePoly::from_coeffs({-r, GaussianRational(1)});
  return p;
}

namespace {

// All positive divisors of |n| (n nonzero) by trial division.
std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> low, high;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      low.push_back(d);
      if (d * d != n) high.push_back(n / d);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

// Integer polynomial sharing all nonzero rational roots with p: the real or
// imaginary coefficient sequence, denominators cleared, powers of z stripped.
std::vector<mpz_class> rational_root_reference(const DensePoly& p) {
  mpz_class den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.re().den().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.im().den().get_mpz_t());
  }
  const Rational scale{den_lcm, mpz_class(1)};
  for (int part = 0; part < 2; ++part) {
    std::vector<mpz_class> coeffs;
    bool nonzero = false;
    for (const auto& c : p.coeffs()) {
      const Rational& component = part == 0 ? c.re() : c.im();
      const Rational scaled = component * scale;
      coeffs.push_back(scaled.num());
      if (scaled.sign() != 0) nonzero = true;
    }
    if (!nonzero) continue;
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    std::size_t low = 0;
    while (coeffs[low] == 0) ++low;  // strip z^low so the constant term is nonzero
    return {coeffs.begin() + static_cast<long>(low), coeffs.end()};
  }
  return {};  // unreachable for nonzero p
}

}  // namespace

RationalSplit extract_rational_roots(const DensePoly& p) {
  if (p.is_zero()) throw domain_error("extract_rational_roots: zero polynomial");
  const GaussianRational lead = p.leading();
  DensePoly work = p;
  std::vector<GaussianRational> roots;

  auto deflate_all = [&](const GaussianRational& r) {
    const DensePoly factor = DensePoly::from_coeffs({-r, GaussianRational(1)});
    while (work.degree() >= 1 && work.eval(r).is_zero()) {
      const DivRem d = divrem(work, factor);
      work = d.quot;
      roots.push_back(r);
    }
  };

  deflate_all(GaussianRational(0));

  if (work.degree() == 1) {
    // Linear factor: the root is explicit, but only rational roots are
    // extracted; z - (a+bi) with b != 0 stays in the residual.
    const GaussianRational r = -work.coeff(0) / work.coeff(1);
    if (r.is_real()) deflate_all(r);
  } else if (work.degree() > 1) {
    const std::vector<mpz_class> ref = rational_root_reference(work);
    std::set<Rational> candidates;
    for (const mpz_class& u : positive_divisors(ref.front()))
      for (const mpz_class& v : positive_divisors(ref.back())) {
        candidates.insert(Rational(u, v));
        candidates.insert(Rational(-u, v));
      }
    for (const Rational& r : candidates) {
      deflate_all(GaussianRational(r));
      if (work.is_constant()) break;
    }
  }

  RationalSplit out;
  out.complete = work.is_constant();
  out.factored = FactoredPoly(lead, std::move(roots));
  out.residual = out.complete ? DensePoly::one() : monic(work);
  return out;
}

}  // namespace qmason
