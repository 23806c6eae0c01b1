#ifndef QMASON_QCORE_HPP
#define QMASON_QCORE_HPP

#include "qmason/field.hpp"
#include "qmason/poly.hpp"

namespace qmason {

// Carries the nonzero parameter q. Combinatorial quantities are defined for
// every q != 0 (including q = 1); the Jackson operator needs q != 1 and the
// chain machinery needs |q| != 1 on top of that.
class QContext {
public:
  explicit QContext(GaussianRational q);

  const GaussianRational& q() const { return q_; }

  bool jackson_admissible() const { return !q_.is_one(); }
  bool chain_admissible() const { return !q_.norm().is_one(); }

  void require_jackson() const;
  void require_chain() const;

  // q^e for any integer e (q is nonzero).
  GaussianRational q_pow(long e) const { return pow(q_, e); }

private:
  GaussianRational q_;
};

// [n]_q = 1 + q + ... + q^{n-1}; the sum form, so [n]_1 = n.
GaussianRational q_number(unsigned n, const QContext& ctx);

// [n]_q! = [n]_q [n-1]_q ... [1]_q, empty product for n = 0.
GaussianRational q_factorial(unsigned n, const QContext& ctx);

// Gaussian binomial [k j]_q, computed by the q-Pascal recurrence so the
// result is the polynomial value for every q (no factorial quotient).
GaussianRational q_binomial(unsigned k, unsigned j, const QContext& ctx);

// [z-a]_q^n = (z-a)(z-aq)...(z-aq^{n-1}) as a factored polynomial.
FactoredPoly q_pow_factor(const GaussianRational& a, unsigned n, const QContext& ctx);

// Jackson operator D_q p = (p(qz) - p(z))/(qz - z); on coefficients this maps
// coeff(k) to [k]_q coeff(k) at degree k-1 and reduces the degree by one.
DensePoly jackson(const DensePoly& p, const QContext& ctx);

// k-fold Jackson operator; k = 0 is the identity.
DensePoly jackson_iter(const DensePoly& p, unsigned k, const QContext& ctx);

// Shift from derivatives: the sum
//   p(q^k z0) = sum_{j=0..k} q^{j(j-1)/2} (q z0 - z0)^j [k j]_q (D_q^j p)(z0)
// evaluated literally; equals eval(p, q^k z0) for every polynomial.
GaussianRational shift_from_derivatives(const DensePoly& p, unsigned k,
                                        const GaussianRational& z0, const QContext& ctx);

// Derivative from shifts: the alternating dual sum, singular at z0 = 0,
//   (D_q^k p)(z0) = (q^{k(k-1)/2} (q z0 - z0)^k)^{-1} *
//                   sum_{j=0..k} (-1)^{k-j} q^{(k-j)(k-j-1)/2} [k j]_q p(q^j z0).
GaussianRational derivative_from_shifts(const DensePoly& p, unsigned k,
                                        const GaussianRational& z0, const QContext& ctx);

}  // namespace qmason

#endif  // QMASON_QCORE_HPP
