#include "qmason/qcore.hpp"

#include <vector>

namespace qmason {

QContext::QContext(GaussianRational q) : q_(std::move(q)) {
  if (q_.is_zero()) throw domain_error("QContext: q must be nonzero");
}

void QContext::require_jackson() const {
  if (!jackson_admissible()) throw domain_error("Jackson operator requires q != 1");
}

void QContext::require_chain() const {
  if (!chain_admissible())
    throw domain_error("operation requires |q| != 1 (norm(q) != 1)");
}

GaussianRational q_number(unsigned n, const QContext& ctx) {
  GaussianRational sum(0), qk(1);
  for (unsigned k = 0; k < n; ++k) {
    sum += qk;
    qk *= ctx.q();
  }
  return sum;
}

GaussianRational q_factorial(unsigned n, const QContext& ctx) {
  GaussianRational prod(1);
  for (unsigned k = 1; k <= n; ++k) prod *= q_number(k, ctx);
  return prod;
}

GaussianRational q_binomial(unsigned k, unsigned j, const QContext& ctx) {
  if (j > k) throw domain_error("q_binomial: lower index exceeds upper index");
  // [r j] = [r-1 j-1] + q^j [r-1 j]; row by row.
  std::vector<GaussianRational> row{GaussianRational(1)};
  for (unsigned r = 1; r <= k; ++r) {
    std::vector<GaussianRational> next(r + 1, GaussianRational(1));
    GaussianRational qj(1);
    for (unsigned t = 1; t < r; ++t) {
      qj *= ctx.q();
      next[t] = row[t - 1] + qj * row[t];
    }
    row = std::move(next);
  }
  return row[j];
}

FactoredPoly q_pow_factor(const GaussianRational& a, unsigned n, const QContext& ctx) {
  std::vector<GaussianRational> roots;
  roots.reserve(n);
  GaussianRational r = a;
  for (unsigned k = 0; k < n; ++k) {
    roots.push_back(r);
    r *= ctx.q();
  }
  return FactoredPoly(GaussianRational(1), std::move(roots));
}

DensePoly jackson(const DensePoly& p, const QContext& ctx) {
  ctx.require_jackson();
  if (p.is_constant()) return DensePoly();
  std::vector<GaussianRational> out(static_cast<std::size_t>(p.degree()));
  for (int k = 1; k <= p.degree(); ++k)
    out[k - 1] = q_number(static_cast<unsigned>(k), ctx) * p.coeff(k);
  return DensePoly::from_coeffs(std::move(out));
}

DensePoly jackson_iter(const DensePoly& p, unsigned k, const QContext& ctx) {
  if (k > 0) ctx.require_jackson();
  DensePoly out = p;
  for (unsigned t = 0; t < k && !out.is_zero(); ++t) out = jackson(out, ctx);
  return out;
}

GaussianRational shift_from_derivatives(const DensePoly& p, unsigned k,
                                        const GaussianRational& z0, const QContext& ctx) {
  ctx.require_jackson();
  const GaussianRational step = ctx.q() * z0 - z0;  // (qz - z) at z0
  GaussianRational sum(0), step_pow(1);
  DensePoly dq = p;  // D_q^j p
  for (unsigned j = 0; j <= k; ++j) {
    const GaussianRational term = ctx.q_pow(static_cast<long>(j) * (static_cast<long>(j) - 1) / 2) *
                                  step_pow * q_binomial(k, j, ctx) * dq.eval(z0);
    sum += term;
    step_pow *= step;
    dq = jackson(dq, ctx);
  }
  return sum;
}

GaussianRational derivative_from_shifts(const DensePoly& p, unsigned k,
                                        const GaussianRational& z0, const QContext& ctx) {
  ctx.require_jackson();
  if (z0.is_zero()) throw domain_error("derivative_from_shifts: formula is singular at z0 = 0");
  GaussianRational sum(0);
  for (unsigned j = 0; j <= k; ++j) {
    const unsigned d = k - j;
    GaussianRational term = ctx.q_pow(static_cast<long>(d) * (static_cast<long>(d) - 1) / 2) *
                            q_binomial(k, j, ctx) * p.eval(ctx.q_pow(j) * z0);
    if (d % 2 == 1) term = -term;
    sum += term;
  }
  const GaussianRational step = ctx.q() * z0 - z0;
  const GaussianRational scale =
      ctx.q_pow(static_cast<long>(k) * (static_cast<long>(k) - 1) / 2) * pow(step, static_cast<long>(k));
  return sum / scale;
}

}  // namespace qmason
