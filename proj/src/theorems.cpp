#include "qmason/theorems.hpp"

#include <algorithm>

namespace qmason {

bool all_premises_hold(std::span<const Premise> premises) {
  return std::all_of(premises.begin(), premises.end(),
                     [](const Premise& p) { return p.holds; });
}

PolyArg PolyArg::with_root_extraction(DensePoly d) {
  PolyArg arg(std::move(d));
  if (!arg.dense.is_zero()) {
    RationalSplit split = extract_rational_roots(arg.dense);
    if (split.complete) arg.factored = std::move(split.factored);
  }
  return arg;
}

DensePoly q_fermat_power(const DensePoly& p, unsigned n, const QContext& ctx) {
  DensePoly out = DensePoly::one();
  for (unsigned i = 0; i < n; ++i) out = out * scale_arg(p, ctx.q_pow(i));
  return out;
}

FactoredPoly q_fermat_power(const FactoredPoly& p, unsigned n, const QContext& ctx) {
  std::vector<GaussianRational> roots;
  roots.reserve(p.degree() * n);
  for (unsigned i = 0; i < n; ++i) {
    const GaussianRational scale = ctx.q_pow(-static_cast<long>(i));
    for (const auto& r : p.roots()) roots.push_back(r * scale);
  }
  const long lead_exp = static_cast<long>(p.degree()) * static_cast<long>(n) *
                        (static_cast<long>(n) - 1) / 2;
  GaussianRational lead = pow(p.lead(), static_cast<long>(n)) * ctx.q_pow(lead_exp);
  return FactoredPoly(std::move(lead), std::move(roots));
}

namespace {

bool all_factored(std::span<const PolyArg> fs) {
  return std::all_of(fs.begin(), fs.end(),
                     [](const PolyArg& f) { return f.factored.has_value(); });
}

// Pairwise q-primeness over mixed representations: the witness-producing
// multiset route when both sides carry roots, the root-free gcd route
// otherwise. The two decide identically.
Premise pairwise_q_prime_premise(std::string name, std::span<const PolyArg> fs,
                                 const QContext& ctx) {
  Premise prem{std::move(name), true, ""};
  for (std::size_t i = 0; i < fs.size() && prem.holds; ++i)
    for (std::size_t j = i + 1; j < fs.size() && prem.holds; ++j) {
      if (fs[i].dense.is_zero() || fs[j].dense.is_zero()) {
        prem.holds = false;
        prem.witness = "zero polynomial in pair (" + std::to_string(i + 1) + "," +
                       std::to_string(j + 1) + ")";
        break;
      }
      if (fs[i].factored && fs[j].factored) {
        const auto divisors = common_q_divisors(*fs[i].factored, *fs[j].factored, ctx);
        if (!divisors.empty()) {
          prem.holds = false;
          prem.witness = "pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ") shares the common q-divisor z - (" + divisors.front().str() + ")";
        }
      } else if (auto factor = common_q_divisor_factor(fs[i].dense, fs[j].dense, ctx)) {
        prem.holds = false;
        prem.witness = "pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                       ") has common q-divisor heads among roots of " + factor->str();
      }
    }
  return prem;
}

FactoredPoly factored_product(std::span<const PolyArg> fs) {
  FactoredPoly prod(GaussianRational(1));
  for (const auto& f : fs) prod = prod * *f.factored;
  return prod;
}

DensePoly dense_product(std::span<const PolyArg> fs) {
  DensePoly prod = DensePoly::one();
  for (const auto& f : fs) prod = prod * f.dense;
  return prod;
}

}  // namespace

MasonReport verify_mason_q(const PolyArg& a, const PolyArg& b, const PolyArg& c,
                           const QContext& ctx) {
  ctx.require_chain();
  const PolyArg fs[] = {a, b, c};
  MasonReport rep;

  const bool any_zero = a.dense.is_zero() || b.dense.is_zero() || c.dense.is_zero();
  rep.premises.push_back({"all-nonzero", !any_zero, any_zero ? "zero polynomial present" : ""});

  const bool sum_ok = a.dense + b.dense == c.dense;
  rep.premises.push_back(
      {"sum-identity", sum_ok, sum_ok ? "" : "a + b - c = " + (a.dense + b.dense - c.dense).str()});

  const int max_deg = std::max({a.dense.degree(), b.dense.degree(), c.dense.degree()});
  rep.premises.push_back({"not-all-constant", max_deg >= 1, ""});

  rep.premises.push_back(pairwise_q_prime_premise("relatively-q-prime", fs, ctx));

  rep.max_deg = max_deg;
  if (!any_zero) {
    if (all_factored(fs))
      rep.rad_deg = static_cast<int>(chain_decompose(factored_product(fs), ctx).rad_degree());
    else
      rep.rad_deg = static_cast<int>(rad_q_degree(dense_product(fs), ctx));
  }
  rep.applicable = all_premises_hold(rep.premises);
  rep.inequality_holds = rep.rad_deg >= 0 && rep.max_deg <= rep.rad_deg - 1;
  rep.sharp = rep.rad_deg >= 0 && rep.max_deg == rep.rad_deg - 1;
  return rep;
}

MasonReport verify_mason_classical(const DensePoly& a, const DensePoly& b, const DensePoly& c) {
  MasonReport rep;
  const DensePoly* fs[] = {&a, &b, &c};

  const bool any_zero = a.is_zero() || b.is_zero() || c.is_zero();
  rep.premises.push_back({"all-nonzero", !any_zero, any_zero ? "zero polynomial present" : ""});

  const bool sum_ok = a + b == c;
  rep.premises.push_back({"sum-identity", sum_ok, ""});

  const int max_deg = std::max({a.degree(), b.degree(), c.degree()});
  rep.premises.push_back({"not-all-constant", max_deg >= 1, ""});

  Premise coprime{"pairwise-coprime", !any_zero, ""};
  if (!any_zero)
    for (std::size_t i = 0; i < 3 && coprime.holds; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        const DensePoly g = euclid_gcd(*fs[i], *fs[j]);
        if (g.degree() >= 1) {
          coprime.holds = false;
          coprime.witness = "gcd of pair (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ") is " + g.str();
          break;
        }
      }
  rep.premises.push_back(std::move(coprime));

  rep.max_deg = max_deg;
  if (!any_zero) {
    const DensePoly prod = a * b * c;
    rep.rad_deg = prod.is_constant() ? 0 : classical_rad(prod).degree();
  }
  rep.applicable = all_premises_hold(rep.premises);
  rep.inequality_holds = rep.rad_deg >= 0 && rep.max_deg <= rep.rad_deg - 1;
  rep.sharp = rep.rad_deg >= 0 && rep.max_deg == rep.rad_deg - 1;
  return rep;
}

ExtendedReport verify_mason_extended(std::span<const PolyArg> fs, const QContext& ctx) {
  ctx.require_chain();
  if (fs.size() < 3)
    throw domain_error("verify_mason_extended: need at least three polynomials (m >= 2)");
  const std::size_t m = fs.size() - 1;
  ExtendedReport rep;

  const bool any_zero =
      std::any_of(fs.begin(), fs.end(), [](const PolyArg& f) { return f.dense.is_zero(); });
  rep.premises.push_back({"all-nonzero", !any_zero, any_zero ? "zero polynomial present" : ""});

  DensePoly lhs_sum;
  for (std::size_t i = 0; i < m; ++i) lhs_sum += fs[i].dense;
  const bool sum_ok = lhs_sum == fs.back().dense;
  rep.premises.push_back(
      {"sum-identity", sum_ok,
       sum_ok ? "" : "sum of left side minus right side = " + (lhs_sum - fs.back().dense).str()});

  int min_deg = fs[0].dense.degree(), max_deg = fs[0].dense.degree();
  for (const auto& f : fs) {
    min_deg = std::min(min_deg, f.dense.degree());
    max_deg = std::max(max_deg, f.dense.degree());
  }
  const bool deg_ok = min_deg >= static_cast<int>(m) - 1;
  rep.premises.push_back({"min-degree", deg_ok,
                          "min deg = " + std::to_string(min_deg) + ", required >= " +
                              std::to_string(m - 1)});

  rep.premises.push_back(pairwise_q_prime_premise("pairwise-q-prime", fs, ctx));

  // Independence of the m summands over the constants; the Casoratian signal
  // is recorded alongside and any disagreement surfaces in the report.
  std::vector<DensePoly> summands;
  for (std::size_t i = 0; i < m; ++i) summands.push_back(fs[i].dense);
  rep.independence = independence_report(summands, ctx);
  rep.premises.push_back({"independence", rep.independence.coefficient_rank_full,
                          rep.independence.agree
                              ? ""
                              : "Casoratian and coefficient-rank signals disagree"});

  rep.lhs = max_deg;
  const long correction = static_cast<long>(m) * (static_cast<long>(m) - 1) / 2;
  if (!any_zero) {
    long trunc_deg, rad_deg;
    if (all_factored(fs)) {
      const ChainDecomposition d = chain_decompose(factored_product(fs), ctx);
      trunc_deg = static_cast<long>(d.trunc_degree(static_cast<unsigned>(m) - 1));
      rad_deg = static_cast<long>(d.rad_degree());
    } else {
      const DensePoly prod = dense_product(fs);
      trunc_deg = rad_q_trunc_degree(prod, static_cast<unsigned>(m) - 1, ctx);
      rad_deg = rad_q_degree(prod, ctx);
    }
    rep.rhs_trunc = trunc_deg - correction;
    rep.rhs_rad = (static_cast<long>(m) - 1) * rad_deg - correction;
  }
  rep.applicable = all_premises_hold(rep.premises);
  rep.both_hold = !any_zero && rep.lhs <= rep.rhs_trunc && rep.lhs <= rep.rhs_rad;
  rep.sharp = !any_zero && rep.lhs == rep.rhs_trunc;
  return rep;
}

FermatInstanceReport verify_fermat_instance(const FactoredPoly& a, const FactoredPoly& b,
                                            const FactoredPoly& c, unsigned n,
                                            const QContext& ctx) {
  ctx.require_chain();
  if (n == 0) throw domain_error("verify_fermat_instance: exponent must be positive");
  FermatInstanceReport rep;
  rep.n = n;

  const FactoredPoly* bases[] = {&a, &b, &c};
  const bool all_const =
      a.is_constant() && b.is_constant() && c.is_constant();
  rep.premises.push_back({"not-all-constant", !all_const, ""});

  const unsigned const_count = static_cast<unsigned>(
      std::count_if(std::begin(bases), std::end(bases),
                    [](const FactoredPoly* f) { return f->is_constant(); }));
  rep.n_bound = const_count > 0 ? 1 : 2;

  const FactoredPoly powered[] = {q_fermat_power(a, n, ctx), q_fermat_power(b, n, ctx),
                                  q_fermat_power(c, n, ctx)};
  const QPrimeResult qp = relatively_q_prime(powered, ctx);
  Premise prime{"powered-relatively-q-prime", qp.q_prime, ""};
  if (qp.witness)
    prime.witness = "powers of arguments " + std::to_string(qp.witness->first + 1) + " and " +
                    std::to_string(qp.witness->second + 1) + " share the common q-divisor z - (" +
                    qp.witness->divisor.str() + ")";
  rep.premises.push_back(std::move(prime));

  const DensePoly lhs =
      q_fermat_power(expand(a), n, ctx) + q_fermat_power(expand(b), n, ctx);
  const DensePoly rhs = q_fermat_power(expand(c), n, ctx);
  rep.difference = lhs - rhs;
  rep.equation_holds = rep.difference.is_zero();

  rep.applicable = all_premises_hold(rep.premises);
  rep.consistent = !(rep.applicable && rep.equation_holds && rep.n > rep.n_bound);
  return rep;
}

MultiBoundReport verify_fermat_multi_bound(std::span<const FactoredPoly> fs, unsigned n,
                                           const QContext& ctx) {
  ctx.require_chain();
  if (fs.size() < 3)
    throw domain_error("verify_fermat_multi_bound: need at least three polynomials (m >= 2)");
  if (n == 0) throw domain_error("verify_fermat_multi_bound: exponent must be positive");
  const std::size_t m = fs.size() - 1;
  MultiBoundReport rep;
  rep.n = n;

  const bool all_nonconst =
      std::all_of(fs.begin(), fs.end(), [](const FactoredPoly& f) { return f.degree() >= 1; });
  rep.premises.push_back({"all-nonconstant", all_nonconst, ""});

  std::vector<FactoredPoly> powered;
  powered.reserve(fs.size());
  for (const auto& f : fs) powered.push_back(q_fermat_power(f, n, ctx));

  const QPrimeResult qp = relatively_q_prime(powered, ctx);
  Premise prime{"powered-pairwise-q-prime", qp.q_prime, ""};
  if (qp.witness)
    prime.witness = "powers of arguments " + std::to_string(qp.witness->first + 1) + " and " +
                    std::to_string(qp.witness->second + 1) + " share the common q-divisor z - (" +
                    qp.witness->divisor.str() + ")";
  rep.premises.push_back(std::move(prime));

  // Independence of the m left-hand powers over the constants. (As printed,
  // the hypothesis would cover all m+1 powers, but the functional equation
  // makes that impossible; the proof uses the left-hand tuple.)
  std::vector<DensePoly> lhs_powers;
  for (std::size_t i = 0; i < m; ++i) lhs_powers.push_back(expand(powered[i]));
  const IndependenceReport ind = independence_report(lhs_powers, ctx);
  rep.premises.push_back({"powered-independent", ind.coefficient_rank_full,
                          ind.agree ? "" : "Casoratian and coefficient-rank signals disagree"});

  DensePoly lhs_sum;
  for (const auto& p : lhs_powers) lhs_sum += p;
  rep.equation_holds = lhs_sum == expand(powered.back());

  unsigned max_deg = 0;
  for (const auto& f : fs) max_deg = std::max<unsigned>(max_deg, f.degree());
  if (max_deg > 0) {
    const long m_l = static_cast<long>(m);
    rep.bound = Rational(m_l * m_l - 1) -
                Rational(mpz_class(m_l * (m_l - 1)), mpz_class(2 * static_cast<long>(max_deg)));
    rep.bound_holds = Rational(static_cast<long>(n)) <= rep.bound;
  }
  rep.applicable = all_premises_hold(rep.premises);
  rep.consistent = !(rep.applicable && rep.equation_holds && !rep.bound_holds);
  return rep;
}

}  // namespace qmason
