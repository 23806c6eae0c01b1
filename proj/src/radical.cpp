#include "qmason/radical.hpp"

#include <algorithm>
#include <map>

namespace qmason {

ChainDecomposition::ChainDecomposition(GaussianRational lead, std::vector<QChain> chains)
    : lead_(std::move(lead)), chains_(std::move(chains)) {
  std::sort(chains_.begin(), chains_.end(), [](const QChain& a, const QChain& b) {
    if (a.head != b.head) return a.head < b.head;
    return a.length > b.length;
  });
}

std::size_t ChainDecomposition::degree() const {
  std::size_t d = 0;
  for (const auto& c : chains_) d += c.length;
  return d;
}

std::size_t ChainDecomposition::trunc_degree(unsigned mu) const {
  std::size_t d = 0;
  for (const auto& c : chains_) d += std::min(c.length, mu);
  return d;
}

namespace {

using RootMultiset = std::map<GaussianRational, unsigned>;

RootMultiset to_multiset(const std::vector<GaussianRational>& roots) {
  RootMultiset m;
  for (const auto& r : roots) ++m[r];
  return m;
}

bool contains(const RootMultiset& m, const GaussianRational& x) {
  return m.find(x) != m.end();
}

void remove_one(RootMultiset& m, const GaussianRational& x) {
  auto it = m.find(x);
  if (it == m.end()) throw domain_error("chain extraction: internal multiset underflow");
  if (--it->second == 0) m.erase(it);
}

// Longest run u, qu, q^2 u, ... present in m (membership, one copy each).
// The orbit of 0 is {0}, so its run is the plain multiplicity.
unsigned run_length(const RootMultiset& m, const GaussianRational& u, const QContext& ctx) {
  if (u.is_zero()) {
    const auto it = m.find(u);
    return it == m.end() ? 0 : it->second;
  }
  unsigned n = 0;
  GaussianRational x = u;
  while (contains(m, x)) {
    ++n;
    x *= ctx.q();
  }
  return n;
}

}  // namespace

ChainDecomposition chain_decompose(const FactoredPoly& f, const QContext& ctx,
                                   const HeadChooser& choose) {
  ctx.require_chain();
  RootMultiset m = to_multiset(f.roots());
  std::vector<QChain> chains;

  // Roots at 0 are a single chain: q*0 = 0, so the head condition is vacuous
  // and the weight at 0 is the plain multiplicity.
  if (auto it = m.find(GaussianRational(0)); it != m.end()) {
    chains.push_back({GaussianRational(0), it->second});
    m.erase(it);
  }

  while (!m.empty()) {
    std::vector<GaussianRational> heads;
    for (const auto& [u, count] : m)
      if (!contains(m, u / ctx.q())) heads.push_back(u);
    if (heads.empty())
      throw domain_error("chain extraction: no admissible head (is |q| = 1?)");
    const GaussianRational u = heads[choose(heads)];
    const unsigned n = run_length(m, u, ctx);
    GaussianRational x = u;
    for (unsigned k = 0; k < n; ++k) {
      remove_one(m, x);
      x *= ctx.q();
    }
    chains.push_back({u, n});
  }
  return ChainDecomposition(f.lead(), std::move(chains));
}

ChainDecomposition chain_decompose(const FactoredPoly& f, const QContext& ctx) {
  return chain_decompose(f, ctx, [](const std::vector<GaussianRational>&) { return std::size_t{0}; });
}

namespace {

// Classical multiplicity of z0 as a root of p, by repeated deflation.
unsigned multiplicity(const DensePoly& p, const GaussianRational& z0) {
  const DensePoly factor = DensePoly::from_coeffs({-z0, GaussianRational(1)});
  DensePoly work = p;
  unsigned n = 0;
  while (!work.is_constant() && work.eval(z0).is_zero()) {
    work = divrem(work, factor).quot;
    ++n;
  }
  return n;
}

}  // namespace

unsigned q_weight(const DensePoly& p, const GaussianRational& z0, const QContext& ctx) {
  if (p.is_zero()) throw domain_error("q_weight: zero polynomial");
  if (!ctx.q().is_one()) ctx.require_chain();
  if (ctx.q().is_one() || z0.is_zero()) return multiplicity(p, z0);
  unsigned n = 0;
  GaussianRational x = z0;
  while (p.eval(x).is_zero()) {
    ++n;
    x *= ctx.q();
  }
  return n;
}

unsigned q_weight_at_value(const DensePoly& p, const GaussianRational& a,
                           const GaussianRational& z0, const QContext& ctx) {
  return q_weight(p - DensePoly(a), z0, ctx);
}

FactoredPoly rad_q(const FactoredPoly& f, const QContext& ctx) {
  const ChainDecomposition d = chain_decompose(f, ctx);
  std::vector<GaussianRational> heads;
  heads.reserve(d.chains().size());
  for (const auto& c : d.chains()) heads.push_back(c.head);
  return FactoredPoly(GaussianRational(1), std::move(heads));
}

FactoredPoly rad_q_trunc(const FactoredPoly& f, unsigned mu, const QContext& ctx) {
  if (mu == 0) throw domain_error("rad_q_trunc: truncation level must be positive");
  const ChainDecomposition d = chain_decompose(f, ctx);
  std::vector<GaussianRational> roots;
  for (const auto& c : d.chains()) {
    GaussianRational x = c.head;
    for (unsigned k = 0; k < std::min(c.length, mu); ++k) {
      roots.push_back(x);
      x *= ctx.q();
    }
  }
  return FactoredPoly(GaussianRational(1), std::move(roots));
}

FactoredPoly gcd_tower(const FactoredPoly& f, unsigned n, const QContext& ctx) {
  const ChainDecomposition d = chain_decompose(f, ctx);
  std::vector<GaussianRational> roots;
  for (const auto& c : d.chains()) {
    GaussianRational x = c.head;
    for (unsigned k = n; k < c.length; ++k) {  // [length - n]^+ factors
      roots.push_back(x);
      x *= ctx.q();
    }
  }
  return FactoredPoly(GaussianRational(1), std::move(roots));
}

namespace {

// One side of the common-q-divisor test: a run of f starting at z0 whose
// q-continuation lands on a zero of g.
void collect_divisor_heads(const RootMultiset& mf, const RootMultiset& mg, const QContext& ctx,
                           std::vector<GaussianRational>& out) {
  for (const auto& [z0, count] : mf) {
    const unsigned w = run_length(mf, z0, ctx);
    GaussianRational x = z0 * ctx.q();
    for (unsigned k = 1; k <= w; ++k) {
      if (contains(mg, x)) {
        out.push_back(z0);
        break;
      }
      x *= ctx.q();
    }
  }
}

}  // namespace

std::vector<GaussianRational> common_q_divisors(const FactoredPoly& f, const FactoredPoly& g,
                                                const QContext& ctx) {
  ctx.require_chain();
  const RootMultiset mf = to_multiset(f.roots());
  const RootMultiset mg = to_multiset(g.roots());
  std::vector<GaussianRational> out;
  collect_divisor_heads(mf, mg, ctx, out);
  collect_divisor_heads(mg, mf, ctx, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

QPrimeResult relatively_q_prime(std::span<const FactoredPoly> fs, const QContext& ctx) {
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      const auto divisors = common_q_divisors(fs[i], fs[j], ctx);
      if (!divisors.empty()) return {false, QPrimeWitness{i, j, divisors.front()}};
    }
  return {true, std::nullopt};
}

DensePoly classical_rad(const DensePoly& p) {
  if (p.is_constant()) throw domain_error("classical_rad: constant polynomial");
  return monic(divrem(p, euclid_gcd(p, derivative(p))).quot);
}

DensePoly gcd_tower_dense(const DensePoly& p, unsigned n, const QContext& ctx) {
  if (p.is_zero()) throw domain_error("gcd_tower_dense: zero polynomial");
  DensePoly g = monic(p);
  DensePoly dq = p;
  for (unsigned k = 1; k <= n && !g.is_constant(); ++k) {
    dq = jackson(dq, ctx);
    if (dq.is_zero()) break;  // gcd with 0 leaves g unchanged
    g = euclid_gcd(g, dq);
  }
  return g;
}

unsigned rad_q_trunc_degree(const DensePoly& p, unsigned mu, const QContext& ctx) {
  if (mu == 0) throw domain_error("rad_q_trunc_degree: truncation level must be positive");
  ctx.require_chain();
  return static_cast<unsigned>(p.degree() - gcd_tower_dense(p, mu, ctx).degree());
}

unsigned rad_q_degree(const DensePoly& p, const QContext& ctx) {
  return rad_q_trunc_degree(p, 1, ctx);
}

std::optional<DensePoly> common_q_divisor_factor(const DensePoly& f, const DensePoly& g,
                                                 const QContext& ctx) {
  ctx.require_chain();
  if (f.is_zero() || g.is_zero())
    throw domain_error("common_q_divisor_factor: zero polynomial");
  const auto one_side = [&ctx](const DensePoly& a, const DensePoly& b) -> std::optional<DensePoly> {
    // run_gcd accumulates gcd(a(z), a(qz), ..., a(q^{k-1}z)).
    DensePoly run_gcd = monic(a);
    for (int k = 1; k <= a.degree() && !run_gcd.is_constant(); ++k) {
      const DensePoly hit = euclid_gcd(run_gcd, scale_arg(b, pow(ctx.q(), k)));
      if (hit.degree() >= 1) return hit;
      run_gcd = euclid_gcd(run_gcd, scale_arg(a, pow(ctx.q(), k)));
    }
    return std::nullopt;
  };
  if (auto hit = one_side(f, g)) return hit;
  return one_side(g, f);
}

}  // namespace qmason
