#ifndef QMASON_RADICAL_HPP
#define QMASON_RADICAL_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qmason/poly.hpp"
#include "qmason/qcore.hpp"

namespace qmason {

// One q-geometric chain: the factor [z-head]_q^length with roots
// head, q*head, ..., q^{length-1}*head (length copies of 0 when head = 0).
struct QChain {
  GaussianRational head;
  unsigned length = 0;

  friend bool operator==(const QChain&, const QChain&) = default;
};

// P = lead * prod_j [z-head_j]_q^{len_j}, chains sorted by head (canonical
// order), then length descending. Flattening the chains reproduces the
// source root multiset exactly.
class ChainDecomposition {
public:
  ChainDecomposition(GaussianRational lead, std::vector<QChain> chains);

  const GaussianRational& lead() const { return lead_; }
  const std::vector<QChain>& chains() const { return chains_; }

  std::size_t degree() const;                  // sum of lengths
  std::size_t rad_degree() const { return chains_.size(); }
  std::size_t trunc_degree(unsigned mu) const;  // sum of min(length, mu)

private:
  GaussianRational lead_;
  std::vector<QChain> chains_;
};

// Test hook: picks which admissible head to extract next. Receives the
// current distinct heads in canonical order, returns an index.
using HeadChooser = std::function<std::size_t(const std::vector<GaussianRational>&)>;

// Greedy chain extraction: repeatedly take a head u (u/q not among the
// remaining roots; roots at 0 form their own chain), peel the longest run
// u, qu, ..., q^{n-1}u, record (u, n). Requires |q| != 1 so that a head
// always exists. Canonical order: smallest head first.
ChainDecomposition chain_decompose(const FactoredPoly& f, const QContext& ctx);
ChainDecomposition chain_decompose(const FactoredPoly& f, const QContext& ctx,
                                   const HeadChooser& choose);

// q-weight of z0 as a zero of p: largest n with p(q^k z0) = 0 for 0 <= k < n.
// For z0 = 0, and for q = 1, this is the classical multiplicity.
unsigned q_weight(const DensePoly& p, const GaussianRational& z0, const QContext& ctx);

// q-weight of z0 as an a-point of p, i.e. q_weight of p - a.
unsigned q_weight_at_value(const DensePoly& p, const GaussianRational& a,
                           const GaussianRational& z0, const QContext& ctx);

// rad_q(f): the monic product of (z - head) over all chains.
FactoredPoly rad_q(const FactoredPoly& f, const QContext& ctx);

// rad_q^mu(f): each chain truncated at length mu; mu = 1 is rad_q and large
// mu recovers the monic full multiset.
FactoredPoly rad_q_trunc(const FactoredPoly& f, unsigned mu, const QContext& ctx);

// Closed form of gcd(f, D_q f, ..., D_q^n f): each chain clipped to
// max(length - n, 0). Monic; equals the Euclidean gcd of the tower.
FactoredPoly gcd_tower(const FactoredPoly& f, unsigned n, const QContext& ctx);

// All heads z0 witnessing a common q-divisor z - z0 of f and g: a vanishing
// run of one polynomial starting at z0 concatenates, via multiplication by
// q, with a zero of the other. Returned sorted, distinct.
std::vector<GaussianRational> common_q_divisors(const FactoredPoly& f, const FactoredPoly& g,
                                                const QContext& ctx);

struct QPrimeWitness {
  std::size_t first = 0;  // indices into the checked sequence
  std::size_t second = 0;
  GaussianRational divisor;  // head of a common q-divisor
};

struct QPrimeResult {
  bool q_prime = false;
  std::optional<QPrimeWitness> witness;
};

// Pairwise relative q-primeness of a sequence; on failure carries one
// witness pair and divisor head.
QPrimeResult relatively_q_prime(std::span<const FactoredPoly> fs, const QContext& ctx);

// Classical squarefree radical p / gcd(p, p'), monic. p must be nonconstant.
DensePoly classical_rad(const DensePoly& p);

// ---- Dense route -----------------------------------------------------
// The degree laws make radical degrees and q-primeness computable for
// polynomials whose roots are unknown (no factorization over Q(i) needed):
//   deg rad_q^n(P) = deg P - deg gcd(P, D_q P, ..., D_q^n P).

// Monic Euclidean gcd of {p, D_q p, ..., D_q^n p}.
DensePoly gcd_tower_dense(const DensePoly& p, unsigned n, const QContext& ctx);

// deg rad_q^mu(p) for any nonzero dense p, via the gcd tower.
unsigned rad_q_trunc_degree(const DensePoly& p, unsigned mu, const QContext& ctx);

// deg rad_q(p) = rad_q_trunc_degree(p, 1).
unsigned rad_q_degree(const DensePoly& p, const QContext& ctx);

// Nonconstant polynomial whose roots are heads of common q-divisors of f and
// g, or nullopt when f and g are relatively q-prime. Decides q-primeness
// without knowing any roots: a common q-divisor with head z0 on the f side
// means f vanishes on z0, ..., q^{k-1} z0 and g at q^k z0, i.e. z0 is a root
// of gcd(f(z), f(qz), ..., f(q^{k-1}z), g(q^k z)) for some k <= deg f.
std::optional<DensePoly> common_q_divisor_factor(const DensePoly& f, const DensePoly& g,
                                                 const QContext& ctx);

}  // namespace qmason

#endif  // QMASON_RADICAL_HPP
