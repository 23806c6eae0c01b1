#ifndef QMASON_THEOREMS_HPP
#define QMASON_THEOREMS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qmason/casorati.hpp"
#include "qmason/poly.hpp"
#include "qmason/qcore.hpp"
#include "qmason/radical.hpp"

namespace qmason {

// One checked hypothesis. Premise failures make a report "not applicable"
// rather than raising: the theorems are conditionals, and searches tally
// which filter rejected a candidate.
struct Premise {
  std::string name;
  bool holds = false;
  std::string witness;  // human-readable detail, empty when none
};

bool all_premises_hold(std::span<const Premise> premises);

// Verifier argument: the dense form is always present; the factored form is
// attached when the roots are known (factored input, or a dense input that
// splits over Q). Chain-based quantities use the factored form; otherwise
// the gcd-tower route computes the same degrees from the dense form alone.
struct PolyArg {
  DensePoly dense;
  std::optional<FactoredPoly> factored;

  PolyArg(DensePoly d) : dense(std::move(d)) {}              // NOLINT: implicit
  PolyArg(const FactoredPoly& f) : dense(expand(f)), factored(f) {}  // NOLINT

  // Attaches the factored form when the dense polynomial splits over Q.
  static PolyArg with_root_extraction(DensePoly d);
};

// [P]_q^n = P(z) P(qz) ... P(q^{n-1}z).
DensePoly q_fermat_power(const DensePoly& p, unsigned n, const QContext& ctx);

// Same product in factored form: roots scale by q^{-i}, the leading constant
// picks up lead^n * q^{deg(p) * n(n-1)/2}.
FactoredPoly q_fermat_power(const FactoredPoly& p, unsigned n, const QContext& ctx);

struct MasonReport {
  std::vector<Premise> premises;
  bool applicable = false;     // all premises hold
  int max_deg = -1;            // max of the three degrees
  int rad_deg = -1;            // deg rad_q(abc); deg rad(abc) for the classical check
  bool inequality_holds = false;  // max_deg <= rad_deg - 1
  bool sharp = false;             // equality attained
};

// q-difference Stothers-Mason check: a, b, c relatively q-prime, a + b = c,
// not all constants, |q| != 1; then max deg <= deg rad_q(abc) - 1.
MasonReport verify_mason_q(const PolyArg& a, const PolyArg& b, const PolyArg& c,
                           const QContext& ctx);

// Classical Stothers-Mason check with the squarefree radical, for
// side-by-side comparison.
MasonReport verify_mason_classical(const DensePoly& a, const DensePoly& b, const DensePoly& c);

struct ExtendedReport {
  std::vector<Premise> premises;
  IndependenceReport independence;  // of f_1, ..., f_m
  bool applicable = false;
  int lhs = -1;        // max_i deg f_i
  long rhs_trunc = 0;  // deg rad_q^{m-1}(prod f_i) - m(m-1)/2
  long rhs_rad = 0;    // (m-1) deg rad_q(prod f_i) - m(m-1)/2
  bool both_hold = false;
  bool sharp = false;  // lhs == rhs_trunc
};

// Extended check for f_1 + ... + f_m = f_{m+1}: pairwise relatively q-prime,
// min deg >= m-1, f_1..f_m independent over the constants; then
// lhs <= rhs_trunc <= rhs_rad.
ExtendedReport verify_mason_extended(std::span<const PolyArg> fs, const QContext& ctx);

struct FermatInstanceReport {
  std::vector<Premise> premises;  // nonzero, not all constants, powered q-prime
  bool applicable = false;
  unsigned n = 0;
  unsigned n_bound = 0;        // 2 in general, 1 when some base is constant
  bool equation_holds = false; // [a]^n + [b]^n = [c]^n exactly
  DensePoly difference;        // lhs - rhs, zero when the equation holds
  bool consistent = true;      // no contradiction with the degree bound
};

// Checks one candidate solution of [a]_q^n + [b]_q^n = [c]_q^n. The
// q-primeness premise applies to the powered polynomials, not the bases.
FermatInstanceReport verify_fermat_instance(const FactoredPoly& a, const FactoredPoly& b,
                                            const FactoredPoly& c, unsigned n,
                                            const QContext& ctx);

struct MultiBoundReport {
  std::vector<Premise> premises;  // all nonconstant, powered q-prime, powered independent
  bool applicable = false;
  unsigned n = 0;
  Rational bound;              // m^2 - 1 - m(m-1) / (2 max deg), exact
  bool equation_holds = false;
  bool bound_holds = false;    // n <= bound
  bool consistent = true;
};

// Checks [f_1]^n + ... + [f_m]^n = [f_{m+1}]^n against the multi-term degree
// bound. fs has m+1 entries, m >= 2, all nonconstant.
MultiBoundReport verify_fermat_multi_bound(std::span<const FactoredPoly> fs, unsigned n,
                                           const QContext& ctx);

// ---- Exhaustive search ------------------------------------------------

struct SearchParams {
  unsigned n = 1;        // Fermat exponent
  unsigned m = 2;        // summands on the left; m = 2 is the three-polynomial equation
  unsigned max_deg = 1;  // per-polynomial degree cap
  std::vector<GaussianRational> coeff_set;  // sorted canonically before use
  std::uint64_t budget = 0;  // max candidates examined; 0 = no limit
  unsigned threads = 1;
};

struct FermatSolution {
  std::vector<DensePoly> tuple;  // m+1 polynomials, LHS summands then RHS
};

// Replayable outcome of an exhaustive scan. Identical parameters reproduce
// the certificate bit for bit, independent of thread count.
struct FermatCertificate {
  SearchParams params;
  GaussianRational q;
  std::uint64_t total_candidates = 0;
  std::uint64_t examined = 0;
  bool complete = false;  // budget did not cut the scan short
  std::vector<std::string> premise_names;
  std::vector<std::uint64_t> filtered;  // rejected at premise i (first failure counts)
  std::uint64_t premise_passing = 0;
  std::vector<FermatSolution> solutions;
};

// Enumerates every (m+1)-tuple of polynomials with degree <= max_deg and
// coefficients from coeff_set, in lexicographic order (polynomials in
// position order, coefficients from the leading one down, coefficient values
// in canonical order). Premise filters run first, then the exact functional
// equation. The candidate space is split into contiguous index blocks that
// may run on separate threads; block results merge in index order.
FermatCertificate fermat_search(const SearchParams& params, const QContext& ctx);

}  // namespace qmason

#endif  // QMASON_THEOREMS_HPP
