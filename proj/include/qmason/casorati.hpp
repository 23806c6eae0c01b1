#ifndef QMASON_CASORATI_HPP
#define QMASON_CASORATI_HPP

#include <span>

#include "qmason/poly.hpp"
#include "qmason/qcore.hpp"

namespace qmason {

// q-Casorati determinant of f_1, ..., f_m: the m x m determinant with rows
// f_j, D_q f_j, ..., D_q^{m-1} f_j, expanded exactly over the polynomial
// ring. Requires q not in {0, 1}.
DensePoly casorati(std::span<const DensePoly> fs, const QContext& ctx);

struct CasoratiShiftForm {
  DensePoly shift_det;   // det of the rows f_j(q^i z), 0 <= i < m
  DensePoly normalizer;  // q^{sum_k k(k-1)/2} * (qz-z)^{m(m-1)/2}
};

// Shift form of the Casoratian. The identity
//   shift_det = normalizer * casorati
// holds exactly; the (qz-z) exponent is m(m-1)/2 with the accompanying
// q-power (triangular row reduction of the shift matrix fixes both), which
// agrees with the plain (qz-z)^{m-1} prefactor only at m <= 2.
CasoratiShiftForm casorati_shift_form(std::span<const DensePoly> fs, const QContext& ctx);

struct IndependenceReport {
  bool casorati_nonzero = false;        // dependence over q-periodic multipliers
  bool coefficient_rank_full = false;   // linear independence over constants
  bool agree = false;                   // the two signals coincide
};

// Both independence signals, recorded side by side; a disagreement is
// reported, never silently resolved.
IndependenceReport independence_report(std::span<const DensePoly> fs, const QContext& ctx);

// Exact rank of the coefficient matrix of the tuple.
unsigned coefficient_rank(std::span<const DensePoly> fs);

}  // namespace qmason

#endif  // QMASON_CASORATI_HPP
