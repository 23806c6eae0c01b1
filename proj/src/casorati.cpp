#include "qmason/casorati.hpp"

#include <vector>

namespace qmason {

namespace {

// Laplace expansion along the first row; exact, no division. Matrix sizes
// here are small (m <= a handful), so the factorial cost is irrelevant.
DensePoly poly_det(const std::vector<std::vector<DensePoly>>& mat) {
  const std::size_t n = mat.size();
  if (n == 1) return mat[0][0];
  DensePoly det;
  for (std::size_t j = 0; j < n; ++j) {
    if (mat[0][j].is_zero()) continue;
    std::vector<std::vector<DensePoly>> minor(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      minor[r - 1].reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) minor[r - 1].push_back(mat[r][c]);
    }
    const DensePoly term = mat[0][j] * poly_det(minor);
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

void require_input(std::span<const DensePoly> fs, const QContext& ctx) {
  ctx.require_jackson();
  if (fs.empty()) throw domain_error("casorati: empty tuple");
}

}  // namespace

DensePoly casorati(std::span<const DensePoly> fs, const QContext& ctx) {
  require_input(fs, ctx);
  const std::size_t m = fs.size();
  std::vector<std::vector<DensePoly>> mat(m, std::vector<DensePoly>(m));
  for (std::size_t j = 0; j < m; ++j) {
    mat[0][j] = fs[j];
    for (std::size_t i = 1; i < m; ++i) mat[i][j] = jackson(mat[i - 1][j], ctx);
  }
  return poly_det(mat);
}

CasoratiShiftForm casorati_shift_form(std::span<const DensePoly> fs, const QContext& ctx) {
  require_input(fs, ctx);
  const std::size_t m = fs.size();
  std::vector<std::vector<DensePoly>> mat(m, std::vector<DensePoly>(m));
  for (std::size_t j = 0; j < m; ++j) {
    mat[0][j] = fs[j];
    for (std::size_t i = 1; i < m; ++i) mat[i][j] = scale_arg(mat[i - 1][j], ctx.q());
  }
  CasoratiShiftForm out;
  out.shift_det = poly_det(mat);

  long q_exp = 0;
  for (std::size_t k = 0; k < m; ++k) q_exp += static_cast<long>(k) * (static_cast<long>(k) - 1) / 2;
  const unsigned step_exp = static_cast<unsigned>(m * (m - 1) / 2);
  const DensePoly step = DensePoly::from_coeffs({GaussianRational(0), ctx.q() - GaussianRational(1)});
  out.normalizer = ctx.q_pow(q_exp) * pow(step, step_exp);
  return out;
}

unsigned coefficient_rank(std::span<const DensePoly> fs) {
  int max_deg = -1;
  for (const auto& f : fs) max_deg = std::max(max_deg, f.degree());
  const std::size_t cols = static_cast<std::size_t>(max_deg + 1);
  std::vector<std::vector<GaussianRational>> rows;
  for (const auto& f : fs) {
    std::vector<GaussianRational> row(cols);
    for (std::size_t k = 0; k < cols; ++k) row[k] = f.coeff(k);
    rows.push_back(std::move(row));
  }
  // Exact Gaussian elimination.
  unsigned rank = 0;
  std::size_t col = 0;
  while (rank < rows.size() && col < cols) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) {
      ++col;
      continue;
    }
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      const GaussianRational factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
    ++col;
  }
  return rank;
}

IndependenceReport independence_report(std::span<const DensePoly> fs, const QContext& ctx) {
  IndependenceReport rep;
  rep.casorati_nonzero = !casorati(fs, ctx).is_zero();
  rep.coefficient_rank_full = coefficient_rank(fs) == fs.size();
  rep.agree = rep.casorati_nonzero == rep.coefficient_rank_full;
  return rep;
}

}  // namespace qmason
