#include "qmason/theorems.hpp"

#include <algorithm>
#include <limits>
#include <thread>

namespace qmason {

namespace {

struct BlockResult {
  std::vector<std::uint64_t> filtered;
  std::uint64_t premise_passing = 0;
  std::vector<FermatSolution> solutions;
};

struct SearchPlan {
  unsigned n;
  unsigned m;
  unsigned width;  // coefficients per polynomial
  std::vector<GaussianRational> coeffs;
  std::vector<std::string> premise_names;
};

// Decodes a candidate index into the m+1 coefficient tuples. Digits are read
// most significant first: polynomial 1's leading coefficient varies slowest.
std::vector<DensePoly> decode(std::uint64_t index, const SearchPlan& plan) {
  const std::uint64_t base = plan.coeffs.size();
  const unsigned digits = plan.width * (plan.m + 1);
  std::vector<unsigned> digit(digits);
  for (unsigned k = digits; k-- > 0;) {
    digit[k] = static_cast<unsigned>(index % base);
    index /= base;
  }
  std::vector<DensePoly> tuple;
  tuple.reserve(plan.m + 1);
  for (unsigned p = 0; p <= plan.m; ++p) {
    std::vector<GaussianRational> coeffs(plan.width);
    for (unsigned t = 0; t < plan.width; ++t)
      coeffs[plan.width - 1 - t] = plan.coeffs[digit[p * plan.width + t]];
    tuple.push_back(DensePoly::from_coeffs(std::move(coeffs)));
  }
  return tuple;
}

void scan_block(std::uint64_t begin, std::uint64_t end, const SearchPlan& plan,
                const QContext& ctx, BlockResult& out) {
  out.filtered.assign(plan.premise_names.size(), 0);
  for (std::uint64_t index = begin; index < end; ++index) {
    const std::vector<DensePoly> tuple = decode(index, plan);

    if (std::any_of(tuple.begin(), tuple.end(),
                    [](const DensePoly& p) { return p.is_zero(); })) {
      ++out.filtered[0];
      continue;
    }

    if (plan.m == 2) {
      const bool all_const = std::all_of(tuple.begin(), tuple.end(),
                                         [](const DensePoly& p) { return p.is_constant(); });
      if (all_const) {
        ++out.filtered[1];
        continue;
      }
    } else {
      const bool any_const = std::any_of(tuple.begin(), tuple.end(),
                                         [](const DensePoly& p) { return p.is_constant(); });
      if (any_const) {
        ++out.filtered[1];
        continue;
      }
    }

    // Powered polynomials, factored when the base splits over Q so the
    // cheap multiset q-primeness test applies.
    std::vector<DensePoly> powered;
    std::vector<std::optional<FactoredPoly>> powered_factored;
    powered.reserve(tuple.size());
    powered_factored.reserve(tuple.size());
    for (const auto& p : tuple) {
      powered.push_back(q_fermat_power(p, plan.n, ctx));
      RationalSplit split = extract_rational_roots(p);
      if (split.complete)
        powered_factored.push_back(q_fermat_power(split.factored, plan.n, ctx));
      else
        powered_factored.push_back(std::nullopt);
    }

    bool q_prime = true;
    for (std::size_t i = 0; i < powered.size() && q_prime; ++i)
      for (std::size_t j = i + 1; j < powered.size() && q_prime; ++j) {
        if (powered_factored[i] && powered_factored[j])
          q_prime = common_q_divisors(*powered_factored[i], *powered_factored[j], ctx).empty();
        else
          q_prime = !common_q_divisor_factor(powered[i], powered[j], ctx).has_value();
      }
    if (!q_prime) {
      ++out.filtered[2];
      continue;
    }

    if (plan.m > 2) {
      std::vector<DensePoly> lhs(powered.begin(), powered.end() - 1);
      if (coefficient_rank(lhs) != lhs.size()) {
        ++out.filtered[3];
        continue;
      }
    }

    ++out.premise_passing;
    DensePoly lhs_sum;
    for (std::size_t i = 0; i + 1 < powered.size(); ++i) lhs_sum += powered[i];
    if (lhs_sum == powered.back()) out.solutions.push_back({tuple});
  }
}

}  // namespace

FermatCertificate fermat_search(const SearchParams& params, const QContext& ctx) {
  ctx.require_chain();
  if (params.n == 0) throw domain_error("fermat_search: exponent must be positive");
  if (params.m < 2) throw domain_error("fermat_search: need at least two summands");

  SearchPlan plan;
  plan.n = params.n;
  plan.m = params.m;
  plan.width = params.max_deg + 1;
  plan.coeffs = params.coeff_set;
  std::sort(plan.coeffs.begin(), plan.coeffs.end());
  plan.coeffs.erase(std::unique(plan.coeffs.begin(), plan.coeffs.end()), plan.coeffs.end());
  plan.premise_names = {"all-nonzero",
                        params.m == 2 ? "not-all-constant" : "all-nonconstant",
                        "powered-pairwise-q-prime"};
  if (params.m > 2) plan.premise_names.push_back("powered-lhs-independent");

  FermatCertificate cert;
  cert.params = params;
  cert.params.coeff_set = plan.coeffs;
  cert.q = ctx.q();
  cert.premise_names = plan.premise_names;
  cert.filtered.assign(plan.premise_names.size(), 0);

  std::uint64_t total = plan.coeffs.empty() ? 0 : 1;
  const unsigned digits = plan.width * (plan.m + 1);
  for (unsigned k = 0; k < digits && total > 0; ++k) {
    if (total > std::numeric_limits<std::uint64_t>::max() / plan.coeffs.size())
      throw domain_error("fermat_search: enumeration space exceeds 2^64; narrow the grid");
    total *= plan.coeffs.size();
  }
  cert.total_candidates = total;

  const std::uint64_t limit =
      params.budget == 0 ? total : std::min<std::uint64_t>(total, params.budget);
  cert.examined = limit;
  cert.complete = limit == total;
  if (limit == 0) return cert;

  const unsigned threads = std::max(1u, params.threads);
  const std::uint64_t block_count = std::min<std::uint64_t>(threads, limit);
  std::vector<BlockResult> results(block_count);
  std::vector<std::thread> workers;
  for (std::uint64_t b = 0; b < block_count; ++b) {
    const std::uint64_t begin = limit / block_count * b + std::min(b, limit % block_count);
    const std::uint64_t end =
        limit / block_count * (b + 1) + std::min(b + 1, limit % block_count);
    workers.emplace_back(scan_block, begin, end, std::cref(plan), std::cref(ctx),
                         std::ref(results[b]));
  }
  for (auto& w : workers) w.join();

  // Merge in block (= index) order: the certificate is independent of the
  // thread count by construction.
  for (const auto& r : results) {
    for (std::size_t i = 0; i < cert.filtered.size(); ++i) cert.filtered[i] += r.filtered[i];
    cert.premise_passing += r.premise_passing;
    cert.solutions.insert(cert.solutions.end(), r.solutions.begin(), r.solutions.end());
  }
  return cert;
}

}  // namespace qmason
