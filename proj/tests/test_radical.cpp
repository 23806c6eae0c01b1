#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qmason/radical.hpp"
#include "testutil.hpp"

using namespace qmason;

namespace {

const QContext q2{GaussianRational(2)};
const QContext q3{GaussianRational(3)};
const QContext qhalf{GaussianRational(Rational(1, 2))};
const QContext q2i{GaussianRational(Rational(2), Rational(1))};

DensePoly from_ints(std::initializer_list<long> coeffs) {
  std::vector<GaussianRational> c;
  for (long v : coeffs) c.push_back(GaussianRational(v));
  return DensePoly::from_coeffs(std::move(c));
}

FactoredPoly make(std::initializer_list<long> roots, long lead = 1) {
  std::vector<GaussianRational> r;
  for (long v : roots) r.push_back(GaussianRational(v));
  return FactoredPoly(GaussianRational(lead), std::move(r));
}

// Roots drawn from small q-orbits (u * q^e) plus occasional zeros, so that
// chains of interesting lengths appear.
FactoredPoly random_orbit_poly(std::mt19937& rng, const QContext& ctx, int max_roots) {
  static const long bases[] = {1, -1, 2, 3, 5, -3};
  std::uniform_int_distribution<int> count(1, max_roots);
  std::uniform_int_distribution<int> base_pick(0, 5);
  std::uniform_int_distribution<int> exp_pick(0, 3);
  std::uniform_int_distribution<int> zero_pick(0, 9);
  const int d = count(rng);
  std::vector<GaussianRational> roots;
  for (int k = 0; k < d; ++k) {
    if (zero_pick(rng) == 0) {
      roots.push_back(GaussianRational(0));
      continue;
    }
    roots.push_back(GaussianRational(bases[base_pick(rng)]) * ctx.q_pow(exp_pick(rng)));
  }
  return FactoredPoly(testutil::random_nonzero_gaussian(rng, 3), std::move(roots));
}

std::vector<QChain> chains_of(const FactoredPoly& f, const QContext& ctx) {
  return chain_decompose(f, ctx).chains();
}

}  // namespace

TEST_CASE("q-weight by run evaluation") {
  const DensePoly f = expand(q_pow_factor(GaussianRational(1), 3, q2));  // (z-1)(z-2)(z-4)
  CHECK(q_weight(f, GaussianRational(1), q2) == 3);
  CHECK(q_weight(f, GaussianRational(2), q2) == 2);
  CHECK(q_weight(f, GaussianRational(5), q2) == 0);

  const DensePoly sq = from_ints({1, -2, 1});  // (z-1)^2
  CHECK(q_weight(sq, GaussianRational(1), q2) == 1);

  CHECK_THROWS_AS(q_weight(DensePoly(), GaussianRational(1), q2), domain_error);
  const QContext qi{GaussianRational::i()};
  CHECK_THROWS_AS(q_weight(sq, GaussianRational(1), qi), domain_error);
}

TEST_CASE("q-weight classical limits") {
  const QContext q1{GaussianRational(1)};
  const DensePoly sq = from_ints({1, -2, 1});
  CHECK(q_weight(sq, GaussianRational(1), q1) == 2);  // multiplicity at q = 1
  CHECK(q_weight(from_ints({0, 0, 0, 1}), GaussianRational(0), q2) == 3);  // z0 = 0
}

TEST_CASE("a-point weights") {
  CHECK(q_weight_at_value(from_ints({1, 0, 1}), GaussianRational(1), GaussianRational(0), q2) == 2);
  CHECK(q_weight_at_value(from_ints({0, 1}), GaussianRational(1), GaussianRational(1), q2) == 1);
  const DensePoly f = from_ints({2, -3, 1});
  CHECK(q_weight_at_value(f, GaussianRational(0), GaussianRational(1), q2) ==
        q_weight(f, GaussianRational(1), q2));
  // p identically equal to a has no well-defined weight.
  CHECK_THROWS_AS(q_weight_at_value(DensePoly(GaussianRational(5)), GaussianRational(5),
                                    GaussianRational(0), q2),
                  domain_error);
}

TEST_CASE("chain extraction examples") {
  CHECK(chains_of(make({1, 1, 2}), q2) ==
        std::vector<QChain>{{GaussianRational(1), 2}, {GaussianRational(1), 1}});
  CHECK(chains_of(make({1, 2, 4}), q2) == std::vector<QChain>{{GaussianRational(1), 3}});
  CHECK(chains_of(make({1, -1, -2, 2, 0}), q2) ==
        std::vector<QChain>{
            {GaussianRational(-1), 2}, {GaussianRational(0), 1}, {GaussianRational(1), 2}});
  // The leftover 2 heads its own chain once the run 1,2,4 is peeled: the
  // head condition applies to the residual at the moment of extraction.
  CHECK(chains_of(make({1, 2, 2, 4}), q2) ==
        std::vector<QChain>{{GaussianRational(1), 3}, {GaussianRational(2), 1}});

  const QContext qi{GaussianRational::i()};
  CHECK_THROWS_AS(chain_decompose(make({1, 2}), qi), domain_error);
}

TEST_CASE("chain reconstruction (randomized)") {
  std::mt19937 rng(91);
  for (const QContext* ctx : {&q2, &qhalf, &q3, &q2i})
    for (int trial = 0; trial < 50; ++trial) {
      const FactoredPoly f = random_orbit_poly(rng, *ctx, 8);
      const ChainDecomposition d = chain_decompose(f, *ctx);
      FactoredPoly rebuilt(d.lead());
      for (const auto& c : d.chains()) rebuilt = rebuilt * q_pow_factor(c.head, c.length, *ctx);
      CHECK(expand(rebuilt) == expand(f));
      CHECK(d.degree() == f.degree());
      CHECK(d.rad_degree() <= d.degree());
    }
}

TEST_CASE("head-processing order does not change the chains (randomized)") {
  std::mt19937 rng(92);
  for (const QContext* ctx : {&q2, &qhalf, &q2i})
    for (int trial = 0; trial < 60; ++trial) {
      const FactoredPoly f = random_orbit_poly(rng, *ctx, 8);
      const ChainDecomposition canonical = chain_decompose(f, *ctx);
      const HeadChooser random_choice = [&rng](const std::vector<GaussianRational>& heads) {
        return std::uniform_int_distribution<std::size_t>(0, heads.size() - 1)(rng);
      };
      const ChainDecomposition shuffled = chain_decompose(f, *ctx, random_choice);
      CHECK(canonical.chains() == shuffled.chains());
    }
}

TEST_CASE("radical examples") {
  // a = [z-1]_q^2, b = -[z+1]_q^2, c = -6z at q = 2: rad_q(abc) = z(z^2-1).
  const FactoredPoly abc = make({1, 2}) * make({-1, -2}, -1) * make({0}, -6);
  CHECK(expand(rad_q(abc, q2)) == from_ints({0, -1, 0, 1}));

  CHECK(expand(rad_q(q_pow_factor(GaussianRational(1), 5, q2), q2)) == from_ints({-1, 1}));

  // A double root gives two length-1 chains: rad_q keeps the square.
  CHECK(expand(rad_q(make({1, 1}), q2)) == from_ints({1, -2, 1}));
}

TEST_CASE("truncated radical") {
  const FactoredPoly f = q_pow_factor(GaussianRational(1), 5, q2);
  CHECK(expand(rad_q_trunc(f, 2, q2)) == from_ints({2, -3, 1}));  // (z-1)(z-2)
  CHECK(rad_q_trunc(f, 5, q2).degree() == 5);
  CHECK(expand(rad_q_trunc(f, 9, q2)) == expand(q_pow_factor(GaussianRational(1), 5, q2)));
  CHECK(rad_q_trunc(f, 1, q2) == rad_q(f, q2));
  CHECK_THROWS_AS(rad_q_trunc(f, 0, q2), domain_error);
}

TEST_CASE("gcd tower closed form") {
  const FactoredPoly f = q_pow_factor(GaussianRational(1), 3, q2);
  CHECK(expand(gcd_tower(f, 1, q2)) == from_ints({2, -3, 1}));
  CHECK(expand(gcd_tower(f, 3, q2)) == DensePoly::one());
  CHECK(expand(gcd_tower(f, 7, q2)) == DensePoly::one());

  const FactoredPoly g = make({1, 1, 2, 4});  // (z-1)^2 (z-2)(z-4): chains (1,3), (1,1)
  CHECK(expand(gcd_tower(g, 1, q2)) == from_ints({2, -3, 1}));
}

TEST_CASE("gcd tower equals the euclidean tower (randomized)") {
  std::mt19937 rng(93);
  for (const QContext* ctx : {&q2, &qhalf, &q3})
    for (int trial = 0; trial < 40; ++trial) {
      const FactoredPoly f = random_orbit_poly(rng, *ctx, 8);
      const DensePoly dense = expand(f);
      for (unsigned n = 0; n <= 3; ++n) {
        const DensePoly closed = expand(gcd_tower(f, n, *ctx));
        CHECK(closed == gcd_tower_dense(dense, n, *ctx));
        if (n >= 1)
          CHECK(dense.degree() - closed.degree() ==
                static_cast<int>(rad_q_trunc(f, n, *ctx).degree()));
      }
    }
}

TEST_CASE("degree laws (randomized)") {
  std::mt19937 rng(94);
  for (const QContext* ctx : {&q2, &qhalf, &q2i})
    for (int trial = 0; trial < 50; ++trial) {
      const FactoredPoly f = random_orbit_poly(rng, *ctx, 6);
      const ChainDecomposition d = chain_decompose(f, *ctx);
      for (unsigned mu = 1; mu <= 4; ++mu) {
        const std::size_t trunc_deg = rad_q_trunc(f, mu, *ctx).degree();
        CHECK(trunc_deg == d.trunc_degree(mu));
        CHECK(trunc_deg <= mu * d.rad_degree());
        // Dense route computes the same degree without the roots.
        CHECK(rad_q_trunc_degree(expand(f), mu, *ctx) == trunc_deg);
      }
      const FactoredPoly g = random_orbit_poly(rng, *ctx, 6);
      const std::size_t rad_f = rad_q(f, *ctx).degree();
      const std::size_t rad_g = rad_q(g, *ctx).degree();
      const std::size_t rad_fg = rad_q(f * g, *ctx).degree();
      CHECK(rad_fg <= rad_f + rad_g);
      if (common_q_divisors(f, g, *ctx).empty()) CHECK(rad_fg == rad_f + rad_g);
    }
}

TEST_CASE("common q-divisors") {
  const FactoredPoly f = make({1, 2, 4});
  const FactoredPoly g = make({4, 8, 16});
  const FactoredPoly h = make({8, 16});
  const std::vector<GaussianRational> expected{GaussianRational(1), GaussianRational(2),
                                               GaussianRational(4)};
  CHECK(common_q_divisors(f, g, q2) == expected);
  CHECK(common_q_divisors(f, h, q2) == expected);
  CHECK(euclid_gcd(expand(f), expand(h)) == DensePoly::one());  // no classical common divisor
  CHECK(common_q_divisors(make({1}), make({-1}), q2).empty());
  // Shared zero at the origin is always a common q-divisor.
  CHECK(common_q_divisors(make({0, 1}), make({0, 5}), q2) ==
        std::vector<GaussianRational>{GaussianRational(0)});
}

TEST_CASE("relative q-primeness") {
  const FactoredPoly triple[] = {make({1, 2}), make({-1, -2}, -1), make({0}, -6)};
  CHECK(relatively_q_prime(triple, q2).q_prime);

  const FactoredPoly pair[] = {make({1, 2, 4}), make({4, 8, 16})};
  const QPrimeResult r = relatively_q_prime(pair, q2);
  CHECK_FALSE(r.q_prime);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->divisor == GaussianRational(1));

  // A shared root alone is not a common q-divisor.
  const FactoredPoly same[] = {make({1}), make({1})};
  CHECK(relatively_q_prime(same, q2).q_prime);
}

TEST_CASE("q-primeness via the dense gcd route agrees (randomized)") {
  std::mt19937 rng(95);
  for (const QContext* ctx : {&q2, &qhalf, &q2i})
    for (int trial = 0; trial < 50; ++trial) {
      const FactoredPoly f = random_orbit_poly(rng, *ctx, 5);
      const FactoredPoly g = random_orbit_poly(rng, *ctx, 5);
      const bool multiset_prime = common_q_divisors(f, g, *ctx).empty();
      const auto factor = common_q_divisor_factor(expand(f), expand(g), *ctx);
      CHECK(multiset_prime == !factor.has_value());
      if (factor) {
        // Some known divisor head must be a root of the witness factor.
        const auto heads = common_q_divisors(f, g, *ctx);
        bool found = false;
        for (const auto& h : heads)
          if (factor->eval(h).is_zero()) found = true;
        CHECK(found);
      }
    }
}

TEST_CASE("derivative weight drop (randomized)") {
  std::mt19937 rng(96);
  std::uniform_int_distribution<int> n_pick(1, 4);
  std::uniform_int_distribution<int> z0_pick(0, 4);
  const GaussianRational z0s[] = {GaussianRational(1), GaussianRational(-2),
                                  GaussianRational(Rational(1, 2)),
                                  GaussianRational(Rational(1), Rational(1)), GaussianRational(0)};
  for (const QContext* ctx : {&q2, &qhalf, &q3, &q2i})
    for (int trial = 0; trial < 30; ++trial) {
      const unsigned n = static_cast<unsigned>(n_pick(rng));
      const GaussianRational z0 = z0s[z0_pick(rng)];
      const GaussianRational a = testutil::random_gaussian(rng, 3);
      // p - a = [z-z0]_q^n * tail with tail(q^n z0) != 0 gives weight exactly n.
      const FactoredPoly tail = random_orbit_poly(rng, *ctx, 3);
      if (expand(tail).eval(ctx->q_pow(n) * z0).is_zero()) continue;
      const DensePoly p = expand(q_pow_factor(z0, n, *ctx) * tail) + DensePoly(a);
      REQUIRE(q_weight_at_value(p, a, z0, *ctx) == n);
      CHECK(q_weight(jackson(p, *ctx), z0, *ctx) == n - 1);
    }
}

TEST_CASE("gcd pairs of q-prime polynomials stay q-prime and coprime (randomized)") {
  std::mt19937 rng(97);
  int checked = 0;
  for (const QContext* ctx : {&q2, &qhalf, &q2i})
    for (int trial = 0; trial < 80 && checked < 60; ++trial) {
      const FactoredPoly f = random_orbit_poly(rng, *ctx, 5);
      const FactoredPoly g = random_orbit_poly(rng, *ctx, 5);
      if (!common_q_divisors(f, g, *ctx).empty()) continue;
      ++checked;
      const FactoredPoly gf = gcd_tower(f, 1, *ctx);  // gcd(f, D_q f)
      const FactoredPoly gg = gcd_tower(g, 1, *ctx);
      CHECK(common_q_divisors(gf, gg, *ctx).empty());
      CHECK(euclid_gcd(expand(gf), expand(gg)) == DensePoly::one());
    }
  CHECK(checked >= 40);
}

TEST_CASE("classical radical") {
  CHECK(classical_rad(from_ints({1, -2, 1})) == from_ints({-1, 1}));
  CHECK(classical_rad(from_ints({2, -3, 1})) == from_ints({2, -3, 1}));
  CHECK(classical_rad(from_ints({0, 0, 0, 1})) == from_ints({0, 1}));
  CHECK_THROWS_AS(classical_rad(DensePoly::one()), domain_error);
}

TEST_CASE("squarefree generic polynomials have the classical radical (randomized)") {
  std::mt19937 rng(98);
  for (const QContext* ctx : {&q2, &qhalf, &q3}) {
    int made = 0;
    while (made < 25) {
      const FactoredPoly f = random_orbit_poly(rng, *ctx, 5);
      // Require distinct roots with no q-power relation in range.
      bool generic = true;
      const auto& roots = f.roots();
      for (std::size_t i = 0; i < roots.size() && generic; ++i)
        for (std::size_t j = 0; j < roots.size() && generic; ++j) {
          if (i == j) continue;
          if (roots[i] == roots[j]) generic = false;
          for (std::size_t k = 1; k <= roots.size(); ++k)
            if (roots[j] == ctx->q_pow(static_cast<long>(k)) * roots[i]) generic = false;
        }
      if (!generic) continue;
      ++made;
      CHECK(expand(rad_q(f, *ctx)) == classical_rad(expand(f)));
    }
  }
}

TEST_CASE("double root differs from the classical radical") {
  // Pinned: rad_q((z-1)^2) = (z-1)^2 under the literal chain definitions,
  // while rad((z-1)^2) = z-1. The q -> 1 matching claim only covers
  // squarefree polynomials.
  const FactoredPoly sq = make({1, 1});
  CHECK(expand(rad_q(sq, q2)) == from_ints({1, -2, 1}));
  CHECK(classical_rad(expand(sq)) == from_ints({-1, 1}));
}
