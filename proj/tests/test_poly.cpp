#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qmason/poly.hpp"
#include "testutil.hpp"

using namespace qmason;
using testutil::random_gaussian;
using testutil::random_nonzero_gaussian;
using testutil::random_nonzero_poly;
using testutil::random_poly;

namespace {

DensePoly from_ints(std::initializer_list<long> coeffs) {
  std::vector<GaussianRational> c;
  for (long v : coeffs) c.push_back(GaussianRational(v));
  return DensePoly::from_coeffs(std::move(c));
}

}  // namespace

TEST_CASE("ring operations") {
  const DensePoly z2_minus_1 = from_ints({-1, 0, 1});
  CHECK(z2_minus_1 + DensePoly::one() == from_ints({0, 0, 1}));
  CHECK(from_ints({-1, 1}) * from_ints({1, 1}) == z2_minus_1);
  CHECK(from_ints({2, -3, 1}) - from_ints({0, 0, 1}) == from_ints({2, -3}));
  CHECK((z2_minus_1 - z2_minus_1).is_zero());
  CHECK(from_ints({1, 1}).degree() == 1);
  CHECK(DensePoly().degree() == -1);
}

TEST_CASE("evaluation") {
  const DensePoly p = from_ints({2, -3, 1});  // z^2 - 3z + 2
  CHECK(p.eval(GaussianRational(1)) == GaussianRational(0));
  CHECK(p.eval(GaussianRational(4)) == GaussianRational(6));
  CHECK(DensePoly(GaussianRational(7)).eval(GaussianRational(Rational(3, 5), Rational(-2))) ==
        GaussianRational(7));
}

TEST_CASE("argument scaling") {
  CHECK(scale_arg(from_ints({-1, 1}), GaussianRational(2)) == from_ints({-1, 2}));
  const DensePoly p = from_ints({3, 1, -2, 5});
  CHECK(scale_arg(p, GaussianRational(1)) == p);
  CHECK(scale_arg(from_ints({0, 0, 1}), GaussianRational::i()) == from_ints({0, 0, -1}));
  CHECK_THROWS_AS(scale_arg(p, GaussianRational(0)), domain_error);
}

TEST_CASE("division with remainder") {
  const auto [q1, r1] = divrem(from_ints({-1, 0, 1}), from_ints({-1, 1}));
  CHECK(q1 == from_ints({1, 1}));
  CHECK(r1.is_zero());
  const auto [q2, r2] = divrem(from_ints({0, 0, 1}), from_ints({-1, 1}));
  CHECK(q2 == from_ints({1, 1}));
  CHECK(r2 == DensePoly::one());
  const auto [q3, r3] = divrem(DensePoly::one(), from_ints({0, 1}));
  CHECK(q3.is_zero());
  CHECK(r3 == DensePoly::one());
  CHECK_THROWS_AS(divrem(from_ints({1}), DensePoly()), domain_error);
}

TEST_CASE("division recombines (randomized)") {
  std::mt19937 rng(311);
  for (int trial = 0; trial < 100; ++trial) {
    const DensePoly p = random_poly(rng, 6);
    const DensePoly d = random_nonzero_poly(rng, 3);
    const auto [quot, rem] = divrem(p, d);
    CHECK(quot * d + rem == p);
    CHECK(rem.degree() < d.degree());
  }
}

TEST_CASE("gcd") {
  CHECK(euclid_gcd(from_ints({-1, 0, 1}), from_ints({-1, 1})) == from_ints({-1, 1}));
  CHECK(euclid_gcd(from_ints({2, -3, 1}), DensePoly::one()) == DensePoly::one());
  CHECK(euclid_gcd(from_ints({0, 2}), DensePoly()) == from_ints({0, 1}));
  CHECK_THROWS_AS(euclid_gcd(DensePoly(), DensePoly()), domain_error);

  // (z-1)(z-2)(z-4) against (z-1)(z-2)u with u(1)u(2) != 0
  const DensePoly f = from_ints({-1, 1}) * from_ints({-2, 1}) * from_ints({-4, 1});
  const DensePoly g = from_ints({-1, 1}) * from_ints({-2, 1}) * from_ints({3, 1});
  CHECK(euclid_gcd(f, g) == from_ints({-1, 1}) * from_ints({-2, 1}));
}

TEST_CASE("gcd divides both and is divided by common divisors (randomized)") {
  std::mt19937 rng(312);
  for (int trial = 0; trial < 60; ++trial) {
    const DensePoly c = random_nonzero_poly(rng, 2);
    const DensePoly p = c * random_nonzero_poly(rng, 2);
    const DensePoly r = c * random_nonzero_poly(rng, 2);
    const DensePoly g = euclid_gcd(p, r);
    CHECK(divides(g, p));
    CHECK(divides(g, r));
    CHECK(divides(c, g));
    CHECK(g.leading() == GaussianRational(1));
  }
}

TEST_CASE("scale round trip (randomized)") {
  std::mt19937 rng(313);
  for (int trial = 0; trial < 60; ++trial) {
    const DensePoly p = random_poly(rng, 6);
    const GaussianRational c = random_nonzero_gaussian(rng);
    CHECK(scale_arg(scale_arg(p, c), c.inverse()) == p);
  }
}

TEST_CASE("expansion of factored form") {
  CHECK(expand(FactoredPoly(GaussianRational(1), {GaussianRational(1), GaussianRational(2)})) ==
        from_ints({2, -3, 1}));
  CHECK(expand(FactoredPoly(GaussianRational(Rational(5, 3)))) ==
        DensePoly(GaussianRational(Rational(5, 3))));
  CHECK(expand(FactoredPoly(GaussianRational(-2), {GaussianRational(0)})) == from_ints({0, -2}));
  CHECK_THROWS_AS(FactoredPoly(GaussianRational(0)), domain_error);
}

TEST_CASE("rational root extraction") {
  SUBCASE("splitting quadratic") {
    const RationalSplit s = extract_rational_roots(from_ints({4, -6, 2}));
    REQUIRE(s.complete);
    CHECK(s.factored.lead() == GaussianRational(2));
    CHECK(s.factored.roots() ==
          std::vector<GaussianRational>{GaussianRational(1), GaussianRational(2)});
  }
  SUBCASE("irreducible quadratic") {
    const RationalSplit s = extract_rational_roots(from_ints({1, 0, 1}));
    CHECK_FALSE(s.complete);
    CHECK(s.residual == from_ints({1, 0, 1}));
    CHECK(s.factored.roots().empty());
  }
  SUBCASE("monomial") {
    const RationalSplit s = extract_rational_roots(from_ints({0, 1}));
    REQUIRE(s.complete);
    CHECK(s.factored.lead() == GaussianRational(1));
    CHECK(s.factored.roots() == std::vector<GaussianRational>{GaussianRational(0)});
  }
  SUBCASE("fractional roots and multiplicity") {
    // 9(z - 2/3)^2 (z + 5)
    const DensePoly p = GaussianRational(9) *
                        (from_ints({0, 1}) - DensePoly(GaussianRational(Rational(2, 3)))) *
                        (from_ints({0, 1}) - DensePoly(GaussianRational(Rational(2, 3)))) *
                        from_ints({5, 1});
    const RationalSplit s = extract_rational_roots(p);
    REQUIRE(s.complete);
    CHECK(s.factored.lead() == GaussianRational(9));
    CHECK(s.factored.roots() ==
          std::vector<GaussianRational>{GaussianRational(-5), GaussianRational(Rational(2, 3)),
                                        GaussianRational(Rational(2, 3))});
  }
  SUBCASE("gaussian roots stay in the residual") {
    // (z - i)(z - 2): only the rational root comes out.
    const DensePoly p = (from_ints({0, 1}) - DensePoly(GaussianRational::i())) * from_ints({-2, 1});
    const RationalSplit s = extract_rational_roots(p);
    CHECK_FALSE(s.complete);
    CHECK(s.factored.roots() == std::vector<GaussianRational>{GaussianRational(2)});
    CHECK(s.residual == from_ints({0, 1}) - DensePoly(GaussianRational::i()));
    CHECK(expand(s.factored) * s.residual == p);
  }
  SUBCASE("zero polynomial rejected") {
    CHECK_THROWS_AS(extract_rational_roots(DensePoly()), domain_error);
  }
}

TEST_CASE("extract then expand is the identity (randomized)") {
  std::mt19937 rng(314);
  std::uniform_int_distribution<int> deg(0, 5);
  for (int trial = 0; trial < 60; ++trial) {
    // Build from known rational roots so the polynomial splits.
    const int d = deg(rng);
    std::vector<GaussianRational> roots;
    for (int k = 0; k < d; ++k) roots.push_back(GaussianRational(testutil::random_rational(rng, 4, 3)));
    GaussianRational lead = random_nonzero_gaussian(rng, 3);
    const FactoredPoly f(lead, roots);
    const RationalSplit s = extract_rational_roots(expand(f));
    REQUIRE(s.complete);
    CHECK(expand(s.factored) == expand(f));
    CHECK(s.factored == f);
  }
}

TEST_CASE("canonical printing") {
  CHECK(from_ints({0, -1, 0, 1}).str() == "z^3 - z");
  CHECK(from_ints({1, -3, 2}).str() == "2*z^2 - 3*z + 1");
  CHECK(DensePoly().str() == "0");
  CHECK(from_ints({-7}).str() == "-7");
  CHECK((DensePoly(GaussianRational(Rational(1), Rational(2))) * from_ints({0, 0, 1})).str() ==
        "(1+2i)*z^2");
  CHECK(from_ints({0, 1}).str() == "z");
  CHECK((DensePoly(GaussianRational(Rational(-1, 2))) * from_ints({0, 1}) + DensePoly::one()).str() ==
        "-1/2*z + 1");
}
