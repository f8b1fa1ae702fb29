#include <doctest.h>

#include "wcm/exact/factor.hpp"
#include "wcm/exact/modp.hpp"
#include "wcm/exact/poly.hpp"

#include <random>

using namespace wcm;
using namespace wcm::exact;

namespace {
PolyQ P(std::initializer_list<int> c) {
  std::vector<Rational> v;
  for (int a : c) v.emplace_back(a);
  return PolyQ(std::move(v));
}
}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parseRational("3/6") == Rational(1, 2));
  CHECK(parseRational("-7") == -7);
  CHECK_THROWS_AS(parseRational("1/0"), Error);
  CHECK_THROWS_AS(parseRational("abc"), Error);
  CHECK(toString(Rational(-3, 4)) == "-3/4");
}

TEST_CASE("polynomial basics") {
  const PolyQ f = P({-1, -1, 0, 1});
  CHECK(f.degree() == 3);
  CHECK(f.str() == "t^3 - t - 1");
  CHECK(f(Rational(2)) == 5);
  const auto [q, r] = divmod(f, P({-1, 1}));
  CHECK(q * P({-1, 1}) + r == f);
  CHECK(gcd(P({-1, 0, 1}), P({1, 2, 1})) == P({1, 1}));
  CHECK(squarefreePart(P({1, 2, 1})) == P({1, 1}));
  CHECK(rootMultiplicity(P({1, -2, 1}), Rational(1)) == 2);
  CHECK(toRational(cyclotomic(12)) == P({1, 0, -1, 0, 1}));
  CHECK(eulerPhi(12) == 4);
  CHECK(isSelfReciprocal(P({1, -3, 1})));
  CHECK(isSelfReciprocal(P({-1, 0, 1})));
  CHECK_FALSE(isSelfReciprocal(P({1, 1, 2})));
}

TEST_CASE("composed products and sums") {
  // sqrt2 * sqrt3 roots: +-sqrt6
  CHECK(composedProduct(P({-2, 0, 1}), P({-3, 0, 1})) == P({36, 0, -12, 0, 1}));
  CHECK(composedSum(P({-2, 0, 1}), P({-3, 0, 1})) == P({1, 0, -10, 0, 1}));
  CHECK(rootPower(P({1, -3, 1}), 2) == P({1, -7, 1}));
  CHECK(rootInverse(P({-2, 1})) == PolyQ({Rational(-1, 2), Rational(1)}));
  CHECK_THROWS_AS(rootInverse(P({0, 1})), Error);
}

TEST_CASE("characteristic polynomial") {
  MatrixQ a(2, 2);
  a << 2, 1, 1, 1;
  CHECK(characteristicPolynomial(a) == P({1, -3, 1}));
  CHECK(evaluateAt(characteristicPolynomial(a), a).isZero());
  MatrixQ b(3, 3);
  b << 1, 2, 3, 0, 4, 5, 1, 0, 6;
  const PolyQ cb = characteristicPolynomial(b);
  CHECK(evaluateAt(cb, b).isZero());
  CHECK(cb[0] == -Rational(b.determinant()));
}

TEST_CASE("factorization mod p") {
  const PolyQ f = P({-1, -1, 0, 1});
  const auto f2 = factorModP(f, 2);
  CHECK(f2.factors.size() == 1);
  CHECK(f2.degreePattern() == std::vector<int>{3});
  const auto f5 = factorModP(f, 5);
  REQUIRE(f5.factors.size() == 2);
  CHECK(f5.factors[0].first == PolyModP(5, {3, 1}));  // t - 2
  CHECK(f5.factors[1].first == PolyModP(5, {3, 2, 1}));
  const auto f7 = factorModP(P({-1, 0, 1}), 7);
  REQUIRE(f7.factors.size() == 2);
  CHECK(f7.factors[0].first == PolyModP(7, {1, 1}));
  CHECK(f7.factors[1].first == PolyModP(7, {6, 1}));
  CHECK_THROWS_AS(factorModP(P({1, 0, 2}), 2), Error);
  CHECK_THROWS_AS(factorModP(PolyQ({Rational(1, 3), Rational(1)}), 3), Error);
  CHECK_THROWS_AS(factorModP(f, 9), Error);

  std::mt19937_64 rng(11);
  const auto primes = primesInRange(2, 200);
  std::uniform_int_distribution<int> coef(-30, 30), deg(1, 8);
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint64_t p = primes[pick(rng)];
    std::vector<Rational> c;
    const int d = deg(rng);
    for (int i = 0; i < d; ++i) c.emplace_back(coef(rng));
    c.emplace_back(1 + static_cast<int>(p) * coef(rng) % 3 == 0 ? 1 : 1 + static_cast<int>(p) * coef(rng));
    if (Integer(num(c.back())) % p == 0) c.back() = 1;
    const PolyQ g(std::move(c));
    const auto fac = factorModP(g, p);
    CHECK(fac.product() == reduce(g, p));
    for (const auto& [h, m] : fac.factors) CHECK(isIrreducible(h));
  }
}

TEST_CASE("factorization over Q") {
  CHECK(isIrreducibleQ(P({-1, -1, 0, 1})));
  CHECK_FALSE(isIrreducibleQ(P({-1, 0, 1})));
  // (t^2+1)(t^2-2)^2 (t-3)
  const PolyQ g = P({1, 0, 1}) * P({-2, 0, 1}) * P({-2, 0, 1}) * P({-3, 1});
  const auto fs = factorQ(g);
  REQUIRE(fs.size() == 3);
  CHECK(fs[0].first == P({-3, 1}));
  CHECK(fs[0].second == 1);
  CHECK(fs[1].first == P({-2, 0, 1}));
  CHECK(fs[1].second == 2);
  CHECK(fs[2].first == P({1, 0, 1}));
  // Swinnerton-Dyer style: t^4 - 10 t^2 + 1 is irreducible but splits mod every prime
  CHECK(isIrreducibleQ(P({1, 0, -10, 0, 1})));
  // non-monic: (2t+1)(3t^2-5)
  const auto nm = factorQ(P({1, 2}) * P({-5, 0, 3}));
  REQUIRE(nm.size() == 2);
  CHECK(nm[0].first == PolyQ({Rational(1, 2), Rational(1)}));
  CHECK(nm[1].first == PolyQ({Rational(-5, 3), Rational(0), Rational(1)}));
  // t^12 - 1 splits into cyclotomic factors
  const auto cyc = factorQ(PolyQ::monomial(12) - PolyQ::constant(1));
  CHECK(cyc.size() == 6);
  // t^8 - 16 t^4 ... product of shifted cyclotomics
  const PolyQ big = P({1, -3, 1}) * P({1, 0, -10, 0, 1}) * P({-1, -1, 0, 1}) * P({2, 0, 0, 0, 1});
  const auto bf = factorQ(big);
  CHECK(bf.size() == 4);
  PolyQ back = PolyQ::constant(1);
  for (const auto& [h, m] : bf) back *= h;
  CHECK(back == big);
  CHECK_THROWS_AS(factorQ(PolyQ::monomial(13) + PolyQ::constant(1), kMaxInputDegree), Error);
}
