#include <doctest.h>

#include "wcm/exact/algebraic.hpp"
#include "wcm/exact/roots.hpp"

#include <cmath>
#include <random>

using namespace wcm;
using namespace wcm::exact;

namespace {
PolyQ P(std::initializer_list<int> c) {
  std::vector<Rational> v;
  for (int a : c) v.emplace_back(a);
  return PolyQ(std::move(v));
}
double approx(const AlgebraicNumber& a) { return a.enclosure(60).re.mid().convert_to<double>(); }
double approxIm(const AlgebraicNumber& a) { return a.enclosure(60).im.mid().convert_to<double>(); }
// Both endpoints within tol of an independently known value.
bool near(const Interval& x, long double ref, long double tol) {
  return std::abs(x.lo.convert_to<long double>() - ref) < tol && std::abs(x.hi.convert_to<long double>() - ref) < tol;
}
// (3 + sqrt5) / 2 is the larger root of t^2 - 3t + 1
AlgebraicNumber goldenSquare() { return AlgebraicNumber::root(P({1, -3, 1}), 0); }
}  // namespace

TEST_CASE("root isolation orders real roots first and descending") {
  const auto boxes = isolateRoots(P({-2, 0, 0, 1}), 30);  // t^3 - 2
  REQUIRE(boxes.size() == 3);
  CHECK(boxes[0].onRealAxis());
  CHECK(boxes[0].re.contains(Rational(1259921, 1000000)) == false);
  CHECK(std::abs(boxes[0].re.mid().convert_to<double>() - std::cbrt(2.0)) < 1e-8);
  CHECK_FALSE(boxes[1].onRealAxis());
  CHECK(boxes[1].im.mid() > 0);
  CHECK(boxes[2].im.mid() < 0);
  for (const auto& b : boxes) CHECK(b.width() <= Rational(1, Integer(1) << 30));
  const auto quartic = isolateRoots(P({1, 0, -10, 0, 1}), 20);
  REQUIRE(quartic.size() == 4);
  for (std::size_t i = 0; i + 1 < quartic.size(); ++i) CHECK(quartic[i].re.lo > quartic[i + 1].re.hi);
}

TEST_CASE("root isolation on clustered and high degree inputs") {
  // roots 1 +- 10^-6 style cluster: (t - 1)^2 - 10^-12 is reducible, use t^2 - 2t + (1 - 2*10^-12) scaled
  std::vector<Rational> c{Rational(1) - Rational(2, Integer("1000000000000")), Rational(-2), Rational(1)};
  const auto boxes = isolateRoots(PolyQ(c), 10);
  CHECK(boxes.size() == 2);
  CHECK(!intersects(boxes[0], boxes[1]));
  // cyclotomic of degree 24
  const auto cyc = isolateRoots(toRational(cyclotomic(35)), 20);
  CHECK(cyc.size() == 24);
  for (const auto& b : cyc) {
    const Interval n = normSquared(b);
    CHECK(n.lo <= 1);
    CHECK(n.hi >= 1);
  }
}

TEST_CASE("algebraic products") {
  const AlgebraicNumber g = goldenSquare();
  const AlgebraicNumber g2 = power(g, 2);
  CHECK(g2.minpoly() == P({1, -7, 1}));
  CHECK(std::abs(approx(g2) - (7 + 3 * std::sqrt(5.0)) / 2) < 1e-12);
  CHECK(AlgebraicNumber(Rational(2)) * AlgebraicNumber(Rational(3)) == AlgebraicNumber(Rational(6)));
  const auto s3 = AlgebraicNumber::roots(P({1, -4, 1}));  // 2 +- sqrt3
  CHECK(equalsOne(s3[0] * s3[1]));
  CHECK(equalsOne(algebraicProduct({s3[0], s3[1]}, {1, 1})));
  CHECK_FALSE(equalsOne(g));
  CHECK_FALSE(equalsOne(AlgebraicNumber(Rational(-1))));
  CHECK(inverse(g) == AlgebraicNumber::root(P({1, -3, 1}), 1));
  CHECK(equalsOne(algebraicProduct({g, g2}, {2, -1})));
  CHECK_THROWS_AS(power(AlgebraicNumber(Rational(0)), -1), Error);
  // sqrt2 * sqrt3 = sqrt6
  const auto r2 = AlgebraicNumber::root(P({-2, 0, 1}), 0), r3 = AlgebraicNumber::root(P({-3, 0, 1}), 0);
  const auto r6 = r2 * r3;
  CHECK(r6 == AlgebraicNumber::root(P({-6, 0, 1}), 0));
  CHECK(r2 + r2 == AlgebraicNumber::root(P({-8, 0, 1}), 0));
  CHECK(r2 - r2 == AlgebraicNumber(Rational(0)));
  CHECK(-r2 == AlgebraicNumber::root(P({-2, 0, 1}), 1));
}

TEST_CASE("algebraic product is associative and commutative") {
  std::vector<AlgebraicNumber> pool;
  for (const PolyQ& f : {P({-2, 0, 1}), P({-1, -2, 1}), P({1, -3, 1}), P({-1, -1, 1}), P({-4, -2, 1})})
    for (const auto& r : AlgebraicNumber::roots(f)) pool.push_back(r);
  pool.emplace_back(Rational(3, 2));
  pool.emplace_back(Rational(-5));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& a = pool[pick(rng)];
    const auto& b = pool[pick(rng)];
    const auto& c = pool[pick(rng)];
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("roots of unity") {
  const auto i = AlgebraicNumber::roots(P({1, 0, 1}));
  CHECK(rootOfUnityOrder(i[0]) == 4);
  CHECK(rootOfUnityOrder(AlgebraicNumber(Rational(-1))) == 2);
  CHECK(rootOfUnityOrder(AlgebraicNumber(Rational(1))) == 1);
  CHECK_FALSE(rootOfUnityOrder(goldenSquare()).has_value());
  CHECK(rootOfUnityOrder(AlgebraicNumber::root(toRational(cyclotomic(12)), 2)) == 12);
  CHECK(equalsOne(power(i[0], 4)));
  CHECK(power(i[0], 2) == AlgebraicNumber(Rational(-1)));
  CHECK(conjugate(i[0]) == i[1]);
  CHECK(approxIm(i[0]) > 0);
}

TEST_CASE("certified logarithms") {
  const Interval l1 = certifiedLog(AlgebraicNumber(Rational(1)), 40);
  CHECK(l1.contains(0));
  const Interval lg = certifiedLog(goldenSquare(), 30);
  CHECK(lg.width() <= Rational(1, Integer(1) << 30));
  CHECK(near(lg, std::log((3 + std::sqrt(5.0L)) / 2), 1e-9L));
  const Interval l2 = certifiedLog(AlgebraicNumber(Rational(2)), 50);
  CHECK(near(l2, 0.693147180559945309417232121458L, 1e-15L));
  CHECK(l2.width() <= Rational(1, Integer(1) << 50));
  // log|i| = 0
  const Interval li = certifiedLog(AlgebraicNumber::root(P({1, 0, 1}), 0), 30);
  CHECK(li.contains(0));
  CHECK(certifiedLog(goldenSquare(), 64).positive());
  const Interval arg = certifiedArg(AlgebraicNumber::root(P({1, 0, 1}), 0), 40);
  CHECK(near(arg, 1.57079632679489661923132169164L, 1e-11L));
  const Interval argNeg = certifiedArg(AlgebraicNumber(Rational(-3)), 40);
  CHECK(near(argNeg, 3.14159265358979323846264338328L, 1e-11L));
  // primitive 8th root in the lower half plane: arg = -pi/4 or -3pi/4
  const auto z8 = AlgebraicNumber::roots(P({1, 0, 0, 0, 1}));
  for (const auto& z : z8) {
    const Interval a = certifiedArg(z, 30);
    const double m = a.mid().convert_to<double>();
    CHECK(std::abs(std::remainder(m - M_PI / 4, M_PI / 2)) < 1e-8);
  }
}
