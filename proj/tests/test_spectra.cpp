#include <doctest.h>

#include "wcm/exact/linalg.hpp"
#include "wcm/spectra.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <random>
#include <set>

using namespace wcm;
using namespace wcm::spectra;
using rootsys::Family;
using Float = boost::multiprecision::cpp_bin_float_50;

namespace {

MatrixQ M2(long a, long b, long c, long d) {
  MatrixQ m(2, 2);
  m << Rational(a), Rational(b), Rational(c), Rational(d);
  return m;
}
SemisimpleElement sl2(const MatrixQ& m) { return {m, weakcomm::GroupDescriptor::SL(2)}; }
Float toFloat(const Rational& q) { return Float(num(q).str()) / Float(den(q).str()); }
bool encloses(const exact::Interval& iv, const Float& x, const Float& slack) {
  return toFloat(iv.lo) - slack <= x && x <= toFloat(iv.hi) + slack;
}
// t > 1 with t + 1/t = tr
Float bigRoot(const Float& tr) { return (tr + sqrt(tr * tr - 4)) / 2; }

}  // namespace

TEST_CASE("hyperbolic length of [[2,1],[1,1]]") {
  const auto l = hyperbolicLength(sl2(M2(2, 1, 1, 1)), 64);
  const Float oracle = 2 * log(bigRoot(Float(3)));
  CHECK(encloses(l.numeric, oracle, Float(0)));
  CHECK(encloses(l.numeric, Float("1.9248473002"), Float("1e-10")));
  CHECK(l.numeric.width() <= Rational(1, 1000000000));
  CHECK(l.t.minpoly() == exact::PolyQ(std::vector<Rational>{1, -3, 1}));
  const auto neg = hyperbolicLength(sl2(M2(-2, -1, -1, -1)), 64);
  CHECK(neg.t == l.t);
  CHECK((neg.numeric == l.numeric));
  CHECK_THROWS_AS(hyperbolicLength(sl2(M2(1, 1, 0, 1))), Error);
  CHECK_THROWS_AS(hyperbolicLength(sl2(M2(0, -1, 1, 1))), Error);
}

TEST_CASE("hyperbolic length invariants") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-6, 6);
  for (const MatrixQ& g : {M2(2, 1, 1, 1), M2(3, 2, 1, 1), M2(5, 2, 2, 1), M2(1, 3, 1, 4)}) {
    const auto base = hyperbolicLength(sl2(g));
    for (int k = 0; k < 5; ++k) {
      MatrixQ h = M2(d(rng), d(rng), d(rng), d(rng));
      if (exact::determinant(h) == 0) continue;
      h(0, 1) /= Rational(7);
      if (exact::determinant(h) == 0) continue;
      const MatrixQ c = h * g * exact::inverse(h);
      CHECK(hyperbolicLength(sl2(c)).t == base.t);
    }
    CHECK(hyperbolicLength(sl2(g * g)).t == exact::power(base.t, 2));
    CHECK(hyperbolicLength(sl2(g * g * g)).t == exact::power(base.t, 3));
  }
}

TEST_CASE("rational length spectrum") {
  const auto s = rationalLengthSpectrum({M2(2, 1, 1, 1)}, 3);
  REQUIRE(s.entries.size() == 3);
  const auto t = s.entries[0].length.t;
  CHECK(s.entries[1].length.t == exact::power(t, 2));
  CHECK(s.entries[2].length.t == exact::power(t, 3));
  CHECK(s.entries[0].word == std::vector<int>{0});
  CHECK(rationalLengthSpectrum({M2(2, 1, 1, 1)}, 0).entries.empty());
  CHECK(rationalLengthSpectrum({M2(1, 1, 0, 1)}, 5).entries.empty());
  CHECK_THROWS_AS(rationalLengthSpectrum({M2(2, 0, 0, 1)}, 2), Error);

  const MatrixQ a = M2(1, 2, 0, 1), b = M2(1, 0, 2, 1);
  const auto ab = rationalLengthSpectrum({a, b}, 4), ba = rationalLengthSpectrum({b, a}, 4);
  REQUIRE(ab.entries.size() == ba.entries.size());
  for (std::size_t i = 0; i < ab.entries.size(); ++i) CHECK(ab.entries[i].length.t == ba.entries[i].length.t);
  // every stored word reproduces its t
  for (const auto& e : ab.entries) {
    MatrixQ m = MatrixQ::Identity(2, 2);
    for (int l : e.word) m = m * (l % 2 == 0 ? ab.generators[l / 2] : exact::inverse(ab.generators[l / 2]));
    CHECK(hyperbolicLength(sl2(m)).t == e.length.t);
  }
  std::set<std::string> keys;
  for (const auto& e : ab.entries) keys.insert(e.length.t.str());
  CHECK(keys.size() == ab.entries.size());
}

TEST_CASE("ratio rationality") {
  const auto g = hyperbolicLength(sl2(M2(2, 1, 1, 1)));
  const auto g2 = hyperbolicLength(sl2(M2(5, 3, 3, 2)));
  const auto g3 = hyperbolicLength(sl2(M2(13, 8, 8, 5)));
  const auto r = ratioRational(g, g2, 10);
  REQUIRE(r);
  CHECK(r->m == 2);
  CHECK(r->n == 1);
  CHECK(r->lengthRatio == Rational(1, 2));
  const auto self = ratioRational(g, g, 10);
  REQUIRE(self);
  CHECK(self->m == 1);
  CHECK(self->n == 1);
  const auto back = ratioRational(g2, g, 10);
  REQUIRE(back);
  CHECK(back->m == 1);
  CHECK(back->n == 2);
  // g^2 vs g^3: t^6 common
  const auto r23 = ratioRational(g2, g3, 10);
  REQUIRE(r23);
  CHECK(r23->m == 3);
  CHECK(r23->n == 2);
  const auto r13 = ratioRational(g, g3, 10);
  REQUIRE(r13);
  CHECK(r13->lengthRatio == r->lengthRatio * r23->lengthRatio);

  const auto s = makeLength(exact::AlgebraicNumber::root(exact::PolyQ(std::vector<Rational>{1, -4, 1}), 0));
  CHECK_FALSE(ratioRational(g, s, 20));
  const Float lt = log(bigRoot(Float(3))), ls = log(bigRoot(Float(4)));
  int near = 0;
  for (int m = 1; m <= 20; ++m)
    for (int n = 1; n <= 20; ++n)
      if (abs(m * lt - n * ls) < Float("1e-6")) ++near;
  CHECK(near == 0);
  CHECK_THROWS_AS(makeLength(exact::AlgebraicNumber(Rational(1, 2))), Error);
}

TEST_CASE("length-commensurable samples") {
  const auto s1 = rationalLengthSpectrum({M2(2, 1, 1, 1)}, 2);
  const auto s2 = rationalLengthSpectrum({M2(5, 3, 3, 2)}, 2);
  CHECK(lengthCommensurableSamples(s1, s2, 10).aggregate);
  CHECK(lengthCommensurableSamples(s1, s1, 10).aggregate);
  const auto s3 = rationalLengthSpectrum({M2(2, 3, 1, 2)}, 2);
  const auto cmp = lengthCommensurableSamples(s1, s3, 20);
  CHECK_FALSE(cmp.aggregate);
  for (const auto& row : cmp.table)
    for (const auto& v : row) CHECK_FALSE(v);
  CHECK_THROWS_AS(lengthCommensurableSamples(s1, SpectrumSample{}, 10), Error);
}

TEST_CASE("lambda for split tori") {
  using exact::AlgebraicNumber;
  const SplitTorusElement a1({Family::A, 1}, {AlgebraicNumber(Rational(2)), AlgebraicNumber(Rational(1, 2))});
  const auto l = lambdaGamma(a1, 80);
  const Float log2 = log(Float(2));
  CHECK(encloses(l.value, 8 * log2 * log2, Float(0)));
  REQUIRE(l.form);
  CHECK(l.bases == std::vector<Integer>{2});
  CHECK((*l.form)(0, 0) == 8);

  const SplitTorusElement trivial({Family::C, 2}, std::vector<AlgebraicNumber>(4, AlgebraicNumber(Rational(1))));
  CHECK(lambdaGamma(trivial).value.contains(0));
  CHECK(lambdaGamma(trivial).value.width() == 0);

  // same coordinates (2, 3, 5) in B3 and C3
  std::vector<AlgebraicNumber> c3, b3{AlgebraicNumber(Rational(1))};
  for (long v : {2L, 3L, 5L}) {
    c3.emplace_back(Rational(v));
    c3.emplace_back(Rational(1, v));
    b3.emplace_back(Rational(1, v));
    b3.emplace_back(Rational(v));
  }
  const auto lc = lambdaGamma(SplitTorusElement({Family::C, 3}, c3));
  const auto lb = lambdaGamma(SplitTorusElement({Family::B, 3}, b3));
  REQUIRE(lc.form);
  REQUIRE(lb.form);
  CHECK(*lc.form == *lb.form * Rational(8, 5));
  const Float s2 = log(Float(2)) * log(Float(2)) + log(Float(3)) * log(Float(3)) + log(Float(5)) * log(Float(5));
  CHECK(encloses(lc.value, 16 * s2, Float(0)));  // (4n + 4) |x|^2
  CHECK(encloses(lb.value, 10 * s2, Float(0)));  // (4n - 2) |x|^2

  CHECK_THROWS_AS(SplitTorusElement({Family::A, 1}, {AlgebraicNumber(Rational(2)), AlgebraicNumber(Rational(2))}),
                  Error);
  CHECK_THROWS_AS(SplitTorusElement({Family::A, 2}, {AlgebraicNumber(Rational(2)), AlgebraicNumber(Rational(1, 2))}),
                  Error);
  CHECK_THROWS_AS(SplitTorusElement({Family::C, 1}, {AlgebraicNumber(Rational(2)), AlgebraicNumber(Rational(3))}),
                  Error);
}

TEST_CASE("B/C scaling ratio") {
  CHECK(bcScalingCheck(3, (VectorQ(3) << 1, 2, 3).finished()) == Rational(8, 5));
  CHECK(bcScalingCheck(4, (VectorQ(4) << 1, 0, 0, 0).finished()) == Rational(10, 7));
  CHECK(bcScalingCheck(2, (VectorQ(2) << 1, 1).finished()) == 2);
  CHECK_THROWS_AS(bcScalingCheck(3, VectorQ::Zero(3)), Error);
  CHECK_THROWS_AS(bcScalingCheck(3, VectorQ::Ones(2)), Error);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int n = 2; n <= 8; ++n)
    for (int k = 0; k < 20; ++k) {
      VectorQ x(n);
      for (int i = 0; i < n; ++i) x[i] = Rational(d(rng), 1 + std::abs(d(rng)));
      if (x.isZero()) x[0] = 1;
      // closed forms (4n + 4)|x|^2 and (4n - 2)|x|^2
      CHECK(bcScalingCheck(n, x) == Rational(4 * n + 4, 4 * n - 2));
      CHECK(rootsys::quadraticSum<Rational>({Family::C, n}, x) == Rational(4 * n + 4) * x.squaredNorm());
    }
}
