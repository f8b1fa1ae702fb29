#include <doctest.h>

#include "wcm/arithlocal.hpp"
#include "wcm/exact/modp.hpp"

#include <cmath>
#include <random>

using namespace wcm;
using namespace wcm::arithlocal;

namespace {

const Place inf = Place::infinity();
Place P(std::uint64_t p) { return Place::prime(p); }
QuadraticForm form(std::initializer_list<long> c) {
  QuadraticForm q;
  for (long a : c) q.diag.emplace_back(a);
  return q;
}
int productOverPlaces(const Rational& a, const Rational& b) {
  int prod = 1;
  for (const auto& v : relevantPlaces({a, b})) prod *= hilbertSymbol(a, b, v);
  return prod;
}
// Legendre's theorem with Holzer's bound: a x^2 + b y^2 = z^2 has a nonzero
// integer solution iff it has one with |x| <= sqrt|b|, |y| <= sqrt|a|.
bool globallySolvable(long a, long b) {
  const long bx = static_cast<long>(std::sqrt(std::abs(b))) + 1, by = static_cast<long>(std::sqrt(std::abs(a))) + 1;
  for (long x = 0; x <= bx; ++x)
    for (long y = 0; y <= by; ++y) {
      if (x == 0 && y == 0) continue;
      const long v = a * x * x + b * y * y;
      if (v < 0) continue;
      const long z = std::lround(std::sqrt(static_cast<double>(v)));
      for (long c = std::max(0L, z - 1); c <= z + 1; ++c)
        if (c * c == v) return true;
    }
  return false;
}
long squarefree(long n) {
  long sign = n < 0 ? -1 : 1, m = std::abs(n), out = 1;
  for (long p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  return sign * out * m;
}

}  // namespace

TEST_CASE("Hilbert symbol examples") {
  CHECK(hilbertSymbol(-1, -1, inf) == -1);
  CHECK(hilbertSymbol(-1, -1, P(2)) == -1);
  CHECK(hilbertSymbol(-1, -1, P(3)) == 1);
  for (long b : {-7L, -1L, 2L, 3L, 10L})
    for (const Place& v : {inf, P(2), P(3), P(5), P(7)}) CHECK(hilbertSymbol(1, b, v) == 1);
  CHECK_THROWS_AS(hilbertSymbol(0, 1, inf), Error);
  CHECK_THROWS_AS(Place::prime(9), Error);
}

TEST_CASE("Hilbert symbol at p against quadratic residues") {
  // (p, u)_p = (u / p) for a unit u; residues listed by squaring
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    std::vector<bool> square(p, false);
    for (std::uint64_t x = 1; x < p; ++x) square[(x * x) % p] = true;
    for (long u = 1; u < static_cast<long>(p); ++u) {
      CHECK(hilbertSymbol(Rational(long(p)), Rational(u), P(p)) == (square[static_cast<std::size_t>(u)] ? 1 : -1));
      CHECK(hilbertSymbol(Rational(u), Rational(u + long(p)), P(p)) == 1);
    }
  }
}

TEST_CASE("Hilbert symbols: product formula, symmetry, Legendre oracle") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> d(-60, 60);
  int compared = 0;
  for (int k = 0; k < 500; ++k) {
    long a = d(rng), b = d(rng);
    if (a == 0 || b == 0) continue;
    const Rational qa(a, 1 + std::abs(d(rng))), qb(b, 1 + std::abs(d(rng)));
    CHECK(productOverPlaces(qa, qb) == 1);
    for (const auto& v : relevantPlaces({qa, qb})) {
      CHECK(hilbertSymbol(qa, qb, v) == hilbertSymbol(qb, qa, v));
      CHECK(hilbertSymbol(qa * 9, qb, v) == hilbertSymbol(qa, qb, v));
      CHECK(hilbertSymbol(qa, qb * Rational(4, 25), v) == hilbertSymbol(qa, qb, v));
      CHECK(hilbertSymbol(qa, -qa, v) == 1);
    }
    const long sa = squarefree(a), sb = squarefree(b);
    bool everywhere = true;
    for (const auto& v : relevantPlaces({Rational(sa), Rational(sb)}))
      everywhere = everywhere && hilbertSymbol(sa, sb, v) == 1;
    CHECK(everywhere == globallySolvable(sa, sb));
    ++compared;
  }
  CHECK(compared > 400);
}

TEST_CASE("Witt index examples") {
  for (const Place& v : {inf, P(2), P(3), P(5)}) CHECK(wittIndex(form({1, -1}), v) == 1);
  const auto q = form({1, 1, 1, 1, -1, -1, -1});
  CHECK(wittIndex(q, inf) == 3);
  CHECK(wittIndex(q, P(2)) == 3);
  CHECK(wittIndex(form({1, 1, 1, 1, 1, 1, 1}), inf) == 0);
  // x^2 + y^2 + z^2 is anisotropic only at 2 (and the real place)
  CHECK(wittIndex(form({1, 1, 1}), P(2)) == 0);
  CHECK(wittIndex(form({1, 1, 1}), P(3)) == 1);
  // norm form of the Hamilton quaternions
  CHECK(wittIndex(form({1, 1, 1, 1}), P(2)) == 0);
  CHECK(wittIndex(form({1, 1, 1, 1}), P(5)) == 2);
  CHECK(wittIndex(form({1, 1, 1, 1, 1}), P(2)) == 1);
  CHECK_THROWS_AS(wittIndex(QuadraticForm{}, inf), Error);
}

TEST_CASE("Witt index properties") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-30, 30), len(1, 6);
  for (int k = 0; k < 200; ++k) {
    QuadraticForm q;
    const long n = len(rng);
    while (static_cast<long>(q.diag.size()) < n) {
      const long a = d(rng);
      if (a != 0) q.diag.emplace_back(a, 1 + std::abs(d(rng)));
    }
    QuadraticForm qh = q;
    qh.diag.push_back(Rational(d(rng) == 0 ? 3 : 5));
    qh.diag.push_back(-qh.diag.back());
    QuadraticForm scaled = q;
    for (auto& a : scaled.diag) a *= Rational(49, 4);
    for (const auto& v : relevantPlaces(q.diag)) {
      const int w = wittIndex(q, v);
      CHECK(w >= 0);
      CHECK(2 * w <= n);
      CHECK(wittIndex(qh, v) == w + 1);
      CHECK(wittIndex(scaled, v) == w);
      if (n >= 5 && !v.infinite()) CHECK(w >= 1);
    }
  }
  // ternary forms: isotropic everywhere iff isotropic over Q (Legendre oracle)
  for (int k = 0; k < 150; ++k) {
    const long a = squarefree(d(rng) == 0 ? 1 : d(rng) | 1), b = squarefree(d(rng) | 1);
    if (a == 0 || b == 0) continue;
    bool local = true;
    for (const auto& v : relevantPlaces({Rational(a), Rational(b)}))
      local = local && wittIndex(QuadraticForm{{Rational(a), Rational(b), Rational(-1)}}, v) == 1;
    CHECK(local == globallySolvable(a, b));
  }
}

TEST_CASE("quaternion algebras") {
  for (const Place& v : {inf, P(2), P(3), P(5), P(7)}) CHECK(quaternionSplits({1, 1}, v));
  CHECK_FALSE(quaternionSplits({-1, -1}, inf));
  CHECK_FALSE(quaternionSplits({-1, -1}, P(2)));
  CHECK(quaternionSplits({-1, -1}, P(3)));
  int ramified = 0;
  for (const auto& v : relevantPlaces({-1, -1})) ramified += quaternionSplits({-1, -1}, v) ? 0 : 1;
  CHECK(ramified == 2);
}

TEST_CASE("twins") {
  const auto split = form({1, 1, 1, 1, -1, -1, -1});
  const auto a = twins(split, {1, 1}, false);
  CHECK(a.twins);
  CHECK(a.n == 3);
  REQUIRE(a.table.size() == 2);
  CHECK(a.table[0].place == inf);
  CHECK(a.table[0].bSplit);
  CHECK(a.table[0].cSplit);
  CHECK(a.table[1].place == P(2));
  CHECK(a.table[1].wittIndex == 3);
  CHECK(a.table[1].agree);

  const auto definite = twins(form({1, 1, 1, 1, 1, 1, 1}), {-1, -1}, true);
  CHECK_FALSE(definite.twins);
  CHECK(definite.table[0].bAnisotropic);
  CHECK(definite.table[0].cAnisotropic);
  CHECK(definite.table[0].agree);
  CHECK(definite.table[1].bSplit);
  CHECK_FALSE(definite.table[1].cSplit);
  CHECK_FALSE(definite.table[1].agree);

  for (bool flag : {false, true}) {
    const auto hamilton = twins(split, {-1, -1}, flag);
    CHECK_FALSE(hamilton.twins);
    CHECK_FALSE(hamilton.table[0].agree);
    CHECK_FALSE(hamilton.table[1].agree);
  }

  // a form ramified at 3 on the orthogonal side
  const auto r = twins(form({1, 1, 1, 1, -1, -1, -3}), {1, 1}, false);
  REQUIRE(r.table.size() == 3);
  CHECK(r.table[2].place == P(3));
  CHECK(r.table[2].bSplit == (r.table[2].wittIndex == 3));
  CHECK(r.twins == (r.table[1].bSplit && r.table[2].bSplit));

  // invariance under square rescaling
  for (const auto& [q, h] : std::vector<std::pair<QuadraticForm, QuaternionAlgebra>>{
           {split, {1, 1}}, {split, {-1, 3}}, {form({1, 2, 3, 5, -7, 1, -1}), {2, 5}}, {form({1, 1, 1, 1, 1, 1, 1}), {-1, -1}}}) {
    QuadraticForm q4 = q;
    for (auto& c : q4.diag) c *= 4;
    const QuaternionAlgebra h2{h.a * 9, h.b * Rational(1, 4)};
    CHECK(twins(q, h, true).twins == twins(q4, h2, true).twins);
    CHECK(twins(q, h, false).twins == twins(q4, h2, false).twins);
  }
  CHECK_THROWS_AS(twins(form({1, 1, 1, 1, -1}), {1, 1}, false), Error);
  CHECK_THROWS_AS(twins(form({1, 1, 1, 1, -1, -1, -1, 1}), {1, 1}, false), Error);
}

TEST_CASE("B/C torus correspondence and fixed dimension") {
  const auto poly = [](std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long a : c) v.emplace_back(a);
    return exact::PolyQ(v);
  };
  const auto f = poly({1, -3, 1, -3, 1});
  const auto g = bcTorusCorrespondence(f);
  CHECK(g == poly({-1, 4, -4, 4, -4, 1}));
  CHECK(bcTorusCorrespondence(poly({1, -3, 1})) == poly({-1, 1}) * poly({1, -3, 1}));
  try {
    bcTorusCorrespondence(poly({-1, 0, 1}));
    FAIL("expected RootAtOne");
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::RootAtOne));
  }
  try {
    bcTorusCorrespondence(poly({1, 2, 1}) * poly({1, 2, 1}));
    FAIL("expected NotSquarefree");
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::NotSquarefree));
  }
  try {
    bcTorusCorrespondence(poly({2, -3, 1, 1, 1}));
    FAIL("expected NotPalindromic");
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::NotPalindromic));
  }
  CHECK(fixedDimension(f) == 2);
  CHECK(fixedDimension(g) == 3);
  CHECK(fixedDimension(poly({1, 1}) * poly({1, -3, 1})) == 2);
  CHECK_THROWS_AS(fixedDimension(poly({2, 1})), Error);
  for (const auto& h : {poly({1, 1, 1}), poly({1, -3, 1}), poly({1, 0, 1}), f, poly({1, 1, 1, 1, 1}),
                        poly({1, 2, 3, 2, 1}) + poly({0, 0, 1}), poly({1, -1, 1, -1, 1, -1, 1})}) {
    if (!exact::isSquarefree(h) || h(Rational(1)) == 0) continue;
    CHECK(fixedDimension(bcTorusCorrespondence(h)) == fixedDimension(h) + 1);
  }
}
