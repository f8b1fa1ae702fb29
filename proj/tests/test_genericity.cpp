#include <doctest.h>

#include "oracles.hpp"
#include "wcm/exact/linalg.hpp"
#include "wcm/exact/modp.hpp"
#include "wcm/genericity.hpp"

#include <set>

using namespace wcm;
using namespace wcm::genericity;
using rootsys::Family;

namespace {

PolyQ P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long a : c) v.emplace_back(a);
  return PolyQ(std::move(v));
}
MatrixQ M2(long a, long b, long c, long d) {
  MatrixQ m(2, 2);
  m << Rational(a), Rational(b), Rational(c), Rational(d);
  return m;
}
SemisimpleElement sl2(long a, long b, long c, long d) { return {M2(a, b, c, d), GroupDescriptor::SL(2)}; }
MatrixQ companion(const PolyQ& f) {
  const int n = f.degree();
  MatrixQ m = MatrixQ::Zero(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) m(i, n - 1) = -f[i];
  return m;
}

// Irreducible factor degrees mod p by trial division over all monic
// polynomials, independent of the library factorizer. Coefficients ascending.
using Vec = std::vector<long>;
Vec trim(Vec a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}
bool divides(const Vec& d, Vec a, long p, Vec& quotient) {
  a = trim(a);
  if (a.size() < d.size()) return false;
  Vec q(a.size() - d.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const long c = a[k + d.size() - 1] % p;
    q[k] = c;
    for (std::size_t j = 0; j < d.size(); ++j) a[k + j] = ((a[k + j] - c * d[j]) % p + p) % p;
  }
  if (!trim(a).empty()) return false;
  quotient = q;
  return true;
}
std::vector<Vec> trialFactor(Vec f, long p) {
  std::vector<Vec> out;
  for (auto& c : f) c = ((c % p) + p) % p;
  for (int d = 1; static_cast<int>(f.size()) - 1 >= d;) {
    bool found = false;
    Vec g(static_cast<std::size_t>(d) + 1, 0);
    g[static_cast<std::size_t>(d)] = 1;
    long total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (long code = 0; code < total && !found; ++code) {
      long c = code;
      for (int i = 0; i < d; ++i) {
        g[static_cast<std::size_t>(i)] = c % p;
        c /= p;
      }
      Vec q;
      if (divides(g, f, p, q)) {
        out.push_back(g);
        f = q;
        found = true;
      }
    }
    if (!found) ++d;
  }
  return out;
}

}  // namespace

TEST_CASE("Frobenius patterns of t^3 - t - 1") {
  const PolyQ f = P({-1, -1, 0, 1});
  CHECK(frobeniusPattern(f, Family::A, 2) == WeylClassDescriptor({3}));
  CHECK(frobeniusPattern(f, Family::A, 5) == WeylClassDescriptor({2, 1}));
  // discriminant -23: ramified at 23
  CHECK_THROWS_AS(frobeniusPattern(f, Family::A, 23), Error);
  for (long p : {7L, 11L, 13L, 17L, 19L, 29L}) {
    std::vector<int> degrees;
    for (const auto& g : trialFactor({-1, -1, 0, 1}, p)) degrees.push_back(static_cast<int>(g.size()) - 1);
    std::sort(degrees.rbegin(), degrees.rend());
    CHECK(frobeniusPattern(f, Family::A, static_cast<std::uint64_t>(p)) == WeylClassDescriptor(degrees));
  }
}

TEST_CASE("signed Frobenius pattern of a palindromic quartic") {
  const Vec coeffs{1, -3, 1, -3, 1};
  const PolyQ f = P({1, -3, 1, -3, 1});
  int checked = 0;
  for (long p : {7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    const auto factors = trialFactor(coeffs, p);
    if (std::set<Vec>(factors.begin(), factors.end()).size() < factors.size()) {
      CHECK_THROWS_AS(frobeniusPattern(f, Family::C, static_cast<std::uint64_t>(p)), Error);
      continue;
    }
    ++checked;
    std::vector<int> pos, neg;
    std::set<Vec> seen;
    for (const auto& g : factors) {
      // reverse, then make monic
      Vec r(g.rbegin(), g.rend());
      long inv = 1;
      while ((inv * r.back()) % p != 1) ++inv;
      for (auto& c : r) c = (c * inv) % p;
      const int d = static_cast<int>(g.size()) - 1;
      if (r == g)
        neg.push_back(d / 2);
      else if (!seen.count(r))
        pos.push_back(d);
      seen.insert(g);
    }
    std::sort(pos.rbegin(), pos.rend());
    std::sort(neg.rbegin(), neg.rend());
    const auto pattern = frobeniusPattern(f, Family::C, static_cast<std::uint64_t>(p));
    CHECK(pattern == WeylClassDescriptor(pos, neg));
    CHECK(pattern.degree() == 2);
  }
  CHECK(checked >= 6);
  CHECK_THROWS_AS(frobeniusPattern(P({-1, -1, 0, 0, 1}), Family::C, 7), Error);
  // type B: forced eigenvalue 1 removed first
  const PolyQ b = f * P({-1, 1});
  CHECK(frobeniusPattern(b, Family::B, 7) == frobeniusPattern(f, Family::C, 7));
}

TEST_CASE("certification examples") {
  const auto cubic = certifyGenericPoly(P({-1, -1, 0, 1}), {Family::A, 2}, 100);
  CHECK((cubic.status == Status::Certified));
  CHECK(cubic.witnessed == rootsys::conjugacyClasses({Family::A, 2}));
  REQUIRE(cubic.evidence.size() == 2);
  CHECK(cubic.evidence[0].prime == 2);
  CHECK(cubic.evidence[0].pattern == WeylClassDescriptor({3}));
  CHECK(cubic.evidence[1].prime == 5);
  const auto cyclic = certifyGenericPoly(P({-1, -3, 0, 1}), {Family::A, 2}, 10000);
  CHECK((cyclic.status == Status::Undetermined));
  for (const auto& c : cyclic.witnessed) CHECK_FALSE(c == WeylClassDescriptor({2, 1}));
  CHECK((certifyGenericPoly(P({1, -3, 1}), {Family::A, 1}, 100).status == Status::Certified));
  CHECK_THROWS_AS(certifyGenericPoly(P({1, -2, 1}), {Family::A, 1}, 100), Error);
  const auto dense = certifyGenericPoly(P({-1, -1, 0, 1}), {Family::A, 2}, 1000);
  CHECK(dense.witnessed.size() == 3);
}

TEST_CASE("certification agrees with the resolvent Galois oracle") {
  const std::vector<std::pair<PolyQ, RootSystemType>> corpus{
      {P({1, -3, 1}), {Family::A, 1}},         {P({-2, 0, 1}), {Family::A, 1}},
      {P({-1, -1, 0, 1}), {Family::A, 2}},     {P({-1, -3, 0, 1}), {Family::A, 2}},
      {P({-2, 0, 0, 1}), {Family::A, 2}},      {P({1, 1, 0, 0, 1}), {Family::A, 3}},
      {P({1, 0, 0, 0, 1}), {Family::A, 3}},    {P({1, 0, -10, 0, 1}), {Family::A, 3}},
      {P({-2, 0, 0, 0, 1}), {Family::A, 3}},   {P({1, -3, 1, -3, 1}), {Family::C, 2}},
      {P({1, 1, 1, 1, 1}), {Family::C, 2}},    {P({1, -1, -3, -1, 1}), {Family::C, 2}},
  };
  for (const auto& [f, type] : corpus) {
    const int order = oracle::galoisGroupOrderByResolvent(f);
    const bool full = Integer(order) == rootsys::weylOrder(type);
    GenericityCertificate cert;
    try {
      cert = certifyGenericPoly(f, type, 3000);
    } catch (const Error&) {
      cert.status = Status::Undetermined;
    }
    INFO(f.str(), " order ", order);
    CHECK(((cert.status == Status::Certified) == full));
  }
}

TEST_CASE("generic elements") {
  CHECK((isGenericElement(sl2(2, 1, 1, 1), 100).status == Status::Certified));
  CHECK((isGenericElement(sl2(0, -1, 1, 0), 100).status == Status::FiniteOrder));
  CHECK((isGenericElement(SemisimpleElement(MatrixQ::Identity(3, 3), GroupDescriptor::SL(3)), 100).status ==
        Status::NotRegular));
  CHECK((isGenericElement(sl2(1, 1, 0, 1), 100).status == Status::NotRegular));
}

TEST_CASE("congruence sieves") {
  const auto a2 = buildSieve({Family::A, 2}, 500, 1);
  CHECK(a2.constraints.size() == 2);
  CHECK(a2.constraints[0].first != a2.constraints[1].first);
  CHECK(buildSieve({Family::A, 1}, 500, 1).constraints.size() == 1);
  const auto b2 = buildSieve({Family::B, 2}, 500, 3);
  CHECK(b2.constraints.size() == 4);
  for (const auto& sieve : {a2, b2, buildSieve({Family::C, 3}, 2000, 9), buildSieve({Family::A, 3}, 2000, 4)}) {
    CHECK(satisfiesSieve(sieve, sieve.example));
    std::uint64_t maxPrime = 0;
    std::set<std::uint64_t> primes;
    for (const auto& [p, c] : sieve.constraints) {
      maxPrime = std::max(maxPrime, p);
      primes.insert(p);
      CHECK_FALSE(c.isIdentity());
    }
    CHECK(primes.size() == sieve.constraints.size());
    CHECK((certifyGenericPoly(sieve.example, sieve.type, maxPrime).status == Status::Certified));
  }
  CHECK(buildSieve({Family::A, 2}, 500, 1).example == a2.example);
  CHECK_THROWS_AS(buildSieve({Family::B, 3}, 30, 1), Error);
  CHECK_THROWS_AS(buildSieve({Family::D, 4}, 3000, 1), Error);
}

TEST_CASE("random walks") {
  const std::vector<MatrixQ> gens{M2(1, 2, 0, 1), M2(1, 0, 2, 1)};
  const auto sample = randomWalkSample(gens, GroupDescriptor::SL(2), 20, 200, 42, 100);
  CHECK(sample.entries.size() == 200);
  CHECK(sample.genericProportion >= 0);
  CHECK(sample.genericProportion <= 1);
  for (const auto& e : sample.entries) {
    const Rational tr = e.matrix.trace();
    if (abs(tr) == 2) CHECK((e.status != Status::Certified));
    if (abs(tr) < 2) CHECK((e.status == Status::FiniteOrder || e.status == Status::NotRegular));
  }
  const auto again = randomWalkSample(gens, GroupDescriptor::SL(2), 20, 200, 42, 100);
  for (std::size_t i = 0; i < 200; ++i) CHECK(again.entries[i].word == sample.entries[i].word);
  const auto empty = randomWalkSample(gens, GroupDescriptor::SL(2), 0, 5, 1, 100);
  CHECK(empty.genericProportion == 0);
  for (const auto& e : empty.entries) CHECK(e.matrix == MatrixQ::Identity(2, 2));
  const auto powers = randomWalkSample({M2(2, 1, 1, 1)}, GroupDescriptor::SL(2), 5, 50, 7, 100);
  for (const auto& e : powers.entries) {
    int net = 0;
    for (int l : e.word) net += l == 0 ? 1 : -1;
    CHECK(((e.status == Status::Certified) == (net != 0)));
  }
}

TEST_CASE("associated tori") {
  const auto g = sl2(2, 1, 1, 1);
  const SemisimpleElement g3(g.matrix() * g.matrix() * g.matrix(), GroupDescriptor::SL(2));
  CHECK(sameAssociatedTorus(g, g3, 100));
  CHECK(sameAssociatedTorus(g3, g, 100));
  CHECK_FALSE(sameAssociatedTorus(g, sl2(2, 1, 3, 2), 100));
  const MatrixQ h = M2(1, 1, 0, 1);
  const SemisimpleElement conj(h * g.matrix() * exact::inverse(h), GroupDescriptor::SL(2));
  CHECK_FALSE(sameAssociatedTorus(g, conj, 100));
  CHECK_THROWS_AS(sameAssociatedTorus(g, sl2(0, -1, 1, 0), 100), Error);
}

TEST_CASE("closure mod p") {
  const auto both = generatesModP({M2(2, 1, 1, 1), M2(1, 1, 0, 1)}, 5);
  CHECK(both.generates);
  CHECK(both.closureOrder == 120);
  const auto cyclic = generatesModP({M2(2, 1, 1, 1)}, 5);
  CHECK_FALSE(cyclic.generates);
  CHECK(cyclic.closureOrder < 120);
  CHECK_FALSE(generatesModP({M2(1, 1, 0, 1), M2(2, 1, 0, 3)}, 5).generates);
  CHECK_THROWS_AS(generatesModP({M2(2, 1, 1, 1)}, 3), Error);
  CHECK_THROWS_AS(generatesModP({M2(2, 1, 1, 1)}, 9), Error);
  MatrixQ e12 = MatrixQ::Identity(3, 3), e23 = MatrixQ::Identity(3, 3), e31 = MatrixQ::Identity(3, 3);
  e12(0, 1) = 1;
  e23(1, 2) = 1;
  e31(2, 0) = 1;
  const auto sl3 = generatesModP({e12, e23, e31}, 5);
  CHECK(sl3.groupOrder == 372000);
  CHECK(sl3.generates);
}

TEST_CASE("dichotomy checks") {
  const MatrixQ g = M2(2, 1, 1, 1), x = M2(1, 1, 0, 1);
  const auto r = dichotomyCheck(g, x, {Family::A, 1}, 5, 100);
  CHECK(r.conclusion == "dense");
  REQUIRE(r.corroboration);
  CHECK(r.corroboration->closureOrder == 120);
  try {
    dichotomyCheck(g, g * g, {Family::A, 1}, 5, 100);
    FAIL("expected HypothesisViolated");
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::HypothesisViolated));
    CHECK(std::string(e.what()).find("commutes") != std::string::npos);
  }
  // a C3-generic palindromic sextic found by search
  std::optional<PolyQ> sextic;
  for (long a = -3; a <= 3 && !sextic; ++a)
    for (long b = -3; b <= 3 && !sextic; ++b)
      for (long c = -3; c <= 3 && !sextic; ++c) {
        const PolyQ f = P({1, a, b, c, b, a, 1});
        if (!exact::isSquarefree(f)) continue;
        if (certifyGenericPoly(f, {Family::C, 3}, 500).status == Status::Certified) sextic = f;
      }
  REQUIRE(sextic);
  MatrixQ unip = MatrixQ::Identity(6, 6);
  unip(0, 1) = 1;
  const auto c3 = dichotomyCheck(companion(*sextic), unip, {Family::C, 3}, 5, 500);
  CHECK(c3.longRootSubgroup == "(A1)^3");
  CHECK(c3.conclusion == "G or G_T^>");
  CHECK_FALSE(c3.corroboration);
}
