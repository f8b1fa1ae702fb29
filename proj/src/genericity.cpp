#include "wcm/genericity.hpp"

#include "wcm/exact/factor.hpp"
#include "wcm/exact/linalg.hpp"
#include "wcm/exact/modp.hpp"
#include "wcm/parallel.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_set>

namespace wcm::genericity {

using exact::PolyModP;

int rankFromDegree(Family family, int degree) {
  switch (family) {
    case Family::A:
      if (degree >= 2) return degree - 1;
      break;
    case Family::B:
      if (degree >= 5 && degree % 2 == 1) return (degree - 1) / 2;
      break;
    case Family::C:
      if (degree >= 4 && degree % 2 == 0) return degree / 2;
      break;
    case Family::D:
      if (degree >= 6 && degree % 2 == 0) return degree / 2;
      break;
    default:
      throw Error(ErrorKind::UnsupportedFamily, "Frobenius patterns need a classical family");
  }
  throw Error(ErrorKind::DimensionMismatch,
              "degree " + std::to_string(degree) + " does not fit family " + rootsys::toString(family));
}

bool isPalindromic(const PolyQ& f) { return !f.isZero() && f.reversed() == f; }

std::string toString(Status s) {
  switch (s) {
    case Status::Certified: return "Certified";
    case Status::Undetermined: return "Undetermined";
    case Status::NotRegular: return "NotRegular";
    case Status::FiniteOrder: return "FiniteOrder";
  }
  return "?";
}

namespace {

bool signedFamily(Family f) { return f == Family::B || f == Family::C || f == Family::D; }

// The part of the characteristic polynomial the Weyl group permutes: for B the
// forced eigenvalue 1 is removed once.
PolyQ weylPart(const PolyQ& charpoly, Family family) {
  PolyQ f = exact::monic(charpoly);
  if (family == Family::B) {
    if (exact::rootMultiplicity(f, Rational(1)) == 0)
      throw Error(ErrorKind::NotPalindromic, "type B polynomial without the eigenvalue 1");
    f = f / PolyQ::linear(Rational(1));
  }
  if (signedFamily(family) && !isPalindromic(f))
    throw Error(ErrorKind::NotPalindromic, "polynomial " + f.str() + " is not palindromic");
  return f;
}

WeylClassDescriptor patternOf(const PolyQ& f, Family family, std::uint64_t p) {
  if (signedFamily(family) && p == 2) throw Error(ErrorKind::BadPrime, "p = 2 does not separate t - 1 and t + 1");
  const auto fac = exact::factorModP(f, p);
  if (!fac.squarefree()) throw Error(ErrorKind::RamifiedPrime, "reduction mod " + std::to_string(p) + " is not squarefree");
  if (!signedFamily(family)) return WeylClassDescriptor(fac.degreePattern());
  const PolyModP minusOne(p, {p - 1, 1}), plusOne(p, {1, 1});
  std::vector<int> pos, neg;
  for (const auto& [g, m] : fac.factors) {
    if (g == minusOne) continue;
    if (g == plusOne) {
      neg.push_back(1);
      continue;
    }
    const PolyModP r = exact::reciprocal(g);
    if (r == g) {
      neg.push_back(g.degree() / 2);
    } else if (g < r) {
      pos.push_back(g.degree());
    }
  }
  return WeylClassDescriptor(pos, neg);
}

int expectedDegree(const RootSystemType& type) {
  switch (type.family) {
    case Family::A: return type.rank + 1;
    case Family::B: return 2 * type.rank + 1;
    case Family::C:
    case Family::D: return 2 * type.rank;
    default: throw Error(ErrorKind::UnsupportedFamily, type.name() + " has no matrix realization here");
  }
}

}  // namespace

WeylClassDescriptor frobeniusPattern(const PolyQ& charpoly, Family family, std::uint64_t p) {
  rankFromDegree(family, charpoly.degree());
  return patternOf(weylPart(charpoly, family), family, p);
}

GenericityCertificate certifyGenericPoly(const PolyQ& charpoly, const RootSystemType& type, std::uint64_t primeBudget) {
  if (charpoly.degree() != expectedDegree(type))
    throw Error(ErrorKind::DimensionMismatch, "degree " + std::to_string(charpoly.degree()) + " does not fit " + type.name());
  if (!exact::isSquarefree(charpoly)) throw Error(ErrorKind::NotSquarefree, "characteristic polynomial is not squarefree");
  const PolyQ f = weylPart(charpoly, type.family);
  const auto classes = rootsys::conjugacyClasses(type);
  GenericityCertificate cert;
  cert.type = type;
  cert.upToVeryEvenCollapse = type.family == Family::D;
  std::set<WeylClassDescriptor> seen;
  for (const auto& c : classes)
    if (c.isIdentity()) seen.insert(c);

  const auto primes = exact::primesInRange(2, primeBudget);
  constexpr std::size_t kChunk = 64;
  for (std::size_t start = 0; start < primes.size() && seen.size() < classes.size(); start += kChunk) {
    const std::size_t n = std::min(kChunk, primes.size() - start);
    std::vector<std::optional<WeylClassDescriptor>> patterns(n);
    parallelFor(n, [&](std::size_t i) {
      try {
        patterns[i] = patternOf(f, type.family, primes[start + i]);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BadPrime && e.kind() != ErrorKind::RamifiedPrime) throw;
      }
    });
    for (std::size_t i = 0; i < n && seen.size() < classes.size(); ++i) {
      if (!patterns[i]) continue;
      cert.primesUsed.push_back(primes[start + i]);
      if (std::find(classes.begin(), classes.end(), *patterns[i]) == classes.end())
        throw std::logic_error("Frobenius pattern " + patterns[i]->str() + " is not a class of " + type.name());
      if (seen.insert(*patterns[i]).second) cert.evidence.push_back({primes[start + i], *patterns[i]});
    }
  }
  cert.witnessed.assign(seen.begin(), seen.end());
  cert.status = seen.size() == classes.size() ? Status::Certified : Status::Undetermined;
  return cert;
}

GenericityCertificate isGenericElement(const SemisimpleElement& g, std::uint64_t primeBudget) {
  const bool so3 = g.group().kind == weakcomm::GroupKind::SO && g.group().dimension == 3;
  GenericityCertificate cert;
  cert.type = g.group().rootType();
  if (!weakcomm::isSemisimple(g) || !exact::isSquarefree(g.charpoly())) {
    cert.status = Status::NotRegular;
    return cert;
  }
  if (!weakcomm::hasInfiniteOrder(g)) {
    cert.status = Status::FiniteOrder;
    return cert;
  }
  const PolyQ f = so3 ? g.charpoly() / PolyQ::linear(Rational(1)) : g.charpoly();
  return certifyGenericPoly(f, cert.type, primeBudget);
}

namespace {

// Deterministic across standard libraries: only raw mt19937_64 output is used.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

PolyModP randomMonic(std::mt19937_64& rng, std::uint64_t p, int degree) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i < degree; ++i) c[static_cast<std::size_t>(i)] = below(rng, p);
  c.back() = 1;
  return PolyModP(p, std::move(c));
}

PolyModP randomPalindromic(std::mt19937_64& rng, std::uint64_t p, int half) {
  std::vector<std::uint64_t> c(2 * static_cast<std::size_t>(half) + 1);
  c[0] = c.back() = 1;
  for (int i = 1; i <= half; ++i) c[static_cast<std::size_t>(i)] = c[c.size() - 1 - static_cast<std::size_t>(i)] = below(rng, p);
  return PolyModP(p, std::move(c));
}

// Squarefree polynomial mod p whose Frobenius class is `target`.
PolyModP realizeClass(const WeylClassDescriptor& target, Family family, std::uint64_t p, std::mt19937_64& rng) {
  constexpr int kAttempts = 20000;
  std::set<PolyModP> used;
  const PolyModP minusOne(p, {p - 1, 1}), plusOne(p, {1, 1});
  used.insert(minusOne);
  used.insert(plusOne);
  PolyModP product = PolyModP::one(p);
  auto take = [&](auto&& draw, auto&& accept) {
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
      PolyModP g = draw();
      if (used.count(g) || !exact::isIrreducible(g) || !accept(g)) continue;
      used.insert(g);
      return g;
    }
    throw Error(ErrorKind::BudgetExhausted, "no suitable factor mod " + std::to_string(p));
  };
  if (!signedFamily(family)) {
    for (int d : target.positive)
      product = product * take([&] { return randomMonic(rng, p, d); }, [](const PolyModP&) { return true; });
    return product;
  }
  for (int d : target.positive) {
    const PolyModP g = take([&] { return randomMonic(rng, p, d); },
                            [&](const PolyModP& h) { return !(exact::reciprocal(h) == h) && !used.count(exact::reciprocal(h)); });
    const PolyModP r = exact::reciprocal(g);
    used.insert(r);
    product = product * g * r;
  }
  for (int d : target.negative)
    product = product * take([&] { return randomPalindromic(rng, p, d); }, [](const PolyModP&) { return true; });
  return product;
}

Integer symmetricMod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

}  // namespace

CongruenceSieve buildSieve(const RootSystemType& type, std::uint64_t primeBudget, std::uint64_t seed) {
  if (type.family != Family::A && type.family != Family::B && type.family != Family::C)
    throw Error(ErrorKind::UnsupportedFamily, "sieves are built for families A, B and C");
  std::vector<WeylClassDescriptor> targets;
  for (const auto& c : rootsys::conjugacyClasses(type))
    if (!c.isIdentity()) targets.push_back(c);
  const std::uint64_t minPrime = 4 * static_cast<std::uint64_t>(type.rank) + 7;
  auto primes = exact::primesInRange(minPrime, primeBudget);
  if (primes.size() < targets.size())
    throw Error(ErrorKind::BudgetExhausted, "need " + std::to_string(targets.size()) + " primes in [" +
                                                std::to_string(minPrime) + ", " + std::to_string(primeBudget) + "]");
  std::mt19937_64 rng(seed);
  for (std::size_t i = primes.size(); i > 1; --i) std::swap(primes[i - 1], primes[below(rng, i)]);

  CongruenceSieve sieve;
  sieve.type = type;
  const int degree = type.family == Family::A ? type.rank + 1 : 2 * type.rank;
  std::vector<Integer> coeffs(static_cast<std::size_t>(degree) + 1, Integer(0));
  Integer modulus = 1;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const std::uint64_t p = primes[i];
    sieve.constraints.emplace_back(p, targets[i]);
    const PolyModP local = realizeClass(targets[i], type.family, p, rng);
    // CRT step: x = c mod modulus, x = local mod p
    const Integer P = p;
    const Integer inv = exact::invmod(static_cast<std::uint64_t>(Integer(modulus % P).convert_to<unsigned long long>()), p);
    for (int k = 0; k <= degree; ++k) {
      Integer& c = coeffs[static_cast<std::size_t>(k)];
      Integer diff = (Integer(local[k]) - c) % P;
      if (diff < 0) diff += P;
      c += modulus * ((diff * inv) % P);
    }
    modulus *= P;
  }
  std::vector<Rational> q;
  for (const auto& c : coeffs) q.emplace_back(symmetricMod(c, modulus));
  PolyQ example(std::move(q));
  if (type.family == Family::B) example = example * PolyQ::linear(Rational(1));
  sieve.example = example;
  return sieve;
}

bool satisfiesSieve(const CongruenceSieve& sieve, const PolyQ& f) {
  for (const auto& [p, target] : sieve.constraints) {
    try {
      if (!(frobeniusPattern(f, sieve.type.family, p) == target)) return false;
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

WalkSample randomWalkSample(const std::vector<MatrixQ>& generators, const GroupDescriptor& group, int length,
                            int count, std::uint64_t seed, std::uint64_t primeBudget) {
  if (length < 0 || count < 0) throw Error(ErrorKind::InvalidArgument, "negative walk length or count");
  if (generators.empty() && length > 0) throw Error(ErrorKind::InvalidArgument, "random walk without generators");
  std::vector<MatrixQ> letters;
  for (const auto& g : generators) {
    if (!weakcomm::contains(group, g)) throw Error(ErrorKind::InvalidArgument, "generator not in " + group.name());
    letters.push_back(g);
    letters.push_back(exact::inverse(g));
  }
  WalkSample sample;
  sample.entries.resize(static_cast<std::size_t>(count));
  parallelFor(static_cast<std::size_t>(count), [&](std::size_t w) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(w), static_cast<std::uint32_t>(w >> 32)};
    std::mt19937_64 rng(seq);
    WalkEntry& e = sample.entries[w];
    e.matrix = MatrixQ::Identity(group.dimension, group.dimension);
    for (int i = 0; i < length; ++i) {
      const int letter = static_cast<int>(below(rng, letters.size()));
      e.word.push_back(letter);
      e.matrix = e.matrix * letters[static_cast<std::size_t>(letter)];
    }
    e.status = isGenericElement(SemisimpleElement(e.matrix, group), primeBudget).status;
  });
  std::size_t generic = 0;
  for (const auto& e : sample.entries) generic += e.status == Status::Certified;
  sample.genericProportion = count == 0 ? Rational(0) : Rational(static_cast<long>(generic), count);
  return sample;
}

bool sameAssociatedTorus(const SemisimpleElement& g1, const SemisimpleElement& g2, std::uint64_t primeBudget) {
  for (const auto* g : {&g1, &g2})
    if (isGenericElement(*g, primeBudget).status != Status::Certified)
      throw Error(ErrorKind::NotGeneric, "element is not certified generic of infinite order");
  return g1.matrix() * g2.matrix() == g2.matrix() * g1.matrix();
}

ModPClosure generatesModP(const std::vector<MatrixQ>& generators, std::uint64_t p) {
  if (p < 5 || !exact::isPrime(p)) throw Error(ErrorKind::BadPrime, "need a prime p >= 5, got " + std::to_string(p));
  if (generators.empty()) throw Error(ErrorKind::InvalidArgument, "no generators");
  const Eigen::Index n = generators.front().rows();
  for (const auto& g : generators)
    if (g.rows() != n || g.cols() != n || (n != 2 && n != 3))
      throw Error(ErrorKind::UnsupportedGroup, "closure is implemented for SL_2 and SL_3 only");
  ModPClosure out;
  const std::uint64_t p2 = p * p, p3 = p2 * p;
  out.groupOrder = n == 2 ? p * (p2 - 1) : p3 * (p2 - 1) * (p3 - 1);
  constexpr std::uint64_t kMaxOrder = 20'000'000;
  if (out.groupOrder > kMaxOrder)
    throw Error(ErrorKind::UnsupportedGroup, "SL_" + std::to_string(n) + "(F_" + std::to_string(p) + ") is too large to enumerate");

  const auto cells = static_cast<std::size_t>(n * n);
  using Elem = std::vector<std::uint64_t>;
  auto pack = [&](const Elem& e) {
    std::uint64_t key = 0;
    for (std::size_t i = cells; i-- > 0;) key = key * p + e[i];
    return key;
  };
  auto mul = [&](const Elem& a, const Elem& b) {
    Elem c(cells, 0);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        std::uint64_t s = 0;
        for (Eigen::Index k = 0; k < n; ++k) s += a[static_cast<std::size_t>(i * n + k)] * b[static_cast<std::size_t>(k * n + j)];
        c[static_cast<std::size_t>(i * n + j)] = s % p;
      }
    return c;
  };
  std::vector<Elem> gens;
  for (const auto& g : generators) {
    Elem e(cells);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        const Integer P = p;
        const Integer d = den(g(i, j)) % P;
        if (d == 0) throw Error(ErrorKind::BadPrime, "entry " + wcm::toString(g(i, j)) + " is not p-integral");
        Integer v = num(g(i, j)) % P;
        if (v < 0) v += P;
        const std::uint64_t dv = exact::invmod(d.convert_to<std::uint64_t>(), p);
        e[static_cast<std::size_t>(i * n + j)] = exact::mulmod(v.convert_to<std::uint64_t>(), dv, p);
      }
    gens.push_back(e);
  }
  Elem id(cells, 0);
  for (Eigen::Index i = 0; i < n; ++i) id[static_cast<std::size_t>(i * n + i)] = 1;
  for (const auto& g : gens) {
    // determinant mod p
    std::uint64_t det;
    if (n == 2) {
      det = (g[0] * g[3] + p2 - g[1] * g[2] % p) % p;
    } else {
      auto m = [&](int i, int j) { return g[static_cast<std::size_t>(i * 3 + j)]; };
      const std::uint64_t a = m(0, 0) * ((m(1, 1) * m(2, 2) + p2 - m(1, 2) * m(2, 1)) % p) % p;
      const std::uint64_t b = m(0, 1) * ((m(1, 0) * m(2, 2) + p2 - m(1, 2) * m(2, 0)) % p) % p;
      const std::uint64_t c = m(0, 2) * ((m(1, 0) * m(2, 1) + p2 - m(1, 1) * m(2, 0)) % p) % p;
      det = (a + p - b + c) % p;
    }
    if (det != 1) throw Error(ErrorKind::InvalidArgument, "reduction mod " + std::to_string(p) + " is not in SL");
  }
  std::unordered_set<std::uint64_t> seen{pack(id)};
  std::vector<Elem> frontier{id};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (const auto& a : frontier)
      for (const auto& g : gens) {
        Elem c = mul(a, g);
        if (seen.insert(pack(c)).second) next.push_back(std::move(c));
      }
    frontier = std::move(next);
  }
  out.closureOrder = seen.size();
  out.generates = out.closureOrder == out.groupOrder;
  return out;
}

DichotomyReport dichotomyCheck(const MatrixQ& g, const MatrixQ& x, const RootSystemType& type, std::uint64_t p,
                               std::uint64_t primeBudget) {
  auto violated = [](const std::string& what) { return Error(ErrorKind::HypothesisViolated, what); };
  if (g.rows() != g.cols() || x.rows() != g.rows() || x.cols() != g.cols())
    throw Error(ErrorKind::DimensionMismatch, "g and x must be square of the same size");
  const PolyQ cg = exact::characteristicPolynomial(g);
  if (!exact::evaluateAt(exact::squarefreePart(cg), g).isZero()) throw violated("g is not semisimple");
  GenericityCertificate cert;
  try {
    cert = certifyGenericPoly(cg, type, primeBudget);
  } catch (const Error& e) {
    throw violated(std::string("g is not generic: ") + e.what());
  }
  if (cert.status != Status::Certified) throw violated("g is not certified generic within the prime budget");
  auto finiteOrder = [](const MatrixQ& m) {
    const PolyQ c = exact::characteristicPolynomial(m);
    if (!exact::evaluateAt(exact::squarefreePart(c), m).isZero()) return false;  // unipotent part: infinite order
    for (const auto& l : exact::rootsWithMultiplicity(c, exact::kMaxInputDegree))
      if (!exact::rootOfUnityOrder(l)) return false;
    return true;
  };
  if (finiteOrder(g)) throw violated("g has finite order");
  if (finiteOrder(x)) throw violated("x has finite order");
  if (g * x == x * g) throw violated("x commutes with g, so x lies in T");

  DichotomyReport report;
  report.type = type;
  report.simplyLaced = rootsys::simplyLaced(type.family);
  if (report.simplyLaced) {
    report.conclusion = "dense";
    bool integral = true;
    for (const auto* m : {&g, &x})
      for (Eigen::Index i = 0; i < m->size(); ++i) integral = integral && den(m->data()[i]) == 1;
    if (integral && (g.rows() == 2 || g.rows() == 3) && exact::determinant(g) == 1 && exact::determinant(x) == 1)
      report.corroboration = generatesModP({g, x}, p);
  } else {
    report.conclusion = "G or G_T^>";
    report.longRootSubgroup = rootsys::longRootSubgroupType(type);
  }
  return report;
}

}  // namespace wcm::genericity
