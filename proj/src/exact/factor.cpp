#include "wcm/exact/factor.hpp"

#include "wcm/exact/modp.hpp"

#include <algorithm>

// Zassenhaus factorization: factor mod a small prime, Hensel-lift the factor
// tree to p^k beyond the Mignotte-style coefficient bound, then recombine.
namespace wcm::exact {

namespace {

Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  return r < 0 ? Integer(r + m) : r;
}

Integer symmetricMod(const Integer& a, const Integer& m) {
  Integer r = mod(a, m);
  return r > m / 2 ? Integer(r - m) : r;
}

PolyZ reduceMod(const PolyZ& f, const Integer& m) {
  std::vector<Integer> c;
  for (const auto& a : f.coeffs()) c.push_back(mod(a, m));
  return PolyZ(std::move(c));
}

PolyZ lift(const PolyModP& f) {
  std::vector<Integer> c;
  for (auto a : f.coeffs()) c.emplace_back(a);
  return PolyZ(std::move(c));
}

PolyModP toModP(const PolyZ& f, std::uint64_t p) { return reduce(f, p); }

PolyZ productMod(const std::vector<PolyModP>& gs, std::size_t lo, std::size_t hi) {
  PolyModP acc = PolyModP::one(gs.front().modulus());
  for (std::size_t i = lo; i < hi; ++i) acc = acc * gs[i];
  return lift(acc);
}

// Lifts a monic factorization F = prod gs (mod p) to mod p^k. F is monic mod p^k.
void henselTree(const PolyZ& F, const std::vector<PolyModP>& gs, std::size_t lo, std::size_t hi,
                std::uint64_t p, const Integer& pk, std::vector<PolyZ>& out) {
  if (hi - lo == 1) {
    out.push_back(reduceMod(F, pk));
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  const PolyModP g0 = toModP(productMod(gs, lo, mid), p);
  const PolyModP h0 = toModP(productMod(gs, mid, hi), p);
  const auto [g, s, t] = extendedGcd(g0, h0);
  PolyZ G = lift(g0), H = lift(h0);
  for (Integer m = p; m < pk; m *= p) {
    PolyZ e = reduceMod(F - G * H, pk);
    std::vector<Integer> ec;
    for (const auto& a : e.coeffs()) ec.push_back(a / m);
    const PolyModP eBar = toModP(PolyZ(std::move(ec)), p);
    const PolyModP dH = (eBar * s) % h0;
    const PolyModP dG = (eBar * t) % g0;
    G = reduceMod(G + lift(dG) * m, pk);
    H = reduceMod(H + lift(dH) * m, pk);
  }
  henselTree(G, gs, lo, mid, p, pk, out);
  henselTree(H, gs, mid, hi, p, pk, out);
}

bool exactDivide(const PolyZ& f, const PolyZ& g, PolyZ& quotient) {
  auto [q, r] = divmod(toRational(f), toRational(g));
  if (!r.isZero()) return false;
  std::vector<Integer> c;
  for (const auto& a : q.coeffs()) {
    if (den(a) != 1) return false;
    c.push_back(num(a));
  }
  quotient = PolyZ(std::move(c));
  return true;
}

PolyZ primitive(const PolyZ& f) {
  Integer g = content(f);
  if (f.leading() < 0) g = -g;
  std::vector<Integer> c;
  for (const auto& a : f.coeffs()) c.push_back(a / g);
  return PolyZ(std::move(c));
}

// Subsets of {0..n-1} of size k in lexicographic order.
bool nextCombination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<PolyZ> zassenhaus(const PolyZ& fIn) {
  const int n = fIn.degree();
  if (n <= 1) return {fIn};
  const Integer lc = fIn.leading();

  // Choose the prime with fewest modular factors among a few admissible ones.
  std::uint64_t bestP = 0;
  std::vector<PolyModP> best;
  int found = 0;
  for (std::uint64_t p : primesInRange(3, 2000)) {
    if (lc % p == 0) continue;
    const PolyModP fp = monic(toModP(fIn, p));
    if (gcd(fp, derivative(fp)).degree() > 0) continue;
    std::vector<PolyModP> gs;
    for (auto& [g, m] : factorMonic(fp)) gs.push_back(g);
    if (gs.size() == 1) return {fIn};
    if (bestP == 0 || gs.size() < best.size()) {
      bestP = p;
      best = std::move(gs);
    }
    if (++found == 6) break;
  }
  if (bestP == 0) throw Error(ErrorKind::InvalidArgument, "no admissible prime for factorization");
  const std::uint64_t p = bestP;

  // Coefficients of any factor of lc-scaled divisors are bounded by 2^n ||f||_2 |lc|.
  Integer norm2sq = 0;
  for (const auto& a : fIn.coeffs()) norm2sq += a * a;
  Integer bound = (Integer(1) << n) * (boost::multiprecision::sqrt(norm2sq) + 1) * abs(lc);
  Integer pk = p;
  while (pk <= 2 * bound) pk *= p;

  // Monic version of f mod p^k: multiply by lc^{-1} mod p^k.
  Integer lcInv;
  {
    mpz_t r;
    mpz_init(r);
    const Integer lcMod = mod(lc, pk);
    mpz_invert(r, lcMod.backend().data(), pk.backend().data());
    lcInv = Integer(r);
    mpz_clear(r);
  }
  const PolyZ F = reduceMod(fIn * lcInv, pk);
  std::vector<PolyZ> lifted;
  henselTree(F, best, 0, best.size(), p, pk, lifted);

  std::vector<PolyZ> factors;
  PolyZ f = fIn;
  std::vector<PolyZ> pool = lifted;
  std::size_t s = 1;
  while (2 * s <= pool.size()) {
    bool progress = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      PolyZ cand = PolyZ::constant(f.leading());
      for (auto i : idx) cand = reduceMod(cand * pool[i], pk);
      std::vector<Integer> c;
      for (const auto& a : cand.coeffs()) c.push_back(symmetricMod(a, pk));
      PolyZ h = primitive(PolyZ(std::move(c)));
      PolyZ q;
      if (h.degree() > 0 && exactDivide(f, h, q)) {
        factors.push_back(h);
        f = q;
        std::vector<PolyZ> rest;
        for (std::size_t i = 0; i < pool.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(pool[i]);
        pool = std::move(rest);
        progress = true;
        break;
      }
    } while (nextCombination(idx, pool.size()));
    if (!progress) ++s;
  }
  if (f.degree() > 0) factors.push_back(primitive(f));
  return factors;
}

}  // namespace

bool canonicalLess(const PolyQ& a, const PolyQ& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

std::vector<std::pair<PolyQ, int>> factorQ(const PolyQ& f, int maxDegree) {
  if (f.degree() > maxDegree)
    throw Error(ErrorKind::DegreeTooLarge,
                "degree " + std::to_string(f.degree()) + " exceeds limit " + std::to_string(maxDegree));
  std::vector<std::pair<PolyQ, int>> out;
  for (const auto& [part, mult] : squarefreeDecomposition(f)) {
    for (const auto& g : zassenhaus(primitiveIntegerPart(part))) out.emplace_back(monic(toRational(g)), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return canonicalLess(a.first, b.first); });
  return out;
}

bool isIrreducibleQ(const PolyQ& f, int maxDegree) {
  if (f.degree() <= 0) return false;
  const auto fs = factorQ(f, maxDegree);
  return fs.size() == 1 && fs[0].second == 1;
}

}  // namespace wcm::exact
