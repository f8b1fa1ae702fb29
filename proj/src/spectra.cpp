#include "wcm/spectra.hpp"

#include "wcm/exact/linalg.hpp"
#include "wcm/parallel.hpp"

#include <algorithm>

#include <map>

namespace wcm::spectra {

using exact::certifiedLog;
using exact::PolyQ;
using rootsys::Family;

namespace {

Rational pow2neg(int bits) { return Rational(1) / Rational(Integer(1) << bits); }

AlgebraicNumber largerRootOf(const Rational& absTrace) {
  // t + 1/t = |tr|
  const PolyQ f(std::vector<Rational>{Rational(1), -absTrace, Rational(1)});
  for (const auto& r : exact::rootsWithMultiplicity(f, 2))
    if (certifiedLog(r, 16).positive()) return r;
  throw Error(ErrorKind::NotHyperbolic, "no eigenvalue above 1");
}

}  // namespace

GeodesicLength makeLength(const AlgebraicNumber& t, int windingDivisor, int bits) {
  if (windingDivisor < 1) throw Error(ErrorKind::InvalidArgument, "winding divisor must be positive");
  if (!t.isReal()) throw Error(ErrorKind::InvalidArgument, "t must be real");
  const Interval lg = certifiedLog(t, bits + 2);
  if (!lg.positive() || t.enclosure(8).re.hi < 0) throw Error(ErrorKind::InvalidArgument, "t must exceed 1");
  const Interval scale(Rational(2, windingDivisor));
  return {t, windingDivisor, scale * lg};
}

GeodesicLength hyperbolicLength(const SemisimpleElement& g, int bits) {
  if (g.group().kind != weakcomm::GroupKind::SL || g.group().dimension != 2)
    throw Error(ErrorKind::DimensionMismatch, "hyperbolic length needs SL_2");
  const Rational tr = abs(Rational(g.matrix().trace()));
  if (tr <= 2) throw Error(ErrorKind::NotHyperbolic, "|trace| = " + toString(tr) + " <= 2");
  return makeLength(largerRootOf(tr), 1, bits);
}

SpectrumSample rationalLengthSpectrum(const std::vector<MatrixQ>& generators, int wordLength, int bits) {
  SpectrumSample sample;
  sample.generators = generators;
  std::vector<MatrixQ> letters;
  for (const auto& g : generators) {
    if (g.rows() != 2 || g.cols() != 2 || exact::determinant(g) != 1)
      throw Error(ErrorKind::InvalidArgument, "generators must lie in SL_2(Q)");
    letters.push_back(g);
    letters.push_back(exact::inverse(g));
  }
  const int k = static_cast<int>(letters.size());

  std::map<Rational, std::vector<int>> firstWord;  // |trace| -> shortlex-first word
  std::vector<std::pair<std::vector<int>, MatrixQ>> level{{{}, MatrixQ::Identity(2, 2)}};
  for (int len = 1; len <= wordLength && !level.empty(); ++len) {
    std::vector<std::pair<std::vector<int>, MatrixQ>> next;
    for (const auto& [word, m] : level)
      for (int l = 0; l < k; ++l) {
        if (!word.empty() && (word.back() ^ 1) == l) continue;
        auto w = word;
        w.push_back(l);
        MatrixQ prod = m * letters[static_cast<std::size_t>(l)];
        const Rational tr = abs(Rational(prod.trace()));
        if (tr > 2) firstWord.emplace(tr, w);
        next.emplace_back(std::move(w), std::move(prod));
      }
    level = std::move(next);
  }

  std::vector<std::pair<Rational, std::vector<int>>> distinct(firstWord.begin(), firstWord.end());
  sample.entries.resize(distinct.size());
  parallelFor(distinct.size(), [&](std::size_t i) {
    sample.entries[i] = {distinct[i].second, makeLength(largerRootOf(distinct[i].first), 1, bits)};
  });
  return sample;
}

SplitTorusElement::SplitTorusElement(RootSystemType type, std::vector<AlgebraicNumber> eigenvalues)
    : type(type), eigenvalues(std::move(eigenvalues)) {
  if (!type.classical()) throw Error(ErrorKind::UnsupportedFamily, "split tori of type " + type.name());
  const int n = type.rank;
  const std::size_t expected = type.family == Family::A   ? static_cast<std::size_t>(n + 1)
                               : type.family == Family::B ? static_cast<std::size_t>(2 * n + 1)
                                                          : static_cast<std::size_t>(2 * n);
  if (this->eigenvalues.size() != expected)
    throw Error(ErrorKind::DimensionMismatch, type.name() + " needs " + std::to_string(expected) + " eigenvalues");
  for (const auto& a : this->eigenvalues)
    if (a.isZero()) throw Error(ErrorKind::ZeroBase, "zero eigenvalue");

  if (type.family == Family::A) {
    if (!exact::equalsOne(exact::algebraicProduct(this->eigenvalues, std::vector<long>(expected, 1))))
      throw Error(ErrorKind::InvalidArgument, "eigenvalue product must be 1");
    coords_ = this->eigenvalues;
    return;
  }
  std::vector<AlgebraicNumber> rest = this->eigenvalues;
  if (type.family == Family::B) {
    auto one = std::find(rest.begin(), rest.end(), AlgebraicNumber(Rational(1)));
    if (one == rest.end()) throw Error(ErrorKind::InvalidArgument, "type B needs an eigenvalue 1");
    rest.erase(one);
  }
  while (!rest.empty()) {
    const AlgebraicNumber a = rest.front();
    rest.erase(rest.begin());
    auto partner = std::find(rest.begin(), rest.end(), exact::inverse(a));
    if (partner == rest.end()) throw Error(ErrorKind::InvalidArgument, "eigenvalues not closed under inversion");
    rest.erase(partner);
    coords_.push_back(a);
  }
}

std::vector<Interval> SplitTorusElement::logCoords(int bits) const {
  std::vector<Interval> out;
  for (const auto& c : coords_) out.push_back(certifiedLog(c, bits));
  return out;
}

LambdaSquared lambdaGamma(const SplitTorusElement& e, int bits) {
  LambdaSquared out;
  const auto rootList = rootsys::roots(e.type);
  for (int extra = 8;; extra *= 2) {
    const auto logs = e.logCoords(bits + extra);
    Interval total(Rational(0));
    for (const auto& r : rootList) {
      Interval pairing(Rational(0));
      for (std::size_t i = 0; i < r.coords.size(); ++i)
        if (r.coords[i] != 0) pairing = pairing + Interval(Rational(r.coords[i])) * logs[i];
      total = total + exact::square(pairing);
    }
    if (total.width() <= pow2neg(bits)) {
      out.value = total;
      break;
    }
    if (extra > 4096) throw Error(ErrorKind::PrecisionExhausted, "lambda interval too wide");
  }

  const auto& coords = e.coordinates();
  if (!std::all_of(coords.begin(), coords.end(), [](const AlgebraicNumber& a) { return a.isRational(); }))
    return out;
  // log|c_i| = sum_k exps[i][k] log bases[k]
  std::map<Integer, std::map<std::size_t, int>> byBase;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Rational c = abs(coords[i].rationalValue());
    for (const auto& [p, k] : factorInteger(num(c))) byBase[p][i] += k;
    for (const auto& [p, k] : factorInteger(den(c))) byBase[p][i] -= k;
  }
  const auto nb = static_cast<Eigen::Index>(byBase.size());
  MatrixQ form = MatrixQ::Zero(nb, nb);
  for (const auto& r : rootList) {
    VectorQ w = VectorQ::Zero(nb);
    Eigen::Index k = 0;
    for (const auto& [p, exps] : byBase) {
      for (const auto& [i, x] : exps) w[k] += Rational(r.coords[i] * x);
      ++k;
    }
    form += w * w.transpose();
  }
  for (const auto& kv : byBase) out.bases.push_back(kv.first);
  out.form = form;
  return out;
}

std::optional<LengthRatio> ratioRational(const GeodesicLength& l1, const GeodesicLength& l2, int bound) {
  for (int bits = 64;; bits *= 2) {
    const Interval a = certifiedLog(l1.t, bits), b = certifiedLog(l2.t, bits);
    const Interval r = a / b;  // log t1 / log t2 = n / m
    if (Rational(bound) * r.width() > Rational(1, 4)) {
      if (bits >= 4096) throw Error(ErrorKind::PrecisionExhausted, "length ratio");
      continue;
    }
    for (long m = 1; m <= bound; ++m) {
      const Interval nm = Interval(Rational(m)) * r;
      const Integer lo = boost::multiprecision::numerator(nm.lo) / boost::multiprecision::denominator(nm.lo);
      for (Integer n = std::max(lo, Integer(1)); Rational(n) <= nm.hi && n <= bound; ++n) {
        if (Rational(n) < nm.lo) continue;
        const long nn = n.convert_to<long>();
        if (exact::power(l1.t, m) == exact::power(l2.t, nn))
          return LengthRatio{m, nn, Rational(nn * l2.windingDivisor, m * l1.windingDivisor)};
      }
    }
    return std::nullopt;
  }
}

LengthComparison lengthCommensurableSamples(const SpectrumSample& s1, const SpectrumSample& s2, int bound) {
  if (s1.entries.empty() || s2.entries.empty()) throw Error(ErrorKind::InvalidArgument, "empty spectrum sample");
  const std::size_t n1 = s1.entries.size(), n2 = s2.entries.size();
  LengthComparison out;
  out.table.assign(n1, std::vector<std::optional<LengthRatio>>(n2));
  parallelFor(n1 * n2, [&](std::size_t k) {
    out.table[k / n2][k % n2] = ratioRational(s1.entries[k / n2].length, s2.entries[k % n2].length, bound);
  });
  bool ok = true;
  for (std::size_t i = 0; i < n1; ++i)
    ok = ok && std::any_of(out.table[i].begin(), out.table[i].end(), [](const auto& v) { return v.has_value(); });
  for (std::size_t j = 0; j < n2; ++j) {
    bool hit = false;
    for (std::size_t i = 0; i < n1; ++i) hit = hit || out.table[i][j].has_value();
    ok = ok && hit;
  }
  out.aggregate = ok;
  return out;
}

Rational bcScalingCheck(int n, const VectorQ& x) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "rank must be at least 2");
  if (x.size() != n) throw Error(ErrorKind::DimensionMismatch, "vector length differs from rank");
  if (std::all_of(x.begin(), x.end(), [](const Rational& v) { return v == 0; }))
    throw Error(ErrorKind::ZeroVector, "x = 0");
  const Rational ratio = rootsys::quadraticSum<Rational>({Family::C, n}, x) /
                         rootsys::quadraticSum<Rational>({Family::B, n}, x);
  if (ratio != Rational(2 * n + 2, 2 * n - 1)) throw std::logic_error("B/C scaling ratio mismatch");
  return ratio;
}

}  // namespace wcm::spectra
