#include "wcm/exact/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

// Root isolation: Aberth iterations give approximations, first in long double
// and then in dyadic rationals of growing precision. Inclusion disks from
// Smith's theorem (radius deg * |f(z_i) / (lc * prod_{j != i} (z_i - z_j))|)
// are evaluated exactly; pairwise disjoint disks each hold one root.
namespace wcm::exact {

namespace {

struct Cq {
  Rational re, im;
};

Cq operator+(const Cq& a, const Cq& b) { return {a.re + b.re, a.im + b.im}; }
Cq operator-(const Cq& a, const Cq& b) { return {a.re - b.re, a.im - b.im}; }
Cq operator*(const Cq& a, const Cq& b) {
  if (a.im == 0 && b.im == 0) return {a.re * b.re, Rational(0)};
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Rational norm(const Cq& a) { return a.re * a.re + a.im * a.im; }
Cq divide(const Cq& a, const Cq& b) {
  const Rational n = norm(b);
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

// Nearest multiple of 2^-bits.
Rational roundDyadic(const Rational& x, int bits) {
  return floorDyadic(x + Rational(1, Integer(Integer(1) << (bits + 1))), bits);
}
Cq roundDyadic(const Cq& z, int bits) { return {roundDyadic(z.re, bits), roundDyadic(z.im, bits)}; }

using Cld = std::complex<long double>;

std::vector<Cld> aberthLongDouble(const PolyQ& f) {
  const int n = f.degree();
  std::vector<long double> c;
  for (const auto& a : f.coeffs()) c.push_back(static_cast<long double>(a.convert_to<long double>()));
  // Fujiwara-style radius estimate
  long double radius = 0;
  for (int k = 0; k < n; ++k)
    radius = std::max(radius, std::pow(std::abs(c[static_cast<std::size_t>(k)] / c.back()), 1.0L / (n - k)));
  radius = std::max(radius, 1e-3L);
  std::vector<Cld> z(static_cast<std::size_t>(n));
  const long double twoPi = 6.283185307179586476925286766559L;
  for (int k = 0; k < n; ++k) z[static_cast<std::size_t>(k)] = std::polar(radius, twoPi * k / n + 0.4L);
  auto eval = [&c](Cld x, Cld& value, Cld& deriv) {
    value = 0;
    deriv = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      deriv = deriv * x + value;
      value = value * x + *it;
    }
  };
  for (int sweep = 0; sweep < 800; ++sweep) {
    long double worst = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      Cld v, d;
      eval(z[i], v, d);
      if (v == Cld(0)) continue;
      const Cld ratio = v / d;
      Cld s = 0;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) s += 1.0L / (z[i] - z[j]);
      const Cld w = ratio / (1.0L - ratio * s);
      if (std::isfinite(w.real()) && std::isfinite(w.imag())) {
        z[i] -= w;
        worst = std::max(worst, std::abs(w) / std::max(1.0L, std::abs(z[i])));
      }
    }
    if (worst < 1e-18L) break;
  }
  return z;
}

// Horner evaluation of f and f' with rounding to 2^-bits after every step.
void evalRounded(const PolyQ& f, const Cq& x, int bits, Cq& value, Cq& deriv) {
  value = {Rational(0), Rational(0)};
  deriv = {Rational(0), Rational(0)};
  for (int k = f.degree(); k >= 0; --k) {
    deriv = roundDyadic(deriv * x + value, bits);
    value = roundDyadic(value * x + Cq{f[k], Rational(0)}, bits);
  }
}

void aberthDyadic(const PolyQ& f, std::vector<Cq>& z, int bits) {
  const int work = bits + 32;
  const Rational tol(1, Integer(Integer(1) << (bits + 2)));
  for (int sweep = 0; sweep < 60; ++sweep) {
    Rational worst = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      Cq v, d;
      evalRounded(f, z[i], work, v, d);
      if (norm(v) == 0) continue;
      if (norm(d) == 0) continue;
      const Cq ratio = roundDyadic(divide(v, d), work);
      Cq s{Rational(0), Rational(0)};
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j == i) continue;
        const Cq diff = z[i] - z[j];
        if (norm(diff) == 0) continue;
        s = roundDyadic(s + divide(Cq{Rational(1), Rational(0)}, diff), work);
      }
      const Cq denom = Cq{Rational(1), Rational(0)} - ratio * s;
      if (norm(denom) == 0) continue;
      const Cq w = roundDyadic(divide(ratio, denom), work);
      z[i] = roundDyadic(z[i] - w, bits);
      worst = std::max(worst, norm(w));
    }
    if (worst < tol * tol) break;
  }
}

Cq evalExact(const PolyQ& f, const Cq& x) {
  Cq v{Rational(0), Rational(0)};
  for (int k = f.degree(); k >= 0; --k) v = v * x + Cq{f[k], Rational(0)};
  return v;
}

// Smith inclusion boxes; empty result when they fail to separate.
std::vector<Box> certify(const PolyQ& f, std::vector<Cq> z, int bits) {
  const int n = f.degree();
  const Rational snap(1, Integer(Integer(1) << (bits / 2)));
  std::vector<bool> real(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    real[i] = abs(z[i].im) <= snap;
    if (real[i]) z[i].im = 0;
  }
  std::vector<Rational> radius(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    Rational denom = f.leading() * f.leading();
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (j == i) continue;
      const Rational d = norm(z[i] - z[j]);
      if (d == 0) return {};
      denom *= d;
    }
    const Rational w2 = norm(evalExact(f, z[i])) / denom;
    radius[i] = sqrtUpper(w2 * n * n, bits + 8);
    if (radius[i] == 0) radius[i] = Rational(1, Integer(Integer(1) << (bits + 8)));
    if (!real[i] && abs(z[i].im) <= radius[i]) return {};
  }
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      const Rational reach = radius[i] + radius[j];
      if (abs(z[i].re - z[j].re) <= reach && abs(z[i].im - z[j].im) <= reach) return {};
    }
  std::vector<Box> boxes;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const Interval re(z[i].re - radius[i], z[i].re + radius[i]);
    boxes.emplace_back(re, real[i] ? Interval(0) : Interval(z[i].im - radius[i], z[i].im + radius[i]));
  }
  return boxes;
}

bool realFirstDescending(const Box& a, const Box& b) {
  const bool ra = a.onRealAxis(), rb = b.onRealAxis();
  if (ra != rb) return ra;
  const Rational am = a.re.mid(), bm = b.re.mid();
  if (am != bm) return am > bm;
  return a.im.mid() > b.im.mid();
}

constexpr int kMaxBits = 1 << 14;

// Isolation at increasing precision until boxes are certified and at most
// 2^-targetBits wide.
std::vector<Box> isolateAtPrecision(const PolyQ& f, int targetBits) {
  std::vector<Cq> z;
  for (const auto& c : aberthLongDouble(f)) {
    const long double re = c.real(), im = c.imag();
    z.push_back({Rational(static_cast<double>(re)), Rational(static_cast<double>(im))});
  }
  const Rational target(1, Integer(Integer(1) << targetBits));
  for (int bits = std::max(64, targetBits + 16); bits <= kMaxBits; bits *= 2) {
    for (auto& x : z) x = roundDyadic(x, bits);
    aberthDyadic(f, z, bits);
    auto boxes = certify(f, z, bits);
    if (boxes.empty()) continue;
    bool narrow = true;
    for (const auto& b : boxes) narrow = narrow && b.width() <= target;
    if (!narrow) continue;
    std::sort(boxes.begin(), boxes.end(), realFirstDescending);
    return boxes;
  }
  throw Error(ErrorKind::PrecisionExhausted, "root isolation failed for " + f.str());
}

}  // namespace

Interval refineRealRoot(const PolyQ& f, const Interval& isolating, int bits) {
  const Rational target(1, Integer(Integer(1) << bits));
  Interval x = isolating;
  if (x.width() <= target) return x;
  const int signLo = f(x.lo) > 0 ? 1 : -1;
  // Shrink to dyadic endpoints first so the interval stays cheap to evaluate.
  while (x.width() > target) {
    const Rational mid = x.mid();
    const Rational fm = f(mid);
    if (fm == 0) return Interval(mid);
    if ((fm > 0 ? 1 : -1) == signLo)
      x.lo = mid;
    else
      x.hi = mid;
  }
  return x;
}

std::vector<Box> isolateRoots(const PolyQ& f, int bits) {
  if (f.degree() < 1) throw Error(ErrorKind::InvalidArgument, "root isolation of a constant");
  if (f.degree() == 1) return {Box::point(-f[0] / f[1])};
  std::vector<Box> base = isolateAtPrecision(f, 8);
  return refineRoots(f, base, bits);
}

std::vector<Box> refineRoots(const PolyQ& f, const std::vector<Box>& boxes, int bits) {
  const Rational target(1, Integer(Integer(1) << bits));
  std::vector<Box> out = boxes;
  bool needComplex = false;
  for (auto& b : out) {
    if (b.width() <= target) continue;
    if (b.onRealAxis())
      b.re = refineRealRoot(f, b.re, bits);
    else
      needComplex = true;
  }
  if (!needComplex) return out;
  // The root inside an old box lies in exactly one fresh box; other fresh
  // boxes touching it shrink away as the precision grows.
  for (int extra = 0;; extra += 16) {
    const auto fresh = isolateAtPrecision(f, bits + extra);
    std::vector<Box> next = out;
    bool ambiguous = false;
    for (auto& b : next) {
      if (b.onRealAxis() || b.width() <= target) continue;
      const Box* match = nullptr;
      for (const auto& c : fresh) {
        if (c.onRealAxis() || !intersects(b, c)) continue;
        ambiguous = ambiguous || match != nullptr;
        match = &c;
      }
      if (!match) throw Error(ErrorKind::PrecisionExhausted, "lost a complex root during refinement");
      b = intersect(b, *match);
    }
    if (!ambiguous) return next;
    if (extra > 256) throw Error(ErrorKind::PrecisionExhausted, "ambiguous complex root refinement");
  }
}

}  // namespace wcm::exact
