#include "oracles.hpp"

#include "wcm/exact/algebraic.hpp"
#include "wcm/exact/factor.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cstdlib>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_set>

namespace wcm::oracle {

using rootsys::Family;

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
  SignedPerm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    const int j = std::abs(b[i]) - 1;
    out[i] = b[i] > 0 ? a[static_cast<std::size_t>(j)] : -a[static_cast<std::size_t>(j)];
  }
  return out;
}

SignedPerm inverse(const SignedPerm& a) {
  SignedPerm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int j = std::abs(a[i]) - 1;
    out[static_cast<std::size_t>(j)] = a[i] > 0 ? static_cast<int>(i) + 1 : -(static_cast<int>(i) + 1);
  }
  return out;
}

std::vector<SignedPerm> weylGroupByReflections(const rootsys::RootSystemType& type) {
  const int n = type.ambientDimension();
  SignedPerm id(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i + 1;
  std::vector<SignedPerm> gens;
  for (int i = 0; i + 1 < n; ++i) {
    SignedPerm s = id;
    std::swap(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i + 1)]);
    gens.push_back(s);
  }
  if (type.family == Family::B || type.family == Family::C) {
    SignedPerm s = id;
    s.back() = -s.back();
    gens.push_back(s);
  } else if (type.family == Family::D) {
    // reflection in e_{n-1} + e_n
    SignedPerm s = id;
    s[static_cast<std::size_t>(n - 2)] = -n;
    s[static_cast<std::size_t>(n - 1)] = -(n - 1);
    gens.push_back(s);
  }
  std::set<SignedPerm> seen{id};
  std::deque<SignedPerm> queue{id};
  while (!queue.empty()) {
    const SignedPerm g = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      SignedPerm h = compose(s, g);
      if (seen.insert(h).second) queue.push_back(std::move(h));
    }
  }
  return {seen.begin(), seen.end()};
}

std::size_t conjugacyClassCount(const std::vector<SignedPerm>& group) {
  std::set<SignedPerm> assigned;
  std::size_t classes = 0;
  for (const auto& g : group) {
    if (assigned.count(g)) continue;
    ++classes;
    for (const auto& h : group) assigned.insert(compose(compose(h, g), inverse(h)));
  }
  return classes;
}

namespace {

// Prime-exponent signature of a nonzero rational together with its sign.
std::map<Integer, long> primeExponents(const Rational& q, bool& negative) {
  negative = q < 0;
  std::map<Integer, long> out;
  auto take = [&out](Integer m, long sign) {
    if (m < 0) m = -m;
    for (Integer p = 2; p * p <= m; ++p)
      while (m % p == 0) {
        out[p] += sign;
        m /= p;
      }
    if (m > 1) out[m] += sign;
  };
  take(num(q), 1);
  take(den(q), -1);
  return out;
}

struct Signature {
  std::map<Integer, long> exps;
  bool negative = false;
  bool operator<(const Signature& o) const {
    return std::tie(negative, exps) < std::tie(o.negative, o.exps);
  }
};

void enumerate(const std::vector<std::map<Integer, long>>& exps, const std::vector<bool>& negs, int bound,
               const std::function<void(const std::vector<int>&, const Signature&)>& visit) {
  std::vector<int> a(exps.size(), -bound);
  if (exps.empty()) {
    visit(a, Signature{});
    return;
  }
  while (true) {
    Signature s;
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (const auto& [p, e] : exps[i]) s.exps[p] += e * a[i];
      if (negs[i] && (a[i] % 2 != 0)) s.negative = !s.negative;
    }
    for (auto it = s.exps.begin(); it != s.exps.end();)
      it = it->second == 0 ? s.exps.erase(it) : std::next(it);
    visit(a, s);
    std::size_t k = 0;
    while (k < a.size() && a[k] == bound) a[k++] = -bound;
    if (k == a.size()) break;
    ++a[k];
  }
}

}  // namespace

std::vector<std::vector<int>> rationalRelationsBrute(const std::vector<Rational>& nums, int bound) {
  std::vector<std::map<Integer, long>> exps;
  std::vector<bool> negs;
  for (const auto& q : nums) {
    bool neg = false;
    exps.push_back(primeExponents(q, neg));
    negs.push_back(neg);
  }
  std::vector<std::vector<int>> out;
  enumerate(exps, negs, bound, [&out](const std::vector<int>& a, const Signature& s) {
    if (s.exps.empty() && !s.negative) out.push_back(a);
  });
  return out;
}

bool rationalWeaklyCommensurableBrute(const std::vector<Rational>& xs, const std::vector<Rational>& ys, int bound) {
  auto signatures = [bound](const std::vector<Rational>& nums) {
    std::vector<std::map<Integer, long>> exps;
    std::vector<bool> negs;
    for (const auto& q : nums) {
      bool neg = false;
      exps.push_back(primeExponents(q, neg));
      negs.push_back(neg);
    }
    std::set<Signature> values;
    enumerate(exps, negs, bound, [&values](const std::vector<int>&, const Signature& s) { values.insert(s); });
    return values;
  };
  const auto left = signatures(xs);
  const auto right = signatures(ys);
  for (const auto& s : left) {
    if (s.exps.empty() && !s.negative) continue;
    if (right.count(s)) return true;
  }
  return false;
}

int galoisGroupOrderByResolvent(const exact::PolyQ& f) {
  using exact::Box;
  using exact::Interval;
  const int n = f.degree();
  if (n < 1 || n > 4 || f.leading() != 1) throw Error(ErrorKind::InvalidArgument, "resolvent oracle needs monic degree 1..4");
  const auto roots = exact::rootsWithMultiplicity(f, 4);
  std::vector<Box> boxes;
  for (const auto& r : roots) boxes.push_back(r.enclosure(300));
  const std::vector<std::vector<int>> weights{{1, 2, 5, 11}, {1, 3, 7, 17}, {2, 3, 11, 29}, {1, 4, 9, 31}};
  for (const auto& c : weights) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Box> poly{Box::point(1)};
    do {
      Box theta = Box::point(0);
      for (int i = 0; i < n; ++i)
        theta = theta + Box::point(c[static_cast<std::size_t>(i)]) * boxes[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      std::vector<Box> next(poly.size() + 1, Box::point(0));
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k + 1] = next[k + 1] + poly[k];
        next[k] = next[k] - theta * poly[k];
      }
      poly = std::move(next);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<Rational> coeffs;
    for (const auto& b : poly) {
      if (!b.im.containsZero()) throw std::logic_error("resolvent coefficient is not real");
      const Integer lo = boost::multiprecision::numerator(b.re.lo) / boost::multiprecision::denominator(b.re.lo);
      Integer hit = 0;
      int hits = 0;
      for (Integer z = lo - 1; z <= lo + 1; ++z)
        if (b.re.contains(Rational(z))) {
          hit = z;
          ++hits;
        }
      if (hits != 1) throw std::logic_error("resolvent coefficient not pinned to one integer");
      coeffs.emplace_back(hit);
    }
    const exact::PolyQ resolvent(std::move(coeffs));
    if (!exact::isSquarefree(resolvent)) continue;
    return exact::factorQ(resolvent).front().first.degree();
  }
  throw std::logic_error("no squarefree resolvent found");
}

}  // namespace wcm::oracle
