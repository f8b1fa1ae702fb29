#include "wcm/weakcomm.hpp"

#include "wcm/exact/factor.hpp"
#include "wcm/exact/lattice.hpp"
#include "wcm/exact/linalg.hpp"
#include "wcm/parallel.hpp"

#include <algorithm>
#include <map>

namespace wcm::weakcomm {

using exact::Interval;

GroupDescriptor GroupDescriptor::SL(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "SL_n needs n >= 1");
  return {GroupKind::SL, n, {}};
}

GroupDescriptor GroupDescriptor::Sp(int twoN) {
  if (twoN < 2 || twoN % 2 != 0) throw Error(ErrorKind::InvalidArgument, "Sp needs an even positive dimension");
  return {GroupKind::Sp, twoN, {}};
}

GroupDescriptor GroupDescriptor::SO(const VectorQ& diagonal) {
  if (diagonal.size() < 2) throw Error(ErrorKind::InvalidArgument, "SO(q) needs dim q >= 2");
  for (Eigen::Index i = 0; i < diagonal.size(); ++i)
    if (diagonal[i] == 0) throw Error(ErrorKind::InvalidArgument, "degenerate quadratic form");
  return {GroupKind::SO, static_cast<int>(diagonal.size()), diagonal};
}

rootsys::RootSystemType GroupDescriptor::rootType() const {
  using rootsys::Family;
  switch (kind) {
    case GroupKind::SL:
      return {Family::A, dimension - 1};
    case GroupKind::Sp:
      return dimension == 2 ? rootsys::RootSystemType{Family::A, 1} : rootsys::RootSystemType{Family::C, dimension / 2};
    case GroupKind::SO:
      if (dimension % 2 == 1)
        return dimension == 3 ? rootsys::RootSystemType{Family::A, 1} : rootsys::RootSystemType{Family::B, dimension / 2};
      if (dimension < 6) throw Error(ErrorKind::UnsupportedFamily, "SO of dimension " + std::to_string(dimension) + " is not simple");
      return {Family::D, dimension / 2};
  }
  throw Error(ErrorKind::UnsupportedFamily, "unknown group");
}

MatrixQ GroupDescriptor::formMatrix() const {
  const Eigen::Index n = dimension;
  switch (kind) {
    case GroupKind::SL:
      return MatrixQ::Identity(n, n);
    case GroupKind::Sp: {
      MatrixQ j = MatrixQ::Zero(n, n);
      const Eigen::Index h = n / 2;
      j.topRightCorner(h, h) = MatrixQ::Identity(h, h);
      j.bottomLeftCorner(h, h) = -MatrixQ::Identity(h, h);
      return j;
    }
    case GroupKind::SO:
      return form.asDiagonal();
  }
  return MatrixQ::Identity(n, n);
}

std::vector<MatrixQ> GroupDescriptor::lieAlgebraBasis() const {
  const Eigen::Index n = dimension;
  std::vector<MatrixQ> basis;
  if (kind == GroupKind::SL) {
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        if (i == j) continue;
        MatrixQ e = MatrixQ::Zero(n, n);
        e(i, j) = 1;
        basis.push_back(e);
      }
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
      MatrixQ h = MatrixQ::Zero(n, n);
      h(i, i) = 1;
      h(n - 1, n - 1) = -1;
      basis.push_back(h);
    }
    return basis;
  }
  // X^T F + F X = 0 as a linear system on the entries of X (column-major)
  const MatrixQ f = formMatrix();
  MatrixQ system = MatrixQ::Zero(n * n, n * n);
  for (Eigen::Index k = 0; k < n * n; ++k) {
    MatrixQ x = MatrixQ::Zero(n, n);
    x(k % n, k / n) = 1;
    const MatrixQ image = x.transpose() * f + f * x;
    for (Eigen::Index e = 0; e < n * n; ++e) system(e, k) = image(e % n, e / n);
  }
  const MatrixQ kernel = exact::nullspace(system);
  for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
    MatrixQ x(n, n);
    for (Eigen::Index e = 0; e < n * n; ++e) x(e % n, e / n) = kernel(e, c);
    basis.push_back(x);
  }
  return basis;
}

std::string GroupDescriptor::name() const {
  switch (kind) {
    case GroupKind::SL:
      return "SL_" + std::to_string(dimension);
    case GroupKind::Sp:
      return "Sp_" + std::to_string(dimension);
    case GroupKind::SO: {
      std::string s = "SO(";
      for (Eigen::Index i = 0; i < form.size(); ++i) s += (i ? "," : "") + wcm::toString(form[i]);
      return s + ")";
    }
  }
  return "?";
}

bool contains(const GroupDescriptor& group, const MatrixQ& m) {
  if (m.rows() != group.dimension || m.cols() != group.dimension) return false;
  switch (group.kind) {
    case GroupKind::SL:
      return exact::determinant(m) == 1;
    case GroupKind::Sp: {
      const MatrixQ j = group.formMatrix();
      return MatrixQ(m.transpose() * j * m) == j;
    }
    case GroupKind::SO: {
      const MatrixQ q = group.formMatrix();
      return MatrixQ(m.transpose() * q * m) == q && exact::determinant(m) == 1;
    }
  }
  return false;
}

SemisimpleElement::SemisimpleElement(MatrixQ matrix, GroupDescriptor group)
    : matrix_(std::move(matrix)), group_(std::move(group)) {
  if (matrix_.rows() != group_.dimension || matrix_.cols() != group_.dimension)
    throw Error(ErrorKind::DimensionMismatch, "matrix is not " + std::to_string(group_.dimension) + "x" +
                                                  std::to_string(group_.dimension) + " for " + group_.name());
  if (!contains(group_, matrix_)) throw Error(ErrorKind::InvalidArgument, "matrix is not in " + group_.name());
  charpoly_ = exact::characteristicPolynomial(matrix_);
}

bool isSemisimple(const SemisimpleElement& g) {
  const PolyQ radical = exact::squarefreePart(g.charpoly());
  return exact::evaluateAt(radical, g.matrix()).isZero();
}

std::vector<AlgebraicNumber> eigenvalues(const SemisimpleElement& g) {
  if (!isSemisimple(g)) throw Error(ErrorKind::NotSemisimple, "minimal polynomial is not squarefree");
  return exact::rootsWithMultiplicity(g.charpoly(), exact::kMaxInputDegree);
}

bool hasInfiniteOrder(const SemisimpleElement& g) {
  for (const auto& lambda : eigenvalues(g))
    if (!exact::rootOfUnityOrder(lambda)) return true;
  return false;
}

bool RelationLattice::contains(const VectorZ& v) const {
  if (v.size() != static_cast<Eigen::Index>(numbers.size())) return false;
  if (basis.rows() == 0) return v.isZero();
  return exact::inLattice(exact::hermiteNormalForm(basis), v);
}

namespace {

Integer floorOf(const Rational& q) {
  Integer f = num(q) / den(q);
  if (f * den(q) > num(q)) f -= 1;
  return f;
}

// Echelon form with pivots at the last nonzero entry of each row, so row i
// expresses a power of numbers[pivot] through earlier numbers; rows ordered by
// pivot and signed so the first nonzero entry is positive.
MatrixZ canonicalBasis(const MatrixZ& rows) {
  if (rows.rows() == 0) return rows;
  const MatrixZ reversed = rows.rowwise().reverse();
  const MatrixZ h = exact::hermiteNormalForm(reversed);
  MatrixZ out = MatrixZ(h.rowwise().reverse()).colwise().reverse();
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    Eigen::Index j = 0;
    while (out(i, j) == 0) ++j;
    if (out(i, j) < 0) out.row(i) = -out.row(i);
  }
  return out;
}

struct LogData {
  std::vector<Interval> logs, args;
  Interval twoPi;
};

LogData certifiedLogs(const std::vector<AlgebraicNumber>& nums, int bits) {
  LogData d;
  for (const auto& x : nums) {
    d.logs.push_back(exact::certifiedLog(x, bits));
    d.args.push_back(exact::certifiedArg(x, bits));
  }
  const Interval pi = exact::certifiedPi(bits);
  d.twoPi = Interval(2 * pi.lo, 2 * pi.hi);
  return d;
}

bool isRelation(const std::vector<AlgebraicNumber>& nums, const VectorZ& a, const LogData& d) {
  // interval filter first: log|prod| must contain 0 and arg(prod) must meet 2 pi Z
  Interval logSum(Rational(0)), argSum(Rational(0));
  for (std::size_t i = 0; i < nums.size(); ++i) {
    const Interval e{Rational(a[static_cast<Eigen::Index>(i)])};
    logSum = logSum + e * d.logs[i];
    argSum = argSum + e * d.args[i];
  }
  if (!logSum.containsZero()) return false;
  const Integer lo = floorOf(argSum.lo / d.twoPi.hi);
  bool meets = false;
  for (Integer m = lo; m <= lo + 2 && !meets; ++m) meets = exact::intersects(argSum, Interval(Rational(m)) * d.twoPi);
  if (!meets) return false;
  std::vector<long> e;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (abs(a[i]) > Integer(1) << 20) return false;
    e.push_back(a[i].convert_to<long>());
  }
  return exact::equalsOne(exact::algebraicProduct(nums, e));
}

}  // namespace

RelationLattice relationLattice(const std::vector<AlgebraicNumber>& nums, int bound, const LatticeOptions& options) {
  if (bound < 1) throw Error(ErrorKind::InvalidArgument, "exponent bound must be positive");
  for (const auto& x : nums)
    if (x.isZero()) throw Error(ErrorKind::ZeroBase, "zero in a relation lattice");
  const auto k = static_cast<Eigen::Index>(nums.size());
  RelationLattice out{MatrixZ(0, k), bound, nums, 0};
  if (k == 0) return out;

  // Rows (e_i, N log|x_i|, N arg x_i) and (0, 0, 2 pi N). A relation with
  // |a|_inf <= B gives a vector of norm at most X; a basis vector whose
  // Gram-Schmidt tail is longer than X cannot take part in such a vector.
  const Integer kb = Integer(k) * bound;
  for (int bits = options.startBits; bits <= options.capBits; bits *= 2) {
    const LogData d = certifiedLogs(nums, bits + 4);
    bool needArg = false;
    for (const auto& a : d.args) needArg = needArg || !(a.isPoint() && a.lo == 0);
    const Integer scale = Integer(1) << bits;
    const Eigen::Index rows = k + (needArg ? 1 : 0), cols = k + 1 + (needArg ? 1 : 0);
    MatrixZ m = MatrixZ::Zero(rows, cols);
    for (Eigen::Index i = 0; i < k; ++i) {
      m(i, i) = 1;
      m(i, k) = floorOf(Rational(scale) * d.logs[static_cast<std::size_t>(i)].lo);
      if (needArg) m(i, k + 1) = floorOf(Rational(scale) * d.args[static_cast<std::size_t>(i)].lo);
    }
    if (needArg) m(k, k + 1) = floorOf(Rational(scale) * d.twoPi.lo);
    const MatrixZ reduced = exact::lllReduce(m);
    const auto norms = exact::gramSchmidtSquaredNorms(reduced);
    Integer x2 = Integer(k) * bound * bound + 4 * kb * kb;
    if (needArg) x2 += (3 * kb + 2) * (3 * kb + 2);
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < rows; ++i)
      if (norms[static_cast<std::size_t>(i)] <= Rational(x2)) r = i + 1;
    bool verified = true;
    MatrixZ candidates(r, k);
    for (Eigen::Index i = 0; i < r && verified; ++i) {
      candidates.row(i) = reduced.row(i).head(k);
      verified = isRelation(nums, candidates.row(i).transpose(), d);
    }
    if (!verified) continue;
    out.basis = canonicalBasis(candidates);
    out.precisionBits = bits;
    return out;
  }
  throw Error(ErrorKind::PrecisionExhausted,
              "relation candidates not separated at " + std::to_string(options.capBits) + " bits");
}

namespace {

// Exponent vectors of the lattice supported on the given coordinates,
// as an HNF basis over those coordinates.
MatrixZ sublatticeOn(const MatrixZ& basis, const std::vector<Eigen::Index>& coords) {
  const Eigen::Index k = basis.cols();
  std::vector<bool> inside(static_cast<std::size_t>(k), false);
  for (auto c : coords) inside[static_cast<std::size_t>(c)] = true;
  std::vector<Eigen::Index> order;
  for (Eigen::Index c = 0; c < k; ++c)
    if (!inside[static_cast<std::size_t>(c)]) order.push_back(c);
  const auto outside = static_cast<Eigen::Index>(order.size());
  order.insert(order.end(), coords.begin(), coords.end());
  MatrixZ permuted(basis.rows(), k);
  for (Eigen::Index j = 0; j < k; ++j) permuted.col(j) = basis.col(order[static_cast<std::size_t>(j)]);
  const MatrixZ h = exact::hermiteNormalForm(permuted);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < h.rows(); ++i)
    if (h.row(i).head(outside).isZero()) keep.push_back(i);
  MatrixZ sub(static_cast<Eigen::Index>(keep.size()), static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) sub.row(static_cast<Eigen::Index>(i)) = h.row(keep[i]).tail(sub.cols());
  return exact::hermiteNormalForm(sub);
}

VectorZ part(const VectorZ& v, const std::vector<Eigen::Index>& coords) {
  VectorZ p(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) p[static_cast<Eigen::Index>(i)] = v[coords[i]];
  return p;
}

// Preference order on witnesses: smaller 1-norm, then smaller support, then
// smaller max-norm, then larger magnitudes on earlier coordinates, positive first.
bool preferred(const VectorZ& a, const VectorZ& b) {
  auto stats = [](const VectorZ& v) {
    Integer l1 = 0, linf = 0;
    int support = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      l1 += abs(v[i]);
      linf = std::max(linf, Integer(abs(v[i])));
      support += v[i] != 0;
    }
    return std::make_tuple(l1, support, linf);
  };
  const auto sa = stats(a), sb = stats(b);
  if (sa != sb) return sa < sb;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (abs(a[i]) != abs(b[i])) return abs(a[i]) > abs(b[i]);
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

// Shortest (in the preference order) relation with |v|_inf <= bound whose
// restriction to some side is not itself a relation.
std::optional<VectorZ> mixedRelation(const RelationLattice& lattice, const std::vector<std::vector<Eigen::Index>>& sides) {
  if (lattice.rank() == 0) return std::nullopt;
  std::vector<MatrixZ> sideRel;
  for (const auto& s : sides) sideRel.push_back(sublatticeOn(lattice.basis, s));
  auto mixed = [&](const VectorZ& v) {
    for (std::size_t s = 0; s < sides.size(); ++s)
      if (!exact::inLattice(sideRel[s], part(v, sides[s]))) return true;
    return false;
  };
  bool splits = true;
  for (Eigen::Index i = 0; i < lattice.rank() && splits; ++i) splits = !mixed(lattice.basis.row(i).transpose());
  if (splits) return std::nullopt;

  const MatrixZ reduced = exact::lllReduce(lattice.basis);
  const Integer bound = lattice.bound;
  const Integer maxL1 = bound * static_cast<long>(lattice.numbers.size());
  for (Integer t = 1;; t = std::min(Integer(2 * t), maxL1)) {
    std::optional<VectorZ> best;
    exact::enumerateShortVectors(reduced, t * t, [&](const VectorZ& v) {
      Integer l1 = 0;
      for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (abs(v[i]) > bound) return;
        l1 += abs(v[i]);
      }
      if (l1 > t || !mixed(v)) return;
      for (const VectorZ& c : {v, VectorZ(-v)})
        if (!best || preferred(c, *best)) best = c;
    });
    if (best) return best;
    if (t == maxL1) return std::nullopt;
  }
}

std::vector<long> toLong(const VectorZ& v) {
  std::vector<long> out;
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i].convert_to<long>());
  return out;
}

std::vector<Integer> toVector(const VectorZ& v) { return {v.data(), v.data() + v.size()}; }

std::vector<AlgebraicNumber> infiniteOrderEigenvalues(const SemisimpleElement& g) {
  auto eig = eigenvalues(g);
  bool infinite = false;
  for (const auto& lambda : eig) infinite = infinite || !exact::rootOfUnityOrder(lambda);
  if (!infinite) throw Error(ErrorKind::FiniteOrder, "all eigenvalues are roots of unity");
  return eig;
}

// Two-sided search: prod left^a = prod right^b != 1. Returns the blocks of a
// and b split by the given block sizes.
std::optional<Witness> twoSidedWitness(const std::vector<std::vector<AlgebraicNumber>>& leftBlocks,
                                       const std::vector<std::vector<AlgebraicNumber>>& rightBlocks, int bound,
                                       const LatticeOptions& options) {
  std::vector<AlgebraicNumber> all, left, right;
  std::vector<std::vector<Eigen::Index>> sides(2);
  for (const auto& b : leftBlocks)
    for (const auto& x : b) {
      sides[0].push_back(static_cast<Eigen::Index>(all.size()));
      all.push_back(x);
      left.push_back(x);
    }
  for (const auto& b : rightBlocks)
    for (const auto& x : b) {
      sides[1].push_back(static_cast<Eigen::Index>(all.size()));
      all.push_back(x);
      right.push_back(x);
    }
  const RelationLattice lattice = relationLattice(all, bound, options);
  const auto v = mixedRelation(lattice, {sides[0], sides[1]});
  if (!v) return std::nullopt;
  const VectorZ a = part(*v, sides[0]);
  const VectorZ b = -part(*v, sides[1]);
  const AlgebraicNumber lv = exact::algebraicProduct(left, toLong(a));
  const AlgebraicNumber rv = exact::algebraicProduct(right, toLong(b));
  if (!(lv == rv) || exact::equalsOne(lv)) throw std::logic_error("weak commensurability witness failed to verify");
  Witness w{{}, lv};
  Eigen::Index offset = 0;
  for (const auto& blk : leftBlocks) {
    w.exponents.push_back(toVector(a.segment(offset, static_cast<Eigen::Index>(blk.size()))));
    offset += static_cast<Eigen::Index>(blk.size());
  }
  offset = 0;
  for (const auto& blk : rightBlocks) {
    w.exponents.push_back(toVector(b.segment(offset, static_cast<Eigen::Index>(blk.size()))));
    offset += static_cast<Eigen::Index>(blk.size());
  }
  return w;
}

}  // namespace

CommensurabilityVerdict weaklyCommensurable(const SemisimpleElement& g1, const SemisimpleElement& g2, int bound,
                                            const LatticeOptions& options) {
  const auto x = infiniteOrderEigenvalues(g1);
  const auto y = infiniteOrderEigenvalues(g2);
  CommensurabilityVerdict verdict;
  verdict.bound = bound;
  verdict.witness = twoSidedWitness({x}, {y}, bound, options);
  verdict.yes = verdict.witness.has_value();
  return verdict;
}

SampleReport weaklyCommensurableSamples(const std::vector<SemisimpleElement>& s1,
                                        const std::vector<SemisimpleElement>& s2, int bound,
                                        const LatticeOptions& options) {
  if (s1.empty() || s2.empty()) throw Error(ErrorKind::InvalidArgument, "samples must be nonempty");
  SampleReport report;
  for (const auto& g : s1) report.firstFinite.push_back(!hasInfiniteOrder(g));
  for (const auto& g : s2) report.secondFinite.push_back(!hasInfiniteOrder(g));
  report.verdicts.assign(s1.size(), std::vector<std::optional<CommensurabilityVerdict>>(s2.size()));
  parallelFor(s1.size() * s2.size(), [&](std::size_t idx) {
    const std::size_t i = idx / s2.size(), j = idx % s2.size();
    if (report.firstFinite[i] || report.secondFinite[j]) return;
    report.verdicts[i][j] = weaklyCommensurable(s1[i], s2[j], bound, options);
  });
  for (std::size_t i = 0; i < s1.size(); ++i) {
    if (report.firstFinite[i]) continue;
    bool matched = false;
    for (std::size_t j = 0; j < s2.size(); ++j) matched = matched || (report.verdicts[i][j] && report.verdicts[i][j]->yes);
    report.firstCovered = report.firstCovered && matched;
  }
  for (std::size_t j = 0; j < s2.size(); ++j) {
    if (report.secondFinite[j]) continue;
    bool matched = false;
    for (std::size_t i = 0; i < s1.size(); ++i) matched = matched || (report.verdicts[i][j] && report.verdicts[i][j]->yes);
    report.secondCovered = report.secondCovered && matched;
  }
  return report;
}

IndependenceResult multiplicativelyIndependent(const std::vector<SemisimpleElement>& gs, int bound,
                                               const LatticeOptions& options) {
  std::vector<std::vector<AlgebraicNumber>> blocks;
  for (const auto& g : gs) blocks.push_back(infiniteOrderEigenvalues(g));
  std::vector<AlgebraicNumber> all;
  std::vector<std::vector<Eigen::Index>> sides;
  for (const auto& b : blocks) {
    sides.emplace_back();
    for (const auto& x : b) {
      sides.back().push_back(static_cast<Eigen::Index>(all.size()));
      all.push_back(x);
    }
  }
  IndependenceResult result;
  if (gs.size() < 2) return result;
  const RelationLattice lattice = relationLattice(all, bound, options);
  const auto v = mixedRelation(lattice, sides);
  if (!v) return result;
  result.independent = false;
  Witness w{{}, AlgebraicNumber(Rational(1))};
  bool valueSet = false;
  for (std::size_t s = 0; s < sides.size(); ++s) {
    const VectorZ p = part(*v, sides[s]);
    w.exponents.push_back(toVector(p));
    if (valueSet) continue;
    const AlgebraicNumber value = exact::algebraicProduct(blocks[s], toLong(p));
    if (!exact::equalsOne(value)) {
      w.value = value;
      valueSet = true;
    }
  }
  if (!valueSet || !exact::equalsOne(exact::algebraicProduct(all, toLong(*v))))
    throw std::logic_error("independence certificate failed to verify");
  result.certificate = w;
  return result;
}

ContainmentResult weaklyContained(const std::vector<SemisimpleElement>& gs, const std::vector<SemisimpleElement>& s2,
                                  int bound, const LatticeOptions& options) {
  std::vector<std::vector<AlgebraicNumber>> left, right;
  for (const auto& g : gs) left.push_back(infiniteOrderEigenvalues(g));
  for (const auto& g : s2) right.push_back(eigenvalues(g));
  ContainmentResult result;
  result.witness = twoSidedWitness(left, right, bound, options);
  result.contained = result.witness.has_value();
  return result;
}

Rational traceAd(const SemisimpleElement& g) {
  const auto basis = g.group().lieAlgebraBasis();
  const Eigen::Index n = g.group().dimension, dim = static_cast<Eigen::Index>(basis.size());
  if (dim == 0) return 0;
  MatrixQ columns(n * n, dim);
  for (Eigen::Index k = 0; k < dim; ++k)
    columns.col(k) = basis[static_cast<std::size_t>(k)].reshaped();
  // a set of dim independent coordinate rows gives a left inverse
  std::vector<Eigen::Index> pivots;
  exact::rref(columns.transpose(), &pivots);
  MatrixQ square(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) square.row(i) = columns.row(pivots[static_cast<std::size_t>(i)]);
  const MatrixQ leftInverse = exact::inverse(square);
  const MatrixQ gInv = exact::inverse(g.matrix());
  Rational trace = 0;
  for (Eigen::Index k = 0; k < dim; ++k) {
    const MatrixQ image = g.matrix() * basis[static_cast<std::size_t>(k)] * gInv;
    Rational coordinate = 0;
    for (Eigen::Index i = 0; i < dim; ++i)
      coordinate += leftInverse(k, i) * image.reshaped()[pivots[static_cast<std::size_t>(i)]];
    trace += coordinate;
  }
  return trace;
}

TraceField traceField(const std::vector<SemisimpleElement>& sample, int wordBudget) {
  if (sample.empty()) throw Error(ErrorKind::InvalidArgument, "trace field of an empty sample");
  constexpr std::size_t kMaxWords = 4096;
  std::vector<MatrixQ> letters;
  for (const auto& g : sample) {
    letters.push_back(g.matrix());
    letters.push_back(exact::inverse(g.matrix()));
  }
  const GroupDescriptor& group = sample.front().group();
  std::vector<MatrixQ> frontier{MatrixQ::Identity(group.dimension, group.dimension)};
  TraceField field{PolyQ({Rational(0), Rational(1)}), 0, {}};
  for (int length = 0; length <= wordBudget && field.wordsExamined < kMaxWords; ++length) {
    std::vector<MatrixQ> next;
    for (const auto& w : frontier) {
      if (field.wordsExamined >= kMaxWords) break;
      // entries are rational, so each trace lies in Q and the field stays Q
      field.traces.push_back(traceAd(SemisimpleElement(w, group)));
      ++field.wordsExamined;
      if (length < wordBudget)
        for (const auto& l : letters) next.push_back(w * l);
    }
    frontier = std::move(next);
  }
  std::sort(field.traces.begin(), field.traces.end());
  field.traces.erase(std::unique(field.traces.begin(), field.traces.end()), field.traces.end());
  return field;
}

}  // namespace wcm::weakcomm
