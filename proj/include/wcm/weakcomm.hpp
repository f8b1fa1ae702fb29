#pragma once

#include "wcm/exact/algebraic.hpp"
#include "wcm/rootsys.hpp"

#include <optional>
#include <string>
#include <vector>

// Semisimple elements of split classical groups over Q and the multiplicative
// relations among their eigenvalues.
namespace wcm::weakcomm {

using exact::AlgebraicNumber;
using exact::PolyQ;

enum class GroupKind { SL, Sp, SO };

/// SL_n, Sp_2n for the standard form [[0, I], [-I, 0]], or SO of a diagonal form.
struct GroupDescriptor {
  GroupKind kind = GroupKind::SL;
  int dimension = 2;
  VectorQ form;  // diagonal of q, SO only

  static GroupDescriptor SL(int n);
  static GroupDescriptor Sp(int twoN);
  static GroupDescriptor SO(const VectorQ& diagonal);

  /// A_{n-1}, C_n, B_n or D_n.
  rootsys::RootSystemType rootType() const;
  /// Matrix of the invariant bilinear form (identity for SL).
  MatrixQ formMatrix() const;
  /// Basis of the Lie algebra as matrices.
  std::vector<MatrixQ> lieAlgebraBasis() const;
  std::string name() const;
};

bool contains(const GroupDescriptor& group, const MatrixQ& m);

class SemisimpleElement {
 public:
  /// Throws DimensionMismatch for a wrong shape and InvalidArgument when the
  /// matrix is not in the group. Semisimplicity is checked by eigenvalues().
  SemisimpleElement(MatrixQ matrix, GroupDescriptor group);

  const MatrixQ& matrix() const { return matrix_; }
  const GroupDescriptor& group() const { return group_; }
  const PolyQ& charpoly() const { return charpoly_; }

 private:
  MatrixQ matrix_;
  GroupDescriptor group_;
  PolyQ charpoly_;
};

/// Whether the minimal polynomial is squarefree.
bool isSemisimple(const SemisimpleElement& g);

/// Roots of the characteristic polynomial with multiplicity, in the order of
/// rootsWithMultiplicity. Throws NotSemisimple.
std::vector<AlgebraicNumber> eigenvalues(const SemisimpleElement& g);

/// Some eigenvalue is not a root of unity. Throws NotSemisimple.
bool hasInfiniteOrder(const SemisimpleElement& g);

struct LatticeOptions {
  int startBits = 128;
  int capBits = 4096;
};

/// Rows a with prod numbers[i]^a[i] = 1. The lattice contains every relation
/// with max |a_i| <= bound; every row is verified exactly.
struct RelationLattice {
  MatrixZ basis;
  int bound = 0;
  std::vector<AlgebraicNumber> numbers;
  int precisionBits = 0;

  Eigen::Index rank() const { return basis.rows(); }
  /// Whether v is a relation of the lattice (integer combination of rows).
  bool contains(const VectorZ& v) const;
};

/// Throws ZeroBase for a zero entry, PrecisionExhausted when the cap is reached.
RelationLattice relationLattice(const std::vector<AlgebraicNumber>& nums, int bound,
                                const LatticeOptions& options = {});

/// Exponents grouped by block (one block per element or per side), and the
/// common value the relation exhibits.
struct Witness {
  std::vector<std::vector<Integer>> exponents;
  AlgebraicNumber value;
};

struct CommensurabilityVerdict {
  bool yes = false;
  int bound = 0;
  /// Present when yes: blocks (a, b) with prod eig(g1)^a = prod eig(g2)^b = value != 1.
  std::optional<Witness> witness;
};

/// Throws NotSemisimple or FiniteOrder.
CommensurabilityVerdict weaklyCommensurable(const SemisimpleElement& g1, const SemisimpleElement& g2, int bound,
                                            const LatticeOptions& options = {});

struct SampleReport {
  /// verdicts[i][j] for S1[i] against S2[j]; empty when either has finite order.
  std::vector<std::vector<std::optional<CommensurabilityVerdict>>> verdicts;
  std::vector<bool> firstFinite, secondFinite;
  bool firstCovered = true;   // every infinite-order element of S1 matched in S2
  bool secondCovered = true;  // and symmetrically
  bool aggregate() const { return firstCovered && secondCovered; }
};

SampleReport weaklyCommensurableSamples(const std::vector<SemisimpleElement>& s1,
                                        const std::vector<SemisimpleElement>& s2, int bound,
                                        const LatticeOptions& options = {});

struct IndependenceResult {
  bool independent = true;
  /// Present when dependent: one block per element, prod over all blocks = 1,
  /// value = product of the first block that is not 1.
  std::optional<Witness> certificate;
};

/// Throws FiniteOrder.
IndependenceResult multiplicativelyIndependent(const std::vector<SemisimpleElement>& gs, int bound,
                                               const LatticeOptions& options = {});

struct ContainmentResult {
  bool contained = false;
  /// Blocks for gs followed by blocks for S2; the products of the two sides agree.
  std::optional<Witness> witness;
};

ContainmentResult weaklyContained(const std::vector<SemisimpleElement>& gs, const std::vector<SemisimpleElement>& s2,
                                  int bound, const LatticeOptions& options = {});

/// Trace of X -> g X g^-1 on the Lie algebra.
Rational traceAd(const SemisimpleElement& g);

struct TraceField {
  PolyQ minpoly;  // of a primitive element
  std::size_t wordsExamined = 0;
  std::vector<Rational> traces;  // distinct values, ascending
};

/// Field generated by traceAd over words of length <= wordBudget in the
/// sample and its inverses. Throws InvalidArgument for an empty sample.
TraceField traceField(const std::vector<SemisimpleElement>& sample, int wordBudget);

}  // namespace wcm::weakcomm
