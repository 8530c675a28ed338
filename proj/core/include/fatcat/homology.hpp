#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fatcat/errors.hpp"
#include "fatcat/integer.hpp"
#include "fatcat/simpset.hpp"

namespace fatcat {

/// Column-sparse integer matrix. Entries within a column are kept sorted by
/// row with no explicit zeros.
class SparseMatrix {
 public:
  using Column = std::vector<std::pair<std::size_t, std::int64_t>>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return columns_.size(); }
  [[nodiscard]] const Column& column(std::size_t c) const { return columns_[c]; }
  [[nodiscard]] std::int64_t entry(std::size_t r, std::size_t c) const;
  [[nodiscard]] std::size_t nonzeros() const;

  /// Accumulates v into (r, c).
  void add(std::size_t r, std::size_t c, std::int64_t v);

  [[nodiscard]] bool is_zero() const;
  /// this · rhs
  [[nodiscard]] SparseMatrix multiply(const SparseMatrix& rhs) const;
  [[nodiscard]] SparseMatrix minus(const SparseMatrix& rhs) const;
  [[nodiscard]] std::vector<Integer> apply(const std::vector<Integer>& v) const;
  /// Entry (r, c) moves to (row_perm[r], col_perm[c]).
  [[nodiscard]] SparseMatrix permuted(const std::vector<std::size_t>& row_perm,
                                      const std::vector<std::size_t>& col_perm) const;

  bool operator==(const SparseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

/// Free chain complex truncated at degree D. boundary[k] is n_{k−1} × n_k,
/// boundary[0] is 0 × n_0. `complete` marks complexes with no cells above D
/// (finite simplicial complexes), whose top homology is then exact.
struct IntegerChainComplex {
  int D = -1;
  bool complete = false;
  std::vector<std::vector<std::string>> basis;
  std::vector<SparseMatrix> boundary;

  [[nodiscard]] std::size_t rank(int k) const { return basis.at(k).size(); }
  [[nodiscard]] std::vector<std::size_t> ranks() const;
  bool operator==(const IntegerChainComplex&) const = default;
};
using ComplexPtr = std::shared_ptr<const IntegerChainComplex>;

/// Shape consistency and ∂∂ = 0 in every degree.
Report check_complex(const IntegerChainComplex& c);

/// Relabels: basis element x of degree k moves to position perms[k][x].
IntegerChainComplex permuted(const IntegerChainComplex& c, const std::vector<std::vector<std::size_t>>& perms);

struct HomologyGroup {
  int degree = 0;
  std::size_t betti = 0;
  /// Invariant factors, each ≥ 2, each dividing the next.
  std::vector<Integer> torsion;
  /// False when the degree sits at the truncation edge of an incomplete complex.
  bool reliable = true;

  [[nodiscard]] bool isomorphic(const HomologyGroup& o) const { return betti == o.betti && torsion == o.torsion; }
  [[nodiscard]] bool is_trivial() const { return betti == 0 && torsion.empty(); }
  /// "0", "ℤ", "ℤ^2 ⊕ ℤ/2", …
  [[nodiscard]] std::string describe() const;
  bool operator==(const HomologyGroup&) const = default;
};

/// H_k = ker ∂_k / im ∂_{k+1}. Throws PreconditionError for k outside [0, D].
HomologyGroup homology(const IntegerChainComplex& c, int k);
std::vector<HomologyGroup> homology_through(const IntegerChainComplex& c, int d);

/// H_k with explicit cycle representatives and a coordinate functional.
struct HomologyPresentation {
  HomologyGroup group;
  /// Per generator: its order (≥ 2) for torsion, 0 for free.
  std::vector<Integer> orders;
  /// Cycle representative of each generator, dense over basis[k].
  std::vector<std::vector<Integer>> generators;
  /// Row g applied to a cycle yields its coordinate on generator g.
  std::vector<std::vector<Integer>> functional;

  /// Coordinates of a cycle, torsion coordinates reduced to [0, order).
  [[nodiscard]] std::vector<Integer> coordinates(const std::vector<Integer>& cycle) const;
};
HomologyPresentation present(const IntegerChainComplex& c, int k);

/// ∂ = Σ (−1)^i d_i on all cells. Throws StructuralError when the input
/// fails its identity audit.
IntegerChainComplex fat_chains(const SemiSimplicialSet& x);
/// Normalized chains: nondegenerate cells, degenerate faces dropped.
IntegerChainComplex geometric_chains(const TruncatedSimplicialSet& x);

struct ChainMap {
  ComplexPtr source;
  ComplexPtr target;
  /// matrices[k]: target n_k × source n_k.
  std::vector<SparseMatrix> matrices;
};

/// Shapes and ∂f = f∂ in every degree both complexes define.
Report check_chain_map(const ChainMap& f);
ChainMap identity_map(const ComplexPtr& c);
/// `second ∘ first`.
ChainMap compose(const ChainMap& second, const ChainMap& first);

/// Chain map on fat chains. Throws StructuralError when f fails its audit.
ChainMap induced_map(const SimplicialMap& f);
/// Projection of fat chains onto normalized chains.
ChainMap normalization_projection(const TruncatedSimplicialSet& x);
/// Span of nondegenerate cells inside fat chains. A chain map only when that
/// span is closed under ∂; check_chain_map reports otherwise.
ChainMap normalization_inclusion(const TruncatedSimplicialSet& x);

struct QuasiIsoReport {
  std::vector<HomologyGroup> source;
  std::vector<HomologyGroup> target;
  Report report;
};
/// Checks f_* : H_k(source) → H_k(target) is an isomorphism for k ≤ d: the
/// groups agree and the induced map on representatives is onto.
/// Throws PreconditionError when either side is unreliable at some k ≤ d.
QuasiIsoReport quasi_iso_through(const ChainMap& f, int d);
QuasiIsoReport quasi_iso_through(const SimplicialMap& f, int d);

/// Checks f_* is the identity on H_k for k ≤ d. Source and target must be
/// equal complexes.
Report induces_identity_through(const ChainMap& f, int d);

}  // namespace fatcat
