#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fatcat/errors.hpp"
#include "fatcat/fincat.hpp"

namespace fatcat {

/// Maximum number of cells a single construction may enumerate. Read from
/// the FATCAT_MAX_CELLS environment variable, default 20000.
std::size_t cell_limit();

/// Degree-indexed cells with face maps up to a truncation degree D.
///
/// cells[k] holds canonical labels; face(k, i, x) is d_i : X_k → X_{k-1}
/// for 1 ≤ k ≤ D, 0 ≤ i ≤ k.
class SemiSimplicialSet {
 public:
  SemiSimplicialSet() = default;
  /// `faces[k][i][x]` for k ≥ 1. Throws StructuralError on shape mismatch or
  /// duplicate labels.
  SemiSimplicialSet(int top_degree, std::vector<std::vector<std::string>> labels,
                    std::vector<std::vector<std::vector<std::size_t>>> faces);
  SemiSimplicialSet(const SemiSimplicialSet&) = default;
  SemiSimplicialSet(SemiSimplicialSet&&) = default;
  SemiSimplicialSet& operator=(const SemiSimplicialSet&) = default;
  SemiSimplicialSet& operator=(SemiSimplicialSet&&) = default;
  virtual ~SemiSimplicialSet() = default;

  [[nodiscard]] int top_degree() const { return top_degree_; }
  [[nodiscard]] std::size_t cell_count(int k) const { return labels_.at(k).size(); }
  [[nodiscard]] std::vector<std::size_t> cell_counts() const;
  [[nodiscard]] std::size_t total_cells() const;
  [[nodiscard]] const std::string& label(int k, std::size_t x) const { return labels_[k][x]; }
  [[nodiscard]] const std::vector<std::string>& labels(int k) const { return labels_.at(k); }
  [[nodiscard]] std::optional<std::size_t> find(int k, std::string_view label) const;
  [[nodiscard]] std::size_t face(int k, int i, std::size_t x) const { return faces_[k][i][x]; }
  [[nodiscard]] const std::vector<std::vector<std::vector<std::size_t>>>& face_tables() const {
    return faces_;
  }

 private:
  int top_degree_ = -1;
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::vector<std::vector<std::size_t>>> faces_;
  std::vector<std::unordered_map<std::string, std::size_t>> index_;
};

/// Semi-simplicial set with degeneracies s_i : X_k → X_{k+1} for k < D.
class TruncatedSimplicialSet : public SemiSimplicialSet {
 public:
  TruncatedSimplicialSet() = default;
  TruncatedSimplicialSet(int top_degree, std::vector<std::vector<std::string>> labels,
                         std::vector<std::vector<std::vector<std::size_t>>> faces,
                         std::vector<std::vector<std::vector<std::size_t>>> degeneracies);

  [[nodiscard]] std::size_t degeneracy(int k, int i, std::size_t x) const {
    return degeneracies_[k][i][x];
  }
  [[nodiscard]] const std::vector<std::vector<std::vector<std::size_t>>>& degeneracy_tables() const {
    return degeneracies_;
  }
  /// A k-cell is degenerate iff it is s_i of some (k−1)-cell.
  [[nodiscard]] bool is_degenerate(int k, std::size_t x) const { return degenerate_[k][x]; }
  [[nodiscard]] std::vector<std::size_t> nondegenerate(int k) const;

  /// θ^* x for a monotone θ : [m] → [n] given as its value sequence,
  /// x an n-cell. Requires m ≤ D.
  [[nodiscard]] std::size_t apply_operator(int n, std::size_t x, std::span<const int> theta) const;

 private:
  std::vector<std::vector<std::vector<std::size_t>>> degeneracies_;
  std::vector<std::vector<bool>> degenerate_;
};

using SemiSimplicialPtr = std::shared_ptr<const SemiSimplicialSet>;

/// Per-degree cell maps between sets of equal truncation.
struct SimplicialMap {
  SemiSimplicialPtr source;
  SemiSimplicialPtr target;
  std::vector<std::vector<std::size_t>> cells;
};

/// d_i d_j = d_{j−1} d_i for i < j, wherever defined.
Report audit_faces(const SemiSimplicialSet& x);
/// Face identities plus s_i s_j = s_{j+1} s_i (i ≤ j) and the three
/// interchange laws, within truncation.
Report audit_simplicial(const TruncatedSimplicialSet& x);
/// Commutation with faces, and with degeneracies when both ends have them.
Report audit_map(const SimplicialMap& f);

/// Nerve of a finite category with the arrow sequence behind every cell.
struct Nerve {
  CategoryPtr category;
  TruncatedSimplicialSet simplices;
  /// chains[k][x]: arrows f₁,…,f_k (k ≥ 1); for k = 0 a single object index.
  std::vector<std::vector<std::vector<std::size_t>>> chains;
  /// Cell for a chain, kNone if absent.
  [[nodiscard]] std::size_t find(int k, const std::vector<std::size_t>& chain) const;
  /// Vertex j of a k-cell.
  [[nodiscard]] std::size_t vertex(int k, std::size_t x, int j) const;

  std::map<std::vector<std::size_t>, std::size_t> lookup_0;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> lookup;
};

Nerve build_nerve(const CategoryPtr& c, int D);
TruncatedSimplicialSet nerve(const FinCategory& c, int D);

/// Strictly increasing (k+1)-tuples in {0..N}, k ≤ D.
SemiSimplicialSet s_semisimplicial(int N, int D);
/// Strictly increasing sequence behind an S-cell label.
std::vector<int> parse_increasing(std::string_view label);
std::string increasing_label(std::span<const int> seq);

/// Degreewise product X × S; cell (x, a) has index x·|S_k| + a.
SemiSimplicialSet product_with_S(const SemiSimplicialSet& x, const SemiSimplicialSet& s);

/// X^ℕ: cells are (k₀ ≤ … ≤ k_n, y ∈ Y_{l−1}) with l distinct values.
struct UnraveledSimplicial {
  TruncatedSimplicialSet set;
  /// For every cell: its index sequence and the Y-cell (degree l−1).
  std::vector<std::vector<std::vector<int>>> sequence;
  std::vector<std::vector<std::size_t>> y_cell;
  std::map<std::pair<std::vector<int>, std::size_t>, std::size_t> lookup_by_key;
};
UnraveledSimplicial unravel_simplicial(const TruncatedSimplicialSet& y, int N);

/// Checks nerve(unravel(c,N)) ≅ unravel_simplicial(nerve(c),N) cellwise,
/// commuting with faces and degeneracies.
Report verify_unravel_nerve_iso(const CategoryPtr& c, int N, int D);
/// Checks the strictly increasing part of unravel_simplicial(y,N) is
/// product_with_S(y, S(N)) cellwise, commuting with faces.
Report verify_strict_part_is_product(const TruncatedSimplicialSet& y, int N);

struct CellBijectionReport {
  std::vector<std::size_t> product_counts;
  std::vector<std::size_t> nondegenerate_counts;
  Report report;
};
/// (c₀→…→c_k, i₀<…<i_k) ↦ (c₀,i₀)→…→(c_k,i_k) is a bijection onto the
/// nondegenerate cells of nerve(unravel(c,N)), commuting with faces.
CellBijectionReport unravel_cell_bijection(const CategoryPtr& c, int N, int D);

/// A ₀ ⊊ A₁ ⊊ … ⊊ A_k of nonempty subsets of {0..n}, stored as bitmasks.
struct BarycentricFlag {
  int n = 0;
  std::vector<std::uint32_t> chain;

  [[nodiscard]] std::vector<int> sizes() const;
  [[nodiscard]] std::vector<int> maxima() const;
  [[nodiscard]] bool is_maximal() const;
  [[nodiscard]] std::string label() const;
  bool operator==(const BarycentricFlag&) const = default;
};

std::vector<BarycentricFlag> sd_flags(int n, int k);

}  // namespace fatcat
