#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "fatcat/errors.hpp"
#include "fatcat/fincat.hpp"
#include "fatcat/homology.hpp"
#include "fatcat/integer.hpp"
#include "fatcat/simpset.hpp"

namespace fatcat {

// ---------------------------------------------------------------------------
// Finite simplicial complexes and covers

using Face = std::vector<std::size_t>;  // sorted vertex indices

/// Finite abstract simplicial complex; faces of each dimension in lex order.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Downward closure of `faces` plus every vertex. Throws StructuralError on
  /// unknown vertices or an empty face.
  static SimplicialComplex generated(std::vector<std::string> vertices, const std::vector<Face>& faces);

  [[nodiscard]] const std::vector<std::string>& vertices() const { return vertices_; }
  [[nodiscard]] int dimension() const { return static_cast<int>(faces_.size()) - 1; }
  [[nodiscard]] const std::vector<Face>& faces(int k) const { return faces_.at(k); }
  [[nodiscard]] std::size_t face_count() const;
  [[nodiscard]] std::size_t find(const Face& f) const;
  [[nodiscard]] std::string face_label(const Face& f) const;
  bool operator==(const SimplicialComplex&) const = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::vector<Face>> faces_;
  std::map<Face, std::size_t> index_;
};

/// Simplicial chains, ∂ = Σ (−1)^i (drop vertex i). Complete.
IntegerChainComplex simplicial_chains(const SimplicialComplex& x);

/// Subset of the faces of a complex, per dimension.
struct Subcomplex {
  std::vector<std::vector<bool>> member;

  [[nodiscard]] bool contains(int k, std::size_t f) const { return member[k][f]; }
  [[nodiscard]] bool empty() const;
  bool operator==(const Subcomplex&) const = default;
};

/// Connected components of a subcomplex by vertex-edge connectivity, numbered
/// by smallest vertex.
struct Components {
  std::size_t count = 0;
  std::vector<std::size_t> of_vertex;  // kNone outside the subcomplex
};

class CoveredComplex {
 public:
  CoveredComplex() = default;
  /// Each cover set is the downward closure of the listed faces. Throws
  /// StructuralError when a listed face is not in the complex or the union
  /// misses a face.
  CoveredComplex(SimplicialComplex x, const std::vector<std::vector<Face>>& cover);
  /// Cover given as subcomplexes; each must be downward closed.
  static CoveredComplex from_sets(SimplicialComplex x, std::vector<Subcomplex> cover);

  [[nodiscard]] const SimplicialComplex& complex() const { return complex_; }
  [[nodiscard]] std::size_t cover_size() const { return cover_.size(); }
  [[nodiscard]] const Subcomplex& cover_set(std::size_t a) const { return cover_.at(a); }
  /// ∩ of the listed cover sets (repeats allowed).
  [[nodiscard]] Subcomplex overlap(const std::vector<std::size_t>& indices) const;
  [[nodiscard]] Components components(const std::vector<std::size_t>& indices) const;
  [[nodiscard]] Components components(const Subcomplex& s) const;
  bool operator==(const CoveredComplex&) const = default;

 private:
  SimplicialComplex complex_;
  std::vector<Subcomplex> cover_;
};
using CoveredPtr = std::shared_ptr<const CoveredComplex>;
using GroupoidPtr = std::shared_ptr<const FinGroupoid>;

// ---------------------------------------------------------------------------
// Cocycles

/// G-valued cocycle: f_{βα} on each component of 𝔘_α ∩ 𝔘_β is a morphism
/// f_α → f_β. Keys are (α, β, component).
struct GCocycle {
  CoveredPtr base;
  GroupoidPtr groupoid;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> transitions;

  /// f_{βα} at vertex v, kNone when undefined.
  [[nodiscard]] std::size_t at_vertex(std::size_t a, std::size_t b, std::size_t v) const;
  /// Object f_α on the component of v in 𝔘_α.
  [[nodiscard]] std::size_t object_at(std::size_t a, std::size_t v) const;
  bool operator==(const GCocycle& o) const;
};

/// Empty iff f_{αα} are identities and f_{γβ}∘f_{βα} = f_{γα} on every
/// component of every triple overlap (repeats included). Throws
/// StructuralError when a transition is missing, refers to a nonexistent
/// component, or has endpoints inconsistent with the objects f_α.
Report check_cocycle(const GCocycle& u);

/// Every transition the identity at `object`.
GCocycle trivial_cocycle(const CoveredPtr& base, const GroupoidPtr& g, std::size_t object);

/// Isomorphism u ≅ v: φ_{γα} on components of 𝔘_α ∩ 𝔘′_γ, a morphism
/// u_α → v_γ. Keys are (α, γ, component).
struct CocycleIso {
  GCocycle from;
  GCocycle to;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> phi;

  [[nodiscard]] std::size_t at_vertex(std::size_t a, std::size_t g, std::size_t v) const;
};

/// The cocycle on the disjoint union of both covers formed by u, v and φ.
GCocycle union_cocycle(const CocycleIso& iso);
/// check_cocycle on the union cocycle.
Report check_iso(const CocycleIso& iso);
/// φ_{βα} = u_{βα}.
CocycleIso identity_iso(const GCocycle& u);
/// ψ_{αγ} = φ_{γα}⁻¹.
CocycleIso inverse_iso(const CocycleIso& iso);

struct IsoComposition {
  CocycleIso iso;
  Report report;
};
/// ρ_{εα} = ψ_{εγ}∘φ_{γα}, checked to be independent of γ on every component.
IsoComposition compose_isomorphisms(const CocycleIso& phi, const CocycleIso& psi);

/// v_{βα} = h_β ∘ u_{βα} ∘ h_α⁻¹ and the iso φ_{βα} = h_β ∘ u_{βα}. h maps
/// (α, component of 𝔘_α) to a morphism out of u_α.
CocycleIso gauge_transform(const GCocycle& u, const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& h);

/// Cocycle on X × [0,3] (levels 0..3, prisms triangulated by staircases):
/// 𝔘_α × [1,3] carry u, 𝔘′_γ × [0,2] carry v, and φ glues them on the middle
/// band [1,2].
struct PrismCocycle {
  GCocycle cocycle;
  std::size_t upper_count = 0;  // cover indices 0.. come from u, the rest from v
  SimplicialComplex bottom;  // X
  std::vector<std::vector<std::size_t>> level_vertex;  // level_vertex[l][x]
};
PrismCocycle concat_cocycle(const CocycleIso& iso);
/// Restriction to X × {level}: cover sets that miss the level are dropped.
GCocycle restrict_to_level(const PrismCocycle& p, int level);

// ---------------------------------------------------------------------------
// Blowup

/// Total complex of E_{p,q} = ⊕_{α₀<…<α_p} C_q(𝔘_{α₀…α_p}); generator
/// labels "(α₀,…,α_p|face)", ∂ = δ_Čech + (−1)^p ∂.
struct BlowupComplex {
  CoveredPtr base;
  ComplexPtr total;
  /// Per total degree and generator: (index set, face).
  std::vector<std::vector<std::pair<std::vector<std::size_t>, Face>>> generators;
};
BlowupComplex blowup(const CoveredPtr& base);
/// Projection keeping p = 0 generators.
ChainMap blowup_projection(const BlowupComplex& b);
/// Quasi-isomorphism of the projection through degree d.
QuasiIsoReport blowup_vs_base(const CoveredPtr& base, int d);

// ---------------------------------------------------------------------------
// Classifying complex

/// nerve(unravel(g, N)) with cells labelled "(f₁,…,f_k;i₀<…<i_k)"; repeated
/// indices are joined by "=". 0-cells are "(x;i)".
struct ClassifyingComplex {
  GroupoidPtr groupoid;
  int N = 0;
  int D = 0;
  TruncatedSimplicialSet set;
  std::vector<std::vector<std::vector<int>>> indices;         // per cell
  std::vector<std::vector<std::vector<std::size_t>>> arrows;  // base morphisms, k per k-cell
  std::vector<std::vector<std::size_t>> first_object;         // object at vertex 0

  [[nodiscard]] bool in_cover(int j, int k, std::size_t cell) const;
  [[nodiscard]] std::size_t find(int k, const std::vector<std::size_t>& arrows, const std::vector<int>& indices,
                                 std::size_t object) const;

  std::map<std::pair<std::vector<int>, std::vector<std::size_t>>, std::size_t> lookup_arrows;
  std::map<std::pair<int, std::size_t>, std::size_t> lookup_objects;  // (index, object) for 0-cells
};
ClassifyingComplex bg_complex(const GroupoidPtr& g, int N, int D);

/// γ_{to,from} on a cell: the composite along the cell when from < to, the
/// identity when equal, the inverse composite otherwise. Indices must occur
/// in the cell.
std::size_t universal_transition(const ClassifyingComplex& bg, int k, std::size_t cell, int from, int to);

/// Cocycle law, identities on the diagonal and face compatibility on every
/// cell.
Report check_universal_cocycle(const ClassifyingComplex& bg);

/// Blowup generator (α₀<…<α_p | v) ↦ (f_{α₁α₀}(v),…;α₀<…<α_p), higher
/// generators ↦ 0. Source is the blowup truncated at D. Throws
/// PreconditionError when the cover has more than N+1 sets.
struct ClassifyingMap {
  BlowupComplex blowup;
  ClassifyingComplex bg;
  ChainMap map;
  /// Image cell of each q = 0 generator (kNone for q > 0), per degree.
  std::vector<std::vector<std::size_t>> cells;
};
ClassifyingMap classifying_chain_map(const GCocycle& u, int N, int D);
/// γ pulled back along the cellwise map equals u on every blowup generator.
Report pullback_is_restriction(const ClassifyingMap& m, const GCocycle& u);

/// Drops degrees above D.
IntegerChainComplex truncate(const IntegerChainComplex& c, int D);

// ---------------------------------------------------------------------------
// Partitions of unity

struct PartitionPoint {
  std::vector<Rational> t;
  /// Throws PreconditionError unless nonnegative with exact sum 1.
  static PartitionPoint make(std::vector<Rational> t);
};

struct PartitionHomotopy {
  std::vector<Rational> w;
  std::vector<Rational> v;
};
/// w_i = max(0, t_i − s Σ_{j<i} t_j), v_i = w_i / Σ_j w_j.
PartitionHomotopy partition_homotopy(const PartitionPoint& t, const Rational& s);
/// Σ v = 1; v = t at s = 0; at s = 1, v_i = 0 whenever Σ_{j<i} t_j ≥ t_i.
Report check_partition_homotopy(const PartitionPoint& t, const Rational& s);

// ---------------------------------------------------------------------------
// Bundled examples

namespace examples {

/// Boundary of a triangle: vertices 0,1,2, three edges.
SimplicialComplex circle();
/// Cover of the circle by its three closed edges.
CoveredPtr circle_edge_cover();
/// Cover of the circle by closed vertex stars.
CoveredPtr circle_star_cover();
/// Octahedron (poles 0 and 5) covered by its two closed hemispheres.
CoveredPtr octahedron_hemispheres();
/// Random 2-complex on at most 50 faces covered by closed vertex stars.
CoveredPtr random_star_cover(unsigned seed);
/// Closed vertex stars of any complex.
CoveredPtr star_cover(const SimplicialComplex& x);

/// ℤ/2 cocycle on the edge cover with one flip between 𝔘₀ and 𝔘₁.
GCocycle mobius();
/// ℤ/2 data on the star cover whose flips break the law on a triple overlap.
GCocycle broken_flips();

}  // namespace examples

}  // namespace fatcat
