#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fatcat/errors.hpp"
#include "fatcat/fincat.hpp"
#include "fatcat/homology.hpp"
#include "fatcat/integer.hpp"
#include "fatcat/simpset.hpp"

namespace fatcat {

// ---------------------------------------------------------------------------
// Projection π : ||X × S(N)|| → ||X||

/// Chain map on fat chains sending (x, a) ↦ x.
ChainMap projection_pi(const SemiSimplicialSet& x, int N);
ChainMap projection_pi(const FinCategory& c, int N, int D);

// ---------------------------------------------------------------------------
// Barycentric subdivision

struct SubdivisionOperator {
  int n = 0;
  /// Simplicial chains of Δⁿ: basis = nonempty subsets, complete.
  ComplexPtr simplex;
  /// Chains of Sd Δⁿ: basis = flags A₀ ⊊ … ⊊ A_k, ∂ drops one member.
  ComplexPtr subdivided;
  /// Sd(σ) = Σ over maximal flags of σ, signed by the order in which the
  /// flag adds vertices.
  ChainMap map;
};
SubdivisionOperator subdivision_operator(int n);
/// ∂Sd = Sd∂ as an exact matrix identity.
Report check_subdivision(const SubdivisionOperator& sd);

/// Sign of the permutation listing the vertices of a maximal flag in the
/// order they are added.
int flag_sign(const BarycentricFlag& f);

// ---------------------------------------------------------------------------
// τ : ||X|| → ||X × S(N)||

/// τ(x) = Σ_F sign(F) · (u_F* x, 1<2<…<n+1) over maximal flags F of {0..n},
/// u_F(i) = max(A_i). Requires N ≥ D+1 so every size sequence is an S-cell.
ChainMap tau_chain_map(const TruncatedSimplicialSet& x, int N);

/// Cell-level face compatibility of the flag assignment: for every n-cell
/// (n ≤ max_n), face index i and flag B of Δ^{n−1}, the cell assigned to
/// (x, δ_i B) equals the cell assigned to (d_i x, B).
Report tau_face_compatibility(const TruncatedSimplicialSet& x, int N, int max_n);

/// (π∘τ)_* = id on H_k(fat_chains(nerve c)) for k ≤ d.
Report pi_tau_homology_check(const FinCategory& c, int N, int D, int d);

// ---------------------------------------------------------------------------
// ρ and its face defect

/// Exact point of Δⁿ: nonnegative rationals summing to 1.
struct BarycentricPoint {
  int n = 0;
  std::vector<Rational> t;

  /// Throws PreconditionError unless the coordinates are a point of Δⁿ.
  static BarycentricPoint make(std::vector<Rational> t);
  static BarycentricPoint vertex(int n, int i);
  [[nodiscard]] std::vector<std::string> labels() const;
};

/// s_{j,n}(t) = (j+1) Σ_{|E|=j+1} max(0, min_E t − max_{∉E} t), the empty
/// max being 0.
Rational rho_evaluate(int n, int j, const BarycentricPoint& t);

/// Sequence attached to the top simplex: "full" is 0<…<n (an n-cell of S),
/// "short" is 1<…<n read as labels on vertices 1..n.
enum class RhoReading { Full, Short };
std::string to_string(RhoReading r);

struct RhoWitness {
  bool found = false;
  int n = 0;
  RhoReading reading = RhoReading::Full;
  int face = -1;
  BarycentricPoint point;       // on the i-th face: t_i = 0
  std::vector<Rational> s_values;  // s_{j,n}(point), j = 0..n
  std::string simplex;          // the top simplex y of Ner [n]
  std::string image_then_face;  // d_i applied to the cell assigned to y
  std::string face_then_image;  // the cell assigned to d_i y
};
/// Searches faces i = 0..n of the top simplex of Ner [n] for a face where
/// the two composites land in different cells of ||X × S||.
RhoWitness rho_face_counterexample(int n, RhoReading reading);

// ---------------------------------------------------------------------------
// Comma fibers

/// y = p* x with x nondegenerate: drops identity arrows of the chain.
struct Factorization {
  int degree = 0;                  // m
  std::size_t cell = 0;            // x in degree m
  std::vector<int> surjection;     // p : [n] → [m] as a value sequence
};
Factorization factor_nondegenerate(const Nerve& nerve, int n, std::size_t y);

struct CommaFiber {
  CategoryPtr category;
  int N = 0;
  int D = 0;
  int n = 0;
  std::string simplex;             // label of y
  Factorization factor;
  std::string factor_label;        // label of x
  /// Pullback of Δᵐ → Ner c ← Ner c^ℕ, truncated at D.
  TruncatedSimplicialSet fiber;
  /// Legs per cell: the Δᵐ cell (vertex sequence) and the Ner c^ℕ cell.
  std::vector<std::vector<std::vector<int>>> simplex_leg;
  std::vector<std::vector<std::size_t>> unravel_leg;
};

/// Fiber over the n-simplex y of Ner c (any simplex; factored internally).
CommaFiber quillen_fiber(const CategoryPtr& c, int N, int D, int n, std::size_t y);

struct ContractibilityReport {
  std::vector<HomologyGroup> groups;
  Report report;
};
/// H₀ = ℤ and H_k = 0 for 1 ≤ k ≤ d on geometric chains of the fiber.
/// Throws PreconditionError when d ≥ D.
ContractibilityReport contractibility_report(const CommaFiber& f, int d);

struct FiberVerdict {
  int degree = 0;
  std::string simplex;
  std::string factor;
  std::vector<std::size_t> cell_counts;
  std::vector<HomologyGroup> groups;
  bool contractible = false;
};
struct QuillenSweep {
  std::vector<FiberVerdict> fibers;
  Report report;
};
/// Fibers over every simplex of Ner c through degree D, checked through
/// degree D−1. Fibers are shared between simplices with the same factor.
QuillenSweep verify_quillen_a(const CategoryPtr& c, int N, int D);

}  // namespace fatcat
