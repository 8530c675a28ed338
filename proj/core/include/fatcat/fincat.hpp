#pragma once

#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fatcat/errors.hpp"

namespace fatcat {

inline constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Morphism {
  std::string id;
  std::size_t source = 0;
  std::size_t target = 0;
};

/// Finite category with a dense composition table.
///
/// Objects and morphisms are addressed by index; each also carries a
/// canonical string id used in reports and JSON. The table is only
/// structurally validated on construction (no dangling ids); the category
/// laws are checked separately by check_category so that broken fixtures can
/// be represented and diagnosed.
class FinCategory {
 public:
  /// One composition entry: `result = second ∘ first`.
  struct CompositionEntry {
    std::string first;
    std::string second;
    std::string result;
  };
  struct MorphismSpec {
    std::string id;
    std::string source;
    std::string target;
  };

  FinCategory() = default;

  /// Builds from named tables. Throws StructuralError on duplicate or
  /// dangling identifiers, or a missing identity.
  static FinCategory from_tables(
      std::vector<std::string> objects, const std::vector<MorphismSpec>& morphisms,
      const std::vector<std::pair<std::string, std::string>>& identity,
      const std::vector<CompositionEntry>& compose);

  [[nodiscard]] std::size_t object_count() const { return objects_.size(); }
  [[nodiscard]] std::size_t morphism_count() const { return morphisms_.size(); }

  [[nodiscard]] const std::string& object(std::size_t o) const { return objects_.at(o); }
  [[nodiscard]] const Morphism& morphism(std::size_t f) const { return morphisms_.at(f); }
  [[nodiscard]] std::size_t source(std::size_t f) const { return morphisms_[f].source; }
  [[nodiscard]] std::size_t target(std::size_t f) const { return morphisms_[f].target; }
  [[nodiscard]] std::size_t identity(std::size_t o) const { return identity_[o]; }
  [[nodiscard]] bool is_identity(std::size_t f) const;

  /// `g ∘ f`, or kNone when the table has no entry for the pair.
  [[nodiscard]] std::size_t compose(std::size_t g, std::size_t f) const {
    return table_[g * morphisms_.size() + f];
  }

  [[nodiscard]] std::optional<std::size_t> find_object(std::string_view id) const;
  [[nodiscard]] std::optional<std::size_t> find_morphism(std::string_view id) const;
  [[nodiscard]] std::size_t object_index(std::string_view id) const;
  [[nodiscard]] std::size_t morphism_index(std::string_view id) const;

  /// Morphisms a → b in index order.
  [[nodiscard]] std::vector<std::size_t> hom(std::size_t a, std::size_t b) const;

  /// Returns a copy whose table entry for (g, f) is replaced; used to build
  /// deliberately broken fixtures.
  [[nodiscard]] FinCategory with_composite(std::size_t g, std::size_t f, std::size_t result) const;

  bool operator==(const FinCategory& other) const;

 private:
  friend class CategoryBuilder;

  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<std::size_t> identity_;
  std::vector<std::size_t> table_;
  std::unordered_map<std::string, std::size_t> object_index_;
  std::unordered_map<std::string, std::size_t> morphism_index_;
};

/// Incremental construction used by the generators in this module.
class CategoryBuilder {
 public:
  std::size_t add_object(std::string id);
  std::size_t add_morphism(std::string id, std::size_t source, std::size_t target);
  void set_identity(std::size_t object, std::size_t morphism);
  void set_composite(std::size_t g, std::size_t f, std::size_t result);
  [[nodiscard]] std::size_t morphism_count() const { return cat_.morphisms_.size(); }

  /// Throws StructuralError when an identity is missing.
  FinCategory build();

 private:
  FinCategory cat_;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> composites_;
};

using CategoryPtr = std::shared_ptr<const FinCategory>;

class FinGroupoid {
 public:
  /// Throws StructuralError when `inverse` is not total on morphisms.
  FinGroupoid(FinCategory base, std::vector<std::size_t> inverse);
  static FinGroupoid from_ids(FinCategory base,
                              const std::vector<std::pair<std::string, std::string>>& inverse);

  [[nodiscard]] const FinCategory& base() const { return base_; }
  [[nodiscard]] std::size_t inverse(std::size_t f) const { return inverse_[f]; }
  [[nodiscard]] const std::vector<std::size_t>& inverse_table() const { return inverse_; }

 private:
  FinCategory base_;
  std::vector<std::size_t> inverse_;
};

struct Functor {
  CategoryPtr source;
  CategoryPtr target;
  std::vector<std::size_t> object_map;
  std::vector<std::size_t> morphism_map;

  bool operator==(const Functor& other) const;
};

struct NatTransformation {
  Functor from;
  Functor to;
  /// component[o] : from(o) → to(o), a morphism of the common target category.
  std::vector<std::size_t> component;
};

/// Empty iff composition is defined exactly on composable pairs with correct
/// endpoints, associative, and unital.
Report check_category(const FinCategory& c);
Report check_groupoid(const FinGroupoid& g);
Report check_functor(const Functor& f);
Report check_natural(const NatTransformation& eta);

Functor identity_functor(const CategoryPtr& c);
/// `second ∘ first`.
Functor compose(const Functor& second, const Functor& first);

/// The ordinal [n] = {0 ≤ … ≤ n}.
FinCategory ordinal(int n);
/// ℕ truncated to {0 ≤ … ≤ N}.
FinCategory truncated_nat(int N);
FinCategory terminal_category();

/// One-object groupoid of ℤ/m (morphisms "e", "g1", "g2", …; m = 2 gives "e","s").
FinGroupoid cyclic_group(int m);
/// The pair (codiscrete) groupoid on `objects` objects: one morphism a → b for
/// every ordered pair.
FinGroupoid pair_groupoid(int objects);
FinGroupoid terminal_groupoid();

/// Segal's unraveled category truncated at N together with the bookkeeping
/// needed to recover base data from each object and morphism.
struct Unraveled {
  CategoryPtr base;
  CategoryPtr category;
  int N = 0;
  /// object index → (base object, level)
  std::vector<std::pair<std::size_t, int>> object_origin;
  struct Origin {
    std::size_t base_morphism;
    int from_level;
    int to_level;
  };
  std::vector<Origin> morphism_origin;

  /// Reconstructs the bookkeeping of an unraveled category from its canonical
  /// labels. Throws StructuralError when `candidate` is not of that shape.
  static Unraveled recognize(const CategoryPtr& base, const CategoryPtr& candidate, int N);
};

/// Subcategory of c × {0..N} dropping (f, i=i) for non-identity f.
Unraveled unravel(const CategoryPtr& c, int N);
FinCategory unravel_category(const FinCategory& c, int N);

/// (x,k) ↦ x, (f, i≤j) ↦ f.
Functor forgetful(const Unraveled& u);

/// Full subcategory on the objects accepted by `keep`, with its inclusion.
struct Subcategory {
  CategoryPtr category;
  Functor inclusion;
};
template <class Pred>
Subcategory full_subcategory(const CategoryPtr& c, Pred keep);
Subcategory full_subcategory_of(const CategoryPtr& c, const std::vector<bool>& keep);

/// Functor between categories with at most one morphism per hom-set, given
/// on objects. Throws StructuralError if a morphism has no image.
Functor poset_functor(const CategoryPtr& source, const CategoryPtr& target,
                      std::vector<std::size_t> object_map);

/// The equivalences relating [n]^ℕ, its full subcategory on k ≤ l, and [n].
struct OrdinalUnravelEquivalences {
  CategoryPtr ordinal;     // [n]
  CategoryPtr unraveled;   // [n]^ℕ, objects (k,l)
  CategoryPtr diagonal;    // [n]^{ℕ,′}: objects with k ≤ l
  Functor pi0;             // [n]^ℕ → [n], forgetful
  Functor pi1;             // [n]^ℕ → [n]^{ℕ,′}
  Functor pi2;             // [n]^{ℕ,′} → [n]
  Functor iota1;           // [n]^{ℕ,′} → [n]^ℕ
  Functor iota2;           // [n] → [n]^{ℕ,′}, k ↦ (k,k)
  NatTransformation phi1;  // id ⇒ ι₁∘π₁
  NatTransformation phi2;  // ι₂∘π₂ ⇒ id
  Report report;
};

/// Requires N ≥ n; throws PreconditionError otherwise.
OrdinalUnravelEquivalences ordinal_unravel_equivalences(int n, int N);

template <class Pred>
Subcategory full_subcategory(const CategoryPtr& c, Pred keep) {
  std::vector<bool> mask(c->object_count());
  for (std::size_t o = 0; o < mask.size(); ++o) mask[o] = keep(o);
  return full_subcategory_of(c, mask);
}

}  // namespace fatcat
