#include "fatcat/fincat.hpp"

#include <algorithm>
#include <set>

namespace fatcat {

namespace {

std::string unravel_object_label(const std::string& x, int i) {
  return "(" + x + "," + std::to_string(i) + ")";
}

std::string unravel_morphism_label(const std::string& f, int i, int j) {
  return "(" + f + "," + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// FinCategory

bool FinCategory::is_identity(std::size_t f) const {
  return identity_[morphisms_[f].source] == f;
}

std::optional<std::size_t> FinCategory::find_object(std::string_view id) const {
  auto it = object_index_.find(std::string(id));
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FinCategory::find_morphism(std::string_view id) const {
  auto it = morphism_index_.find(std::string(id));
  if (it == morphism_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FinCategory::object_index(std::string_view id) const {
  if (auto o = find_object(id)) return *o;
  throw StructuralError("unknown object '" + std::string(id) + "'");
}

std::size_t FinCategory::morphism_index(std::string_view id) const {
  if (auto f = find_morphism(id)) return *f;
  throw StructuralError("unknown morphism '" + std::string(id) + "'");
}

std::vector<std::size_t> FinCategory::hom(std::size_t a, std::size_t b) const {
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < morphisms_.size(); ++f) {
    if (morphisms_[f].source == a && morphisms_[f].target == b) out.push_back(f);
  }
  return out;
}

FinCategory FinCategory::with_composite(std::size_t g, std::size_t f, std::size_t result) const {
  FinCategory copy = *this;
  copy.table_.at(g * morphisms_.size() + f) = result;
  return copy;
}

bool FinCategory::operator==(const FinCategory& other) const {
  if (objects_ != other.objects_ || identity_ != other.identity_ || table_ != other.table_) {
    return false;
  }
  if (morphisms_.size() != other.morphisms_.size()) return false;
  for (std::size_t f = 0; f < morphisms_.size(); ++f) {
    const auto& a = morphisms_[f];
    const auto& b = other.morphisms_[f];
    if (a.id != b.id || a.source != b.source || a.target != b.target) return false;
  }
  return true;
}

FinCategory FinCategory::from_tables(
    std::vector<std::string> objects, const std::vector<MorphismSpec>& morphisms,
    const std::vector<std::pair<std::string, std::string>>& identity,
    const std::vector<CompositionEntry>& compose) {
  CategoryBuilder b;
  std::unordered_map<std::string, std::size_t> obj;
  for (auto& o : objects) {
    if (obj.count(o)) throw StructuralError("duplicate object '" + o + "'");
    obj[o] = b.add_object(o);
  }
  auto lookup_object = [&](const std::string& id) {
    auto it = obj.find(id);
    if (it == obj.end()) throw StructuralError("dangling object id '" + id + "'");
    return it->second;
  };
  std::unordered_map<std::string, std::size_t> mor;
  for (const auto& m : morphisms) {
    if (mor.count(m.id)) throw StructuralError("duplicate morphism '" + m.id + "'");
    mor[m.id] = b.add_morphism(m.id, lookup_object(m.source), lookup_object(m.target));
  }
  auto lookup_morphism = [&](const std::string& id) {
    auto it = mor.find(id);
    if (it == mor.end()) throw StructuralError("dangling morphism id '" + id + "'");
    return it->second;
  };
  for (const auto& [o, f] : identity) b.set_identity(lookup_object(o), lookup_morphism(f));
  for (const auto& e : compose) {
    b.set_composite(lookup_morphism(e.second), lookup_morphism(e.first), lookup_morphism(e.result));
  }
  return b.build();
}

// ---------------------------------------------------------------------------
// CategoryBuilder

std::size_t CategoryBuilder::add_object(std::string id) {
  std::size_t o = cat_.objects_.size();
  cat_.object_index_[id] = o;
  cat_.objects_.push_back(std::move(id));
  cat_.identity_.push_back(kNone);
  return o;
}

std::size_t CategoryBuilder::add_morphism(std::string id, std::size_t source, std::size_t target) {
  if (source >= cat_.objects_.size() || target >= cat_.objects_.size()) {
    throw StructuralError("morphism '" + id + "' has a dangling endpoint");
  }
  std::size_t f = cat_.morphisms_.size();
  cat_.morphism_index_[id] = f;
  cat_.morphisms_.push_back({std::move(id), source, target});
  return f;
}

void CategoryBuilder::set_identity(std::size_t object, std::size_t morphism) {
  cat_.identity_.at(object) = morphism;
}

void CategoryBuilder::set_composite(std::size_t g, std::size_t f, std::size_t result) {
  composites_.emplace_back(g, f, result);
}

FinCategory CategoryBuilder::build() {
  const std::size_t m = cat_.morphisms_.size();
  for (std::size_t o = 0; o < cat_.objects_.size(); ++o) {
    if (cat_.identity_[o] == kNone) {
      throw StructuralError("object '" + cat_.objects_[o] + "' has no identity");
    }
  }
  cat_.table_.assign(m * m, kNone);
  for (auto [g, f, h] : composites_) {
    if (g >= m || f >= m || h >= m) throw StructuralError("composition entry out of range");
    cat_.table_[g * m + f] = h;
  }
  composites_.clear();
  return std::move(cat_);
}

// ---------------------------------------------------------------------------
// Groupoids, functors

FinGroupoid::FinGroupoid(FinCategory base, std::vector<std::size_t> inverse)
    : base_(std::move(base)), inverse_(std::move(inverse)) {
  if (inverse_.size() != base_.morphism_count()) {
    throw StructuralError("inverse map is not total on morphisms");
  }
  for (auto f : inverse_) {
    if (f >= base_.morphism_count()) throw StructuralError("inverse map has a dangling id");
  }
}

FinGroupoid FinGroupoid::from_ids(FinCategory base,
                                  const std::vector<std::pair<std::string, std::string>>& inverse) {
  std::vector<std::size_t> inv(base.morphism_count(), kNone);
  for (const auto& [f, g] : inverse) inv[base.morphism_index(f)] = base.morphism_index(g);
  for (std::size_t f = 0; f < inv.size(); ++f) {
    if (inv[f] == kNone) {
      throw StructuralError("inverse map missing morphism '" + base.morphism(f).id + "'");
    }
  }
  return FinGroupoid(std::move(base), std::move(inv));
}

bool Functor::operator==(const Functor& other) const {
  return *source == *other.source && *target == *other.target &&
         object_map == other.object_map && morphism_map == other.morphism_map;
}

Report check_category(const FinCategory& c) {
  Report r;
  const std::size_t m = c.morphism_count();
  for (std::size_t o = 0; o < c.object_count(); ++o) {
    auto e = c.identity(o);
    if (c.source(e) != o || c.target(e) != o) {
      r.push_back({"identity-endpoints", {c.object(o), c.morphism(e).id}, "identity is not an endomorphism of its object"});
    }
  }
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t f = 0; f < m; ++f) {
      auto h = c.compose(g, f);
      bool composable = c.target(f) == c.source(g);
      if (composable && h == kNone) {
        r.push_back({"composition-total", {c.morphism(g).id, c.morphism(f).id}, "composable pair has no composite"});
      } else if (!composable && h != kNone) {
        r.push_back({"composition-domain", {c.morphism(g).id, c.morphism(f).id}, "composite defined on a non-composable pair"});
      } else if (composable && (c.source(h) != c.source(f) || c.target(h) != c.target(g))) {
        r.push_back({"composition-endpoints", {c.morphism(g).id, c.morphism(f).id, c.morphism(h).id}, "composite has wrong endpoints"});
      }
    }
  }
  for (std::size_t f = 0; f < m; ++f) {
    if (c.compose(f, c.identity(c.source(f))) != f) {
      r.push_back({"identity-law", {c.morphism(f).id, c.morphism(c.identity(c.source(f))).id}, "f ∘ id ≠ f"});
    }
    if (c.compose(c.identity(c.target(f)), f) != f) {
      r.push_back({"identity-law", {c.morphism(c.identity(c.target(f))).id, c.morphism(f).id}, "id ∘ f ≠ f"});
    }
  }
  for (std::size_t f = 0; f < m; ++f) {
    for (std::size_t g = 0; g < m; ++g) {
      if (c.target(f) != c.source(g)) continue;
      auto gf = c.compose(g, f);
      for (std::size_t h = 0; h < m; ++h) {
        if (c.target(g) != c.source(h)) continue;
        auto hg = c.compose(h, g);
        if (gf == kNone || hg == kNone) continue;
        auto left = c.compose(h, gf);
        auto right = c.compose(hg, f);
        if (left != right) {
          r.push_back({"associativity", {c.morphism(h).id, c.morphism(g).id, c.morphism(f).id}, "h∘(g∘f) ≠ (h∘g)∘f"});
        }
      }
    }
  }
  return r;
}

Report check_groupoid(const FinGroupoid& g) {
  const auto& c = g.base();
  Report r;
  for (std::size_t f = 0; f < c.morphism_count(); ++f) {
    auto inv = g.inverse(f);
    const auto& fid = c.morphism(f).id;
    if (c.source(inv) != c.target(f)) r.push_back({"inverse-source", {fid}, "s∘i ≠ t"});
    if (c.target(inv) != c.source(f)) r.push_back({"inverse-target", {fid}, "t∘i ≠ s"});
    if (c.compose(inv, f) != c.identity(c.source(f))) {
      r.push_back({"left-inverse", {fid}, "f⁻¹∘f ≠ id at source"});
    }
    if (c.compose(f, inv) != c.identity(c.target(f))) {
      r.push_back({"right-inverse", {fid}, "f∘f⁻¹ ≠ id at target"});
    }
  }
  return r;
}

Report check_functor(const Functor& F) {
  Report r;
  const auto& a = *F.source;
  const auto& b = *F.target;
  if (F.object_map.size() != a.object_count() || F.morphism_map.size() != a.morphism_count()) {
    throw StructuralError("functor maps are not total");
  }
  for (std::size_t f = 0; f < a.morphism_count(); ++f) {
    auto Ff = F.morphism_map[f];
    if (Ff >= b.morphism_count()) throw StructuralError("functor morphism map has a dangling id");
    if (b.source(Ff) != F.object_map[a.source(f)] || b.target(Ff) != F.object_map[a.target(f)]) {
      r.push_back({"functor-endpoints", {a.morphism(f).id, b.morphism(Ff).id}, "endpoints not preserved"});
    }
  }
  for (std::size_t o = 0; o < a.object_count(); ++o) {
    if (F.morphism_map[a.identity(o)] != b.identity(F.object_map[o])) {
      r.push_back({"functor-identity", {a.object(o)}, "identity not preserved"});
    }
  }
  for (std::size_t f = 0; f < a.morphism_count(); ++f) {
    for (std::size_t g = 0; g < a.morphism_count(); ++g) {
      auto gf = a.compose(g, f);
      if (gf == kNone) continue;
      if (F.morphism_map[gf] != b.compose(F.morphism_map[g], F.morphism_map[f])) {
        r.push_back({"functor-composition", {a.morphism(g).id, a.morphism(f).id}, "F(g∘f) ≠ F(g)∘F(f)"});
      }
    }
  }
  return r;
}

Report check_natural(const NatTransformation& eta) {
  Report r;
  const auto& a = *eta.from.source;
  const auto& b = *eta.from.target;
  if (eta.component.size() != a.object_count()) throw StructuralError("components not total");
  for (std::size_t o = 0; o < a.object_count(); ++o) {
    auto c = eta.component[o];
    if (b.source(c) != eta.from.object_map[o] || b.target(c) != eta.to.object_map[o]) {
      r.push_back({"component-endpoints", {a.object(o), b.morphism(c).id}, "component has wrong endpoints"});
    }
  }
  for (std::size_t f = 0; f < a.morphism_count(); ++f) {
    auto left = b.compose(eta.to.morphism_map[f], eta.component[a.source(f)]);
    auto right = b.compose(eta.component[a.target(f)], eta.from.morphism_map[f]);
    if (left != right || left == kNone) {
      r.push_back({"naturality", {a.morphism(f).id}, "naturality square does not commute"});
    }
  }
  return r;
}

Functor identity_functor(const CategoryPtr& c) {
  Functor F{c, c, {}, {}};
  for (std::size_t o = 0; o < c->object_count(); ++o) F.object_map.push_back(o);
  for (std::size_t f = 0; f < c->morphism_count(); ++f) F.morphism_map.push_back(f);
  return F;
}

Functor compose(const Functor& second, const Functor& first) {
  Functor F{first.source, second.target, {}, {}};
  for (auto o : first.object_map) F.object_map.push_back(second.object_map.at(o));
  for (auto f : first.morphism_map) F.morphism_map.push_back(second.morphism_map.at(f));
  return F;
}

Functor poset_functor(const CategoryPtr& source, const CategoryPtr& target,
                      std::vector<std::size_t> object_map) {
  Functor F{source, target, std::move(object_map), {}};
  for (std::size_t f = 0; f < source->morphism_count(); ++f) {
    auto h = target->hom(F.object_map[source->source(f)], F.object_map[source->target(f)]);
    if (h.size() != 1) {
      throw StructuralError("no unique image for morphism '" + source->morphism(f).id + "'");
    }
    F.morphism_map.push_back(h.front());
  }
  return F;
}

// ---------------------------------------------------------------------------
// Generators

FinCategory ordinal(int n) {
  if (n < 0) throw PreconditionError("ordinal: n must be ≥ 0");
  CategoryBuilder b;
  for (int k = 0; k <= n; ++k) b.add_object(std::to_string(k));
  std::vector<std::vector<std::size_t>> arrow(n + 1, std::vector<std::size_t>(n + 1, kNone));
  for (int k = 0; k <= n; ++k) {
    for (int l = k; l <= n; ++l) {
      std::string id = k == l ? "id_" + std::to_string(k) : std::to_string(k) + "->" + std::to_string(l);
      arrow[k][l] = b.add_morphism(id, k, l);
    }
    b.set_identity(k, arrow[k][k]);
  }
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k) b.set_composite(arrow[j][k], arrow[i][j], arrow[i][k]);
  return b.build();
}

FinCategory truncated_nat(int N) {
  if (N < 0) throw PreconditionError("truncated_nat: N must be ≥ 0");
  CategoryBuilder b;
  for (int k = 0; k <= N; ++k) b.add_object(std::to_string(k));
  std::vector<std::vector<std::size_t>> arrow(N + 1, std::vector<std::size_t>(N + 1, kNone));
  for (int k = 0; k <= N; ++k) {
    for (int l = k; l <= N; ++l) {
      arrow[k][l] = b.add_morphism(std::to_string(k) + "<=" + std::to_string(l), k, l);
    }
    b.set_identity(k, arrow[k][k]);
  }
  for (int i = 0; i <= N; ++i)
    for (int j = i; j <= N; ++j)
      for (int k = j; k <= N; ++k) b.set_composite(arrow[j][k], arrow[i][j], arrow[i][k]);
  return b.build();
}

FinCategory terminal_category() {
  CategoryBuilder b;
  b.add_object("*");
  auto e = b.add_morphism("id_*", 0, 0);
  b.set_identity(0, e);
  b.set_composite(e, e, e);
  return b.build();
}

FinGroupoid terminal_groupoid() { return FinGroupoid(terminal_category(), {0}); }

FinGroupoid cyclic_group(int m) {
  if (m < 1) throw PreconditionError("cyclic_group: order must be ≥ 1");
  CategoryBuilder b;
  b.add_object("*");
  for (int k = 0; k < m; ++k) {
    std::string id = k == 0 ? "e" : (m == 2 ? "s" : "g" + std::to_string(k));
    b.add_morphism(id, 0, 0);
  }
  b.set_identity(0, 0);
  std::vector<std::size_t> inverse(m);
  for (int a = 0; a < m; ++a) {
    inverse[a] = (m - a) % m;
    for (int c = 0; c < m; ++c) b.set_composite(c, a, (a + c) % m);
  }
  return FinGroupoid(b.build(), std::move(inverse));
}

FinGroupoid pair_groupoid(int objects) {
  if (objects < 1) throw PreconditionError("pair_groupoid: need at least one object");
  CategoryBuilder b;
  for (int a = 0; a < objects; ++a) b.add_object(std::to_string(a));
  std::vector<std::vector<std::size_t>> arrow(objects, std::vector<std::size_t>(objects));
  for (int a = 0; a < objects; ++a)
    for (int c = 0; c < objects; ++c)
      arrow[a][c] = b.add_morphism(std::to_string(a) + "->" + std::to_string(c), a, c);
  for (int a = 0; a < objects; ++a) b.set_identity(a, arrow[a][a]);
  for (int a = 0; a < objects; ++a)
    for (int c = 0; c < objects; ++c)
      for (int d = 0; d < objects; ++d) b.set_composite(arrow[c][d], arrow[a][c], arrow[a][d]);
  std::vector<std::size_t> inverse(objects * objects);
  for (int a = 0; a < objects; ++a)
    for (int c = 0; c < objects; ++c) inverse[arrow[a][c]] = arrow[c][a];
  return FinGroupoid(b.build(), std::move(inverse));
}

// ---------------------------------------------------------------------------
// Unraveling

Unraveled unravel(const CategoryPtr& c, int N) {
  if (N < 0) throw PreconditionError("unravel: N must be ≥ 0");
  Unraveled u;
  u.base = c;
  u.N = N;
  CategoryBuilder b;
  const std::size_t levels = static_cast<std::size_t>(N) + 1;
  for (std::size_t x = 0; x < c->object_count(); ++x) {
    for (int i = 0; i <= N; ++i) {
      b.add_object(unravel_object_label(c->object(x), i));
      u.object_origin.emplace_back(x, i);
    }
  }
  auto obj = [&](std::size_t x, int i) { return x * levels + static_cast<std::size_t>(i); };
  // index of (f, i, j) for i ≤ j
  std::vector<std::vector<std::vector<std::size_t>>> idx(
      c->morphism_count(), std::vector<std::vector<std::size_t>>(levels, std::vector<std::size_t>(levels, kNone)));
  for (std::size_t f = 0; f < c->morphism_count(); ++f) {
    for (int i = 0; i <= N; ++i) {
      for (int j = i; j <= N; ++j) {
        if (i == j && !c->is_identity(f)) continue;
        idx[f][i][j] = b.add_morphism(unravel_morphism_label(c->morphism(f).id, i, j),
                                      obj(c->source(f), i), obj(c->target(f), j));
        u.morphism_origin.push_back({f, i, j});
      }
    }
  }
  for (std::size_t x = 0; x < c->object_count(); ++x)
    for (int i = 0; i <= N; ++i) b.set_identity(obj(x, i), idx[c->identity(x)][i][i]);
  const std::size_t m = b.morphism_count();
  for (std::size_t p = 0; p < m; ++p) {
    const auto& fo = u.morphism_origin[p];
    for (std::size_t q = 0; q < m; ++q) {
      const auto& go = u.morphism_origin[q];
      if (go.from_level != fo.to_level) continue;
      if (c->target(fo.base_morphism) != c->source(go.base_morphism)) continue;
      auto h = c->compose(go.base_morphism, fo.base_morphism);
      if (h == kNone) continue;
      auto r = idx[h][fo.from_level][go.to_level];
      if (r != kNone) b.set_composite(q, p, r);
    }
  }
  u.category = std::make_shared<const FinCategory>(b.build());
  return u;
}

FinCategory unravel_category(const FinCategory& c, int N) {
  return *unravel(std::make_shared<const FinCategory>(c), N).category;
}

Unraveled Unraveled::recognize(const CategoryPtr& base, const CategoryPtr& candidate, int N) {
  Unraveled expected = unravel(base, N);
  const auto& e = *expected.category;
  const auto& c = *candidate;
  if (e.object_count() != c.object_count() || e.morphism_count() != c.morphism_count()) {
    throw StructuralError("category is not of unraveled shape (size mismatch)");
  }
  Unraveled u;
  u.base = base;
  u.category = candidate;
  u.N = N;
  u.object_origin.resize(c.object_count());
  u.morphism_origin.resize(c.morphism_count());
  for (std::size_t o = 0; o < e.object_count(); ++o) {
    auto at = c.find_object(e.object(o));
    if (!at) throw StructuralError("missing unraveled object '" + e.object(o) + "'");
    u.object_origin[*at] = expected.object_origin[o];
  }
  for (std::size_t f = 0; f < e.morphism_count(); ++f) {
    auto at = c.find_morphism(e.morphism(f).id);
    if (!at) throw StructuralError("missing unraveled morphism '" + e.morphism(f).id + "'");
    if (c.object(c.source(*at)) != e.object(e.source(f)) ||
        c.object(c.target(*at)) != e.object(e.target(f))) {
      throw StructuralError("unraveled morphism '" + e.morphism(f).id + "' has wrong endpoints");
    }
    u.morphism_origin[*at] = expected.morphism_origin[f];
  }
  return u;
}

Functor forgetful(const Unraveled& u) {
  Functor F{u.category, u.base, {}, {}};
  for (const auto& [x, i] : u.object_origin) F.object_map.push_back(x);
  for (const auto& o : u.morphism_origin) F.morphism_map.push_back(o.base_morphism);
  return F;
}

Subcategory full_subcategory_of(const CategoryPtr& c, const std::vector<bool>& keep) {
  CategoryBuilder b;
  std::vector<std::size_t> new_object(c->object_count(), kNone);
  Functor inc{nullptr, c, {}, {}};
  for (std::size_t o = 0; o < c->object_count(); ++o) {
    if (!keep[o]) continue;
    new_object[o] = b.add_object(c->object(o));
    inc.object_map.push_back(o);
  }
  std::vector<std::size_t> new_morphism(c->morphism_count(), kNone);
  for (std::size_t f = 0; f < c->morphism_count(); ++f) {
    if (!keep[c->source(f)] || !keep[c->target(f)]) continue;
    new_morphism[f] = b.add_morphism(c->morphism(f).id, new_object[c->source(f)], new_object[c->target(f)]);
    inc.morphism_map.push_back(f);
  }
  for (std::size_t o = 0; o < c->object_count(); ++o) {
    if (keep[o]) b.set_identity(new_object[o], new_morphism[c->identity(o)]);
  }
  for (std::size_t g = 0; g < c->morphism_count(); ++g) {
    if (new_morphism[g] == kNone) continue;
    for (std::size_t f = 0; f < c->morphism_count(); ++f) {
      if (new_morphism[f] == kNone) continue;
      auto h = c->compose(g, f);
      if (h != kNone && new_morphism[h] != kNone) b.set_composite(new_morphism[g], new_morphism[f], new_morphism[h]);
    }
  }
  Subcategory s;
  s.category = std::make_shared<const FinCategory>(b.build());
  inc.source = s.category;
  s.inclusion = std::move(inc);
  return s;
}

OrdinalUnravelEquivalences ordinal_unravel_equivalences(int n, int N) {
  if (n < 0 || N < n) throw PreconditionError("ordinal_unravel_equivalences requires 0 ≤ n ≤ N");
  OrdinalUnravelEquivalences eq;
  eq.ordinal = std::make_shared<const FinCategory>(ordinal(n));
  Unraveled u = unravel(eq.ordinal, N);
  eq.unraveled = u.category;
  auto level = [&](std::size_t o) { return u.object_origin[o]; };
  auto sub = full_subcategory(eq.unraveled, [&](std::size_t o) {
    auto [k, l] = level(o);
    return static_cast<int>(k) <= l;
  });
  eq.diagonal = sub.category;
  eq.iota1 = sub.inclusion;
  eq.pi0 = forgetful(u);

  auto object_of = [&](const FinCategory& c, std::size_t k, int l) {
    return c.object_index("(" + std::to_string(k) + "," + std::to_string(l) + ")");
  };

  std::vector<std::size_t> pi1_obj;
  for (std::size_t o = 0; o < eq.unraveled->object_count(); ++o) {
    auto [k, l] = level(o);
    int lk = static_cast<int>(k);
    pi1_obj.push_back(lk >= l ? object_of(*eq.diagonal, k, lk) : object_of(*eq.diagonal, k, l));
  }
  eq.pi1 = poset_functor(eq.unraveled, eq.diagonal, std::move(pi1_obj));

  std::vector<std::size_t> pi2_obj;
  for (std::size_t o = 0; o < eq.diagonal->object_count(); ++o) {
    auto [k, l] = level(eq.iota1.object_map[o]);
    pi2_obj.push_back(k);
  }
  eq.pi2 = poset_functor(eq.diagonal, eq.ordinal, std::move(pi2_obj));

  std::vector<std::size_t> iota2_obj;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) {
    iota2_obj.push_back(object_of(*eq.diagonal, k, static_cast<int>(k)));
  }
  eq.iota2 = poset_functor(eq.ordinal, eq.diagonal, std::move(iota2_obj));

  const auto& big = *eq.unraveled;
  eq.phi1.from = identity_functor(eq.unraveled);
  eq.phi1.to = compose(eq.iota1, eq.pi1);
  for (std::size_t o = 0; o < big.object_count(); ++o) {
    auto [k, l] = level(o);
    if (static_cast<int>(k) <= l) {
      eq.phi1.component.push_back(big.identity(o));
    } else {
      auto h = big.hom(o, eq.phi1.to.object_map[o]);
      if (h.size() != 1) throw StructuralError("phi1 component missing");
      eq.phi1.component.push_back(h.front());
    }
  }

  const auto& diag = *eq.diagonal;
  eq.phi2.from = compose(eq.iota2, eq.pi2);
  eq.phi2.to = identity_functor(eq.diagonal);
  for (std::size_t o = 0; o < diag.object_count(); ++o) {
    auto h = diag.hom(eq.phi2.from.object_map[o], o);
    if (h.size() != 1) throw StructuralError("phi2 component missing");
    eq.phi2.component.push_back(h.front());
  }

  Report& r = eq.report;
  for (const Functor* F : {&eq.pi0, &eq.pi1, &eq.pi2, &eq.iota1, &eq.iota2}) append(r, check_functor(*F));
  if (!(compose(eq.pi1, eq.iota1) == identity_functor(eq.diagonal))) {
    r.push_back({"pi1-iota", {}, "π₁∘ι ≠ id"});
  }
  if (!(compose(eq.pi2, eq.iota2) == identity_functor(eq.ordinal))) {
    r.push_back({"pi2-iota", {}, "π₂∘ι ≠ id"});
  }
  if (!(eq.pi0 == compose(eq.pi2, eq.pi1))) r.push_back({"pi0-factorization", {}, "π₀ ≠ π₂∘π₁"});
  append(r, check_natural(eq.phi1));
  append(r, check_natural(eq.phi2));
  return eq;
}

}  // namespace fatcat
