#include "fatcat/cocycle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>

namespace fatcat {

namespace {

using Key = std::tuple<std::size_t, std::size_t, std::size_t>;

std::string cover_name(std::size_t a) { return "U" + std::to_string(a); }

std::vector<std::size_t> pair_set(std::size_t a, std::size_t b) {
  if (a == b) return {a};
  return {std::min(a, b), std::max(a, b)};
}

std::vector<std::size_t> unique_sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Nonempty subsets of a sorted face, by bitmask.
std::vector<Face> subfaces(const Face& f) {
  std::vector<Face> out;
  const std::size_t n = f.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    Face s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(f[i]);
    out.push_back(std::move(s));
  }
  return out;
}

Subcomplex empty_subcomplex(const SimplicialComplex& x) {
  Subcomplex s;
  for (int k = 0; k <= x.dimension(); ++k) s.member.emplace_back(x.faces(k).size(), false);
  return s;
}

Subcomplex intersect(const Subcomplex& a, const Subcomplex& b) {
  Subcomplex s = a;
  for (std::size_t k = 0; k < s.member.size(); ++k)
    for (std::size_t f = 0; f < s.member[k].size(); ++f) s.member[k][f] = a.member[k][f] && b.member[k][f];
  return s;
}

std::size_t first_vertex_of(const Components& c, std::size_t comp) {
  for (std::size_t v = 0; v < c.of_vertex.size(); ++v)
    if (c.of_vertex[v] == comp) return v;
  return kNone;
}

const FinCategory& cat(const GCocycle& u) { return u.groupoid->base(); }

std::string morphism_name(const FinCategory& c, std::size_t f) { return f == kNone ? "?" : c.morphism(f).id; }

// Caches components of overlaps by index set.
class OverlapCache {
 public:
  explicit OverlapCache(const CoveredComplex& base) : base_(base) {}
  const Components& get(std::vector<std::size_t> indices) {
    indices = unique_sorted(std::move(indices));
    auto it = cache_.find(indices);
    if (it == cache_.end()) it = cache_.emplace(indices, base_.components(indices)).first;
    return it->second;
  }

 private:
  const CoveredComplex& base_;
  std::map<std::vector<std::size_t>, Components> cache_;
};

}  // namespace

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex SimplicialComplex::generated(std::vector<std::string> vertices, const std::vector<Face>& faces) {
  SimplicialComplex x;
  std::set<Face> all;
  for (std::size_t v = 0; v < vertices.size(); ++v) all.insert({v});
  for (Face f : faces) {
    if (f.empty()) throw StructuralError("simplicial complex: empty face");
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw StructuralError("simplicial complex: repeated vertex");
    if (f.back() >= vertices.size()) throw StructuralError("simplicial complex: unknown vertex");
    if (f.size() > 20) throw PreconditionError("simplicial complex: face dimension too large");
    for (auto& s : subfaces(f)) all.insert(std::move(s));
  }
  if (all.size() > cell_limit()) throw ResourceLimitError("simplicial complex exceeds FATCAT_MAX_CELLS");
  x.vertices_ = std::move(vertices);
  for (const auto& f : all) {
    const std::size_t k = f.size() - 1;
    if (x.faces_.size() <= k) x.faces_.resize(k + 1);
    x.index_[f] = x.faces_[k].size();
    x.faces_[k].push_back(f);
  }
  return x;
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t n = 0;
  for (const auto& f : faces_) n += f.size();
  return n;
}

std::size_t SimplicialComplex::find(const Face& f) const {
  auto it = index_.find(f);
  return it == index_.end() ? kNone : it->second;
}

std::string SimplicialComplex::face_label(const Face& f) const {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + vertices_.at(f[i]);
  return s + "}";
}

IntegerChainComplex simplicial_chains(const SimplicialComplex& x) {
  IntegerChainComplex c;
  c.D = x.dimension();
  c.complete = true;
  for (int k = 0; k <= c.D; ++k) {
    std::vector<std::string> labels;
    for (const auto& f : x.faces(k)) labels.push_back(x.face_label(f));
    c.basis.push_back(std::move(labels));
    SparseMatrix m(k == 0 ? 0 : x.faces(k - 1).size(), x.faces(k).size());
    if (k > 0) {
      for (std::size_t j = 0; j < x.faces(k).size(); ++j) {
        const auto& f = x.faces(k)[j];
        for (int i = 0; i <= k; ++i) {
          Face g = f;
          g.erase(g.begin() + i);
          m.add(x.find(g), j, i % 2 == 0 ? 1 : -1);
        }
      }
    }
    c.boundary.push_back(std::move(m));
  }
  return c;
}

bool Subcomplex::empty() const {
  for (const auto& k : member)
    if (std::find(k.begin(), k.end(), true) != k.end()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// CoveredComplex

CoveredComplex::CoveredComplex(SimplicialComplex x, const std::vector<std::vector<Face>>& cover)
    : complex_(std::move(x)) {
  for (const auto& generators : cover) {
    Subcomplex s = empty_subcomplex(complex_);
    for (Face f : generators) {
      std::sort(f.begin(), f.end());
      if (f.empty() || complex_.find(f) == kNone)
        throw StructuralError("cover: face " + (f.empty() ? std::string("{}") : complex_.face_label(f)) +
                              " is not in the complex");
      for (const auto& g : subfaces(f)) s.member[g.size() - 1][complex_.find(g)] = true;
    }
    cover_.push_back(std::move(s));
  }
  *this = from_sets(std::move(complex_), std::move(cover_));
}

CoveredComplex CoveredComplex::from_sets(SimplicialComplex x, std::vector<Subcomplex> cover) {
  CoveredComplex c;
  c.complex_ = std::move(x);
  const auto& cx = c.complex_;
  for (std::size_t a = 0; a < cover.size(); ++a) {
    const auto& s = cover[a];
    if (s.member.size() != static_cast<std::size_t>(cx.dimension() + 1))
      throw StructuralError("cover: set " + cover_name(a) + " has the wrong shape");
    for (int k = 0; k <= cx.dimension(); ++k) {
      if (s.member[k].size() != cx.faces(k).size()) throw StructuralError("cover: set " + cover_name(a) + " has the wrong shape");
      if (k == 0) continue;
      for (std::size_t f = 0; f < s.member[k].size(); ++f) {
        if (!s.member[k][f]) continue;
        for (int i = 0; i <= k; ++i) {
          Face g = cx.faces(k)[f];
          g.erase(g.begin() + i);
          if (!s.member[k - 1][cx.find(g)])
            throw StructuralError("cover: set " + cover_name(a) + " is not downward closed at " + cx.face_label(cx.faces(k)[f]));
        }
      }
    }
  }
  for (int k = 0; k <= cx.dimension(); ++k) {
    for (std::size_t f = 0; f < cx.faces(k).size(); ++f) {
      bool covered = false;
      for (const auto& s : cover) covered = covered || s.member[k][f];
      if (!covered) throw StructuralError("cover: face " + cx.face_label(cx.faces(k)[f]) + " lies in no cover set");
    }
  }
  c.cover_ = std::move(cover);
  return c;
}

Subcomplex CoveredComplex::overlap(const std::vector<std::size_t>& indices) const {
  if (indices.empty()) throw PreconditionError("overlap: no cover sets");
  Subcomplex s = cover_.at(indices[0]);
  for (std::size_t i = 1; i < indices.size(); ++i) s = intersect(s, cover_.at(indices[i]));
  return s;
}

Components CoveredComplex::components(const std::vector<std::size_t>& indices) const {
  return components(overlap(indices));
}

Components CoveredComplex::components(const Subcomplex& s) const {
  const std::size_t n = complex_.vertices().size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  if (complex_.dimension() >= 1) {
    for (std::size_t e = 0; e < complex_.faces(1).size(); ++e) {
      if (!s.member[1][e]) continue;
      const auto& f = complex_.faces(1)[e];
      const auto a = root(f[0]), b = root(f[1]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  Components out;
  out.of_vertex.assign(n, kNone);
  std::map<std::size_t, std::size_t> number;
  for (std::size_t v = 0; v < n; ++v) {
    if (!s.member[0][v]) continue;
    auto [it, fresh] = number.emplace(root(v), out.count);
    if (fresh) ++out.count;
    out.of_vertex[v] = it->second;
  }
  return out;
}

// ---------------------------------------------------------------------------
// GCocycle

std::size_t GCocycle::at_vertex(std::size_t a, std::size_t b, std::size_t v) const {
  const auto comps = base->components(pair_set(a, b));
  if (v >= comps.of_vertex.size() || comps.of_vertex[v] == kNone) return kNone;
  auto it = transitions.find({a, b, comps.of_vertex[v]});
  return it == transitions.end() ? kNone : it->second;
}

std::size_t GCocycle::object_at(std::size_t a, std::size_t v) const {
  const auto f = at_vertex(a, a, v);
  return f == kNone ? kNone : cat(*this).source(f);
}

bool GCocycle::operator==(const GCocycle& o) const {
  return *base == *o.base && groupoid->base() == o.groupoid->base() && transitions == o.transitions;
}

Report check_cocycle(const GCocycle& u) {
  const auto& base = *u.base;
  const auto& c = cat(u);
  const std::size_t n = base.cover_size();
  OverlapCache cache(base);
  const auto& names = base.complex().vertices();

  for (const auto& [key, f] : u.transitions) {
    const auto [a, b, comp] = key;
    if (a >= n || b >= n) throw StructuralError("cocycle: transition refers to a missing cover set");
    if (comp >= cache.get(pair_set(a, b)).count)
      throw StructuralError("cocycle: transition (" + cover_name(a) + "," + cover_name(b) + ") refers to missing component " +
                            std::to_string(comp));
    if (f >= c.morphism_count()) throw StructuralError("cocycle: transition refers to a missing morphism");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto& comps = cache.get(pair_set(a, b));
      for (std::size_t comp = 0; comp < comps.count; ++comp) {
        auto it = u.transitions.find({a, b, comp});
        if (it == u.transitions.end())
          throw StructuralError("cocycle: missing transition (" + cover_name(a) + "," + cover_name(b) + ") on component " +
                                std::to_string(comp));
        const auto v = first_vertex_of(comps, comp);
        const auto fa = u.transitions.at({a, a, cache.get({a}).of_vertex[v]});
        const auto fb = u.transitions.at({b, b, cache.get({b}).of_vertex[v]});
        if (c.source(it->second) != c.source(fa) || c.target(it->second) != c.source(fb))
          throw StructuralError("cocycle: transition (" + cover_name(a) + "," + cover_name(b) + ") at vertex " + names[v] +
                                " does not run between the objects of its cover sets");
      }
    }
  }

  Report r;
  for (std::size_t a = 0; a < n; ++a) {
    const auto& comps = cache.get({a});
    for (std::size_t comp = 0; comp < comps.count; ++comp) {
      const auto f = u.transitions.at({a, a, comp});
      if (!c.is_identity(f))
        r.push_back({"diagonal-identity", {cover_name(a), names[first_vertex_of(comps, comp)], c.morphism(f).id},
                     "f_aa is not an identity"});
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t g = 0; g < n; ++g) {
        const auto& comps = cache.get({a, b, g});
        for (std::size_t comp = 0; comp < comps.count; ++comp) {
          const auto v = first_vertex_of(comps, comp);
          const auto fab = u.transitions.at({a, b, cache.get(pair_set(a, b)).of_vertex[v]});
          const auto fbg = u.transitions.at({b, g, cache.get(pair_set(b, g)).of_vertex[v]});
          const auto fag = u.transitions.at({a, g, cache.get(pair_set(a, g)).of_vertex[v]});
          const auto composite = c.compose(fbg, fab);
          if (composite != fag) {
            r.push_back({"cocycle-law",
                         {cover_name(a), cover_name(b), cover_name(g), names[v]},
                         morphism_name(c, fbg) + "∘" + morphism_name(c, fab) + " = " + morphism_name(c, composite) +
                             " but the direct transition is " + morphism_name(c, fag)});
          }
        }
      }
    }
  }
  return r;
}

GCocycle trivial_cocycle(const CoveredPtr& base, const GroupoidPtr& g, std::size_t object) {
  GCocycle u{base, g, {}};
  const auto id = g->base().identity(object);
  for (std::size_t a = 0; a < base->cover_size(); ++a)
    for (std::size_t b = 0; b < base->cover_size(); ++b) {
      const auto comps = base->components(pair_set(a, b));
      for (std::size_t comp = 0; comp < comps.count; ++comp) u.transitions[{a, b, comp}] = id;
    }
  return u;
}

// ---------------------------------------------------------------------------
// Isomorphisms

namespace {

void require_same_space(const GCocycle& u, const GCocycle& v) {
  if (!(u.base->complex() == v.base->complex())) throw PreconditionError("cocycles live on different complexes");
  if (!(u.groupoid->base() == v.groupoid->base())) throw PreconditionError("cocycles take values in different groupoids");
}

Components iso_components(const CocycleIso& iso, std::size_t a, std::size_t g) {
  return iso.from.base->components(intersect(iso.from.base->cover_set(a), iso.to.base->cover_set(g)));
}

}  // namespace

std::size_t CocycleIso::at_vertex(std::size_t a, std::size_t g, std::size_t v) const {
  const auto comps = iso_components(*this, a, g);
  if (v >= comps.of_vertex.size() || comps.of_vertex[v] == kNone) return kNone;
  auto it = phi.find({a, g, comps.of_vertex[v]});
  return it == phi.end() ? kNone : it->second;
}

GCocycle union_cocycle(const CocycleIso& iso) {
  require_same_space(iso.from, iso.to);
  const auto& u = iso.from;
  const auto& v = iso.to;
  const std::size_t nu = u.base->cover_size();
  std::vector<Subcomplex> sets;
  for (std::size_t a = 0; a < nu; ++a) sets.push_back(u.base->cover_set(a));
  for (std::size_t g = 0; g < v.base->cover_size(); ++g) sets.push_back(v.base->cover_set(g));
  auto base = std::make_shared<const CoveredComplex>(CoveredComplex::from_sets(u.base->complex(), std::move(sets)));
  GCocycle out{base, u.groupoid, {}};
  for (const auto& [key, f] : u.transitions) out.transitions[key] = f;
  for (const auto& [key, f] : v.transitions) {
    const auto [a, b, comp] = key;
    out.transitions[{a + nu, b + nu, comp}] = f;
  }
  for (const auto& [key, f] : iso.phi) {
    const auto [a, g, comp] = key;
    out.transitions[{a, g + nu, comp}] = f;
    if (f < u.groupoid->base().morphism_count()) out.transitions[{g + nu, a, comp}] = u.groupoid->inverse(f);
  }
  return out;
}

Report check_iso(const CocycleIso& iso) { return check_cocycle(union_cocycle(iso)); }

CocycleIso identity_iso(const GCocycle& u) { return {u, u, u.transitions}; }

CocycleIso inverse_iso(const CocycleIso& iso) {
  CocycleIso out{iso.to, iso.from, {}};
  for (const auto& [key, f] : iso.phi) {
    const auto [a, g, comp] = key;
    out.phi[{g, a, comp}] = iso.from.groupoid->inverse(f);
  }
  return out;
}

IsoComposition compose_isomorphisms(const CocycleIso& phi, const CocycleIso& psi) {
  if (!(phi.to == psi.from)) throw PreconditionError("compose_isomorphisms: the middle cocycles differ");
  IsoComposition out;
  out.iso.from = phi.from;
  out.iso.to = psi.to;
  const auto& c = cat(phi.from);
  const auto& names = phi.from.base->complex().vertices();
  const auto& mid = *phi.to.base;
  for (std::size_t a = 0; a < phi.from.base->cover_size(); ++a) {
    for (std::size_t e = 0; e < psi.to.base->cover_size(); ++e) {
      const auto comps = phi.from.base->components(intersect(phi.from.base->cover_set(a), psi.to.base->cover_set(e)));
      std::vector<std::size_t> value(comps.count, kNone);
      for (std::size_t v = 0; v < comps.of_vertex.size(); ++v) {
        const auto comp = comps.of_vertex[v];
        if (comp == kNone) continue;
        for (std::size_t g = 0; g < mid.cover_size(); ++g) {
          if (!mid.cover_set(g).member[0][v]) continue;
          const auto first = phi.at_vertex(a, g, v);
          const auto second = psi.at_vertex(g, e, v);
          const auto composite = first == kNone || second == kNone ? kNone : c.compose(second, first);
          if (composite == kNone) {
            out.report.push_back({"iso-endpoints", {cover_name(a), cover_name(g), cover_name(e), names[v]},
                                  "ψ∘φ is undefined"});
            continue;
          }
          if (value[comp] == kNone) {
            value[comp] = composite;
          } else if (value[comp] != composite) {
            out.report.push_back({"mediating-index", {cover_name(a), cover_name(g), cover_name(e), names[v]},
                                  "ψ∘φ through this index is " + c.morphism(composite).id + ", elsewhere " +
                                      c.morphism(value[comp]).id});
          }
        }
      }
      for (std::size_t comp = 0; comp < comps.count; ++comp)
        if (value[comp] != kNone) out.iso.phi[{a, e, comp}] = value[comp];
    }
  }
  return out;
}

CocycleIso gauge_transform(const GCocycle& u, const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& h) {
  const auto& c = cat(u);
  const auto& base = *u.base;
  OverlapCache cache(base);
  auto gauge = [&](std::size_t a, std::size_t v) {
    const auto comp = cache.get({a}).of_vertex[v];
    const auto object = c.source(u.transitions.at({a, a, comp}));
    auto it = h.find({a, comp});
    if (it == h.end()) return c.identity(object);
    if (c.source(it->second) != object) throw PreconditionError("gauge_transform: h does not start at u_a");
    return it->second;
  };
  CocycleIso iso{u, u, {}};
  iso.to.transitions.clear();
  for (const auto& [key, f] : u.transitions) {
    const auto [a, b, comp] = key;
    const auto v = first_vertex_of(cache.get(pair_set(a, b)), comp);
    const auto hb_f = c.compose(gauge(b, v), f);
    iso.phi[key] = hb_f;
    iso.to.transitions[key] = c.compose(hb_f, u.groupoid->inverse(gauge(a, v)));
  }
  return iso;
}

// ---------------------------------------------------------------------------
// Concatenation on the prism

PrismCocycle concat_cocycle(const CocycleIso& iso) {
  const GCocycle glued = union_cocycle(iso);
  const auto& x = iso.from.base->complex();
  const std::size_t nx = x.vertices().size();
  const std::size_t nu = iso.from.base->cover_size();
  constexpr int levels = 4;

  PrismCocycle out;
  out.upper_count = nu;
  out.bottom = x;
  std::vector<std::string> names;
  out.level_vertex.assign(levels, std::vector<std::size_t>(nx));
  for (int l = 0; l < levels; ++l)
    for (std::size_t v = 0; v < nx; ++v) {
      out.level_vertex[l][v] = l * nx + v;
      names.push_back("(" + x.vertices()[v] + "," + std::to_string(l) + ")");
    }
  // σ × [l, l+1] as the staircase simplices (σ₀..σ_j at l, σ_j..σ_k at l+1).
  auto prism = [&](const Face& s, int l) {
    std::vector<Face> out_faces;
    for (std::size_t j = 0; j < s.size(); ++j) {
      Face f;
      for (std::size_t i = 0; i <= j; ++i) f.push_back(l * nx + s[i]);
      for (std::size_t i = j; i < s.size(); ++i) f.push_back((l + 1) * nx + s[i]);
      out_faces.push_back(std::move(f));
    }
    return out_faces;
  };
  auto thicken = [&](const Subcomplex& set, int from, int to) {
    std::vector<Face> gens;
    for (int k = 0; k <= x.dimension(); ++k)
      for (std::size_t f = 0; f < x.faces(k).size(); ++f)
        if (set.member[k][f])
          for (int l = from; l < to; ++l)
            for (auto& g : prism(x.faces(k)[f], l)) gens.push_back(std::move(g));
    return gens;
  };
  std::vector<Face> all;
  for (int k = 0; k <= x.dimension(); ++k)
    for (const auto& s : x.faces(k))
      for (int l = 0; l + 1 < levels; ++l)
        for (auto& g : prism(s, l)) all.push_back(std::move(g));
  std::vector<std::vector<Face>> cover;
  for (std::size_t a = 0; a < glued.base->cover_size(); ++a) {
    cover.push_back(a < nu ? thicken(glued.base->cover_set(a), 1, 3) : thicken(glued.base->cover_set(a), 0, 2));
  }
  auto base = std::make_shared<const CoveredComplex>(SimplicialComplex::generated(names, all), cover);

  out.cocycle = GCocycle{base, glued.groupoid, {}};
  OverlapCache cache(*base);
  OverlapCache flat(*glued.base);
  for (std::size_t a = 0; a < base->cover_size(); ++a) {
    for (std::size_t b = 0; b < base->cover_size(); ++b) {
      const auto& comps = cache.get(pair_set(a, b));
      for (std::size_t comp = 0; comp < comps.count; ++comp) {
        const auto v = first_vertex_of(comps, comp) % nx;
        auto it = glued.transitions.find({a, b, flat.get(pair_set(a, b)).of_vertex[v]});
        if (it == glued.transitions.end()) throw StructuralError("concat_cocycle: the isomorphism is missing a component");
        out.cocycle.transitions[{a, b, comp}] = it->second;
      }
    }
  }
  return out;
}

GCocycle restrict_to_level(const PrismCocycle& p, int level) {
  if (level < 0 || level >= static_cast<int>(p.level_vertex.size())) throw PreconditionError("restrict_to_level: no such level");
  const auto& x = p.bottom;
  const auto& prism = *p.cocycle.base;
  std::vector<Subcomplex> sets;
  std::vector<std::size_t> origin;
  for (std::size_t a = 0; a < prism.cover_size(); ++a) {
    Subcomplex s = empty_subcomplex(x);
    for (int k = 0; k <= x.dimension(); ++k)
      for (std::size_t f = 0; f < x.faces(k).size(); ++f) {
        Face lifted;
        for (auto v : x.faces(k)[f]) lifted.push_back(p.level_vertex[level][v]);
        s.member[k][f] = prism.cover_set(a).member[k][prism.complex().find(lifted)];
      }
    if (!s.empty()) {
      sets.push_back(std::move(s));
      origin.push_back(a);
    }
  }
  auto base = std::make_shared<const CoveredComplex>(CoveredComplex::from_sets(x, std::move(sets)));
  GCocycle out{base, p.cocycle.groupoid, {}};
  OverlapCache cache(*base);
  for (std::size_t i = 0; i < origin.size(); ++i)
    for (std::size_t j = 0; j < origin.size(); ++j) {
      const auto& comps = cache.get(pair_set(i, j));
      for (std::size_t comp = 0; comp < comps.count; ++comp) {
        const auto v = first_vertex_of(comps, comp);
        out.transitions[{i, j, comp}] = p.cocycle.at_vertex(origin[i], origin[j], p.level_vertex[level][v]);
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// Blowup

namespace {

std::vector<std::vector<std::size_t>> index_sets(std::size_t n, std::size_t size) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (cur.size() == size) {
      out.push_back(cur);
      return;
    }
    for (std::size_t a = from; a < n; ++a) {
      cur.push_back(a);
      self(self, a + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::string join_indices(const std::vector<std::size_t>& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s;
}

}  // namespace

BlowupComplex blowup(const CoveredPtr& base) {
  const auto& x = base->complex();
  const std::size_t n = base->cover_size();
  if (n == 0) throw PreconditionError("blowup: empty cover");
  const int top = static_cast<int>(n) - 1 + x.dimension();
  BlowupComplex out;
  out.base = base;
  out.generators.resize(top + 1);
  std::vector<std::map<std::pair<std::vector<std::size_t>, Face>, std::size_t>> index(top + 1);
  std::size_t total = 0;
  for (std::size_t p = 0; p < n; ++p) {
    for (const auto& alpha : index_sets(n, p + 1)) {
      const auto s = base->overlap(alpha);
      for (int q = 0; q <= x.dimension(); ++q)
        for (std::size_t f = 0; f < x.faces(q).size(); ++f) {
          if (!s.member[q][f]) continue;
          const int deg = static_cast<int>(p) + q;
          index[deg][{alpha, x.faces(q)[f]}] = out.generators[deg].size();
          out.generators[deg].emplace_back(alpha, x.faces(q)[f]);
          if (++total > cell_limit()) throw ResourceLimitError("blowup exceeds FATCAT_MAX_CELLS");
        }
    }
  }
  IntegerChainComplex c;
  c.D = top;
  c.complete = true;
  for (int k = 0; k <= top; ++k) {
    std::vector<std::string> labels;
    for (const auto& [alpha, f] : out.generators[k]) labels.push_back("(" + join_indices(alpha) + "|" + x.face_label(f) + ")");
    c.basis.push_back(std::move(labels));
    SparseMatrix m(k == 0 ? 0 : out.generators[k - 1].size(), out.generators[k].size());
    if (k > 0) {
      for (std::size_t j = 0; j < out.generators[k].size(); ++j) {
        const auto& [alpha, f] = out.generators[k][j];
        const int p = static_cast<int>(alpha.size()) - 1;
        for (int i = 0; p >= 1 && i <= p; ++i) {
          auto beta = alpha;
          beta.erase(beta.begin() + i);
          m.add(index[k - 1].at({beta, f}), j, i % 2 == 0 ? 1 : -1);
        }
        const int sign = p % 2 == 0 ? 1 : -1;
        for (std::size_t i = 0; f.size() > 1 && i < f.size(); ++i) {
          auto g = f;
          g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
          m.add(index[k - 1].at({alpha, g}), j, sign * (i % 2 == 0 ? 1 : -1));
        }
      }
    }
    c.boundary.push_back(std::move(m));
  }
  out.total = std::make_shared<const IntegerChainComplex>(std::move(c));
  return out;
}

ChainMap blowup_projection(const BlowupComplex& b) {
  const auto& x = b.base->complex();
  auto target = std::make_shared<const IntegerChainComplex>(simplicial_chains(x));
  ChainMap f{b.total, target, {}};
  for (int k = 0; k <= std::min(b.total->D, target->D); ++k) {
    SparseMatrix m(target->rank(k), b.total->rank(k));
    for (std::size_t j = 0; j < b.generators[k].size(); ++j) {
      const auto& [alpha, face] = b.generators[k][j];
      if (alpha.size() == 1) m.add(x.find(face), j, 1);
    }
    f.matrices.push_back(std::move(m));
  }
  return f;
}

QuasiIsoReport blowup_vs_base(const CoveredPtr& base, int d) {
  return quasi_iso_through(blowup_projection(blowup(base)), d);
}

IntegerChainComplex truncate(const IntegerChainComplex& c, int D) {
  if (D >= c.D) return c;
  if (D < 0) throw PreconditionError("truncate: negative degree");
  IntegerChainComplex out = c;
  out.D = D;
  out.complete = false;
  out.basis.resize(D + 1);
  out.boundary.resize(D + 1);
  return out;
}

// ---------------------------------------------------------------------------
// Classifying complex

bool ClassifyingComplex::in_cover(int j, int k, std::size_t cell) const {
  const auto& seq = indices.at(k).at(cell);
  return std::find(seq.begin(), seq.end(), j) != seq.end();
}

std::size_t ClassifyingComplex::find(int k, const std::vector<std::size_t>& arrows_in, const std::vector<int>& indices_in,
                                     std::size_t object) const {
  if (k == 0) {
    auto it = lookup_objects.find({indices_in.at(0), object});
    return it == lookup_objects.end() ? kNone : it->second;
  }
  auto it = lookup_arrows.find({indices_in, arrows_in});
  return it == lookup_arrows.end() ? kNone : it->second;
}

ClassifyingComplex bg_complex(const GroupoidPtr& g, int N, int D) {
  if (N < 0 || D < 0) throw PreconditionError("bg_complex: N and D must be nonnegative");
  auto base = std::make_shared<const FinCategory>(g->base());
  const auto u = unravel(base, N);
  const auto ner = build_nerve(u.category, D);
  ClassifyingComplex bg;
  bg.groupoid = g;
  bg.N = N;
  bg.D = D;
  std::vector<std::vector<std::string>> labels(D + 1);
  bg.indices.resize(D + 1);
  bg.arrows.resize(D + 1);
  bg.first_object.resize(D + 1);
  for (int k = 0; k <= D; ++k) {
    for (std::size_t x = 0; x < ner.simplices.cell_count(k); ++x) {
      const auto& chain = ner.chains[k][x];
      std::vector<int> seq;
      std::vector<std::size_t> arrows;
      std::size_t object;
      if (k == 0) {
        object = u.object_origin[chain[0]].first;
        seq.push_back(u.object_origin[chain[0]].second);
      } else {
        object = u.object_origin[u.category->source(chain[0])].first;
        seq.push_back(u.morphism_origin[chain[0]].from_level);
        for (auto f : chain) {
          seq.push_back(u.morphism_origin[f].to_level);
          arrows.push_back(u.morphism_origin[f].base_morphism);
        }
      }
      std::string label = "(";
      if (k == 0) {
        label += base->object(object);
      } else {
        for (std::size_t i = 0; i < arrows.size(); ++i) label += (i ? "," : "") + base->morphism(arrows[i]).id;
      }
      label += ";" + std::to_string(seq[0]);
      for (std::size_t i = 1; i < seq.size(); ++i) label += (seq[i] == seq[i - 1] ? "=" : "<") + std::to_string(seq[i]);
      label += ")";
      labels[k].push_back(std::move(label));
      if (k == 0) {
        bg.lookup_objects[{seq[0], object}] = x;
      } else {
        bg.lookup_arrows[{seq, arrows}] = x;
      }
      bg.indices[k].push_back(std::move(seq));
      bg.arrows[k].push_back(std::move(arrows));
      bg.first_object[k].push_back(object);
    }
  }
  bg.set = TruncatedSimplicialSet(D, std::move(labels), ner.simplices.face_tables(), ner.simplices.degeneracy_tables());
  return bg;
}

std::size_t universal_transition(const ClassifyingComplex& bg, int k, std::size_t cell, int from, int to) {
  const auto& c = bg.groupoid->base();
  const auto& seq = bg.indices.at(k).at(cell);
  const auto pf = std::find(seq.begin(), seq.end(), from);
  const auto pt = std::find(seq.begin(), seq.end(), to);
  if (pf == seq.end() || pt == seq.end()) throw PreconditionError("universal_transition: index not in the cell");
  const auto i = static_cast<std::size_t>(pf - seq.begin());
  const auto j = static_cast<std::size_t>(pt - seq.begin());
  const auto& arrows = bg.arrows[k][cell];
  if (i > j) return bg.groupoid->inverse(universal_transition(bg, k, cell, to, from));
  const std::size_t start = i == 0 ? bg.first_object[k][cell] : c.target(arrows[i - 1]);
  std::size_t acc = c.identity(start);
  for (std::size_t a = i; a < j; ++a) acc = c.compose(arrows[a], acc);
  return acc;
}

Report check_universal_cocycle(const ClassifyingComplex& bg) {
  const auto& c = bg.groupoid->base();
  Report r;
  for (int k = 0; k <= bg.D; ++k) {
    for (std::size_t x = 0; x < bg.set.cell_count(k); ++x) {
      auto vals = bg.indices[k][x];
      vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
      const auto& label = bg.set.label(k, x);
      for (int a : vals) {
        if (!c.is_identity(universal_transition(bg, k, x, a, a)))
          r.push_back({"universal-diagonal", {label, std::to_string(a)}, "γ_aa is not an identity"});
        for (int b : vals)
          for (int d : vals) {
            const auto lhs = c.compose(universal_transition(bg, k, x, b, d), universal_transition(bg, k, x, a, b));
            if (lhs != universal_transition(bg, k, x, a, d))
              r.push_back({"universal-cocycle-law", {label, std::to_string(a), std::to_string(b), std::to_string(d)},
                           "γ_db∘γ_ba ≠ γ_da"});
          }
      }
      for (int i = 0; k >= 1 && i <= k; ++i) {
        const auto y = bg.set.face(k, i, x);
        auto face_vals = bg.indices[k - 1][y];
        face_vals.erase(std::unique(face_vals.begin(), face_vals.end()), face_vals.end());
        for (int a : face_vals)
          for (int b : face_vals)
            if (universal_transition(bg, k - 1, y, a, b) != universal_transition(bg, k, x, a, b))
              r.push_back({"universal-face", {label, std::to_string(i), std::to_string(a), std::to_string(b)},
                           "γ on the face differs from γ on the cell"});
      }
    }
  }
  return r;
}

namespace {

std::size_t classifying_cell(const ClassifyingComplex& bg, const GCocycle& u, const std::vector<std::size_t>& alpha,
                             std::size_t v) {
  std::vector<int> seq(alpha.begin(), alpha.end());
  std::vector<std::size_t> arrows;
  for (std::size_t j = 1; j < alpha.size(); ++j) arrows.push_back(u.at_vertex(alpha[j - 1], alpha[j], v));
  const auto cell = bg.find(static_cast<int>(alpha.size()) - 1, arrows, seq, u.object_at(alpha[0], v));
  if (cell == kNone) throw StructuralError("classifying map: no cell for a blowup generator");
  return cell;
}

}  // namespace

ClassifyingMap classifying_chain_map(const GCocycle& u, int N, int D) {
  if (u.base->cover_size() > static_cast<std::size_t>(N) + 1)
    throw PreconditionError("classifying_chain_map: the cover has more than N+1 sets");
  ClassifyingMap m;
  m.blowup = blowup(u.base);
  m.bg = bg_complex(u.groupoid, N, D);
  auto source = std::make_shared<const IntegerChainComplex>(truncate(*m.blowup.total, D));
  auto target = std::make_shared<const IntegerChainComplex>(fat_chains(m.bg.set));
  m.map = ChainMap{source, target, {}};
  for (int k = 0; k <= std::min(source->D, target->D); ++k) {
    SparseMatrix mat(target->rank(k), source->rank(k));
    std::vector<std::size_t> cells(source->rank(k), kNone);
    for (std::size_t j = 0; j < m.blowup.generators[k].size(); ++j) {
      const auto& [alpha, face] = m.blowup.generators[k][j];
      if (face.size() != 1) continue;
      cells[j] = classifying_cell(m.bg, u, alpha, face[0]);
      mat.add(cells[j], j, 1);
    }
    m.map.matrices.push_back(std::move(mat));
    m.cells.push_back(std::move(cells));
  }
  return m;
}

Report pullback_is_restriction(const ClassifyingMap& m, const GCocycle& u) {
  const auto& c = cat(u);
  Report r;
  for (std::size_t k = 0; k < m.cells.size(); ++k) {
    for (std::size_t j = 0; j < m.blowup.generators[k].size(); ++j) {
      const auto& [alpha, face] = m.blowup.generators[k][j];
      const auto v = face[0];
      const auto cell = classifying_cell(m.bg, u, alpha, v);
      const int p = static_cast<int>(alpha.size()) - 1;
      for (auto a : alpha)
        for (auto b : alpha) {
          const auto pulled = universal_transition(m.bg, p, cell, static_cast<int>(a), static_cast<int>(b));
          const auto direct = u.at_vertex(a, b, v);
          if (pulled != direct)
            r.push_back({"pullback-restriction", {m.blowup.total->basis[k][j], cover_name(a), cover_name(b)},
                         "pulled back " + morphism_name(c, pulled) + ", restricted " + morphism_name(c, direct)});
        }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Partitions of unity

PartitionPoint PartitionPoint::make(std::vector<Rational> t) {
  if (t.empty()) throw PreconditionError("partition: no coordinates");
  Rational sum = 0;
  for (const auto& x : t) {
    if (x < 0) throw PreconditionError("partition: negative coordinate " + to_string(x));
    sum += x;
  }
  if (sum != 1) throw PreconditionError("partition: coordinates sum to " + to_string(sum));
  return PartitionPoint{std::move(t)};
}

PartitionHomotopy partition_homotopy(const PartitionPoint& t, const Rational& s) {
  if (s < 0 || s > 1) throw PreconditionError("partition_homotopy: s outside [0,1]");
  PartitionHomotopy out;
  Rational prefix = 0, total = 0;
  for (const auto& x : t.t) {
    Rational w = x - s * prefix;
    if (w < 0) w = 0;
    out.w.push_back(w);
    total += w;
    prefix += x;
  }
  for (const auto& w : out.w) out.v.push_back(w / total);
  return out;
}

Report check_partition_homotopy(const PartitionPoint& t, const Rational& s) {
  const auto h = partition_homotopy(t, s);
  Report r;
  auto where = [&](std::size_t i) {
    std::string p;
    for (std::size_t j = 0; j < t.t.size(); ++j) p += (j ? "," : "") + to_string(t.t[j]);
    return std::vector<std::string>{"t=(" + p + ")", "s=" + to_string(s), std::to_string(i)};
  };
  Rational sum = 0, prefix = 0;
  for (std::size_t i = 0; i < h.v.size(); ++i) {
    sum += h.v[i];
    if (h.v[i] < 0) r.push_back({"partition-nonnegative", where(i), "v_i < 0"});
    if (h.v[i] > 0 && t.t[i] == 0) r.push_back({"partition-support", where(i), "v_i > 0 outside the support of t"});
    if (s == 0 && h.v[i] != t.t[i]) r.push_back({"partition-start", where(i), "v ≠ t at s = 0"});
    if (s == 1 && prefix >= t.t[i] && h.v[i] != 0)
      r.push_back({"partition-truncation", where(i), "v_i ≠ 0 although the earlier mass dominates t_i"});
    prefix += t.t[i];
  }
  if (sum != 1) r.push_back({"partition-sum", where(h.v.size()), "Σ v = " + to_string(sum)});
  return r;
}

// ---------------------------------------------------------------------------
// Examples

namespace examples {

namespace {

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(std::to_string(i));
  return v;
}

GroupoidPtr z2() { return std::make_shared<const FinGroupoid>(cyclic_group(2)); }

}  // namespace

SimplicialComplex circle() { return SimplicialComplex::generated(numbered(3), {{0, 1}, {1, 2}, {0, 2}}); }

CoveredPtr circle_edge_cover() {
  return std::make_shared<const CoveredComplex>(circle(), std::vector<std::vector<Face>>{{{0, 1}}, {{1, 2}}, {{0, 2}}});
}

CoveredPtr star_cover(const SimplicialComplex& x) {
  std::vector<std::vector<Face>> cover;
  for (std::size_t v = 0; v < x.vertices().size(); ++v) {
    std::vector<Face> star;
    for (int k = 0; k <= x.dimension(); ++k)
      for (const auto& f : x.faces(k))
        if (std::binary_search(f.begin(), f.end(), v)) star.push_back(f);
    cover.push_back(std::move(star));
  }
  return std::make_shared<const CoveredComplex>(x, cover);
}

CoveredPtr circle_star_cover() { return star_cover(circle()); }

CoveredPtr octahedron_hemispheres() {
  std::vector<Face> upper, lower;
  const std::size_t ring[] = {1, 2, 3, 4};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto a = ring[i], b = ring[(i + 1) % 4];
    upper.push_back({0, std::min(a, b), std::max(a, b)});
    lower.push_back({std::min(a, b), std::max(a, b), 5});
  }
  auto all = upper;
  all.insert(all.end(), lower.begin(), lower.end());
  return std::make_shared<const CoveredComplex>(SimplicialComplex::generated(numbered(6), all),
                                                std::vector<std::vector<Face>>{upper, lower});
}

CoveredPtr random_star_cover(unsigned seed) {
  constexpr std::size_t vertices = 7;
  constexpr std::size_t max_faces = 50;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, vertices - 1);
  std::set<Face> closure;
  for (std::size_t v = 0; v < vertices; ++v) closure.insert({v});
  std::vector<Face> tops;
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::set<std::size_t> s;
    const std::size_t size = attempt % 3 == 0 ? 2 : 3;
    while (s.size() < size) s.insert(pick(rng));
    Face f(s.begin(), s.end());
    auto grown = closure;
    for (auto& g : subfaces(f)) grown.insert(std::move(g));
    if (grown.size() > max_faces) continue;
    closure = std::move(grown);
    tops.push_back(std::move(f));
  }
  return star_cover(SimplicialComplex::generated(numbered(vertices), tops));
}

GCocycle mobius() {
  auto g = z2();
  GCocycle u = trivial_cocycle(circle_edge_cover(), g, 0);
  const auto s = g->base().morphism_index("s");
  u.transitions[{0, 1, 0}] = s;
  u.transitions[{1, 0, 0}] = s;
  return u;
}

GCocycle broken_flips() {
  auto g = z2();
  GCocycle u = trivial_cocycle(circle_star_cover(), g, 0);
  const auto s = g->base().morphism_index("s");
  for (auto& [key, f] : u.transitions)
    if (std::get<0>(key) != std::get<1>(key)) f = s;
  return u;
}

}  // namespace examples

}  // namespace fatcat
