#include "json_io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>

namespace fatcat::io {

namespace {

const json& field(const json& j, const char* name, const char* what) {
  if (!j.is_object() || !j.contains(name))
    throw SchemaError(std::string(what) + ": missing field \"" + name + "\"");
  return j.at(name);
}

std::string text(const json& j, const char* what) {
  if (!j.is_string()) throw SchemaError(std::string(what) + ": expected a string, got " + j.dump());
  return j.get<std::string>();
}

long long integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw SchemaError(std::string(what) + ": expected an integer, got " + j.dump());
  return j.get<long long>();
}

std::size_t index(const json& j, std::size_t bound, const char* what) {
  const auto v = integer(j, what);
  if (v < 0 || static_cast<std::size_t>(v) >= bound)
    throw SchemaError(std::string(what) + ": index " + std::to_string(v) + " out of range");
  return static_cast<std::size_t>(v);
}

const json& array(const json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + ": expected an array");
  return j;
}

json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

int parse_count(const std::string& spec, std::size_t colon) {
  try {
    std::size_t used = 0;
    const int n = std::stoi(spec.substr(colon + 1), &used);
    if (used + colon + 1 != spec.size()) throw SchemaError("bad builtin " + spec);
    return n;
  } catch (const std::logic_error&) {
    throw SchemaError("bad builtin " + spec);
  }
}

std::optional<FinGroupoid> builtin_groupoid(const std::string& spec) {
  if (spec == "terminal") return terminal_groupoid();
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return std::nullopt;
  const auto kind = spec.substr(0, colon);
  if (kind == "cyclic") return cyclic_group(parse_count(spec, colon));
  if (kind == "pair") return pair_groupoid(parse_count(spec, colon));
  return std::nullopt;
}

std::optional<FinCategory> builtin_category(const std::string& spec) {
  if (auto g = builtin_groupoid(spec)) return g->base();
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return std::nullopt;
  const auto kind = spec.substr(0, colon);
  if (kind == "ord") return ordinal(parse_count(spec, colon));
  if (kind == "nat") return truncated_nat(parse_count(spec, colon));
  return std::nullopt;
}

json matrix_json(const SparseMatrix& m) {
  json entries = json::array();
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) entries.push_back({r, c, v});
  return entries;
}

std::vector<Face> maximal_faces(const SimplicialComplex& x, const Subcomplex* within) {
  std::vector<Face> out;
  for (int k = x.dimension(); k >= 0; --k) {
    for (std::size_t f = 0; f < x.faces(k).size(); ++f) {
      if (within && !within->member[k][f]) continue;
      const auto& face = x.faces(k)[f];
      const bool covered = std::any_of(out.begin(), out.end(), [&](const Face& g) {
        return std::includes(g.begin(), g.end(), face.begin(), face.end());
      });
      if (!covered) out.push_back(face);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

json faces_json(const SimplicialComplex& x, const std::vector<Face>& faces) {
  json out = json::array();
  for (const auto& f : faces) {
    json names = json::array();
    for (auto v : f) names.push_back(x.vertices()[v]);
    out.push_back(names);
  }
  return out;
}

}  // namespace

json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Categories

FinCategory category_from_json(const json& j) {
  std::vector<std::string> objects;
  for (const auto& o : array(field(j, "objects", "category"), "category.objects")) objects.push_back(text(o, "object"));
  std::vector<FinCategory::MorphismSpec> morphisms;
  for (const auto& m : array(field(j, "morphisms", "category"), "category.morphisms")) {
    morphisms.push_back({text(field(m, "id", "morphism"), "morphism.id"), text(field(m, "src", "morphism"), "morphism.src"),
                         text(field(m, "tgt", "morphism"), "morphism.tgt")});
  }
  const auto& ids = field(j, "identity", "category");
  if (!ids.is_object()) throw SchemaError("category.identity: expected an object");
  std::vector<std::pair<std::string, std::string>> identity;
  for (const auto& [o, f] : ids.items()) identity.emplace_back(o, text(f, "identity"));
  std::vector<FinCategory::CompositionEntry> compose;
  for (const auto& e : array(field(j, "compose", "category"), "category.compose")) {
    if (!e.is_array() || e.size() != 3) throw SchemaError("category.compose: entries are [f, g, g∘f]");
    compose.push_back({text(e[0], "compose"), text(e[1], "compose"), text(e[2], "compose")});
  }
  return FinCategory::from_tables(std::move(objects), morphisms, identity, compose);
}

FinGroupoid groupoid_from_json(const json& j) {
  auto c = category_from_json(j);
  const auto& inv = field(j, "inverse", "groupoid");
  if (!inv.is_object()) throw SchemaError("groupoid.inverse: expected an object");
  std::vector<std::pair<std::string, std::string>> inverse;
  for (const auto& [f, g] : inv.items()) inverse.emplace_back(f, text(g, "inverse"));
  return FinGroupoid::from_ids(std::move(c), inverse);
}

json to_json(const FinCategory& c) {
  json j;
  std::vector<std::string> objects;
  for (std::size_t o = 0; o < c.object_count(); ++o) objects.push_back(c.object(o));
  std::sort(objects.begin(), objects.end());
  j["objects"] = objects;
  std::vector<std::size_t> order(c.morphism_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return c.morphism(a).id < c.morphism(b).id; });
  json morphisms = json::array();
  for (auto f : order)
    morphisms.push_back({{"id", c.morphism(f).id}, {"src", c.object(c.source(f))}, {"tgt", c.object(c.target(f))}});
  j["morphisms"] = morphisms;
  json identity = json::object();
  for (std::size_t o = 0; o < c.object_count(); ++o) identity[c.object(o)] = c.morphism(c.identity(o)).id;
  j["identity"] = identity;
  json compose = json::array();
  for (auto f : order)
    for (auto g : order) {
      const auto h = c.compose(g, f);
      if (h != kNone) compose.push_back({c.morphism(f).id, c.morphism(g).id, c.morphism(h).id});
    }
  j["compose"] = compose;
  return j;
}

json to_json(const FinGroupoid& g) {
  json j = to_json(g.base());
  json inverse = json::object();
  for (std::size_t f = 0; f < g.base().morphism_count(); ++f)
    inverse[g.base().morphism(f).id] = g.base().morphism(g.inverse(f)).id;
  j["inverse"] = inverse;
  return j;
}

FinCategory resolve_category(const std::string& spec) {
  if (auto c = builtin_category(spec)) return *c;
  return category_from_json(read_file(spec));
}

FinGroupoid resolve_groupoid(const std::string& spec) {
  if (auto g = builtin_groupoid(spec)) return *g;
  return groupoid_from_json(read_file(spec));
}

// ---------------------------------------------------------------------------
// Simplicial sets and complexes

json to_json(const SemiSimplicialSet& x) {
  json j;
  j["D"] = x.top_degree();
  json cells = json::array();
  for (int k = 0; k <= x.top_degree(); ++k) cells.push_back(x.labels(k));
  j["cells"] = cells;
  json faces = json::array();
  for (int k = 0; k <= x.top_degree(); ++k) {
    json per = json::array();
    for (int i = 0; k >= 1 && i <= k; ++i) {
      json col = json::array();
      for (std::size_t c = 0; c < x.cell_count(k); ++c) col.push_back(x.face(k, i, c));
      per.push_back(col);
    }
    faces.push_back(per);
  }
  j["faces"] = faces;
  return j;
}

json to_json(const TruncatedSimplicialSet& x) {
  json j = to_json(static_cast<const SemiSimplicialSet&>(x));
  json degeneracies = json::array();
  for (int k = 0; k < x.top_degree(); ++k) {
    json per = json::array();
    for (int i = 0; i <= k; ++i) {
      json col = json::array();
      for (std::size_t c = 0; c < x.cell_count(k); ++c) col.push_back(x.degeneracy(k, i, c));
      per.push_back(col);
    }
    degeneracies.push_back(per);
  }
  j["degeneracies"] = degeneracies;
  return j;
}

TruncatedSimplicialSet simplicial_from_json(const json& j) {
  const auto D = integer(field(j, "D", "simplicial set"), "D");
  if (D < 0) throw SchemaError("simplicial set: D must be ≥ 0");
  try {
    auto labels = field(j, "cells", "simplicial set").get<std::vector<std::vector<std::string>>>();
    auto faces = field(j, "faces", "simplicial set").get<std::vector<std::vector<std::vector<std::size_t>>>>();
    auto degeneracies =
        field(j, "degeneracies", "simplicial set").get<std::vector<std::vector<std::vector<std::size_t>>>>();
    return TruncatedSimplicialSet(static_cast<int>(D), std::move(labels), std::move(faces), std::move(degeneracies));
  } catch (const json::exception& e) {
    throw SchemaError(std::string("simplicial set: ") + e.what());
  }
}

json to_json(const IntegerChainComplex& c) {
  json j;
  j["D"] = c.D;
  j["complete"] = c.complete;
  j["basis"] = c.basis;
  json boundary = json::array();
  for (const auto& m : c.boundary) boundary.push_back(matrix_json(m));
  j["boundary"] = boundary;
  return j;
}

IntegerChainComplex complex_from_json(const json& j) {
  IntegerChainComplex c;
  const auto D = integer(field(j, "D", "complex"), "complex.D");
  if (D < 0) throw SchemaError("complex: D must be ≥ 0");
  c.D = static_cast<int>(D);
  c.complete = j.value("complete", false);
  const auto& basis = array(field(j, "basis", "complex"), "complex.basis");
  const auto& boundary = array(field(j, "boundary", "complex"), "complex.boundary");
  if (basis.size() != static_cast<std::size_t>(D + 1) || boundary.size() != basis.size())
    throw SchemaError("complex: basis and boundary need D+1 entries");
  for (const auto& b : basis) {
    std::vector<std::string> labels;
    for (const auto& l : array(b, "complex.basis")) labels.push_back(text(l, "basis label"));
    c.basis.push_back(std::move(labels));
  }
  for (int k = 0; k <= c.D; ++k) {
    SparseMatrix m(k == 0 ? 0 : c.rank(k - 1), c.rank(k));
    for (const auto& e : array(boundary[k], "complex.boundary")) {
      if (!e.is_array() || e.size() != 3) throw SchemaError("complex.boundary: entries are [row, col, value]");
      const auto r = index(e[0], m.rows(), "boundary row");
      const auto col = index(e[1], m.cols(), "boundary column");
      m.add(r, col, integer(e[2], "boundary value"));
    }
    c.boundary.push_back(std::move(m));
  }
  return c;
}

json to_json(const ChainMap& f) {
  json matrices = json::array();
  for (const auto& m : f.matrices) matrices.push_back(matrix_json(m));
  return {{"matrices", matrices}};
}

json to_json(const HomologyGroup& h) {
  json torsion = json::array();
  for (const auto& t : h.torsion) torsion.push_back(integer_json(t));
  return {{"degree", h.degree}, {"betti", h.betti}, {"torsion", torsion}};
}

json to_json(const Violation& v) { return {{"law", v.law}, {"witness", v.witness}, {"detail", v.detail}}; }

json to_json(const Report& r, std::size_t limit) {
  json out = json::array();
  for (std::size_t i = 0; i < r.size() && i < limit; ++i) out.push_back(to_json(r[i]));
  return out;
}

// ---------------------------------------------------------------------------
// Covers and cocycles

CoveredPtr covered_from_json(const json& j) {
  std::vector<std::string> vertices;
  std::map<std::string, std::size_t> by_name;
  for (const auto& v : array(field(j, "vertices", "covered complex"), "vertices")) {
    auto name = text(v, "vertex");
    if (!by_name.emplace(name, vertices.size()).second) throw SchemaError("covered complex: duplicate vertex " + name);
    vertices.push_back(std::move(name));
  }
  auto read_face = [&](const json& f) {
    Face face;
    for (const auto& v : array(f, "face")) {
      auto it = by_name.find(text(v, "face vertex"));
      if (it == by_name.end()) throw SchemaError("covered complex: unknown vertex " + v.dump());
      face.push_back(it->second);
    }
    return face;
  };
  std::vector<Face> faces;
  for (const auto& f : array(field(j, "faces", "covered complex"), "faces")) faces.push_back(read_face(f));
  std::vector<std::vector<Face>> cover;
  for (const auto& set : array(field(j, "cover", "covered complex"), "cover")) {
    std::vector<Face> gens;
    for (const auto& f : array(set, "cover set")) gens.push_back(read_face(f));
    cover.push_back(std::move(gens));
  }
  return std::make_shared<const CoveredComplex>(SimplicialComplex::generated(std::move(vertices), faces), cover);
}

GCocycle cocycle_from_json(const json& j) {
  GCocycle u;
  u.base = covered_from_json(j);
  const auto& g = field(j, "groupoid", "cocycle");
  u.groupoid = std::make_shared<const FinGroupoid>(g.is_string() ? resolve_groupoid(g.get<std::string>())
                                                                 : groupoid_from_json(g));
  const auto& c = u.groupoid->base();
  for (const auto& t : array(field(j, "transitions", "cocycle"), "transitions")) {
    const auto a = index(field(t, "a", "transition"), u.base->cover_size(), "transition.a");
    const auto b = index(field(t, "b", "transition"), u.base->cover_size(), "transition.b");
    const auto comp = integer(field(t, "component", "transition"), "transition.component");
    if (comp < 0) throw SchemaError("transition.component must be ≥ 0");
    const auto name = text(field(t, "morphism", "transition"), "transition.morphism");
    const auto f = c.find_morphism(name);
    if (!f) throw SchemaError("transition: unknown morphism " + name);
    if (!u.transitions.emplace(std::make_tuple(a, b, static_cast<std::size_t>(comp)), *f).second)
      throw SchemaError("transition: duplicate entry");
  }
  return u;
}

json to_json(const CoveredComplex& c) {
  const auto& x = c.complex();
  json j;
  j["vertices"] = x.vertices();
  j["faces"] = faces_json(x, maximal_faces(x, nullptr));
  json cover = json::array();
  for (std::size_t a = 0; a < c.cover_size(); ++a) cover.push_back(faces_json(x, maximal_faces(x, &c.cover_set(a))));
  j["cover"] = cover;
  return j;
}

json to_json(const GCocycle& u) {
  json j = to_json(*u.base);
  j["groupoid"] = to_json(*u.groupoid);
  json transitions = json::array();
  for (const auto& [key, f] : u.transitions) {
    const auto [a, b, comp] = key;
    transitions.push_back({{"a", a}, {"b", b}, {"component", comp}, {"morphism", u.groupoid->base().morphism(f).id}});
  }
  j["transitions"] = transitions;
  return j;
}

}  // namespace fatcat::io
