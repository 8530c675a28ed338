#include "fatcat/simpset.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>

namespace fatcat {

std::size_t cell_limit() {
  if (const char* env = std::getenv("FATCAT_MAX_CELLS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return 20000;
}

namespace {

void enforce_limit(std::size_t total, const char* what) {
  if (total > cell_limit()) {
    throw ResourceLimitError(std::string(what) + ": more than " + std::to_string(cell_limit()) +
                             " cells (raise FATCAT_MAX_CELLS)");
  }
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += parts[i];
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Containers

SemiSimplicialSet::SemiSimplicialSet(int top_degree, std::vector<std::vector<std::string>> labels,
                                     std::vector<std::vector<std::vector<std::size_t>>> faces)
    : top_degree_(top_degree), labels_(std::move(labels)), faces_(std::move(faces)) {
  const auto levels = static_cast<std::size_t>(top_degree_ + 1);
  if (top_degree_ < 0 || labels_.size() != levels) {
    throw StructuralError("cell table does not match truncation degree");
  }
  faces_.resize(levels);
  index_.resize(levels);
  for (int k = 0; k <= top_degree_; ++k) {
    for (std::size_t x = 0; x < labels_[k].size(); ++x) {
      if (!index_[k].emplace(labels_[k][x], x).second) {
        throw StructuralError("duplicate cell label '" + labels_[k][x] + "' in degree " + std::to_string(k));
      }
    }
    if (k == 0) {
      if (!faces_[0].empty()) throw StructuralError("degree 0 has no faces");
      continue;
    }
    if (faces_[k].size() != static_cast<std::size_t>(k + 1)) {
      throw StructuralError("degree " + std::to_string(k) + " needs " + std::to_string(k + 1) + " face maps");
    }
    for (const auto& table : faces_[k]) {
      if (table.size() != labels_[k].size()) throw StructuralError("face map is not total");
      for (auto y : table) {
        if (y >= labels_[k - 1].size()) throw StructuralError("face map has a dangling cell");
      }
    }
  }
}

std::vector<std::size_t> SemiSimplicialSet::cell_counts() const {
  std::vector<std::size_t> out;
  for (const auto& l : labels_) out.push_back(l.size());
  return out;
}

std::size_t SemiSimplicialSet::total_cells() const {
  std::size_t t = 0;
  for (const auto& l : labels_) t += l.size();
  return t;
}

std::optional<std::size_t> SemiSimplicialSet::find(int k, std::string_view label) const {
  if (k < 0 || k > top_degree_) return std::nullopt;
  auto it = index_[k].find(std::string(label));
  if (it == index_[k].end()) return std::nullopt;
  return it->second;
}

TruncatedSimplicialSet::TruncatedSimplicialSet(
    int top_degree, std::vector<std::vector<std::string>> labels,
    std::vector<std::vector<std::vector<std::size_t>>> faces,
    std::vector<std::vector<std::vector<std::size_t>>> degeneracies)
    : SemiSimplicialSet(top_degree, std::move(labels), std::move(faces)),
      degeneracies_(std::move(degeneracies)) {
  const int D = this->top_degree();
  degeneracies_.resize(static_cast<std::size_t>(D + 1));
  if (!degeneracies_[D].empty()) throw StructuralError("top degree has no degeneracies");
  degenerate_.resize(static_cast<std::size_t>(D + 1));
  for (int k = 0; k <= D; ++k) degenerate_[k].assign(cell_count(k), false);
  for (int k = 0; k < D; ++k) {
    if (degeneracies_[k].size() != static_cast<std::size_t>(k + 1)) {
      throw StructuralError("degree " + std::to_string(k) + " needs " + std::to_string(k + 1) + " degeneracies");
    }
    for (const auto& table : degeneracies_[k]) {
      if (table.size() != cell_count(k)) throw StructuralError("degeneracy map is not total");
      for (auto y : table) {
        if (y >= cell_count(k + 1)) throw StructuralError("degeneracy map has a dangling cell");
        degenerate_[k + 1][y] = true;
      }
    }
  }
}

std::vector<std::size_t> TruncatedSimplicialSet::nondegenerate(int k) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < cell_count(k); ++x)
    if (!degenerate_[k][x]) out.push_back(x);
  return out;
}

std::size_t TruncatedSimplicialSet::apply_operator(int n, std::size_t x, std::span<const int> theta) const {
  const int m = static_cast<int>(theta.size()) - 1;
  if (m < 0 || m > top_degree() || n > top_degree()) {
    throw PreconditionError("simplicial operator outside truncation");
  }
  std::vector<int> image;
  for (std::size_t p = 0; p < theta.size(); ++p) {
    if (theta[p] < 0 || theta[p] > n || (p > 0 && theta[p] < theta[p - 1])) {
      throw PreconditionError("operator is not a monotone map into [n]");
    }
    if (image.empty() || image.back() != theta[p]) image.push_back(theta[p]);
  }
  int degree = n;
  for (int j = n; j >= 0; --j) {
    if (!std::binary_search(image.begin(), image.end(), j)) x = face(degree--, j, x);
  }
  for (int p = 0; p < m; ++p) {
    if (theta[p] == theta[p + 1]) x = degeneracy(degree++, p, x);
  }
  return x;
}

// ---------------------------------------------------------------------------
// Audits

Report audit_faces(const SemiSimplicialSet& x) {
  Report r;
  for (int k = 2; k <= x.top_degree(); ++k) {
    for (std::size_t c = 0; c < x.cell_count(k); ++c) {
      for (int j = 1; j <= k; ++j) {
        for (int i = 0; i < j; ++i) {
          auto left = x.face(k - 1, i, x.face(k, j, c));
          auto right = x.face(k - 1, j - 1, x.face(k, i, c));
          if (left != right) {
            r.push_back({"face-identity", {x.label(k, c), std::to_string(i), std::to_string(j)},
                         "d_i d_j ≠ d_{j-1} d_i"});
          }
        }
      }
    }
  }
  return r;
}

Report audit_simplicial(const TruncatedSimplicialSet& x) {
  Report r = audit_faces(x);
  const int D = x.top_degree();
  for (int k = 0; k + 2 <= D; ++k) {
    for (std::size_t c = 0; c < x.cell_count(k); ++c) {
      for (int j = 0; j <= k; ++j) {
        for (int i = 0; i <= j; ++i) {
          auto left = x.degeneracy(k + 1, i, x.degeneracy(k, j, c));
          auto right = x.degeneracy(k + 1, j + 1, x.degeneracy(k, i, c));
          if (left != right) {
            r.push_back({"degeneracy-identity", {x.label(k, c), std::to_string(i), std::to_string(j)},
                         "s_i s_j ≠ s_{j+1} s_i"});
          }
        }
      }
    }
  }
  for (int k = 0; k + 1 <= D; ++k) {
    for (std::size_t c = 0; c < x.cell_count(k); ++c) {
      for (int j = 0; j <= k; ++j) {
        auto sj = x.degeneracy(k, j, c);
        for (int i = 0; i <= k + 1; ++i) {
          auto left = x.face(k + 1, i, sj);
          std::size_t right;
          if (i == j || i == j + 1) {
            right = c;
          } else if (i < j) {
            right = x.degeneracy(k - 1, j - 1, x.face(k, i, c));
          } else {
            right = x.degeneracy(k - 1, j, x.face(k, i - 1, c));
          }
          if (left != right) {
            r.push_back({"interchange-identity", {x.label(k, c), std::to_string(i), std::to_string(j)},
                         "d_i s_j violates the interchange law"});
          }
        }
      }
    }
  }
  return r;
}

Report audit_map(const SimplicialMap& f) {
  Report r;
  const auto& a = *f.source;
  const auto& b = *f.target;
  if (a.top_degree() != b.top_degree()) throw PreconditionError("map between different truncations");
  if (f.cells.size() != static_cast<std::size_t>(a.top_degree() + 1)) {
    throw StructuralError("map is not defined in every degree");
  }
  for (int k = 0; k <= a.top_degree(); ++k) {
    if (f.cells[k].size() != a.cell_count(k)) throw StructuralError("map is not total");
  }
  for (int k = 1; k <= a.top_degree(); ++k) {
    for (std::size_t c = 0; c < a.cell_count(k); ++c) {
      for (int i = 0; i <= k; ++i) {
        if (f.cells[k - 1][a.face(k, i, c)] != b.face(k, i, f.cells[k][c])) {
          r.push_back({"map-face", {a.label(k, c), std::to_string(i)}, "f d_i ≠ d_i f"});
        }
      }
    }
  }
  const auto* sa = dynamic_cast<const TruncatedSimplicialSet*>(&a);
  const auto* sb = dynamic_cast<const TruncatedSimplicialSet*>(&b);
  if (sa && sb) {
    for (int k = 0; k < a.top_degree(); ++k) {
      for (std::size_t c = 0; c < a.cell_count(k); ++c) {
        for (int i = 0; i <= k; ++i) {
          if (f.cells[k + 1][sa->degeneracy(k, i, c)] != sb->degeneracy(k, i, f.cells[k][c])) {
            r.push_back({"map-degeneracy", {a.label(k, c), std::to_string(i)}, "f s_i ≠ s_i f"});
          }
        }
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Nerve

std::size_t Nerve::find(int k, const std::vector<std::size_t>& chain) const {
  if (k < 0 || k > simplices.top_degree()) return kNone;
  const auto& table = k == 0 ? lookup_0 : lookup[k];
  auto it = table.find(chain);
  return it == table.end() ? kNone : it->second;
}

std::size_t Nerve::vertex(int k, std::size_t x, int j) const {
  const auto& ch = chains[k][x];
  if (k == 0) return ch[0];
  if (j == 0) return category->source(ch[0]);
  return category->target(ch[j - 1]);
}

Nerve build_nerve(const CategoryPtr& cp, int D) {
  if (D < 0) throw PreconditionError("nerve: D must be ≥ 0");
  const auto& c = *cp;
  Nerve nv;
  nv.category = cp;
  nv.chains.resize(D + 1);
  nv.lookup.resize(D + 1);
  std::size_t total = 0;
  for (std::size_t o = 0; o < c.object_count(); ++o) {
    nv.lookup_0[{o}] = nv.chains[0].size();
    nv.chains[0].push_back({o});
  }
  total += c.object_count();
  for (int k = 1; k <= D; ++k) {
    for (const auto& prev : nv.chains[k - 1]) {
      std::size_t tail = k == 1 ? prev[0] : c.target(prev.back());
      for (std::size_t g = 0; g < c.morphism_count(); ++g) {
        if (c.source(g) != tail) continue;
        std::vector<std::size_t> ch = k == 1 ? std::vector<std::size_t>{} : prev;
        ch.push_back(g);
        nv.lookup[k][ch] = nv.chains[k].size();
        nv.chains[k].push_back(std::move(ch));
      }
    }
    total += nv.chains[k].size();
    enforce_limit(total, "nerve");
  }

  auto composite = [&](std::size_t g, std::size_t f) {
    auto h = c.compose(g, f);
    if (h == kNone) throw StructuralError("nerve: composable pair without composite");
    return h;
  };

  std::vector<std::vector<std::string>> labels(D + 1);
  for (std::size_t o = 0; o < c.object_count(); ++o) labels[0].push_back(c.object(o));
  for (int k = 1; k <= D; ++k) {
    for (const auto& ch : nv.chains[k]) {
      std::vector<std::string> ids;
      for (auto f : ch) ids.push_back(c.morphism(f).id);
      labels[k].push_back(join(ids, "|"));
    }
  }

  std::vector<std::vector<std::vector<std::size_t>>> faces(D + 1), degens(D + 1);
  for (int k = 1; k <= D; ++k) {
    faces[k].assign(k + 1, std::vector<std::size_t>(nv.chains[k].size()));
    for (std::size_t x = 0; x < nv.chains[k].size(); ++x) {
      const auto& ch = nv.chains[k][x];
      for (int i = 0; i <= k; ++i) {
        std::size_t y;
        if (k == 1) {
          y = nv.lookup_0.at({i == 0 ? c.target(ch[0]) : c.source(ch[0])});
        } else {
          std::vector<std::size_t> d;
          if (i == 0) {
            d.assign(ch.begin() + 1, ch.end());
          } else if (i == k) {
            d.assign(ch.begin(), ch.end() - 1);
          } else {
            d.assign(ch.begin(), ch.begin() + (i - 1));
            d.push_back(composite(ch[i], ch[i - 1]));
            d.insert(d.end(), ch.begin() + (i + 1), ch.end());
          }
          y = nv.lookup[k - 1].at(d);
        }
        faces[k][i][x] = y;
      }
    }
  }
  for (int k = 0; k < D; ++k) {
    degens[k].assign(k + 1, std::vector<std::size_t>(nv.chains[k].size()));
    for (std::size_t x = 0; x < nv.chains[k].size(); ++x) {
      for (int i = 0; i <= k; ++i) {
        std::size_t v = nv.vertex(k, x, i);
        std::vector<std::size_t> ch = k == 0 ? std::vector<std::size_t>{} : nv.chains[k][x];
        ch.insert(ch.begin() + i, c.identity(v));
        degens[k][i][x] = nv.lookup[k + 1].at(ch);
      }
    }
  }
  nv.simplices = TruncatedSimplicialSet(D, std::move(labels), std::move(faces), std::move(degens));
  return nv;
}

TruncatedSimplicialSet nerve(const FinCategory& c, int D) {
  return build_nerve(std::make_shared<const FinCategory>(c), D).simplices;
}

// ---------------------------------------------------------------------------
// S and products

std::string increasing_label(std::span<const int> seq) {
  std::string s;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) s += "<";
    s += std::to_string(seq[i]);
  }
  return s;
}

std::vector<int> parse_increasing(std::string_view label) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= label.size()) {
    auto next = label.find('<', pos);
    if (next == std::string_view::npos) next = label.size();
    out.push_back(std::stoi(std::string(label.substr(pos, next - pos))));
    pos = next + 1;
  }
  return out;
}

namespace {

// Combinations of size r from {0..N} in lex order.
std::vector<std::vector<int>> combinations(int N, int r) {
  std::vector<std::vector<int>> out;
  if (r > N + 1 || r <= 0) return out;
  std::vector<int> c(r);
  for (int i = 0; i < r; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    int i = r - 1;
    while (i >= 0 && c[i] == N - (r - 1 - i)) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

std::vector<std::vector<int>> weak_sequences(int N, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(len, 0);
  while (true) {
    out.push_back(c);
    int i = len - 1;
    while (i >= 0 && c[i] == N) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < len; ++j) c[j] = c[i];
  }
  return out;
}

}  // namespace

SemiSimplicialSet s_semisimplicial(int N, int D) {
  if (N < 0 || D < 0) throw PreconditionError("S(N): N and D must be ≥ 0");
  std::vector<std::vector<std::string>> labels(D + 1);
  std::vector<std::map<std::vector<int>, std::size_t>> index(D + 1);
  std::vector<std::vector<std::vector<int>>> seqs(D + 1);
  std::size_t total = 0;
  for (int k = 0; k <= D; ++k) {
    seqs[k] = combinations(N, k + 1);
    for (std::size_t x = 0; x < seqs[k].size(); ++x) {
      labels[k].push_back(increasing_label(seqs[k][x]));
      index[k][seqs[k][x]] = x;
    }
    total += seqs[k].size();
    enforce_limit(total, "S(N)");
  }
  std::vector<std::vector<std::vector<std::size_t>>> faces(D + 1);
  for (int k = 1; k <= D; ++k) {
    faces[k].assign(k + 1, std::vector<std::size_t>(seqs[k].size()));
    for (std::size_t x = 0; x < seqs[k].size(); ++x) {
      for (int i = 0; i <= k; ++i) {
        auto d = seqs[k][x];
        d.erase(d.begin() + i);
        faces[k][i][x] = index[k - 1].at(d);
      }
    }
  }
  return SemiSimplicialSet(D, std::move(labels), std::move(faces));
}

SemiSimplicialSet product_with_S(const SemiSimplicialSet& x, const SemiSimplicialSet& s) {
  if (x.top_degree() != s.top_degree()) throw PreconditionError("product: truncation mismatch");
  const int D = x.top_degree();
  std::vector<std::vector<std::string>> labels(D + 1);
  std::size_t total = 0;
  for (int k = 0; k <= D; ++k) {
    total += x.cell_count(k) * s.cell_count(k);
    enforce_limit(total, "product");
    for (std::size_t a = 0; a < x.cell_count(k); ++a)
      for (std::size_t b = 0; b < s.cell_count(k); ++b)
        labels[k].push_back("(" + x.label(k, a) + ";" + s.label(k, b) + ")");
  }
  std::vector<std::vector<std::vector<std::size_t>>> faces(D + 1);
  for (int k = 1; k <= D; ++k) {
    const std::size_t ns = s.cell_count(k), ns1 = s.cell_count(k - 1);
    faces[k].assign(k + 1, std::vector<std::size_t>(x.cell_count(k) * ns));
    for (std::size_t a = 0; a < x.cell_count(k); ++a)
      for (std::size_t b = 0; b < ns; ++b)
        for (int i = 0; i <= k; ++i)
          faces[k][i][a * ns + b] = x.face(k, i, a) * ns1 + s.face(k, i, b);
  }
  return SemiSimplicialSet(D, std::move(labels), std::move(faces));
}

// ---------------------------------------------------------------------------
// X^ℕ

UnraveledSimplicial unravel_simplicial(const TruncatedSimplicialSet& y, int N) {
  if (N < 0) throw PreconditionError("unravel_simplicial: N must be ≥ 0");
  const int D = y.top_degree();
  UnraveledSimplicial u;
  u.sequence.resize(D + 1);
  u.y_cell.resize(D + 1);
  std::vector<std::vector<std::string>> labels(D + 1);
  std::size_t total = 0;
  for (int n = 0; n <= D; ++n) {
    for (auto& seq : weak_sequences(N, n + 1)) {
      int l = 1;
      for (int i = 1; i <= n; ++i) l += seq[i] != seq[i - 1];
      std::string prefix;
      for (int i = 0; i <= n; ++i) prefix += (i ? "," : "") + std::to_string(seq[i]);
      for (std::size_t c = 0; c < y.cell_count(l - 1); ++c) {
        u.lookup_by_key[{seq, c}] = labels[n].size();
        labels[n].push_back(prefix + "|" + y.label(l - 1, c));
        u.sequence[n].push_back(seq);
        u.y_cell[n].push_back(c);
      }
    }
    total += labels[n].size();
    enforce_limit(total, "unravel_simplicial");
  }
  auto key_index = [&](const std::vector<int>& seq, std::size_t c) { return u.lookup_by_key.at({seq, c}); };

  std::vector<std::vector<std::vector<std::size_t>>> faces(D + 1), degens(D + 1);
  for (int n = 1; n <= D; ++n) {
    faces[n].assign(n + 1, std::vector<std::size_t>(labels[n].size()));
    for (std::size_t x = 0; x < labels[n].size(); ++x) {
      const auto& seq = u.sequence[n][x];
      std::vector<int> distinct;
      for (int v : seq)
        if (distinct.empty() || distinct.back() != v) distinct.push_back(v);
      const int l = static_cast<int>(distinct.size());
      for (int i = 0; i <= n; ++i) {
        auto d = seq;
        d.erase(d.begin() + i);
        auto group_size = std::count(seq.begin(), seq.end(), seq[i]);
        std::size_t c = u.y_cell[n][x];
        if (group_size == 1) {
          int j = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), seq[i]) - distinct.begin());
          c = y.face(l - 1, j, c);
        }
        faces[n][i][x] = key_index(d, c);
      }
    }
  }
  for (int n = 0; n < D; ++n) {
    degens[n].assign(n + 1, std::vector<std::size_t>(labels[n].size()));
    for (std::size_t x = 0; x < labels[n].size(); ++x) {
      for (int i = 0; i <= n; ++i) {
        auto s = u.sequence[n][x];
        s.insert(s.begin() + i, s[i]);
        degens[n][i][x] = key_index(s, u.y_cell[n][x]);
      }
    }
  }
  u.set = TruncatedSimplicialSet(D, std::move(labels), std::move(faces), std::move(degens));
  return u;
}

namespace {

// (f, i, j) ↦ morphism index in the unraveled category.
std::map<std::tuple<std::size_t, int, int>, std::size_t> origin_index(const Unraveled& u) {
  std::map<std::tuple<std::size_t, int, int>, std::size_t> m;
  for (std::size_t f = 0; f < u.morphism_origin.size(); ++f) {
    const auto& o = u.morphism_origin[f];
    m[{o.base_morphism, o.from_level, o.to_level}] = f;
  }
  return m;
}

Report check_bijection_with_structure(const std::vector<std::vector<std::size_t>>& map,
                                      const SemiSimplicialSet& a, const SemiSimplicialSet& b,
                                      bool check_degeneracies, const char* law) {
  Report r;
  const int D = a.top_degree();
  for (int k = 0; k <= D; ++k) {
    std::vector<bool> hit(b.cell_count(k), false);
    for (std::size_t x = 0; x < a.cell_count(k); ++x) {
      auto y = map[k][x];
      if (y == kNone) {
        r.push_back({law, {a.label(k, x)}, "cell has no image"});
        continue;
      }
      if (hit[y]) r.push_back({law, {a.label(k, x), b.label(k, y)}, "not injective"});
      hit[y] = true;
    }
    for (std::size_t y = 0; y < b.cell_count(k); ++y) {
      if (!hit[y]) r.push_back({law, {b.label(k, y)}, "not surjective"});
    }
  }
  for (int k = 1; k <= D; ++k) {
    for (std::size_t x = 0; x < a.cell_count(k); ++x) {
      if (map[k][x] == kNone) continue;
      for (int i = 0; i <= k; ++i) {
        auto lhs = map[k - 1][a.face(k, i, x)];
        auto rhs = b.face(k, i, map[k][x]);
        if (lhs != rhs) r.push_back({law, {a.label(k, x), std::to_string(i)}, "does not commute with d_i"});
      }
    }
  }
  if (check_degeneracies) {
    const auto& sa = dynamic_cast<const TruncatedSimplicialSet&>(a);
    const auto& sb = dynamic_cast<const TruncatedSimplicialSet&>(b);
    for (int k = 0; k < D; ++k) {
      for (std::size_t x = 0; x < a.cell_count(k); ++x) {
        if (map[k][x] == kNone) continue;
        for (int i = 0; i <= k; ++i) {
          if (map[k + 1][sa.degeneracy(k, i, x)] != sb.degeneracy(k, i, map[k][x])) {
            r.push_back({law, {a.label(k, x), std::to_string(i)}, "does not commute with s_i"});
          }
        }
      }
    }
  }
  return r;
}

}  // namespace

Report verify_unravel_nerve_iso(const CategoryPtr& c, int N, int D) {
  Unraveled U = unravel(c, N);
  Nerve nu = build_nerve(U.category, D);
  Nerve base = build_nerve(c, D);
  UnraveledSimplicial xs = unravel_simplicial(base.simplices, N);
  std::vector<std::vector<std::size_t>> map(D + 1);
  for (int n = 0; n <= D; ++n) {
    for (const auto& ch : nu.chains[n]) {
      std::vector<int> seq;
      std::vector<std::size_t> strict;
      std::size_t first_object;
      if (n == 0) {
        auto [x, i] = U.object_origin[ch[0]];
        seq.push_back(i);
        first_object = x;
      } else {
        const auto& o0 = U.morphism_origin[ch[0]];
        seq.push_back(o0.from_level);
        first_object = c->source(o0.base_morphism);
        for (auto f : ch) {
          const auto& o = U.morphism_origin[f];
          seq.push_back(o.to_level);
          if (o.from_level < o.to_level) strict.push_back(o.base_morphism);
        }
      }
      std::size_t ycell = strict.empty() ? base.find(0, {first_object}) : base.find(static_cast<int>(strict.size()), strict);
      auto it = xs.lookup_by_key.find({seq, ycell});
      map[n].push_back(it == xs.lookup_by_key.end() ? kNone : it->second);
    }
  }
  return check_bijection_with_structure(map, nu.simplices, xs.set, true, "unravel-nerve-iso");
}

Report verify_strict_part_is_product(const TruncatedSimplicialSet& y, int N) {
  const int D = y.top_degree();
  UnraveledSimplicial xs = unravel_simplicial(y, N);
  SemiSimplicialSet s = s_semisimplicial(N, D);
  SemiSimplicialSet p = product_with_S(y, s);
  // Restrict X^ℕ to strictly increasing index sequences.
  std::vector<std::vector<std::string>> labels(D + 1);
  std::vector<std::vector<std::size_t>> keep(D + 1), position(D + 1);
  for (int n = 0; n <= D; ++n) {
    position[n].assign(xs.set.cell_count(n), kNone);
    for (std::size_t x = 0; x < xs.set.cell_count(n); ++x) {
      const auto& seq = xs.sequence[n][x];
      if (std::adjacent_find(seq.begin(), seq.end()) != seq.end()) continue;
      position[n][x] = keep[n].size();
      keep[n].push_back(x);
      labels[n].push_back(xs.set.label(n, x));
    }
  }
  Report r;
  std::vector<std::vector<std::vector<std::size_t>>> faces(D + 1);
  for (int n = 1; n <= D; ++n) {
    faces[n].assign(n + 1, std::vector<std::size_t>(keep[n].size()));
    for (std::size_t a = 0; a < keep[n].size(); ++a) {
      for (int i = 0; i <= n; ++i) {
        auto f = position[n - 1][xs.set.face(n, i, keep[n][a])];
        if (f == kNone) {
          r.push_back({"strict-part", {labels[n][a]}, "face leaves the strict part"});
          f = 0;
        }
        faces[n][i][a] = f;
      }
    }
  }
  if (!r.empty()) return r;
  SemiSimplicialSet strict(D, std::move(labels), std::move(faces));
  std::vector<std::vector<std::size_t>> map(D + 1);
  for (int n = 0; n <= D; ++n) {
    for (auto x : keep[n]) {
      auto sidx = s.find(n, increasing_label(xs.sequence[n][x]));
      map[n].push_back(sidx ? xs.y_cell[n][x] * s.cell_count(n) + *sidx : kNone);
    }
  }
  return check_bijection_with_structure(map, strict, p, false, "strict-part-product");
}

CellBijectionReport unravel_cell_bijection(const CategoryPtr& c, int N, int D) {
  CellBijectionReport out;
  Nerve base = build_nerve(c, D);
  SemiSimplicialSet s = s_semisimplicial(N, D);
  SemiSimplicialSet p = product_with_S(base.simplices, s);
  Unraveled U = unravel(c, N);
  Nerve nu = build_nerve(U.category, D);
  auto origin = origin_index(U);
  const std::size_t levels = static_cast<std::size_t>(N) + 1;

  // Nondegenerate part of nerve(unravel) as a semi-simplicial set.
  std::vector<std::vector<std::size_t>> nondeg(D + 1), position(D + 1);
  std::vector<std::vector<std::string>> labels(D + 1);
  for (int k = 0; k <= D; ++k) {
    nondeg[k] = nu.simplices.nondegenerate(k);
    position[k].assign(nu.simplices.cell_count(k), kNone);
    for (std::size_t a = 0; a < nondeg[k].size(); ++a) {
      position[k][nondeg[k][a]] = a;
      labels[k].push_back(nu.simplices.label(k, nondeg[k][a]));
    }
    out.product_counts.push_back(p.cell_count(k));
    out.nondegenerate_counts.push_back(nondeg[k].size());
  }
  std::vector<std::vector<std::vector<std::size_t>>> faces(D + 1);
  for (int k = 1; k <= D; ++k) {
    faces[k].assign(k + 1, std::vector<std::size_t>(nondeg[k].size()));
    for (std::size_t a = 0; a < nondeg[k].size(); ++a) {
      for (int i = 0; i <= k; ++i) {
        auto f = position[k - 1][nu.simplices.face(k, i, nondeg[k][a])];
        if (f == kNone) {
          out.report.push_back({"cell-bijection", {labels[k][a], std::to_string(i)}, "face of a nondegenerate cell is degenerate"});
          f = 0;
        }
        faces[k][i][a] = f;
      }
    }
  }
  if (!out.report.empty()) return out;
  SemiSimplicialSet target(D, std::move(labels), std::move(faces));

  std::vector<std::vector<std::size_t>> map(D + 1);
  for (int k = 0; k <= D; ++k) {
    const std::size_t ns = s.cell_count(k);
    for (std::size_t cell = 0; cell < p.cell_count(k); ++cell) {
      std::size_t xi = cell / ns;
      auto seq = parse_increasing(s.label(k, cell % ns));
      std::size_t image = kNone;
      if (k == 0) {
        std::size_t obj = base.chains[0][xi][0] * levels + static_cast<std::size_t>(seq[0]);
        image = nu.find(0, {obj});
      } else {
        std::vector<std::size_t> chain;
        for (int j = 0; j < k; ++j) {
          chain.push_back(origin.at({base.chains[k][xi][j], seq[j], seq[j + 1]}));
        }
        image = nu.find(k, chain);
      }
      map[k].push_back(image == kNone ? kNone : position[k][image]);
    }
  }
  append(out.report, check_bijection_with_structure(map, p, target, false, "cell-bijection"));
  return out;
}

// ---------------------------------------------------------------------------
// Barycentric flags

std::vector<int> BarycentricFlag::sizes() const {
  std::vector<int> out;
  for (auto a : chain) out.push_back(std::popcount(a));
  return out;
}

std::vector<int> BarycentricFlag::maxima() const {
  std::vector<int> out;
  for (auto a : chain) out.push_back(31 - std::countl_zero(a));
  return out;
}

bool BarycentricFlag::is_maximal() const {
  if (static_cast<int>(chain.size()) != n + 1) return false;
  for (int i = 0; i <= n; ++i)
    if (std::popcount(chain[i]) != i + 1) return false;
  return true;
}

std::string BarycentricFlag::label() const {
  std::string s;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) s += "<";
    s += "{";
    bool first = true;
    for (int v = 0; v <= n; ++v) {
      if (chain[i] >> v & 1U) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
      }
    }
    s += "}";
  }
  return s;
}

std::vector<BarycentricFlag> sd_flags(int n, int k) {
  if (n < 0 || n > 20 || k < 0) throw PreconditionError("sd_flags: need 0 ≤ n ≤ 20 and k ≥ 0");
  const std::uint32_t full = (1U << (n + 1)) - 1;
  std::vector<BarycentricFlag> out;
  std::vector<std::uint32_t> chain;
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(chain.size()) == k + 1) {
      out.push_back({n, chain});
      return;
    }
    for (std::uint32_t a = 1; a <= full; ++a) {
      if (!chain.empty()) {
        auto last = chain.back();
        if ((a & last) != last || a == last) continue;
      }
      chain.push_back(a);
      self(self);
      chain.pop_back();
    }
  };
  extend(extend);
  return out;
}

}  // namespace fatcat
