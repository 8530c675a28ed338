#include "fatcat/homology.hpp"

#include <algorithm>

#include "smith.hpp"

namespace fatcat {

using detail::Dense;

// ---------------------------------------------------------------------------
// SparseMatrix

std::int64_t SparseMatrix::entry(std::size_t r, std::size_t c) const {
  for (const auto& [row, v] : columns_.at(c))
    if (row == r) return v;
  return 0;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& col : columns_) n += col.size();
  return n;
}

void SparseMatrix::add(std::size_t r, std::size_t c, std::int64_t v) {
  if (r >= rows_ || c >= columns_.size()) throw PreconditionError("matrix index out of range");
  if (v == 0) return;
  auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, std::size_t row) { return e.first < row; });
  if (it != col.end() && it->first == r) {
    std::int64_t s;
    if (__builtin_add_overflow(it->second, v, &s)) throw IntegerOverflow();
    if (s == 0) {
      col.erase(it);
    } else {
      it->second = s;
    }
  } else {
    col.insert(it, {r, v});
  }
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const Column& c) { return c.empty(); });
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
  if (cols() != rhs.rows()) throw PreconditionError("matrix product shape mismatch");
  SparseMatrix out(rows_, rhs.cols());
  for (std::size_t c = 0; c < rhs.cols(); ++c) {
    for (const auto& [mid, v] : rhs.columns_[c]) {
      for (const auto& [r, w] : columns_[mid]) {
        std::int64_t p;
        if (__builtin_mul_overflow(v, w, &p)) throw IntegerOverflow();
        out.add(r, c, p);
      }
    }
  }
  return out;
}

SparseMatrix SparseMatrix::minus(const SparseMatrix& rhs) const {
  if (rows() != rhs.rows() || cols() != rhs.cols()) throw PreconditionError("matrix difference shape mismatch");
  SparseMatrix out = *this;
  for (std::size_t c = 0; c < rhs.cols(); ++c)
    for (const auto& [r, v] : rhs.columns_[c]) out.add(r, c, -v);
  return out;
}

std::vector<Integer> SparseMatrix::apply(const std::vector<Integer>& v) const {
  if (v.size() != cols()) throw PreconditionError("matrix-vector shape mismatch");
  std::vector<Integer> out(rows_);
  for (std::size_t c = 0; c < cols(); ++c) {
    if (v[c] == 0) continue;
    for (const auto& [r, w] : columns_[c]) out[r] += v[c] * w;
  }
  return out;
}

SparseMatrix SparseMatrix::permuted(const std::vector<std::size_t>& row_perm,
                                    const std::vector<std::size_t>& col_perm) const {
  SparseMatrix out(rows_, cols());
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& [r, v] : columns_[c]) out.add(row_perm[r], col_perm[c], v);
  return out;
}

// ---------------------------------------------------------------------------
// Complexes

std::vector<std::size_t> IntegerChainComplex::ranks() const {
  std::vector<std::size_t> out;
  for (const auto& b : basis) out.push_back(b.size());
  return out;
}

Report check_complex(const IntegerChainComplex& c) {
  Report r;
  const auto levels = static_cast<std::size_t>(c.D + 1);
  if (c.D < 0 || c.basis.size() != levels || c.boundary.size() != levels) {
    r.push_back({"complex-shape", {}, "basis/boundary count does not match D"});
    return r;
  }
  for (int k = 0; k <= c.D; ++k) {
    const std::size_t rows = k == 0 ? 0 : c.rank(k - 1);
    if (c.boundary[k].rows() != rows || c.boundary[k].cols() != c.rank(k)) {
      r.push_back({"complex-shape", {std::to_string(k)}, "boundary matrix has the wrong shape"});
    }
  }
  if (!r.empty()) return r;
  for (int k = 2; k <= c.D; ++k) {
    auto dd = c.boundary[k - 1].multiply(c.boundary[k]);
    for (std::size_t x = 0; x < dd.cols(); ++x) {
      if (!dd.column(x).empty()) {
        r.push_back({"boundary-squared", {std::to_string(k), c.basis[k][x]}, "∂∂ ≠ 0"});
      }
    }
  }
  return r;
}

IntegerChainComplex permuted(const IntegerChainComplex& c, const std::vector<std::vector<std::size_t>>& perms) {
  IntegerChainComplex out;
  out.D = c.D;
  out.complete = c.complete;
  out.basis.resize(c.basis.size());
  for (std::size_t k = 0; k < c.basis.size(); ++k) {
    out.basis[k].resize(c.basis[k].size());
    for (std::size_t x = 0; x < c.basis[k].size(); ++x) out.basis[k][perms[k][x]] = c.basis[k][x];
  }
  for (std::size_t k = 0; k < c.boundary.size(); ++k) {
    out.boundary.push_back(k == 0 ? c.boundary[0].permuted({}, perms[0])
                                  : c.boundary[k].permuted(perms[k - 1], perms[k]));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Homology

namespace {

template <class T>
Dense<T> to_dense(const SparseMatrix& m) {
  Dense<T> d(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) d(r, c) = T(v);
  return d;
}

struct Elimination {
  std::size_t rank = 0;
  std::vector<Integer> diagonal;
};

template <class T>
Elimination eliminate(const SparseMatrix& m) {
  auto d = to_dense<T>(m);
  auto diag = detail::diagonalize(d);
  Elimination e;
  e.rank = diag.size();
  for (const auto& v : diag) e.diagonal.push_back(to_integer(v));
  return e;
}

Elimination eliminate(const SparseMatrix& m) {
  try {
    return eliminate<CheckedInt>(m);
  } catch (const IntegerOverflow&) {
    return eliminate<Integer>(m);
  }
}

void require_degree(const IntegerChainComplex& c, int k) {
  if (k < 0 || k > c.D) {
    throw PreconditionError("homology degree " + std::to_string(k) + " outside [0, " + std::to_string(c.D) + "]");
  }
}

HomologyGroup assemble(const IntegerChainComplex& c, int k, std::size_t rank_k, const Elimination* next) {
  HomologyGroup h;
  h.degree = k;
  std::size_t rank_next = next ? next->rank : 0;
  h.betti = c.rank(k) - rank_k - rank_next;
  if (next) h.torsion = detail::invariant_factors(next->diagonal);
  h.reliable = k + 1 <= c.D || c.complete;
  return h;
}

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

template <class T>
HomologyPresentation present_impl(const IntegerChainComplex& c, int k) {
  const std::size_t n = c.rank(k);
  Dense<T> a = to_dense<T>(c.boundary[k]);
  Dense<T> V, Vinv;
  const std::size_t p = detail::column_echelon(a, V, Vinv);
  const std::size_t z = n - p;

  // Coordinates of ∂_{k+1} columns in the kernel basis V[:, p..].
  const std::size_t m = k + 1 <= c.D ? c.rank(k + 1) : 0;
  Dense<T> X(z, m);
  if (m > 0) {
    const auto& b = c.boundary[k + 1];
    for (std::size_t j = 0; j < m; ++j)
      for (const auto& [r, v] : b.column(j))
        for (std::size_t i = 0; i < z; ++i) {
          const T& w = Vinv(p + i, r);
          if (w != T(0)) X(i, j) += w * T(v);
        }
  }
  detail::RowTracker<T> P(z);
  auto diag = detail::diagonalize(X, &P);
  const std::size_t r = diag.size();

  HomologyPresentation out;
  out.group.degree = k;
  out.group.betti = z - r;
  std::vector<Integer> d;
  for (const auto& v : diag) d.push_back(to_integer(v));
  out.group.torsion = detail::invariant_factors(d);
  out.group.reliable = k + 1 <= c.D || c.complete;

  for (std::size_t i = 0; i < z; ++i) {
    Integer order = 0;
    if (i < r) {
      order = detail::magnitude(to_integer(diag[i]));
      if (order == 1) continue;
    }
    out.orders.push_back(order);
    std::vector<T> gen(n, T(0)), fun(n, T(0));
    for (std::size_t j = 0; j < z; ++j) {
      const T& q = P.Pinv(j, i);
      if (q != T(0))
        for (std::size_t row = 0; row < n; ++row)
          if (V(row, p + j) != T(0)) gen[row] += q * V(row, p + j);
      const T& w = P.P(i, j);
      if (w != T(0))
        for (std::size_t col = 0; col < n; ++col)
          if (Vinv(p + j, col) != T(0)) fun[col] += w * Vinv(p + j, col);
    }
    std::vector<Integer> g, f;
    for (const auto& v : gen) g.push_back(to_integer(v));
    for (const auto& v : fun) f.push_back(to_integer(v));
    out.generators.push_back(std::move(g));
    out.functional.push_back(std::move(f));
  }
  return out;
}

}  // namespace

std::string HomologyGroup::describe() const {
  std::vector<std::string> parts;
  if (betti == 1) parts.push_back("ℤ");
  if (betti > 1) parts.push_back("ℤ^" + std::to_string(betti));
  for (const auto& t : torsion) parts.push_back("ℤ/" + to_string(t));
  if (parts.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " ⊕ " : "") + parts[i];
  return s;
}

HomologyGroup homology(const IntegerChainComplex& c, int k) {
  require_degree(c, k);
  std::size_t rank_k = k == 0 ? 0 : eliminate(c.boundary[k]).rank;
  if (k + 1 <= c.D) {
    auto next = eliminate(c.boundary[k + 1]);
    return assemble(c, k, rank_k, &next);
  }
  return assemble(c, k, rank_k, nullptr);
}

std::vector<HomologyGroup> homology_through(const IntegerChainComplex& c, int d) {
  require_degree(c, d);
  std::vector<Elimination> e(static_cast<std::size_t>(std::min(d + 1, c.D) + 1));
  for (int k = 1; k <= std::min(d + 1, c.D); ++k) e[k] = eliminate(c.boundary[k]);
  std::vector<HomologyGroup> out;
  for (int k = 0; k <= d; ++k) {
    std::size_t rank_k = k == 0 ? 0 : e[k].rank;
    out.push_back(assemble(c, k, rank_k, k + 1 <= c.D ? &e[k + 1] : nullptr));
  }
  return out;
}

HomologyPresentation present(const IntegerChainComplex& c, int k) {
  require_degree(c, k);
  try {
    return present_impl<CheckedInt>(c, k);
  } catch (const IntegerOverflow&) {
    return present_impl<Integer>(c, k);
  }
}

std::vector<Integer> HomologyPresentation::coordinates(const std::vector<Integer>& cycle) const {
  std::vector<Integer> out;
  for (std::size_t g = 0; g < functional.size(); ++g) {
    Integer v = dot(functional[g], cycle);
    if (orders[g] != 0) {
      v %= orders[g];
      if (v < 0) v += orders[g];
    }
    out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Chains of simplicial sets

IntegerChainComplex fat_chains(const SemiSimplicialSet& x) {
  Report audit;
  if (const auto* s = dynamic_cast<const TruncatedSimplicialSet*>(&x)) {
    audit = audit_simplicial(*s);
  } else {
    audit = audit_faces(x);
  }
  if (!audit.empty()) {
    throw StructuralError("fat_chains: input fails its identity audit (" + audit.front().law + " at " +
                          (audit.front().witness.empty() ? std::string("?") : audit.front().witness.front()) + ")");
  }
  IntegerChainComplex c;
  c.D = x.top_degree();
  for (int k = 0; k <= c.D; ++k) {
    c.basis.push_back(x.labels(k));
    SparseMatrix b(k == 0 ? 0 : x.cell_count(k - 1), x.cell_count(k));
    if (k > 0)
      for (std::size_t cell = 0; cell < x.cell_count(k); ++cell)
        for (int i = 0; i <= k; ++i) b.add(x.face(k, i, cell), cell, i % 2 == 0 ? 1 : -1);
    c.boundary.push_back(std::move(b));
  }
  return c;
}

namespace {

std::vector<std::vector<std::size_t>> nondegenerate_positions(const TruncatedSimplicialSet& x) {
  std::vector<std::vector<std::size_t>> pos(x.top_degree() + 1);
  for (int k = 0; k <= x.top_degree(); ++k) {
    pos[k].assign(x.cell_count(k), kNone);
    std::size_t next = 0;
    for (std::size_t c = 0; c < x.cell_count(k); ++c)
      if (!x.is_degenerate(k, c)) pos[k][c] = next++;
  }
  return pos;
}

}  // namespace

IntegerChainComplex geometric_chains(const TruncatedSimplicialSet& x) {
  auto audit = audit_simplicial(x);
  if (!audit.empty()) throw StructuralError("geometric_chains: input fails its identity audit (" + audit.front().law + ")");
  auto pos = nondegenerate_positions(x);
  IntegerChainComplex c;
  c.D = x.top_degree();
  for (int k = 0; k <= c.D; ++k) {
    std::vector<std::string> basis;
    for (std::size_t cell = 0; cell < x.cell_count(k); ++cell)
      if (pos[k][cell] != kNone) basis.push_back(x.label(k, cell));
    SparseMatrix b(k == 0 ? 0 : c.basis[k - 1].size(), basis.size());
    if (k > 0) {
      for (std::size_t cell = 0; cell < x.cell_count(k); ++cell) {
        if (pos[k][cell] == kNone) continue;
        for (int i = 0; i <= k; ++i) {
          auto f = pos[k - 1][x.face(k, i, cell)];
          if (f != kNone) b.add(f, pos[k][cell], i % 2 == 0 ? 1 : -1);
        }
      }
    }
    c.basis.push_back(std::move(basis));
    c.boundary.push_back(std::move(b));
  }
  return c;
}

// ---------------------------------------------------------------------------
// Chain maps

Report check_chain_map(const ChainMap& f) {
  Report r;
  const auto& s = *f.source;
  const auto& t = *f.target;
  const int D = std::min(s.D, t.D);
  if (f.matrices.size() < static_cast<std::size_t>(D + 1)) {
    r.push_back({"chain-map-shape", {}, "missing degree matrices"});
    return r;
  }
  for (int k = 0; k <= D; ++k) {
    if (f.matrices[k].rows() != t.rank(k) || f.matrices[k].cols() != s.rank(k)) {
      r.push_back({"chain-map-shape", {std::to_string(k)}, "matrix has the wrong shape"});
    }
  }
  if (!r.empty()) return r;
  for (int k = 1; k <= D; ++k) {
    auto diff = t.boundary[k].multiply(f.matrices[k]).minus(f.matrices[k - 1].multiply(s.boundary[k]));
    for (std::size_t x = 0; x < diff.cols(); ++x) {
      if (!diff.column(x).empty()) {
        r.push_back({"chain-map", {std::to_string(k), s.basis[k][x]}, "∂f ≠ f∂"});
      }
    }
  }
  return r;
}

ChainMap identity_map(const ComplexPtr& c) {
  ChainMap f{c, c, {}};
  for (int k = 0; k <= c->D; ++k) {
    SparseMatrix m(c->rank(k), c->rank(k));
    for (std::size_t x = 0; x < c->rank(k); ++x) m.add(x, x, 1);
    f.matrices.push_back(std::move(m));
  }
  return f;
}

ChainMap compose(const ChainMap& second, const ChainMap& first) {
  if (!(*first.target == *second.source)) throw PreconditionError("compose: chain maps are not composable");
  ChainMap out{first.source, second.target, {}};
  const std::size_t levels = std::min(first.matrices.size(), second.matrices.size());
  for (std::size_t k = 0; k < levels; ++k) out.matrices.push_back(second.matrices[k].multiply(first.matrices[k]));
  return out;
}

ChainMap induced_map(const SimplicialMap& f) {
  auto audit = audit_map(f);
  if (!audit.empty()) throw StructuralError("induced_map: map fails its audit (" + audit.front().law + ")");
  ChainMap out;
  out.source = std::make_shared<const IntegerChainComplex>(fat_chains(*f.source));
  out.target = std::make_shared<const IntegerChainComplex>(fat_chains(*f.target));
  for (int k = 0; k <= f.source->top_degree(); ++k) {
    SparseMatrix m(f.target->cell_count(k), f.source->cell_count(k));
    for (std::size_t x = 0; x < f.source->cell_count(k); ++x) m.add(f.cells[k][x], x, 1);
    out.matrices.push_back(std::move(m));
  }
  return out;
}

ChainMap normalization_projection(const TruncatedSimplicialSet& x) {
  ChainMap out;
  out.source = std::make_shared<const IntegerChainComplex>(fat_chains(x));
  out.target = std::make_shared<const IntegerChainComplex>(geometric_chains(x));
  auto pos = nondegenerate_positions(x);
  for (int k = 0; k <= x.top_degree(); ++k) {
    SparseMatrix m(out.target->rank(k), x.cell_count(k));
    for (std::size_t c = 0; c < x.cell_count(k); ++c)
      if (pos[k][c] != kNone) m.add(pos[k][c], c, 1);
    out.matrices.push_back(std::move(m));
  }
  return out;
}

ChainMap normalization_inclusion(const TruncatedSimplicialSet& x) {
  ChainMap out;
  out.source = std::make_shared<const IntegerChainComplex>(geometric_chains(x));
  out.target = std::make_shared<const IntegerChainComplex>(fat_chains(x));
  auto pos = nondegenerate_positions(x);
  for (int k = 0; k <= x.top_degree(); ++k) {
    SparseMatrix m(x.cell_count(k), out.source->rank(k));
    for (std::size_t c = 0; c < x.cell_count(k); ++c)
      if (pos[k][c] != kNone) m.add(c, pos[k][c], 1);
    out.matrices.push_back(std::move(m));
  }
  return out;
}

namespace {

void require_reliable(const IntegerChainComplex& c, int d, const char* side) {
  if (d < 0 || (d + 1 > c.D && !(c.complete && d <= c.D))) {
    throw PreconditionError(std::string("truncation too small: ") + side + " complex has D=" + std::to_string(c.D) +
                            ", homology through degree " + std::to_string(d) + " needs D ≥ " + std::to_string(d + 1));
  }
}

}  // namespace

QuasiIsoReport quasi_iso_through(const ChainMap& f, int d) {
  require_reliable(*f.source, d, "source");
  require_reliable(*f.target, d, "target");
  QuasiIsoReport out;
  out.report = check_chain_map(f);
  if (!out.report.empty()) return out;
  for (int k = 0; k <= d; ++k) {
    auto src = present(*f.source, k);
    auto tgt = present(*f.target, k);
    out.source.push_back(src.group);
    out.target.push_back(tgt.group);
    if (!src.group.isomorphic(tgt.group)) {
      out.report.push_back({"homology-groups-differ", {std::to_string(k), src.group.describe(), tgt.group.describe()},
                            "H_k of source and target are not isomorphic"});
      continue;
    }
    // Onto check: images of source generators together with the torsion
    // relations of the target must generate ℤ^t.
    const std::size_t t = tgt.orders.size();
    std::size_t torsion = 0;
    for (const auto& o : tgt.orders) torsion += o != 0;
    Dense<Integer> m(t, src.generators.size() + torsion);
    for (std::size_t j = 0; j < src.generators.size(); ++j) {
      auto coords = tgt.coordinates(f.matrices[k].apply(src.generators[j]));
      for (std::size_t i = 0; i < t; ++i) m(i, j) = coords[i];
    }
    std::size_t col = src.generators.size();
    for (std::size_t i = 0; i < t; ++i)
      if (tgt.orders[i] != 0) m(i, col++) = tgt.orders[i];
    auto diag = detail::diagonalize(m);
    bool onto = diag.size() == t &&
                std::all_of(diag.begin(), diag.end(), [](const Integer& v) { return detail::magnitude(v) == 1; });
    if (!onto) {
      out.report.push_back({"induced-map-not-onto", {std::to_string(k)}, "f_* is not surjective on H_k"});
    }
  }
  return out;
}

QuasiIsoReport quasi_iso_through(const SimplicialMap& f, int d) { return quasi_iso_through(induced_map(f), d); }

Report induces_identity_through(const ChainMap& f, int d) {
  if (!(*f.source == *f.target)) throw PreconditionError("induces_identity_through: source and target differ");
  require_reliable(*f.source, d, "source");
  Report r = check_chain_map(f);
  if (!r.empty()) return r;
  for (int k = 0; k <= d; ++k) {
    auto h = present(*f.source, k);
    for (std::size_t j = 0; j < h.generators.size(); ++j) {
      auto coords = h.coordinates(f.matrices[k].apply(h.generators[j]));
      for (std::size_t i = 0; i < coords.size(); ++i) {
        Integer expected = i == j ? 1 : 0;
        if (coords[i] != expected) {
          r.push_back({"not-identity-on-homology", {std::to_string(k), std::to_string(j), std::to_string(i)},
                       "f_*(g_j) has coordinate " + to_string(coords[i]) + " on g_i"});
        }
      }
    }
  }
  return r;
}

}  // namespace fatcat
