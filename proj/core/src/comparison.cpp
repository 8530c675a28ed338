#include "fatcat/comparison.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace fatcat {

namespace {

CategoryPtr share(FinCategory c) { return std::make_shared<const FinCategory>(std::move(c)); }

std::string product_label(const std::string& x, const std::string& s) { return "(" + x + ";" + s + ")"; }

std::string sequence_label(const std::vector<int>& seq, const char* sep) {
  if (seq.empty()) return "∅";
  std::string s;
  for (std::size_t i = 0; i < seq.size(); ++i) s += (i ? sep : "") + std::to_string(seq[i]);
  return s;
}

std::vector<int> iota_from(int first, int last) {
  std::vector<int> v;
  for (int i = first; i <= last; ++i) v.push_back(i);
  return v;
}

int permutation_sign(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

// ---------------------------------------------------------------------------
// π

ChainMap projection_pi(const SemiSimplicialSet& x, int N) {
  const int D = x.top_degree();
  auto s = s_semisimplicial(N, D);
  auto p = product_with_S(x, s);
  ChainMap f;
  f.source = std::make_shared<const IntegerChainComplex>(fat_chains(p));
  f.target = std::make_shared<const IntegerChainComplex>(fat_chains(x));
  for (int k = 0; k <= D; ++k) {
    SparseMatrix m(x.cell_count(k), p.cell_count(k));
    for (std::size_t cell = 0; cell < p.cell_count(k); ++cell) m.add(cell / s.cell_count(k), cell, 1);
    f.matrices.push_back(std::move(m));
  }
  return f;
}

ChainMap projection_pi(const FinCategory& c, int N, int D) { return projection_pi(nerve(c, D), N); }

// ---------------------------------------------------------------------------
// Subdivision

int flag_sign(const BarycentricFlag& f) {
  std::vector<int> added;
  std::uint32_t prev = 0;
  for (auto a : f.chain) {
    std::uint32_t fresh = a & ~prev;
    if (std::popcount(fresh) != 1) throw PreconditionError("flag_sign: flag is not maximal in its top set");
    added.push_back(std::countr_zero(fresh));
    prev = a;
  }
  return permutation_sign(added);
}

SubdivisionOperator subdivision_operator(int n) {
  if (n < 0 || n > 6) throw PreconditionError("subdivision_operator: need 0 ≤ n ≤ 6");
  SubdivisionOperator sd;
  sd.n = n;
  auto simplex_set = s_semisimplicial(n, n);
  auto simplex = fat_chains(simplex_set);
  simplex.complete = true;

  IntegerChainComplex sub;
  sub.D = n;
  sub.complete = true;
  std::vector<std::map<std::vector<std::uint32_t>, std::size_t>> index(n + 1);
  std::vector<std::vector<BarycentricFlag>> flags(n + 1);
  for (int k = 0; k <= n; ++k) {
    flags[k] = sd_flags(n, k);
    std::vector<std::string> basis;
    for (std::size_t a = 0; a < flags[k].size(); ++a) {
      index[k][flags[k][a].chain] = a;
      basis.push_back(flags[k][a].label());
    }
    sub.basis.push_back(std::move(basis));
    SparseMatrix b(k == 0 ? 0 : flags[k - 1].size(), flags[k].size());
    if (k > 0) {
      for (std::size_t a = 0; a < flags[k].size(); ++a) {
        for (int i = 0; i <= k; ++i) {
          auto chain = flags[k][a].chain;
          chain.erase(chain.begin() + i);
          b.add(index[k - 1].at(chain), a, i % 2 == 0 ? 1 : -1);
        }
      }
    }
    sub.boundary.push_back(std::move(b));
  }

  sd.simplex = std::make_shared<const IntegerChainComplex>(std::move(simplex));
  sd.subdivided = std::make_shared<const IntegerChainComplex>(std::move(sub));
  sd.map.source = sd.simplex;
  sd.map.target = sd.subdivided;
  for (int k = 0; k <= n; ++k) {
    SparseMatrix m(flags[k].size(), simplex_set.cell_count(k));
    for (std::size_t x = 0; x < simplex_set.cell_count(k); ++x) {
      auto verts = parse_increasing(simplex_set.label(k, x));
      std::sort(verts.begin(), verts.end());
      do {
        std::vector<std::uint32_t> chain;
        std::uint32_t acc = 0;
        for (int v : verts) chain.push_back(acc |= 1U << v);
        m.add(index[k].at(chain), x, permutation_sign(verts));
      } while (std::next_permutation(verts.begin(), verts.end()));
    }
    sd.map.matrices.push_back(std::move(m));
  }
  return sd;
}

Report check_subdivision(const SubdivisionOperator& sd) { return check_chain_map(sd.map); }

// ---------------------------------------------------------------------------
// τ

namespace {

void require_tau_range(int D, int N) {
  if (N < D + 1) {
    throw PreconditionError("τ needs N ≥ D+1 so that 1<…<D+1 is a cell of S(N); got N=" + std::to_string(N) +
                            ", D=" + std::to_string(D));
  }
}

std::uint32_t coface_mask(std::uint32_t mask, int i) {
  const std::uint32_t low = mask & ((1U << i) - 1);
  const std::uint32_t high = mask >> i;
  return low | (high << (i + 1));
}

}  // namespace

ChainMap tau_chain_map(const TruncatedSimplicialSet& x, int N) {
  const int D = x.top_degree();
  require_tau_range(D, N);
  auto s = s_semisimplicial(N, D);
  auto p = product_with_S(x, s);
  ChainMap f;
  f.source = std::make_shared<const IntegerChainComplex>(fat_chains(x));
  f.target = std::make_shared<const IntegerChainComplex>(fat_chains(p));
  for (int n = 0; n <= D; ++n) {
    SparseMatrix m(p.cell_count(n), x.cell_count(n));
    const auto sizes = iota_from(1, n + 1);
    const std::size_t sidx = *s.find(n, increasing_label(sizes));
    const auto flags = sd_flags(n, n);
    std::vector<std::pair<std::vector<int>, int>> ops;
    for (const auto& fl : flags) ops.emplace_back(fl.maxima(), flag_sign(fl));
    for (std::size_t cell = 0; cell < x.cell_count(n); ++cell) {
      for (const auto& [u, sign] : ops) {
        auto y = x.apply_operator(n, cell, u);
        m.add(y * s.cell_count(n) + sidx, cell, sign);
      }
    }
    f.matrices.push_back(std::move(m));
  }
  return f;
}

Report tau_face_compatibility(const TruncatedSimplicialSet& x, int N, int max_n) {
  const int D = x.top_degree();
  require_tau_range(D, N);
  Report r;
  for (int n = 1; n <= std::min(max_n, D); ++n) {
    for (std::size_t cell = 0; cell < x.cell_count(n); ++cell) {
      for (int i = 0; i <= n; ++i) {
        const std::size_t face = x.face(n, i, cell);
        for (int k = 0; k <= n - 1; ++k) {
          for (const auto& B : sd_flags(n - 1, k)) {
            BarycentricFlag A{n, {}};
            for (auto b : B.chain) A.chain.push_back(coface_mask(b, i));
            auto uA = A.maxima();
            auto uB = B.maxima();
            auto lhs = product_label(x.label(k, x.apply_operator(n, cell, uA)), increasing_label(A.sizes()));
            auto rhs = product_label(x.label(k, x.apply_operator(n - 1, face, uB)), increasing_label(B.sizes()));
            if (lhs != rhs) {
              r.push_back({"tau-face", {x.label(n, cell), std::to_string(i), B.label()}, lhs + " ≠ " + rhs});
            }
          }
        }
      }
    }
  }
  return r;
}

Report pi_tau_homology_check(const FinCategory& c, int N, int D, int d) {
  auto x = nerve(c, D);
  auto tau = tau_chain_map(x, N);
  auto pi = projection_pi(x, N);
  Report r = check_chain_map(tau);
  append(r, check_chain_map(pi));
  if (!r.empty()) return r;
  append(r, induces_identity_through(compose(pi, tau), d));
  return r;
}

// ---------------------------------------------------------------------------
// ρ

BarycentricPoint BarycentricPoint::make(std::vector<Rational> t) {
  if (t.empty()) throw PreconditionError("barycentric point needs at least one coordinate");
  Rational sum = 0;
  for (const auto& v : t) {
    if (v < 0) throw PreconditionError("barycentric coordinate is negative");
    sum += v;
  }
  if (sum != 1) throw PreconditionError("barycentric coordinates sum to " + to_string(sum) + ", not 1");
  BarycentricPoint p;
  p.n = static_cast<int>(t.size()) - 1;
  p.t = std::move(t);
  return p;
}

BarycentricPoint BarycentricPoint::vertex(int n, int i) {
  std::vector<Rational> t(n + 1, Rational(0));
  t.at(i) = 1;
  return make(std::move(t));
}

std::vector<std::string> BarycentricPoint::labels() const {
  std::vector<std::string> out;
  for (const auto& v : t) out.push_back(to_string(v));
  return out;
}

Rational rho_evaluate(int n, int j, const BarycentricPoint& t) {
  if (t.n != n || j < 0 || j > n || n > 20) throw PreconditionError("rho_evaluate: need 0 ≤ j ≤ n ≤ 20 and t ∈ Δⁿ");
  Rational total = 0;
  const std::uint32_t full = (1U << (n + 1)) - 1;
  for (std::uint32_t E = 1; E <= full; ++E) {
    if (std::popcount(E) != j + 1) continue;
    Rational lo = 2, hi = 0;
    for (int i = 0; i <= n; ++i) {
      if (E >> i & 1U) {
        lo = std::min(lo, t.t[i]);
      } else {
        hi = std::max(hi, t.t[i]);
      }
    }
    if (lo > hi) total += lo - hi;
  }
  return total * (j + 1);
}

std::string to_string(RhoReading r) { return r == RhoReading::Full ? "full" : "short"; }

RhoWitness rho_face_counterexample(int n, RhoReading reading) {
  RhoWitness w;
  w.n = n;
  w.reading = reading;
  if (n < 1) return w;
  auto nv = build_nerve(share(ordinal(n)), n);
  std::vector<std::size_t> chain;
  for (int v = 0; v < n; ++v) chain.push_back(nv.category->morphism_index(std::to_string(v) + "->" + std::to_string(v + 1)));
  const std::size_t y = nv.find(n, chain);
  const auto& X = nv.simplices;
  w.simplex = X.label(n, y);

  for (int i = 0; i <= n; ++i) {
    const std::string face = X.label(n - 1, X.face(n, i, y));
    std::vector<int> seq = reading == RhoReading::Full ? iota_from(0, n) : iota_from(1, n);
    std::vector<int> after;
    if (reading == RhoReading::Full) {
      // d_i on the S-component deletes the i-th entry.
      after = seq;
      after.erase(after.begin() + i);
    } else {
      // Entries label vertices 1..n; d_i forgets the label on vertex i.
      for (int v : seq)
        if (v != i) after.push_back(v);
    }
    std::vector<int> of_face = reading == RhoReading::Full ? iota_from(0, n - 1) : iota_from(1, n - 1);
    auto lhs = product_label(face, sequence_label(after, "<"));
    auto rhs = product_label(face, sequence_label(of_face, "<"));
    if (lhs == rhs) continue;
    std::vector<Rational> t(n + 1, Rational(1, n));
    t[i] = 0;
    w.found = true;
    w.face = i;
    w.point = BarycentricPoint::make(std::move(t));
    for (int j = 0; j <= n; ++j) w.s_values.push_back(rho_evaluate(n, j, w.point));
    w.image_then_face = lhs;
    w.face_then_image = rhs;
    return w;
  }
  return w;
}

// ---------------------------------------------------------------------------
// Comma fibers

Factorization factor_nondegenerate(const Nerve& nerve, int n, std::size_t y) {
  Factorization f;
  if (n == 0) {
    f.degree = 0;
    f.cell = y;
    f.surjection = {0};
    return f;
  }
  const auto& c = *nerve.category;
  std::vector<std::size_t> kept;
  f.surjection = {0};
  for (auto g : nerve.chains[n][y]) {
    if (!c.is_identity(g)) kept.push_back(g);
    f.surjection.push_back(static_cast<int>(kept.size()));
  }
  f.degree = static_cast<int>(kept.size());
  f.cell = kept.empty() ? nerve.find(0, {nerve.vertex(n, y, 0)}) : nerve.find(f.degree, kept);
  return f;
}

namespace {

struct FiberContext {
  CategoryPtr category;
  int N;
  int D;
  Nerve base;
  Unraveled unraveled;
  Nerve top;
  /// forget[k][z]: base cell under the forgetful map
  std::vector<std::vector<std::size_t>> forget;
  /// by_base[k][y]: cells of the unraveled nerve over y
  std::vector<std::vector<std::vector<std::size_t>>> by_base;

  FiberContext(const CategoryPtr& c, int N_, int D_)
      : category(c), N(N_), D(D_), base(build_nerve(c, D_)), unraveled(unravel(c, N_)),
        top(build_nerve(unraveled.category, D_)) {
    forget.resize(D + 1);
    by_base.resize(D + 1);
    for (int k = 0; k <= D; ++k) {
      by_base[k].resize(base.simplices.cell_count(k));
      for (std::size_t z = 0; z < top.chains[k].size(); ++z) {
        std::size_t y;
        if (k == 0) {
          y = base.find(0, {unraveled.object_origin[top.chains[0][z][0]].first});
        } else {
          std::vector<std::size_t> ch;
          for (auto f : top.chains[k][z]) ch.push_back(unraveled.morphism_origin[f].base_morphism);
          y = base.find(k, ch);
        }
        forget[k].push_back(y);
        by_base[k][y].push_back(z);
      }
    }
  }

  CommaFiber fiber(int n, std::size_t y) const {
    if (n < 0 || n > D) throw PreconditionError("quillen_fiber: simplex degree outside truncation");
    CommaFiber out;
    out.category = category;
    out.N = N;
    out.D = D;
    out.n = n;
    out.simplex = base.simplices.label(n, y);
    out.factor = factor_nondegenerate(base, n, y);
    const int m = out.factor.degree;
    const std::size_t x = out.factor.cell;
    out.factor_label = base.simplices.label(m, x);

    Nerve delta = build_nerve(share(ordinal(m)), D);
    const auto& Y = base.simplices;
    const auto& Z = top.simplices;
    std::vector<std::vector<std::string>> labels(D + 1);
    std::vector<std::map<std::pair<std::size_t, std::size_t>, std::size_t>> index(D + 1);
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs(D + 1);
    out.simplex_leg.resize(D + 1);
    out.unravel_leg.resize(D + 1);
    std::size_t total = 0;
    for (int k = 0; k <= D; ++k) {
      for (std::size_t a = 0; a < delta.simplices.cell_count(k); ++a) {
        std::vector<int> seq;
        for (int j = 0; j <= k; ++j) seq.push_back(static_cast<int>(delta.vertex(k, a, j)));
        const std::size_t image = Y.apply_operator(m, x, seq);
        for (auto z : by_base[k][image]) {
          index[k][{a, z}] = pairs[k].size();
          pairs[k].emplace_back(a, z);
          labels[k].push_back("(" + sequence_label(seq, ",") + ";" + Z.label(k, z) + ")");
          out.simplex_leg[k].push_back(seq);
          out.unravel_leg[k].push_back(z);
        }
      }
      total += pairs[k].size();
      if (total > cell_limit()) throw ResourceLimitError("quillen_fiber: more than " + std::to_string(cell_limit()) + " cells");
    }
    std::vector<std::vector<std::vector<std::size_t>>> faces(D + 1), degens(D + 1);
    for (int k = 1; k <= D; ++k) {
      faces[k].assign(k + 1, std::vector<std::size_t>(pairs[k].size()));
      for (std::size_t c = 0; c < pairs[k].size(); ++c) {
        auto [a, z] = pairs[k][c];
        for (int i = 0; i <= k; ++i)
          faces[k][i][c] = index[k - 1].at({delta.simplices.face(k, i, a), Z.face(k, i, z)});
      }
    }
    for (int k = 0; k < D; ++k) {
      degens[k].assign(k + 1, std::vector<std::size_t>(pairs[k].size()));
      for (std::size_t c = 0; c < pairs[k].size(); ++c) {
        auto [a, z] = pairs[k][c];
        for (int i = 0; i <= k; ++i)
          degens[k][i][c] = index[k + 1].at({delta.simplices.degeneracy(k, i, a), Z.degeneracy(k, i, z)});
      }
    }
    out.fiber = TruncatedSimplicialSet(D, std::move(labels), std::move(faces), std::move(degens));
    return out;
  }
};

}  // namespace

CommaFiber quillen_fiber(const CategoryPtr& c, int N, int D, int n, std::size_t y) {
  FiberContext ctx(c, N, D);
  if (y >= ctx.base.simplices.cell_count(n)) throw PreconditionError("quillen_fiber: no such simplex");
  return ctx.fiber(n, y);
}

ContractibilityReport contractibility_report(const CommaFiber& f, int d) {
  if (d < 0 || d >= f.D) {
    throw PreconditionError("contractibility_report: truncation too small for degree " + std::to_string(d) +
                            " (D=" + std::to_string(f.D) + ")");
  }
  ContractibilityReport out;
  out.report = audit_simplicial(f.fiber);
  out.groups = homology_through(geometric_chains(f.fiber), d);
  for (const auto& h : out.groups) {
    bool ok = h.degree == 0 ? (h.betti == 1 && h.torsion.empty()) : h.is_trivial();
    if (!ok) {
      out.report.push_back({"fiber-not-acyclic", {f.simplex, std::to_string(h.degree), h.describe()},
                            "comma fiber has nontrivial reduced homology"});
    }
  }
  return out;
}

QuillenSweep verify_quillen_a(const CategoryPtr& c, int N, int D) {
  if (D < 1) throw PreconditionError("verify_quillen_a needs D ≥ 1");
  FiberContext ctx(c, N, D);
  QuillenSweep sweep;
  std::map<std::pair<int, std::size_t>, FiberVerdict> cache;
  for (int n = 0; n <= D; ++n) {
    for (std::size_t y = 0; y < ctx.base.simplices.cell_count(n); ++y) {
      auto factor = factor_nondegenerate(ctx.base, n, y);
      auto key = std::make_pair(factor.degree, factor.cell);
      auto it = cache.find(key);
      if (it == cache.end()) {
        auto fib = ctx.fiber(factor.degree, factor.cell);
        auto rep = contractibility_report(fib, D - 1);
        FiberVerdict v;
        v.factor = fib.factor_label;
        v.cell_counts = fib.fiber.cell_counts();
        v.groups = rep.groups;
        v.contractible = rep.report.empty();
        append(sweep.report, rep.report);
        it = cache.emplace(key, v).first;
      }
      FiberVerdict v = it->second;
      v.degree = n;
      v.simplex = ctx.base.simplices.label(n, y);
      sweep.fibers.push_back(std::move(v));
    }
  }
  return sweep;
}

}  // namespace fatcat
