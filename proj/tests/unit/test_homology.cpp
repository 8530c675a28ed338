#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fatcat/homology.hpp"

using namespace fatcat;

namespace {

IntegerChainComplex two_term(std::size_t rows, std::size_t cols, const std::vector<std::int64_t>& entries) {
  IntegerChainComplex c;
  c.D = 1;
  c.complete = true;
  c.basis = {std::vector<std::string>(rows), std::vector<std::string>(cols)};
  for (std::size_t i = 0; i < rows; ++i) c.basis[0][i] = "r" + std::to_string(i);
  for (std::size_t j = 0; j < cols; ++j) c.basis[1][j] = "c" + std::to_string(j);
  c.boundary = {SparseMatrix(0, rows), SparseMatrix(rows, cols)};
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) c.boundary[1].add(i, j, entries[i * cols + j]);
  return c;
}

// Independent oracle: invariant factors from determinantal divisors
// (gcd of all k×k minors), for small dense matrices.
Integer det(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  // Laplace expansion; fine for n ≤ 4.
  if (n == 1) return m[0][0];
  Integer s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Integer>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(row);
    }
    Integer term = m[0][j] * det(minor);
    s += j % 2 == 0 ? term : Integer(-term);
  }
  return s;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::pair<std::size_t, std::vector<Integer>> oracle_invariants(std::size_t rows, std::size_t cols,
                                                                const std::vector<std::int64_t>& e) {
  std::vector<Integer> divisors{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<Integer>> m;
        for (auto i : r) {
          std::vector<Integer> row;
          for (auto j : c) row.push_back(e[i * cols + j]);
          m.push_back(row);
        }
        Integer d = det(m);
        if (d < 0) d = -d;
        g = boost::multiprecision::gcd(g, d);
      }
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<Integer> factors;
  for (std::size_t k = 1; k < divisors.size(); ++k) {
    Integer f = divisors[k] / divisors[k - 1];
    if (f > 1) factors.push_back(f);
  }
  return {divisors.size() - 1, factors};
}

std::vector<Integer> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

ComplexPtr share(IntegerChainComplex c) { return std::make_shared<const IntegerChainComplex>(std::move(c)); }

}  // namespace

TEST(FatChains, SimplexOfS2) {
  auto c = fat_chains(s_semisimplicial(2, 2));
  EXPECT_EQ(c.ranks(), (std::vector<std::size_t>{3, 3, 1}));
  EXPECT_TRUE(check_complex(c).empty());
  auto h = homology_through(c, 1);
  EXPECT_EQ(h[0].betti, 1u);
  EXPECT_TRUE(h[1].is_trivial());
}

TEST(FatChains, PointNerve) {
  auto c = fat_chains(nerve(terminal_category(), 3));
  EXPECT_EQ(c.ranks(), (std::vector<std::size_t>{1, 1, 1, 1}));
  // alternating boundaries 0, id, 0
  EXPECT_TRUE(c.boundary[1].is_zero());
  EXPECT_EQ(c.boundary[2].entry(0, 0), 1);
  EXPECT_TRUE(c.boundary[3].is_zero());
  auto h = homology_through(c, 2);
  EXPECT_EQ(h[0].describe(), "ℤ");
  EXPECT_TRUE(h[1].is_trivial());
  EXPECT_TRUE(h[2].is_trivial());
}

TEST(FatChains, BoundarySquaredVanishes) {
  auto c = fat_chains(nerve(cyclic_group(2).base(), 3));
  EXPECT_TRUE(c.boundary[1].multiply(c.boundary[2]).is_zero());
  EXPECT_TRUE(c.boundary[2].multiply(c.boundary[3]).is_zero());
}

TEST(FatChains, RejectsBrokenInput) {
  SemiSimplicialSet worse(2, {{"a", "b"}, {"e", "f"}, {"t"}}, {{}, {{0, 1}, {1, 0}}, {{0}, {1}, {0}}});
  EXPECT_FALSE(audit_faces(worse).empty());
  EXPECT_THROW(fat_chains(worse), StructuralError);
}

TEST(GeometricChains, GroupNerveHasOneCellPerDegree) {
  auto c = geometric_chains(nerve(cyclic_group(2).base(), 4));
  EXPECT_EQ(c.ranks(), (std::vector<std::size_t>{1, 1, 1, 1, 1}));
}

TEST(GeometricChains, Interval) {
  auto x = nerve(ordinal(1), 2);
  auto c = geometric_chains(x);
  EXPECT_EQ(c.ranks(), (std::vector<std::size_t>{2, 1, 0}));
  auto h = homology_through(c, 1);
  EXPECT_EQ(h[0].describe(), "ℤ");
  EXPECT_TRUE(h[1].is_trivial());
  for (int k = 0; k <= 2; ++k)
    for (const auto& label : c.basis[k]) EXPECT_FALSE(x.is_degenerate(k, *x.find(k, label)));
}

TEST(Homology, BarComplexOfZ2) {
  auto c = fat_chains(nerve(cyclic_group(2).base(), 5));
  EXPECT_EQ(homology(c, 0).describe(), "ℤ");
  auto h1 = homology(c, 1);
  EXPECT_EQ(h1.betti, 0u);
  EXPECT_EQ(h1.torsion, ints({2}));
  EXPECT_TRUE(homology(c, 2).is_trivial());
  EXPECT_EQ(homology(c, 3).torsion, ints({2}));
  EXPECT_TRUE(homology(c, 3).reliable);
  EXPECT_FALSE(homology(c, 5).reliable);
  EXPECT_THROW(homology(c, 6), PreconditionError);
}

TEST(Homology, NormalizedBarOracle) {
  // ℤ ←0− ℤ ←2− ℤ ←0− ℤ ←2− ℤ : the normalized bar complex of ℤ/2
  IntegerChainComplex bar;
  bar.D = 4;
  for (int k = 0; k <= 4; ++k) {
    bar.basis.push_back({"e" + std::to_string(k)});
    bar.boundary.emplace_back(k == 0 ? 0 : 1, 1);
    if (k > 0 && k % 2 == 0) bar.boundary[k].add(0, 0, 2);
  }
  auto fat = fat_chains(nerve(cyclic_group(2).base(), 4));
  auto a = homology_through(bar, 3);
  auto b = homology_through(fat, 3);
  for (int k = 0; k <= 3; ++k) EXPECT_TRUE(a[k].isomorphic(b[k])) << k;
}

TEST(Homology, CyclicGroupsOfHigherOrder) {
  for (int m = 3; m <= 4; ++m) {
    auto h = homology_through(fat_chains(nerve(cyclic_group(m).base(), 4)), 3);
    EXPECT_EQ(h[1].torsion, ints({m}));
    EXPECT_TRUE(h[2].is_trivial());
    EXPECT_EQ(h[3].torsion, ints({m}));
  }
}

TEST(Homology, MatchesDeterminantalOracle) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(1, 4), val(-6, 6), zero(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = dim(rng), cols = dim(rng);
    std::vector<std::int64_t> e(rows * cols);
    for (auto& v : e) v = zero(rng) == 0 ? 0 : val(rng);
    auto c = two_term(rows, cols, e);
    auto [rank, factors] = oracle_invariants(rows, cols, e);
    auto h0 = homology(c, 0);
    EXPECT_EQ(h0.betti, rows - rank);
    EXPECT_EQ(h0.torsion, factors);
    EXPECT_EQ(homology(c, 1).betti, cols - rank);
  }
}

TEST(Homology, BignumFallback) {
  const std::int64_t big = std::int64_t{1} << 62;
  auto c = two_term(2, 2, {1, big, big, 1});
  Integer expected = Integer(big) * Integer(big) - 1;
  auto h = homology(c, 0);
  EXPECT_EQ(h.betti, 0u);
  EXPECT_EQ(h.torsion, std::vector<Integer>{expected});
  auto p = present(c, 0);
  EXPECT_EQ(p.group.torsion, std::vector<Integer>{expected});
}

TEST(Homology, IndependentOfBasisOrder) {
  auto c = fat_chains(product_with_S(nerve(cyclic_group(2).base(), 3), s_semisimplicial(3, 3)));
  std::mt19937 rng(11);
  auto reference = homology_through(c, 2);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<std::vector<std::size_t>> perms;
    for (int k = 0; k <= c.D; ++k) {
      std::vector<std::size_t> p(c.rank(k));
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      perms.push_back(p);
    }
    auto shuffled = permuted(c, perms);
    EXPECT_TRUE(check_complex(shuffled).empty());
    EXPECT_EQ(homology_through(shuffled, 2), reference);
  }
}

TEST(Homology, NormalizedEqualsUnnormalized) {
  std::vector<FinCategory> cats{terminal_category(), ordinal(1), ordinal(2), cyclic_group(2).base(),
                                cyclic_group(3).base(), pair_groupoid(2).base()};
  for (const auto& cat : cats) {
    auto x = nerve(cat, 4);
    auto a = homology_through(fat_chains(x), 3);
    auto b = homology_through(geometric_chains(x), 3);
    for (int k = 0; k <= 3; ++k) EXPECT_TRUE(a[k].isomorphic(b[k])) << cat.object(0) << " k=" << k;
  }
}

TEST(Presentation, GeneratorsAreCyclesWithUnitCoordinates) {
  auto c = fat_chains(product_with_S(nerve(cyclic_group(2).base(), 3), s_semisimplicial(3, 3)));
  for (int k = 0; k <= 2; ++k) {
    auto p = present(c, k);
    EXPECT_EQ(p.group, homology(c, k));
    for (std::size_t g = 0; g < p.generators.size(); ++g) {
      if (k > 0) {
        auto b = c.boundary[k].apply(p.generators[g]);
        EXPECT_TRUE(std::all_of(b.begin(), b.end(), [](const Integer& v) { return v == 0; }));
      }
      auto coords = p.coordinates(p.generators[g]);
      for (std::size_t i = 0; i < coords.size(); ++i) EXPECT_EQ(coords[i], i == g ? 1 : 0);
    }
  }
}

TEST(Presentation, BoundariesHaveZeroCoordinates) {
  auto c = fat_chains(nerve(cyclic_group(2).base(), 4));
  auto p = present(c, 1);
  for (std::size_t x = 0; x < c.rank(2); ++x) {
    std::vector<Integer> e(c.rank(2));
    e[x] = 1;
    for (const auto& v : p.coordinates(c.boundary[2].apply(e))) EXPECT_EQ(v, 0);
  }
}

TEST(ChainMaps, IdentityIsQuasiIso) {
  auto c = share(fat_chains(nerve(cyclic_group(2).base(), 4)));
  auto q = quasi_iso_through(identity_map(c), 3);
  EXPECT_TRUE(q.report.empty());
  EXPECT_TRUE(induces_identity_through(identity_map(c), 3).empty());
}

TEST(ChainMaps, NormalizationInclusionOnInterval) {
  auto x = nerve(ordinal(1), 2);
  auto inc = normalization_inclusion(x);
  EXPECT_TRUE(check_chain_map(inc).empty());
  EXPECT_TRUE(quasi_iso_through(inc, 1).report.empty());
}

TEST(ChainMaps, NormalizationProjectionIsQuasiIso) {
  for (const auto& cat : {cyclic_group(2).base(), ordinal(2), pair_groupoid(2).base()}) {
    auto p = normalization_projection(nerve(cat, 4));
    EXPECT_TRUE(check_chain_map(p).empty());
    EXPECT_TRUE(quasi_iso_through(p, 2).report.empty());
  }
}

TEST(ChainMaps, DoublingIsNotOnto) {
  auto c = share(fat_chains(nerve(terminal_category(), 2)));
  auto f = identity_map(c);
  for (auto& m : f.matrices) {
    SparseMatrix doubled(m.rows(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) doubled.add(j, j, 2);
    m = doubled;
  }
  auto q = quasi_iso_through(f, 1);
  ASSERT_EQ(q.report.size(), 1u);
  EXPECT_EQ(q.report[0].law, "induced-map-not-onto");
}

TEST(ChainMaps, NegationFixesOnlyTwoTorsion) {
  auto c = share(fat_chains(nerve(cyclic_group(2).base(), 3)));
  auto f = identity_map(c);
  for (auto& m : f.matrices) {
    SparseMatrix neg(m.rows(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) neg.add(j, j, -1);
    m = neg;
  }
  auto r = induces_identity_through(f, 1);
  // −1 is the identity on ℤ/2 but not on H₀ = ℤ
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].witness[0], "0");
}

TEST(ChainMaps, InducedMapCommutes) {
  auto y = nerve(ordinal(2), 3);
  auto s = s_semisimplicial(3, 3);
  auto p = std::make_shared<const SemiSimplicialSet>(product_with_S(y, s));
  SimplicialMap proj{p, std::make_shared<const SemiSimplicialSet>(y), {}};
  for (int k = 0; k <= 3; ++k) {
    std::vector<std::size_t> cells;
    for (std::size_t x = 0; x < p->cell_count(k); ++x) cells.push_back(x / s.cell_count(k));
    proj.cells.push_back(cells);
  }
  auto f = induced_map(proj);
  EXPECT_TRUE(check_chain_map(f).empty());
  EXPECT_TRUE(quasi_iso_through(proj, 2).report.empty());
}
