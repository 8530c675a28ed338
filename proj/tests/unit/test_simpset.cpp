#include <gtest/gtest.h>

#include <cstdlib>

#include "fatcat/simpset.hpp"

using namespace fatcat;

namespace {

CategoryPtr share(FinCategory c) { return std::make_shared<const FinCategory>(std::move(c)); }

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<CategoryPtr> catalog() {
  return {share(terminal_category()), share(ordinal(1)), share(ordinal(2)), share(cyclic_group(2).base()),
          share(pair_groupoid(2).base())};
}

}  // namespace

TEST(SSet, CountsMatchBinomials) {
  for (int N = 0; N <= 6; ++N) {
    auto s = s_semisimplicial(N, 4);
    for (int k = 0; k <= 4; ++k) EXPECT_EQ(s.cell_count(k), binomial(N + 1, k + 1)) << N << "," << k;
    EXPECT_TRUE(audit_faces(s).empty());
  }
}

TEST(SSet, FacesDeleteEntries) {
  auto s = s_semisimplicial(3, 2);
  auto x = *s.find(2, "0<2<3");
  EXPECT_EQ(s.label(1, s.face(2, 0, x)), "2<3");
  EXPECT_EQ(s.label(1, s.face(2, 1, x)), "0<3");
  EXPECT_EQ(s.label(1, s.face(2, 2, x)), "0<2");
  EXPECT_EQ(parse_increasing("0<2<3"), (std::vector<int>{0, 2, 3}));
}

TEST(Nerve, OrdinalCountsAreMultichains) {
  // degree-k cells of Ner[n] are weakly increasing (k+1)-sequences in [n]
  for (int n = 0; n <= 3; ++n) {
    auto x = nerve(ordinal(n), 4);
    for (int k = 0; k <= 4; ++k) {
      EXPECT_EQ(x.cell_count(k), binomial(n + k + 1, k + 1));
      EXPECT_EQ(x.nondegenerate(k).size(), binomial(n + 1, k + 1));
    }
  }
}

TEST(Nerve, GroupCountsArePowers) {
  for (int m = 1; m <= 3; ++m) {
    auto x = nerve(cyclic_group(m).base(), 4);
    std::size_t expect = 1;
    for (int k = 0; k <= 4; ++k) {
      EXPECT_EQ(x.cell_count(k), expect);
      expect *= static_cast<std::size_t>(m);
    }
  }
}

TEST(Nerve, PassesIdentityAudit) {
  for (const auto& c : catalog()) EXPECT_TRUE(audit_simplicial(build_nerve(c, 4).simplices).empty()) << c->object(0);
}

TEST(Nerve, NondegenerateMeansNoIdentityArrow) {
  for (const auto& c : catalog()) {
    auto nv = build_nerve(c, 3);
    for (int k = 1; k <= 3; ++k) {
      for (std::size_t x = 0; x < nv.chains[k].size(); ++x) {
        bool has_id = false;
        for (auto f : nv.chains[k][x]) has_id = has_id || c->is_identity(f);
        EXPECT_EQ(nv.simplices.is_degenerate(k, x), has_id) << nv.simplices.label(k, x);
      }
    }
  }
}

TEST(Nerve, FacesComposeInnerArrows) {
  auto nv = build_nerve(share(ordinal(2)), 2);
  auto x = nv.simplices.find(2, "0->1|1->2");
  ASSERT_TRUE(x);
  EXPECT_EQ(nv.simplices.label(1, nv.simplices.face(2, 0, *x)), "1->2");
  EXPECT_EQ(nv.simplices.label(1, nv.simplices.face(2, 1, *x)), "0->2");
  EXPECT_EQ(nv.simplices.label(1, nv.simplices.face(2, 2, *x)), "0->1");
}

TEST(Nerve, BrokenTableIsStructural) {
  auto g = cyclic_group(2).base();
  auto s = g.morphism_index("s");
  auto broken = g.with_composite(s, s, kNone);
  EXPECT_THROW(nerve(broken, 2), StructuralError);
}

TEST(Operators, ApplyMatchesFacesAndDegeneracies) {
  auto x = nerve(ordinal(3), 4);
  for (std::size_t c = 0; c < x.cell_count(2); ++c) {
    std::vector<int> id{0, 1, 2};
    EXPECT_EQ(x.apply_operator(2, c, id), c);
    std::vector<int> skip1{0, 2};
    EXPECT_EQ(x.apply_operator(2, c, skip1), x.face(2, 1, c));
    std::vector<int> dup2{0, 1, 2, 2};
    EXPECT_EQ(x.apply_operator(2, c, dup2), x.degeneracy(2, 2, c));
    std::vector<int> last{2, 2, 2};
    auto v = x.face(1, 0, x.face(2, 0, c));
    EXPECT_EQ(x.apply_operator(2, c, last), x.degeneracy(1, 0, x.degeneracy(0, 0, v)));
  }
  std::vector<int> bad{1, 0};
  EXPECT_THROW((void)x.apply_operator(2, 0, bad), PreconditionError);
}

TEST(Operators, ComposeContravariantly) {
  // (φθ)^* = θ^* φ^* for θ:[1]→[2], φ:[2]→[3]
  auto x = nerve(ordinal(3), 3);
  std::vector<int> theta{0, 2}, phi{1, 1, 3}, composite{1, 3};
  for (std::size_t c = 0; c < x.cell_count(3); ++c) {
    EXPECT_EQ(x.apply_operator(2, x.apply_operator(3, c, phi), theta), x.apply_operator(3, c, composite));
  }
}

TEST(Unraveled, PassesIdentityAudit) {
  for (const auto& c : catalog()) {
    auto y = build_nerve(c, 3).simplices;
    for (int N = 0; N <= 3; ++N) EXPECT_TRUE(audit_simplicial(unravel_simplicial(y, N).set).empty());
  }
}

TEST(Unraveled, IsomorphicToNerveOfUnraveledCategory) {
  for (const auto& c : catalog()) EXPECT_TRUE(verify_unravel_nerve_iso(c, 3, 3).empty()) << c->object(0);
}

TEST(Unraveled, StrictPartIsProduct) {
  for (const auto& c : catalog()) {
    auto y = build_nerve(c, 3).simplices;
    EXPECT_TRUE(verify_strict_part_is_product(y, 4).empty());
  }
}

TEST(Unraveled, FaceRuleOnGroups) {
  auto y = nerve(ordinal(1), 2);
  auto u = unravel_simplicial(y, 2);
  // (0,0,1 | 0->1): deleting either 0 keeps the 1-cell
  auto x = u.lookup_by_key.at({{0, 0, 1}, *y.find(1, "0->1")});
  EXPECT_EQ(u.set.label(1, u.set.face(2, 0, x)), "0,1|0->1");
  EXPECT_EQ(u.set.label(1, u.set.face(2, 1, x)), "0,1|0->1");
  // deleting the lone 1 takes d_1 of the 1-cell
  EXPECT_EQ(u.set.label(1, u.set.face(2, 2, x)), "0,0|0");
}

TEST(CellBijection, BijectionOnCatalog) {
  struct Case {
    CategoryPtr c;
    int N, D;
  };
  for (const auto& [c, N, D] : std::vector<Case>{{share(ordinal(1)), 2, 2},
                                                 {share(ordinal(2)), 3, 3},
                                                 {share(cyclic_group(2).base()), 3, 3},
                                                 {share(pair_groupoid(2).base()), 3, 3}}) {
    auto r = unravel_cell_bijection(c, N, D);
    EXPECT_TRUE(r.report.empty());
    EXPECT_EQ(r.product_counts, r.nondegenerate_counts);
  }
}

TEST(CellBijection, CountOracleForGroups) {
  // Ner(ℤ/2) × S(N): 2^k · C(N+1, k+1) cells in degree k
  auto r = unravel_cell_bijection(share(cyclic_group(2).base()), 3, 3);
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(r.product_counts[k], (std::size_t{1} << k) * binomial(4, k + 1));
}

TEST(Products, TruncationMismatch) {
  EXPECT_THROW(product_with_S(nerve(ordinal(1), 2), s_semisimplicial(3, 3)), PreconditionError);
}

TEST(Flags, Counts) {
  for (int n = 0; n <= 4; ++n) {
    std::size_t fact = 1;
    for (int i = 2; i <= n + 1; ++i) fact *= static_cast<std::size_t>(i);
    auto maximal = sd_flags(n, n);
    EXPECT_EQ(maximal.size(), fact);
    for (const auto& f : maximal) EXPECT_TRUE(f.is_maximal());
    EXPECT_EQ(sd_flags(n, 0).size(), (std::size_t{1} << (n + 1)) - 1);
  }
  EXPECT_EQ(sd_flags(1, 1)[0].label(), "{0}<{0,1}");
}

TEST(Limits, CellCapIsEnforced) {
  setenv("FATCAT_MAX_CELLS", "50", 1);
  EXPECT_THROW(nerve(cyclic_group(3).base(), 5), ResourceLimitError);
  unsetenv("FATCAT_MAX_CELLS");
  EXPECT_NO_THROW(nerve(cyclic_group(3).base(), 5));
}
