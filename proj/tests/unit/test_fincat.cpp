#include <gtest/gtest.h>

#include "fatcat/fincat.hpp"

using namespace fatcat;

namespace {

CategoryPtr share(FinCategory c) { return std::make_shared<const FinCategory>(std::move(c)); }

bool has_law(const Report& r, const std::string& law) {
  for (const auto& v : r)
    if (v.law == law) return true;
  return false;
}

}  // namespace

TEST(Generators, OrdinalCountsAndLaws) {
  for (int n = 0; n <= 4; ++n) {
    auto c = ordinal(n);
    EXPECT_EQ(c.object_count(), static_cast<std::size_t>(n + 1));
    EXPECT_EQ(c.morphism_count(), static_cast<std::size_t>((n + 1) * (n + 2) / 2));
    EXPECT_TRUE(check_category(c).empty()) << n;
  }
}

TEST(Generators, TruncatedNatIsAPoset) {
  auto c = truncated_nat(4);
  EXPECT_EQ(c.morphism_count(), 15u);
  EXPECT_TRUE(check_category(c).empty());
  for (std::size_t a = 0; a < c.object_count(); ++a)
    for (std::size_t b = 0; b < c.object_count(); ++b) EXPECT_EQ(c.hom(a, b).size(), a <= b ? 1u : 0u);
}

TEST(Generators, CyclicGroupTable) {
  auto g = cyclic_group(2);
  const auto& c = g.base();
  ASSERT_EQ(c.morphism_count(), 2u);
  auto s = c.morphism_index("s");
  auto e = c.morphism_index("e");
  EXPECT_EQ(c.compose(s, s), e);
  EXPECT_EQ(g.inverse(s), s);
  EXPECT_TRUE(check_groupoid(g).empty());
  for (int m = 1; m <= 6; ++m) EXPECT_TRUE(check_groupoid(cyclic_group(m)).empty()) << m;
}

TEST(Generators, PairGroupoid) {
  for (int k = 1; k <= 4; ++k) {
    auto g = pair_groupoid(k);
    EXPECT_EQ(g.base().morphism_count(), static_cast<std::size_t>(k * k));
    EXPECT_TRUE(check_groupoid(g).empty());
  }
  EXPECT_TRUE(check_groupoid(terminal_groupoid()).empty());
}

TEST(Generators, RejectsBadArguments) {
  EXPECT_THROW(ordinal(-1), PreconditionError);
  EXPECT_THROW(cyclic_group(0), PreconditionError);
  EXPECT_THROW(pair_groupoid(0), PreconditionError);
}

TEST(Tables, DanglingIdIsStructural) {
  EXPECT_THROW(FinCategory::from_tables({"a"}, {{"id_a", "a", "b"}}, {{"a", "id_a"}}, {}), StructuralError);
  EXPECT_THROW(FinCategory::from_tables({"a"}, {{"f", "a", "a"}}, {}, {}), StructuralError);
}

TEST(Laws, BrokenAssociativityNamesWitness) {
  // ℤ/3 with g∘g redirected to e breaks associativity and inverses.
  auto g = cyclic_group(3).base();
  auto g1 = g.morphism_index("g1");
  auto e = g.morphism_index("e");
  auto broken = g.with_composite(g1, g1, e);
  auto r = check_category(broken);
  ASSERT_TRUE(has_law(r, "associativity"));
  for (const auto& v : r) {
    if (v.law == "associativity") EXPECT_EQ(v.witness.size(), 3u);
  }
}

TEST(Laws, BrokenIdentityNamesWitness) {
  auto c = ordinal(1);
  auto f = c.morphism_index("0->1");
  auto id0 = c.morphism_index("id_0");
  auto broken = c.with_composite(f, id0, id0);
  auto r = check_category(broken);
  EXPECT_TRUE(has_law(r, "composition-endpoints"));
}

TEST(Laws, BrokenInverseNamesWitness) {
  auto base = cyclic_group(3).base();
  std::vector<std::size_t> inv(base.morphism_count());
  for (std::size_t f = 0; f < inv.size(); ++f) inv[f] = f;  // g1 is not self-inverse in ℤ/3
  FinGroupoid g(base, inv);
  auto r = check_groupoid(g);
  ASSERT_TRUE(has_law(r, "left-inverse"));
  bool names_g1 = false;
  for (const auto& v : r)
    if (v.law == "left-inverse" && v.witness == std::vector<std::string>{"g1"}) names_g1 = true;
  EXPECT_TRUE(names_g1);
}

TEST(Unravel, MorphismCountOracle) {
  // |Mor c^ℕ| = |Mor c|·C(N+1,2) + |Ob c|·(N+1)
  for (auto cat : {ordinal(1), ordinal(2), cyclic_group(2).base(), pair_groupoid(2).base()}) {
    auto c = share(cat);
    for (int N = 0; N <= 5; ++N) {
      auto u = unravel(c, N);
      std::size_t expected = c->morphism_count() * static_cast<std::size_t>(N * (N + 1) / 2) +
                             c->object_count() * static_cast<std::size_t>(N + 1);
      EXPECT_EQ(u.category->morphism_count(), expected);
      EXPECT_EQ(u.category->object_count(), c->object_count() * static_cast<std::size_t>(N + 1));
      EXPECT_TRUE(check_category(*u.category).empty());
    }
  }
}

TEST(Unravel, LawsForSmallOrdinals) {
  for (int n = 0; n <= 3; ++n)
    for (int N = 0; N <= 5; ++N) EXPECT_TRUE(check_category(unravel_category(ordinal(n), N)).empty()) << n << "," << N;
}

TEST(Unravel, SameLevelOnlyIdentities) {
  auto u = unravel(share(cyclic_group(2).base()), 3);
  for (std::size_t f = 0; f < u.category->morphism_count(); ++f) {
    const auto& o = u.morphism_origin[f];
    EXPECT_LE(o.from_level, o.to_level);
    if (o.from_level == o.to_level) EXPECT_TRUE(u.base->is_identity(o.base_morphism));
  }
}

TEST(Unravel, ForgetfulIsAFunctor) {
  auto u = unravel(share(pair_groupoid(2).base()), 3);
  EXPECT_TRUE(check_functor(forgetful(u)).empty());
}

TEST(Unravel, RecognizeRoundTrip) {
  auto base = share(ordinal(2));
  auto u = unravel(base, 3);
  auto v = Unraveled::recognize(base, u.category, 3);
  ASSERT_EQ(v.morphism_origin.size(), u.morphism_origin.size());
  for (std::size_t f = 0; f < v.morphism_origin.size(); ++f) {
    EXPECT_EQ(v.morphism_origin[f].base_morphism, u.morphism_origin[f].base_morphism);
    EXPECT_EQ(v.morphism_origin[f].from_level, u.morphism_origin[f].from_level);
  }
  EXPECT_THROW(Unraveled::recognize(base, share(ordinal(3)), 3), StructuralError);
}

TEST(Functors, CompositionAndIdentity) {
  auto c = share(ordinal(2));
  auto id = identity_functor(c);
  EXPECT_TRUE(check_functor(id).empty());
  EXPECT_EQ(compose(id, id), id);
}

TEST(Functors, NonFunctorIsReported) {
  auto src = share(ordinal(1));
  auto tgt = share(ordinal(1));
  Functor f{src, tgt, {1, 0}, {}};
  f.morphism_map.resize(src->morphism_count());
  for (std::size_t m = 0; m < src->morphism_count(); ++m) f.morphism_map[m] = m;
  EXPECT_FALSE(check_functor(f).empty());
}

TEST(Equivalences, OrdinalUnravel) {
  for (int n = 0; n <= 3; ++n) {
    for (int N = n; N <= 5; ++N) {
      auto eq = ordinal_unravel_equivalences(n, N);
      EXPECT_TRUE(eq.report.empty()) << n << "," << N << ": " << (eq.report.empty() ? "" : eq.report[0].law);
      EXPECT_EQ(compose(eq.pi1, eq.iota1), identity_functor(eq.diagonal));
      EXPECT_EQ(compose(eq.pi2, eq.iota2), identity_functor(eq.ordinal));
      EXPECT_EQ(compose(eq.pi2, eq.pi1), eq.pi0);
      EXPECT_TRUE(check_natural(eq.phi1).empty());
      EXPECT_TRUE(check_natural(eq.phi2).empty());
    }
  }
  EXPECT_THROW(ordinal_unravel_equivalences(3, 2), PreconditionError);
}

TEST(Equivalences, DiagonalObjects) {
  auto eq = ordinal_unravel_equivalences(2, 3);
  // objects (k,l) with k ≤ l, k ∈ [2], l ∈ {0..3}
  EXPECT_EQ(eq.diagonal->object_count(), 4u + 3u + 2u);
  for (std::size_t o = 0; o < eq.diagonal->object_count(); ++o) {
    auto id = eq.diagonal->object(o);
    int k = id[1] - '0';
    int l = id[3] - '0';
    EXPECT_LE(k, l);
  }
}
