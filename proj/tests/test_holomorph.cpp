#include <gtest/gtest.h>

#include "hololab/error.hpp"
#include "hololab/holomorph.hpp"
#include "hololab/homomorphism.hpp"
#include "hololab/standard_groups.hpp"
#include "oracles.hpp"

using namespace hololab;

namespace {

std::vector<GroupTable> corpus() {
  return {cyclic(3), cyclic(4), direct_product(cyclic(2), cyclic(2)), symmetric(3), dihedral(4),
          quaternion8(), cyclic(5), dihedral(5), alternating(4)};
}

}  // namespace

TEST(Permutation, CompositionAndConjugationConventions) {
  const Permutation a({1, 2, 0});  // 0->1->2->0
  const Permutation b({1, 0, 2});  // swap 0,1
  const auto ab = a * b;
  for (Point x = 0; x < 3; ++x) EXPECT_EQ(ab(x), a(b(x)));
  const auto c = conjugate(a, b);
  EXPECT_EQ(c, b.inverse() * a * b);
  EXPECT_EQ(a.cycles(), "(0 1 2)");
  EXPECT_EQ(Permutation::identity(4).cycles(), "()");
  EXPECT_TRUE(a.is_even());
  EXPECT_FALSE(b.is_even());
  EXPECT_THROW(Permutation({0, 0, 1}), Error);
}

TEST(PermSubgroup, GenerateAndMembership) {
  const auto s4 = PermSubgroup::generate(4, {Permutation({1, 0, 2, 3}), Permutation({1, 2, 3, 0})});
  EXPECT_EQ(s4.order(), 24u);
  EXPECT_TRUE(s4.elements().front().is_identity());
  EXPECT_TRUE(std::is_sorted(s4.elements().begin(), s4.elements().end()));
  Limits tight;
  tight.materialize_cap = 10;
  EXPECT_THROW(PermSubgroup::generate(4, {Permutation({1, 0, 2, 3}), Permutation({1, 2, 3, 0})}, tight),
               Error);
  const auto table = s4.to_group_table();
  EXPECT_TRUE(is_isomorphic(table, symmetric(4)).has_value());
}

TEST(Lambda, Examples) {
  const auto c3 = cyclic(3);
  const auto lam = lambda_rep(c3);
  EXPECT_TRUE(lam.images[0].is_identity());
  EXPECT_EQ(lam.images[1], Permutation({1, 2, 0}));
  for (const auto& g : corpus()) EXPECT_TRUE(is_regular(lambda_rep(g).group)) << g.name();
}

TEST(LambdaRho, HomomorphismsThatCommute) {
  for (const auto& g : corpus()) {
    const auto lam = lambda_rep(g), rho = rho_rep(g);
    EXPECT_TRUE(rho.images[0].is_identity());
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem b = 0; b < g.order(); ++b) {
        EXPECT_EQ(lam.images[g.mul(a, b)], lam.images[a] * lam.images[b]);
        EXPECT_EQ(rho.images[g.mul(a, b)], rho.images[a] * rho.images[b]);
        EXPECT_EQ(lam.images[a] * rho.images[b], rho.images[b] * lam.images[a]);
      }
    if (g.is_abelian())
      for (Elem a = 0; a < g.order(); ++a) EXPECT_EQ(rho.images[a], lam.images[g.inv(a)]);
  }
}

TEST(Inv, SwapsLambdaAndRho) {
  const auto c3 = cyclic(3);
  EXPECT_EQ(inv_perm(c3), Permutation({0, 2, 1}));
  for (const auto& g : corpus()) {
    const auto inv = inv_perm(g);
    EXPECT_TRUE((inv * inv).is_identity());
    const auto lam = lambda_rep(g), rho = rho_rep(g);
    for (Elem a = 0; a < g.order(); ++a) EXPECT_EQ(inv * lam.images[a] * inv, rho.images[a]);
  }
  EXPECT_TRUE(hol(cyclic(4)).contains(inv_perm(cyclic(4))));
  EXPECT_FALSE(hol(symmetric(3)).contains(inv_perm(symmetric(3))));
}

TEST(HolInhol, Orders) {
  EXPECT_EQ(hol(cyclic(3)).order(), 6u);
  for (const auto& g : corpus()) {
    EXPECT_EQ(hol(g).order(), g.order() * automorphisms(g).size()) << g.name();
    if (is_centerless(g)) {
      EXPECT_EQ(inhol(g).order(), g.order() * g.order());
      const auto lam = oracle::image_set(lambda_rep(g).group);
      std::size_t shared = 0;
      for (const auto& r : rho_rep(g).images) shared += lam.count({r.images().begin(), r.images().end()});
      EXPECT_EQ(shared, 1u);
    }
    if (g.is_abelian()) EXPECT_TRUE(inhol(g).same_elements(lambda_rep(g).group));
  }
}

TEST(Regular, Examples) {
  const auto stab = PermSubgroup::generate(3, {Permutation({0, 2, 1})});
  EXPECT_FALSE(is_regular(stab));
  EXPECT_FALSE(is_regular(inhol(symmetric(3))));
}

TEST(Centralizer, ClosedFormMatchesScans) {
  for (const auto& g : {cyclic(3), symmetric(3), dihedral(4)}) {
    const auto lam = lambda_rep(g).group;
    const auto closed = centralizer_of_regular(lam);
    const auto scanned = centralizer_by_scan(lam);
    EXPECT_TRUE(closed.same_elements(scanned));
    EXPECT_TRUE(closed.same_elements(rho_rep(g).group));
    EXPECT_EQ(oracle::image_set(closed), oracle::brute_centralizer(g.order(), oracle::image_set(lam)));
  }
  const auto lam = lambda_rep(symmetric(3)).group;
  EXPECT_TRUE(centralizer_in_sym(centralizer_in_sym(lam)).same_elements(lam));
  for (std::size_t d = 3; d <= 5; ++d) {
    std::vector<Point> t(d), c(d);
    for (std::size_t x = 0; x < d; ++x) {
      t[x] = static_cast<Point>(x);
      c[x] = static_cast<Point>((x + 1) % d);
    }
    std::swap(t[0], t[1]);
    const auto sym = PermSubgroup::generate(d, {Permutation(t), Permutation(c)});
    EXPECT_EQ(centralizer_in_sym(sym).order(), 1u);
  }
}

TEST(Normalizer, SmallCases) {
  const auto lam3 = lambda_rep(cyclic(3)).group;
  EXPECT_EQ(normalizer_in_sym(3, lam3).order(), 6u);
  // N(λ(G)) = Hol(G) for |G| <= 7.
  for (const auto& g : {cyclic(2), cyclic(3), cyclic(4), direct_product(cyclic(2), cyclic(2)), cyclic(5),
                        symmetric(3), cyclic(6), cyclic(7)}) {
    const auto n = normalizer_in_sym(g.order(), lambda_rep(g).group);
    EXPECT_TRUE(n.same_elements(hol(g))) << g.name();
    EXPECT_TRUE(lambda_rep(g).group.is_subgroup_of(n));
  }
}

TEST(Normalizer, InholS3MatchesFullConjugationScan) {
  const auto s3 = symmetric(3);
  const auto in = inhol(s3);
  const auto n = normalizer_in_sym(6, in);
  EXPECT_EQ(n.order(), 72u);
  EXPECT_EQ(oracle::image_set(n), oracle::brute_normalizer(6, oracle::image_set(in)));
}

TEST(Normalizer, ThreadCountDoesNotChangeResult) {
  const auto in = inhol(dihedral(4));
  Limits one, four;
  four.threads = 4;
  const auto a = normalizer_in_sym(8, in, one);
  const auto b = normalizer_in_sym(8, in, four);
  EXPECT_TRUE(a.same_elements(b));
}

TEST(Normalizer, DegreeCaps) {
  const auto g = PermSubgroup::generate(11, {Permutation::identity(11)});
  EXPECT_THROW(normalizer_in_sym(11, g), Error);
  Limits raised;
  raised.max_degree = 13;
  try {
    normalizer_in_sym(13, PermSubgroup::generate(13, {Permutation::identity(13)}), raised);
    ADD_FAILURE() << "degree 13 accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
  }
}

TEST(NHol, Examples) {
  const auto c3 = cyclic(3);
  EXPECT_TRUE(hol(c3).is_subgroup_of(nhol(c3)));
  const auto n = nhol(symmetric(3));
  EXPECT_EQ(n.order() % 36, 0u);
  EXPECT_TRUE(hol(symmetric(3)).is_subgroup_of(n));
}

TEST(NHol, C5RegularNormalSubgroupCount) {
  const auto c5 = cyclic(5);
  const auto h = hol(c5);
  const auto n = nhol(c5);
  const auto regs = regular_normal_subgroups_isomorphic_to(h, c5);
  ASSERT_FALSE(regs.empty());
  const auto lam = lambda_rep(c5).group;
  EXPECT_TRUE(std::any_of(regs.begin(), regs.end(), [&](const PermSubgroup& r) { return r.same_elements(lam); }));
  EXPECT_EQ(regs.size(), n.order() / h.order());
}
