#include <algorithm>
#include <gtest/gtest.h>

#include <set>

#include "hololab/error.hpp"
#include "hololab/holomorph.hpp"
#include "hololab/regsub.hpp"
#include "hololab/standard_groups.hpp"
#include "oracles.hpp"

using namespace hololab;

namespace {

using ElementSet = std::set<oracle::Images>;

std::set<ElementSet> realizations(const GroupTable& g, const std::vector<GroupTable>& ns) {
  const auto ctx = HolomorphContext::build(g);
  std::set<ElementSet> out;
  for (const auto& n : ns)
    for (const auto& p : enumerate_fpf_pairs(n, g)) out.insert(oracle::image_set(regular_from_pair(p, ctx).subgroup));
  return out;
}

std::set<ElementSet> as_sets(const std::vector<PermSubgroup>& v) {
  std::set<ElementSet> out;
  for (const auto& s : v) out.insert(oracle::image_set(s));
  return out;
}

/// Regular subgroups of InHol(G) from closures of every element pair.
/// Regular subgroups of InHol(G) found by closing every 2-subset of its
/// elements, or every 3-subset when `triples` is set (needed for C2^3).
std::set<ElementSet> pair_closure_oracle(const GroupTable& g, bool triples = false) {
  const auto in = oracle::image_set(inhol(g));
  const std::vector<oracle::Images> elems(in.begin(), in.end());
  const std::size_t d = g.order();
  std::set<ElementSet> out;
  auto consider = [&](std::vector<oracle::Images> seed) {
    const auto c = oracle::close(seed, d);
    if (c.size() != d) return;
    std::set<std::uint16_t> hits;
    for (const auto& x : c) hits.insert(x[0]);
    if (hits.size() == d) out.insert(c);
  };
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i; j < elems.size(); ++j) {
      if (!triples) {
        consider({elems[i], elems[j]});
        continue;
      }
      for (std::size_t k = j; k < elems.size(); ++k) consider({elems[i], elems[j], elems[k]});
    }
  return out;
}

FpfPair pair_of(const GroupTable& g, bool f_identity) {
  const auto id = identity_map(g), tr = trivial_map(g, g);
  return f_identity ? FpfPair{id, tr} : FpfPair{tr, id};
}

}  // namespace

TEST(FixedPointFree, Examples) {
  const auto s3 = symmetric(3);
  EXPECT_TRUE(is_fixed_point_free(identity_map(s3), trivial_map(s3, s3)));
  EXPECT_FALSE(is_fixed_point_free(identity_map(s3), identity_map(s3)));
  const auto g = direct_product(s3, s3);
  const auto p = projection_pair(g, *is_decomposable(g));
  EXPECT_TRUE(is_fixed_point_free(p.f, p.g));
  EXPECT_THROW(is_fixed_point_free(identity_map(s3), trivial_map(s3, cyclic(6))), Error);
}

TEST(RegularFromPair, LambdaRhoOther) {
  const auto s3 = symmetric(3);
  const auto l = regular_from_pair(pair_of(s3, true), s3);
  EXPECT_EQ(l.classification, Classification::Lambda);
  EXPECT_TRUE(l.subgroup.same_elements(lambda_rep(s3).group));
  const auto r = regular_from_pair(pair_of(s3, false), s3);
  EXPECT_EQ(r.classification, Classification::Rho);

  const auto g = direct_product(s3, s3);
  const auto w = regular_from_pair(projection_pair(g, *is_decomposable(g)), g);
  EXPECT_EQ(w.classification, Classification::Other);
  EXPECT_EQ(w.subgroup.order(), 36u);
  EXPECT_TRUE(is_regular(w.subgroup));
}

TEST(RegularFromPair, Errors) {
  const auto s3 = symmetric(3);
  try {
    regular_from_pair({identity_map(s3), identity_map(s3)}, s3);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFpf);
  }
  try {
    regular_from_pair({trivial_map(cyclic(2), s3), homomorphisms(cyclic(2), s3)[1]}, s3);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OrderMismatch);
  }
}

TEST(FpfPairs, C2) {
  const auto c2 = cyclic(2);
  const auto pairs = enumerate_fpf_pairs(c2, c2);
  ASSERT_EQ(pairs.size(), 2u);
  std::set<std::pair<std::vector<Elem>, std::vector<Elem>>> got;
  for (const auto& p : pairs) got.insert({p.f.images, p.g.images});
  EXPECT_EQ(got, (std::set<std::pair<std::vector<Elem>, std::vector<Elem>>>{{{0, 1}, {0, 0}}, {{0, 0}, {0, 1}}}));
}

TEST(FpfPairs, S3MatchesNaiveDoubleLoop) {
  const auto s3 = symmetric(3);
  const auto ends = oracle::naive_homomorphisms(s3, s3);
  ASSERT_EQ(ends.size(), 10u);
  std::size_t expected = 0;
  for (const auto& f : ends)
    for (const auto& g : ends) {
      std::size_t agree = 0;
      for (Elem x = 0; x < 6; ++x) agree += f[x] == g[x];
      expected += agree == 1;
    }
  EXPECT_EQ(enumerate_fpf_pairs(s3, s3).size(), expected);
}

TEST(FpfPairs, KernelsIntersectTrivially) {
  for (const auto& g : {symmetric(3), dihedral(5)})
    for (const auto& p : enumerate_fpf_pairs(g, g)) {
      const auto kf = p.f.kernel(), kg = p.g.kernel();
      std::size_t shared = 0;
      for (Elem x : kf.elements) shared += kg.contains(x);
      EXPECT_EQ(shared, 1u);
    }
}

TEST(RegularSubgroups, RealizationsAreIsomorphicToDomain) {
  const auto s3 = symmetric(3);
  for (const auto& n : {cyclic(6), s3})
    for (const auto& p : enumerate_fpf_pairs(n, s3)) {
      const auto w = regular_from_pair(p, s3);
      EXPECT_TRUE(is_isomorphic(w.subgroup.to_group_table(), n).has_value());
    }
}

TEST(RegularSubgroups, OracleEqualityS3) {
  const auto s3 = symmetric(3);
  const auto brute = as_sets(enumerate_regular_subgroups_brute(s3));
  EXPECT_EQ(brute, pair_closure_oracle(s3));
  EXPECT_EQ(realizations(s3, {cyclic(6), s3}), brute);
}

TEST(RegularSubgroups, OracleEqualityD5) {
  const auto d5 = dihedral(5);
  const auto brute = as_sets(enumerate_regular_subgroups_brute(d5));
  EXPECT_EQ(brute, pair_closure_oracle(d5));
  EXPECT_EQ(realizations(d5, {cyclic(10), d5}), brute);
}

TEST(RegularSubgroups, OrderEightRealizationsInsideBrute) {
  // With a nontrivial center, (a,b) -> lambda(a)rho(b) is not injective and
  // some regular subgroups need not come from a pair, so only containment holds.
  const auto c2 = cyclic(2);
  const std::vector<GroupTable> all8 = {cyclic(8), direct_product(cyclic(4), c2),
                                        direct_product(direct_product(c2, c2), c2), dihedral(4),
                                        quaternion8()};
  for (const auto& g : {dihedral(4), quaternion8()}) {
    const auto brute = as_sets(enumerate_regular_subgroups_brute(g));
    EXPECT_EQ(brute, pair_closure_oracle(g, true)) << g.name();
    const auto real = realizations(g, all8);
    EXPECT_TRUE(std::includes(brute.begin(), brute.end(), real.begin(), real.end())) << g.name();
  }
}

TEST(RegularSubgroups, AbelianOnlyLambda) {
  for (const auto& g : {cyclic(4), cyclic(5), direct_product(cyclic(2), cyclic(2))}) {
    const auto regs = enumerate_regular_subgroups_brute(g);
    ASSERT_EQ(regs.size(), 1u);
    EXPECT_TRUE(regs[0].same_elements(lambda_rep(g).group));
  }
}

TEST(CentralizerCondition, Examples) {
  const auto s3 = symmetric(3);
  EXPECT_TRUE(centralizer_pair_condition(pair_of(s3, true), pair_of(s3, false)));
  EXPECT_FALSE(centralizer_pair_condition(pair_of(s3, true), pair_of(s3, true)));
  const auto g = direct_product(s3, s3);
  const auto p = projection_pair(g, *is_decomposable(g));
  EXPECT_TRUE(centralizer_pair_condition(p, FpfPair{p.g, p.f}));
  EXPECT_THROW(centralizer_pair_condition(pair_of(dihedral(4), true), pair_of(dihedral(4), false)), Error);
}

TEST(CentralizerCondition, DualityMatchesCentralizer) {
  for (const auto& g : {symmetric(3), direct_product(symmetric(3), symmetric(3))}) {
    const auto ctx = HolomorphContext::build(g);
    const auto pairs = enumerate_fpf_pairs(g, g);
    std::size_t checked = 0;
    // Bounded: S3 x S3 has too many pairs for a full square scan.
    const std::size_t rows = std::min<std::size_t>(pairs.size(), 60);
    for (std::size_t i = 0; i < rows && checked < 40; ++i)
      for (std::size_t j = 0; j < pairs.size() && checked < 40; ++j) {
        if (!centralizer_pair_condition(pairs[i], pairs[j])) continue;
        const auto r1 = regular_from_pair(pairs[i], ctx).subgroup;
        const auto r2 = regular_from_pair(pairs[j], ctx).subgroup;
        EXPECT_TRUE(centralizer_in_sym(r1).same_elements(r2));
        EXPECT_TRUE(centralizer_in_sym(r2).same_elements(r1));
        ++checked;
      }
    EXPECT_GT(checked, 0u);
  }
}

TEST(Verdict, MinimalCases) {
  EXPECT_EQ(minimality_verdict(symmetric(3)).kind, VerdictKind::Minimal);
  EXPECT_EQ(minimality_verdict(dihedral(5)).kind, VerdictKind::Minimal);
  EXPECT_FALSE(minimality_verdict(symmetric(3)).witness.has_value());
}

TEST(Verdict, StrictlyLargerForS3xS3) {
  const auto g = direct_product(symmetric(3), symmetric(3));
  const auto v = minimality_verdict(g);
  ASSERT_EQ(v.kind, VerdictKind::StrictlyLarger);
  ASSERT_TRUE(v.witness.has_value());
  const auto& [p, q] = *v.witness;
  EXPECT_EQ(regular_from_pair(p, g).classification, Classification::Other);
  EXPECT_TRUE(centralizer_pair_condition(p, q));
  EXPECT_GE(v.witness_count, 2u);
}

TEST(Verdict, RejectsCenter) {
  try {
    minimality_verdict(dihedral(4));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCenterless);
  }
}

TEST(Thm13, IndecomposableCases) {
  for (const auto& g : {symmetric(3), dihedral(5), alternating(5), symmetric(4)}) {
    const auto r = thm13_check(g);
    EXPECT_TRUE(r.passed()) << g.name();
    EXPECT_EQ(r.verdict.kind, VerdictKind::Minimal);
    EXPECT_FALSE(r.decomposition.has_value());
  }
}

TEST(Thm13, DecomposableKernels) {
  const auto s3 = symmetric(3);
  const auto g = direct_product(s3, s3);
  const auto r = thm13_check(g);
  EXPECT_TRUE(r.passed());
  ASSERT_TRUE(r.kernel_f && r.kernel_g && r.decomposition);
  const std::set<Subgroup> kernels{*r.kernel_f, *r.kernel_g};
  const std::set<Subgroup> factors{r.decomposition->first, r.decomposition->second};
  EXPECT_EQ(kernels, factors);
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name;
}

TEST(Thm13, S3xD5) {
  const auto g = direct_product(symmetric(3), dihedral(5));
  const auto r = thm13_check(g);
  EXPECT_EQ(r.verdict.kind, VerdictKind::StrictlyLarger);
  EXPECT_TRUE(r.passed());
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name;
}
