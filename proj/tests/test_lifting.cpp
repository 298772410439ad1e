#include <gtest/gtest.h>

#include "hololab/error.hpp"
#include "hololab/homomorphism.hpp"
#include "hololab/lifting.hpp"
#include "hololab/standard_groups.hpp"
#include "oracles.hpp"

using namespace hololab;

namespace {

PermSubgroup trivial_s2() { return PermSubgroup::generate(2, {}); }
PermSubgroup full_s2() { return PermSubgroup::generate(2, {Permutation({1, 0})}); }
PermSubgroup three_cycle() { return PermSubgroup::generate(3, {Permutation({1, 2, 0})}); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidParameter;
}

}  // namespace

TEST(Embed, Orders) {
  const auto h1 = embed({trivial_s2(), 2, 5});
  EXPECT_EQ(h1.order(), 6u);
  for (const auto& e : h1.elements()) {
    EXPECT_EQ(e(0), 0);
    EXPECT_EQ(e(1), 1);
  }
  EXPECT_EQ(embed({three_cycle(), 3, 7}).order(), 72u);
  EXPECT_EQ(code_of([] { embed({trivial_s2(), 2, 4}); }), ErrorCode::DegreeTooSmall);
  EXPECT_EQ(code_of([] { embed({trivial_s2(), 3, 9}); }), ErrorCode::InvalidParameter);
}

TEST(IntersectAlternating, Examples) {
  const auto h1 = embed({trivial_s2(), 2, 5});
  EXPECT_EQ(intersect_alternating(h1).order(), 3u);
  const auto even = PermSubgroup::generate(5, {Permutation({1, 2, 0, 3, 4})});
  EXPECT_TRUE(intersect_alternating(even).same_elements(even));
  const auto h1b = embed({three_cycle(), 3, 7});
  EXPECT_EQ(h1b.order(), 2 * intersect_alternating(h1b).order());
}

TEST(NormalizerQuotient, MatchesBruteForce) {
  const auto h1 = embed({trivial_s2(), 2, 5});
  const auto nq = normalizer_quotient(Ambient::Sym, 5, h1);
  EXPECT_EQ(nq.normalizer.order(), 12u);
  EXPECT_EQ(oracle::image_set(nq.normalizer), oracle::brute_normalizer(5, oracle::image_set(h1)));
  EXPECT_TRUE(is_isomorphic(nq.quotient, cyclic(2)).has_value());

  const auto h2 = intersect_alternating(h1);
  const auto alt = normalizer_quotient(Ambient::Alt, 5, h2);
  std::set<oracle::Images> even;
  for (const auto& x : oracle::brute_normalizer(5, oracle::image_set(h2))) {
    if (Permutation(std::vector<Point>(x.begin(), x.end())).is_even()) even.insert(x);
  }
  EXPECT_EQ(oracle::image_set(alt.normalizer), even);
  EXPECT_TRUE(is_isomorphic(alt.quotient, cyclic(2)).has_value());
}

TEST(NormalizerQuotient, ThreeCycleLift) {
  const auto h1 = embed({three_cycle(), 3, 7});
  const auto nq = normalizer_quotient(Ambient::Sym, 7, h1);
  EXPECT_EQ(nq.normalizer.order(), 144u);
  EXPECT_TRUE(is_isomorphic(nq.quotient, cyclic(2)).has_value());
}

TEST(InvariantSubsets, OnlyTheTail) {
  const auto h1 = embed({three_cycle(), 3, 7});
  EXPECT_EQ(invariant_subsets(h1, 4), (std::vector<std::uint32_t>{0b1111000}));
  EXPECT_EQ(invariant_subsets(intersect_alternating(h1), 4), (std::vector<std::uint32_t>{0b1111000}));
  const auto sym3 = PermSubgroup::generate(3, {Permutation({1, 0, 2}), Permutation({1, 2, 0})});
  EXPECT_TRUE(invariant_subsets(sym3, 2).empty());
  EXPECT_EQ(invariant_subsets(sym3, 3).size(), 1u);
}

TEST(LiftCheck, AcceptanceCases) {
  struct Case {
    PermSubgroup h;
    std::size_t n, m;
    GroupTable t;
  };
  for (const auto& c : {Case{trivial_s2(), 2, 5, cyclic(2)}, Case{three_cycle(), 3, 7, cyclic(2)},
                        Case{full_s2(), 2, 5, trivial_group()}}) {
    const auto r = lift_check(c.h, c.n, c.m, c.t);
    EXPECT_TRUE(r.sym_iso_to_expected);
    EXPECT_TRUE(r.alt_iso_to_expected);
    for (const auto& k : r.checks) EXPECT_TRUE(k.passed) << k.name;
    EXPECT_TRUE(r.passed());
  }
}

TEST(LiftCheck, WrongExpectationFails) {
  const auto r = lift_check(trivial_s2(), 2, 5, trivial_group());
  EXPECT_FALSE(r.passed());
}

TEST(LiftCheck, DegreeOne) {
  const auto s1 = PermSubgroup::generate(1, {});
  const auto r = lift_check(s1, 1, 4, trivial_group());
  EXPECT_TRUE(r.passed());
}

TEST(Assembly, S3) {
  const auto r = main_theorem_assembly(symmetric(3));
  EXPECT_EQ(r.h_order, 72u);
  EXPECT_TRUE(r.self_normalizing);
  EXPECT_TRUE(r.normalizer_equals_hol_inv);
  EXPECT_EQ(r.quotient.order(), 1u);
  EXPECT_EQ(r.out.order(), 1u);
  EXPECT_TRUE(r.quotient_iso_out);
  EXPECT_EQ(r.label, "CONSISTENCY");
  EXPECT_TRUE(r.passed());
  ASSERT_TRUE(r.inhol_characteristic.has_value());
}

TEST(Assembly, Guards) {
  EXPECT_EQ(code_of([] { main_theorem_assembly(cyclic(4)); }), ErrorCode::Abelian);
  EXPECT_EQ(code_of([] { main_theorem_assembly(dihedral(4)); }), ErrorCode::NotCenterless);
  EXPECT_EQ(code_of([] { main_theorem_assembly(symmetric(4)); }), ErrorCode::CapExceeded);
}
