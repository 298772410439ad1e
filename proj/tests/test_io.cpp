#include <gtest/gtest.h>

#include "hololab/error.hpp"
#include "hololab/io.hpp"
#include "hololab/standard_groups.hpp"

using namespace hololab;
using io::json;

TEST(Io, GroupRoundTrip) {
  const auto g = dihedral(4);
  const json j = io::to_json(g);
  EXPECT_EQ(j["order"], 8);
  EXPECT_EQ(j["name"], g.name());
  const auto back = io::group_from_json(json::parse(j.dump()));
  EXPECT_TRUE(back.same_table(g));
}

TEST(Io, GroupValidation) {
  EXPECT_THROW(io::group_from_json(json::parse(R"({"table": [[0,1],[1,1]]})")), Error);
  EXPECT_THROW(io::group_from_json(json::parse(R"({"table": [[0,1],[1,0]], "order": 3})")), Error);
  EXPECT_THROW(io::group_from_json(json::parse(R"({"table": [[0,-1],[1,0]]})")), Error);
  EXPECT_THROW(io::group_from_json(json::parse(R"([1,2])")), Error);
  EXPECT_EQ(io::group_from_json(json::parse(R"({"table": [[0,1],[1,0]]})")).order(), 2u);
}

TEST(Io, SubgroupAndHomomorphism) {
  const auto s3 = symmetric(3);
  const auto ns = normal_subgroups(s3);
  EXPECT_EQ(io::subgroup_from_json(io::to_json(ns[1]), s3), ns[1]);
  EXPECT_THROW(io::subgroup_from_json(json::parse("[0, 1, 2, 3]"), s3), Error);
  EXPECT_THROW(io::subgroup_from_json(json::parse("[1, 0]"), s3), Error);
  const auto h = homomorphisms(s3, s3)[3];
  const auto back = io::homomorphism_from_json(io::to_json(h), s3, s3);
  EXPECT_EQ(back.images, h.images);
  EXPECT_THROW(io::homomorphism_from_json(json::parse("[0,1,2,3,4,5]"), s3, cyclic(6)), Error);
}

TEST(Io, Permutations) {
  const auto g = PermSubgroup::generate(4, {Permutation({1, 0, 2, 3}), Permutation({1, 2, 3, 0})});
  const json j = io::to_json(g, true);
  EXPECT_EQ(j["order"], 24);
  EXPECT_EQ(j["elements"].size(), 24u);
  EXPECT_TRUE(io::perm_subgroup_from_json(j).same_elements(g));
  EXPECT_THROW(io::permutation_from_json(json::parse("[0,0,1]")), Error);
}

TEST(Io, LieVectorAndCsElement) {
  const auto alg = LieAlgebra::create(3, 3, 5);
  const auto v = LieVector::from_sparse(alg, {{0, 1}, {9, 3}});
  const json j = io::to_json(v);
  EXPECT_EQ(j["coeffs"], json::parse("[[0,1],[9,3]]"));
  EXPECT_EQ(io::lie_vector_from_json(j, alg), v);
  EXPECT_THROW(io::lie_vector_from_json(j, LieAlgebra::create(3, 3, 7)), Error);

  const auto g = CsGroup::build({cyclic(3), 5});
  const auto x = g.make_element(LieVector::from_sparse(g.algebra(), {{0, 1}, {9, 3}}), {2, 3, 4});
  EXPECT_EQ(io::cs_element_from_json(io::to_json(x), g), x);
  const json cert = io::build_certificate(g);
  EXPECT_EQ(cert["dims"], json::parse("[3,3,8]"));
  EXPECT_EQ(cert["D"], 14);
}
