#include <gtest/gtest.h>

#include <random>

#include "hololab/error.hpp"
#include "hololab/liealg.hpp"
#include "oracles.hpp"

using namespace hololab;

namespace {

LieVector random_vector(const std::shared_ptr<const LieAlgebra>& alg, std::mt19937_64& rng) {
  LieVector v = LieVector::zero(alg);
  for (std::size_t i = 0; i < v.size(); ++i) v.set(i, static_cast<std::int64_t>(rng() % alg->modulus()));
  return v;
}

/// Expansion of an integer combination of basis elements in the free
/// associative algebra.
oracle::Poly expand_combination(const HallBasis& basis, const IntCombination& c) {
  oracle::Poly out;
  for (const auto& [k, x] : c) oracle::add_into(out, oracle::expand(basis, k), x);
  return out;
}

}  // namespace

TEST(HallBasis, DimsMatchWitt) {
  EXPECT_EQ(HallBasis::create(2, 2)->dims(), (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(HallBasis::create(3, 3)->dims(), (std::vector<std::size_t>{3, 3, 8}));
  EXPECT_EQ(HallBasis::create(4, 4)->dims(), (std::vector<std::size_t>{4, 6, 20, 60}));
  for (std::size_t n = 1; n <= HallBasis::kMaxRank; ++n)
    for (std::size_t c = 1; c <= HallBasis::kMaxClass; ++c) {
      const auto dims = HallBasis::create(n, c)->dims();
      for (std::size_t k = 1; k <= c; ++k) {
        EXPECT_EQ(dims[k - 1], witt_dimension(n, k));
        EXPECT_EQ(dims[k - 1], oracle::lyndon_count(static_cast<int>(n), static_cast<int>(k)));
      }
    }
}

TEST(HallBasis, Shape) {
  const auto b = HallBasis::create(2, 2);
  EXPECT_EQ(b->to_string(2), "[t2,t1]");
  const auto b3 = HallBasis::create(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ((*b3)[i].generator, static_cast<int>(i));
    EXPECT_EQ((*b3)[i].degree, 1u);
  }
  for (std::size_t i = 3; i < b3->size(); ++i) {
    const auto& e = (*b3)[i];
    EXPECT_GT(e.left, e.right);
    const auto& l = (*b3)[static_cast<std::size_t>(e.left)];
    if (l.generator < 0) EXPECT_LE(l.right, e.right);
    EXPECT_GE(e.degree, (*b3)[i - 1].degree);
  }
  EXPECT_THROW(HallBasis::create(7, 2), Error);
  EXPECT_THROW(HallBasis::create(2, 5), Error);
}

TEST(Witt, Values) {
  EXPECT_EQ(witt_dimension(3, 1), 3u);
  EXPECT_EQ(witt_dimension(3, 3), 8u);
  EXPECT_EQ(witt_dimension(2, 6), 9u);
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 7; ++k) EXPECT_EQ(witt_dimension(n, k), oracle::lyndon_count(n, k));
}

// Structure constants agree with commutators in the free associative algebra,
// and the expansions of the basis are linearly independent.
TEST(HallBasis, StructureConstantsMatchAssociativeEmbedding) {
  for (auto [n, c] : {std::pair{2, 4}, std::pair{3, 3}, std::pair{3, 4}, std::pair{4, 4}}) {
    const auto basis = HallBasis::create(n, c);
    std::vector<oracle::Poly> ex;
    for (std::size_t i = 0; i < basis->size(); ++i) ex.push_back(oracle::expand(*basis, i));
    for (std::size_t i = 0; i < basis->size(); ++i)
      for (std::size_t j = 0; j < basis->size(); ++j) {
        const auto got = expand_combination(*basis, basis->bracket(i, j));
        if ((*basis)[i].degree + (*basis)[j].degree > static_cast<std::size_t>(c)) {
          EXPECT_TRUE(got.empty());
        } else {
          EXPECT_EQ(got, oracle::commutator(ex[i], ex[j])) << i << "," << j;
        }
      }
    std::map<std::vector<int>, std::size_t> word_index;
    for (const auto& p : ex)
      for (const auto& [w, x] : p) word_index.emplace(w, word_index.size());
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& p : ex) {
      std::vector<std::int64_t> row(word_index.size(), 0);
      for (const auto& [w, x] : p) row[word_index[w]] = x;
      rows.push_back(std::move(row));
    }
    EXPECT_EQ(oracle::rank_mod(rows, 1'000'000'007), basis->size());
  }
}

TEST(LieAlgebra, Modulus) {
  EXPECT_THROW(LieAlgebra::create(3, 3, 4), Error);
  EXPECT_THROW(LieAlgebra::create(3, 3, 65537), Error);
  EXPECT_NO_THROW(LieAlgebra::create(3, 3, 3));
  const auto alg = LieAlgebra::create(2, 2, 7);
  for (std::uint32_t x = 1; x < 7; ++x) EXPECT_EQ(x * alg->inverse(x) % 7, 1u);
}

TEST(Bracket, Examples) {
  const auto alg = LieAlgebra::create(2, 2, 5);
  const auto x1 = LieVector::generator(alg, 0), x2 = LieVector::generator(alg, 1);
  EXPECT_TRUE(bracket(x1, x1).is_zero());
  EXPECT_EQ(bracket(x2, x1), LieVector::basis_vector(alg, 2));
  EXPECT_EQ(bracket(x1, x2), -LieVector::basis_vector(alg, 2));
  const auto other = LieAlgebra::create(2, 2, 7);
  EXPECT_THROW(bracket(x1, LieVector::generator(other, 0)), Error);
  EXPECT_THROW(x1 + LieVector::generator(LieAlgebra::create(2, 3, 5), 0), Error);
}

TEST(Bracket, BilinearAlternatingJacobi) {
  std::mt19937_64 rng(20240611);
  const auto alg = LieAlgebra::create(3, 3, 5);
  for (int t = 0; t < 1000; ++t) {
    const auto x = random_vector(alg, rng), y = random_vector(alg, rng), z = random_vector(alg, rng);
    const std::uint32_t s = static_cast<std::uint32_t>(rng() % 5);
    EXPECT_TRUE(bracket(x, x).is_zero());
    EXPECT_EQ(bracket(x + s * y, z), bracket(x, z) + s * bracket(y, z));
    EXPECT_TRUE((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero());
  }
}

TEST(Bracket, Grading) {
  std::mt19937_64 rng(7);
  const auto alg = LieAlgebra::create(3, 4, 7);
  for (int t = 0; t < 100; ++t) {
    const auto x = random_vector(alg, rng), y = random_vector(alg, rng);
    for (std::size_t j = 1; j <= 4; ++j)
      for (std::size_t k = 1; j + k <= 4; ++k) {
        const auto b = bracket(x.component(j), y.component(k));
        EXPECT_EQ(b, b.component(j + k));
      }
  }
}

TEST(Bch, Basics) {
  const auto alg = LieAlgebra::create(3, 3, 5);
  const auto x = LieVector::generator(alg, 0), y = LieVector::generator(alg, 1);
  const auto zero = LieVector::zero(alg);
  EXPECT_EQ(bch_multiply(x, zero), x);
  EXPECT_EQ(bch_multiply(x, x), 2u * x);
  EXPECT_TRUE(bch_multiply(x, bch_inverse(x)).is_zero());
  // Group commutator x y x^-1 y^-1 = [x,y] + higher terms.
  const auto comm = bch_multiply(bch_multiply(x, y), bch_multiply(bch_inverse(x), bch_inverse(y)));
  EXPECT_TRUE(comm.component(1).is_zero());
  EXPECT_EQ(comm.component(2), bracket(x, y));
  EXPECT_THROW(bch_multiply(LieVector::generator(LieAlgebra::create(2, 2, 3), 0),
                            LieVector::generator(LieAlgebra::create(2, 2, 3), 1)),
               Error);
}

TEST(Bch, ExplicitCoefficientsAtDegreeThree) {
  // For generators x, y: x∘y has degree-3 part (1/12)[x,[x,y]] - (1/12)[y,[x,y]].
  const auto alg = LieAlgebra::create(2, 3, 7);
  const auto x = LieVector::generator(alg, 0), y = LieVector::generator(alg, 1);
  const auto w = bracket(x, y);
  const std::uint32_t twelfth = alg->inverse(12);
  const auto expected = twelfth * bracket(x, w) - twelfth * bracket(y, w);
  EXPECT_EQ(bch_multiply(x, y).component(3), expected);
  EXPECT_EQ(bch_multiply(x, y).component(2), alg->inverse(2) * w);
}

class BchGroup : public ::testing::TestWithParam<std::tuple<int, int, std::uint32_t>> {};

TEST_P(BchGroup, AxiomsAndExponent) {
  const auto [n, c, p] = GetParam();
  const auto alg = LieAlgebra::create(n, c, p);
  std::mt19937_64 rng(20240611 + p);
  for (int t = 0; t < 1000; ++t) {
    const auto x = random_vector(alg, rng), y = random_vector(alg, rng), z = random_vector(alg, rng);
    EXPECT_EQ(bch_multiply(bch_multiply(x, y), z), bch_multiply(x, bch_multiply(y, z)));
    EXPECT_TRUE(bch_multiply(bch_inverse(x), x).is_zero());
    if (t % 10 == 0) {
      EXPECT_TRUE(bch_power(x, p).is_zero());
      EXPECT_EQ(bch_power(x, 3), 3u * x);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Cases, BchGroup,
                         ::testing::Values(std::tuple{3, 3, 5u}, std::tuple{3, 3, 7u}, std::tuple{4, 4, 5u}));

TEST(LieVector, SparseRoundTrip) {
  const auto alg = LieAlgebra::create(3, 3, 5);
  const auto v = LieVector::from_sparse(alg, {{0, 7}, {5, -1}, {13, 5}});
  EXPECT_EQ(v[0], 2u);
  EXPECT_EQ(v[5], 4u);
  EXPECT_EQ(v[13], 0u);
  EXPECT_EQ(v.nonzeros().size(), 2u);
  EXPECT_EQ(v.min_degree(), 1u);
  EXPECT_THROW(LieVector::from_sparse(alg, {{14, 1}}), Error);
}

TEST(NestedBracket, RightNested) {
  const auto alg = LieAlgebra::create(3, 3, 5);
  const auto a = LieVector::generator(alg, 0), b = LieVector::generator(alg, 1), c = LieVector::generator(alg, 2);
  EXPECT_EQ(nested_bracket({a, b, c}), bracket(a, bracket(b, c)));
}
