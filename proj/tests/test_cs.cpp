#include <gtest/gtest.h>

#include <random>

#include "hololab/cs.hpp"
#include "hololab/error.hpp"
#include "hololab/standard_groups.hpp"
#include "oracles.hpp"

using namespace hololab;

namespace {

const CsGroup& cs35() {
  static const CsGroup g = CsGroup::build({cyclic(3), 5});
  return g;
}

ErrorCode build_error(const GroupTable& t, std::uint32_t p) {
  try {
    CsGroup::build({t, p});
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "build succeeded";
  return ErrorCode::InvalidParameter;
}

LieVector random_lie(const CsGroup& g, std::mt19937_64& rng) {
  LieVector v = LieVector::zero(g.algebra());
  for (std::size_t i = 0; i < v.size(); ++i) v.set(i, static_cast<std::int64_t>(rng() % g.p()));
  return v;
}

QTuple random_q(const CsGroup& g, std::mt19937_64& rng) {
  QTuple q(g.n());
  for (auto& a : q) a = static_cast<std::uint32_t>(1 + rng() % (g.p() - 1));
  return q;
}

/// Rank over F_p of the relation vectors, by a separate elimination on plain
/// integer rows.
std::size_t independent_rank(const CsGroup& g) {
  std::vector<std::vector<std::int64_t>> rows;
  for (Elem t = 0; t < g.n(); ++t) {
    const auto v = g.n_fold_commutator_vector(t);
    rows.emplace_back(v.coefficients().begin(), v.coefficients().end());
  }
  return oracle::rank_mod(rows, g.p());
}

}  // namespace

TEST(WeightScalar, Examples) {
  const auto& g = cs35();
  for (std::size_t i = 0; i < g.dimension(); ++i) EXPECT_EQ(g.weight_scalar({1, 1, 1}, i), 1u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(g.weight_scalar({2, 3, 4}, i), (QTuple{2, 3, 4})[i]);
  // [x_1,[x_2,x_1]] has weight (2,1,0).
  const auto alg = g.algebra();
  const auto v = nested_bracket({LieVector::generator(alg, 0), LieVector::generator(alg, 1), LieVector::generator(alg, 0)});
  for (const auto& [i, c] : v.nonzeros()) {
    EXPECT_EQ(g.basis()[i].weight, (std::vector<std::size_t>{2, 1, 0}));
    EXPECT_EQ(g.weight_scalar({2, 3, 1}, i), 2u);
  }
}

TEST(QAct, AutomorphismAndConvention) {
  const auto& g = cs35();
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto u = random_lie(g, rng), v = random_lie(g, rng);
    const auto a = random_q(g, rng), b = random_q(g, rng);
    EXPECT_EQ(g.q_act(a, bracket(u, v)), bracket(g.q_act(a, u), g.q_act(a, v)));
    EXPECT_EQ(g.q_act(a, bch_multiply(u, v)), bch_multiply(g.q_act(a, u), g.q_act(a, v)));
    QTuple ab(3);
    for (std::size_t i = 0; i < 3; ++i) ab[i] = a[i] * b[i] % g.p();
    EXPECT_EQ(g.q_act(ab, v), g.q_act(a, g.q_act(b, v)));
  }
}

TEST(QAct, PreservesRelationSpace) {
  const auto& g = cs35();
  std::mt19937_64 rng(5);
  for (const auto& r : g.relation_space())
    for (int t = 0; t < 20; ++t) EXPECT_TRUE(g.canonicalize(g.q_act(random_q(g, rng), r)).is_zero());
}

TEST(NFoldCommutator, IdentityOfC3) {
  const auto& g = cs35();
  const auto alg = g.algebra();
  const auto t1 = LieVector::generator(alg, 0), t2 = LieVector::generator(alg, 1);
  const auto v = g.n_fold_commutator_vector(0);
  EXPECT_EQ(v, bracket(t1, bracket(t2, t1)));
  EXPECT_EQ(v, v.component(3));
  EXPECT_FALSE(v.is_zero());
  for (Elem t = 0; t < 3; ++t) {
    const auto w = g.n_fold_commutator_vector(t);
    std::vector<std::size_t> weight(3, 0);
    weight[g.params().t.mul(t, 0)] += 2;
    weight[g.params().t.mul(t, 1)] += 1;
    for (const auto& [i, c] : w.nonzeros()) EXPECT_EQ(g.basis()[i].weight, weight);
  }
}

TEST(Build, CS35) {
  const auto& g = cs35();
  EXPECT_EQ(g.dims(), (std::vector<std::size_t>{3, 3, 8}));
  EXPECT_EQ(g.dimension(), 14u);
  EXPECT_EQ(g.rank(), independent_rank(g));
  EXPECT_LE(g.rank(), 3u);
  const auto o = g.order();
  EXPECT_EQ(o.p_exponent, 14u - g.rank());
  EXPECT_EQ(o.q_exponent, 3u);
  for (const auto& r : g.relation_space()) EXPECT_EQ(r, r.component(3));
}

TEST(Build, Errors) {
  EXPECT_EQ(build_error(cyclic(3), 3), ErrorCode::PTooSmall);
  EXPECT_EQ(build_error(cyclic(3), 4), ErrorCode::BadModulus);
  EXPECT_EQ(build_error(cyclic(2), 7), ErrorCode::TTooSmall);
  EXPECT_EQ(build_error(cyclic(5), 7), ErrorCode::CapExceeded);
}

TEST(Group, AxiomsOnSamples) {
  const auto& g = cs35();
  std::mt19937_64 rng(20240611);
  const auto e = g.identity();
  for (int t = 0; t < 1000; ++t) {
    const auto x = g.random_element(rng), y = g.random_element(rng), z = g.random_element(rng);
    EXPECT_EQ(g.multiply(g.multiply(x, y), z), g.multiply(x, g.multiply(y, z)));
    EXPECT_EQ(g.multiply(x, e), x);
    EXPECT_EQ(g.multiply(e, x), x);
    EXPECT_TRUE(g.is_identity(g.multiply(x, g.inverse(x))));
    EXPECT_TRUE(g.is_identity(g.multiply(g.inverse(x), x)));
  }
}

TEST(Group, PureParts) {
  const auto& g = cs35();
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const auto u = g.canonicalize(random_lie(g, rng));
    CsElement acc = g.identity();
    const auto x = g.from_lie(u);
    for (std::uint32_t k = 0; k < g.p(); ++k) acc = g.multiply(acc, x);
    EXPECT_TRUE(g.is_identity(acc));
    const auto v = g.canonicalize(random_lie(g, rng));
    EXPECT_EQ(g.multiply(x, g.from_lie(v)).lie, g.canonicalize(bch_multiply(u, v)));
    const auto a = random_q(g, rng), b = random_q(g, rng);
    const auto ab = g.multiply(g.from_q(a), g.from_q(b));
    EXPECT_TRUE(ab.lie.is_zero());
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(ab.q[i], a[i] * b[i] % g.p());
  }
}

TEST(Group, CanonicalizeIdempotent) {
  const auto& g = cs35();
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const auto v = g.canonicalize(random_lie(g, rng));
    EXPECT_EQ(g.canonicalize(v), v);
    for (std::size_t i = 0; i < g.rank(); ++i) EXPECT_EQ(v[g.pivots()[i]], 0u);
  }
}

TEST(Group, Mismatch) {
  const auto& g = cs35();
  const auto other = CsGroup::build({cyclic(3), 7});
  EXPECT_THROW(g.multiply(g.identity(), other.identity()), Error);
  EXPECT_THROW(g.from_q({0, 1, 1}), Error);
}

TEST(QFixed, CS35AllZero) {
  const auto& g = cs35();
  for (std::size_t k = 1; k <= 3; ++k) EXPECT_EQ(g.q_fixed_subspace(k).dimension, 0u);
}

TEST(QFixed, SyntheticPrimeThree) {
  // At p = 3 the criterion is "all multiplicities even".
  const auto basis = HallBasis::create(3, 3);
  const auto deg2 = q_fixed_basis_elements(*basis, 2, 3);
  EXPECT_TRUE(deg2.empty());  // degree-2 weights are (1,1)-shaped
  const auto [b, e] = basis->degree_range(3);
  for (std::size_t i = b; i < e; ++i) {
    const auto& w = (*basis)[i].weight;
    const bool all_even = std::all_of(w.begin(), w.end(), [](std::size_t m) { return m % 2 == 0; });
    EXPECT_EQ(weight_fixed_by_q(w, 3), all_even);
  }
  EXPECT_TRUE(weight_fixed_by_q({2, 0, 2}, 3));
  EXPECT_FALSE(weight_fixed_by_q({1, 2, 0}, 3));
  // Degree 4 on two generators: [[[t2,t1],t1],t2]-type weight (2,2) is fixed.
  const auto b4 = HallBasis::create(2, 4);
  EXPECT_FALSE(q_fixed_basis_elements(*b4, 4, 3).empty());
}

TEST(QFixed, DegreeOneFaithful) {
  const auto cert = compute_center_certificate(cs35(), {}, 10);
  EXPECT_EQ(cert.degree1_kernel, 1u);
  EXPECT_TRUE(cert.faithful_degree1);
}

TEST(PrimitiveRoot, Values) {
  EXPECT_EQ(primitive_root(5), 2u);
  EXPECT_EQ(primitive_root(7), 3u);
  EXPECT_EQ(primitive_root(11), 2u);
}

TEST(Center, CertificateCS35) {
  const auto cert = center_certificate(cs35());
  EXPECT_TRUE(cert.passed());
  EXPECT_EQ(cert.samples, 1000u);
  EXPECT_EQ(cert.witnesses, 0u);
  EXPECT_EQ(cert.q_fixed_levels.size(), 3u);
}

TEST(Center, CertificateCS47) {
  const auto g = CsGroup::build({cyclic(4), 7});
  EXPECT_EQ(g.dims(), (std::vector<std::size_t>{4, 6, 20, 60}));
  EXPECT_EQ(g.rank(), independent_rank(g));
  Limits limits;
  limits.threads = 4;
  EXPECT_TRUE(center_certificate(g, limits).passed());
}

TEST(Center, GeneratorsDetectCentralElements) {
  // The identity commutes with everything; a nontrivial pure-Q element does not.
  const auto& g = cs35();
  const auto gens = g.generators();
  const auto q = g.from_q({2, 1, 1});
  bool moved = false;
  for (const auto& y : gens) moved |= !(g.multiply(q, y) == g.multiply(y, q));
  EXPECT_TRUE(moved);
}
