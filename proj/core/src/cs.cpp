#include "hololab/cs.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "hololab/error.hpp"

namespace hololab {

namespace {

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

/// In-place reduced row echelon form; returns the pivot columns. Zero rows
/// are dropped.
std::vector<std::size_t> row_reduce(std::vector<LieVector>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const auto& alg = rows.front().algebra();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < alg.dimension() && rank < rows.size(); ++col) {
    std::size_t r = rank;
    while (r < rows.size() && rows[r][col] == 0) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[rank], rows[r]);
    rows[rank] *= alg.inverse(rows[rank][col]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && rows[i][col] != 0) rows[i] -= rows[i][col] * rows[rank];
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

}  // namespace

std::string FactoredOrder::to_string() const {
  return std::to_string(p) + "^" + std::to_string(p_exponent) + "*" + std::to_string(p - 1) + "^" +
         std::to_string(q_exponent);
}

bool weight_fixed_by_q(const std::vector<std::size_t>& weight, std::uint32_t p) {
  return std::all_of(weight.begin(), weight.end(), [p](std::size_t m) { return m % (p - 1) == 0; });
}

std::vector<std::size_t> q_fixed_basis_elements(const HallBasis& basis, std::size_t k,
                                                std::uint32_t p) {
  std::vector<std::size_t> out;
  const auto [b, e] = basis.degree_range(k);
  for (std::size_t i = b; i < e; ++i)
    if (weight_fixed_by_q(basis[i].weight, p)) out.push_back(i);
  return out;
}

std::uint32_t primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  std::vector<std::uint32_t> factors;
  std::uint32_t m = p - 1;
  for (std::uint32_t q = 2; q * q <= m; ++q) {
    if (m % q) continue;
    factors.push_back(q);
    while (m % q == 0) m /= q;
  }
  if (m > 1) factors.push_back(m);
  for (std::uint32_t g = 2; g < p; ++g) {
    if (std::all_of(factors.begin(), factors.end(),
                    [&](std::uint32_t q) { return pow_mod(g, (p - 1) / q, p) != 1; }))
      return g;
  }
  throw Error(ErrorCode::BadModulus, "no primitive root");
}

CsGroup CsGroup::build(const CsParams& params) {
  const std::size_t n = params.t.order();
  if (n <= 2) throw Error(ErrorCode::TTooSmall, "CS(T,p) needs |T| > 2");
  if (n > HallBasis::kMaxClass) throw Error(ErrorCode::CapExceeded, "CS(T,p) supports |T| <= 4");
  if (!is_prime(params.p)) throw Error(ErrorCode::BadModulus, std::to_string(params.p) + " is not prime");
  if (params.p <= n + 1) throw Error(ErrorCode::PTooSmall, "CS(T,p) needs p > |T| + 1");

  CsGroup g;
  g.params_ = params;
  g.n_ = n;
  g.alg_ = LieAlgebra::create(n, n, params.p);
  std::vector<LieVector> rows;
  for (Elem t = 0; t < n; ++t) rows.push_back(g.n_fold_commutator_vector(t));
  g.pivots_ = row_reduce(rows);
  g.relations_ = std::move(rows);
  return g;
}

FactoredOrder CsGroup::order() const { return {p(), dimension() - rank(), n_}; }

LieVector CsGroup::n_fold_commutator_vector(Elem t) const {
  std::vector<LieVector> entries;
  for (Elem i = 0; i + 1 < n_; ++i)
    entries.push_back(LieVector::generator(alg_, params_.t.mul(t, i)));
  entries.push_back(LieVector::generator(alg_, params_.t.mul(t, 0)));
  return nested_bracket(entries);
}

std::uint32_t CsGroup::weight_scalar(const QTuple& a, std::size_t basis_index) const {
  const auto& w = basis()[basis_index].weight;
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < n_; ++i) s = s * pow_mod(a[i], w[i], p()) % p();
  return static_cast<std::uint32_t>(s);
}

LieVector CsGroup::q_act(const QTuple& a, const LieVector& v) const {
  LieVector out = v;
  for (const auto& [i, c] : v.nonzeros())
    out.set(i, static_cast<std::int64_t>(std::uint64_t{c} * weight_scalar(a, i) % p()));
  return out;
}

LieVector CsGroup::canonicalize(LieVector v) const {
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    const std::uint32_t c = v[pivots_[i]];
    if (c) v -= c * relations_[i];
  }
  return v;
}

void CsGroup::check(const CsElement& x) const {
  if (!x.lie.algebra_ptr() || x.lie.algebra_ptr() != alg_ || x.q.size() != n_ ||
      std::any_of(x.q.begin(), x.q.end(), [&](std::uint32_t a) { return a == 0 || a >= p(); })) {
    throw Error(ErrorCode::GroupMismatch, "element does not belong to this CS group");
  }
}

CsElement CsGroup::identity() const { return {LieVector::zero(alg_), QTuple(n_, 1)}; }

CsElement CsGroup::make_element(const LieVector& lie, const QTuple& q) const {
  CsElement x{lie, q};
  check(x);
  x.lie = canonicalize(std::move(x.lie));
  return x;
}

CsElement CsGroup::from_lie(const LieVector& lie) const { return make_element(lie, QTuple(n_, 1)); }

CsElement CsGroup::from_q(const QTuple& q) const { return make_element(LieVector::zero(alg_), q); }

CsElement CsGroup::multiply(const CsElement& x, const CsElement& y) const {
  check(x);
  check(y);
  QTuple q(n_);
  for (std::size_t i = 0; i < n_; ++i)
    q[i] = static_cast<std::uint32_t>(std::uint64_t{x.q[i]} * y.q[i] % p());
  return {canonicalize(bch_multiply(x.lie, q_act(x.q, y.lie))), std::move(q)};
}

CsElement CsGroup::inverse(const CsElement& x) const {
  check(x);
  QTuple qi(n_);
  for (std::size_t i = 0; i < n_; ++i) qi[i] = alg_->inverse(x.q[i]);
  return {canonicalize(q_act(qi, -x.lie)), std::move(qi)};
}

bool CsGroup::is_identity(const CsElement& x) const { return x == identity(); }

std::vector<CsElement> CsGroup::generators() const {
  std::vector<CsElement> out;
  for (std::size_t i = 0; i < n_; ++i) out.push_back(from_lie(LieVector::generator(alg_, i)));
  const std::uint32_t g = primitive_root(p());
  for (std::size_t i = 0; i < n_; ++i) {
    QTuple q(n_, 1);
    q[i] = g;
    out.push_back(from_q(q));
  }
  return out;
}

QFixedLevel CsGroup::q_fixed_subspace(std::size_t k) const {
  if (k < 1 || k > n_) throw Error(ErrorCode::InvalidParameter, "degree out of range");
  std::vector<LieVector> rows;
  for (std::size_t i : q_fixed_basis_elements(basis(), k, p())) {
    rows.push_back(k == n_ ? canonicalize(LieVector::basis_vector(alg_, i))
                           : LieVector::basis_vector(alg_, i));
  }
  row_reduce(rows);
  QFixedLevel level;
  level.degree = k;
  level.dimension = rows.size();
  level.basis = std::move(rows);
  return level;
}

CenterCertificate compute_center_certificate(const CsGroup& g, const Limits& limits,
                                             std::size_t samples) {
  CenterCertificate cert;
  const std::size_t n = g.n();
  const std::uint32_t p = g.p();

  cert.q_fixed_all_zero = true;
  for (std::size_t k = 1; k <= n; ++k) {
    cert.q_fixed_levels.push_back(g.q_fixed_subspace(k));
    if (cert.q_fixed_levels.back().dimension != 0) cert.q_fixed_all_zero = false;
  }

  // Enumerate Q and count the tuples acting trivially on every generator.
  QTuple a(n, 1);
  std::size_t kernel = 0;
  for (;;) {
    bool trivial = true;
    for (std::size_t i = 0; i < n && trivial; ++i) {
      const auto v = LieVector::generator(g.algebra(), i);
      trivial = g.q_act(a, v) == v;
    }
    kernel += trivial;
    std::size_t i = 0;
    while (i < n && a[i] == p - 1) a[i++] = 1;
    if (i == n) break;
    ++a[i];
  }
  cert.degree1_kernel = kernel;
  cert.faithful_degree1 = kernel == 1;

  const auto gens = g.generators();
  cert.q_abelian = true;
  for (std::size_t i = n; i < gens.size(); ++i)
    for (std::size_t j = n; j < gens.size(); ++j)
      if (!(g.multiply(gens[i], gens[j]) == g.multiply(gens[j], gens[i]))) cert.q_abelian = false;

  // A central element (u, q) must have u fixed by Q, so u = 0 by the level
  // check; q then acts trivially on P, so q = 1 by faithfulness.
  cert.semidirect_center_trivial = cert.q_fixed_all_zero && cert.faithful_degree1 && cert.q_abelian;

  cert.seed = limits.seed;
  cert.samples = samples;
  const unsigned workers = std::max(1u, limits.threads);
  std::vector<std::size_t> central(workers, 0);
  auto work = [&](unsigned w) {
    for (std::size_t s = w; s < samples; s += workers) {
      std::seed_seq seq{limits.seed, static_cast<std::uint64_t>(s)};
      std::mt19937_64 rng(seq);
      CsElement x = g.random_element(rng);
      while (g.is_identity(x)) x = g.random_element(rng);
      const bool commutes_with_all = std::all_of(gens.begin(), gens.end(), [&](const CsElement& y) {
        return g.multiply(x, y) == g.multiply(y, x);
      });
      central[w] += commutes_with_all;
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (auto c : central) cert.witnesses += c;
  return cert;
}

CenterCertificate center_certificate(const CsGroup& g, const Limits& limits, std::size_t samples) {
  CenterCertificate cert = compute_center_certificate(g, limits, samples);
  if (!cert.passed()) throw Error(ErrorCode::CertificateFailed, "center certificate failed");
  return cert;
}

}  // namespace hololab
