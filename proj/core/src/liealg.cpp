#include "hololab/liealg.hpp"

#include <algorithm>
#include <stdexcept>

#include "hololab/error.hpp"

namespace hololab {

namespace {

constexpr std::uint32_t kMaxModulus = 1u << 16;

void add_scaled(IntCombination& acc, const IntCombination& v, std::int64_t s) {
  for (const auto& [k, c] : v) {
    const std::int64_t next = acc[k] + s * c;
    if (next == 0) {
      acc.erase(k);
    } else {
      acc[k] = next;
    }
  }
}

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  const std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

std::shared_ptr<const HallBasis> HallBasis::create(std::size_t n, std::size_t c) {
  if (n < 1 || n > kMaxRank || c < 1 || c > kMaxClass) {
    throw Error(ErrorCode::CapExceeded, "Hall basis supports 1 <= n <= 6 and 1 <= c <= 4");
  }
  return std::shared_ptr<const HallBasis>(new HallBasis(n, c));
}

HallBasis::HallBasis(std::size_t n, std::size_t c) : n_(n), c_(c) {
  for (std::size_t i = 0; i < n; ++i) {
    HallBasisElement e;
    e.generator = static_cast<int>(i);
    e.weight.assign(n, 0);
    e.weight[i] = 1;
    elements_.push_back(std::move(e));
  }
  for (std::size_t k = 2; k <= c; ++k) {
    std::vector<std::pair<int, int>> candidates;
    const std::size_t built = elements_.size();
    for (std::size_t u = 0; u < built; ++u) {
      const std::size_t du = elements_[u].degree;
      if (du >= k) continue;
      for (std::size_t v = 0; v < u; ++v) {
        if (elements_[v].degree != k - du) continue;
        const auto& eu = elements_[u];
        if (eu.generator >= 0 || static_cast<std::size_t>(eu.right) <= v) {
          candidates.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
      }
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& [u, v] : candidates) {
      HallBasisElement e;
      e.left = u;
      e.right = v;
      e.degree = k;
      e.weight.assign(n, 0);
      for (std::size_t i = 0; i < n; ++i) e.weight[i] = elements_[u].weight[i] + elements_[v].weight[i];
      index_of_pair_[{u, v}] = elements_.size();
      elements_.push_back(std::move(e));
    }
  }

  const std::size_t d = elements_.size();
  structure_.assign(d * d, {});
  std::vector<char> state(d * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) rewrite(i, j, state);
}

IntCombination HallBasis::rewrite(std::size_t i, std::size_t j, std::vector<char>& state) {
  if (i == j || elements_[i].degree + elements_[j].degree > c_) return {};
  const std::size_t slot = i * elements_.size() + j;
  if (state[slot] == 2) return structure_[slot];
  if (state[slot] == 1) throw std::logic_error("Hall rewriting did not terminate");
  state[slot] = 1;
  IntCombination r;
  const auto& ei = elements_[i];
  if (i < j) {
    add_scaled(r, rewrite(j, i, state), -1);
  } else if (ei.generator >= 0 || static_cast<std::size_t>(ei.right) <= j) {
    r[index_of_pair_.at({static_cast<int>(i), static_cast<int>(j)})] = 1;
  } else {
    // [[a,b],v] = [a,[b,v]] - [b,[a,v]]
    const auto a = static_cast<std::size_t>(ei.left), b = static_cast<std::size_t>(ei.right);
    add_scaled(r, bracket_with(a, rewrite(b, j, state), state), 1);
    add_scaled(r, bracket_with(b, rewrite(a, j, state), state), -1);
  }
  structure_[slot] = r;
  state[slot] = 2;
  return r;
}

IntCombination HallBasis::bracket_with(std::size_t a, const IntCombination& v,
                                       std::vector<char>& state) {
  IntCombination r;
  for (const auto& [k, c] : v) add_scaled(r, rewrite(a, k, state), c);
  return r;
}

std::vector<std::size_t> HallBasis::dims() const {
  std::vector<std::size_t> out(c_, 0);
  for (const auto& e : elements_) ++out[e.degree - 1];
  return out;
}

std::pair<std::size_t, std::size_t> HallBasis::degree_range(std::size_t k) const {
  std::size_t begin = elements_.size(), end = elements_.size();
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].degree == k && begin == elements_.size()) begin = i;
    if (elements_[i].degree > k) {
      end = i;
      break;
    }
  }
  if (begin == elements_.size()) return {end, end};
  return {begin, end};
}

std::string HallBasis::to_string(std::size_t i) const {
  const auto& e = elements_[i];
  if (e.generator >= 0) return "t" + std::to_string(e.generator + 1);
  return "[" + to_string(static_cast<std::size_t>(e.left)) + "," +
         to_string(static_cast<std::size_t>(e.right)) + "]";
}

std::uint64_t witt_dimension(std::uint64_t n, std::uint64_t k) {
  auto mobius = [](std::uint64_t m) {
    int sign = 1;
    for (std::uint64_t q = 2; q * q <= m; ++q) {
      if (m % q) continue;
      m /= q;
      if (m % q == 0) return 0;
      sign = -sign;
    }
    return m > 1 ? -sign : sign;
  };
  auto ipow = [](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
  };
  std::int64_t total = 0;
  for (std::uint64_t d = 1; d <= k; ++d)
    if (k % d == 0) total += mobius(d) * static_cast<std::int64_t>(ipow(n, k / d));
  return static_cast<std::uint64_t>(total) / k;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

std::shared_ptr<const LieAlgebra> LieAlgebra::create(std::shared_ptr<const HallBasis> basis,
                                                     std::uint32_t p) {
  if (!is_prime(p) || p >= kMaxModulus) {
    throw Error(ErrorCode::BadModulus, std::to_string(p) + " is not a supported prime");
  }
  return std::shared_ptr<const LieAlgebra>(new LieAlgebra(std::move(basis), p));
}

std::shared_ptr<const LieAlgebra> LieAlgebra::create(std::size_t n, std::size_t c, std::uint32_t p) {
  return create(HallBasis::create(n, c), p);
}

LieAlgebra::LieAlgebra(std::shared_ptr<const HallBasis> basis, std::uint32_t p)
    : basis_(std::move(basis)), p_(p) {
  const std::size_t d = basis_->size();
  terms_.resize(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [k, c] : basis_->bracket(i, j)) {
        const std::uint32_t r = reduce(c, p_);
        if (r) terms_[i * d + j].push_back({static_cast<std::uint32_t>(k), r});
      }
}

std::uint32_t LieAlgebra::inverse(std::uint32_t x) const {
  if (x % p_ == 0) throw Error(ErrorCode::BadModulus, "zero has no inverse");
  return pow_mod(x, p_ - 2, p_);
}

LieVector LieVector::zero(std::shared_ptr<const LieAlgebra> alg) {
  LieVector v;
  v.coeffs_.assign(alg->dimension(), 0);
  v.alg_ = std::move(alg);
  return v;
}

LieVector LieVector::basis_vector(std::shared_ptr<const LieAlgebra> alg, std::size_t index,
                                  std::uint32_t coeff) {
  LieVector v = zero(std::move(alg));
  v.set(index, coeff);
  return v;
}

LieVector LieVector::generator(std::shared_ptr<const LieAlgebra> alg, std::size_t i) {
  if (i >= alg->basis().rank()) throw Error(ErrorCode::InvalidParameter, "generator index out of range");
  return basis_vector(std::move(alg), i);
}

LieVector LieVector::from_sparse(std::shared_ptr<const LieAlgebra> alg,
                                 const std::vector<std::pair<std::size_t, std::int64_t>>& coeffs) {
  LieVector v = zero(std::move(alg));
  for (const auto& [i, c] : coeffs) {
    if (i >= v.size()) throw Error(ErrorCode::InvalidParameter, "basis index out of range");
    v.set(i, static_cast<std::int64_t>(v[i]) + c);
  }
  return v;
}

void LieVector::set(std::size_t i, std::int64_t value) { coeffs_[i] = reduce(value, modulus()); }

std::vector<std::pair<std::size_t, std::uint32_t>> LieVector::nonzeros() const {
  std::vector<std::pair<std::size_t, std::uint32_t>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i]) out.emplace_back(i, coeffs_[i]);
  return out;
}

bool LieVector::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint32_t c) { return c == 0; });
}

LieVector LieVector::component(std::size_t k) const {
  LieVector out = zero(alg_);
  const auto [b, e] = alg_->basis().degree_range(k);
  for (std::size_t i = b; i < e; ++i) out.coeffs_[i] = coeffs_[i];
  return out;
}

std::size_t LieVector::min_degree() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i]) return alg_->basis()[i].degree;
  return 0;
}

void LieVector::check_compatible(const LieVector& o) const {
  if (alg_ != o.alg_ &&
      (!alg_ || !o.alg_ || alg_->basis_ptr() != o.alg_->basis_ptr() || modulus() != o.modulus())) {
    throw Error(ErrorCode::BasisMismatch, "vectors live in different Lie algebras");
  }
}

LieVector& LieVector::operator+=(const LieVector& o) {
  check_compatible(o);
  const std::uint32_t p = modulus();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const std::uint32_t s = coeffs_[i] + o.coeffs_[i];
    coeffs_[i] = s >= p ? s - p : s;
  }
  return *this;
}

LieVector& LieVector::operator-=(const LieVector& o) {
  check_compatible(o);
  const std::uint32_t p = modulus();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] = coeffs_[i] >= o.coeffs_[i] ? coeffs_[i] - o.coeffs_[i] : coeffs_[i] + p - o.coeffs_[i];
  }
  return *this;
}

LieVector& LieVector::operator*=(std::uint32_t s) {
  const std::uint64_t p = modulus();
  const std::uint64_t r = s % p;
  for (auto& c : coeffs_) c = static_cast<std::uint32_t>(c * r % p);
  return *this;
}

LieVector LieVector::operator-() const {
  LieVector out = zero(alg_);
  return out -= *this;
}

bool operator==(const LieVector& a, const LieVector& b) {
  a.check_compatible(b);
  return a.coeffs_ == b.coeffs_;
}

LieVector bracket(const LieVector& u, const LieVector& v) {
  if (u.algebra_ptr() != v.algebra_ptr() &&
      (u.algebra().basis_ptr() != v.algebra().basis_ptr() || u.modulus() != v.modulus())) {
    throw Error(ErrorCode::BasisMismatch, "vectors live in different Lie algebras");
  }
  const auto& alg = u.algebra();
  const auto& basis = alg.basis();
  const std::uint64_t p = alg.modulus();
  const std::size_t c = basis.max_class();
  std::vector<std::uint64_t> acc(alg.dimension(), 0);
  const auto un = u.nonzeros();
  const auto vn = v.nonzeros();
  for (const auto& [i, ui] : un) {
    const std::size_t di = basis[i].degree;
    for (const auto& [j, vj] : vn) {
      if (di + basis[j].degree > c) break;  // nonzeros come in degree order
      const std::uint64_t uv = std::uint64_t{ui} * vj % p;
      for (const auto& t : alg.bracket_terms(i, j)) acc[t.index] += uv * t.coeff;
    }
  }
  LieVector out = LieVector::zero(u.algebra_ptr());
  for (std::size_t k = 0; k < acc.size(); ++k) out.set(k, static_cast<std::int64_t>(acc[k] % p));
  return out;
}

LieVector nested_bracket(const std::vector<LieVector>& entries) {
  if (entries.empty()) throw Error(ErrorCode::InvalidParameter, "empty bracket");
  LieVector acc = entries.back();
  for (std::size_t i = entries.size() - 1; i > 0; --i) acc = bracket(entries[i - 1], acc);
  return acc;
}

LieVector bch_multiply(const LieVector& u, const LieVector& v) {
  const auto& alg = u.algebra();
  const std::uint32_t p = alg.modulus();
  if (p == 2 || p == 3) throw Error(ErrorCode::BadModulus, "BCH needs p >= 5");
  const std::uint32_t half = alg.inverse(2), twelfth = alg.inverse(12), twentyfourth = alg.inverse(24);
  const LieVector w = bracket(u, v);
  const LieVector uw = bracket(u, w);
  LieVector out = u + v;
  out += half * w;
  out += twelfth * uw;
  out -= twelfth * bracket(v, w);
  out -= twentyfourth * bracket(v, uw);
  return out;
}

LieVector bch_inverse(const LieVector& u) {
  if (u.modulus() == 2 || u.modulus() == 3) throw Error(ErrorCode::BadModulus, "BCH needs p >= 5");
  return -u;
}

LieVector bch_power(const LieVector& u, std::uint64_t m) {
  LieVector result = LieVector::zero(u.algebra_ptr());
  LieVector base = u;
  while (m) {
    if (m & 1) result = bch_multiply(result, base);
    base = bch_multiply(base, base);
    m >>= 1;
  }
  return result;
}

}  // namespace hololab
