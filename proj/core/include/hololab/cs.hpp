#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hololab/group.hpp"
#include "hololab/liealg.hpp"
#include "hololab/limits.hpp"

namespace hololab {

/// T's elements play the generators t_1..t_n, numbered by table index, so
/// t_1 is T's identity.
struct CsParams {
  GroupTable t;
  std::uint32_t p = 0;
};

using QTuple = std::vector<std::uint32_t>;

struct CsElement {
  LieVector lie;
  QTuple q;
  friend bool operator==(const CsElement&, const CsElement&) = default;
};

/// |CS(T,p)| = p^p_exponent · (p-1)^q_exponent
struct FactoredOrder {
  std::uint32_t p = 0;
  std::size_t p_exponent = 0;
  std::size_t q_exponent = 0;
  std::string to_string() const;
};

struct QFixedLevel {
  std::size_t degree = 0;
  std::size_t dimension = 0;
  /// Row-reduced spanning vectors (taken modulo the relation space at the
  /// top degree).
  std::vector<LieVector> basis;
};

struct CenterCertificate {
  std::vector<QFixedLevel> q_fixed_levels;
  bool q_fixed_all_zero = false;
  /// Size of the kernel of Q acting on the degree-1 component.
  std::size_t degree1_kernel = 0;
  bool faithful_degree1 = false;
  bool q_abelian = false;
  /// Conclusion of the semidirect-center argument from the three facts above.
  bool semidirect_center_trivial = false;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  /// Sampled nonidentity elements commuting with every generator.
  std::size_t witnesses = 0;

  bool passed() const {
    return q_fixed_all_zero && faithful_degree1 && q_abelian && semidirect_center_trivial &&
           witnesses == 0;
  }
};

/// P ⋊ Q where P is the class-n free exponent-p group on t_1..t_n modulo the
/// degree-n relations, modelled by truncated BCH on the Hall-basis Lie algebra,
/// and Q = (F_p^×)^n scales each basic commutator by its weight.
///
/// The action is a left action: act(q, v) scales the coefficient of a basic
/// commutator of weight (m_1..m_n) by ∏ q_i^{m_i}.
class CsGroup {
 public:
  /// Throws TTooSmall (|T| <= 2), CapExceeded (|T| > 4), BadModulus (p not a
  /// prime), PTooSmall (p <= |T|+1).
  static CsGroup build(const CsParams& params);

  const CsParams& params() const { return params_; }
  std::size_t n() const { return n_; }
  std::uint32_t p() const { return params_.p; }
  const std::shared_ptr<const LieAlgebra>& algebra() const { return alg_; }
  const HallBasis& basis() const { return alg_->basis(); }
  std::vector<std::size_t> dims() const { return basis().dims(); }
  std::size_t dimension() const { return alg_->dimension(); }
  /// Row-reduced relation basis; pivots()[i] is the pivot column of row i.
  const std::vector<LieVector>& relation_space() const { return relations_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::size_t rank() const { return relations_.size(); }
  FactoredOrder order() const;

  /// The right-nested bracket [t*t_1, t*t_2, ..., t*t_{n-1}, t*t_1].
  LieVector n_fold_commutator_vector(Elem t) const;

  std::uint32_t weight_scalar(const QTuple& a, std::size_t basis_index) const;
  LieVector q_act(const QTuple& a, const LieVector& v) const;
  /// Eliminates the relation pivots from v.
  LieVector canonicalize(LieVector v) const;

  CsElement identity() const;
  /// Throws GroupMismatch for elements of a different CS group or invalid q.
  CsElement multiply(const CsElement& x, const CsElement& y) const;
  CsElement inverse(const CsElement& x) const;
  CsElement make_element(const LieVector& lie, const QTuple& q) const;
  CsElement from_lie(const LieVector& lie) const;
  CsElement from_q(const QTuple& q) const;
  bool is_identity(const CsElement& x) const;

  /// (t_i, 1) for each i, and (0, g e_i) with g a primitive root mod p.
  std::vector<CsElement> generators() const;
  /// Uniform sample; canonical Lie part, q entries in [1, p).
  template <typename Rng>
  CsElement random_element(Rng& rng) const;

  /// Q-fixed subspace of the degree-k component (modulo the relations when
  /// k = n). 1 <= k <= n.
  QFixedLevel q_fixed_subspace(std::size_t k) const;

 private:
  CsGroup() = default;
  void check(const CsElement& x) const;

  CsParams params_;
  std::size_t n_ = 0;
  std::shared_ptr<const LieAlgebra> alg_;
  std::vector<LieVector> relations_;
  std::vector<std::size_t> pivots_;
};

/// Weight multiplicities m with every m_i ≡ 0 mod (p-1), i.e. fixed by all of
/// (F_p^×)^n. Valid for any prime p, including ones below the CS range.
bool weight_fixed_by_q(const std::vector<std::size_t>& weight, std::uint32_t p);
/// Degree-k basis indices of `basis` whose weight is fixed by (F_p^×)^n.
std::vector<std::size_t> q_fixed_basis_elements(const HallBasis& basis, std::size_t k,
                                                std::uint32_t p);

std::uint32_t primitive_root(std::uint32_t p);

/// Runs all four checks; throws CertificateFailed if any fails.
CenterCertificate center_certificate(const CsGroup& g, const Limits& limits = {},
                                     std::size_t samples = 1000);
/// Same checks without throwing.
CenterCertificate compute_center_certificate(const CsGroup& g, const Limits& limits = {},
                                             std::size_t samples = 1000);

template <typename Rng>
CsElement CsGroup::random_element(Rng& rng) const {
  LieVector v = LieVector::zero(alg_);
  for (std::size_t i = 0; i < v.size(); ++i) v.set(i, static_cast<std::int64_t>(rng() % p()));
  QTuple q(n_);
  for (auto& a : q) a = static_cast<std::uint32_t>(1 + rng() % (p() - 1));
  return {canonicalize(std::move(v)), std::move(q)};
}

}  // namespace hololab
