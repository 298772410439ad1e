#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace hololab {

/// Basic commutator [left, right] in the Hall basis; left/right are -1 for
/// generators.
struct HallBasisElement {
  int left = -1;
  int right = -1;
  /// 0-based generator index for degree-1 elements, -1 otherwise.
  int generator = -1;
  std::size_t degree = 1;
  /// weight[i] = number of leaves equal to generator i
  std::vector<std::size_t> weight;
};

/// Integer linear combination of basis elements, keyed by basis index.
using IntCombination = std::map<std::size_t, std::int64_t>;

/// Hall basis of the free Lie algebra on n generators truncated at class c.
///
/// Generators x_1 < ... < x_n come first; higher-degree basic commutators are
/// ordered by degree, then by (left index, right index). [u, v] is basic when
/// u > v and, if u = [u1, u2], u2 <= v. Brackets of basis elements are
/// rewritten into the basis once, over the integers, at construction.
class HallBasis {
 public:
  static constexpr std::size_t kMaxRank = 6;
  static constexpr std::size_t kMaxClass = 4;

  /// Throws CapExceeded outside 1 <= n <= 6, 1 <= c <= 4.
  static std::shared_ptr<const HallBasis> create(std::size_t n, std::size_t c);

  std::size_t rank() const { return n_; }
  std::size_t max_class() const { return c_; }
  std::size_t size() const { return elements_.size(); }
  const HallBasisElement& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<HallBasisElement>& elements() const { return elements_; }

  /// dims()[k-1] = number of basis elements of degree k
  std::vector<std::size_t> dims() const;
  /// Index range [begin, end) of degree-k elements.
  std::pair<std::size_t, std::size_t> degree_range(std::size_t k) const;

  /// [b_i, b_j] in the basis (empty above class c).
  const IntCombination& bracket(std::size_t i, std::size_t j) const {
    return structure_[i * elements_.size() + j];
  }
  /// Nested bracket string over t_1..t_n, e.g. "[[t2,t1],t1]".
  std::string to_string(std::size_t i) const;

 private:
  HallBasis(std::size_t n, std::size_t c);
  IntCombination rewrite(std::size_t i, std::size_t j, std::vector<char>& state);
  IntCombination bracket_with(std::size_t a, const IntCombination& v, std::vector<char>& state);

  std::size_t n_;
  std::size_t c_;
  std::vector<HallBasisElement> elements_;
  std::map<std::pair<int, int>, std::size_t> index_of_pair_;
  std::vector<IntCombination> structure_;
};

/// (1/k) Σ_{d | k} μ(d) n^(k/d)
std::uint64_t witt_dimension(std::uint64_t n, std::uint64_t k);

/// The Hall-basis Lie algebra reduced modulo a prime p, with structure
/// constants cached mod p.
class LieAlgebra {
 public:
  /// Throws BadModulus unless p is a prime below 2^16.
  static std::shared_ptr<const LieAlgebra> create(std::shared_ptr<const HallBasis> basis,
                                                  std::uint32_t p);
  static std::shared_ptr<const LieAlgebra> create(std::size_t n, std::size_t c, std::uint32_t p);

  const HallBasis& basis() const { return *basis_; }
  const std::shared_ptr<const HallBasis>& basis_ptr() const { return basis_; }
  std::uint32_t modulus() const { return p_; }
  std::size_t dimension() const { return basis_->size(); }

  struct Term {
    std::uint32_t index;
    std::uint32_t coeff;
  };
  const std::vector<Term>& bracket_terms(std::size_t i, std::size_t j) const {
    return terms_[i * basis_->size() + j];
  }
  std::uint32_t inverse(std::uint32_t x) const;

 private:
  LieAlgebra(std::shared_ptr<const HallBasis> basis, std::uint32_t p);

  std::shared_ptr<const HallBasis> basis_;
  std::uint32_t p_;
  std::vector<std::vector<Term>> terms_;
};

bool is_prime(std::uint64_t p);

/// An element of a LieAlgebra: one coefficient in [0, p) per basis element.
class LieVector {
 public:
  LieVector() = default;
  static LieVector zero(std::shared_ptr<const LieAlgebra> alg);
  static LieVector basis_vector(std::shared_ptr<const LieAlgebra> alg, std::size_t index,
                                std::uint32_t coeff = 1);
  /// The 0-based generator x_{i+1}.
  static LieVector generator(std::shared_ptr<const LieAlgebra> alg, std::size_t i);
  /// Builds from sparse (index, value) pairs; values are reduced mod p.
  static LieVector from_sparse(std::shared_ptr<const LieAlgebra> alg,
                               const std::vector<std::pair<std::size_t, std::int64_t>>& coeffs);

  const LieAlgebra& algebra() const { return *alg_; }
  const std::shared_ptr<const LieAlgebra>& algebra_ptr() const { return alg_; }
  std::uint32_t modulus() const { return alg_->modulus(); }
  std::size_t size() const { return coeffs_.size(); }

  std::uint32_t operator[](std::size_t i) const { return coeffs_[i]; }
  void set(std::size_t i, std::int64_t value);
  const std::vector<std::uint32_t>& coefficients() const { return coeffs_; }
  /// Nonzero coefficients in basis order.
  std::vector<std::pair<std::size_t, std::uint32_t>> nonzeros() const;
  bool is_zero() const;
  /// Projection onto the degree-k part.
  LieVector component(std::size_t k) const;
  /// Lowest degree with a nonzero coefficient (0 for the zero vector).
  std::size_t min_degree() const;

  LieVector& operator+=(const LieVector& o);
  LieVector& operator-=(const LieVector& o);
  LieVector& operator*=(std::uint32_t s);
  friend LieVector operator+(LieVector a, const LieVector& b) { return a += b; }
  friend LieVector operator-(LieVector a, const LieVector& b) { return a -= b; }
  friend LieVector operator*(std::uint32_t s, LieVector a) { return a *= s; }
  LieVector operator-() const;
  friend bool operator==(const LieVector& a, const LieVector& b);

 private:
  void check_compatible(const LieVector& o) const;

  std::shared_ptr<const LieAlgebra> alg_;
  std::vector<std::uint32_t> coeffs_;
};

/// Bilinear extension of the basis brackets. Throws BasisMismatch.
LieVector bracket(const LieVector& u, const LieVector& v);
/// Right-nested [v_0, [v_1, ..., v_{k-1}]].
LieVector nested_bracket(const std::vector<LieVector>& entries);

/// u ∘ v = u + v + ½[u,v] + (1/12)[u,[u,v]] - (1/12)[v,[u,v]] - (1/24)[v,[u,[u,v]]]
/// truncated at class c <= 4. Throws BadModulus for p in {2, 3}.
LieVector bch_multiply(const LieVector& u, const LieVector& v);
LieVector bch_inverse(const LieVector& u);
/// u ∘ u ∘ ... ∘ u (m factors); the identity for m = 0.
LieVector bch_power(const LieVector& u, std::uint64_t m);

}  // namespace hololab
