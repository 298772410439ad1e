#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hololab/group.hpp"
#include "hololab/limits.hpp"

namespace hololab {

using Point = std::uint16_t;

/// A bijection of {0, ..., d-1}. Composition is right to left:
/// (a * b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidParameter unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);
  static Permutation identity(std::size_t degree);
  /// Trusted construction without the bijectivity check.
  static Permutation unchecked(std::vector<Point> images);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  bool is_even() const;
  std::size_t fixed_points() const;
  /// Cycle notation over 0-based points, "()" for the identity.
  std::string cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// sigma^-1 * tau * sigma
Permutation conjugate(const Permutation& tau, const Permutation& sigma);

/// A subgroup of Sym(d) held with its full element list, sorted
/// lexicographically by image array so the identity comes first.
class PermSubgroup {
 public:
  PermSubgroup() = default;
  /// Closes the generators; throws CapExceeded beyond limits.materialize_cap.
  static PermSubgroup generate(std::size_t degree, std::vector<Permutation> generators,
                               const Limits& limits = {});
  /// Adopts an element list that must already be a group (checked).
  static PermSubgroup from_elements(std::size_t degree, std::vector<Permutation> elements);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }

  bool contains(const Permutation& p) const;
  /// Position of p in elements(), or order() when absent.
  std::size_t index_of(const Permutation& p) const;
  bool is_subgroup_of(const PermSubgroup& other) const;
  bool same_elements(const PermSubgroup& other) const { return elements_ == other.elements_; }

  /// Multiplication table over elements(), identity at index 0.
  GroupTable to_group_table(std::string name = {}) const;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

/// Generators picked from `elements` in order, skipping any already in the
/// closure of those chosen.
std::vector<Permutation> first_fit_generators(std::size_t degree,
                                              const std::vector<Permutation>& elements);

/// Subgroup of `group` (as PermSubgroup) given by element positions.
PermSubgroup subgroup_from_indices(const PermSubgroup& group, const Subgroup& s);

}  // namespace hololab
