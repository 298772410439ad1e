#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hololab/limits.hpp"

namespace hololab {

using Elem = std::uint32_t;

/// A finite group given by its full multiplication table.
///
/// Element 0 is always the identity and mul(a, b) is the product a·b with the
/// row element on the left. Instances are immutable and share their table, so
/// copies are cheap.
class GroupTable {
 public:
  /// The trivial group.
  GroupTable();
  /// Validates a square table and relabels so the identity sits at index 0.
  /// Throws NotLatinSquare, NoIdentity or NotAssociative.
  static GroupTable make(const std::vector<std::vector<Elem>>& rows,
                         std::string name = {});
  /// Same as make() for a row-major flattened table.
  static GroupTable from_flat(std::size_t order, std::vector<Elem> flat,
                              std::string name = {});

  std::size_t order() const { return impl_->order; }
  const std::string& name() const { return impl_->name; }
  GroupTable renamed(std::string name) const;

  static constexpr Elem identity() { return 0; }
  Elem mul(Elem a, Elem b) const { return impl_->table[a * impl_->order + b]; }
  Elem inv(Elem a) const { return impl_->inverse[a]; }
  Elem conj(Elem x, Elem g) const { return mul(inv(g), mul(x, g)); }  // g^-1 x g
  Elem commutator(Elem a, Elem b) const {  // a^-1 b^-1 a b
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  Elem power(Elem a, std::uint64_t k) const;
  std::size_t element_order(Elem a) const { return impl_->element_orders[a]; }
  bool is_abelian() const;

  std::span<const Elem> row(Elem a) const {
    return {impl_->table.data() + a * impl_->order, impl_->order};
  }
  std::vector<std::vector<Elem>> rows() const;

  /// True when both share storage or have identical tables.
  bool same_table(const GroupTable& other) const;

 private:
  struct Impl {
    std::size_t order = 0;
    std::vector<Elem> table;
    std::vector<Elem> inverse;
    std::vector<std::size_t> element_orders;
    std::string name;
  };

  explicit GroupTable(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

/// A subgroup recorded as the sorted list of its element indices.
struct Subgroup {
  std::vector<Elem> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(Elem x) const;
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend auto operator<=>(const Subgroup& a, const Subgroup& b) {
    if (a.elements.size() != b.elements.size()) {
      return a.elements.size() <=> b.elements.size();
    }
    return a.elements <=> b.elements;
  }
};

Subgroup trivial_subgroup();
Subgroup whole_group(const GroupTable& g);

/// Smallest subgroup containing `seed`.
Subgroup closure(const GroupTable& g, std::span<const Elem> seed);
bool is_subgroup(const GroupTable& g, std::span<const Elem> elements);
bool is_normal(const GroupTable& g, const Subgroup& s);

Subgroup center(const GroupTable& g);
bool is_centerless(const GroupTable& g);
Subgroup commutator_subgroup(const GroupTable& g);
/// Greedy generating sequence: repeatedly add the element whose addition
/// enlarges the closure most, smallest index on ties.
std::vector<Elem> generating_sequence(const GroupTable& g);

/// Conjugacy classes, each sorted, ordered by smallest member.
std::vector<std::vector<Elem>> conjugacy_classes(const GroupTable& g,
                                                 const Limits& limits = {});
/// All normal subgroups ordered by (order, elements).
std::vector<Subgroup> normal_subgroups(const GroupTable& g,
                                       const Limits& limits = {});

struct DirectDecomposition {
  Subgroup first;
  Subgroup second;
};

/// Lexicographically first pair of proper nontrivial normal subgroups with
/// trivial intersection whose product is the group, or nullopt.
std::optional<DirectDecomposition> is_decomposable(const GroupTable& g,
                                                   const Limits& limits = {});

struct Quotient {
  GroupTable group;
  /// projection[x] is the coset index of x; the identity coset is 0.
  std::vector<Elem> projection;
};

/// Coset table G/N; throws NotNormal.
Quotient quotient(const GroupTable& g, const Subgroup& normal);

/// Every abelian subgroup of index 2. Throws OddOrder.
std::vector<Subgroup> index_two_abelian_subgroups(const GroupTable& g,
                                                  const Limits& limits = {});

/// The table restricted to a subgroup, elements relabeled in sorted order.
GroupTable subgroup_table(const GroupTable& g, const Subgroup& s,
                          std::string name = {});

}  // namespace hololab
