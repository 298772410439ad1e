#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hololab/group.hpp"

namespace hololab {

GroupTable trivial_group();
GroupTable cyclic(std::size_t n);
/// Sym(n) on permutations listed in lexicographic order; a·b applies b first.
GroupTable symmetric(std::size_t n);
/// Even permutations of Sym(n), lexicographic order.
GroupTable alternating(std::size_t n);
/// Dihedral group of order 2n: index i + n·f stands for r^i s^f.
GroupTable dihedral(std::size_t n);
GroupTable quaternion8();
/// Element (g, h) has index g + |G|·h.
GroupTable direct_product(const GroupTable& g, const GroupTable& h);

/// A ⋊ B where action[b] is the automorphism of A by which b acts.
struct SemidirectSpec {
  GroupTable normal_part;
  GroupTable acting_part;
  std::vector<std::vector<Elem>> action;
};

/// Throws InvalidParameter unless every action[b] is an automorphism and
/// b ↦ action[b] is a homomorphism.
void validate(const SemidirectSpec& spec);

/// Element (a, b) has index a + |A|·b; product
/// (a1, b1)(a2, b2) = (a1 · action[b1](a2), b1 b2).
GroupTable semidirect(const SemidirectSpec& spec, std::string name = {});

/// Center computed from the three conditions b ∈ Z(B), a fixed by B, and
/// conjugation by (a, b) trivial on A. Indices refer to semidirect(spec).
Subgroup center_of_semidirect(const SemidirectSpec& spec);

/// (A × A) ⋊ C_2 with the involution swapping coordinates.
SemidirectSpec swap_wreath(const GroupTable& a);

/// C_n ⋊ C_2 with the involution inverting.
SemidirectSpec inversion_semidirect(std::size_t n);

}  // namespace hololab
