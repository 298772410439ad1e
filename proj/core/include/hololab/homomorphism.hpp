#pragma once

#include <optional>
#include <vector>

#include "hololab/group.hpp"
#include "hololab/limits.hpp"

namespace hololab {

/// A homomorphism given by the image of every domain element.
struct Homomorphism {
  GroupTable domain;
  GroupTable codomain;
  std::vector<Elem> images;

  Elem operator()(Elem x) const { return images[x]; }
  bool is_trivial() const;
  bool is_injective() const;
  Subgroup kernel() const;
  Subgroup image() const;
};

/// Validates the image table; throws InvalidParameter when it does not define
/// a homomorphism.
Homomorphism make_homomorphism(const GroupTable& domain, const GroupTable& codomain,
                               std::vector<Elem> images);
bool is_homomorphism(const GroupTable& domain, const GroupTable& codomain,
                     const std::vector<Elem>& images);

Homomorphism identity_map(const GroupTable& g);
Homomorphism trivial_map(const GroupTable& domain, const GroupTable& codomain);

/// Every homomorphism domain → codomain in the order of the generator-image
/// scan (lexicographic in the image tuple). Throws CapExceeded when
/// |codomain|^k exceeds limits.hom_tuple_cap, k the generating sequence size.
std::vector<Homomorphism> homomorphisms(const GroupTable& domain,
                                        const GroupTable& codomain,
                                        const Limits& limits = {});

std::vector<Homomorphism> automorphisms(const GroupTable& g, const Limits& limits = {});
/// Conjugation maps x ↦ g^-1 x g, one per distinct automorphism, sorted by images.
std::vector<Homomorphism> inner_automorphisms(const GroupTable& g);
std::size_t outer_order(const GroupTable& g, const Limits& limits = {});

/// Composition table of Aut(G): elements sorted by image array (identity
/// first), product α·β = α∘β.
GroupTable automorphism_group(const GroupTable& g, const Limits& limits = {});
/// Aut(G)/Inn(G) as a coset table.
GroupTable outer_automorphism_group(const GroupTable& g, const Limits& limits = {});

/// First isomorphism g → h in scan order, or nullopt.
std::optional<Homomorphism> is_isomorphic(const GroupTable& g, const GroupTable& h,
                                          const Limits& limits = {});

/// True iff every automorphism of g maps s onto itself.
bool is_characteristic(const Subgroup& s, const GroupTable& g, const Limits& limits = {});

}  // namespace hololab
