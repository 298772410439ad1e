#pragma once

#include <cstddef>
#include <vector>

#include "hololab/group.hpp"
#include "hololab/limits.hpp"
#include "hololab/permutation.hpp"

namespace hololab {

/// A permutation representation g ↦ images[g] together with its image group.
struct LabeledRep {
  PermSubgroup group;
  std::vector<Permutation> images;
};

/// λ(g): x ↦ g·x
LabeledRep lambda_rep(const GroupTable& g);
/// ρ(g): x ↦ x·g^-1
LabeledRep rho_rep(const GroupTable& g);
/// x ↦ x^-1
Permutation inv_perm(const GroupTable& g);

/// λ(G) together with Aut(G) acting on element indices.
PermSubgroup hol(const GroupTable& g, const Limits& limits = {});
/// λ(G)ρ(G)
PermSubgroup inhol(const GroupTable& g, const Limits& limits = {});

/// |R| = d and evaluation at point 0 is a bijection R → {0..d-1}.
bool is_regular(const PermSubgroup& r);

/// Full centralizer in Sym(d): the closed form for regular R, otherwise the
/// Sym(d) scan (subject to the degree cap).
PermSubgroup centralizer_in_sym(const PermSubgroup& r, const Limits& limits = {});
/// For regular R: the permutations x ↦ r_x(a), where r_x is the unique element
/// of R sending 0 to x, one for each a.
PermSubgroup centralizer_of_regular(const PermSubgroup& r);
PermSubgroup centralizer_by_scan(const PermSubgroup& r, const Limits& limits = {});

/// All σ ∈ Sym(d) with σ^-1 h σ ∈ H for each generator h, by a scan of Sym(d)
/// in lexicographic rank order. d must not exceed limits.max_degree (and never
/// 12).
PermSubgroup normalizer_in_sym(std::size_t degree, const PermSubgroup& h,
                               const Limits& limits = {});

/// N_{Sym(G)}(Hol(G)), for |G| within the degree cap.
PermSubgroup nhol(const GroupTable& g, const Limits& limits = {});

/// Regular normal subgroups of `ambient` isomorphic to `g`, found by closing
/// one- and two-element seeds of fixed-point-free elements. Small groups only.
std::vector<PermSubgroup> regular_normal_subgroups_isomorphic_to(const PermSubgroup& ambient,
                                                                 const GroupTable& g,
                                                                 const Limits& limits = {});

}  // namespace hololab
