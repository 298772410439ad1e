#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hololab/group.hpp"
#include "hololab/limits.hpp"
#include "hololab/permutation.hpp"
#include "hololab/regsub.hpp"

namespace hololab {

/// H ≤ S_n to be lifted into S_m; H acts on points 0..n-1.
struct LiftSpec {
  PermSubgroup h;
  std::size_t n = 0;
  std::size_t m = 0;
};

/// H1 = H × Sym{n..m-1} in S_m. Throws DegreeTooSmall when m < 2n+1 and
/// InvalidParameter when H is not of degree n.
PermSubgroup embed(const LiftSpec& spec, const Limits& limits = {});
/// H1 ∩ A_m.
PermSubgroup intersect_alternating(const PermSubgroup& h1);

enum class Ambient { Sym, Alt };
std::string_view to_string(Ambient a);

struct NormalizerQuotient {
  PermSubgroup normalizer;
  GroupTable quotient;
};

/// N(K) in S_m or A_m by a scan of S_m, and the table of N(K)/K built from
/// its cosets. Throws CapExceeded and NotNormalInNormalizer.
NormalizerQuotient normalizer_quotient(Ambient ambient, std::size_t m, const PermSubgroup& k,
                                       const Limits& limits = {});

/// Every `size`-subset of {0..d-1} (as a bitmask) mapped to itself by all
/// of `k`. Requires d <= 20.
std::vector<std::uint32_t> invariant_subsets(const PermSubgroup& k, std::size_t size);

struct LiftReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t h_order = 0;
  std::size_t h1_order = 0;
  std::size_t h2_order = 0;
  std::size_t sym_normalizer_order = 0;
  std::size_t alt_normalizer_order = 0;
  GroupTable sym_quotient;
  GroupTable alt_quotient;
  bool sym_iso_to_expected = false;
  bool alt_iso_to_expected = false;
  std::vector<NamedCheck> checks;

  bool passed() const;
};

/// Both normalizer quotients of the lift, tested against `expected`, along
/// with the structural normalizer identity, the invariant-subset property and
/// the index-2 bookkeeping.
LiftReport lift_check(const PermSubgroup& h, std::size_t n, std::size_t m,
                      const GroupTable& expected, const Limits& limits = {});

struct AssemblyReport {
  std::string group_name;
  std::size_t group_order = 0;
  std::size_t inn_order = 0;
  std::size_t h_order = 0;
  std::size_t normalizer_order = 0;
  bool self_normalizing = false;
  bool normalizer_equals_hol_inv = false;
  GroupTable quotient;
  GroupTable out;
  bool quotient_iso_out = false;
  /// Unset when Aut(H) is beyond the homomorphism cap.
  std::optional<bool> inhol_characteristic;
  /// "CONSISTENCY" for S_3, "EXPLORATORY" otherwise.
  std::string label;
  std::vector<NamedCheck> checks;

  bool passed() const;
};

/// H = <InHol(G), inv_G> and N_{Sym(G)}(H)/H compared with Out(G). Requires
/// |G| <= 10; throws Abelian or NotCenterless.
AssemblyReport main_theorem_assembly(const GroupTable& g, const Limits& limits = {});

}  // namespace hololab
