#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hololab/group.hpp"
#include "hololab/holomorph.hpp"
#include "hololab/homomorphism.hpp"
#include "hololab/limits.hpp"
#include "hololab/permutation.hpp"

namespace hololab {

/// Homomorphisms f, g : N → G agreeing only at the identity.
struct FpfPair {
  Homomorphism f;
  Homomorphism g;
};

enum class Classification { Lambda, Rho, Other };
std::string_view to_string(Classification c);

/// R_(f,g) = { λ(f(x)) ρ(g(x)) : x ∈ N }
struct RegularWitness {
  FpfPair pair;
  PermSubgroup subgroup;
  Classification classification = Classification::Other;
};

/// λ, ρ and InHol of one group, computed once and shared by the operations
/// below.
struct HolomorphContext {
  GroupTable group;
  LabeledRep lambda;
  LabeledRep rho;
  PermSubgroup inner_holomorph;

  static HolomorphContext build(const GroupTable& g, const Limits& limits = {});
};

/// Throws DomainMismatch when f and g differ in domain or codomain.
bool is_fixed_point_free(const Homomorphism& f, const Homomorphism& g);

/// Materializes R_(f,g) and checks it: regular, of order |N|, inside InHol(G).
/// Throws NotFpf, OrderMismatch, or CertificateFailed if a check fails.
RegularWitness regular_from_pair(const FpfPair& pair, const HolomorphContext& ctx);
RegularWitness regular_from_pair(const FpfPair& pair, const GroupTable& g);

/// All fixed-point-free ordered pairs from Hom(N, G)², lexicographic in the
/// homomorphism enumeration order.
std::vector<FpfPair> enumerate_fpf_pairs(const GroupTable& n, const GroupTable& g,
                                         const Limits& limits = {});

/// [f(N), f'(N)] = 1 and [g(N), g'(N)] = 1. Throws NotCenterless when the
/// common codomain has a nontrivial center.
bool centralizer_pair_condition(const FpfPair& p1, const FpfPair& p2);

/// Every regular subgroup of InHol(G), by closing seeds of at most two
/// fixed-point-free elements (three when 8 divides |G|). Requires |G| <= 12
/// and |InHol(G)| <= 10^4.
std::vector<PermSubgroup> enumerate_regular_subgroups_brute(const GroupTable& g,
                                                            const Limits& limits = {});

enum class VerdictKind { Minimal, StrictlyLarger };
std::string_view to_string(VerdictKind v);

struct MinimalityVerdict {
  VerdictKind kind = VerdictKind::Minimal;
  /// (f, g) with R_(f,g) neither λ(G) nor ρ(G), and (f', g') realizing its
  /// centralizer inside InHol(G).
  std::optional<std::pair<FpfPair, FpfPair>> witness;
  std::size_t endomorphisms = 0;
  std::size_t fpf_pairs = 0;
  /// Number of OTHER pairs admitting a centralizing partner.
  std::size_t witness_count = 0;
};

/// Decides whether λ(G), ρ(G) are the only regular subgroups R ≤ InHol(G)
/// isomorphic to G with centralizer inside InHol(G); that is, whether
/// N_Sym(G)(InHol(G)) = <Hol(G), inv_G>. G must be centerless.
MinimalityVerdict minimality_verdict(const GroupTable& g, const Limits& limits = {});

/// Projection pair f(hk) = h, g(hk) = k for a decomposition G = H × K.
FpfPair projection_pair(const GroupTable& g, const DirectDecomposition& d);

struct NamedCheck {
  std::string name;
  bool passed = false;
};

struct Thm13Report {
  MinimalityVerdict verdict;
  std::optional<DirectDecomposition> decomposition;
  /// MINIMAL exactly when no decomposition exists
  bool agrees = false;
  /// Kernels of the verdict witness, when STRICTLY_LARGER.
  std::optional<Subgroup> kernel_f;
  std::optional<Subgroup> kernel_g;
  bool witness_is_projection_pair = false;
  std::vector<NamedCheck> checks;

  bool passed() const;
};

/// Cross-checks minimality_verdict against is_decomposable and, for a
/// decomposable G, the kernel decomposition G = ker(f) × ker(g) together with
/// the projection-pair construction.
Thm13Report thm13_check(const GroupTable& g, const Limits& limits = {});

}  // namespace hololab
