#include "hololab/lifting.hpp"

#include <algorithm>
#include <bit>

#include "hololab/error.hpp"
#include "hololab/holomorph.hpp"
#include "hololab/homomorphism.hpp"
#include "hololab/standard_groups.hpp"

namespace hololab {

namespace {

Permutation extend(const Permutation& p, std::size_t m) {
  std::vector<Point> images(m);
  for (std::size_t x = 0; x < m; ++x)
    images[x] = x < p.degree() ? p(static_cast<Point>(x)) : static_cast<Point>(x);
  return Permutation::unchecked(std::move(images));
}

/// Transposition and full cycle on {from..m-1}.
std::vector<Permutation> tail_symmetric_generators(std::size_t from, std::size_t m) {
  std::vector<Permutation> gens;
  if (m < from + 2) return gens;
  std::vector<Point> swap(m), cycle(m);
  for (std::size_t x = 0; x < m; ++x) swap[x] = cycle[x] = static_cast<Point>(x);
  std::swap(swap[from], swap[from + 1]);
  for (std::size_t x = from; x < m; ++x) cycle[x] = static_cast<Point>(x + 1 == m ? from : x + 1);
  gens.push_back(Permutation::unchecked(std::move(swap)));
  if (m > from + 2) gens.push_back(Permutation::unchecked(std::move(cycle)));
  return gens;
}

PermSubgroup only_even(const PermSubgroup& g) {
  std::vector<Permutation> even;
  for (const auto& e : g.elements())
    if (e.is_even()) even.push_back(e);
  return PermSubgroup::from_elements(g.degree(), std::move(even));
}

bool all_pass(const std::vector<NamedCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.passed; });
}

}  // namespace

std::string_view to_string(Ambient a) { return a == Ambient::Sym ? "SYM" : "ALT"; }

PermSubgroup embed(const LiftSpec& spec, const Limits& limits) {
  if (spec.n < 1 || spec.h.degree() != spec.n) {
    throw Error(ErrorCode::InvalidParameter, "H must be a subgroup of S_n with n >= 1");
  }
  if (spec.m < 2 * spec.n + 1) {
    throw Error(ErrorCode::DegreeTooSmall, "lifting needs m >= 2n+1");
  }
  std::vector<Permutation> gens;
  for (const auto& g : spec.h.generators()) gens.push_back(extend(g, spec.m));
  for (auto& g : tail_symmetric_generators(spec.n, spec.m)) gens.push_back(std::move(g));
  return PermSubgroup::generate(spec.m, std::move(gens), limits);
}

PermSubgroup intersect_alternating(const PermSubgroup& h1) { return only_even(h1); }

NormalizerQuotient normalizer_quotient(Ambient ambient, std::size_t m, const PermSubgroup& k,
                                       const Limits& limits) {
  PermSubgroup normalizer = normalizer_in_sym(m, k, limits);
  if (ambient == Ambient::Alt) normalizer = only_even(normalizer);
  if (!k.is_subgroup_of(normalizer)) {
    throw Error(ErrorCode::NotNormalInNormalizer, "K is not contained in its normalizer");
  }
  const GroupTable table = normalizer.to_group_table();
  Subgroup inside;
  for (const auto& e : k.elements()) inside.elements.push_back(static_cast<Elem>(normalizer.index_of(e)));
  std::sort(inside.elements.begin(), inside.elements.end());
  try {
    return {std::move(normalizer), quotient(table, inside).group};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotNormal) throw Error(ErrorCode::NotNormalInNormalizer, e.what());
    throw;
  }
}

std::vector<std::uint32_t> invariant_subsets(const PermSubgroup& k, std::size_t size) {
  const std::size_t d = k.degree();
  if (d > 20) throw Error(ErrorCode::CapExceeded, "subset scan supports degree <= 20");
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
    bool invariant = true;
    for (const auto& g : k.generators()) {
      for (std::size_t x = 0; x < d && invariant; ++x)
        if ((mask >> x) & 1u) invariant = (mask >> g(static_cast<Point>(x))) & 1u;
      if (!invariant) break;
    }
    if (invariant) out.push_back(mask);
  }
  return out;
}

bool LiftReport::passed() const { return sym_iso_to_expected && alt_iso_to_expected && all_pass(checks); }

LiftReport lift_check(const PermSubgroup& h, std::size_t n, std::size_t m, const GroupTable& expected,
                      const Limits& limits) {
  LiftReport r;
  r.n = n;
  r.m = m;
  r.h_order = h.order();
  const LiftSpec spec{h, n, m};
  const PermSubgroup h1 = embed(spec, limits);
  const PermSubgroup h2 = intersect_alternating(h1);
  r.h1_order = h1.order();
  r.h2_order = h2.order();

  const auto sym = normalizer_quotient(Ambient::Sym, m, h1, limits);
  const auto alt = normalizer_quotient(Ambient::Alt, m, h2, limits);
  r.sym_normalizer_order = sym.normalizer.order();
  r.alt_normalizer_order = alt.normalizer.order();
  r.sym_quotient = sym.quotient;
  r.alt_quotient = alt.quotient;
  r.sym_iso_to_expected = is_isomorphic(sym.quotient, expected, limits).has_value();
  r.alt_iso_to_expected = is_isomorphic(alt.quotient, expected, limits).has_value();

  std::uint64_t tail_factorial = 1;
  for (std::size_t i = 2; i <= m - n; ++i) tail_factorial *= i;
  r.checks.push_back({"h1_order_is_h_times_tail_factorial", h1.order() == h.order() * tail_factorial});

  // N_{S_m}(H1) = N_{S_n}(H) × S_{m-n}
  const PermSubgroup base_normalizer = normalizer_in_sym(n, h, limits);
  const PermSubgroup structural = embed({base_normalizer, n, m}, limits);
  r.checks.push_back({"structural_normalizer_identity", structural.same_elements(sym.normalizer)});

  const bool h1_odd = h1.order() != h2.order();
  r.checks.push_back({"h2_index_two_in_h1", h1.order() == 2 * h2.order()});
  if (h1_odd) {
    r.checks.push_back({"normalizer_meets_alternating_in_index_two",
                        only_even(sym.normalizer).order() * 2 == sym.normalizer.order()});
  }
  r.checks.push_back({"quotients_isomorphic",
                      is_isomorphic(sym.quotient, alt.quotient, limits).has_value()});

  if (n > 1 && m <= 20) {
    const std::uint32_t tail = ((1u << m) - 1) & ~((1u << n) - 1);
    const auto s1 = invariant_subsets(h1, m - n);
    const auto s2 = invariant_subsets(h2, m - n);
    r.checks.push_back({"h1_unique_invariant_tail", s1 == std::vector<std::uint32_t>{tail}});
    r.checks.push_back({"h2_unique_invariant_tail", s2 == std::vector<std::uint32_t>{tail}});
  }
  return r;
}

bool AssemblyReport::passed() const { return all_pass(checks); }

AssemblyReport main_theorem_assembly(const GroupTable& g, const Limits& limits) {
  if (g.order() > 10) throw Error(ErrorCode::CapExceeded, "assembly supports |G| <= 10");
  if (g.is_abelian()) throw Error(ErrorCode::Abelian, "inv_G lies in Hol(G) for abelian G");
  if (!is_centerless(g)) throw Error(ErrorCode::NotCenterless, "G must be centerless");

  AssemblyReport r;
  r.group_name = g.name();
  r.group_order = g.order();
  r.inn_order = inner_automorphisms(g).size();
  const std::size_t d = g.order();
  const Permutation inv = inv_perm(g);

  const PermSubgroup inner = inhol(g, limits);
  auto with_inv = [&](const PermSubgroup& base) {
    std::vector<Permutation> gens = base.generators();
    gens.push_back(inv);
    return PermSubgroup::generate(d, std::move(gens), limits);
  };
  const PermSubgroup h = with_inv(inner);
  r.h_order = h.order();
  r.checks.push_back({"h_order_is_2_g_inn", h.order() == 2 * g.order() * r.inn_order});

  const auto nq = normalizer_quotient(Ambient::Sym, d, h, limits);
  r.normalizer_order = nq.normalizer.order();
  r.self_normalizing = nq.normalizer.order() == h.order();
  r.normalizer_equals_hol_inv = with_inv(hol(g, limits)).same_elements(nq.normalizer);
  r.quotient = nq.quotient;
  r.out = outer_automorphism_group(g, limits);
  r.quotient_iso_out = is_isomorphic(r.quotient, r.out, limits).has_value();

  try {
    const GroupTable h_table = h.to_group_table();
    Subgroup s;
    for (const auto& e : inner.elements()) s.elements.push_back(static_cast<Elem>(h.index_of(e)));
    std::sort(s.elements.begin(), s.elements.end());
    r.inhol_characteristic = is_characteristic(s, h_table, limits);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CapExceeded) throw;
  }

  // The equality N(H) = <Hol(G), inv_G> is only established for the
  // Cornulier-Sambale groups; S_3 is the one desk-scale case where the
  // quotient chain is checked, every other input is reported as observed.
  const bool consistency_case = g.order() == 6;
  r.label = consistency_case ? "CONSISTENCY" : "EXPLORATORY";
  if (consistency_case) {
    r.checks.push_back({"normalizer_equals_hol_inv", r.normalizer_equals_hol_inv});
    r.checks.push_back({"quotient_iso_out", r.quotient_iso_out});
  }
  return r;
}

}  // namespace hololab
