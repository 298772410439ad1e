#include "hololab/regsub.hpp"

#include <algorithm>
#include <set>

#include "hololab/error.hpp"

namespace hololab {

namespace {

constexpr std::size_t kBruteMaxOrder = 12;
constexpr std::size_t kBruteMaxInhol = 10'000;

void check_centerless(const GroupTable& g) {
  if (!is_centerless(g)) {
    throw Error(ErrorCode::NotCenterless,
                (g.name().empty() ? std::string("group") : g.name()) + " has a nontrivial center");
  }
}

bool images_commute(const GroupTable& g, const Subgroup& a, const Subgroup& b) {
  for (Elem x : a.elements)
    for (Elem y : b.elements)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

/// Closure of `seed` inside Sym(d) that gives up as soon as it grows past d
/// elements or meets a non-identity element with a fixed point: neither can
/// occur inside a regular subgroup.
std::optional<std::vector<Permutation>> close_semiregular(const std::vector<Permutation>& seed,
                                                          std::size_t d) {
  std::vector<Permutation> members{Permutation::identity(d)};
  std::set<Permutation> seen(members.begin(), members.end());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (const auto& s : seed) {
      Permutation y = members[i] * s;
      if (seen.contains(y)) continue;
      if (y.fixed_points() != 0 || members.size() == d) return std::nullopt;
      seen.insert(y);
      members.push_back(std::move(y));
    }
  }
  return std::vector<Permutation>(seen.begin(), seen.end());
}

Subgroup set_product(const GroupTable& g, const Subgroup& a, const Subgroup& b) {
  std::vector<char> hit(g.order());
  for (Elem x : a.elements)
    for (Elem y : b.elements) hit[g.mul(x, y)] = 1;
  Subgroup s;
  for (Elem x = 0; x < g.order(); ++x)
    if (hit[x]) s.elements.push_back(x);
  return s;
}

std::vector<Elem> intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> out;
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(),
                        b.elements.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Lambda: return "LAMBDA";
    case Classification::Rho: return "RHO";
    case Classification::Other: return "OTHER";
  }
  return "OTHER";
}

std::string_view to_string(VerdictKind v) {
  return v == VerdictKind::Minimal ? "MINIMAL" : "STRICTLY_LARGER";
}

HolomorphContext HolomorphContext::build(const GroupTable& g, const Limits& limits) {
  return HolomorphContext{g, lambda_rep(g), rho_rep(g), inhol(g, limits)};
}

bool is_fixed_point_free(const Homomorphism& f, const Homomorphism& g) {
  if (!f.domain.same_table(g.domain) || !f.codomain.same_table(g.codomain)) {
    throw Error(ErrorCode::DomainMismatch, "pair does not share domain and codomain");
  }
  for (Elem x = 1; x < f.images.size(); ++x)
    if (f.images[x] == g.images[x]) return false;
  return true;
}

RegularWitness regular_from_pair(const FpfPair& pair, const HolomorphContext& ctx) {
  if (!pair.f.codomain.same_table(ctx.group)) {
    throw Error(ErrorCode::DomainMismatch, "pair codomain differs from the holomorph's group");
  }
  if (!is_fixed_point_free(pair.f, pair.g)) {
    throw Error(ErrorCode::NotFpf, "pair has a nontrivial coincidence point");
  }
  if (pair.f.domain.order() != ctx.group.order()) {
    throw Error(ErrorCode::OrderMismatch, "|N| differs from |G|");
  }
  std::vector<Permutation> elements;
  for (Elem x = 0; x < pair.f.domain.order(); ++x) {
    elements.push_back(ctx.lambda.images[pair.f(x)] * ctx.rho.images[pair.g(x)]);
  }
  RegularWitness w{pair, PermSubgroup::from_elements(ctx.group.order(), std::move(elements)),
                   Classification::Other};
  if (w.subgroup.order() != pair.f.domain.order() || !is_regular(w.subgroup) ||
      !w.subgroup.is_subgroup_of(ctx.inner_holomorph)) {
    throw Error(ErrorCode::CertificateFailed, "R_(f,g) is not a regular subgroup of InHol(G)");
  }
  if (w.subgroup.same_elements(ctx.lambda.group)) {
    w.classification = Classification::Lambda;
  } else if (w.subgroup.same_elements(ctx.rho.group)) {
    w.classification = Classification::Rho;
  }
  return w;
}

RegularWitness regular_from_pair(const FpfPair& pair, const GroupTable& g) {
  return regular_from_pair(pair, HolomorphContext::build(g));
}

std::vector<FpfPair> enumerate_fpf_pairs(const GroupTable& n, const GroupTable& g,
                                         const Limits& limits) {
  const auto homs = homomorphisms(n, g, limits);
  std::vector<FpfPair> out;
  for (const auto& f : homs)
    for (const auto& h : homs)
      if (is_fixed_point_free(f, h)) out.push_back(FpfPair{f, h});
  return out;
}

bool centralizer_pair_condition(const FpfPair& p1, const FpfPair& p2) {
  const GroupTable& g = p1.f.codomain;
  if (!g.same_table(p2.f.codomain)) {
    throw Error(ErrorCode::DomainMismatch, "pairs have different codomains");
  }
  check_centerless(g);
  return images_commute(g, p1.f.image(), p2.f.image()) &&
         images_commute(g, p1.g.image(), p2.g.image());
}

std::vector<PermSubgroup> enumerate_regular_subgroups_brute(const GroupTable& g,
                                                            const Limits& limits) {
  if (g.order() > kBruteMaxOrder) {
    throw Error(ErrorCode::CapExceeded, "brute-force regular subgroups need |G| <= 12");
  }
  Limits bounded = limits;
  bounded.materialize_cap = std::min(limits.materialize_cap, kBruteMaxInhol);
  const PermSubgroup ambient = inhol(g, bounded);
  const std::size_t d = g.order();

  std::vector<const Permutation*> semiregular;
  for (const auto& e : ambient.elements())
    if (!e.is_identity() && e.fixed_points() == 0) semiregular.push_back(&e);
  const std::size_t max_seed = d % 8 == 0 ? 3 : 2;

  std::set<std::vector<Permutation>> found;
  auto consider = [&](const std::vector<Permutation>& seed) {
    auto closed = close_semiregular(seed, d);
    if (closed && closed->size() == d) found.insert(std::move(*closed));
  };
  if (d == 1) found.insert({Permutation::identity(1)});
  const std::size_t m = semiregular.size();
  for (std::size_t i = 0; i < m; ++i) {
    consider({*semiregular[i]});
    for (std::size_t j = i + 1; j < m; ++j) {
      consider({*semiregular[i], *semiregular[j]});
      if (max_seed < 3) continue;
      for (std::size_t k = j + 1; k < m; ++k)
        consider({*semiregular[i], *semiregular[j], *semiregular[k]});
    }
  }
  std::vector<PermSubgroup> out;
  for (const auto& elements : found) {
    PermSubgroup r = PermSubgroup::from_elements(d, elements);
    if (is_regular(r)) out.push_back(std::move(r));
  }
  return out;
}

MinimalityVerdict minimality_verdict(const GroupTable& g, const Limits& limits) {
  check_centerless(g);
  const auto homs = homomorphisms(g, g, limits);
  const auto gens = generating_sequence(g);
  const std::size_t e = homs.size();

  std::vector<char> commute(e * e);
  for (std::size_t a = 0; a < e; ++a)
    for (std::size_t b = 0; b < e; ++b) {
      bool ok = true;
      for (Elem x : gens)
        for (Elem y : gens) {
          const Elem fx = homs[a](x), fy = homs[b](y);
          ok = ok && g.mul(fx, fy) == g.mul(fy, fx);
        }
      commute[a * e + b] = ok;
    }

  std::vector<std::vector<std::size_t>> partners_of_f(e);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < e; ++a)
    for (std::size_t b = 0; b < e; ++b)
      if (is_fixed_point_free(homs[a], homs[b])) {
        pairs.emplace_back(a, b);
        partners_of_f[a].push_back(b);
      }

  MinimalityVerdict v;
  v.endomorphisms = e;
  v.fpf_pairs = pairs.size();
  for (const auto& [a, b] : pairs) {
    // λ(G) needs g trivial, ρ(G) needs f trivial: λ(G) ∩ ρ(G) = 1 here.
    if (homs[a].is_trivial() || homs[b].is_trivial()) continue;
    std::optional<std::pair<std::size_t, std::size_t>> partner;
    for (std::size_t a2 = 0; a2 < e && !partner; ++a2) {
      if (!commute[a * e + a2]) continue;
      for (std::size_t b2 : partners_of_f[a2])
        if (commute[b * e + b2]) {
          partner.emplace(a2, b2);
          break;
        }
    }
    if (!partner) continue;
    ++v.witness_count;
    if (!v.witness) {
      v.kind = VerdictKind::StrictlyLarger;
      v.witness.emplace(FpfPair{homs[a], homs[b]}, FpfPair{homs[partner->first], homs[partner->second]});
    }
  }
  return v;
}

FpfPair projection_pair(const GroupTable& g, const DirectDecomposition& d) {
  std::vector<Elem> f(g.order()), h(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem a : d.first.elements) {
      const Elem b = g.mul(g.inv(a), x);
      if (d.second.contains(b)) {
        f[x] = a;
        h[x] = b;
        break;
      }
    }
  }
  return FpfPair{make_homomorphism(g, g, std::move(f)), make_homomorphism(g, g, std::move(h))};
}

bool Thm13Report::passed() const {
  return agrees && std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.passed; });
}

Thm13Report thm13_check(const GroupTable& g, const Limits& limits) {
  check_centerless(g);
  Thm13Report r;
  r.verdict = minimality_verdict(g, limits);
  r.decomposition = is_decomposable(g, limits);
  r.agrees = (r.verdict.kind == VerdictKind::Minimal) == !r.decomposition.has_value();
  r.checks.push_back({"verdict_matches_decomposability", r.agrees});
  if (r.verdict.kind == VerdictKind::Minimal) return r;

  auto check = [&](std::string name, bool ok) { r.checks.push_back({std::move(name), ok}); };
  const auto& [p, q] = *r.verdict.witness;
  const Subgroup kf = p.f.kernel(), kg = p.g.kernel();
  r.kernel_f = kf;
  r.kernel_g = kg;
  const auto n = g.order();
  check("kernels_intersect_trivially", intersect(kf, kg).size() == 1);
  check("kernel_orders_multiply_to_order", kf.order() * kg.order() == n);
  check("kernels_proper_and_nontrivial",
        kf.order() > 1 && kf.order() < n && kg.order() > 1 && kg.order() < n);
  check("kernel_product_is_group", set_product(g, kf, kg).order() == n);
  check("images_product_is_group", set_product(g, p.f.image(), p.g.image()).order() == n);
  check("images_intersect_trivially", intersect(p.f.image(), p.g.image()).size() == 1);
  check("partner_images_product_is_group", set_product(g, q.f.image(), q.g.image()).order() == n);

  bool projection = true;
  for (Elem x : kg.elements) projection = projection && p.f(x) == x;
  for (Elem x : kf.elements) projection = projection && p.g(x) == x;
  r.witness_is_projection_pair = projection;

  const auto ctx = HolomorphContext::build(g, limits);
  const auto w = regular_from_pair(p, ctx);
  const auto w2 = regular_from_pair(q, ctx);
  check("witness_classified_other", w.classification == Classification::Other);
  check("witness_centralizer_is_partner", centralizer_of_regular(w.subgroup).same_elements(w2.subgroup));
  check("witness_realization_isomorphic_to_group",
        is_isomorphic(w.subgroup.to_group_table(), g, limits).has_value());

  if (r.decomposition) {
    const auto& [h, k] = *r.decomposition;
    check("kernels_match_decomposition", (kf == k && kg == h) || (kf == h && kg == k));
    const FpfPair fg = projection_pair(g, *r.decomposition);
    const FpfPair gf{fg.g, fg.f};
    check("projection_pair_fixed_point_free", is_fixed_point_free(fg.f, fg.g));
    check("projection_pairs_centralize", centralizer_pair_condition(fg, gf));
    const auto rp = regular_from_pair(fg, ctx);
    const auto rq = regular_from_pair(gf, ctx);
    check("projection_realization_other", rp.classification == Classification::Other &&
                                              rq.classification == Classification::Other);
    check("projection_centralizer_is_swapped_pair",
          centralizer_of_regular(rp.subgroup).same_elements(rq.subgroup));
    check("projection_kernels_are_factors", fg.f.kernel() == k && fg.g.kernel() == h);
  }
  return r;
}

}  // namespace hololab
