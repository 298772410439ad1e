#include "acceptance.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "hololab/cs.hpp"
#include "hololab/error.hpp"
#include "hololab/holomorph.hpp"
#include "hololab/homomorphism.hpp"
#include "hololab/liealg.hpp"
#include "hololab/lifting.hpp"
#include "hololab/regsub.hpp"
#include "hololab/standard_groups.hpp"
#include "oracles.hpp"

namespace hololab::acceptance {

namespace {

using ElementSet = std::set<oracle::Images>;

class Recorder {
 public:
  explicit Recorder(CriterionResult& r) : r_(r) {}
  bool expect(const std::string& name, bool ok) {
    if (!ok) r_.failures.push_back(name);
    return ok;
  }
  std::ostringstream detail;

 private:
  CriterionResult& r_;
};

ElementSet with_inv_closure(const PermSubgroup& base, const GroupTable& g) {
  std::vector<oracle::Images> gens;
  for (const auto& x : base.generators()) gens.emplace_back(x.images().begin(), x.images().end());
  const auto inv = inv_perm(g);
  gens.emplace_back(inv.images().begin(), inv.images().end());
  return oracle::close(gens, g.order());
}

/// Normalizer of the group generated by `gens` (whose elements are `members`)
/// in Sym(d): a plain next_permutation walk split by the image of point 0,
/// with hashed membership on packed images.
ElementSet oracle_normalizer_by_generators(std::size_t d, const ElementSet& members,
                                           const std::vector<oracle::Images>& gens, unsigned threads) {
  auto key = [d](const oracle::Images& x) {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < d; ++i) k = k * 16 + x[i];
    return k;
  };
  std::unordered_set<std::uint64_t> inside;
  for (const auto& m : members) inside.insert(key(m));

  std::vector<ElementSet> found(d);
  auto work = [&](std::size_t first) {
    oracle::Images sigma;
    sigma.push_back(static_cast<std::uint16_t>(first));
    for (std::size_t x = 0; x < d; ++x)
      if (x != first) sigma.push_back(static_cast<std::uint16_t>(x));
    oracle::Images conj(d), inv(d);
    do {
      for (std::size_t x = 0; x < d; ++x) inv[sigma[x]] = static_cast<std::uint16_t>(x);
      bool ok = true;
      for (const auto& g : gens) {
        for (std::size_t x = 0; x < d; ++x) conj[x] = inv[g[sigma[x]]];
        if (!inside.count(key(conj))) {
          ok = false;
          break;
        }
      }
      if (ok) found[first].insert(sigma);
    } while (std::next_permutation(sigma.begin() + 1, sigma.end()));
  };
  const unsigned workers = std::max(1u, threads);
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t first = w; first < d; first += workers) work(first);
    });
  pool.clear();
  ElementSet out;
  for (auto& f : found) out.insert(f.begin(), f.end());
  return out;
}

std::vector<oracle::Images> images_of(const std::vector<Permutation>& v) {
  std::vector<oracle::Images> out;
  for (const auto& p : v) out.emplace_back(p.images().begin(), p.images().end());
  return out;
}

/// Regular subgroups of InHol(G) by closing every pair of its elements.
std::set<ElementSet> pair_closure_oracle(const GroupTable& g) {
  const auto in = oracle::image_set(inhol(g));
  const std::vector<oracle::Images> elems(in.begin(), in.end());
  const std::size_t d = g.order();
  std::set<ElementSet> out;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i; j < elems.size(); ++j) {
      auto c = oracle::close({elems[i], elems[j]}, d);
      if (c.size() != d) continue;
      std::set<std::uint16_t> hits;
      for (const auto& x : c) hits.insert(x[0]);
      if (hits.size() == d) out.insert(std::move(c));
    }
  return out;
}

/// Index-2 subgroups of M as kernels of parity labellings propagated along a
/// Cayley graph, then filtered by commutativity.
std::vector<std::set<Elem>> oracle_index_two_abelian(const GroupTable& m) {
  std::vector<Elem> gens;
  std::set<Elem> span{0};
  for (Elem x = 0; x < m.order(); ++x) {
    if (span.count(x)) continue;
    gens.push_back(x);
    std::vector<Elem> todo(span.begin(), span.end());
    while (!todo.empty()) {
      const Elem y = todo.back();
      todo.pop_back();
      for (Elem g : gens) {
        const Elem z = m.mul(y, g);
        if (span.insert(z).second) todo.push_back(z);
      }
    }
  }
  std::vector<std::set<Elem>> out;
  for (std::uint32_t mask = 1; mask < (1u << gens.size()); ++mask) {
    std::vector<int> parity(m.order(), -1);
    parity[0] = 0;
    std::vector<Elem> todo{0};
    bool ok = true;
    while (!todo.empty() && ok) {
      const Elem y = todo.back();
      todo.pop_back();
      for (std::size_t i = 0; i < gens.size() && ok; ++i) {
        const Elem z = m.mul(y, gens[i]);
        const int pz = parity[y] ^ static_cast<int>((mask >> i) & 1u);
        if (parity[z] < 0) {
          parity[z] = pz;
          todo.push_back(z);
        } else {
          ok = parity[z] == pz;
        }
      }
    }
    if (!ok) continue;
    std::set<Elem> kernel;
    for (Elem x = 0; x < m.order(); ++x)
      if (parity[x] == 0) kernel.insert(x);
    bool abelian = true;
    for (Elem a : kernel)
      for (Elem b : kernel) abelian = abelian && m.mul(a, b) == m.mul(b, a);
    if (abelian && std::find(out.begin(), out.end(), kernel) == out.end()) out.push_back(kernel);
  }
  return out;
}

// ---------------------------------------------------------------------------

void criterion1(Recorder& rec, const Limits& limits) {
  const auto s3 = symmetric(3);
  const auto in = inhol(s3, limits);
  const auto n = normalizer_in_sym(6, in, limits);
  const auto brute = oracle::brute_normalizer(6, oracle::image_set(in));
  rec.expect("oracle_normalizer_order_72", brute.size() == 72);
  rec.expect("library_normalizer_matches_oracle", oracle::image_set(n) == brute);
  rec.expect("normalizer_equals_hol_inv", with_inv_closure(hol(s3, limits), s3) == brute);
  const auto v = minimality_verdict(s3, limits);
  rec.expect("verdict_minimal", v.kind == VerdictKind::Minimal);
  rec.detail << "|N(InHol(S3))| = " << brute.size() << ", verdict " << to_string(v.kind);
}

void criterion2(Recorder& rec, const Limits& limits) {
  const auto d5 = dihedral(5);
  const auto in = inhol(d5, limits);
  const auto members = oracle::image_set(in);
  const auto lam = lambda_rep(d5), rho = rho_rep(d5);
  // r = index 1 and s = index 5 generate D_5.
  const std::vector<Permutation> gens = {lam.images[1], lam.images[5], rho.images[1], rho.images[5]};
  const auto brute = oracle_normalizer_by_generators(10, members, images_of(gens), limits.threads);
  rec.expect("oracle_normalizer_order_400", brute.size() == 400);
  const auto n = normalizer_in_sym(10, in, limits);
  rec.expect("library_normalizer_matches_oracle", oracle::image_set(n) == brute);
  rec.expect("normalizer_equals_hol_inv", with_inv_closure(hol(d5, limits), d5) == brute);
  const auto v = minimality_verdict(d5, limits);
  rec.expect("verdict_minimal", v.kind == VerdictKind::Minimal);
  rec.detail << "|N(InHol(D5))| = " << brute.size() << ", verdict " << to_string(v.kind);
}

void criterion3(Recorder& rec, const Limits& limits) {
  for (const auto& g : {direct_product(symmetric(3), symmetric(3)), direct_product(symmetric(3), dihedral(5))}) {
    const auto r = thm13_check(g, limits);
    const std::string tag = g.name() + ":";
    rec.expect(tag + "verdict_strictly_larger", r.verdict.kind == VerdictKind::StrictlyLarger);
    rec.expect(tag + "decomposable", r.decomposition.has_value());
    for (const auto& c : r.checks) rec.expect(tag + c.name, c.passed);
    if (r.kernel_f && r.kernel_g && r.decomposition) {
      const std::set<Subgroup> kernels{*r.kernel_f, *r.kernel_g};
      const std::set<Subgroup> factors{r.decomposition->first, r.decomposition->second};
      rec.expect(tag + "kernels_are_factors_up_to_order", kernels == factors);
      // G = ker(f) × ker(g), checked element by element.
      std::set<Elem> product;
      for (Elem a : r.kernel_f->elements)
        for (Elem b : r.kernel_g->elements) product.insert(g.mul(a, b));
      rec.expect(tag + "kernel_product_covers_group", product.size() == g.order());
    }
    rec.detail << g.name() << " " << to_string(r.verdict.kind) << " (" << r.verdict.witness_count
               << " witnesses); ";
  }
}

void criterion4(Recorder& rec, const Limits& limits) {
  struct Case {
    GroupTable g;
    std::vector<GroupTable> ns;
  };
  for (const auto& c : {Case{symmetric(3), {cyclic(6), symmetric(3)}}, Case{dihedral(5), {cyclic(10), dihedral(5)}}}) {
    const auto ctx = HolomorphContext::build(c.g, limits);
    std::set<ElementSet> realized;
    std::size_t pairs = 0;
    for (const auto& n : c.ns)
      for (const auto& p : enumerate_fpf_pairs(n, c.g, limits)) {
        realized.insert(oracle::image_set(regular_from_pair(p, ctx).subgroup));
        ++pairs;
      }
    std::set<ElementSet> brute;
    for (const auto& r : enumerate_regular_subgroups_brute(c.g, limits)) brute.insert(oracle::image_set(r));
    const auto closure = pair_closure_oracle(c.g);
    rec.expect(c.g.name() + ":realizations_equal_brute", realized == brute);
    rec.expect(c.g.name() + ":brute_equals_pair_closure", brute == closure);
    rec.detail << c.g.name() << ": " << pairs << " fpf pairs, " << brute.size() << " regular subgroups; ";
  }
}

void criterion5(Recorder& rec, const Limits& limits) {
  const auto c2 = cyclic(2);
  const std::vector<std::pair<GroupTable, bool>> cases = {
      {cyclic(3), true}, {cyclic(4), true}, {direct_product(c2, c2), true}, {cyclic(5), true}, {c2, false}};
  for (const auto& [a, unique] : cases) {
    const auto spec = swap_wreath(a);
    const auto m = semidirect(spec);
    const auto lib = index_two_abelian_subgroups(m, limits);
    const auto brute = oracle_index_two_abelian(m);
    std::vector<std::set<Elem>> lib_sets;
    for (const auto& s : lib) lib_sets.emplace_back(s.elements.begin(), s.elements.end());
    std::sort(lib_sets.begin(), lib_sets.end());
    auto sorted_brute = brute;
    std::sort(sorted_brute.begin(), sorted_brute.end());
    const std::string tag = a.name() + ":";
    rec.expect(tag + "library_matches_oracle", lib_sets == sorted_brute);
    std::set<Elem> axa;
    for (Elem x = 0; x < a.order() * a.order(); ++x) axa.insert(x);  // (a, identity) indices
    if (unique) {
      rec.expect(tag + "exactly_one", lib.size() == 1);
      rec.expect(tag + "it_is_AxA", lib.size() == 1 && lib_sets[0] == axa);
    } else {
      rec.expect(tag + "more_than_one", lib.size() > 1);
    }
    rec.detail << a.name() << ":" << lib.size() << " ";
  }
}

void criterion6(Recorder& rec, const Limits&) {
  for (auto [n, c] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}, std::pair{4, 4}}) {
    const auto dims = HallBasis::create(n, c)->dims();
    bool ok = dims.size() == static_cast<std::size_t>(c);
    for (int k = 1; k <= c && ok; ++k)
      ok = dims[k - 1] == witt_dimension(n, k) && dims[k - 1] == oracle::lyndon_count(n, k);
    rec.expect("dims_match_witt_" + std::to_string(n) + "_" + std::to_string(c), ok);
  }
  rec.expect("dims_3_3", HallBasis::create(3, 3)->dims() == std::vector<std::size_t>{3, 3, 8});
  rec.expect("dims_4_4", HallBasis::create(4, 4)->dims() == std::vector<std::size_t>{4, 6, 20, 60});
  rec.detail << "(3,3) -> (3,3,8), (4,4) -> (4,6,20,60)";
}

void criterion7(Recorder& rec, const Limits& limits) {
  for (auto [n, c, p] : {std::tuple{3, 3, 5u}, std::tuple{3, 3, 7u}, std::tuple{4, 4, 5u}}) {
    const auto alg = LieAlgebra::create(n, c, p);
    std::mt19937_64 rng(limits.seed + p + 100 * n);
    auto random = [&] {
      LieVector v = LieVector::zero(alg);
      for (std::size_t i = 0; i < v.size(); ++i) v.set(i, static_cast<std::int64_t>(rng() % p));
      return v;
    };
    std::size_t assoc = 0, power = 0, jacobi = 0, inverse = 0;
    for (int t = 0; t < 1000; ++t) {
      const auto x = random(), y = random(), z = random();
      assoc += bch_multiply(bch_multiply(x, y), z) == bch_multiply(x, bch_multiply(y, z));
      inverse += bch_multiply(x, bch_inverse(x)).is_zero();
      LieVector acc = LieVector::zero(alg);
      for (std::uint32_t k = 0; k < p; ++k) acc = bch_multiply(acc, x);
      power += acc.is_zero();
      jacobi += (bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero();
    }
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(c) + "," + std::to_string(p) + "):";
    rec.expect(tag + "associativity", assoc == 1000);
    rec.expect(tag + "inverse", inverse == 1000);
    rec.expect(tag + "p_fold_power", power == 1000);
    rec.expect(tag + "jacobi", jacobi == 1000);
  }
  rec.detail << "1000 seeded triples per case";
}

void criterion8(Recorder& rec, const Limits& limits) {
  for (auto [t, p] : {std::pair{cyclic(3), 5u}, std::pair{cyclic(4), 7u}}) {
    const auto g = CsGroup::build({t, p});
    const std::string tag = "CS(" + t.name() + "," + std::to_string(p) + "):";
    std::vector<std::vector<std::int64_t>> rows;
    for (Elem x = 0; x < t.order(); ++x) {
      const auto v = g.n_fold_commutator_vector(x);
      rows.emplace_back(v.coefficients().begin(), v.coefficients().end());
    }
    const std::size_t r = oracle::rank_mod(rows, p);
    std::size_t d = 0;
    for (std::size_t k = 1; k <= t.order(); ++k) d += witt_dimension(t.order(), k);
    rec.expect(tag + "dimension", g.dimension() == d);
    rec.expect(tag + "rank_matches_oracle", g.rank() == r);
    rec.expect(tag + "order_exponents", g.order().p_exponent == d - r && g.order().q_exponent == t.order());
    if (t.order() == 3) rec.expect(tag + "D_is_14", d == 14);
    const auto cert = compute_center_certificate(g, limits);
    rec.expect(tag + "q_fixed_levels_zero", cert.q_fixed_all_zero);
    rec.expect(tag + "faithful_degree1", cert.faithful_degree1);
    rec.expect(tag + "semidirect_center_argument", cert.q_abelian && cert.semidirect_center_trivial);
    rec.expect(tag + "random_center_check", cert.witnesses == 0 && cert.samples == 1000);
    rec.detail << tag << " D=" << d << " r=" << g.rank() << " order " << g.order().to_string() << "; ";
  }
}

void criterion9(Recorder& rec, const Limits& limits) {
  struct Case {
    std::string label;
    PermSubgroup h;
    std::size_t n, m;
    GroupTable t;
  };
  const std::vector<Case> cases = {
      {"trivial<=S2,m=5", PermSubgroup::generate(2, {}), 2, 5, cyclic(2)},
      {"<3-cycle><=S3,m=7", PermSubgroup::generate(3, {Permutation({1, 2, 0})}), 3, 7, cyclic(2)},
      {"S2<=S2,m=5", PermSubgroup::generate(2, {Permutation({1, 0})}), 2, 5, trivial_group()}};
  for (const auto& c : cases) {
    const auto r = lift_check(c.h, c.n, c.m, c.t, limits);
    const std::string tag = c.label + ":";
    rec.expect(tag + "sym_quotient_iso_expected", r.sym_iso_to_expected);
    rec.expect(tag + "alt_quotient_iso_expected", r.alt_iso_to_expected);
    for (const auto& k : r.checks) rec.expect(tag + k.name, k.passed);
    const auto h1 = embed({c.h, c.n, c.m}, limits);
    const auto brute = oracle::brute_normalizer(c.m, oracle::image_set(h1));
    rec.expect(tag + "normalizer_order_matches_oracle", brute.size() == r.sym_normalizer_order);
    rec.detail << c.label << " |N|=" << r.sym_normalizer_order << "; ";
  }
}

void criterion10(Recorder& rec, const Limits& limits) {
  const auto s3 = symmetric(3);
  const auto r = main_theorem_assembly(s3, limits);
  rec.expect("S3:h_order_72", r.h_order == 72);
  rec.expect("S3:self_normalizing", r.self_normalizing);
  rec.expect("S3:quotient_trivial", r.quotient.order() == 1);
  rec.expect("S3:out_trivial", r.out.order() == 1);
  rec.expect("S3:report_checks", r.passed());
  const auto h = with_inv_closure(inhol(s3, limits), s3);
  rec.expect("S3:oracle_self_normalizing", oracle::brute_normalizer(6, h) == h);

  const auto d = main_theorem_assembly(dihedral(5), limits);
  rec.expect("D5:h_order_200", d.h_order == 200);
  rec.expect("D5:labelled_exploratory", d.label == "EXPLORATORY");
  rec.expect("D5:out_is_c2", d.out.order() == 2);
  rec.detail << "S3 quotient order " << r.quotient.order() << "; D5 [" << d.label << "] |N(H)|="
             << d.normalizer_order << ", quotient order " << d.quotient.order() << " vs |Out(D5)|="
             << d.out.order() << (d.quotient_iso_out ? " (isomorphic)" : " (not isomorphic)");
}

struct Spec {
  int id;
  const char* title;
  void (*run)(Recorder&, const Limits&);
};

const Spec kSpecs[] = {
    {1, "InHol normalizer is <Hol,inv> for S3 (scan of Sym(6))", criterion1},
    {2, "InHol normalizer is <Hol,inv> for D5 (scan of Sym(10))", criterion2},
    {3, "decomposable groups give STRICTLY_LARGER with projection witness", criterion3},
    {4, "fpf-pair realizations equal brute-force regular subgroups", criterion4},
    {5, "unique abelian index-2 subgroup of (AxA):C2", criterion5},
    {6, "Hall basis dimensions equal Witt numbers", criterion6},
    {7, "truncated BCH group axioms and exponent p", criterion7},
    {8, "CS(T,p) build and center certificate", criterion8},
    {9, "lifting of normalizer quotients to S_m and A_m", criterion9},
    {10, "desk-scale assembly H = <InHol(G), inv_G>", criterion10},
};

}  // namespace

std::vector<CriterionResult> run(const Limits& limits, std::ostream& out, const std::vector<int>& only) {
  std::vector<CriterionResult> results;
  for (const auto& spec : kSpecs) {
    if (!only.empty() && std::find(only.begin(), only.end(), spec.id) == only.end()) continue;
    CriterionResult r;
    r.id = spec.id;
    r.title = spec.title;
    Recorder rec(r);
    const auto start = std::chrono::steady_clock::now();
    try {
      spec.run(rec, limits);
    } catch (const std::exception& e) {
      rec.expect(std::string("exception: ") + e.what(), false);
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = r.failures.empty();
    r.detail = rec.detail.str();
    out << (r.passed ? "PASS" : "FAIL") << "  [" << std::setw(2) << r.id << "] " << r.title << "  ("
        << std::fixed << std::setprecision(2) << r.seconds << " s)  " << r.detail << "\n";
    for (const auto& f : r.failures) out << "        failed: " << f << "\n";
    out.flush();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace hololab::acceptance
