#include "hololab/holomorph.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <thread>

#include "hololab/error.hpp"
#include "hololab/homomorphism.hpp"

namespace hololab {

namespace {

using Key = std::uint64_t;
constexpr std::size_t kMaxPackedDegree = 16;

Key pack(const Point* images, std::size_t d) {
  Key k = 0;
  for (std::size_t x = 0; x < d; ++x) k |= Key{images[x]} << (4 * x);
  return k;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

/// The permutation of lexicographic rank `rank` in Sym(d).
std::vector<Point> unrank(std::uint64_t rank, std::size_t d) {
  std::vector<Point> pool(d);
  std::iota(pool.begin(), pool.end(), Point{0});
  std::vector<Point> out;
  out.reserve(d);
  for (std::size_t i = d; i > 0; --i) {
    const std::uint64_t f = factorial(i - 1);
    const auto pick = static_cast<std::size_t>(rank / f);
    rank %= f;
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

void check_degree(std::size_t d, const Limits& limits) {
  if (d > kHardDegreeCeiling || d > limits.max_degree) {
    throw Error(ErrorCode::CapExceeded,
                "Sym(" + std::to_string(d) + ") scan exceeds degree cap " +
                    std::to_string(std::min(limits.max_degree, kHardDegreeCeiling)));
  }
}

/// Visits Sym(d) in rank order, split into contiguous rank ranges across
/// workers; matches are concatenated in range order so the output is sorted.
template <typename Accept>
std::vector<Permutation> scan_sym(std::size_t d, const Limits& limits, const Accept& accept) {
  check_degree(d, limits);
  const std::uint64_t total = factorial(d);
  const unsigned workers = std::max(1u, limits.threads);
  const std::uint64_t chunks = std::min<std::uint64_t>(total, std::uint64_t{workers} * 16);
  std::vector<std::vector<Permutation>> found(chunks);
  std::atomic<std::uint64_t> next{0};

  auto work = [&] {
    std::vector<Point> sigma, sigma_inv(d);
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      const std::uint64_t lo = total * c / chunks, hi = total * (c + 1) / chunks;
      sigma = unrank(lo, d);
      for (std::uint64_t r = lo; r < hi; ++r) {
        for (std::size_t x = 0; x < d; ++x) sigma_inv[sigma[x]] = static_cast<Point>(x);
        if (accept(sigma.data(), sigma_inv.data())) {
          found[c].push_back(Permutation::unchecked(sigma));
        }
        std::next_permutation(sigma.begin(), sigma.end());
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  }
  std::vector<Permutation> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  return out;
}

std::vector<std::vector<Point>> raw_images(const std::vector<Permutation>& perms) {
  std::vector<std::vector<Point>> out;
  for (const auto& p : perms) out.emplace_back(p.images().begin(), p.images().end());
  return out;
}

}  // namespace

LabeledRep lambda_rep(const GroupTable& g) {
  LabeledRep rep;
  const std::size_t n = g.order();
  for (Elem a = 0; a < n; ++a) {
    std::vector<Point> images(n);
    for (Elem x = 0; x < n; ++x) images[x] = static_cast<Point>(g.mul(a, x));
    rep.images.push_back(Permutation::unchecked(std::move(images)));
  }
  rep.group = PermSubgroup::from_elements(n, rep.images);
  return rep;
}

LabeledRep rho_rep(const GroupTable& g) {
  LabeledRep rep;
  const std::size_t n = g.order();
  for (Elem a = 0; a < n; ++a) {
    std::vector<Point> images(n);
    for (Elem x = 0; x < n; ++x) images[x] = static_cast<Point>(g.mul(x, g.inv(a)));
    rep.images.push_back(Permutation::unchecked(std::move(images)));
  }
  rep.group = PermSubgroup::from_elements(n, rep.images);
  return rep;
}

Permutation inv_perm(const GroupTable& g) {
  std::vector<Point> images(g.order());
  for (Elem x = 0; x < g.order(); ++x) images[x] = static_cast<Point>(g.inv(x));
  return Permutation::unchecked(std::move(images));
}

PermSubgroup hol(const GroupTable& g, const Limits& limits) {
  const auto lam = lambda_rep(g);
  std::vector<Permutation> gens;
  for (Elem x : generating_sequence(g)) gens.push_back(lam.images[x]);
  const GroupTable aut = automorphism_group(g, limits);
  std::vector<std::vector<Elem>> maps;
  for (auto& a : automorphisms(g, limits)) maps.push_back(std::move(a.images));
  std::sort(maps.begin(), maps.end());
  for (Elem x : generating_sequence(aut)) {
    std::vector<Point> images(maps[x].begin(), maps[x].end());
    gens.push_back(Permutation::unchecked(std::move(images)));
  }
  return PermSubgroup::generate(g.order(), std::move(gens), limits);
}

PermSubgroup inhol(const GroupTable& g, const Limits& limits) {
  const auto lam = lambda_rep(g);
  const auto rho = rho_rep(g);
  std::vector<Permutation> gens;
  for (Elem x : generating_sequence(g)) {
    gens.push_back(lam.images[x]);
    gens.push_back(rho.images[x]);
  }
  return PermSubgroup::generate(g.order(), std::move(gens), limits);
}

bool is_regular(const PermSubgroup& r) {
  if (r.order() != r.degree()) return false;
  std::vector<char> hit(r.degree());
  for (const auto& s : r.elements()) {
    if (hit[s(0)]) return false;
    hit[s(0)] = 1;
  }
  return true;
}

PermSubgroup centralizer_of_regular(const PermSubgroup& r) {
  if (!is_regular(r)) throw Error(ErrorCode::InvalidParameter, "subgroup is not regular");
  const std::size_t d = r.degree();
  std::vector<const Permutation*> sending(d);
  for (const auto& s : r.elements()) sending[s(0)] = &s;
  std::vector<Permutation> out;
  for (std::size_t a = 0; a < d; ++a) {
    std::vector<Point> images(d);
    for (std::size_t x = 0; x < d; ++x) images[x] = (*sending[x])(static_cast<Point>(a));
    out.push_back(Permutation::unchecked(std::move(images)));
  }
  return PermSubgroup::from_elements(d, std::move(out));
}

PermSubgroup centralizer_by_scan(const PermSubgroup& r, const Limits& limits) {
  const std::size_t d = r.degree();
  const auto gens = raw_images(r.generators());
  auto accept = [&](const Point* sigma, const Point*) {
    for (const auto& g : gens)
      for (std::size_t x = 0; x < d; ++x)
        if (sigma[g[x]] != g[sigma[x]]) return false;
    return true;
  };
  return PermSubgroup::from_elements(d, scan_sym(d, limits, accept));
}

PermSubgroup centralizer_in_sym(const PermSubgroup& r, const Limits& limits) {
  if (is_regular(r)) return centralizer_of_regular(r);
  return centralizer_by_scan(r, limits);
}

PermSubgroup normalizer_in_sym(std::size_t degree, const PermSubgroup& h, const Limits& limits) {
  if (h.degree() != degree) throw Error(ErrorCode::InvalidParameter, "degree mismatch");
  check_degree(degree, limits);
  static_assert(kHardDegreeCeiling <= kMaxPackedDegree);
  std::vector<Key> members;
  members.reserve(h.order());
  for (const auto& e : h.elements()) members.push_back(pack(e.images().data(), degree));
  std::sort(members.begin(), members.end());
  const auto gens = raw_images(h.generators());

  auto accept = [&](const Point* sigma, const Point* sigma_inv) {
    Point conj[kMaxPackedDegree];
    for (const auto& g : gens) {
      for (std::size_t x = 0; x < degree; ++x) conj[x] = sigma_inv[g[sigma[x]]];
      if (!std::binary_search(members.begin(), members.end(), pack(conj, degree))) return false;
    }
    return true;
  };
  return PermSubgroup::from_elements(degree, scan_sym(degree, limits, accept));
}

PermSubgroup nhol(const GroupTable& g, const Limits& limits) {
  check_degree(g.order(), limits);
  return normalizer_in_sym(g.order(), hol(g, limits), limits);
}

std::vector<PermSubgroup> regular_normal_subgroups_isomorphic_to(const PermSubgroup& ambient,
                                                                 const GroupTable& g,
                                                                 const Limits& limits) {
  const std::size_t d = ambient.degree();
  if (g.order() != d) return {};
  std::vector<const Permutation*> semiregular;
  for (const auto& e : ambient.elements())
    if (!e.is_identity() && e.fixed_points() == 0) semiregular.push_back(&e);

  Limits bounded = limits;
  bounded.materialize_cap = d;
  std::set<std::vector<Permutation>> seen;
  std::vector<PermSubgroup> out;
  auto consider = [&](std::vector<Permutation> seed) {
    PermSubgroup r;
    try {
      r = PermSubgroup::generate(d, std::move(seed), bounded);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::CapExceeded) return;
      throw;
    }
    if (r.order() != d || !seen.insert(r.elements()).second) return;
    if (!is_regular(r)) return;
    for (const auto& a : ambient.generators())
      for (const auto& x : r.generators())
        if (!r.contains(conjugate(x, a))) return;
    if (!is_isomorphic(r.to_group_table(), g, limits)) return;
    out.push_back(std::move(r));
  };
  for (std::size_t i = 0; i < semiregular.size(); ++i) {
    consider({*semiregular[i]});
    for (std::size_t j = i + 1; j < semiregular.size(); ++j)
      consider({*semiregular[i], *semiregular[j]});
  }
  std::sort(out.begin(), out.end(), [](const PermSubgroup& a, const PermSubgroup& b) {
    return a.elements() < b.elements();
  });
  return out;
}

}  // namespace hololab
