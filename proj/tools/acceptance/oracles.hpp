#pragma once

// Slow, independent reference implementations. Nothing here calls the
// library routine it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "hololab/group.hpp"
#include "hololab/liealg.hpp"
#include "hololab/permutation.hpp"

namespace oracle {

using hololab::Elem;
using hololab::GroupTable;
using Images = std::vector<std::uint16_t>;

/// Every map N → G checked against the full multiplication table.
inline std::vector<std::vector<Elem>> naive_homomorphisms(const GroupTable& n, const GroupTable& g) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> f(n.order(), 0);
  for (;;) {
    bool ok = true;
    for (Elem a = 0; a < n.order() && ok; ++a)
      for (Elem b = 0; b < n.order() && ok; ++b) ok = f[n.mul(a, b)] == g.mul(f[a], f[b]);
    if (ok) out.push_back(f);
    std::size_t i = 0;
    while (i < f.size() && f[i] + 1 == g.order()) f[i++] = 0;
    if (i == f.size()) break;
    ++f[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Elem> brute_center(const GroupTable& g) {
  std::vector<Elem> z;
  for (Elem a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Elem b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

inline Images compose(const Images& a, const Images& b) {  // a after b
  Images c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[b[x]];
  return c;
}

inline Images invert(const Images& a) {
  Images c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[a[x]] = static_cast<std::uint16_t>(x);
  return c;
}

inline std::set<Images> image_set(const hololab::PermSubgroup& h) {
  std::set<Images> s;
  for (const auto& e : h.elements()) s.emplace(e.images().begin(), e.images().end());
  return s;
}

/// Normalizer by conjugating every element of H, not just generators.
inline std::set<Images> brute_normalizer(std::size_t d, const std::set<Images>& h) {
  std::set<Images> out;
  Images sigma(d);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    const Images si = invert(sigma);
    bool ok = true;
    for (const auto& x : h) {
      if (!h.count(compose(si, compose(x, sigma)))) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

inline std::set<Images> brute_centralizer(std::size_t d, const std::set<Images>& h) {
  std::set<Images> out;
  Images sigma(d);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool ok = true;
    for (const auto& x : h) {
      if (compose(sigma, x) != compose(x, sigma)) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

/// Closes a set of permutations by repeated products.
inline std::set<Images> close(const std::vector<Images>& gens, std::size_t d) {
  Images id(d);
  std::iota(id.begin(), id.end(), 0);
  std::set<Images> seen{id};
  std::vector<Images> frontier{id};
  while (!frontier.empty()) {
    std::vector<Images> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        auto y = compose(g, x);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return seen;
}

/// Noncommutative polynomials over Z: word → coefficient.
using Poly = std::map<std::vector<int>, std::int64_t>;

inline void add_into(Poly& a, const Poly& b, std::int64_t s) {
  for (const auto& [w, c] : b) {
    auto& slot = a[w];
    slot += s * c;
    if (slot == 0) a.erase(w);
  }
}

inline Poly product(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [u, x] : a)
    for (const auto& [v, y] : b) {
      std::vector<int> w = u;
      w.insert(w.end(), v.begin(), v.end());
      auto& slot = out[w];
      slot += x * y;
      if (slot == 0) out.erase(w);
    }
  return out;
}

inline Poly commutator(const Poly& a, const Poly& b) {
  Poly out = product(a, b);
  add_into(out, product(b, a), -1);
  return out;
}

/// Image of a Hall basis element in the free associative algebra.
inline Poly expand(const hololab::HallBasis& basis, std::size_t i) {
  const auto& e = basis[i];
  if (e.generator >= 0) return Poly{{{e.generator}, 1}};
  return commutator(expand(basis, static_cast<std::size_t>(e.left)),
                    expand(basis, static_cast<std::size_t>(e.right)));
}

/// Lyndon words of length k over n letters, counted by brute force.
inline std::uint64_t lyndon_count(int n, int k) {
  std::uint64_t count = 0;
  std::vector<int> w(static_cast<std::size_t>(k), 0);
  for (;;) {
    bool lyndon = true;
    for (int r = 1; r < k && lyndon; ++r) {
      std::vector<int> rot(w.begin() + r, w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + r);
      lyndon = w < rot;
    }
    count += lyndon;
    int i = k - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == n - 1) w[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++w[static_cast<std::size_t>(i)];
  }
  return count;
}

/// Rank of integer row vectors modulo a large prime.
inline std::size_t rank_mod(std::vector<std::vector<std::int64_t>> rows, std::int64_t p) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  auto inv = [p](std::int64_t a) {
    std::int64_t r = 1, e = p - 2;
    a %= p;
    if (a < 0) a += p;
    while (e) {
      if (e & 1) r = static_cast<std::int64_t>((__int128)r * a % p);
      a = static_cast<std::int64_t>((__int128)a * a % p);
      e >>= 1;
    }
    return r;
  };
  for (auto& row : rows)
    for (auto& x : row) x = ((x % p) + p) % p;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t r = rank;
    while (r < rows.size() && rows[r][c] == 0) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[rank]);
    const std::int64_t iv = inv(rows[rank][c]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const std::int64_t f = static_cast<std::int64_t>((__int128)rows[i][c] * iv % p);
      for (std::size_t k = 0; k < cols; ++k)
        rows[i][k] = ((rows[i][k] - static_cast<std::int64_t>((__int128)f * rows[rank][k] % p)) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle
