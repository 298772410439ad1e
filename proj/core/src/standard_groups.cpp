#include "hololab/standard_groups.hpp"

#include <algorithm>
#include <numeric>

#include "hololab/error.hpp"

namespace hololab {

namespace {

constexpr std::size_t kMaxSymmetricDegree = 6;

std::size_t lex_rank(const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (perm[j] < perm[i]) ++smaller;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

bool is_even(const std::vector<std::size_t>& perm) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[j] < perm[i]) ++inversions;
  return inversions % 2 == 0;
}

GroupTable permutation_table(std::size_t n, bool even_only, std::string name) {
  if (n == 0 || n > kMaxSymmetricDegree) {
    throw Error(ErrorCode::InvalidParameter,
                "permutation groups are built for 1 <= n <= 6");
  }
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (!even_only || is_even(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::size_t total = 1;
  for (std::size_t i = 2; i <= n; ++i) total *= i;
  std::vector<Elem> index_of_rank(total, 0);
  for (std::size_t i = 0; i < perms.size(); ++i) index_of_rank[lex_rank(perms[i])] = static_cast<Elem>(i);

  const std::size_t m = perms.size();
  std::vector<Elem> flat(m * m);
  std::vector<std::size_t> prod(n);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t x = 0; x < n; ++x) prod[x] = perms[a][perms[b][x]];
      flat[a * m + b] = index_of_rank[lex_rank(prod)];
    }
  return GroupTable::from_flat(m, std::move(flat), std::move(name));
}

}  // namespace

GroupTable trivial_group() { return GroupTable::from_flat(1, {0}, "C1"); }

GroupTable cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidParameter, "cyclic group of order 0");
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = static_cast<Elem>((a + b) % n);
  return GroupTable::from_flat(n, std::move(flat), "C" + std::to_string(n));
}

GroupTable symmetric(std::size_t n) {
  return permutation_table(n, false, "S" + std::to_string(n));
}

GroupTable alternating(std::size_t n) {
  return permutation_table(n, true, "A" + std::to_string(n));
}

GroupTable dihedral(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidParameter, "dihedral group of order 0");
  const std::size_t m = 2 * n;
  std::vector<Elem> flat(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      const std::size_t i = x % n, f = x / n, j = y % n, g = y / n;
      // r^i s^f r^j s^g = r^(i ± j) s^(f+g), since s r^j = r^-j s
      const std::size_t rot = f == 0 ? (i + j) % n : (i + n - j) % n;
      flat[x * m + y] = static_cast<Elem>(rot + n * ((f + g) % 2));
    }
  return GroupTable::from_flat(m, std::move(flat), "D" + std::to_string(n));
}

GroupTable quaternion8() {
  // index 2u + s encodes (-1)^s · unit u, units ordered 1, i, j, k
  constexpr int unit_product[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  constexpr int sign_product[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<Elem> flat(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      const int s = (x % 2 + y % 2 + sign_product[u][v]) % 2;
      flat[x * 8 + y] = static_cast<Elem>(2 * unit_product[u][v] + s);
    }
  return GroupTable::from_flat(8, std::move(flat), "Q8");
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const std::size_t a = g.order(), b = h.order(), m = a * b;
  std::vector<Elem> flat(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      const auto gx = static_cast<Elem>(x % a), hx = static_cast<Elem>(x / a);
      const auto gy = static_cast<Elem>(y % a), hy = static_cast<Elem>(y / a);
      flat[x * m + y] = static_cast<Elem>(g.mul(gx, gy) + a * h.mul(hx, hy));
    }
  std::string name;
  if (!g.name().empty() && !h.name().empty()) name = g.name() + "x" + h.name();
  return GroupTable::from_flat(m, std::move(flat), std::move(name));
}

void validate(const SemidirectSpec& spec) {
  const auto& a = spec.normal_part;
  const auto& b = spec.acting_part;
  if (spec.action.size() != b.order()) {
    throw Error(ErrorCode::InvalidParameter, "one automorphism per acting element required");
  }
  for (const auto& phi : spec.action) {
    if (phi.size() != a.order()) throw Error(ErrorCode::InvalidParameter, "action map has wrong length");
    std::vector<char> hit(a.order());
    for (Elem v : phi) {
      if (v >= a.order() || hit[v]) throw Error(ErrorCode::InvalidParameter, "action map is not bijective");
      hit[v] = 1;
    }
    for (Elem x = 0; x < a.order(); ++x)
      for (Elem y = 0; y < a.order(); ++y)
        if (phi[a.mul(x, y)] != a.mul(phi[x], phi[y])) {
          throw Error(ErrorCode::InvalidParameter, "action map is not a homomorphism");
        }
  }
  for (Elem x = 0; x < a.order(); ++x)
    if (spec.action[0][x] != x) throw Error(ErrorCode::InvalidParameter, "identity must act trivially");
  for (Elem b1 = 0; b1 < b.order(); ++b1)
    for (Elem b2 = 0; b2 < b.order(); ++b2)
      for (Elem x = 0; x < a.order(); ++x)
        if (spec.action[b.mul(b1, b2)][x] != spec.action[b1][spec.action[b2][x]]) {
          throw Error(ErrorCode::InvalidParameter, "action is not a homomorphism into Aut");
        }
}

GroupTable semidirect(const SemidirectSpec& spec, std::string name) {
  validate(spec);
  const auto& a = spec.normal_part;
  const auto& b = spec.acting_part;
  const std::size_t na = a.order(), m = na * b.order();
  std::vector<Elem> flat(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      const auto a1 = static_cast<Elem>(x % na), b1 = static_cast<Elem>(x / na);
      const auto a2 = static_cast<Elem>(y % na), b2 = static_cast<Elem>(y / na);
      flat[x * m + y] = static_cast<Elem>(a.mul(a1, spec.action[b1][a2]) + na * b.mul(b1, b2));
    }
  return GroupTable::from_flat(m, std::move(flat), std::move(name));
}

Subgroup center_of_semidirect(const SemidirectSpec& spec) {
  validate(spec);
  const auto& a = spec.normal_part;
  const auto& b = spec.acting_part;
  const Subgroup zb = center(b);
  Subgroup z;
  for (Elem bb : zb.elements) {
    for (Elem aa = 0; aa < a.order(); ++aa) {
      bool fixed = true;
      for (Elem c = 0; c < b.order() && fixed; ++c) fixed = spec.action[c][aa] == aa;
      if (!fixed) continue;
      // conjugation by ab on A sends x to a·φ_b(x)·a^-1
      bool trivial = true;
      for (Elem x = 0; x < a.order() && trivial; ++x)
        trivial = a.mul(a.mul(aa, spec.action[bb][x]), a.inv(aa)) == x;
      if (trivial) z.elements.push_back(static_cast<Elem>(aa + a.order() * bb));
    }
  }
  std::sort(z.elements.begin(), z.elements.end());
  return z;
}

SemidirectSpec swap_wreath(const GroupTable& a) {
  GroupTable aa = direct_product(a, a);
  const std::size_t n = a.order();
  std::vector<Elem> identity(n * n), swap(n * n);
  for (std::size_t x = 0; x < n * n; ++x) {
    identity[x] = static_cast<Elem>(x);
    swap[x] = static_cast<Elem>(x / n + n * (x % n));
  }
  return SemidirectSpec{std::move(aa), cyclic(2), {identity, swap}};
}

SemidirectSpec inversion_semidirect(std::size_t n) {
  GroupTable c = cyclic(n);
  std::vector<Elem> identity(n), inversion(n);
  for (std::size_t x = 0; x < n; ++x) {
    identity[x] = static_cast<Elem>(x);
    inversion[x] = static_cast<Elem>((n - x) % n);
  }
  return SemidirectSpec{std::move(c), cyclic(2), {identity, inversion}};
}

}  // namespace hololab
