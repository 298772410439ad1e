#include "hololab/group.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <random>
#include <set>

#include "hololab/error.hpp"

namespace hololab {

namespace {

constexpr std::size_t kFullAssociativityCheck = 256;
constexpr std::size_t kSampledTriples = 1'000'000;
constexpr std::uint64_t kAssociativitySeed = 0x5eed'a550c;

void check_latin(std::size_t n, const std::vector<Elem>& t) {
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      const Elem v = t[a * n + b];
      if (v >= n || seen[v]) {
        throw Error(ErrorCode::NotLatinSquare,
                    "row " + std::to_string(a) + " is not a permutation");
      }
      seen[v] = 1;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < n; ++a) {
      const Elem v = t[a * n + b];
      if (seen[v]) {
        throw Error(ErrorCode::NotLatinSquare,
                    "column " + std::to_string(b) + " is not a permutation");
      }
      seen[v] = 1;
    }
  }
}

std::optional<Elem> find_identity(std::size_t n, const std::vector<Elem>& t) {
  for (Elem e = 0; e < n; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) {
      ok = t[e * n + x] == x && t[x * n + e] == x;
    }
    if (ok) return e;
  }
  return std::nullopt;
}

void check_associative(std::size_t n, const std::vector<Elem>& t) {
  auto mul = [&](Elem a, Elem b) { return t[a * n + b]; };
  auto fail = [](Elem a, Elem b, Elem c) {
    throw Error(ErrorCode::NotAssociative,
                "(ab)c != a(bc) at (" + std::to_string(a) + "," +
                    std::to_string(b) + "," + std::to_string(c) + ")");
  };
  if (n <= kFullAssociativityCheck) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        const Elem ab = mul(a, b);
        for (Elem c = 0; c < n; ++c)
          if (mul(ab, c) != mul(a, mul(b, c))) fail(a, b, c);
      }
    return;
  }
  std::mt19937_64 rng(kAssociativitySeed);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
  for (std::size_t i = 0; i < kSampledTriples; ++i) {
    const Elem a = pick(rng), b = pick(rng), c = pick(rng);
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail(a, b, c);
  }
}

}  // namespace

GroupTable::GroupTable() {
  auto impl = std::make_shared<Impl>();
  impl->order = 1;
  impl->table = {0};
  impl->inverse = {0};
  impl->element_orders = {1};
  impl->name = "C1";
  impl_ = std::move(impl);
}

GroupTable GroupTable::from_flat(std::size_t order, std::vector<Elem> flat,
                                 std::string name) {
  if (order == 0 || flat.size() != order * order) {
    throw Error(ErrorCode::NotLatinSquare, "table is not square");
  }
  check_latin(order, flat);
  const auto e = find_identity(order, flat);
  if (!e) throw Error(ErrorCode::NoIdentity, "no two-sided identity");

  if (*e != 0) {
    auto relabel = [e = *e](Elem x) -> Elem {
      if (x == e) return 0;
      if (x == 0) return e;
      return x;
    };
    std::vector<Elem> moved(flat.size());
    for (Elem a = 0; a < order; ++a)
      for (Elem b = 0; b < order; ++b)
        moved[relabel(a) * order + relabel(b)] = relabel(flat[a * order + b]);
    flat = std::move(moved);
  }
  check_associative(order, flat);

  auto impl = std::make_shared<Impl>();
  impl->order = order;
  impl->name = std::move(name);
  impl->inverse.resize(order);
  for (Elem a = 0; a < order; ++a)
    for (Elem b = 0; b < order; ++b)
      if (flat[a * order + b] == 0) impl->inverse[a] = b;
  impl->element_orders.resize(order);
  for (Elem a = 0; a < order; ++a) {
    std::size_t k = 1;
    for (Elem x = a; x != 0; x = flat[x * order + a]) ++k;
    impl->element_orders[a] = k;
  }
  impl->table = std::move(flat);
  return GroupTable(std::move(impl));
}

GroupTable GroupTable::make(const std::vector<std::vector<Elem>>& rows,
                            std::string name) {
  const std::size_t n = rows.size();
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw Error(ErrorCode::NotLatinSquare, "table is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return from_flat(n, std::move(flat), std::move(name));
}

GroupTable GroupTable::renamed(std::string name) const {
  auto impl = std::make_shared<Impl>(*impl_);
  impl->name = std::move(name);
  return GroupTable(std::move(impl));
}

Elem GroupTable::power(Elem a, std::uint64_t k) const {
  Elem result = 0;
  Elem base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

bool GroupTable::is_abelian() const {
  const auto n = order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<Elem>> GroupTable::rows() const {
  std::vector<std::vector<Elem>> out(order());
  for (Elem a = 0; a < order(); ++a) {
    auto r = row(a);
    out[a].assign(r.begin(), r.end());
  }
  return out;
}

bool GroupTable::same_table(const GroupTable& other) const {
  return impl_ == other.impl_ || impl_->table == other.impl_->table;
}

bool Subgroup::contains(Elem x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

Subgroup trivial_subgroup() { return Subgroup{{0}}; }

Subgroup whole_group(const GroupTable& g) {
  Subgroup s;
  s.elements.resize(g.order());
  for (Elem x = 0; x < g.order(); ++x) s.elements[x] = x;
  return s;
}

Subgroup closure(const GroupTable& g, std::span<const Elem> seed) {
  std::vector<char> in(g.order());
  std::vector<Elem> members{0};
  in[0] = 1;
  std::vector<Elem> gens;
  for (Elem s : seed) {
    if (s != 0 && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Elem s : gens) {
      const Elem y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members)};
}

bool is_subgroup(const GroupTable& g, std::span<const Elem> elements) {
  std::vector<char> in(g.order());
  for (Elem x : elements) {
    if (x >= g.order()) return false;
    in[x] = 1;
  }
  if (!in[0]) return false;
  for (Elem a : elements)
    for (Elem b : elements)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

bool is_normal(const GroupTable& g, const Subgroup& s) {
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem h : s.elements)
      if (!s.contains(g.conj(h, x))) return false;
  return true;
}

Subgroup center(const GroupTable& g) {
  Subgroup z;
  for (Elem a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Elem b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.elements.push_back(a);
  }
  return z;
}

bool is_centerless(const GroupTable& g) { return center(g).order() == 1; }

Subgroup commutator_subgroup(const GroupTable& g) {
  std::vector<char> seen(g.order());
  std::vector<Elem> comms;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) {
      const Elem c = g.commutator(a, b);
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return closure(g, comms);
}

std::vector<Elem> generating_sequence(const GroupTable& g) {
  std::vector<Elem> gens;
  Subgroup current = trivial_subgroup();
  while (current.order() < g.order()) {
    Elem best = 0;
    std::size_t best_size = 0;
    std::vector<Elem> trial = gens;
    trial.push_back(0);
    for (Elem x = 1; x < g.order(); ++x) {
      if (current.contains(x)) continue;
      trial.back() = x;
      const auto size = closure(g, trial).order();
      if (size > best_size) {
        best_size = size;
        best = x;
        if (size == g.order()) break;
      }
    }
    gens.push_back(best);
    current = closure(g, gens);
  }
  return gens;
}

std::vector<std::vector<Elem>> conjugacy_classes(const GroupTable& g,
                                                 const Limits& limits) {
  if (g.order() > limits.normal_subgroup_cap) {
    throw Error(ErrorCode::CapExceeded,
                "group order " + std::to_string(g.order()) + " above class cap " +
                    std::to_string(limits.normal_subgroup_cap));
  }
  std::vector<char> done(g.order());
  std::vector<std::vector<Elem>> classes;
  for (Elem x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<Elem> cls;
    for (Elem y = 0; y < g.order(); ++y) {
      const Elem c = g.conj(x, y);
      if (!done[c]) {
        done[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<Subgroup> normal_subgroups(const GroupTable& g, const Limits& limits) {
  const auto classes = conjugacy_classes(g, limits);
  std::set<Subgroup> found{trivial_subgroup()};
  std::deque<Subgroup> queue{trivial_subgroup()};
  while (!queue.empty()) {
    const Subgroup n = std::move(queue.front());
    queue.pop_front();
    for (const auto& cls : classes) {
      if (n.contains(cls.front())) continue;
      std::vector<Elem> seed = n.elements;
      seed.insert(seed.end(), cls.begin(), cls.end());
      Subgroup next = closure(g, seed);
      if (found.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {found.begin(), found.end()};
}

std::optional<DirectDecomposition> is_decomposable(const GroupTable& g,
                                                   const Limits& limits) {
  const auto normals = normal_subgroups(g, limits);
  for (const auto& h : normals) {
    if (h.order() == 1 || h.order() == g.order()) continue;
    for (const auto& k : normals) {
      if (k.order() == 1 || k.order() == g.order()) continue;
      if (h.order() * k.order() != g.order()) continue;
      std::vector<Elem> meet;
      std::set_intersection(h.elements.begin(), h.elements.end(), k.elements.begin(),
                            k.elements.end(), std::back_inserter(meet));
      if (meet.size() == 1) return DirectDecomposition{h, k};
    }
  }
  return std::nullopt;
}

Quotient quotient(const GroupTable& g, const Subgroup& normal) {
  if (!is_subgroup(g, normal.elements) || !is_normal(g, normal)) {
    throw Error(ErrorCode::NotNormal, "subgroup is not normal");
  }
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> label(g.order(), kUnset);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (label[x] != kUnset) continue;
    const auto id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem h : normal.elements) label[g.mul(x, h)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<Elem> flat(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) flat[a * m + b] = label[g.mul(reps[a], reps[b])];
  std::string name = g.name().empty() ? std::string{} : g.name() + "/N";
  return Quotient{GroupTable::from_flat(m, std::move(flat), std::move(name)),
                  std::move(label)};
}

GroupTable subgroup_table(const GroupTable& g, const Subgroup& s, std::string name) {
  const std::size_t m = s.order();
  std::vector<Elem> index(g.order(), 0);
  for (std::size_t i = 0; i < m; ++i) index[s.elements[i]] = static_cast<Elem>(i);
  std::vector<Elem> flat(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      flat[a * m + b] = index[g.mul(s.elements[a], s.elements[b])];
  return GroupTable::from_flat(m, std::move(flat), std::move(name));
}

std::vector<Subgroup> index_two_abelian_subgroups(const GroupTable& g,
                                                  const Limits& limits) {
  if (g.order() % 2 != 0) throw Error(ErrorCode::OddOrder, "group order is odd");
  if (g.order() > limits.normal_subgroup_cap) {
    throw Error(ErrorCode::CapExceeded, "group order above cap");
  }
  // Index-2 subgroups contain [G,G]; they correspond to index-2 subgroups of
  // G/[G,G], which in turn are kernels of nonzero functionals on the F_2
  // space (G/[G,G]) / squares.
  const Quotient abel = quotient(g, commutator_subgroup(g));
  const GroupTable& a = abel.group;
  std::vector<Elem> squares;
  for (Elem x = 0; x < a.order(); ++x) squares.push_back(a.mul(x, x));
  const Quotient mod2 = quotient(a, closure(a, squares));
  const GroupTable& v = mod2.group;

  std::vector<Elem> basis;
  Subgroup span = trivial_subgroup();
  for (Elem x = 1; x < v.order(); ++x) {
    if (span.contains(x)) continue;
    basis.push_back(x);
    span = closure(v, basis);
  }
  const std::size_t dim = basis.size();
  std::vector<std::uint32_t> coords(v.order(), 0);
  for (std::uint32_t mask = 0; mask < (1u << dim); ++mask) {
    Elem x = 0;
    for (std::size_t i = 0; i < dim; ++i)
      if (mask >> i & 1u) x = v.mul(x, basis[i]);
    coords[x] = mask;
  }

  std::vector<Subgroup> out;
  for (std::uint32_t functional = 1; functional < (1u << dim); ++functional) {
    Subgroup s;
    for (Elem x = 0; x < g.order(); ++x) {
      const Elem image = mod2.projection[abel.projection[x]];
      if (std::popcount(coords[image] & functional) % 2 == 0) s.elements.push_back(x);
    }
    bool abelian = true;
    for (std::size_t i = 0; i < s.elements.size() && abelian; ++i)
      for (std::size_t j = i + 1; j < s.elements.size() && abelian; ++j)
        abelian = g.mul(s.elements[i], s.elements[j]) == g.mul(s.elements[j], s.elements[i]);
    if (abelian) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hololab
