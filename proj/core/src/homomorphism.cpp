#include "hololab/homomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hololab/error.hpp"

namespace hololab {

namespace {

constexpr Elem kUnset = ~Elem{0};

/// Cayley-graph edges of the domain in breadth-first order. Tree edges
/// assign a new image; the others are consistency checks.
struct CayleyPlan {
  std::vector<Elem> gens;
  struct Edge {
    Elem from;
    std::uint32_t gen;
    Elem to;
    bool tree;
  };
  std::vector<Edge> edges;
};

CayleyPlan plan(const GroupTable& domain) {
  CayleyPlan p;
  p.gens = generating_sequence(domain);
  std::vector<char> seen(domain.order());
  std::vector<Elem> queue{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem x = queue[i];
    for (std::uint32_t k = 0; k < p.gens.size(); ++k) {
      const Elem y = domain.mul(x, p.gens[k]);
      const bool fresh = !seen[y];
      if (fresh) {
        seen[y] = 1;
        queue.push_back(y);
      }
      p.edges.push_back({x, k, y, fresh});
    }
  }
  return p;
}

bool extend(const CayleyPlan& p, const GroupTable& codomain,
            const std::vector<Elem>& gen_images, std::vector<Elem>& images) {
  std::fill(images.begin(), images.end(), kUnset);
  images[0] = 0;
  for (const auto& e : p.edges) {
    const Elem v = codomain.mul(images[e.from], gen_images[e.gen]);
    if (e.tree) {
      images[e.to] = v;
    } else if (images[e.to] != v) {
      return false;
    }
  }
  return true;
}

enum class Mode { All, Bijective };

template <typename Visit>
void scan(const GroupTable& domain, const GroupTable& codomain, Mode mode,
          const Limits& limits, Visit&& visit) {
  const CayleyPlan p = plan(domain);
  const std::size_t k = p.gens.size();

  long double tuples = 1;
  for (std::size_t i = 0; i < k; ++i) tuples *= static_cast<long double>(codomain.order());
  if (tuples > static_cast<long double>(limits.hom_tuple_cap)) {
    throw Error(ErrorCode::CapExceeded,
                "homomorphism scan needs " + std::to_string(codomain.order()) + "^" +
                    std::to_string(k) + " tuples");
  }

  // An image must have order dividing the generator's order; equal order
  // when the map is to be bijective.
  std::vector<std::vector<Elem>> candidates(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto ord = domain.element_order(p.gens[i]);
    for (Elem y = 0; y < codomain.order(); ++y) {
      const auto oy = codomain.element_order(y);
      if (mode == Mode::Bijective ? oy == ord : ord % oy == 0) candidates[i].push_back(y);
    }
    if (candidates[i].empty()) return;
  }

  std::vector<std::size_t> pos(k, 0);
  std::vector<Elem> gen_images(k);
  std::vector<Elem> images(domain.order());
  std::vector<char> hit(codomain.order());
  while (true) {
    for (std::size_t i = 0; i < k; ++i) gen_images[i] = candidates[i][pos[i]];
    if (extend(p, codomain, gen_images, images)) {
      bool keep = true;
      if (mode == Mode::Bijective) {
        std::fill(hit.begin(), hit.end(), 0);
        for (Elem v : images) {
          if (hit[v]) {
            keep = false;
            break;
          }
          hit[v] = 1;
        }
      }
      if (keep && !visit(images)) return;
    }
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++pos[i] < candidates[i].size()) break;
      pos[i] = 0;
      if (i == 0) return;
    }
    if (k == 0) return;
  }
}

}  // namespace

bool Homomorphism::is_trivial() const {
  return std::all_of(images.begin(), images.end(), [](Elem v) { return v == 0; });
}

bool Homomorphism::is_injective() const { return kernel().order() == 1; }

Subgroup Homomorphism::kernel() const {
  Subgroup k;
  for (Elem x = 0; x < images.size(); ++x)
    if (images[x] == 0) k.elements.push_back(x);
  return k;
}

Subgroup Homomorphism::image() const {
  Subgroup s{images};
  std::sort(s.elements.begin(), s.elements.end());
  s.elements.erase(std::unique(s.elements.begin(), s.elements.end()), s.elements.end());
  return s;
}

bool is_homomorphism(const GroupTable& domain, const GroupTable& codomain,
                     const std::vector<Elem>& images) {
  if (images.size() != domain.order()) return false;
  for (Elem v : images)
    if (v >= codomain.order()) return false;
  for (Elem x = 0; x < domain.order(); ++x)
    for (Elem y = 0; y < domain.order(); ++y)
      if (images[domain.mul(x, y)] != codomain.mul(images[x], images[y])) return false;
  return true;
}

Homomorphism make_homomorphism(const GroupTable& domain, const GroupTable& codomain,
                               std::vector<Elem> images) {
  if (!is_homomorphism(domain, codomain, images)) {
    throw Error(ErrorCode::InvalidParameter, "image table is not a homomorphism");
  }
  return Homomorphism{domain, codomain, std::move(images)};
}

Homomorphism identity_map(const GroupTable& g) {
  std::vector<Elem> images(g.order());
  for (Elem x = 0; x < g.order(); ++x) images[x] = x;
  return Homomorphism{g, g, std::move(images)};
}

Homomorphism trivial_map(const GroupTable& domain, const GroupTable& codomain) {
  return Homomorphism{domain, codomain, std::vector<Elem>(domain.order(), 0)};
}

std::vector<Homomorphism> homomorphisms(const GroupTable& domain,
                                        const GroupTable& codomain,
                                        const Limits& limits) {
  std::vector<Homomorphism> out;
  scan(domain, codomain, Mode::All, limits, [&](const std::vector<Elem>& images) {
    out.push_back(Homomorphism{domain, codomain, images});
    return true;
  });
  return out;
}

std::vector<Homomorphism> automorphisms(const GroupTable& g, const Limits& limits) {
  std::vector<Homomorphism> out;
  scan(g, g, Mode::Bijective, limits, [&](const std::vector<Elem>& images) {
    out.push_back(Homomorphism{g, g, images});
    return true;
  });
  return out;
}

std::vector<Homomorphism> inner_automorphisms(const GroupTable& g) {
  std::set<std::vector<Elem>> maps;
  for (Elem c = 0; c < g.order(); ++c) {
    std::vector<Elem> images(g.order());
    for (Elem x = 0; x < g.order(); ++x) images[x] = g.conj(x, c);
    maps.insert(std::move(images));
  }
  std::vector<Homomorphism> out;
  for (const auto& m : maps) out.push_back(Homomorphism{g, g, m});
  return out;
}

std::size_t outer_order(const GroupTable& g, const Limits& limits) {
  return automorphisms(g, limits).size() / inner_automorphisms(g).size();
}

GroupTable automorphism_group(const GroupTable& g, const Limits& limits) {
  std::vector<std::vector<Elem>> maps;
  for (auto& a : automorphisms(g, limits)) maps.push_back(std::move(a.images));
  std::sort(maps.begin(), maps.end());
  std::map<std::vector<Elem>, Elem> index;
  for (std::size_t i = 0; i < maps.size(); ++i) index[maps[i]] = static_cast<Elem>(i);
  const std::size_t m = maps.size();
  std::vector<Elem> flat(m * m);
  std::vector<Elem> composed(g.order());
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      for (Elem x = 0; x < g.order(); ++x) composed[x] = maps[a][maps[b][x]];
      flat[a * m + b] = index.at(composed);
    }
  return GroupTable::from_flat(m, std::move(flat), g.name().empty() ? "" : "Aut(" + g.name() + ")");
}

GroupTable outer_automorphism_group(const GroupTable& g, const Limits& limits) {
  std::vector<std::vector<Elem>> maps;
  for (auto& a : automorphisms(g, limits)) maps.push_back(std::move(a.images));
  std::sort(maps.begin(), maps.end());
  const GroupTable aut = automorphism_group(g, limits);
  Subgroup inn;
  for (const auto& c : inner_automorphisms(g)) {
    const auto it = std::lower_bound(maps.begin(), maps.end(), c.images);
    inn.elements.push_back(static_cast<Elem>(it - maps.begin()));
  }
  std::sort(inn.elements.begin(), inn.elements.end());
  GroupTable out = quotient(aut, inn).group;
  return out.renamed(g.name().empty() ? "" : "Out(" + g.name() + ")");
}

std::optional<Homomorphism> is_isomorphic(const GroupTable& g, const GroupTable& h,
                                          const Limits& limits) {
  if (g.order() != h.order()) return std::nullopt;
  std::vector<std::size_t> og, oh;
  for (Elem x = 0; x < g.order(); ++x) {
    og.push_back(g.element_order(x));
    oh.push_back(h.element_order(x));
  }
  std::sort(og.begin(), og.end());
  std::sort(oh.begin(), oh.end());
  if (og != oh) return std::nullopt;
  std::optional<Homomorphism> found;
  scan(g, h, Mode::Bijective, limits, [&](const std::vector<Elem>& images) {
    found = Homomorphism{g, h, images};
    return false;
  });
  return found;
}

bool is_characteristic(const Subgroup& s, const GroupTable& g, const Limits& limits) {
  for (const auto& a : automorphisms(g, limits))
    for (Elem x : s.elements)
      if (!s.contains(a.images[x])) return false;
  return true;
}

}  // namespace hololab
