#include "hololab/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "hololab/error.hpp"

namespace hololab {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size());
  for (Point p : images_) {
    if (p >= images_.size() || hit[p]) {
      throw Error(ErrorCode::InvalidParameter, "image array is not a bijection");
    }
    hit[p] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return unchecked(std::move(images));
}

Permutation Permutation::unchecked(std::vector<Point> images) {
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) inv[images_[x]] = static_cast<Point>(x);
  return unchecked(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

bool Permutation::is_even() const {
  std::vector<char> seen(images_.size());
  std::size_t transpositions = 0;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::size_t Permutation::fixed_points() const {
  std::size_t n = 0;
  for (std::size_t x = 0; x < images_.size(); ++x) n += images_[x] == x;
  return n;
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<char> seen(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    out += '(';
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = 1;
      if (y != x) out += ' ';
      out += std::to_string(y);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::vector<Point> images(b.images_.size());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = a.images_[b.images_[x]];
  return Permutation::unchecked(std::move(images));
}

Permutation conjugate(const Permutation& tau, const Permutation& sigma) {
  return sigma.inverse() * tau * sigma;
}

PermSubgroup PermSubgroup::generate(std::size_t degree, std::vector<Permutation> generators,
                                    const Limits& limits) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw Error(ErrorCode::InvalidParameter, "generator degree mismatch");
  }
  PermSubgroup h;
  h.degree_ = degree;
  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::vector<Permutation> sorted = elements;
  std::vector<Permutation> pending;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : generators) {
      Permutation y = elements[i] * g;
      pending.push_back(std::move(y));
    }
    // merge new elements in batches to keep membership lookups logarithmic
    if (pending.size() > 4096 || i + 1 == elements.size()) {
      std::sort(pending.begin(), pending.end());
      pending.erase(std::unique(pending.begin(), pending.end()), pending.end());
      std::vector<Permutation> fresh;
      for (auto& p : pending)
        if (!std::binary_search(sorted.begin(), sorted.end(), p)) fresh.push_back(std::move(p));
      pending.clear();
      if (!fresh.empty()) {
        if (sorted.size() + fresh.size() > limits.materialize_cap) {
          throw Error(ErrorCode::CapExceeded,
                      "permutation group larger than " + std::to_string(limits.materialize_cap));
        }
        elements.insert(elements.end(), fresh.begin(), fresh.end());
        std::vector<Permutation> merged;
        merged.reserve(sorted.size() + fresh.size());
        std::merge(sorted.begin(), sorted.end(), fresh.begin(), fresh.end(),
                   std::back_inserter(merged));
        sorted = std::move(merged);
      }
    }
  }
  h.elements_ = std::move(sorted);
  h.generators_ = std::move(generators);
  return h;
}

PermSubgroup PermSubgroup::from_elements(std::size_t degree, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermSubgroup h;
  h.degree_ = degree;
  h.elements_ = std::move(elements);
  if (h.elements_.empty() || !h.elements_.front().is_identity()) {
    throw Error(ErrorCode::InvalidParameter, "element list lacks the identity");
  }
  try {
    h.generators_ = first_fit_generators(degree, h.elements_);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CapExceeded) throw;
    throw Error(ErrorCode::InvalidParameter, "element list is not closed");
  }
  for (const auto& a : h.generators_)
    for (const auto& b : h.elements_)
      if (!h.contains(b * a)) throw Error(ErrorCode::InvalidParameter, "element list is not closed");
  return h;
}

bool PermSubgroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::size_t PermSubgroup::index_of(const Permutation& p) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return elements_.size();
  return static_cast<std::size_t>(it - elements_.begin());
}

bool PermSubgroup::is_subgroup_of(const PermSubgroup& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

GroupTable PermSubgroup::to_group_table(std::string name) const {
  const std::size_t m = elements_.size();
  std::vector<Elem> flat(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      flat[a * m + b] = static_cast<Elem>(index_of(elements_[a] * elements_[b]));
  return GroupTable::from_flat(m, std::move(flat), std::move(name));
}

std::vector<Permutation> first_fit_generators(std::size_t degree,
                                              const std::vector<Permutation>& elements) {
  std::vector<Permutation> gens;
  std::vector<Permutation> span{Permutation::identity(degree)};
  for (const auto& e : elements) {
    if (std::binary_search(span.begin(), span.end(), e)) continue;
    gens.push_back(e);
    Limits unbounded;
    unbounded.materialize_cap = elements.size();
    span = PermSubgroup::generate(degree, gens, unbounded).elements();
    if (span.size() == elements.size()) break;
  }
  return gens;
}

PermSubgroup subgroup_from_indices(const PermSubgroup& group, const Subgroup& s) {
  std::vector<Permutation> elements;
  elements.reserve(s.order());
  for (Elem i : s.elements) elements.push_back(group.elements()[i]);
  return PermSubgroup::from_elements(group.degree(), std::move(elements));
}

}  // namespace hololab
