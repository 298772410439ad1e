#include "registry.hpp"

#include <cctype>
#include <fstream>
#include <numeric>

#include "hololab/error.hpp"
#include "hololab/io.hpp"
#include "hololab/standard_groups.hpp"

namespace hololab::cli {

namespace {

io::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidParameter, "cannot open '" + path + "'");
  try {
    return io::json::parse(in);
  } catch (const io::json::exception& e) {
    throw Error(ErrorCode::InvalidParameter, path + ": " + e.what());
  }
}

GroupTable single_builtin(std::string name) {
  if (name == "trivial" || name == "1") return trivial_group();
  if (name == "Q8" || name == "Q_8") return quaternion8();
  if (name.size() < 2) throw Error(ErrorCode::InvalidParameter, "unknown builtin group '" + name + "'");
  const char kind = name[0];
  std::string digits = name.substr(name[1] == '_' ? 2 : 1);
  if (digits.empty() || digits.size() > 3 ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw Error(ErrorCode::InvalidParameter, "unknown builtin group '" + name + "'");
  const std::size_t n = std::stoul(digits);
  auto need = [&](bool ok, const char* range) {
    if (!ok) throw Error(ErrorCode::InvalidParameter, "builtin '" + name + "' requires " + range);
  };
  switch (kind) {
    case 'C':
      need(n >= 1 && n <= 512, "1 <= n <= 512");
      return cyclic(n);
    case 'S':
      need(n >= 1 && n <= 5, "1 <= n <= 5");
      return symmetric(n);
    case 'A':
      need(n >= 1 && n <= 5, "1 <= n <= 5");
      return alternating(n);
    case 'D':
      need(n >= 3 && n <= 6, "3 <= n <= 6");
      return dihedral(n);
    default:
      throw Error(ErrorCode::InvalidParameter, "unknown builtin group '" + name + "'");
  }
}

GroupTable builtin(const std::string& spec) {
  std::optional<GroupTable> acc;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t cut = spec.find('x', start);
    const std::string part = spec.substr(start, cut == std::string::npos ? std::string::npos : cut - start);
    const auto g = single_builtin(part);
    acc = acc ? direct_product(*acc, g) : g;
    if (cut == std::string::npos) break;
    start = cut + 1;
  }
  return *acc;
}

}  // namespace

GroupTable resolve_group(const std::string& ref) {
  if (ref.rfind("builtin:", 0) == 0) return builtin(ref.substr(8));
  if (ref.find('/') == std::string::npos && ref.find(".json") == std::string::npos) return builtin(ref);
  return io::group_from_json(read_json_file(ref));
}

PermSubgroup resolve_perm_subgroup(const std::string& ref, std::size_t n, const Limits& limits) {
  if (n == 0) throw Error(ErrorCode::InvalidParameter, "n must be positive");
  if (ref == "trivial") return PermSubgroup::generate(n, {}, limits);
  std::vector<Point> cycle(n);
  std::iota(cycle.begin(), cycle.end(), Point{1});
  cycle.back() = 0;
  if (ref == "cyclic") return PermSubgroup::generate(n, {Permutation(cycle)}, limits);
  if (ref == "sym" || ref == "alt") {
    if (n == 1) return PermSubgroup::generate(1, {}, limits);
    std::vector<Permutation> gens;
    if (ref == "sym") {
      std::vector<Point> swap(n);
      std::iota(swap.begin(), swap.end(), Point{0});
      std::swap(swap[0], swap[1]);
      gens = {Permutation(swap), Permutation(cycle)};
    } else {
      for (std::size_t k = 2; k < n; ++k) {
        std::vector<Point> three(n);
        std::iota(three.begin(), three.end(), Point{0});
        three[0] = 1;
        three[1] = static_cast<Point>(k);
        three[k] = 0;
        gens.emplace_back(three);
      }
    }
    return PermSubgroup::generate(n, gens, limits);
  }
  auto h = io::perm_subgroup_from_json(read_json_file(ref), limits);
  if (h.degree() != n) throw Error(ErrorCode::InvalidParameter, "subgroup degree does not match --n");
  return h;
}

}  // namespace hololab::cli
