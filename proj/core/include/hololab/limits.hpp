#pragma once

#include <cstddef>
#include <cstdint>

namespace hololab {

/// Size caps for the exhaustive algorithms. Exceeding one raises
/// ErrorCode::CapExceeded instead of running unbounded.
struct Limits {
  /// Largest group order accepted by conjugacy-class and normal-subgroup
  /// enumeration.
  std::size_t normal_subgroup_cap = 512;
  /// Bound on |G|^k for the generator-image scan in homomorphism search.
  std::uint64_t hom_tuple_cap = 100'000'000;
  /// Largest permutation group that will be materialized element by element.
  std::size_t materialize_cap = 1'000'000;
  /// Largest degree d for brute-force scans of Sym(d). 11 and 12 require
  /// raising this explicitly; 12 is a hard ceiling.
  std::size_t max_degree = 10;
  /// Worker threads for the Sym(d) scans.
  unsigned threads = 1;
  /// Seed for every randomized check.
  std::uint64_t seed = 20240611;
};

inline constexpr std::size_t kHardDegreeCeiling = 12;

}  // namespace hololab
