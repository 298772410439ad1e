#pragma once

#include <string>

#include "hololab/group.hpp"
#include "hololab/limits.hpp"
#include "hololab/permutation.hpp"

namespace hololab::cli {

/// Resolves a group reference. Accepted forms:
///   builtin:NAME or NAME, where NAME is C<n>, S<n>, A<n>, D<n>, Q8 or trivial
///   (an optional underscore is allowed, e.g. S_3), and factors may be joined
///   with 'x' as in S3xD5;
///   a path to a JSON group document.
GroupTable resolve_group(const std::string& ref);

/// Resolves a subgroup of Sym(n) for the lift command: trivial, sym, alt,
/// cyclic (the n-cycle), or a path to a JSON permutation-group document.
PermSubgroup resolve_perm_subgroup(const std::string& ref, std::size_t n, const Limits& limits);

}  // namespace hololab::cli
