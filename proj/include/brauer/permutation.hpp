#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace brauer {

/// Permutation of {0, ..., n-1} stored as its image list.
using Perm = std::vector<int>;

Perm identity_perm(int degree);

/// (a * b)(x) = a(b(x)): apply b first.
Perm compose(const Perm &a, const Perm &b);
Perm invert(const Perm &p);
bool is_identity(const Perm &p);
int perm_sign(const Perm &p);

/// Parses cycle notation with 1-based points, e.g. "(1,2,3)(4,5)" or "()".
Perm parse_cycles(std::string_view text, int degree);

/// 1-based cycle notation, "()" for the identity.
std::string format_cycles(const Perm &p);

/// Sorted cycle lengths including fixed points.
std::vector<int> cycle_type(const Perm &p);

/// Packs a permutation of degree <= 16 into 64 bits.
std::uint64_t perm_code(const Perm &p);

} // namespace brauer
