#pragma once

/**
 * Naive reference implementation used to cross-check the set kernel.
 *
 * A naive_set is a plain membership table over an inclusive range [lo, hi]
 * with the cofinite convention: everything above hi is a member, everything
 * below lo is not.  The table is faithful as long as hi sits at or above the
 * set's tail bound, which the suite guarantees by sizing ranges from
 * oracle_config::window_extent.  Every operation is a direct comprehension;
 * no code is shared with the kernel being checked.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "conductor/zset.hpp"

namespace conductor {

struct naive_set {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  std::vector<char> in;  // in[z - lo] for z in [lo, hi]

  bool contains(std::int64_t z) const {
    if (z > hi) return true;
    if (z < lo) return false;
    return in[static_cast<std::size_t>(z - lo)] != 0;
  }
};

naive_set naive_materialize(const cofinite_set& a, std::int64_t lo, std::int64_t hi);
naive_set naive_from_members(const std::vector<std::int64_t>& members, std::int64_t tail,
                             std::int64_t lo, std::int64_t hi);

// { a + b } over [lo, hi]; sound when the operand tables extend past their tails.
naive_set naive_sum(const naive_set& a, const naive_set& b, std::int64_t lo, std::int64_t hi);
// { z : z + b ⊆ a } over [lo, hi].
naive_set naive_colon(const naive_set& a, const naive_set& b, std::int64_t lo, std::int64_t hi);
naive_set naive_translate(const naive_set& a, std::int64_t d, std::int64_t lo, std::int64_t hi);
naive_set naive_union(const naive_set& a, const naive_set& b, std::int64_t lo, std::int64_t hi);
naive_set naive_intersection(const naive_set& a, const naive_set& b, std::int64_t lo,
                             std::int64_t hi);
bool naive_subset(const naive_set& a, const naive_set& b, std::int64_t lo, std::int64_t hi);
std::int64_t naive_colength(const naive_set& a, const naive_set& b, std::int64_t lo,
                            std::int64_t hi);

// Pointwise agreement of a kernel set with a naive table over [lo, hi].
bool naive_agrees(const cofinite_set& a, const naive_set& b, std::int64_t lo, std::int64_t hi);
// First disagreement point formatted for a failure message, or "" if none.
std::string naive_diff(const cofinite_set& a, const naive_set& b, std::int64_t lo,
                       std::int64_t hi);

}  // namespace conductor
