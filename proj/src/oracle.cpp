#include "conductor/oracle.hpp"

namespace conductor {
namespace {

naive_set blank(std::int64_t lo, std::int64_t hi) {
  naive_set s;
  s.lo = lo;
  s.hi = hi;
  s.in.assign(static_cast<std::size_t>(hi - lo + 1), 0);
  return s;
}

}  // namespace

naive_set naive_materialize(const cofinite_set& a, std::int64_t lo, std::int64_t hi) {
  naive_set s = blank(lo, hi);
  for (std::int64_t z = lo; z <= hi; ++z)
    if (a.member(z)) s.in[static_cast<std::size_t>(z - lo)] = 1;
  return s;
}

naive_set naive_from_members(const std::vector<std::int64_t>& members, std::int64_t tail,
                             std::int64_t lo, std::int64_t hi) {
  naive_set s = blank(lo, hi);
  for (std::int64_t z = lo; z <= hi; ++z) {
    bool m = z >= tail;
    for (std::int64_t v : members) m = m || v == z;
    if (m) s.in[static_cast<std::size_t>(z - lo)] = 1;
  }
  return s;
}

naive_set naive_sum(const naive_set& a, const naive_set& b, std::int64_t lo, std::int64_t hi) {
  naive_set s = blank(lo, hi);
  for (std::int64_t z = lo; z <= hi; ++z) {
    bool m = false;
    // Split z = u + v with u >= a.lo and v >= b.lo; u beyond a.hi counts as a
    // member by the cofinite convention, and contains() settles v.
    for (std::int64_t u = a.lo; u <= z - b.lo && !m; ++u)
      m = a.contains(u) && b.contains(z - u);
    if (m) s.in[static_cast<std::size_t>(z - lo)] = 1;
  }
  return s;
}

naive_set naive_colon(const naive_set& a, const naive_set& b, std::int64_t lo, std::int64_t hi) {
  naive_set s = blank(lo, hi);
  for (std::int64_t z = lo; z <= hi; ++z) {
    bool m = true;
    for (std::int64_t w = b.lo; w <= b.hi + 1 && m; ++w)  // b.hi + 1 probes the tail
      if (b.contains(w)) m = a.contains(z + w);
    if (m) s.in[static_cast<std::size_t>(z - lo)] = 1;
  }
  return s;
}

naive_set naive_translate(const naive_set& a, std::int64_t d, std::int64_t lo, std::int64_t hi) {
  naive_set s = blank(lo, hi);
  for (std::int64_t z = lo; z <= hi; ++z)
    if (a.contains(z - d)) s.in[static_cast<std::size_t>(z - lo)] = 1;
  return s;
}

naive_set naive_union(const naive_set& a, const naive_set& b, std::int64_t lo, std::int64_t hi) {
  naive_set s = blank(lo, hi);
  for (std::int64_t z = lo; z <= hi; ++z)
    if (a.contains(z) || b.contains(z)) s.in[static_cast<std::size_t>(z - lo)] = 1;
  return s;
}

naive_set naive_intersection(const naive_set& a, const naive_set& b, std::int64_t lo,
                             std::int64_t hi) {
  naive_set s = blank(lo, hi);
  for (std::int64_t z = lo; z <= hi; ++z)
    if (a.contains(z) && b.contains(z)) s.in[static_cast<std::size_t>(z - lo)] = 1;
  return s;
}

bool naive_subset(const naive_set& a, const naive_set& b, std::int64_t lo, std::int64_t hi) {
  for (std::int64_t z = lo; z <= hi; ++z)
    if (a.contains(z) && !b.contains(z)) return false;
  return true;
}

std::int64_t naive_colength(const naive_set& a, const naive_set& b, std::int64_t lo,
                            std::int64_t hi) {
  std::int64_t n = 0;
  for (std::int64_t z = lo; z <= hi; ++z)
    if (b.contains(z) && !a.contains(z)) ++n;
  return n;
}

bool naive_agrees(const cofinite_set& a, const naive_set& b, std::int64_t lo, std::int64_t hi) {
  for (std::int64_t z = lo; z <= hi; ++z)
    if (a.member(z) != b.contains(z)) return false;
  return true;
}

std::string naive_diff(const cofinite_set& a, const naive_set& b, std::int64_t lo,
                       std::int64_t hi) {
  for (std::int64_t z = lo; z <= hi; ++z)
    if (a.member(z) != b.contains(z))
      return "disagreement at " + std::to_string(z) + ": kernel=" +
             (a.member(z) ? "in" : "out") + " naive=" + (b.contains(z) ? "in" : "out") +
             " kernel set " + a.to_string();
  return "";
}

}  // namespace conductor
