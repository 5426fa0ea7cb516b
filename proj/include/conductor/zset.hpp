#pragma once

/**
 * Exact arithmetic on cofinite sets of integers.
 *
 * A cofinite_set is a set A of integers that is bounded below and contains
 * every sufficiently large integer.  It is stored as a finite window of
 * explicit members together with a tail bound t such that [t, oo) is
 * contained in A.  The representation is canonical: the tail bound is the
 * least such t, so structural equality coincides with set equality.
 *
 * The window is a contiguous membership bit vector indexed from the least
 * member, which keeps the binary operations (pointwise sum, colon, union,
 * intersection) word-parallel.  All arithmetic on bounds is overflow-checked
 * and throws std::overflow_error instead of wrapping.
 */

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace conductor {

class cofinite_set {
 public:
  // [0, oo).
  static cofinite_set naturals() { return from_tail(0); }
  // [tail, oo).
  static cofinite_set from_tail(std::int64_t tail);
  // members  ∪  [tail, oo).  Members may repeat, lie in any order, or lie
  // above the tail (where they are absorbed).
  static cofinite_set make(const std::vector<std::int64_t>& members, std::int64_t tail);

  // Least member.  Equals tail_bound() exactly when the window is empty.
  std::int64_t min_elt() const { return min_; }
  // Least t with [t, oo) ⊆ A; minimal by canonicality.
  std::int64_t tail_bound() const { return tail_; }

  bool member(std::int64_t z) const;
  // Explicit members below the tail bound, increasing.
  std::vector<std::int64_t> window() const;
  // Members in the half-open range [lo, hi), increasing.
  std::vector<std::int64_t> members_in(std::int64_t lo, std::int64_t hi) const;

  // { z + d : z ∈ A }.
  cofinite_set translate(std::int64_t d) const;

  friend bool operator==(const cofinite_set&, const cofinite_set&) = default;
  // Arbitrary but deterministic total order, for sorting and dedup.
  std::strong_ordering operator<=>(const cofinite_set& o) const;

  // "{0,3,5,6}∪[8,∞)", or "[8,∞)" when the window is empty.
  std::string to_string() const;

  // Minkowski sum { a + b : a ∈ A, b ∈ B }.
  friend cofinite_set sum(const cofinite_set& a, const cofinite_set& b);
  // Colon set (a : b) = { z : z + B ⊆ A }.
  friend cofinite_set colon(const cofinite_set& a, const cofinite_set& b);
  friend cofinite_set set_union(const cofinite_set& a, const cofinite_set& b);
  friend cofinite_set set_intersection(const cofinite_set& a, const cofinite_set& b);
  // a ⊆ b.
  friend bool is_subset(const cofinite_set& a, const cofinite_set& b);
  // |b \ a|; requires a ⊆ b, else std::invalid_argument.
  friend std::int64_t colength(const cofinite_set& a, const cofinite_set& b);

 private:
  cofinite_set() = default;
  // Canonicalizing constructor: the set {lo + i : bit i of bits} ∪ [tail, oo)
  // where bits covers [lo, tail).
  static cofinite_set from_bits(std::int64_t lo, const std::vector<std::uint64_t>& bits,
                                std::int64_t tail);

  std::int64_t min_ = 0;
  std::int64_t tail_ = 0;
  // Bit i set  <=>  (min_ + i) ∈ A, for i in [0, tail_ - min_).
  // Canonical: bit 0 set and bit (tail_ - min_ - 1) clear when nonempty;
  // unused bits of the last word are clear.
  std::vector<std::uint64_t> bits_;
};

cofinite_set sum(const cofinite_set& a, const cofinite_set& b);
cofinite_set colon(const cofinite_set& a, const cofinite_set& b);
cofinite_set set_union(const cofinite_set& a, const cofinite_set& b);
cofinite_set set_intersection(const cofinite_set& a, const cofinite_set& b);
bool is_subset(const cofinite_set& a, const cofinite_set& b);
std::int64_t colength(const cofinite_set& a, const cofinite_set& b);

}  // namespace conductor
