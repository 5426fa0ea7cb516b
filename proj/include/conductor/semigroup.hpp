#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conductor/zset.hpp"

namespace conductor {

// A numerical semigroup: a subset of the nonnegative integers containing 0,
// closed under addition, with finite complement.  Stored as its carrier set
// plus derived data (minimal generators, Frobenius number, genus).
class numerical_semigroup {
 public:
  // Closure of the given generators; requires gcd 1 and positive entries.
  static numerical_semigroup from_generators(const std::vector<std::int64_t>& gens);
  // Validates that the carrier contains 0 and is closed under addition.
  static numerical_semigroup from_carrier(const cofinite_set& carrier);
  static numerical_semigroup naturals();

  const cofinite_set& carrier() const { return carrier_; }
  const std::vector<std::int64_t>& generators() const { return gens_; }
  // Largest integer not in the semigroup; -1 for the full naturals.
  std::int64_t frobenius() const { return carrier_.tail_bound() - 1; }
  // Number of gaps.
  std::int64_t genus() const { return genus_; }
  // Least positive element.
  std::int64_t multiplicity() const { return mult_; }
  bool contains(std::int64_t z) const { return carrier_.member(z); }
  // Gaps in increasing order.
  std::vector<std::int64_t> gaps() const;

  // z ∈ S  <=>  F - z ∉ S for all z in [0, F].
  bool is_symmetric() const { return symmetric_; }
  // Least element in each residue class mod n; requires n > 0 and n ∈ S.
  std::vector<std::int64_t> apery(std::int64_t n) const;

  friend bool operator==(const numerical_semigroup& a, const numerical_semigroup& b) {
    return a.carrier_ == b.carrier_;
  }

  std::string label() const;      // "⟨3,5⟩"
  std::string to_string() const;  // "⟨3,5⟩ F=7 g=4 symmetric"

 private:
  numerical_semigroup() = default;
  void derive();  // fills gens_, genus_, mult_, symmetric_ from carrier_

  cofinite_set carrier_ = cofinite_set::naturals();
  std::vector<std::int64_t> gens_;
  std::int64_t genus_ = 0;
  std::int64_t mult_ = 1;
  bool symmetric_ = true;
};

// All numerical semigroups containing s, including s itself and the full
// naturals, sorted by genus descending (ties: generators lexicographic).
std::vector<numerical_semigroup> oversemigroups(const numerical_semigroup& s);

// All numerical semigroups of the given genus, sorted by generators
// lexicographic.  Rejects genus outside [0, 16].
std::vector<numerical_semigroup> enumerate_by_genus(std::int64_t genus);

}  // namespace conductor
