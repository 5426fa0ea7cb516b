#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conductor/semigroup.hpp"
#include "conductor/zset.hpp"

namespace conductor {

// A relative ideal over a numerical semigroup S: a cofinite set E with
// E + S ⊆ E.  Integral means E ⊆ S; normalized means min(E) = 0.
class relative_ideal {
 public:
  // Validates closure of the carrier under the base's generators.
  relative_ideal(numerical_semigroup base, cofinite_set carrier);
  // Union of the translates g + S over the given nonempty generator list.
  static relative_ideal from_generators(const numerical_semigroup& base,
                                        const std::vector<std::int64_t>& gens);
  // S viewed as an ideal over itself.
  static relative_ideal unit(const numerical_semigroup& base);

  const numerical_semigroup& base() const { return base_; }
  const cofinite_set& carrier() const { return carrier_; }
  std::int64_t min_elt() const { return carrier_.min_elt(); }

  bool is_integral() const { return is_subset(carrier_, base_.carrier()); }
  bool is_normalized() const { return carrier_.min_elt() == 0; }
  relative_ideal translated(std::int64_t d) const;
  // Translate with least element 0.
  relative_ideal normalized() const { return translated(-carrier_.min_elt()); }

  friend bool operator==(const relative_ideal& a, const relative_ideal& b) {
    return a.base_ == b.base_ && a.carrier_ == b.carrier_;
  }

  std::string to_string() const;  // "{3,5,6}∪[8,∞) over ⟨3,5⟩"

 private:
  numerical_semigroup base_;
  cofinite_set carrier_;
};

// Dual (S - E) = { z : z + E ⊆ S }.
relative_ideal dual(const relative_ideal& e);
// Double dual; contains E, idempotent.
relative_ideal reflexive_hull(const relative_ideal& e);
bool is_reflexive(const relative_ideal& e);
// (E - E) = { z : z + E ⊆ E }, a numerical semigroup containing the base.
numerical_semigroup multiplier_ring(const relative_ideal& e);
// Same base and equal up to translation; throws on differing bases.
bool is_isomorphic(const relative_ideal& a, const relative_ideal& b);
// E = min(E) + (E - E).
bool is_stable(const relative_ideal& e);
// trace(E) = dual(E) + E; always an integral ideal.
relative_ideal trace(const relative_ideal& e);
// trace(E) = E; requires E integral.
bool is_trace_ideal(const relative_ideal& e);
// |dual(E) \ S|; requires E integral.  Zero exactly when dual(E) = S.
std::int64_t ext1_colength(const relative_ideal& e);
// E = e + S for some e; requires E integral.
bool is_parameter(const relative_ideal& e);
// There is a member e of E with E + E = e + E and S ∩ ((e + S) - E) = E;
// requires E integral.  Candidates e run through the window of E extended by
// the base's multiplicity.
bool is_ulrich(const relative_ideal& e);

// All relative ideals with least element 0, ordered by number of elements
// added to S ascending (ties: carrier order).  Every relative ideal over S
// is a translate of exactly one entry.
std::vector<relative_ideal> enumerate_normalized_ideals(const numerical_semigroup& s);

}  // namespace conductor
