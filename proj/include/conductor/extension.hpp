#pragma once

#include <cstdint>
#include <vector>

#include "conductor/ideal.hpp"
#include "conductor/semigroup.hpp"
#include "conductor/zset.hpp"

namespace conductor {

// A birational extension in the monomial model: semigroups S ⊆ T.  T is
// simultaneously a ring and an S-ideal, which is what the four equivalent
// conditions below quantify over.
class birational_extension {
 public:
  birational_extension(numerical_semigroup base, numerical_semigroup over);

  const numerical_semigroup& base() const { return base_; }
  const numerical_semigroup& over() const { return over_; }
  // T viewed as a relative ideal over S.
  relative_ideal over_as_ideal() const;

 private:
  numerical_semigroup base_;
  numerical_semigroup over_;
};

// Verdict of a set-equality condition, with the carriers that broke it.
struct condition_check {
  bool holds = true;
  std::vector<cofinite_set> mismatches;
};

// Four-way equivalence report.  all_agree must always be true; witnesses is
// populated only when the four verdicts disagree.
struct theorem_report {
  bool cond1m = false;
  bool cond2 = false;
  bool cond3 = false;
  bool cond4m = false;
  bool all_agree = false;
  std::vector<relative_ideal> witnesses;
};

// (S - T), the largest common ideal of S and T.
relative_ideal conductor(const birational_extension& x);

// Condition (1): the T-reflexive normalized T-ideals are exactly the
// S-reflexive ones.
condition_check cond1_monomial(const birational_extension& x);
// Condition (2): T is isomorphic to the conductor as an S-ideal.
bool cond2_self_dual(const birational_extension& x);
// Condition (3): T is S-reflexive and the conductor is stable.
bool cond3_reflexive_and_stable(const birational_extension& x);
// Condition (4): the T-reflexive normalized T-ideals are exactly the
// S-reflexive normalized S-ideals whose trace lands in the conductor.
condition_check cond4_monomial(const birational_extension& x);

theorem_report verify_theorem(const birational_extension& x);

// The reflexivity-descent equivalences: T is S-reflexive iff every
// T-reflexive normalized T-ideal is S-reflexive iff each of those also has
// trace inside the conductor.
bool verify_prop_pre(const birational_extension& x);

// When T is symmetric, "every normalized T-ideal is S-reflexive" agrees with
// conditions (2) and (3); when S is symmetric, symmetry of T agrees with
// condition (2) and with stability of the conductor.
bool verify_gorenstein_corollaries(const birational_extension& x);

// The mutually inverse maps T ↦ conductor and E ↦ multiplier ring between
// self-dual oversemigroups of s and stable trace ideal classes over s.
bool verify_bijection(const numerical_semigroup& s);

}  // namespace conductor
