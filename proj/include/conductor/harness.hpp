#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conductor/extension.hpp"
#include "conductor/ideal.hpp"
#include "conductor/semigroup.hpp"

namespace conductor {

struct oracle_config {
  // Materialization half-width for naive set tables; must stay at or above
  // twice the largest operand tail plus four.
  std::int64_t window_extent = 64;
  // Largest genus enumerated by the census.
  std::int64_t genus_bound = 8;
  // Safety limit on tail bounds accepted by the suite; twice this plus four
  // must fit inside window_extent.
  std::int64_t frobenius_bound = 28;
  // Worker count; 0 picks CONDUCTOR_LAB_THREADS or the hardware default.
  int parallelism = 0;
  std::uint64_t seed = 20250814;
  std::int64_t random_cases = 10000;
};

// One row per (base, oversemigroup) pair.  The ideal counts describe the
// base's normalized ideal classes and repeat across that base's rows.
struct census_record {
  std::vector<std::int64_t> base_gens;
  std::vector<std::int64_t> over_gens;
  std::int64_t base_frobenius = 0;
  std::int64_t base_genus = 0;
  std::int64_t over_frobenius = 0;
  std::int64_t over_genus = 0;
  bool base_symmetric = false;
  bool over_symmetric = false;
  cofinite_set conductor_set = cofinite_set::naturals();
  bool cond1m = false;
  bool cond2 = false;
  bool cond3 = false;
  bool cond4m = false;
  bool all_agree = false;
  std::int64_t stable_ideals = 0;
  std::int64_t trace_ideals = 0;
  std::int64_t stable_trace_ideals = 0;
  std::int64_t ulrich_ideals = 0;
};

struct base_ideal_stats {
  std::int64_t stable = 0;
  std::int64_t trace_classes = 0;
  std::int64_t stable_trace = 0;
  std::int64_t ulrich = 0;
};

// Counts stable / trace / Ulrich classes among the base's normalized ideals
// and checks the Ulrich consequences (non-parameter Ulrich ideals are stable
// trace ideals) over every integral translate in a sound scan window.
base_ideal_stats analyze_base_ideals(const numerical_semigroup& s);

// For every reflexive class: trace equals the base exactly when the
// multiplier ring does, and then the class is the base itself.
void check_reflexive_trace_shadow(const numerical_semigroup& s);

// Proper integral ideals have positive dual colength; zero happens exactly
// when the dual is the base.  Complete via the principal-dual reduction:
// a vanishing colength forces dual(E) = e + S, so only the translate at
// e = min(dual) can vanish and the scan window always contains it.
void check_ext1_shadow(const numerical_semigroup& s);

// Full sweep over bases of genus <= cfg.genus_bound and their
// oversemigroups.  Runs the theorem checks, corollaries, bijection, trace
// and colength shadows per pair or base; throws verification_error with a
// serialized witness on the first disagreement.  Output order is
// (genus, generators) lexicographic and independent of parallelism.
std::vector<census_record> run_census(const oracle_config& cfg);

std::string census_to_csv(const std::vector<census_record>& rows);
std::string census_to_jsonl(const std::vector<census_record>& rows);

// Independent genus enumerator: gap subsets of [1, 2g-1] whose complement is
// closed under addition.  Shares nothing with the semigroup-tree walk.
std::int64_t count_semigroups_by_gap_subsets(std::int64_t genus);

struct oracle_report {
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::string first_failure;
};

// Exhaustive small-set sweep plus cfg.random_cases randomized rounds
// comparing every kernel operation against the naive tables.
oracle_report run_oracle_suite(const oracle_config& cfg);
// True when the suite reports zero failures.
bool naive_oracle_suite(const oracle_config& cfg);

// Effective worker count: CONDUCTOR_LAB_THREADS, else cfg.parallelism,
// else the hardware concurrency, clamped to [1, 64].
int resolve_parallelism(const oracle_config& cfg);

}  // namespace conductor
