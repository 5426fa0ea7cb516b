#include "conductor/harness.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "conductor/errors.hpp"
#include "conductor/json_io.hpp"
#include "conductor/oracle.hpp"

#include <nlohmann/json.hpp>

namespace conductor {
namespace {

constexpr std::int64_t kMaxCensusGenus = 12;
constexpr std::int64_t kMaxGapSubsetGenus = 10;

std::string pair_label(const numerical_semigroup& s, const numerical_semigroup& t) {
  return s.label() + " ⊆ " + t.label();
}

void check_pair(const numerical_semigroup& s, const numerical_semigroup& t,
                census_record& row) {
  const birational_extension x(s, t);
  const theorem_report rep = verify_theorem(x);
  if (!rep.all_agree) {
    std::string msg = "theorem conditions disagree for " + pair_label(s, t) + ": " +
                      to_json(rep).dump();
    throw verification_error(msg);
  }
  if (!verify_prop_pre(x))
    throw verification_error("reflexivity descent equivalences fail for " + pair_label(s, t));
  if (!verify_gorenstein_corollaries(x))
    throw verification_error("symmetric-case corollaries fail for " + pair_label(s, t));
  const relative_ideal c = conductor(x);
  if (!(trace(x.over_as_ideal()).carrier() == c.carrier()))
    throw verification_error("conductor differs from the trace of " + pair_label(s, t));

  row.base_gens = s.generators();
  row.over_gens = t.generators();
  row.base_frobenius = s.frobenius();
  row.base_genus = s.genus();
  row.over_frobenius = t.frobenius();
  row.over_genus = t.genus();
  row.base_symmetric = s.is_symmetric();
  row.over_symmetric = t.is_symmetric();
  row.conductor_set = c.carrier();
  row.cond1m = rep.cond1m;
  row.cond2 = rep.cond2;
  row.cond3 = rep.cond3;
  row.cond4m = rep.cond4m;
  row.all_agree = rep.all_agree;
}

std::vector<census_record> process_base(const numerical_semigroup& s) {
  const base_ideal_stats stats = analyze_base_ideals(s);
  check_reflexive_trace_shadow(s);
  check_ext1_shadow(s);
  if (!verify_bijection(s))
    throw verification_error("conductor/multiplier bijection fails over " + s.label());

  const auto overs = oversemigroups(s);
  std::vector<census_record> rows;
  std::int64_t self_dual = 0;
  for (const auto& t : overs) {
    census_record row;
    check_pair(s, t, row);
    row.stable_ideals = stats.stable;
    row.trace_ideals = stats.trace_classes;
    row.stable_trace_ideals = stats.stable_trace;
    row.ulrich_ideals = stats.ulrich;
    self_dual += row.cond2 ? 1 : 0;
    rows.push_back(std::move(row));
  }
  if (self_dual != stats.stable_trace)
    throw verification_error("self-dual extension count differs from stable trace classes over " +
                             s.label());
  // Conductors shrink as the extension grows.
  for (std::size_t i = 0; i < overs.size(); ++i)
    for (std::size_t j = 0; j < overs.size(); ++j) {
      if (i == j || !is_subset(overs[i].carrier(), overs[j].carrier())) continue;
      const auto ci = colon(s.carrier(), overs[i].carrier());
      const auto cj = colon(s.carrier(), overs[j].carrier());
      if (!is_subset(cj, ci))
        throw verification_error("conductor fails to shrink from " + pair_label(s, overs[i]) +
                                 " to " + pair_label(s, overs[j]));
    }
  return rows;
}

}  // namespace

base_ideal_stats analyze_base_ideals(const numerical_semigroup& s) {
  base_ideal_stats stats;
  for (const auto& e0 : enumerate_normalized_ideals(s)) {
    const bool stable0 = is_stable(e0);
    const bool trace0 = is_isomorphic(trace(e0), e0);
    stats.stable += stable0 ? 1 : 0;
    stats.trace_classes += trace0 ? 1 : 0;
    stats.stable_trace += stable0 && trace0 ? 1 : 0;

    // Integral translates e + E0 are indexed by members e of the dual; any
    // Ulrich translate must be stable and its own trace.
    const cofinite_set d = dual(e0).carrier();
    const std::int64_t hi = d.tail_bound() + s.multiplicity();
    for (std::int64_t e : d.members_in(d.min_elt(), hi + 1)) {
      const relative_ideal t = e0.translated(e);
      if (!is_ulrich(t) || is_parameter(t)) continue;
      ++stats.ulrich;
      if (!is_stable(t) || !is_trace_ideal(t))
        throw verification_error("non-parameter Ulrich ideal " + t.to_string() +
                                 " is not a stable trace ideal");
    }
  }
  return stats;
}

void check_reflexive_trace_shadow(const numerical_semigroup& s) {
  for (const auto& e0 : enumerate_normalized_ideals(s)) {
    if (!is_reflexive(e0)) continue;
    const bool trace_is_base = trace(e0).carrier() == s.carrier();
    const bool mult_is_base = multiplier_ring(e0) == s;
    if (trace_is_base != mult_is_base)
      throw verification_error("trace and multiplier-ring criteria disagree for " +
                               e0.to_string());
    if (mult_is_base && !(e0.carrier() == s.carrier()))
      throw verification_error("reflexive class with full trace is not a translate of " +
                               s.label() + ": " + e0.to_string());
  }
}

void check_ext1_shadow(const numerical_semigroup& s) {
  for (const auto& e0 : enumerate_normalized_ideals(s)) {
    const relative_ideal d = dual(e0);
    // A vanishing colength needs dual(E) = e + S, pinning e = min(dual); the
    // scan below starts there, so the reduction is complete.
    if (d.normalized().carrier() == s.carrier()) {
      const relative_ideal at_zero = e0.translated(d.carrier().min_elt());
      if (!(at_zero.carrier() == s.carrier()))
        throw verification_error("proper integral ideal with vanishing colength: " +
                                 at_zero.to_string());
    }
    const cofinite_set dc = d.carrier();
    const std::int64_t hi = dc.tail_bound() + s.multiplicity();
    for (std::int64_t e : dc.members_in(dc.min_elt(), hi + 1)) {
      const relative_ideal t = e0.translated(e);
      const std::int64_t x = ext1_colength(t);
      const bool dual_is_base = dual(t).carrier() == s.carrier();
      if ((x == 0) != dual_is_base)
        throw verification_error("colength zero disagrees with dual = base for " + t.to_string());
      if ((x == 0) != (t.carrier() == s.carrier()))
        throw verification_error("colength zero at a proper integral ideal: " + t.to_string());
    }
  }
}

std::vector<census_record> run_census(const oracle_config& cfg) {
  if (cfg.genus_bound < 0 || cfg.genus_bound > kMaxCensusGenus)
    throw std::invalid_argument("run_census: genus bound outside [0, 12]");
  std::vector<numerical_semigroup> bases;
  for (std::int64_t g = 0; g <= cfg.genus_bound; ++g)
    for (auto& s : enumerate_by_genus(g)) bases.push_back(std::move(s));

  const int workers = resolve_parallelism(cfg);
  std::vector<std::vector<census_record>> slots(bases.size());
  std::vector<std::exception_ptr> errors(bases.size());
  auto work = [&](int w) {
    for (std::size_t i = static_cast<std::size_t>(w); i < bases.size();
         i += static_cast<std::size_t>(workers)) {
      try {
        slots[i] = process_base(bases[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<census_record> rows;
  for (auto& slot : slots)
    for (auto& row : slot) rows.push_back(std::move(row));
  return rows;
}

namespace {

std::string csv_quote(const std::vector<std::int64_t>& values) {
  std::string out = "\"";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  out += '"';
  return out;
}

const char* csv_bool(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string census_to_csv(const std::vector<census_record>& rows) {
  std::string out =
      "base,over,base_frobenius,base_genus,over_frobenius,over_genus,"
      "base_symmetric,over_symmetric,conductor,cond1m,cond2,cond3,cond4m,"
      "all_agree,stable_ideals,trace_ideals,stable_trace_ideals,ulrich_ideals\n";
  for (const auto& r : rows) {
    out += csv_quote(r.base_gens) + ',' + csv_quote(r.over_gens) + ',';
    out += std::to_string(r.base_frobenius) + ',' + std::to_string(r.base_genus) + ',';
    out += std::to_string(r.over_frobenius) + ',' + std::to_string(r.over_genus) + ',';
    out += std::string(csv_bool(r.base_symmetric)) + ',' + csv_bool(r.over_symmetric) + ',';
    out += '"' + r.conductor_set.to_string() + "\",";
    out += std::string(csv_bool(r.cond1m)) + ',' + csv_bool(r.cond2) + ',' + csv_bool(r.cond3) +
           ',' + csv_bool(r.cond4m) + ',' + csv_bool(r.all_agree) + ',';
    out += std::to_string(r.stable_ideals) + ',' + std::to_string(r.trace_ideals) + ',' +
           std::to_string(r.stable_trace_ideals) + ',' + std::to_string(r.ulrich_ideals) + '\n';
  }
  return out;
}

std::string census_to_jsonl(const std::vector<census_record>& rows) {
  std::string out;
  for (const auto& r : rows) {
    out += to_json(r).dump();
    out += '\n';
  }
  return out;
}

std::int64_t count_semigroups_by_gap_subsets(std::int64_t genus) {
  if (genus < 0 || genus > kMaxGapSubsetGenus)
    throw std::invalid_argument("count_semigroups_by_gap_subsets: genus outside [0, 10]");
  if (genus == 0) return 1;
  const std::int64_t top = 2 * genus - 1;  // every gap is at most 2g - 1
  std::vector<std::int64_t> pick(static_cast<std::size_t>(genus));
  for (std::int64_t i = 0; i < genus; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
  std::int64_t count = 0;
  for (;;) {
    std::uint32_t gap_mask = 0;
    for (std::int64_t v : pick) gap_mask |= std::uint32_t{1} << v;
    bool closed = true;
    for (std::int64_t a = 1; a <= top && closed; ++a) {
      if (gap_mask >> a & 1) continue;
      for (std::int64_t b = a; a + b <= top; ++b) {
        if (gap_mask >> b & 1) continue;
        if (gap_mask >> (a + b) & 1) {
          closed = false;
          break;
        }
      }
    }
    if (closed) ++count;
    // next size-g subset of [1, top]
    std::int64_t i = genus - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == top - (genus - 1 - i)) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (std::int64_t j = i + 1; j < genus; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return count;
}

namespace {

struct suite_state {
  oracle_report report;
  void check(bool ok, const std::string& what) {
    ++report.cases;
    if (ok) return;
    ++report.failures;
    if (report.first_failure.empty()) report.first_failure = what;
  }
};

// Comparison extent for a pair of operands; tables cover four times this.
std::int64_t pair_extent(const cofinite_set& a, const cofinite_set& b) {
  const std::int64_t m =
      std::max({a.tail_bound(), b.tail_bound(), -a.min_elt(), -b.min_elt(), std::int64_t{4}});
  return 2 * m + 8;
}

void compare_pair(suite_state& st, const cofinite_set& a, const naive_set& na,
                  const cofinite_set& b, const naive_set& nb) {
  const std::int64_t w = pair_extent(a, b);
  const std::int64_t lo = -w, hi = w;
  st.check(naive_agrees(sum(a, b), naive_sum(na, nb, lo, hi), lo, hi), "sum vs naive");
  st.check(naive_agrees(colon(a, b), naive_colon(na, nb, lo, hi), lo, hi), "colon vs naive");
  st.check(naive_agrees(set_union(a, b), naive_union(na, nb, lo, hi), lo, hi), "union vs naive");
  st.check(naive_agrees(set_intersection(a, b), naive_intersection(na, nb, lo, hi), lo, hi),
           "intersection vs naive");
  st.check(is_subset(a, b) == naive_subset(na, nb, lo, hi), "subset vs naive");
  st.check((a == b) == (naive_subset(na, nb, lo, hi) && naive_subset(nb, na, lo, hi)),
           "equality vs naive");
  if (is_subset(a, b))
    st.check(colength(a, b) == naive_colength(na, nb, lo, hi), "colength vs naive");
}

}  // namespace

oracle_report run_oracle_suite(const oracle_config& cfg) {
  if (cfg.window_extent < 16) throw std::invalid_argument("oracle: window extent below 16");
  if (2 * cfg.frobenius_bound + 4 > cfg.window_extent)
    throw std::invalid_argument("oracle: window extent below twice the tail bound plus four");
  suite_state st;

  // Exhaustive sweep: every window pattern on four slots at several offsets,
  // plus pure tails.  Tables are built from the member lists, not the kernel.
  std::vector<std::pair<cofinite_set, naive_set>> small;
  const std::int64_t offsets[] = {-2, 0, 3};
  for (std::int64_t off : offsets) {
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
      std::vector<std::int64_t> members;
      for (std::int64_t i = 0; i < 4; ++i)
        if (mask >> i & 1) members.push_back(off + i);
      const std::int64_t tail = off + 4;
      small.emplace_back(cofinite_set::make(members, tail),
                         naive_from_members(members, tail, -60, 60));
    }
  }
  for (std::int64_t t : {std::int64_t{-2}, std::int64_t{0}, std::int64_t{5}})
    small.emplace_back(cofinite_set::from_tail(t), naive_from_members({}, t, -60, 60));
  for (const auto& [a, na] : small) {
    st.check(naive_agrees(a, na, -24, 24), "membership vs naive");
    st.check(cofinite_set::make(a.window(), a.tail_bound()) == a, "canonical rebuild");
    st.check(a.translate(7).translate(-7) == a, "translate roundtrip");
    st.check(naive_agrees(a.translate(5), naive_translate(na, 5, -24, 24), -24, 24),
             "translate vs naive");
  }
  for (const auto& [a, na] : small)
    for (const auto& [b, nb] : small) compare_pair(st, a, na, b, nb);

  // Randomized rounds, counted until the configured number of comparisons.
  std::mt19937_64 rng(cfg.seed);
  const std::int64_t reach = std::max<std::int64_t>((cfg.window_extent - 4) / 8, 2);
  const std::int64_t span = std::max<std::int64_t>(3 * (cfg.window_extent - 4) / 8, 4);
  auto random_set = [&](std::vector<std::int64_t>& members, std::int64_t& tail) -> cofinite_set {
    members.clear();
    const std::int64_t lo = std::uniform_int_distribution<std::int64_t>(-reach, reach)(rng);
    const std::int64_t len = std::uniform_int_distribution<std::int64_t>(0, span)(rng);
    const int density = std::uniform_int_distribution<int>(1, 9)(rng);
    for (std::int64_t i = 0; i < len; ++i)
      if (std::uniform_int_distribution<int>(0, 9)(rng) < density) members.push_back(lo + i);
    tail = lo + len;
    return cofinite_set::make(members, tail);
  };
  const std::int64_t random_target = st.report.cases + cfg.random_cases;
  std::vector<std::int64_t> mem_a, mem_b;
  std::int64_t tail_a = 0, tail_b = 0;
  std::uint64_t round = 0;
  while (st.report.cases < random_target) {
    ++round;
    const cofinite_set a = random_set(mem_a, tail_a);
    const cofinite_set b = random_set(mem_b, tail_b);
    const std::int64_t w = pair_extent(a, b);
    const naive_set na = naive_from_members(mem_a, tail_a, -4 * w - 20, 4 * w + 20);
    const naive_set nb = naive_from_members(mem_b, tail_b, -4 * w - 20, 4 * w + 20);
    st.check(naive_agrees(a, na, -w, w), "membership vs naive");
    st.check(naive_agrees(b, nb, -w, w), "membership vs naive");
    compare_pair(st, a, na, b, nb);
    const std::int64_t d = std::uniform_int_distribution<std::int64_t>(-9, 9)(rng);
    st.check(naive_agrees(a.translate(d), naive_translate(na, d, -w, w), -w, w),
             "translate vs naive");

    if (round % 8 == 0) {
      // Ring round: a random semigroup with a random normalized ideal, checked
      // through the derived operations.
      std::vector<std::int64_t> gens;
      for (;;) {
        gens.clear();
        const int k = std::uniform_int_distribution<int>(2, 4)(rng);
        for (int i = 0; i < k; ++i)
          gens.push_back(std::uniform_int_distribution<std::int64_t>(2, 9)(rng));
        std::int64_t g = 0;
        for (std::int64_t v : gens) g = std::gcd(g, v);
        if (g != 1) continue;
        break;
      }
      const numerical_semigroup s = numerical_semigroup::from_generators(gens);
      if (s.carrier().tail_bound() > cfg.frobenius_bound) continue;
      // Random gap subset, repaired to an ideal by adding forced elements.
      const auto gap = s.gaps();
      const std::int64_t tail = s.carrier().tail_bound();
      std::vector<char> in(static_cast<std::size_t>(tail) + 1, 0);
      for (std::int64_t z = 0; z < tail; ++z) in[static_cast<std::size_t>(z)] = s.contains(z);
      for (std::int64_t z : gap)
        if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) in[static_cast<std::size_t>(z)] = 1;
      for (bool grew = true; grew;) {
        grew = false;
        for (std::int64_t z = 1; z < tail; ++z) {
          if (!in[static_cast<std::size_t>(z)]) continue;
          for (std::int64_t g : s.generators()) {
            const std::int64_t y = z + g;
            if (y < tail && !in[static_cast<std::size_t>(y)]) {
              in[static_cast<std::size_t>(y)] = 1;
              grew = true;
            }
          }
        }
      }
      std::vector<std::int64_t> members;
      for (std::int64_t z = 0; z < tail; ++z)
        if (in[static_cast<std::size_t>(z)]) members.push_back(z);
      const relative_ideal e(s, cofinite_set::make(members, tail));

      const std::int64_t rw = 2 * tail + 8;
      const naive_set ns = naive_materialize(s.carrier(), -4 * rw - 20, 4 * rw + 20);
      const naive_set ne = naive_from_members(members, tail, -4 * rw - 20, 4 * rw + 20);
      const naive_set nd = naive_colon(ns, ne, -4 * rw - 20, 4 * rw + 20);
      st.check(naive_agrees(dual(e).carrier(), nd, -rw, rw), "dual vs naive");
      st.check(naive_agrees(reflexive_hull(e).carrier(),
                            naive_colon(ns, nd, -4 * rw - 20, 4 * rw + 20), -rw, rw),
               "reflexive hull vs naive");
      st.check(naive_agrees(trace(e).carrier(), naive_sum(nd, ne, -rw, rw), -rw, rw),
               "trace vs naive");
      const naive_set nm = naive_colon(ne, ne, -4 * rw - 20, 4 * rw + 20);
      st.check(naive_agrees(multiplier_ring(e).carrier(), nm, -rw, rw),
               "multiplier ring vs naive");
      const naive_set shifted = naive_translate(nm, e.carrier().min_elt(), -rw, rw);
      bool naive_stable = true;
      for (std::int64_t z = -rw; z <= rw; ++z)
        naive_stable = naive_stable && shifted.contains(z) == ne.contains(z);
      st.check(is_stable(e) == naive_stable, "stability vs naive");
    }
  }
  return st.report;
}

bool naive_oracle_suite(const oracle_config& cfg) { return run_oracle_suite(cfg).failures == 0; }

int resolve_parallelism(const oracle_config& cfg) {
  long n = 0;
  if (const char* env = std::getenv("CONDUCTOR_LAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) n = v;
  }
  if (n == 0 && cfg.parallelism > 0) n = cfg.parallelism;
  if (n == 0) n = static_cast<long>(std::thread::hardware_concurrency());
  return static_cast<int>(std::clamp<long>(n, 1, 64));
}

}  // namespace conductor
