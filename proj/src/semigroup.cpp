#include "conductor/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "conductor/errors.hpp"

namespace conductor {
namespace {

constexpr std::int64_t kMaxGenus = 16;
constexpr std::int64_t kMaxApery = std::int64_t{1} << 20;
constexpr std::int64_t kMaxClosureSpan = std::int64_t{1} << 20;

}  // namespace

numerical_semigroup numerical_semigroup::naturals() {
  return from_carrier(cofinite_set::naturals());
}

numerical_semigroup numerical_semigroup::from_generators(const std::vector<std::int64_t>& gens) {
  if (gens.empty()) throw std::invalid_argument("semigroup: need at least one generator");
  std::int64_t g = 0;
  for (std::int64_t v : gens) {
    if (v <= 0) throw std::invalid_argument("semigroup: generators must be positive");
    g = std::gcd(g, v);
  }
  if (g != 1) throw std::invalid_argument("semigroup: generators must have gcd 1");

  const std::int64_t m = *std::min_element(gens.begin(), gens.end());
  std::int64_t span = 2 * *std::max_element(gens.begin(), gens.end()) + 2;
  for (;; span *= 2) {
    if (span > kMaxClosureSpan) throw std::invalid_argument("semigroup: generators too large");
    std::vector<char> in(static_cast<std::size_t>(span), 0);
    in[0] = 1;
    for (std::int64_t i = 0; i < span; ++i) {
      if (!in[static_cast<std::size_t>(i)]) continue;
      for (std::int64_t v : gens)
        if (i + v < span) in[static_cast<std::size_t>(i + v)] = 1;
    }
    // A run of m consecutive elements proves cofiniteness from the run start.
    std::int64_t run = 0;
    for (std::int64_t i = 0; i < span; ++i) {
      run = in[static_cast<std::size_t>(i)] ? run + 1 : 0;
      if (run == m) {
        std::vector<std::int64_t> members;
        const std::int64_t tail = i - m + 1;
        for (std::int64_t z = 0; z < tail; ++z)
          if (in[static_cast<std::size_t>(z)]) members.push_back(z);
        return from_carrier(cofinite_set::make(members, tail));
      }
    }
  }
}

numerical_semigroup numerical_semigroup::from_carrier(const cofinite_set& carrier) {
  if (carrier.min_elt() != 0)
    throw std::invalid_argument("semigroup: carrier must have least element 0");
  const auto w = carrier.window();
  for (std::int64_t a : w) {
    if (a == 0) continue;
    for (std::int64_t b : w) {
      if (b == 0 || b > a) continue;
      if (!carrier.member(a + b))
        throw std::invalid_argument("semigroup: carrier not closed under addition");
    }
    // window x tail sums land at or above the tail bound
  }
  numerical_semigroup s;
  s.carrier_ = carrier;
  s.derive();
  return s;
}

void numerical_semigroup::derive() {
  genus_ = colength(carrier_, cofinite_set::naturals());

  const std::int64_t tail = carrier_.tail_bound();
  mult_ = carrier_.members_in(1, tail + 2).front();

  // Minimal generators: positive elements that are not a sum of two positive
  // elements.  Any s >= tail + 2*mult splits as (s - mult) + mult.
  gens_.clear();
  const auto cand = carrier_.members_in(1, tail + 2 * mult_);
  for (std::int64_t s : cand) {
    bool decomposable = false;
    for (std::int64_t a : cand) {
      if (a >= s) break;
      if (carrier_.member(s - a) && s - a > 0) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) gens_.push_back(s);
  }

  const std::int64_t f = frobenius();
  symmetric_ = true;
  for (std::int64_t z = 0; z <= f; ++z)
    if (carrier_.member(z) == carrier_.member(f - z)) {
      symmetric_ = false;
      break;
    }
  if (symmetric_ != (2 * genus_ == f + 1))
    throw internal_check_error("semigroup: symmetry disagrees with 2g = F + 1");
}

std::vector<std::int64_t> numerical_semigroup::gaps() const {
  std::vector<std::int64_t> out;
  for (std::int64_t z = 1; z < carrier_.tail_bound(); ++z)
    if (!carrier_.member(z)) out.push_back(z);
  return out;
}

std::vector<std::int64_t> numerical_semigroup::apery(std::int64_t n) const {
  if (n <= 0 || !carrier_.member(n)) throw std::invalid_argument("apery: n must be a positive element");
  if (n > kMaxApery) throw std::invalid_argument("apery: n too large");
  std::vector<std::int64_t> res(static_cast<std::size_t>(n), -1);
  std::int64_t found = 0;
  // The largest value is F + n, which bounds the scan.
  for (std::int64_t z = 0; found < n; ++z) {
    if (z > frobenius() + n) throw internal_check_error("apery: scan ran past F + n");
    if (!carrier_.member(z)) continue;
    auto& slot = res[static_cast<std::size_t>(z % n)];
    if (slot < 0) {
      slot = z;
      ++found;
    }
  }
  return res;
}

std::string numerical_semigroup::label() const {
  std::string out = "⟨";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(gens_[i]);
  }
  out += "⟩";
  return out;
}

std::string numerical_semigroup::to_string() const {
  std::string out = label();
  out += " F=" + std::to_string(frobenius());
  out += " g=" + std::to_string(genus_);
  if (symmetric_) out += " symmetric";
  return out;
}

std::vector<numerical_semigroup> oversemigroups(const numerical_semigroup& s) {
  const auto gap = s.gaps();
  const std::size_t n = gap.size();
  if (n > static_cast<std::size_t>(kMaxGenus))
    throw std::invalid_argument("oversemigroups: genus beyond safety bound");
  const std::int64_t tail = s.carrier().tail_bound();
  std::vector<numerical_semigroup> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::int64_t> added;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) added.push_back(gap[i]);
    auto members = s.carrier().members_in(0, tail);
    members.insert(members.end(), added.begin(), added.end());
    const cofinite_set t = cofinite_set::make(members, tail);
    // Closed iff sums x + y with x newly added stay inside; sums with both
    // operands in s are covered by s's own closure.
    bool closed = true;
    for (std::int64_t x : added) {
      for (std::int64_t y : t.members_in(1, tail)) {
        if (!t.member(x + y)) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (closed) out.push_back(numerical_semigroup::from_carrier(t));
  }
  std::sort(out.begin(), out.end(), [](const numerical_semigroup& a, const numerical_semigroup& b) {
    if (a.genus() != b.genus()) return a.genus() > b.genus();
    return a.generators() < b.generators();
  });
  return out;
}

std::vector<numerical_semigroup> enumerate_by_genus(std::int64_t genus) {
  if (genus < 0 || genus > kMaxGenus)
    throw std::invalid_argument("enumerate_by_genus: genus beyond safety bound");
  // Walk the semigroup tree: children remove one minimal generator larger
  // than the Frobenius number, raising genus by one.
  std::vector<numerical_semigroup> level{numerical_semigroup::naturals()};
  for (std::int64_t g = 0; g < genus; ++g) {
    std::vector<numerical_semigroup> next;
    for (const auto& s : level) {
      for (std::int64_t a : s.generators()) {
        if (a <= s.frobenius()) continue;
        auto members = s.carrier().members_in(0, a);
        next.push_back(
            numerical_semigroup::from_carrier(cofinite_set::make(members, a + 1)));
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end(),
            [](const numerical_semigroup& a, const numerical_semigroup& b) {
              return a.generators() < b.generators();
            });
  return level;
}

}  // namespace conductor
