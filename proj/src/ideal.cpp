#include "conductor/ideal.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "conductor/errors.hpp"

namespace conductor {
namespace {

// E + S ⊆ E follows from closure of the window under the generators: sums
// with a tail element of either operand land at or above E's tail bound.
bool closed_under(const cofinite_set& e, const numerical_semigroup& s) {
  for (std::int64_t w : e.window())
    for (std::int64_t g : s.generators())
      if (!e.member(w + g)) return false;
  return true;
}

}  // namespace

relative_ideal::relative_ideal(numerical_semigroup base, cofinite_set carrier)
    : base_(std::move(base)), carrier_(std::move(carrier)) {
  if (!closed_under(carrier_, base_))
    throw std::invalid_argument("relative_ideal: carrier not closed under the base");
}

relative_ideal relative_ideal::from_generators(const numerical_semigroup& base,
                                               const std::vector<std::int64_t>& gens) {
  if (gens.empty()) throw std::invalid_argument("relative_ideal: need at least one generator");
  cofinite_set acc = base.carrier().translate(gens.front());
  for (std::size_t i = 1; i < gens.size(); ++i)
    acc = set_union(acc, base.carrier().translate(gens[i]));
  return relative_ideal(base, acc);
}

relative_ideal relative_ideal::unit(const numerical_semigroup& base) {
  return relative_ideal(base, base.carrier());
}

relative_ideal relative_ideal::translated(std::int64_t d) const {
  return relative_ideal(base_, carrier_.translate(d));
}

std::string relative_ideal::to_string() const {
  return carrier_.to_string() + " over " + base_.label();
}

relative_ideal dual(const relative_ideal& e) {
  return relative_ideal(e.base(), colon(e.base().carrier(), e.carrier()));
}

relative_ideal reflexive_hull(const relative_ideal& e) { return dual(dual(e)); }

bool is_reflexive(const relative_ideal& e) {
  return reflexive_hull(e).carrier() == e.carrier();
}

numerical_semigroup multiplier_ring(const relative_ideal& e) {
  const cofinite_set m = colon(e.carrier(), e.carrier());
  try {
    return numerical_semigroup::from_carrier(m);
  } catch (const std::invalid_argument&) {
    throw internal_check_error("multiplier_ring: (E - E) is not a semigroup");
  }
}

bool is_isomorphic(const relative_ideal& a, const relative_ideal& b) {
  if (!(a.base() == b.base()))
    throw std::invalid_argument("is_isomorphic: ideals over different bases");
  return a.normalized().carrier() == b.normalized().carrier();
}

bool is_stable(const relative_ideal& e) {
  const cofinite_set m = colon(e.carrier(), e.carrier());
  return m.translate(e.min_elt()) == e.carrier();
}

relative_ideal trace(const relative_ideal& e) {
  return relative_ideal(e.base(), sum(colon(e.base().carrier(), e.carrier()), e.carrier()));
}

bool is_trace_ideal(const relative_ideal& e) {
  if (!e.is_integral()) throw std::invalid_argument("is_trace_ideal: ideal not integral");
  return trace(e).carrier() == e.carrier();
}

std::int64_t ext1_colength(const relative_ideal& e) {
  if (!e.is_integral()) throw std::invalid_argument("ext1_colength: ideal not integral");
  // E ⊆ S makes S ⊆ dual(E), so the colength is defined.
  return colength(e.base().carrier(), dual(e).carrier());
}

bool is_parameter(const relative_ideal& e) {
  if (!e.is_integral()) throw std::invalid_argument("is_parameter: ideal not integral");
  return e.normalized().carrier() == e.base().carrier();
}

bool is_ulrich(const relative_ideal& e) {
  if (!e.is_integral()) throw std::invalid_argument("is_ulrich: ideal not integral");
  const cofinite_set& ec = e.carrier();
  const cofinite_set twice = sum(ec, ec);
  const std::int64_t hi = ec.tail_bound() + e.base().multiplicity();
  for (std::int64_t v : ec.members_in(ec.min_elt(), hi + 1)) {
    if (!(twice == ec.translate(v))) continue;
    const cofinite_set q = colon(e.base().carrier().translate(v), ec);
    if (set_intersection(e.base().carrier(), q) == ec) return true;
  }
  return false;
}

std::vector<relative_ideal> enumerate_normalized_ideals(const numerical_semigroup& s) {
  const auto gap = s.gaps();
  const std::size_t n = gap.size();
  if (n > 16) throw std::invalid_argument("enumerate_normalized_ideals: genus beyond safety bound");
  const std::int64_t tail = s.carrier().tail_bound();
  std::vector<relative_ideal> out;
  std::vector<char> in(static_cast<std::size_t>(tail) + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::int64_t z = 0; z < tail; ++z) in[static_cast<std::size_t>(z)] = s.contains(z);
    std::vector<std::int64_t> members = s.carrier().members_in(0, tail);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) {
        in[static_cast<std::size_t>(gap[i])] = 1;
        members.push_back(gap[i]);
      }
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i) {
      if (!(mask >> i & 1)) continue;
      for (std::int64_t g : s.generators()) {
        const std::int64_t z = gap[i] + g;
        if (z < tail && !in[static_cast<std::size_t>(z)]) {
          closed = false;
          break;
        }
      }
    }
    if (closed) out.emplace_back(s, cofinite_set::make(members, tail));
  }
  std::sort(out.begin(), out.end(), [&](const relative_ideal& a, const relative_ideal& b) {
    const std::int64_t ca = colength(s.carrier(), a.carrier());
    const std::int64_t cb = colength(s.carrier(), b.carrier());
    if (ca != cb) return ca < cb;
    return a.carrier() < b.carrier();
  });
  return out;
}

}  // namespace conductor
