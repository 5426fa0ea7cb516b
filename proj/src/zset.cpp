#include "conductor/zset.hpp"

#include <algorithm>
#include <stdexcept>

namespace conductor {
namespace {

constexpr std::int64_t kMaxWindowBits = std::int64_t{1} << 22;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cofinite_set: integer overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("cofinite_set: integer overflow");
  return r;
}

void check_window(std::int64_t nbits) {
  if (nbits > kMaxWindowBits) throw std::invalid_argument("cofinite_set: window too large");
}

std::size_t words_for(std::int64_t nbits) {
  return static_cast<std::size_t>((nbits + 63) / 64);
}

bool get_bit(const std::vector<std::uint64_t>& w, std::int64_t i) {
  return (w[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u;
}

void set_bit(std::vector<std::uint64_t>& w, std::int64_t i) {
  w[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
}

// dst |= src << shift, truncated to dst_bits; src provides src_bits bits.
void or_shifted(std::vector<std::uint64_t>& dst, std::int64_t dst_bits,
                const std::vector<std::uint64_t>& src, std::int64_t src_bits,
                std::int64_t shift) {
  const std::int64_t q = shift >> 6;
  const int r = static_cast<int>(shift & 63);
  const std::int64_t nw = static_cast<std::int64_t>(dst.size());
  const std::int64_t sw = static_cast<std::int64_t>(src.size());
  for (std::int64_t i = q; i < nw; ++i) {
    std::uint64_t v = 0;
    const std::int64_t j = i - q;
    if (j < sw) v = src[static_cast<std::size_t>(j)] << r;
    if (r != 0 && j - 1 >= 0 && j - 1 < sw) v |= src[static_cast<std::size_t>(j - 1)] >> (64 - r);
    dst[static_cast<std::size_t>(i)] |= v;
  }
  // Clear bits at or above dst_bits (srcs shifted past the end).
  if (dst_bits & 63) dst[words_for(dst_bits) - 1] &= (std::uint64_t{1} << (dst_bits & 63)) - 1;
  (void)src_bits;
}

// dst &= (src >> shift), where src bit (i + shift) feeds dst bit i; bits
// shifted in from beyond src are taken from `fill`.
void and_shifted(std::vector<std::uint64_t>& dst, std::int64_t dst_bits,
                 const std::vector<std::uint64_t>& src, std::int64_t src_bits,
                 std::int64_t shift, bool fill) {
  for (std::int64_t i = 0; i < dst_bits; ++i) {
    const std::int64_t j = i + shift;
    const bool v = (j < src_bits) ? get_bit(src, j) : fill;
    if (!v) dst[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63));
  }
}

}  // namespace

cofinite_set cofinite_set::from_tail(std::int64_t tail) {
  cofinite_set s;
  s.min_ = tail;
  s.tail_ = tail;
  return s;
}

cofinite_set cofinite_set::from_bits(std::int64_t lo, const std::vector<std::uint64_t>& bits,
                                     std::int64_t tail) {
  // Absorb a run of members ending at the tail, then drop leading non-members.
  std::int64_t t = tail;
  while (t > lo && get_bit(bits, t - 1 - lo)) --t;
  std::int64_t first = lo;
  while (first < t && !get_bit(bits, first - lo)) ++first;
  if (first == t) return from_tail(t);
  cofinite_set s;
  s.min_ = first;
  s.tail_ = t;
  s.bits_.assign(words_for(t - first), 0);
  for (std::int64_t i = first; i < t; ++i)
    if (get_bit(bits, i - lo)) set_bit(s.bits_, i - first);
  return s;
}

cofinite_set cofinite_set::make(const std::vector<std::int64_t>& members, std::int64_t tail) {
  std::int64_t lo = tail;
  for (std::int64_t m : members) lo = std::min(lo, m);
  check_window(checked_sub(tail, lo));
  std::vector<std::uint64_t> bits(words_for(tail - lo), 0);
  for (std::int64_t m : members)
    if (m < tail) set_bit(bits, m - lo);
  return from_bits(lo, bits, tail);
}

bool cofinite_set::member(std::int64_t z) const {
  if (z >= tail_) return true;
  if (z < min_) return false;
  return get_bit(bits_, z - min_);
}

std::vector<std::int64_t> cofinite_set::window() const {
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0, n = tail_ - min_; i < n; ++i)
    if (get_bit(bits_, i)) out.push_back(min_ + i);
  return out;
}

std::vector<std::int64_t> cofinite_set::members_in(std::int64_t lo, std::int64_t hi) const {
  std::vector<std::int64_t> out;
  for (std::int64_t z = std::max(lo, min_); z < hi; ++z)
    if (member(z)) out.push_back(z);
  return out;
}

cofinite_set cofinite_set::translate(std::int64_t d) const {
  cofinite_set s = *this;
  s.min_ = checked_add(min_, d);
  s.tail_ = checked_add(tail_, d);
  return s;
}

std::strong_ordering cofinite_set::operator<=>(const cofinite_set& o) const {
  if (auto c = min_ <=> o.min_; c != 0) return c;
  if (auto c = tail_ <=> o.tail_; c != 0) return c;
  return bits_ <=> o.bits_;
}

std::string cofinite_set::to_string() const {
  std::string out;
  if (tail_ > min_) {
    out += '{';
    bool first = true;
    for (std::int64_t m : window()) {
      if (!first) out += ',';
      out += std::to_string(m);
      first = false;
    }
    out += "}∪";
  }
  out += '[';
  out += std::to_string(tail_);
  out += ",∞)";
  return out;
}

cofinite_set sum(const cofinite_set& a, const cofinite_set& b) {
  const std::int64_t lo = checked_add(a.min_, b.min_);
  const std::int64_t tail = std::min(checked_add(a.tail_, b.min_), checked_add(b.tail_, a.min_));
  const std::int64_t len = tail - lo;  // >= 0 since a.min_ <= a.tail_
  check_window(len);
  std::vector<std::uint64_t> bits(words_for(len), 0);
  if (len > 0) {
    // Materialize B over [b.min_, tail - a.min_); members of A at offset d
    // contribute B's bits shifted by d.
    std::vector<std::uint64_t> mat_b(words_for(len), 0);
    for (std::int64_t i = 0; i < len; ++i)
      if (b.member(b.min_ + i)) set_bit(mat_b, i);
    for (std::int64_t v : a.members_in(a.min_, tail - b.min_))
      or_shifted(bits, len, mat_b, len, v - a.min_);
  }
  return cofinite_set::from_bits(lo, bits, tail);
}

cofinite_set colon(const cofinite_set& a, const cofinite_set& b) {
  // z is in (a : b) iff z >= tail(a) - tail(b), z + w ∈ a for every window
  // member w of b, and z >= min(a) - min(b); everything above
  // tail(a) - min(b) qualifies outright.
  const std::int64_t tail = checked_sub(a.tail_, b.min_);
  const std::int64_t lo = std::max(checked_sub(a.min_, b.min_), checked_sub(a.tail_, b.tail_));
  const std::int64_t len = tail - lo;  // >= 0
  check_window(len);
  std::vector<std::uint64_t> cand(words_for(len), ~std::uint64_t{0});
  if (len > 0) {
    if (len & 63) cand[words_for(len) - 1] = (std::uint64_t{1} << (len & 63)) - 1;
    // Candidate z needs a.member(z + w); slice A's bits at offset z + w.
    const std::int64_t mat_lo = checked_add(lo, b.min_);
    const std::int64_t mat_len = checked_sub(checked_add(tail - 1, b.tail_), mat_lo);
    check_window(mat_len);
    std::vector<std::uint64_t> mat_a(words_for(std::max<std::int64_t>(mat_len, 1)), 0);
    for (std::int64_t i = 0; i < mat_len; ++i)
      if (a.member(mat_lo + i)) set_bit(mat_a, i);
    for (std::int64_t w : b.window())
      and_shifted(cand, len, mat_a, mat_len, w - b.min_, true);
  }
  return cofinite_set::from_bits(lo, cand, tail);
}

cofinite_set set_union(const cofinite_set& a, const cofinite_set& b) {
  const std::int64_t lo = std::min(a.min_, b.min_);
  const std::int64_t tail = std::min(a.tail_, b.tail_);
  const std::int64_t len = tail - lo;
  check_window(len);
  std::vector<std::uint64_t> bits(words_for(len), 0);
  for (std::int64_t i = 0; i < len; ++i)
    if (a.member(lo + i) || b.member(lo + i)) set_bit(bits, i);
  return cofinite_set::from_bits(lo, bits, tail);
}

cofinite_set set_intersection(const cofinite_set& a, const cofinite_set& b) {
  const std::int64_t lo = std::max(a.min_, b.min_);
  const std::int64_t tail = std::max(a.tail_, b.tail_);
  const std::int64_t len = tail - lo;
  check_window(len);
  std::vector<std::uint64_t> bits(words_for(len), 0);
  for (std::int64_t i = 0; i < len; ++i)
    if (a.member(lo + i) && b.member(lo + i)) set_bit(bits, i);
  return cofinite_set::from_bits(lo, bits, tail);
}

bool is_subset(const cofinite_set& a, const cofinite_set& b) {
  // Canonicality of b: if tail(a) < tail(b), then tail(b) - 1 ∈ a \ b.
  if (a.tail_ < b.tail_) return false;
  for (std::int64_t i = 0, n = a.tail_ - a.min_; i < n; ++i)
    if (get_bit(a.bits_, i) && !b.member(a.min_ + i)) return false;
  return true;
}

std::int64_t colength(const cofinite_set& a, const cofinite_set& b) {
  if (!is_subset(a, b)) throw std::invalid_argument("colength: first set is not a subset");
  std::int64_t n = 0;
  for (std::int64_t z = b.min_; z < a.tail_; ++z)
    if (b.member(z) && !a.member(z)) ++n;
  return n;
}

}  // namespace conductor
