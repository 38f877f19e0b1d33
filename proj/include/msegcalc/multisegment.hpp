#pragma once

// Ordered tuples of segments, the symmetric-group action on them and the
// elementary moves: tau, duals and the iota normal forms.
//
// Part positions in this interface are 1-based.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "segment.hpp"

namespace msegcalc {

class Multisegment {
public:
  explicit Multisegment(std::vector<Segment> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
      throw usage_error("a multisegment needs at least one part");
    for (const auto& s : parts_)
      if (s.j < s.i)
        throw invalid_segment("segment " + to_string(s) + " has j < i");
  }
  Multisegment(std::initializer_list<Segment> parts)
      : Multisegment(std::vector<Segment>(parts)) {}

  std::size_t size() const noexcept { return parts_.size(); }
  std::span<const Segment> parts() const noexcept { return parts_; }

  // 1-based access.
  const Segment& part(std::size_t p) const {
    if (p < 1 || p > parts_.size())
      throw index_out_of_range("part index " + std::to_string(p) +
                               " outside 1.." + std::to_string(parts_.size()));
    return parts_[p - 1];
  }

  Segment& mutable_part(std::size_t p) {
    return const_cast<Segment&>(std::as_const(*this).part(p));
  }

  // s(p1, p2): parts p1+1 .. p2.
  Multisegment slice(std::size_t p1, std::size_t p2) const {
    if (p1 >= p2 || p2 > parts_.size())
      throw index_out_of_range("bad slice bounds");
    return Multisegment(std::vector<Segment>(parts_.begin() + p1,
                                             parts_.begin() + p2));
  }

  friend Multisegment concat(const Multisegment& a, const Multisegment& b) {
    std::vector<Segment> out(a.parts_);
    out.insert(out.end(), b.parts_.begin(), b.parts_.end());
    return Multisegment(std::move(out));
  }

  friend auto operator<=>(const Multisegment&, const Multisegment&) = default;
  friend bool operator==(const Multisegment&, const Multisegment&) = default;

private:
  std::vector<Segment> parts_;
};

// `[i,j]` blocks with no separators.
inline std::string to_string(const Multisegment& ms) {
  std::string out;
  for (const auto& s : ms.parts())
    out += to_string(s);
  return out;
}

inline void require_valid(const Multisegment& ms, Rank rank) {
  for (const auto& s : ms.parts())
    require_valid(s, rank);
}

// (m, q^a) with a - m even corresponds to [(a-m)/2, (a+m)/2].
inline Segment segment_from_spectral(std::int64_t m, std::int64_t a) {
  if ((a - m) % 2 != 0)
    throw precondition_violated("a - m must be even");
  return {(a - m) / 2, (a + m) / 2};
}

inline LWeight weight_of(const Multisegment& ms, Rank rank) {
  LWeight out;
  for (const auto& s : ms.parts())
    out *= lweight_of_segment(s, rank);
  return out;
}

inline bool connected(const Segment& a, const Segment& b, Rank rank) {
  const std::int64_t bound = rank.value() + 1;
  const bool a_right = b.i < a.i && a.i <= b.j && b.j < a.j &&
                       a.j - b.i >= 0 && a.j - b.i <= bound;
  const bool b_right = a.i < b.i && b.i <= a.j && a.j < b.j &&
                       b.j - a.i >= 0 && b.j - a.i <= bound;
  return a_right || b_right;
}

namespace detail {

inline void check_pair(const Multisegment& ms, std::size_t m, std::size_t l) {
  if (m < 1 || l > ms.size() || m >= l)
    throw index_out_of_range("need 1 <= m < l <= " + std::to_string(ms.size()) +
                             ", got m=" + std::to_string(m) +
                             " l=" + std::to_string(l));
}

} // namespace detail

// tau_{m,l}: replaces parts m, l by [i_l, j_m] and [i_m, j_l] when they are
// connected; std::nullopt plays the role of the zero vector.
inline std::optional<Multisegment> tau(const Multisegment& ms, std::size_t m,
                                       std::size_t l, Rank rank) {
  detail::check_pair(ms, m, l);
  const Segment a = ms.part(m);
  const Segment b = ms.part(l);
  if (!connected(a, b, rank))
    return std::nullopt;
  Multisegment out = ms;
  out.mutable_part(m) = {b.i, a.j};
  out.mutable_part(l) = {a.i, b.j};
  return out;
}

// Adjacent tau_p = tau_{p,p+1}, lifted to act on "maybe zero" values.
inline std::optional<Multisegment>
tau_adjacent(const std::optional<Multisegment>& ms, std::size_t p, Rank rank) {
  if (!ms)
    return std::nullopt;
  return tau(*ms, p, p + 1, rank);
}

inline Multisegment swap_parts(const Multisegment& ms, std::size_t m,
                               std::size_t l) {
  Multisegment out = ms;
  std::swap(out.mutable_part(m), out.mutable_part(l));
  return out;
}

// Representative with j weakly decreasing, ties by i decreasing.
inline Multisegment sort_plus(const Multisegment& ms) {
  std::vector<Segment> parts(ms.parts().begin(), ms.parts().end());
  std::stable_sort(parts.begin(), parts.end(),
                   [](const Segment& a, const Segment& b) {
                     return a.j != b.j ? a.j > b.j : a.i > b.i;
                   });
  return Multisegment(std::move(parts));
}

// Representative with j weakly increasing, ties by i increasing.
inline Multisegment sort_minus(const Multisegment& ms) {
  std::vector<Segment> parts(ms.parts().begin(), ms.parts().end());
  std::stable_sort(parts.begin(), parts.end(),
                   [](const Segment& a, const Segment& b) {
                     return a.j != b.j ? a.j < b.j : a.i < b.i;
                   });
  return Multisegment(std::move(parts));
}

inline bool is_plus_ordered(const Multisegment& ms) {
  auto p = ms.parts();
  return std::adjacent_find(p.begin(), p.end(),
                            [](const Segment& a, const Segment& b) {
                              return a.j < b.j;
                            }) == p.end();
}

inline bool is_minus_ordered(const Multisegment& ms) {
  auto p = ms.parts();
  return std::adjacent_find(p.begin(), p.end(),
                            [](const Segment& a, const Segment& b) {
                              return a.j > b.j;
                            }) == p.end();
}

// Both i and j weakly decreasing.
inline bool is_doubly_sorted(const Multisegment& ms) {
  auto p = ms.parts();
  return std::adjacent_find(p.begin(), p.end(),
                            [](const Segment& a, const Segment& b) {
                              return a.j < b.j || a.i < b.i;
                            }) == p.end();
}

// n(s) = max j - min i - 1. Equals -1 only for a single part [i,i].
inline std::int64_t span(const Multisegment& ms) {
  std::int64_t max_j = ms.parts().front().j;
  std::int64_t min_i = ms.parts().front().i;
  for (const auto& s : ms.parts()) {
    max_j = std::max(max_j, s.j);
    min_i = std::min(min_i, s.i);
  }
  return max_j - min_i - 1;
}

// s* = ([j_1, n+1+i_1], ...)
inline Multisegment dual_right(const Multisegment& ms, Rank rank) {
  require_valid(ms, rank);
  std::vector<Segment> out;
  out.reserve(ms.size());
  for (const auto& s : ms.parts())
    out.push_back({s.j, rank.value() + 1 + s.i});
  return Multisegment(std::move(out));
}

// *s = ([-n-1+j_1, i_1], ...)
inline Multisegment dual_left(const Multisegment& ms, Rank rank) {
  require_valid(ms, rank);
  std::vector<Segment> out;
  out.reserve(ms.size());
  for (const auto& s : ms.parts())
    out.push_back({s.j - rank.value() - 1, s.i});
  return Multisegment(std::move(out));
}

enum class Sign { plus, minus };

inline const char* to_string(Sign sign) {
  return sign == Sign::plus ? "+" : "-";
}

using SegmentPair = std::pair<Segment, Segment>;

// Puts a pair in weakly decreasing j order: unchanged if already ordered,
// swapped if the parts are not connected, endpoints crossed otherwise.
inline SegmentPair iota_plus(const Segment& a, const Segment& b, Rank rank) {
  if (a.j >= b.j)
    return {a, b};
  if (!connected(a, b, rank))
    return {b, a};
  return {{a.i, b.j}, {b.i, a.j}};
}

// Mirror image of iota_plus: weakly increasing j order.
inline SegmentPair iota_minus(const Segment& a, const Segment& b, Rank rank) {
  if (b.j >= a.j)
    return {a, b};
  if (!connected(a, b, rank))
    return {b, a};
  return {{a.i, b.j}, {b.i, a.j}};
}

inline SegmentPair iota(const Segment& a, const Segment& b, Sign sign,
                        Rank rank) {
  return sign == Sign::plus ? iota_plus(a, b, rank) : iota_minus(a, b, rank);
}

// iota^{+-} applied to the window of parts (p, p+1).
inline Multisegment iota_at(const Multisegment& ms, std::size_t p, Sign sign,
                            Rank rank) {
  detail::check_pair(ms, p, p + 1);
  require_valid(ms, rank);
  Multisegment out = ms;
  auto [x, y] = iota(ms.part(p), ms.part(p + 1), sign, rank);
  out.mutable_part(p) = x;
  out.mutable_part(p + 1) = y;
  return out;
}

// s^{+-} = (iota_{r-1} ... iota_1)(iota_{r-1} ... iota_2) ... (iota_{r-1})s.
// The rightmost factor acts first, so block k applies iota_k, iota_{k+1}, ...,
// iota_{r-1} in that order, for k = r-1 down to 1.
inline Multisegment normal_form(const Multisegment& ms, Sign sign, Rank rank) {
  require_valid(ms, rank);
  Multisegment out = ms;
  const std::size_t r = ms.size();
  for (std::size_t k = r - 1; k >= 1; --k)
    for (std::size_t p = k; p <= r - 1; ++p)
      out = iota_at(out, p, sign, rank);
  return out;
}

} // namespace msegcalc
