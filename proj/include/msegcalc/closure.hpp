#pragma once

// Closures of a multisegment under the tau moves, closed elements and the
// constructions that produce them directly.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "multisegment.hpp"
#include "segment.hpp"

namespace msegcalc {

// A tuple is closed iff no two of its parts are connected.
inline bool is_closed(const Multisegment& ms, Rank rank) {
  require_valid(ms, rank);
  const auto parts = ms.parts();
  for (std::size_t m = 0; m < parts.size(); ++m)
    for (std::size_t l = m + 1; l < parts.size(); ++l)
      if (connected(parts[m], parts[l], rank))
        return false;
  return true;
}

struct ClosureSet {
  Rank rank;
  Multisegment seed;
  // Lexicographic order on part sequences.
  std::vector<Multisegment> members;
  std::vector<Multisegment> closed_members;
  // sort_plus form of each orbit met by closed_members, sorted.
  std::vector<Multisegment> orbit_representatives;

  bool contains(const Multisegment& t) const {
    return std::binary_search(members.begin(), members.end(), t);
  }
};

// Breadth-first saturation of {ms} under every tau_{m,l} and under the
// transposition of parts m, l whenever j_m = j_l.
inline ClosureSet closure(const Multisegment& ms, Rank rank) {
  require_valid(ms, rank);

  std::int64_t lo = ms.parts().front().i;
  std::int64_t hi = ms.parts().front().j;
  for (const auto& s : ms.parts()) {
    lo = std::min(lo, s.i);
    hi = std::max(hi, s.j);
  }

  std::set<Multisegment> seen{ms};
  std::deque<Multisegment> frontier{ms};
  auto visit = [&](Multisegment t) {
    for (const auto& s : t.parts())
      if (s.i < lo || s.j > hi)
        throw internal_error("closure left the seed bounding box: " +
                             to_string(t));
    if (seen.insert(t).second)
      frontier.push_back(std::move(t));
  };

  const std::size_t r = ms.size();
  while (!frontier.empty()) {
    const Multisegment t = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t m = 1; m <= r; ++m) {
      for (std::size_t l = m + 1; l <= r; ++l) {
        if (auto moved = tau(t, m, l, rank))
          visit(std::move(*moved));
        if (t.part(m).j == t.part(l).j)
          visit(swap_parts(t, m, l));
      }
    }
  }

  ClosureSet out{rank, ms, {seen.begin(), seen.end()}, {}, {}};
  std::set<Multisegment> reps;
  for (const auto& t : out.members) {
    if (is_closed(t, rank)) {
      out.closed_members.push_back(t);
      reps.insert(sort_plus(t));
    }
  }
  out.orbit_representatives.assign(reps.begin(), reps.end());
  return out;
}

// Closed members of the closure, one sort_plus representative per orbit.
inline std::vector<Multisegment> closed_elements(const Multisegment& ms,
                                                 Rank rank) {
  return closure(ms, rank).orbit_representatives;
}

// For a doubly sorted ms (i and j weakly decreasing) with rank >= n(ms),
// builds the closed element ([i_{sigma(1)}, j_1], ..., [i_{sigma(r)}, j_r])
// where sigma(p) is the least unused index s with i_s <= j_p, chosen for
// p = r down to 1.
inline Multisegment canonical_closed(const Multisegment& ms, Rank rank) {
  require_valid(ms, rank);
  if (!is_doubly_sorted(ms))
    throw precondition_violated("canonical_closed needs i and j weakly "
                                "decreasing: " + to_string(ms));
  if (rank.value() < span(ms))
    throw precondition_violated("canonical_closed needs rank >= n(s)");

  const std::size_t r = ms.size();
  std::vector<bool> used(r, false);
  std::vector<Segment> out(r);
  for (std::size_t p = r; p >= 1; --p) {
    const std::int64_t jp = ms.part(p).j;
    std::size_t chosen = 0;
    for (std::size_t s = 1; s <= r; ++s) {
      if (!used[s - 1] && ms.part(s).i <= jp) {
        chosen = s;
        break;
      }
    }
    if (chosen == 0)
      throw internal_error("no admissible index while building sigma_s");
    used[chosen - 1] = true;
    out[p - 1] = {ms.part(chosen).i, jp};
  }
  return Multisegment(std::move(out));
}

// For ms with j weakly decreasing and rank >= n(ms): a tuple s1 with the same
// j-sequence and i-entries weakly decreasing such that ms lies in the closure
// of s1. Follows the induction on the number of parts: settle the first r-1
// parts, then if the last left endpoint is out of order, trade it with the
// previous one and recurse on the new prefix.
inline Multisegment dominant_ancestor(const Multisegment& ms, Rank rank) {
  require_valid(ms, rank);
  if (!is_plus_ordered(ms))
    throw precondition_violated("dominant_ancestor needs j weakly "
                                "decreasing: " + to_string(ms));
  if (rank.value() < span(ms))
    throw precondition_violated("dominant_ancestor needs rank >= n(s)");

  const std::size_t r = ms.size();
  if (r == 1)
    return ms;

  const Multisegment head = dominant_ancestor(ms.slice(0, r - 1), rank);
  const Multisegment last = ms.slice(r - 1, r);
  const Multisegment lifted = concat(head, last);

  const Segment prev = lifted.part(r - 1);
  const Segment tail = lifted.part(r);
  if (tail.i <= prev.i)
    return lifted;

  std::vector<Segment> traded(lifted.parts().begin(), lifted.parts().end());
  traded[r - 2] = {tail.i, prev.j};
  traded[r - 1] = {prev.i, tail.j};
  const Multisegment second(std::move(traded));

  return concat(dominant_ancestor(second.slice(0, r - 1), rank),
                second.slice(r - 1, r));
}

} // namespace msegcalc
