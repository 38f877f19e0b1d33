#pragma once

// q-characters from lattice paths. A fundamental module V(w[i,j]) has one
// l-weight per +-1 path from 2j to n+1+2i in n+1 steps, read off from the
// path's corners; Weyl modules multiply the fundamental characters.
//
// These routines are deliberately independent of the closure machinery so
// that they can serve as an oracle for it.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "multisegment.hpp"
#include "segment.hpp"

namespace msegcalc {

// g(0), ..., g(n+1).
struct Path {
  std::vector<std::int64_t> values;

  std::int64_t operator()(std::size_t r) const { return values.at(r); }
  std::size_t steps() const noexcept {
    return values.empty() ? 0 : values.size() - 1;
  }

  friend bool operator==(const Path&, const Path&) = default;
};

inline std::string to_string(const Path& g) {
  std::string out = "(";
  for (std::size_t r = 0; r < g.values.size(); ++r) {
    if (r)
      out += ",";
    out += std::to_string(g.values[r]);
  }
  return out + ")";
}

// All paths for [i,j] at rank n, ordered lexicographically by the positions
// of their down-steps (so the path stepping down first comes first).
inline std::vector<Path> enumerate_paths(const Segment& seg, Rank rank) {
  require_valid(seg, rank);
  const auto steps = static_cast<std::size_t>(rank.value() + 1);
  const auto downs = static_cast<std::size_t>(seg.length());

  std::vector<Path> out;
  std::vector<std::size_t> pos(downs);
  for (std::size_t k = 0; k < downs; ++k)
    pos[k] = k;

  while (true) {
    Path g;
    g.values.reserve(steps + 1);
    g.values.push_back(2 * seg.j);
    std::size_t next = 0;
    for (std::size_t step = 0; step < steps; ++step) {
      const bool down = next < downs && pos[next] == step;
      if (down)
        ++next;
      g.values.push_back(g.values.back() + (down ? -1 : 1));
    }
    out.push_back(std::move(g));

    // advance to the next combination
    std::size_t k = downs;
    while (k > 0 && pos[k - 1] == steps - downs + (k - 1))
      --k;
    if (k == 0)
      break;
    ++pos[k - 1];
    for (std::size_t t = k; t < downs; ++t)
      pos[t] = pos[t - 1] + 1;
  }
  return out;
}

struct CornerData {
  std::vector<Segment> plus;  // local minima
  std::vector<Segment> minus; // local maxima
};

// Corner at 1 <= r <= n when g(r-1) = g(r)+-1 = g(r+1); it houses the
// segment [(g(r)-r)/2, (g(r)+r)/2].
inline CornerData corners(const Path& g) {
  CornerData out;
  const std::size_t last = g.steps();
  for (std::size_t r = 1; r < last; ++r) {
    const std::int64_t before = g.values[r - 1];
    const std::int64_t here = g.values[r];
    const std::int64_t after = g.values[r + 1];
    if (before != after)
      continue;
    const auto rr = static_cast<std::int64_t>(r);
    const Segment s{(here - rr) / 2, (here + rr) / 2};
    if (before == here + 1)
      out.plus.push_back(s);
    else
      out.minus.push_back(s);
  }
  return out;
}

inline LWeight path_weight(const Path& g, Rank rank) {
  const CornerData c = corners(g);
  LWeight out;
  for (const auto& s : c.plus)
    out *= lweight_of_segment(s, rank);
  for (const auto& s : c.minus)
    out *= lweight_of_segment(s, rank).inverse();
  return out;
}

// Finite multiset of l-weights.
class QChar {
public:
  using map_type = std::map<LWeight, std::int64_t>;

  QChar() = default;

  static QChar unit() {
    QChar q;
    q.add(LWeight::identity(), 1);
    return q;
  }

  void add(const LWeight& w, std::int64_t multiplicity) {
    if (multiplicity < 0)
      throw usage_error("negative multiplicity");
    if (multiplicity == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(w, multiplicity);
    if (!inserted)
      it->second = detail::checked_add(it->second, multiplicity);
  }

  const map_type& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t distinct_size() const noexcept { return terms_.size(); }

  std::int64_t multiplicity(const LWeight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }

  std::int64_t total_mass() const {
    std::int64_t m = 0;
    for (const auto& [w, k] : terms_)
      m = detail::checked_add(m, k);
    return m;
  }

  // Multiset convolution: l-weights multiply, multiplicities multiply.
  friend QChar operator*(const QChar& a, const QChar& b) {
    QChar out;
    for (const auto& [wa, ka] : a.terms_)
      for (const auto& [wb, kb] : b.terms_)
        out.add(wa * wb, detail::checked_mul(ka, kb));
    return out;
  }

  friend bool operator==(const QChar&, const QChar&) = default;

private:
  map_type terms_;
};

// One `multiplicity * <lweight>` line per term, sorted by the rendered
// l-weight.
inline std::string to_string(const QChar& q) {
  std::vector<std::pair<std::string, std::int64_t>> rows;
  rows.reserve(q.terms().size());
  for (const auto& [w, k] : q.terms())
    rows.emplace_back(to_string(w), k);
  std::sort(rows.begin(), rows.end());
  std::string out;
  for (const auto& [w, k] : rows)
    out += std::to_string(k) + " * " + w + "\n";
  return out;
}

inline QChar fundamental_qchar(const Segment& seg, Rank rank) {
  require_valid(seg, rank);
  if (seg.is_degenerate(rank))
    throw invalid_segment("fundamental_qchar needs 1 <= j-i <= n, got " +
                          to_string(seg));
  QChar q;
  for (const auto& g : enumerate_paths(seg, rank))
    q.add(path_weight(g, rank), 1);
  return q;
}

// Product of the fundamental characters of the non-degenerate parts.
inline QChar weyl_qchar(const Multisegment& ms, Rank rank) {
  require_valid(ms, rank);
  QChar q = QChar::unit();
  const Multisegment ordered = sort_plus(ms);
  for (const auto& s : ordered.parts())
    if (!s.is_degenerate(rank))
      q = q * fundamental_qchar(s, rank);
  return q;
}

inline QChar dominant_part(const QChar& q) {
  QChar out;
  for (const auto& [w, k] : q.terms())
    if (w.is_dominant())
      out.add(w, k);
  return out;
}

// l-weights of the simple module V(w_s) for a connected pair s with
// j_1 >= j_2: products over path pairs with g1 strictly above g2 everywhere.
inline QChar pair_simple_qchar(const Multisegment& ms, Rank rank) {
  require_valid(ms, rank);
  if (ms.size() != 2 || !is_plus_ordered(ms) ||
      !connected(ms.part(1), ms.part(2), rank))
    throw precondition_violated("pair_simple_qchar needs a connected pair "
                                "with j_1 >= j_2: " + to_string(ms));

  const auto upper = enumerate_paths(ms.part(1), rank);
  const auto lower = enumerate_paths(ms.part(2), rank);
  std::vector<LWeight> lower_weights;
  lower_weights.reserve(lower.size());
  for (const auto& g : lower)
    lower_weights.push_back(path_weight(g, rank));

  QChar q;
  for (const auto& g1 : upper) {
    const LWeight w1 = path_weight(g1, rank);
    for (std::size_t k = 0; k < lower.size(); ++k) {
      const auto& g2 = lower[k];
      bool above = true;
      for (std::size_t m = 0; m < g1.values.size() && above; ++m)
        above = g1.values[m] > g2.values[m];
      if (above)
        q.add(w1 * lower_weights[k], 1);
    }
  }
  return q;
}

// Test weight prod_s w[i_s, j_1+1] w[j_s, j_1+1]^-1 for a doubly sorted tuple.
// Every member of the closure has it with multiplicity one when n > n(s).
inline LWeight soclehom_weight(const Multisegment& ms, Rank rank) {
  require_valid(ms, rank);
  if (!is_doubly_sorted(ms))
    throw precondition_violated("soclehom_weight needs i and j weakly "
                                "decreasing: " + to_string(ms));
  const std::int64_t top = ms.part(1).j + 1;
  LWeight out;
  for (const auto& s : ms.parts()) {
    out *= lweight_of_segment({s.i, top}, rank);
    out *= lweight_of_segment({s.j, top}, rank).inverse();
  }
  return out;
}

} // namespace msegcalc
