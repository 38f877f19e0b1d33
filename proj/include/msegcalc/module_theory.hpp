#pragma once

// Decision procedures for Weyl modules W(w_s) over quantum affine sl_{n+1},
// phrased entirely in terms of closures of multisegments.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <set>
#include <string>
#include <vector>

#include "closure.hpp"
#include "error.hpp"
#include "multisegment.hpp"
#include "segment.hpp"

namespace msegcalc {

// Dominant l-weights of W(w_s): the weights of the closure of s.
inline std::set<LWeight> weyl_dominant_weights(const Multisegment& ms,
                                               Rank rank) {
  std::set<LWeight> out;
  for (const auto& t : closure(sort_plus(ms), rank).members)
    out.insert(weight_of(t, rank));
  return out;
}

// dim Hom(W(w_src), W(w_dst)), which is always 0 or 1.
inline int hom_dim(const Multisegment& src, const Multisegment& dst,
                   Rank rank) {
  require_valid(src, rank);
  return weyl_dominant_weights(dst, rank).count(weight_of(src, rank)) ? 1 : 0;
}

struct SocleSummand {
  LWeight weight;
  Multisegment representative;
};

// Socle of W(w_s): one summand W(w_t) per orbit of closed closure members.
inline std::vector<SocleSummand> socle(const Multisegment& ms, Rank rank) {
  std::vector<SocleSummand> out;
  for (const auto& rep : closure(sort_plus(ms), rank).orbit_representatives)
    out.push_back({weight_of(rep, rank), rep});
  return out;
}

inline bool is_irreducible_weyl(const Multisegment& ms, Rank rank) {
  return is_closed(ms, rank);
}

// True iff every connected pair p < s has i_p + j_p >= i_s + j_s, which makes
// W(w_s) the tensor product of the fundamental modules in the given order.
inline bool weylpermute_check(const Multisegment& ms, Rank rank) {
  require_valid(ms, rank);
  const auto parts = ms.parts();
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (std::size_t s = p + 1; s < parts.size(); ++s)
      if (connected(parts[p], parts[s], rank) &&
          parts[p].i + parts[p].j < parts[s].i + parts[s].j)
        return false;
  return true;
}

enum class ExtVerdict { vanishes, inconclusive };

inline const char* to_string(ExtVerdict v) {
  return v == ExtVerdict::vanishes ? "VANISHES" : "INCONCLUSIVE";
}

struct ExtCertificate {
  ExtVerdict verdict;
  std::set<LWeight> first_weights;
  std::set<LWeight> second_weights;
  // Weights in both sets; empty exactly when the verdict is `vanishes`.
  std::vector<LWeight> shared;
};

// Ext^0 and Ext^1 vanish between the subcategories generated by two closures
// whose weight sets are disjoint. Overlap proves nothing, hence INCONCLUSIVE.
inline ExtCertificate ext_vanishing(const Multisegment& first,
                                    const Multisegment& second, Rank rank) {
  ExtCertificate cert{ExtVerdict::vanishes, weyl_dominant_weights(first, rank),
                      weyl_dominant_weights(second, rank), {}};
  std::set_intersection(cert.first_weights.begin(), cert.first_weights.end(),
                        cert.second_weights.begin(), cert.second_weights.end(),
                        std::back_inserter(cert.shared));
  if (!cert.shared.empty())
    cert.verdict = ExtVerdict::inconclusive;
  return cert;
}

// Membership of a dominant w in the monoid generated by w[i_s, j_p].
inline bool subcategory_membership(const Multisegment& base, const LWeight& w,
                                   Rank rank) {
  require_valid(base, rank);
  require_valid(w, rank);
  if (!w.is_dominant())
    throw not_dominant("subcategory membership needs a dominant l-weight, got " +
                       to_string(w));
  std::set<std::int64_t> lefts;
  std::set<std::int64_t> rights;
  for (const auto& s : base.parts()) {
    lefts.insert(s.i);
    rights.insert(s.j);
  }
  for (const auto& [seg, e] : w.exponents()) {
    if (!lefts.count(seg.i) || !rights.count(seg.j))
      return false;
    if (seg.length() < 0 || seg.length() > rank.value() + 1)
      return false;
  }
  return true;
}

struct MixedWeylMaps {
  Multisegment plus_form;  // s^+
  Multisegment minus_form; // s^-
  LWeight head;            // V(w_{s^+}) is a quotient of W(s)
  LWeight socle_candidate; // V(w_{s^-}) is a submodule of W(s)
};

inline MixedWeylMaps mixed_weyl_maps(const Multisegment& ms, Rank rank) {
  Multisegment plus = normal_form(ms, Sign::plus, rank);
  Multisegment minus = normal_form(ms, Sign::minus, rank);
  LWeight head = weight_of(plus, rank);
  LWeight sub = weight_of(minus, rank);
  return {std::move(plus), std::move(minus), std::move(head), std::move(sub)};
}

} // namespace msegcalc
