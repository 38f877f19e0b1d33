#pragma once

// JSON encodings used by the command-line tool. Needs nlohmann/json
// (vendored as "json.hpp").

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "closure.hpp"
#include "module_theory.hpp"
#include "multisegment.hpp"
#include "qchar.hpp"
#include "segment.hpp"

namespace msegcalc::json {

using nlohmann::json;

inline json encode(const Segment& s) { return json::array({s.i, s.j}); }

inline json encode(const Multisegment& ms) {
  json out = json::array();
  for (const auto& s : ms.parts())
    out.push_back(encode(s));
  return out;
}

inline json encode(const LWeight& w) {
  json out = json::array();
  for (const auto& [s, e] : w.exponents())
    out.push_back({{"segment", encode(s)}, {"exp", e}});
  return out;
}

inline json encode(const RootVector& c) {
  json out = json::array();
  for (const auto& [s, k] : c.coefficients())
    out.push_back({{"root", encode(s)}, {"coeff", k}});
  return out;
}

// Terms ordered by the canonical text rendering of their l-weight, as in the
// text output.
inline json encode(const QChar& q) {
  std::vector<std::pair<std::string, const QChar::map_type::value_type*>> rows;
  for (const auto& term : q.terms())
    rows.emplace_back(to_string(term.first), &term);
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  json out = json::array();
  for (const auto& [key, term] : rows)
    out.push_back({{"weight", encode(term->first)}, {"mult", term->second}});
  return out;
}

inline json encode(const std::vector<Multisegment>& list) {
  json out = json::array();
  for (const auto& ms : list)
    out.push_back(encode(ms));
  return out;
}

inline json encode(const std::set<LWeight>& weights) {
  json out = json::array();
  for (const auto& w : weights)
    out.push_back(encode(w));
  return out;
}

inline json encode(const ClosureSet& c) {
  return {{"rank", c.rank.value()},
          {"seed", encode(c.seed)},
          {"members", encode(c.members)},
          {"closed", encode(c.closed_members)},
          {"orbit_reps", encode(c.orbit_representatives)}};
}

inline json encode(const std::vector<SocleSummand>& summands) {
  json out = json::array();
  for (const auto& s : summands)
    out.push_back({{"weight", encode(s.weight)},
                   {"representative", encode(s.representative)}});
  return out;
}

inline json encode(const ExtCertificate& cert) {
  json shared = json::array();
  for (const auto& w : cert.shared)
    shared.push_back(encode(w));
  return {{"verdict", to_string(cert.verdict)},
          {"first_weights", encode(cert.first_weights)},
          {"second_weights", encode(cert.second_weights)},
          {"shared", shared}};
}

inline json encode(const MixedWeylMaps& m) {
  return {{"plus", encode(m.plus_form)},
          {"minus", encode(m.minus_form)},
          {"head", encode(m.head)},
          {"socle_candidate", encode(m.socle_candidate)}};
}

} // namespace msegcalc::json
