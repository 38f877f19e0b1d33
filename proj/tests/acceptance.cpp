// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.hpp"

using namespace msegcalc;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass)
      detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

struct Instance {
  std::int64_t n;
  Multisegment ms;
};

LWeight w(std::int64_t i, std::int64_t j, std::int64_t e = 1) {
  return LWeight::generator({i, j}, e);
}

std::vector<Multisegment> sorted(std::vector<Multisegment> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::set<LWeight> support(const QChar& q) {
  std::set<LWeight> out;
  for (const auto& [u, k] : q.terms())
    out.insert(u);
  return out;
}

// Shared by criteria 2 and 9.
std::vector<Instance> oracle_instances() {
  oracle::Gen gen(20240601);
  std::vector<Instance> out;
  for (int k = 0; k < 240; ++k) {
    const auto n = gen.uniform(1, 4);
    const auto r = static_cast<std::size_t>(gen.uniform(1, 3));
    out.push_back({n, gen.multisegment(n, r, -3, 6)});
  }
  return out;
}

void golden_cases(Verdict& v) {
  const Multisegment s{{0, 6}, {2, 7}, {1, 8}};
  v.require(closure(s, Rank(6)).members ==
                sorted({s, {{2, 6}, {0, 7}, {1, 8}}}),
            "rank 6 closure");
  v.require(closure(s, Rank(7)).members ==
                sorted({s,
                        {{2, 6}, {0, 7}, {1, 8}},
                        {{1, 6}, {2, 7}, {0, 8}},
                        {{2, 6}, {1, 7}, {0, 8}}}),
            "rank 7 closure");
  v.require(closure({{0, 2}, {1, 2}}, Rank(2)).members ==
                sorted({{{0, 2}, {1, 2}}, {{1, 2}, {0, 2}}}),
            "equal right endpoints closure");

  const auto reps = closed_elements({{2, 3}, {1, 2}, {0, 1}}, Rank(1));
  auto has_orbit = [&](const Multisegment& t) {
    return std::any_of(reps.begin(), reps.end(), [&](const Multisegment& x) {
      return oracle::same_orbit(oracle::parts_of(x), oracle::parts_of(t));
    });
  };
  const bool first = has_orbit({{1, 3}, {2, 2}, {0, 1}});
  const bool second = has_orbit({{1, 3}, {1, 1}, {0, 2}});
  std::string got;
  for (const auto& t : reps)
    got += (got.empty() ? "" : " ") + to_string(t);
  v.require(reps.size() == 2 && first && second,
            "rank 1 closed elements are {" + got +
                "}; the expected tuple [1,3][1,1][0,2] has left endpoints "
                "{1,1,0} while every closure member keeps {2,1,0}");
  std::set<LWeight> weights;
  for (const auto& t : reps)
    weights.insert(weight_of(t, Rank(1)));
  v.detail << "rank 1: " << reps.size() << " orbits, first expected tuple "
           << (first ? "found" : "missing") << ", second "
           << (second ? "found" : "missing") << ", weights {w[0,1], w[2,3]} "
           << (weights == std::set<LWeight>{w(0, 1), w(2, 3)} ? "match"
                                                               : "differ");
}

void oracle_equivalence(Verdict& v) {
  int count = 0;
  for (const auto& [n, ms] : oracle_instances()) {
    const std::set<LWeight> from_paths =
        support(dominant_part(weyl_qchar(ms, Rank(n))));
    const std::set<LWeight> from_closure = weyl_dominant_weights(ms, Rank(n));
    v.require(from_paths == from_closure,
              to_string(ms) + " rank " + std::to_string(n));
    v.require(from_closure ==
                  oracle::raw_dominant_support(oracle::parts_of(ms), n),
              "raw oracle on " + to_string(ms));
    ++count;
  }
  v.detail << count << " instances";
}

void closed_element_uniqueness(Verdict& v) {
  oracle::Gen gen(777);
  int count = 0, doubly = 0;
  while (count < 160) {
    const auto r = static_cast<std::size_t>(gen.uniform(1, 4));
    const bool want_doubly = count % 2 == 0;
    const Multisegment ms = want_doubly
                                ? gen.doubly_sorted(6, r, 0, 5)
                                : sort_plus(gen.multisegment(6, r, 0, 5));
    const std::int64_t n = std::max<std::int64_t>(1, span(ms) + gen.uniform(1, 2));
    if (n > 7)
      continue;
    ++count;
    const Rank rank(n);
    const ClosureSet c = closure(ms, rank);
    v.require(c.orbit_representatives.size() == 1,
              to_string(ms) + " rank " + std::to_string(n) + " has " +
                  std::to_string(c.orbit_representatives.size()) + " orbits");
    if (is_doubly_sorted(ms)) {
      ++doubly;
      const Multisegment cc = canonical_closed(ms, rank);
      v.require(is_closed(cc, rank) && c.contains(cc) &&
                    c.orbit_representatives.size() == 1 &&
                    sort_plus(cc) == c.orbit_representatives.front(),
                "canonical_closed on " + to_string(ms));
    }
  }
  v.detail << count << " instances, " << doubly << " doubly sorted";
}

void path_combinatorics(Verdict& v) {
  int count = 0;
  for (std::int64_t n = 1; n <= 8; ++n) {
    const Rank rank(n);
    for (std::int64_t j = 0; j <= n + 1; ++j) {
      const Segment s{0, j};
      const auto paths = enumerate_paths(s, rank);
      v.require(static_cast<std::int64_t>(paths.size()) ==
                    oracle::binomial(n + 1, j),
                "count for " + to_string(s));
      int empty_minus = 0;
      bool lowest = false;
      const LWeight bottom = lweight_of_segment({j, n + 1}, rank).inverse();
      for (const auto& g : paths) {
        const LWeight u = path_weight(g, rank);
        if (corners(g).minus.empty()) {
          ++empty_minus;
          v.require(u == lweight_of_segment(s, rank),
                    "dominant path weight for " + to_string(s));
        }
        lowest = lowest || u == bottom;
      }
      v.require(empty_minus == 1, "unique dominant path for " + to_string(s));
      v.require(lowest, "lowest weight for " + to_string(s));
      ++count;
    }
  }
  v.detail << count << " segments over ranks 1..8";
}

using Opt = std::optional<Multisegment>;

void nil_hecke(Verdict& v) {
  oracle::Gen gen(90210);
  int tuples = 0, braids = 0, far = 0;
  for (; tuples < 1200; ++tuples) {
    const auto n = gen.uniform(1, 6);
    const Rank rank(n);
    const auto r = static_cast<std::size_t>(gen.uniform(2, 5));
    const Opt s = gen.multisegment(n, r, -2, 6);
    auto t = [&](const Opt& x, std::size_t p) {
      return tau_adjacent(x, p, rank);
    };
    for (std::size_t p = 1; p < r; ++p) {
      v.require(!t(t(s, p), p), "square on " + to_string(*s));
      for (std::size_t q = p + 2; q < r; ++q, ++far)
        v.require(t(t(s, p), q) == t(t(s, q), p), "far on " + to_string(*s));
      if (p + 1 < r) {
        ++braids;
        v.require(t(t(t(s, p), p + 1), p) == t(t(t(s, p + 1), p), p + 1),
                  "braid on " + to_string(*s) + " p=" + std::to_string(p));
      }
    }
  }

  // General braid tau_{m,p} tau_{p,l} tau_{m,p} = tau_{m,l}, under the
  // hypotheses as printed (j increasing) and as used in the proof
  // (j decreasing).
  int literal = 0, literal_nonzero = 0, decreasing = 0, decreasing_nonzero = 0;
  for (int k = 0; k < 10000; ++k) {
    const bool dec = k % 2 == 1;
    const auto n = gen.uniform(3, 7);
    const Rank rank(n);
    const auto r = static_cast<std::size_t>(gen.uniform(3, 5));
    // Distinct i descending, and every j >= i_1, so i_{s+1} < i_s <= j_r holds
    // whichever way the j are sorted.
    std::vector<std::int64_t> is = gen.distinct(r, 0, 5);
    std::sort(is.rbegin(), is.rend());
    std::vector<std::int64_t> js =
        gen.distinct(r, is.front(), is.front() + n + 1);
    if (dec)
      std::sort(js.rbegin(), js.rend());
    else
      std::sort(js.begin(), js.end());
    std::vector<Segment> parts;
    bool valid = true;
    for (std::size_t q = 0; q < r; ++q) {
      parts.push_back({is[q], js[q]});
      valid = valid && parts.back().is_valid(rank);
    }
    if (!valid)
      continue;
    const Multisegment s(parts);
    for (std::size_t m = 1; m <= r; ++m)
      for (std::size_t p = m + 1; p <= r; ++p)
        for (std::size_t l = p + 1; l <= r; ++l) {
          if (s.part(m).j - s.part(l).i > n + 1)
            continue;
          Opt lhs = tau(s, m, p, rank);
          if (lhs)
            lhs = tau(*lhs, p, l, rank);
          if (lhs)
            lhs = tau(*lhs, m, p, rank);
          const Opt rhs = tau(s, m, l, rank);
          v.require(lhs == rhs, std::string(dec ? "decreasing" : "literal") +
                                    " braid hypothesis on " + to_string(s));
          (dec ? decreasing : literal) += 1;
          (dec ? decreasing_nonzero : literal_nonzero) += rhs.has_value();
        }
  }
  v.require(literal > 0 && decreasing > 0, "hypothesis generators produced "
                                           "inputs");
  v.detail << tuples << " tuples, " << braids << " adjacent braids, " << far
           << " far pairs; general braid triples: " << literal
           << " as printed (nonzero " << literal_nonzero << "), "
           << decreasing << " with j decreasing (nonzero "
           << decreasing_nonzero << ")";
}

void dim_one(Verdict& v) {
  oracle::Gen gen(4242);
  int count = 0, members = 0;
  while (count < 60) {
    const auto r = static_cast<std::size_t>(gen.uniform(1, 3));
    const Multisegment ms = gen.doubly_sorted(5, r, 0, 4);
    const std::int64_t n = std::max<std::int64_t>(1, span(ms) + gen.uniform(1, 2));
    if (n > 6)
      continue;
    ++count;
    const Rank rank(n);
    const LWeight target = soclehom_weight(ms, rank);
    for (const auto& t : closure(ms, rank).members) {
      ++members;
      v.require(weyl_qchar(t, rank).multiplicity(target) == 1,
                to_string(t) + " rank " + std::to_string(n));
    }
  }
  v.detail << count << " instances, " << members << " closure members";
}

void root_algebra(Verdict& v) {
  oracle::Gen gen(31337);
  int trips = 0;
  for (; trips < 600; ++trips) {
    const auto n = gen.uniform(1, 6);
    const RootVector c = gen.root_vector(
        n, static_cast<std::size_t>(gen.uniform(0, 6)), -4, 4, 3);
    const auto back = decompose_into_roots(compose(c, Rank(n)), Rank(n));
    v.require(back && *back == c, "round trip of " + to_string(c));
  }

  int pairs = 0;
  while (pairs < 150) {
    const auto n = gen.uniform(2, 6);
    const Rank rank(n);
    const Segment a = gen.segment(n, -3, 8, 1), b = gen.segment(n, -3, 8, 1);
    if (!connected(a, b, rank))
      continue;
    ++pairs;
    const Multisegment s = sort_plus({a, b});
    const Segment s1 = s.part(1), s2 = s.part(2);
    const LWeight lhs = weight_of(s, rank);
    const LWeight cross = lweight_of_segment({s1.i, s2.j}, rank) *
                          lweight_of_segment({s2.i, s1.j}, rank);
    RootVector::map_type rect;
    for (std::int64_t i = s2.i; i < s1.i; ++i)
      for (std::int64_t j = s2.j; j < s1.j; ++j)
        rect[{i, j}] = 1;
    const auto got = decompose_into_roots(lhs * cross.inverse(), rank);
    v.require(got && *got == RootVector(rect),
              "rectangle pattern for " + to_string(s));
  }

  int weights = 0;
  for (std::int64_t n = 1; n <= 6; ++n) {
    const Rank rank(n);
    for (std::int64_t i = 0; i <= 1; ++i)
      for (std::int64_t j = i + 1; j <= i + n; ++j) {
        const LWeight top = w(i, j);
        const LWeight bottom = lweight_of_segment({j, n + 1 + i}, rank).inverse();
        const QChar q = fundamental_qchar({i, j}, rank);
        for (const auto& [u, k] : q.terms()) {
          ++weights;
          v.require(dominance_leq(bottom, u, rank) && dominance_leq(u, top, rank),
                    "bounds for " + to_string(u));
        }
      }
  }
  v.detail << trips << " round trips, " << pairs << " connected pairs, "
           << weights << " fundamental weights";
}

void iota_forms(Verdict& v) {
  const Rank r7(7), r8(8);
  v.require(iota_plus({2, 5}, {3, 9}, r7) == SegmentPair{{2, 9}, {3, 5}},
            "iota+([2,5],[3,9])");
  v.require(iota_plus({3, 9}, {2, 5}, r7) == SegmentPair{{3, 9}, {2, 5}},
            "iota+([3,9],[2,5])");
  v.require(iota_plus({3, 5}, {2, 9}, r7) == SegmentPair{{2, 9}, {3, 5}},
            "iota+([3,5],[2,9])");
  const Multisegment s{{0, 6}, {4, 8}, {2, 5}};
  v.require(normal_form(s, Sign::plus, r8) ==
                Multisegment{{0, 8}, {4, 6}, {2, 5}},
            "s+");
  v.require(normal_form(s, Sign::minus, r8) ==
                Multisegment{{4, 5}, {0, 6}, {2, 8}},
            "s-");

  oracle::Gen gen(8080);
  int count = 0;
  for (; count < 600; ++count) {
    const auto n = gen.uniform(1, 6);
    const Rank rank(n);
    const Multisegment ms = gen.multisegment(
        n, static_cast<std::size_t>(gen.uniform(1, 5)), -3, 7);
    v.require(is_plus_ordered(normal_form(ms, Sign::plus, rank)),
              "s+ ordering for " + to_string(ms));
    v.require(is_minus_ordered(normal_form(ms, Sign::minus, rank)),
              "s- ordering for " + to_string(ms));
  }
  v.detail << "5 worked examples, " << count << " random inputs";
}

void hom_socle(Verdict& v) {
  const auto instances = oracle_instances();
  int homs = 0, socles = 0, singletons = 0;
  for (std::size_t k = 0; k < instances.size(); ++k) {
    const auto& [n, dst] = instances[k];
    const Rank rank(n);
    const std::set<LWeight> truth =
        oracle::raw_dominant_support(oracle::parts_of(dst), n);

    std::vector<Multisegment> sources =
        closure(sort_plus(dst), rank).members;
    for (std::size_t q = 0; q < instances.size(); q += 7)
      if (instances[q].n == n && instances[q].ms.size() == dst.size())
        sources.push_back(instances[q].ms);
    for (const auto& src : sources) {
      ++homs;
      const bool expected = truth.count(weight_of(src, rank)) == 1;
      v.require(hom_dim(src, dst, rank) == (expected ? 1 : 0),
                "hom " + to_string(src) + " -> " + to_string(dst));
    }

    const auto summands = socle(dst, rank);
    ++socles;
    std::set<LWeight> ws;
    for (const auto& s : summands)
      ws.insert(s.weight);
    v.require(ws.size() == summands.size(), "duplicate socle weight for " +
                                                to_string(dst));
    if (n > span(dst)) {
      ++singletons;
      v.require(summands.size() == 1, "socle of " + to_string(dst) +
                                          " is not simple");
    }
  }
  v.detail << homs << " hom checks, " << socles << " socles, " << singletons
           << " with rank > span";
}

} // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    double limit_seconds;
    std::function<void(Verdict&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "golden closures and closed elements", 1.0, golden_cases},
      {2, "dominant q-character support equals closure weights", 60.0,
       oracle_equivalence},
      {3, "single closed orbit above span, canonical_closed agrees", 30.0,
       closed_element_uniqueness},
      {4, "path counts, dominant and lowest paths", 0.0, path_combinatorics},
      {5, "nil-Hecke relations", 0.0, nil_hecke},
      {6, "test weight has multiplicity one across the closure", 60.0, dim_one},
      {7, "root lattice round trips, rectangle pattern, dominance bounds", 0.0,
       root_algebra},
      {8, "iota maps and normal forms", 0.0, iota_forms},
      {9, "hom and socle consistency", 0.0, hom_socle},
  };

  bool all = true;
  for (const auto& c : criteria) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (c.limit_seconds > 0)
      v.require(secs < c.limit_seconds,
                "time limit " + std::to_string(c.limit_seconds) + " s");
    all = all && v.pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << "criterion " << c.number << ": "
              << (v.pass ? "PASS" : "FAIL") << " " << c.title << " ["
              << timing << "] " << v.detail.str() << "\n";
  }
  std::cout << "criterion 10: NOTE module-level claims are covered by the "
               "weight-level checks of criteria 2, 3, 6 and 9\n";
  return all ? 0 : 1;
}
