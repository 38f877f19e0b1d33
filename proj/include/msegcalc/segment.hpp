#pragma once

// Segments, the free abelian group of l-weights they generate, and the
// l-root lattice with its dominance order.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace msegcalc {

// Rank n of the underlying type A_n. Never stored inside values; every
// operation whose meaning depends on n takes it explicitly.
class Rank {
public:
  constexpr explicit Rank(std::int64_t n) : n_(n) {
    if (n < 1)
      throw usage_error("rank must be a positive integer, got " +
                        std::to_string(n));
  }

  constexpr std::int64_t value() const noexcept { return n_; }

  friend constexpr auto operator<=>(const Rank&, const Rank&) = default;

private:
  std::int64_t n_;
};

// The integer interval [i, j].
struct Segment {
  std::int64_t i = 0;
  std::int64_t j = 0;

  constexpr std::int64_t length() const noexcept { return j - i; }

  constexpr bool is_valid(Rank rank) const noexcept {
    return length() >= 0 && length() <= rank.value() + 1;
  }

  // Degenerate segments ([i,i] and [i,i+n+1]) stand for the identity.
  constexpr bool is_degenerate(Rank rank) const noexcept {
    return length() == 0 || length() == rank.value() + 1;
  }

  friend constexpr auto operator<=>(const Segment&, const Segment&) = default;
};

inline std::string to_string(const Segment& s) {
  return "[" + std::to_string(s.i) + "," + std::to_string(s.j) + "]";
}

inline void require_valid(const Segment& s, Rank rank) {
  if (!s.is_valid(rank))
    throw invalid_segment("segment " + to_string(s) +
                          " is not valid at rank " +
                          std::to_string(rank.value()));
}

namespace detail {

// Sparse integer vector keyed by segments; zero entries are never stored.
using sparse_exponents = std::map<Segment, std::int64_t>;

inline void add_into(sparse_exponents& acc, const Segment& key,
                     std::int64_t delta) {
  if (delta == 0)
    return;
  auto [it, inserted] = acc.try_emplace(key, delta);
  if (!inserted) {
    it->second = checked_add(it->second, delta);
    if (it->second == 0)
      acc.erase(it);
  }
}

inline sparse_exponents pruned(sparse_exponents m) {
  std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
  return m;
}

} // namespace detail

// An element of the free abelian group on the generators w[i,j].
class LWeight {
public:
  using map_type = detail::sparse_exponents;

  LWeight() = default;
  explicit LWeight(map_type exponents)
      : exps_(detail::pruned(std::move(exponents))) {}

  static LWeight identity() { return {}; }

  // The free generator keyed by `s`, with no rank check; prefer
  // lweight_of_segment() when a rank is at hand.
  static LWeight generator(const Segment& s, std::int64_t exponent = 1) {
    LWeight w;
    detail::add_into(w.exps_, s, exponent);
    return w;
  }

  const map_type& exponents() const noexcept { return exps_; }
  bool is_identity() const noexcept { return exps_.empty(); }
  std::size_t support_size() const noexcept { return exps_.size(); }

  std::int64_t exponent(const Segment& s) const {
    auto it = exps_.find(s);
    return it == exps_.end() ? 0 : it->second;
  }

  bool is_dominant() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(),
                       [](const auto& kv) { return kv.second >= 0; });
  }

  LWeight& operator*=(const LWeight& other) {
    for (const auto& [s, e] : other.exps_)
      detail::add_into(exps_, s, e);
    return *this;
  }

  friend LWeight operator*(LWeight a, const LWeight& b) { return a *= b; }

  LWeight inverse() const {
    LWeight out;
    for (const auto& [s, e] : exps_)
      out.exps_.emplace(s, detail::checked_sub(0, e));
    return out;
  }

  LWeight pow(std::int64_t k) const {
    if (k == 0)
      return {};
    LWeight out;
    for (const auto& [s, e] : exps_)
      out.exps_.emplace(s, detail::checked_mul(e, k));
    return out;
  }

  friend bool operator==(const LWeight&, const LWeight&) = default;
  friend auto operator<=>(const LWeight& a, const LWeight& b) {
    return a.exps_ <=> b.exps_;
  }

private:
  map_type exps_;
};

inline LWeight inverse(const LWeight& w) { return w.inverse(); }
inline LWeight pow(const LWeight& w, std::int64_t k) { return w.pow(k); }

// Canonical text form: factors ordered by (i, j), e.g. `w[0,2]^1 * w[1,2]^-1`;
// the identity renders as `1`.
inline std::string to_string(const LWeight& w) {
  if (w.is_identity())
    return "1";
  std::string out;
  for (const auto& [s, e] : w.exponents()) {
    if (!out.empty())
      out += " * ";
    out += "w" + to_string(s) + "^" + std::to_string(e);
  }
  return out;
}

// Every key of `w` must be a generator at `rank` (valid and non-degenerate).
inline void require_valid(const LWeight& w, Rank rank) {
  for (const auto& [s, e] : w.exponents()) {
    if (!s.is_valid(rank) || s.is_degenerate(rank))
      throw invalid_segment("l-weight key " + to_string(s) +
                            " is not a generator at rank " +
                            std::to_string(rank.value()));
  }
}

// Maps a segment to its l-weight at `rank`; degenerate segments give 1.
inline LWeight lweight_of_segment(const Segment& s, Rank rank) {
  require_valid(s, rank);
  if (s.is_degenerate(rank))
    return LWeight::identity();
  return LWeight::generator(s);
}

// Exponents of the l-roots alpha[i,j], keyed by [i,j].
class RootVector {
public:
  using map_type = detail::sparse_exponents;

  RootVector() = default;
  explicit RootVector(map_type coefficients)
      : coeffs_(detail::pruned(std::move(coefficients))) {}

  const map_type& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  std::int64_t coefficient(const Segment& s) const {
    auto it = coeffs_.find(s);
    return it == coeffs_.end() ? 0 : it->second;
  }

  // Membership in the positive monoid Q_n^+.
  bool is_nonnegative() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const auto& kv) { return kv.second >= 0; });
  }

  friend bool operator==(const RootVector&, const RootVector&) = default;

private:
  map_type coeffs_;
};

inline std::string to_string(const RootVector& c) {
  if (c.is_zero())
    return "0";
  std::string out;
  for (const auto& [s, e] : c.coefficients()) {
    if (!out.empty())
      out += " + ";
    out += std::to_string(e) + "*a" + to_string(s);
  }
  return out;
}

inline bool is_root_index(const Segment& s, Rank rank) noexcept {
  return s.length() >= 1 && s.length() <= rank.value();
}

// alpha[i,j] = w[i,j] w[i+1,j+1] (w[i+1,j] w[i,j+1])^-1, degenerate factors
// dropped.
inline LWeight alpha(std::int64_t i, std::int64_t j, Rank rank) {
  const Segment s{i, j};
  if (!is_root_index(s, rank))
    throw invalid_root("l-root index " + to_string(s) +
                       " needs 1 <= j-i <= " + std::to_string(rank.value()));
  return lweight_of_segment({i, j}, rank) *
         lweight_of_segment({i + 1, j + 1}, rank) *
         (lweight_of_segment({i + 1, j}, rank) *
          lweight_of_segment({i, j + 1}, rank))
             .inverse();
}

inline LWeight compose(const RootVector& c, Rank rank) {
  LWeight out;
  for (const auto& [s, k] : c.coefficients())
    out *= alpha(s.i, s.j, rank).pow(k);
  return out;
}

// Solves prod alpha^c = w for c. The l-roots are free, so the solution is
// unique when it exists; it is found by sweeping the band 1 <= b-a <= n in
// order of increasing a then b, where each cell depends only on cells that
// were already visited. A final recomposition rejects anything the finite
// sweep box could not represent.
inline std::optional<RootVector> decompose_into_roots(const LWeight& w,
                                                      Rank rank) {
  require_valid(w, rank);
  if (w.is_identity())
    return RootVector{};

  const std::int64_t n = rank.value();
  std::int64_t lo = w.exponents().begin()->first.i;
  std::int64_t hi = lo;
  for (const auto& [s, e] : w.exponents()) {
    lo = std::min(lo, s.i);
    hi = std::max(hi, s.i);
  }
  lo -= n + 2;
  hi += n + 2;

  const auto width = static_cast<std::size_t>(hi - lo + 1);
  const auto band = static_cast<std::size_t>(n);
  // cell (a, b) lives at [a - lo][b - a - 1]
  std::vector<std::int64_t> c(width * band, 0);
  auto at = [&](std::int64_t a, std::int64_t b) -> std::int64_t {
    const std::int64_t d = b - a;
    if (a < lo || a > hi || d < 1 || d > n)
      return 0;
    return c[static_cast<std::size_t>(a - lo) * band +
             static_cast<std::size_t>(d - 1)];
  };

  using detail::checked_add;
  using detail::checked_sub;
  for (std::int64_t a = lo; a <= hi; ++a) {
    for (std::int64_t d = 1; d <= n; ++d) {
      const std::int64_t b = a + d;
      std::int64_t v = w.exponent({a, b});
      v = checked_sub(v, at(a - 1, b - 1));
      v = checked_add(v, at(a - 1, b));
      v = checked_add(v, at(a, b - 1));
      c[static_cast<std::size_t>(a - lo) * band +
        static_cast<std::size_t>(d - 1)] = v;
    }
  }

  for (std::int64_t d = 1; d <= n; ++d) {
    if (at(hi, hi + d) != 0)
      return std::nullopt;
  }

  RootVector::map_type coeffs;
  for (std::int64_t a = lo; a <= hi; ++a)
    for (std::int64_t d = 1; d <= n; ++d)
      if (const auto v = at(a, a + d); v != 0)
        coeffs.emplace(Segment{a, a + d}, v);

  RootVector result(std::move(coeffs));
  if (compose(result, rank) != w)
    return std::nullopt;
  return result;
}

// w1 <= w2 iff w1 = w2 * gamma^-1 with gamma in Q_n^+.
inline bool dominance_leq(const LWeight& w1, const LWeight& w2, Rank rank) {
  const auto gamma = decompose_into_roots(w2 * w1.inverse(), rank);
  return gamma && gamma->is_nonnegative();
}

} // namespace msegcalc
