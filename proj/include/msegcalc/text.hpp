#pragma once

// Text literals: `[0,6][2,7][1,8]` for multisegments and
// `w[0,2]^1 * w[1,2]^-1` (or `1`) for l-weights. Renderers live next to the
// types (to_string); this header holds the parsers.

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "multisegment.hpp"
#include "segment.hpp"

namespace msegcalc {

namespace detail {

class cursor {
public:
  explicit cursor(std::string_view text) : text_(text) {}

  std::size_t offset() const noexcept { return pos_; }
  bool done() const noexcept { return pos_ >= text_.size(); }
  char peek() const noexcept { return done() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void expect(char c) {
    if (peek() != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }

  std::int64_t integer() {
    const std::size_t start = pos_;
    if (peek() == '-')
      ++pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      pos_ = start;
      fail("expected an integer");
    }
    while (std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    std::int64_t value = 0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
      pos_ = start;
      fail("integer out of 64-bit range");
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error(what, pos_);
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline Segment segment_literal(cursor& in) {
  const std::size_t start = in.offset();
  in.expect('[');
  const std::int64_t i = in.integer();
  in.expect(',');
  const std::int64_t j = in.integer();
  in.expect(']');
  if (j < i)
    throw range_error("segment [" + std::to_string(i) + "," +
                      std::to_string(j) + "] at byte " + std::to_string(start) +
                      " has j < i");
  return {i, j};
}

} // namespace detail

// Parts in input order. Whitespace may separate blocks.
inline Multisegment parse_multisegment(std::string_view text) {
  detail::cursor in(text);
  std::vector<Segment> parts;
  in.skip_space();
  if (in.done())
    in.fail("empty multisegment");
  while (!in.done()) {
    parts.push_back(detail::segment_literal(in));
    in.skip_space();
  }
  return Multisegment(std::move(parts));
}

inline Segment parse_segment(std::string_view text) {
  detail::cursor in(text);
  in.skip_space();
  const Segment s = detail::segment_literal(in);
  in.skip_space();
  if (!in.done())
    in.fail("trailing input after segment");
  return s;
}

// Accepts the canonical rendering; factors may repeat and `^e` may be
// omitted (exponent 1).
inline LWeight parse_lweight(std::string_view text) {
  detail::cursor in(text);
  in.skip_space();
  if (in.accept('1')) {
    in.skip_space();
    if (!in.done())
      in.fail("trailing input after identity");
    return LWeight::identity();
  }
  LWeight out;
  while (true) {
    in.expect('w');
    const Segment s = detail::segment_literal(in);
    std::int64_t e = 1;
    if (in.accept('^'))
      e = in.integer();
    out *= LWeight::generator(s, e);
    in.skip_space();
    if (in.done())
      break;
    in.expect('*');
    in.skip_space();
  }
  return out;
}

} // namespace msegcalc
