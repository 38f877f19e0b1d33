#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace msegcalc {

// Base for every error raised by the library. Callers that only care about
// "bad input" versus "bug" can catch `usage_error` / `internal_error`.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Input violated a documented precondition.
class usage_error : public error {
public:
  using error::error;
};

class invalid_segment : public usage_error {
public:
  using usage_error::usage_error;
};

class invalid_root : public usage_error {
public:
  using usage_error::usage_error;
};

class index_out_of_range : public usage_error {
public:
  using usage_error::usage_error;
};

class precondition_violated : public usage_error {
public:
  using usage_error::usage_error;
};

class not_dominant : public usage_error {
public:
  using usage_error::usage_error;
};

class parse_error : public usage_error {
public:
  parse_error(const std::string& what, std::size_t offset)
      : usage_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

// A segment literal with j < i.
class range_error : public usage_error {
public:
  using usage_error::usage_error;
};

class overflow_error : public error {
public:
  using error::error;
};

// Raised when an internal invariant fails; always a bug.
class internal_error : public error {
public:
  using error::error;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw overflow_error("64-bit overflow in addition");
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out))
    throw overflow_error("64-bit overflow in subtraction");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw overflow_error("64-bit overflow in multiplication");
  return out;
}

} // namespace detail
} // namespace msegcalc
