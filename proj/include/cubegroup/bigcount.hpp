#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace cubegroup {

// Exact non-negative integer up to 2^128 - 1. Arithmetic throws std::overflow_error
// instead of wrapping.
class BigCount {
 public:
  constexpr BigCount() = default;
  constexpr BigCount(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  BigCount& operator*=(const BigCount& rhs);
  BigCount& operator+=(const BigCount& rhs);
  friend BigCount operator*(BigCount a, const BigCount& b) { return a *= b; }
  friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }

  // Exact division; throws std::domain_error if rhs does not divide *this.
  BigCount exact_div(const BigCount& rhs) const;
  bool divisible_by(const BigCount& rhs) const;

  std::string to_string() const;
  static BigCount parse(const std::string& text);
  static BigCount factorial(unsigned n);
  static BigCount power(std::uint64_t base, unsigned exp);

  friend bool operator==(const BigCount&, const BigCount&) = default;
  friend auto operator<=>(const BigCount& a, const BigCount& b) { return a.value_ <=> b.value_; }

 private:
  unsigned __int128 value_ = 0;
};

}  // namespace cubegroup
