#include "cubegroup/bigcount.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubegroup {

BigCount& BigCount::operator*=(const BigCount& rhs) {
  unsigned __int128 out = 0;
  if (__builtin_mul_overflow(value_, rhs.value_, &out)) {
    throw std::overflow_error("BigCount multiplication overflow");
  }
  value_ = out;
  return *this;
}

BigCount& BigCount::operator+=(const BigCount& rhs) {
  unsigned __int128 out = 0;
  if (__builtin_add_overflow(value_, rhs.value_, &out)) {
    throw std::overflow_error("BigCount addition overflow");
  }
  value_ = out;
  return *this;
}

bool BigCount::divisible_by(const BigCount& rhs) const {
  if (rhs.value_ == 0) throw std::domain_error("division by zero");
  return value_ % rhs.value_ == 0;
}

BigCount BigCount::exact_div(const BigCount& rhs) const {
  if (!divisible_by(rhs)) {
    throw std::domain_error(to_string() + " is not divisible by " + rhs.to_string());
  }
  BigCount out;
  out.value_ = value_ / rhs.value_;
  return out;
}

std::string BigCount::to_string() const {
  if (value_ == 0) return "0";
  std::string digits;
  auto v = value_;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

BigCount BigCount::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  BigCount out;
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("not a decimal number: " + text);
    out *= BigCount(10);
    out += BigCount(static_cast<std::uint64_t>(ch - '0'));
  }
  return out;
}

BigCount BigCount::factorial(unsigned n) {
  BigCount out(1);
  for (unsigned i = 2; i <= n; ++i) out *= BigCount(i);
  return out;
}

BigCount BigCount::power(std::uint64_t base, unsigned exp) {
  BigCount out(1);
  for (unsigned i = 0; i < exp; ++i) out *= BigCount(base);
  return out;
}

}  // namespace cubegroup
