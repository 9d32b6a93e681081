#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cubegroup {

/// Element of Z[w], w = exp(2 pi i / r), stored in the basis 1, w, ..., w^(phi(r)-1)
/// after reduction modulo the cyclotomic polynomial. That basis is a Z-basis, so the
/// stored coefficients are canonical and equality is coefficient equality.
class CyclotomicInt {
 public:
  explicit CyclotomicInt(int root_order = 1, std::int64_t value = 0);
  /// w^k.
  static CyclotomicInt root(int root_order, long long k);

  int root_order() const { return r_; }
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

  CyclotomicInt& operator+=(const CyclotomicInt& rhs);
  CyclotomicInt& operator-=(const CyclotomicInt& rhs);
  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
  friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);

  /// Complex conjugate: w -> w^(r-1).
  CyclotomicInt conj() const;

  bool is_integer() const;
  /// The value as an integer; throws std::domain_error unless is_integer().
  std::int64_t to_integer() const;

  /// Such as "3 - 2w + w^2"; "0" for zero.
  std::string to_string() const;

  friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
    return a.r_ == b.r_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void reduce_from(std::vector<std::int64_t> poly);
  void require_same_ring(const CyclotomicInt& rhs) const;

  int r_ = 1;
  std::vector<std::int64_t> coeffs_;  // length phi(r)
};

/// Integer coefficients of the r-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(int r);

}  // namespace cubegroup
