#include "cubegroup/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace cubegroup {

namespace {

// Exact quotient of monic-divisor polynomial division; the remainder must vanish.
std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<std::int64_t> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::int64_t c : num) {
    if (c != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return quot;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int r) {
  if (r < 1) throw std::invalid_argument("root order must be positive");
  static std::mutex mutex;
  static std::map<int, std::vector<std::int64_t>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(r); it != cache.end()) return it->second;
  }
  // x^r - 1 = prod over d | r of Phi_d.
  std::vector<std::int64_t> poly(static_cast<std::size_t>(r) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(r)] = 1;
  for (int d = 1; d < r; ++d) {
    if (r % d == 0) poly = divide_exact(poly, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  return cache.emplace(r, std::move(poly)).first->second;
}

CyclotomicInt::CyclotomicInt(int root_order, std::int64_t value) : r_(root_order) {
  const auto& phi = cyclotomic_polynomial(r_);
  coeffs_.assign(phi.size() - 1, 0);
  coeffs_[0] = value;
}

CyclotomicInt CyclotomicInt::root(int root_order, long long k) {
  CyclotomicInt out(root_order);
  const long long e = ((k % root_order) + root_order) % root_order;
  std::vector<std::int64_t> poly(static_cast<std::size_t>(e) + 1, 0);
  poly[static_cast<std::size_t>(e)] = 1;
  out.reduce_from(std::move(poly));
  return out;
}

void CyclotomicInt::reduce_from(std::vector<std::int64_t> poly) {
  const auto& phi = cyclotomic_polynomial(r_);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > deg;) {
    const std::int64_t c = poly[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) poly[i - deg + j] -= c * phi[j];
  }
  poly.resize(deg, 0);
  coeffs_ = std::move(poly);
}

void CyclotomicInt::require_same_ring(const CyclotomicInt& rhs) const {
  if (r_ != rhs.r_) throw std::invalid_argument("cyclotomic integers of different root orders");
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& rhs) {
  require_same_ring(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& rhs) {
  require_same_ring(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
  a.require_same_ring(b);
  std::vector<std::int64_t> poly(a.coeffs_.size() + b.coeffs_.size(), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) poly[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  CyclotomicInt out(a.r_);
  out.reduce_from(std::move(poly));
  return out;
}

CyclotomicInt CyclotomicInt::conj() const {
  std::vector<std::int64_t> poly(static_cast<std::size_t>(r_), 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) poly[(static_cast<std::size_t>(r_) - j) % r_] += coeffs_[j];
  CyclotomicInt out(r_);
  out.reduce_from(std::move(poly));
  return out;
}

bool CyclotomicInt::is_integer() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

std::int64_t CyclotomicInt::to_integer() const {
  if (!is_integer()) throw std::domain_error(to_string() + " is not a rational integer");
  return coeffs_[0];
}

std::string CyclotomicInt::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << '-';
    const std::int64_t m = c < 0 ? -c : c;
    if (i == 0) out << m;
    else {
      if (m != 1) out << m;
      out << 'w';
      if (i > 1) out << '^' << i;
    }
    first = false;
  }
  return first ? "0" : out.str();
}

}  // namespace cubegroup
