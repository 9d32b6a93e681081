#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cubegroup/verification.hpp"

namespace cubegroup {

/// Invariant factors d_1 | d_2 | ... | d_s of Z_{n_1} + ... + Z_{n_k}.
/// Prime-power parts are sorted per prime and multiplied across primes, taking
/// the largest parts for d_s. Throws std::invalid_argument for an order below 2.
std::vector<std::uint64_t> invariant_factors(std::span<const std::uint64_t> orders);

class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;  // trivial group
  explicit FiniteAbelianGroup(std::vector<std::uint64_t> cyclic_orders);

  /// "2,2,3,3", "zk0m:3,8", or "1" / "" for the trivial group.
  static FiniteAbelianGroup parse(std::string_view text);

  const std::vector<std::uint64_t>& cyclic_orders() const { return orders_; }
  const std::vector<std::uint64_t>& invariant_factors() const { return factors_; }
  std::uint64_t order() const;
  /// Number of invariant factors equal to 2.
  std::size_t a() const;
  /// Number of invariant factors greater than 2.
  std::size_t b() const;

  FiniteAbelianGroup operator+(const FiniteAbelianGroup& rhs) const;
  /// Invariant-factor form such as "Z_2^4 + Z_6^7"; "0" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const FiniteAbelianGroup& x, const FiniteAbelianGroup& y) {
    return x.factors_ == y.factors_;
  }

 private:
  std::vector<std::uint64_t> orders_;
  std::vector<std::uint64_t> factors_;
};

struct SumZeroGroup {
  FiniteAbelianGroup group;
  /// e_i - e_{i+1}, i = 1..m-1, as vectors of length m.
  std::vector<std::vector<int>> basis;
};

/// Z_{k,0}^m, the sum-zero vectors in Z_k^m. Requires k >= 2, m >= 1.
SumZeroGroup zk0m(int k, int m);

std::size_t mdim_complex_abelian(const FiniteAbelianGroup& g);
std::size_t mdim_real_abelian(const FiniteAbelianGroup& g);

enum class Field { Complex, Real };

/// Smallest cost of a set of characters with trivial common kernel, where a
/// character costs 1 over C, and over R 1 if real-valued and 2 otherwise.
/// Exhaustive shortest-path search over kernels; throws std::length_error when
/// |g| exceeds `bound`.
std::size_t oracle_min_faithful(const FiniteAbelianGroup& g, Field field, std::uint64_t bound = 512);

/// Every isomorphism type of order at most n, as invariant-factor chains.
std::vector<FiniteAbelianGroup> abelian_groups_up_to(std::uint64_t n);
/// Every multiset of cyclic orders (each >= 2, sorted ascending) with product at most n.
std::vector<std::vector<std::uint64_t>> cyclic_order_multisets_up_to(std::uint64_t n);

/// Invariant factors of a finite abelian group from its element-order census
/// (census[d] = number of elements of order d).
std::vector<std::uint64_t> factors_from_order_census(const std::vector<std::uint64_t>& census);

/// Random subgroups B of A (closures of random element sets) satisfy t <= s and
/// e_{t-i} | d_{s-i} for their invariant factors e against those of A.
VerificationReport subgroup_factor_check(const FiniteAbelianGroup& g, std::size_t trials, std::uint64_t seed,
                                         std::uint64_t bound = 512);

}  // namespace cubegroup
