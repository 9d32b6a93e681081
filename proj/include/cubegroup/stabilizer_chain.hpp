#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cubegroup/bigcount.hpp"
#include "cubegroup/permutation.hpp"

namespace cubegroup {

/// Base and strong generating set built by deterministic Schreier-Sims.
///
/// Level k stores a base point b_k, the generators of the pointwise stabilizer
/// of b_0..b_{k-1}, and a transversal: for every point x in the orbit of b_k,
/// a group element mapping b_k to x. Every Schreier generator of every level is
/// sifted exactly once, so membership is exact and the construction does not
/// depend on any random choice.
class StabilizerChain {
 public:
  static StabilizerChain build(std::span<const Permutation> generators, std::size_t degree);

  std::size_t degree() const { return degree_; }
  BigCount order() const;
  bool contains(const Permutation& p) const;

  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_sizes() const;
  /// Union of the level generator sets, without duplicates.
  std::vector<Permutation> strong_generators() const;

  /// Returns p sifted through the chain: the identity iff p is a member.
  Permutation sift(const Permutation& p) const { return sift_from(0, p); }

 private:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    std::vector<std::optional<Permutation>> transversal;  // indexed by point
  };

  explicit StabilizerChain(std::size_t degree) : degree_(degree) {}

  Permutation sift_from(std::size_t level, Permutation p) const;
  void add_generator(std::size_t level, const Permutation& g);
  void process_schreier(std::size_t level, const Permutation& h);

  std::size_t degree_ = 0;
  std::vector<Level> levels_;
};

}  // namespace cubegroup
