#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cubegroup {

/// Points are 0-based indices internally. Textual labels are 1-based, and the
/// letters a..l stand for 1..12.
using Point = std::uint16_t;

/// A bijection of {0, ..., n-1} stored as a dense image table: image[i] is where
/// point i goes.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);

  /// Validates that `images` is a bijection of {0..n-1}.
  static Permutation from_images(std::vector<Point> images);
  /// Same, for a 1-based image listing such as [3,1,4,2,5,6,7,8].
  static Permutation from_one_based(std::span<const int> images);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }
  std::vector<int> one_based_images() const;

  Permutation inverse() const;
  bool is_identity() const;
  /// Least point moved, or degree() if the permutation is the identity.
  std::size_t first_moved_point() const;
  /// Nontrivial cycles, each starting at its least point, ordered by that point.
  std::vector<std::vector<Point>> cycles() const;
  std::size_t order() const;

  /// Restriction to the points [offset, offset + count), which must be an invariant block.
  Permutation restrict_to(std::size_t offset, std::size_t count) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// Right-to-left composition: (p * q)(i) = p(q(i)), so q acts first.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// g x g^-1.
Permutation conjugate(const Permutation& g, const Permutation& x);

/// Commutator g h g^-1 h^-1 under the right-to-left convention.
Permutation commutator(const Permutation& g, const Permutation& h);

Permutation power(const Permutation& p, long long exponent);

/// +1 or -1: (-1)^(n - number of cycles, counting fixed points).
int sign(const Permutation& p);

/// Direct sum: p acts on [0, deg p), q on [deg p, deg p + deg q).
Permutation direct_sum(const Permutation& p, const Permutation& q);

/// Parses cycle notation such as "(1342)", "(abcd)(5687)" or "(10,11,12)".
/// Inside a cycle, labels are either comma/space separated decimal numbers or
/// single characters (digits 1-9 or letters a-l). Throws ParseError on
/// duplicate or out-of-range labels.
Permutation perm_from_cycles(std::string_view text, std::size_t degree);

/// Builds from explicit cycles of 1-based labels.
Permutation perm_from_cycles(const std::vector<std::vector<int>>& cycles, std::size_t degree);

enum class LabelStyle { Digits, Letters, Numbers };

/// Cycle notation; the identity renders as "()".
std::string to_cycle_string(const Permutation& p, LabelStyle style = LabelStyle::Numbers);

/// Digits for degree <= 9, comma-separated numbers otherwise.
std::string to_cycle_string_auto(const Permutation& p);

}  // namespace cubegroup
