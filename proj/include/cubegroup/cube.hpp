#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cubegroup/permutation.hpp"

namespace cubegroup {

// ---------------------------------------------------------------------------
// Moves

enum class Face : std::uint8_t { U = 0, D = 1, F = 2, B = 3, L = 4, R = 5 };

inline constexpr std::array<Face, 6> kFaces = {Face::U, Face::D, Face::F, Face::B, Face::L, Face::R};

char face_letter(Face f);

/// One quarter/half/three-quarter turn, clockwise as seen from outside the face.
struct Move {
  Face face = Face::U;
  std::uint8_t turns = 1;  // 1, 2 or 3

  friend bool operator==(const Move&, const Move&) = default;
};

/// A sequence of face turns, applied chronologically from left to right.
///
/// Grammar: whitespace-separated tokens from {U,D,F,B,L,R}, each with an optional
/// suffix ' (inverse) or 2 (half turn). Case sensitive.
class MoveWord {
 public:
  MoveWord() = default;
  explicit MoveWord(std::vector<Move> moves) : moves_(std::move(moves)) {}

  static MoveWord parse(std::string_view text);
  static MoveWord generator(Face f) { return MoveWord({Move{f, 1}}); }

  const std::vector<Move>& moves() const { return moves_; }
  std::size_t size() const { return moves_.size(); }
  bool empty() const { return moves_.empty(); }

  MoveWord inverse() const;
  /// Merges adjacent turns of the same face and drops full rotations.
  MoveWord reduced() const;
  /// Relabels faces through `image` (image[f] is the new face for f).
  MoveWord relabeled(const std::array<Face, 6>& image) const;
  std::string to_string() const;

  /// Chronological concatenation: *this first, then `next`.
  MoveWord then(const MoveWord& next) const;
  MoveWord repeated(std::size_t times) const;

  friend bool operator==(const MoveWord&, const MoveWord&) = default;

 private:
  std::vector<Move> moves_;
};

MoveWord random_word(std::mt19937_64& rng, std::size_t length);

// ---------------------------------------------------------------------------
// Geometry

inline constexpr std::size_t kCorners = 8;
inline constexpr std::size_t kEdges = 12;

/// Facelet layout for one cube size.
///
/// Faces are ordered U, D, F, B, L, R. Within a face, facelets are row-major as
/// seen from outside the face, with the "up" direction of each face being:
/// U: back, D: front, F/B/L/R: up. On the 3x3 the center facelet is omitted,
/// leaving 8 facelets per face (48 in total); the 2x2 has 4 per face (24).
///
/// Corner positions 1..8 are top-front-left, top-front-right, top-back-left,
/// top-back-right, bottom-front-left, bottom-front-right, bottom-back-left,
/// bottom-back-right. Edge positions a..l are top-back, top-right, top-front,
/// top-left, back-left, back-right, front-right, front-left, bottom-back,
/// bottom-right, bottom-front, bottom-left.
struct CubeGeometry {
  int size = 0;
  std::size_t sticker_count = 0;
  /// Face index (= solved color) of every facelet.
  std::vector<std::uint8_t> sticker_face;
  /// corner_facelets[i]: the three facelets of corner position i, starting with
  /// the U/D facelet and continuing counterclockwise as seen from outside.
  std::array<std::array<std::size_t, 3>, kCorners> corner_facelets{};
  /// edge_facelets[x]: the U/D facelet (or F/B for the four middle-layer edges),
  /// then the other one. Empty on the 2x2.
  std::vector<std::array<std::size_t, 2>> edge_facelets;
  /// Facelet permutation of each clockwise quarter turn, indexed by Face.
  /// Image convention: the sticker at location i moves to location gen(i).
  std::array<Permutation, 6> generators;
};

/// Geometry derived from the coordinates of the facelets; cached per size.
const CubeGeometry& geometry(int size);

/// The 24 rotations of the whole cube as face relabelings (image[f] is where
/// face f goes). The identity comes first.
const std::vector<std::array<Face, 6>>& cube_rotations();

/// Generator tables used for simulation. The standard tables come from
/// geometry(size); a modified copy can be passed around to test verification code.
struct MoveTables {
  int size = 0;
  std::array<Permutation, 6> generators;
};

MoveTables standard_move_tables(int size);

/// Facelet permutation of a word: the reversed product of its generators.
Permutation word_permutation(const MoveTables& tables, const MoveWord& w);

// ---------------------------------------------------------------------------
// States

class CubeState {
 public:
  static CubeState solved(int size);
  static CubeState from_stickers(int size, std::vector<std::uint8_t> stickers);

  int size() const { return size_; }
  const std::vector<std::uint8_t>& stickers() const { return stickers_; }

  CubeState apply(const MoveWord& w) const;
  CubeState apply(const MoveWord& w, const MoveTables& tables) const;
  /// Moves the sticker at location i to location p(i).
  CubeState apply_permutation(const Permutation& p) const;

  nlohmann::json to_json() const;
  static CubeState from_json(const nlohmann::json& j);

  friend bool operator==(const CubeState&, const CubeState&) = default;

 private:
  int size_ = 0;
  std::vector<std::uint8_t> stickers_;
};

// ---------------------------------------------------------------------------
// Orientation

/// Element of Z_k^m; with sum_zero set, the entries must sum to 0 mod k.
class OrientationVector {
 public:
  OrientationVector() = default;
  OrientationVector(int modulus, std::vector<int> entries, bool sum_zero = false);
  static OrientationVector zero(int modulus, std::size_t length, bool sum_zero = false);

  int modulus() const { return modulus_; }
  std::size_t size() const { return entries_.size(); }
  bool sum_zero() const { return sum_zero_; }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }

  int sum() const;
  bool is_zero() const;
  OrientationVector operator+(const OrientationVector& rhs) const;
  OrientationVector operator-() const;
  OrientationVector operator-(const OrientationVector& rhs) const { return *this + (-rhs); }
  /// (sigma . v)_i = v_{sigma^-1(i)}.
  OrientationVector permuted(const Permutation& sigma) const;
  OrientationVector with_sum_zero_flag(bool flag) const;

  std::string to_string() const;

  friend bool operator==(const OrientationVector& a, const OrientationVector& b) {
    return a.modulus_ == b.modulus_ && a.entries_ == b.entries_;
  }
  friend auto operator<=>(const OrientationVector& a, const OrientationVector& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  int modulus_ = 0;
  std::vector<int> entries_;
  bool sum_zero_ = false;
};

/// Choice of reference facelet per position: an index into corner_facelets[i]
/// (0..2) and edge_facelets[x] (0..1). Index 0 everywhere is the U/D-axis basis.
struct OrientationBasis {
  std::array<std::uint8_t, kCorners> corner{};
  std::array<std::uint8_t, kEdges> edge{};

  friend bool operator==(const OrientationBasis&, const OrientationBasis&) = default;
};

OrientationBasis ud_axis_basis();

/// The basis used throughout the library: the one reproducing the documented
/// orientation vectors of F (2x2 corners) and R F (3x3 edges); see select_reference_basis.
const OrientationBasis& reference_basis();

struct BasisSearchResult {
  OrientationBasis basis;
  std::size_t corner_matches = 0;  // number of corner bases reproducing the F vector
  std::size_t edge_matches = 0;    // number of edge bases reproducing the R F vector
};

/// Exhaustive search over the 3^8 corner and 2^12 edge basis choices. Among the
/// matching choices it keeps the one closest to the U/D-axis basis (fewest
/// changed positions, ties broken lexicographically).
BasisSearchResult select_reference_basis();

OrientationBasis random_basis(std::mt19937_64& rng);

Permutation corner_permutation(const CubeState& state);
Permutation edge_permutation(const CubeState& state);
OrientationVector corner_orientation(const CubeState& state, const OrientationBasis& basis);
OrientationVector edge_orientation(const CubeState& state, const OrientationBasis& basis);
/// Sum of corner orientations; independent of the basis.
int invariant_s(const CubeState& state);
/// Sum of edge orientations; independent of the basis.
int invariant_t(const CubeState& state);

/// The facelet permutation p with solved.apply_permutation(p) == state, read off
/// cubelet by cubelet. Throws CorruptedState when a cubelet cannot be identified.
Permutation sticker_permutation(const CubeState& state);

/// Rotates each corner cubelet in place: the cubelet at position i is turned
/// counterclockwise twists[i] times. Produces states outside the group when the
/// twists do not sum to zero.
CubeState twist_corners_in_place(const CubeState& state, const std::vector<int>& twists);
/// Flips each edge cubelet at position x flips[x] times.
CubeState flip_edges_in_place(const CubeState& state, const std::vector<int>& flips);

/// Builds a state from cubelet positions and orientations relative to `basis`.
/// corner_perm / edge_perm send each cubelet's home position to its current one.
CubeState assemble_state(int size, const Permutation& corner_perm, const OrientationVector& twist,
                         const Permutation* edge_perm, const OrientationVector* flip,
                         const OrientationBasis& basis);

}  // namespace cubegroup
