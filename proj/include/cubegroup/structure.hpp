#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cubegroup/bigcount.hpp"
#include "cubegroup/cube.hpp"
#include "cubegroup/permutation.hpp"
#include "cubegroup/stabilizer_chain.hpp"
#include "cubegroup/verification.hpp"

namespace cubegroup {

// ---------------------------------------------------------------------------
// Words as group elements
//
// Products of group elements are written as function composition: x*y means
// "y first, then x". A MoveWord is chronological, so the word of x*y is y then x.

MoveWord word_product(const MoveWord& x, const MoveWord& y);
MoveWord word_product(std::initializer_list<MoveWord> factors);
/// [x, y] = x y x^-1 y^-1 in composition order (y^-1 acts first).
MoveWord word_commutator(const MoveWord& x, const MoveWord& y);
/// x y x^-1.
MoveWord word_conjugate(const MoveWord& x, const MoveWord& y);

// ---------------------------------------------------------------------------
// Homomorphisms on words

Permutation phi(const MoveWord& w, const MoveTables& tables2 = standard_move_tables(2));
MoveWord psi(const MoveWord& w);
/// (edge permutation, corner permutation) of a 3x3 word.
std::pair<Permutation, Permutation> alpha(const MoveWord& w,
                                          const MoveTables& tables3 = standard_move_tables(3));
Permutation beta(const MoveWord& w, const MoveTables& tables3 = standard_move_tables(3));

// ---------------------------------------------------------------------------
// Semidirect models

struct G2Element {
  OrientationVector twist;  // Z_3^8, sum zero
  Permutation perm;         // degree 8

  static G2Element identity();
  friend bool operator==(const G2Element&, const G2Element&) = default;
};

struct G3Element {
  OrientationVector flip;   // Z_2^12, sum zero
  OrientationVector twist;  // Z_3^8, sum zero
  Permutation edge_perm;    // degree 12
  Permutation corner_perm;  // degree 8

  static G3Element identity();
  /// Orientation sums vanish and the two permutations have the same sign.
  bool valid() const;
  friend bool operator==(const G3Element&, const G3Element&) = default;
};

/// (k, s)(k', s') = (k + s.k', s s').
G2Element g2_mul(const G2Element& x, const G2Element& y);
G2Element g2_inverse(const G2Element& x);
G3Element g3_mul(const G3Element& x, const G3Element& y);
G3Element g3_inverse(const G3Element& x);

/// Throws NotInGroup when s is nonzero.
G2Element encode_g2(const CubeState& state, const OrientationBasis& basis = reference_basis());
/// Throws NotInGroup when s or t is nonzero or the permutation signs differ.
G3Element encode_g3(const CubeState& state, const OrientationBasis& basis = reference_basis());
CubeState decode_g2(const G2Element& x, const OrientationBasis& basis = reference_basis());
CubeState decode_g3(const G3Element& x, const OrientationBasis& basis = reference_basis());

G2Element word_to_g2(const MoveWord& w);
G3Element word_to_g3(const MoveWord& w);

/// Corner data of a 3x3 element (the psi image in the model).
G2Element psi(const G3Element& x);

/// Sign map S_8 -> S_12 with image {1, (bc)}.
Permutation sign_map(const Permutation& corner_perm);
/// (l, s) -> (0, l, (sign_map(s), s)).
G3Element section_g2_in_g3(const G2Element& x);

enum class SubgroupTag { K, L, M, N, J, H, S, P, A8, A12, Full, Trivial };

std::string to_string(SubgroupTag tag);
SubgroupTag parse_subgroup_tag(const std::string& name);

/// G2 tags: K (corner permutation trivial), L (even corner permutation),
/// H (orientation-preserving complement), A8 (H with even permutation), Full, Trivial.
/// Throws std::invalid_argument for tags that live in G3 only.
bool membership(SubgroupTag tag, const G2Element& x);
/// G3 tags: N (corners fixed), M (only edge flips), L (only corner twists),
/// J (both permutations trivial), S (the complement {(0, 0, (sign_map(s), s))}),
/// P (permutation signs agree), A8 and A12 (pure even corner or edge permutations),
/// Full (valid element), Trivial. Throws std::invalid_argument for K and H.
bool membership(SubgroupTag tag, const G3Element& x);

// ---------------------------------------------------------------------------
// Constructive words

struct Transpositions {
  MoveWord t1, t2, t3;
};

/// t1 = u^-1 g2, g2 = g1 u g1 u^-1, g1 = r d r^-1 f^-1; t2 = l t1 l^-1; t3 = l^2 t1 l^-2.
Transpositions build_transpositions();

/// u^2 r^-1 u^2 r u r^-1 u r: corners fixed and twisted, edges cycled (abc).
const MoveWord& seed_word();

/// Whole-cube relabelings of the seed word and their inverses: 3-cycles on the
/// three edges of a face that leave the corners in place.
const std::vector<MoveWord>& three_cycle_moves();

/// Words h1, h2, h3 with beta = (abc), (cgh), (bjg).
std::array<MoveWord, 3> face_seeds();

/// Grows the set of edges S, starting from {a, b, f} and adding c, d, g, h, e,
/// i, j, k, l in that order, keeping one word in N for every 3-cycle on S.
class EdgeCycleBuilder {
 public:
  EdgeCycleBuilder();

  /// Word with beta = (e1 x y) and trivial corner action. Labels are 0-based edges.
  const MoveWord& three_cycle(int e1, int x, int y) const;
  /// The pair (h1, h2) with beta (abc) and (afe); their commutator seeds S.
  std::pair<MoveWord, MoveWord> seed_pair() const { return seed_pair_; }
  std::size_t size() const { return words_.size(); }
  const std::map<std::array<int, 3>, MoveWord>& words() const { return words_; }

 private:
  void add_edge(int e1);
  void store(const std::array<int, 3>& cycle, MoveWord w);
  const MoveWord* lookup(int a, int b, int c) const;

  std::vector<int> members_;
  std::map<std::array<int, 3>, MoveWord> words_;  // keyed by cycle rotated to start at its minimum
  std::pair<MoveWord, MoveWord> seed_pair_;
};

const EdgeCycleBuilder& edge_cycles();

/// Word for the edge 3-cycle (e1 x y), labels 0-based.
MoveWord edge_three_cycle(int e1, int x, int y);

/// m = [h3^-1, h1][h2, h1^-1].
MoveWord build_m();

// ---------------------------------------------------------------------------
// Orders and chains

/// Chains of the groups generated by the six face turns.
const StabilizerChain& g2_sticker_chain();  // 24 points
const StabilizerChain& g3_sticker_chain();  // 48 points
const StabilizerChain& corner_chain();      // 8 points
const StabilizerChain& pair_chain();        // 20 points, edges then corners

StabilizerChain build_chain(const MoveTables& tables);
/// Rank over Z_k of the orbit of v under the group generated by perms; the
/// dimension of the smallest submodule containing v that is stable under them.
std::size_t orbit_span_rank(const OrientationVector& v, std::span<const Permutation> perms);

/// 3^dim(K) * |phi(G2)|, with K spanned by the conjugates of the seed twist.
BigCount g2_order_by_cosets(const MoveTables& tables = standard_move_tables(2));

/// Order of the normal closure of the commutators of the given generators.
BigCount derived_subgroup_order(std::span<const Permutation> generators, std::size_t degree);

/// Centralizer of the group generated by `generators` inside that group.
std::vector<Permutation> center_elements(std::span<const Permutation> generators,
                                         const StabilizerChain& chain);

/// Elements (k, s) of K x| S_8 commuting with every element, found by running
/// over the centralizer of S_8 and the S_8-invariant sum-zero twists.
std::vector<G2Element> g2_center_structural();

// ---------------------------------------------------------------------------
// Suite

struct StructureSuiteOptions {
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  MoveTables tables2 = standard_move_tables(2);
  MoveTables tables3 = standard_move_tables(3);
};

VerificationReport verify_structure_suite(const StructureSuiteOptions& options,
                                          const std::vector<std::string>& filters = {});

/// Ids produced by verify_structure_suite.
std::vector<std::string> structure_check_ids();

}  // namespace cubegroup
