#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cubegroup/bigcount.hpp"
#include "cubegroup/cube.hpp"
#include "cubegroup/cyclotomic.hpp"
#include "cubegroup/permutation.hpp"
#include "json.hpp"

namespace cubegroup {

// ---------------------------------------------------------------------------
// Monomial matrices over Z[w_r]
//
// The matrix of (perm, exps) is D P, where P e_i = e_perm(i) and D is diagonal
// with entries w^exps[j]. Column i thus holds w^exps[perm(i)] in row perm(i), and
// (e, s)(e', s') = (e + s.e', s s') with (s.e)_j = e_{s^-1(j)}.

struct MonomialElement {
  int root_order = 1;
  Permutation perm;
  std::vector<int> exps;  // in [0, root_order)

  static MonomialElement identity(std::size_t degree, int root_order);
  std::size_t degree() const { return perm.degree(); }
  bool is_identity() const;
  MonomialElement inverse() const;
  /// Trace of the matrix: sum of w^exps[i] over the fixed points i of perm.
  CyclotomicInt trace() const;
  /// True when the permutation is trivial, so the matrix is diagonal.
  bool is_diagonal() const { return perm.is_identity(); }

  friend bool operator==(const MonomialElement&, const MonomialElement&) = default;
};

MonomialElement operator*(const MonomialElement& x, const MonomialElement& y);

/// Rows of space-separated entries: "0", "1", "-1" (w^(r/2)) or "w^k".
std::string matrix_text(const MonomialElement& x);

// ---------------------------------------------------------------------------
// Real forms
//
// p sign blocks (1-dim, entries +-1) followed by q rotation blocks (2-dim, C viewed
// as R^2). A rotation block acts by z -> w^e z, or z -> w^e conj(z) when its flag is
// set. Data is indexed by target block, as for MonomialElement; composing past a
// flag negates the exponent of the earlier factor and flags add mod 2.

struct ConjMonomialElement {
  int root_order = 1;
  Permutation sign_perm;   // degree p
  std::vector<int> signs;  // 1 means -1
  Permutation rot_perm;    // degree q
  std::vector<int> exps;
  std::vector<int> flags;

  static ConjMonomialElement identity(std::size_t p, std::size_t q, int root_order);
  std::size_t p() const { return sign_perm.degree(); }
  std::size_t q() const { return rot_perm.degree(); }
  std::size_t real_dimension() const { return p() + 2 * q(); }
  bool is_identity() const;
  ConjMonomialElement inverse() const;
  /// Trace of the real matrix; a flagged block is a reflection and contributes 0,
  /// an unflagged one contributes w^e + w^-e.
  CyclotomicInt trace() const;

  friend bool operator==(const ConjMonomialElement&, const ConjMonomialElement&) = default;
};

ConjMonomialElement operator*(const ConjMonomialElement& x, const ConjMonomialElement& y);

/// Block-level matrix: entries "0", "1", "-1", "w^k" and "conj∘w^k".
std::string matrix_text(const ConjMonomialElement& x);

/// Element of Z_2^q x| (S_p x S_q), with S_q permuting the flags and S_p acting trivially.
struct DecoratedPerm {
  std::vector<int> flags;
  Permutation sigma_p;
  Permutation sigma_q;

  static DecoratedPerm identity(std::size_t p, std::size_t q);
  friend bool operator==(const DecoratedPerm&, const DecoratedPerm&) = default;
};

DecoratedPerm operator*(const DecoratedPerm& x, const DecoratedPerm& y);

/// Flags and block permutations of an element, forgetting signs and exponents.
DecoratedPerm decorated_perm(const ConjMonomialElement& x);

// ---------------------------------------------------------------------------
// Representations given by generator images

class MonomialRep {
 public:
  MonomialRep(std::size_t degree, int root_order);

  std::size_t degree() const { return degree_; }
  int root_order() const { return r_; }

  /// Throws DegreeMismatch when the image does not fit the representation.
  void set_generator(const std::string& name, MonomialElement image);
  const std::map<std::string, MonomialElement>& generators() const { return generators_; }
  /// Throws std::out_of_range for an unknown name.
  const MonomialElement& generator(const std::string& name) const;
  MonomialElement identity() const { return MonomialElement::identity(degree_, r_); }

  /// Image of a move word, using the generators named "U", "D", ... for the faces.
  MonomialElement image(const MoveWord& w) const;

  /// {degree, root_order, generators: {name: {perm, exps, flags}}}, perm 1-based.
  nlohmann::json to_json() const;

 private:
  std::size_t degree_;
  int r_;
  std::map<std::string, MonomialElement> generators_;
};

class ConjMonomialRep {
 public:
  ConjMonomialRep(std::size_t p, std::size_t q, int root_order);

  std::size_t p() const { return p_; }
  std::size_t q() const { return q_; }
  std::size_t real_dimension() const { return p_ + 2 * q_; }
  int root_order() const { return r_; }

  void set_generator(const std::string& name, ConjMonomialElement image);
  const std::map<std::string, ConjMonomialElement>& generators() const { return generators_; }
  const ConjMonomialElement& generator(const std::string& name) const;
  ConjMonomialElement identity() const { return ConjMonomialElement::identity(p_, q_, r_); }
  ConjMonomialElement image(const MoveWord& w) const;

  /// As for MonomialRep with the p sign blocks first: perm is the block
  /// permutation, exps holds the sign bit of a sign block and the exponent of a
  /// rotation block, flags is 0 on sign blocks. Adds {blocks: {sign: p, rotation: q}}.
  nlohmann::json to_json() const;

 private:
  std::size_t p_, q_;
  int r_;
  std::map<std::string, ConjMonomialElement> generators_;
};

/// Coordinates that carry a real piece: those whose exponents are 0 or r/2 under
/// every generator, closed under the generator permutations.
std::vector<bool> real_coordinates(const MonomialRep& rep);

/// Real coordinates become sign blocks, the others rotation blocks (the piece
/// plus its conjugate). Throws std::invalid_argument when `real` is not a union of
/// permutation orbits or a real coordinate has an exponent outside {0, r/2}.
ConjMonomialRep realify(const MonomialRep& rep, const std::vector<bool>& real);
ConjMonomialRep realify(const MonomialRep& rep);
ConjMonomialElement realify(const MonomialElement& x, const std::vector<bool>& real);

/// Decorated permutation of the image of a move word.
DecoratedPerm decorated_perm(const ConjMonomialRep& rep, const MoveWord& h);

/// Copy of rep with the exponents of coordinates [offset, offset + count) set to 0.
/// That block must be invariant under every generator permutation.
MonomialRep zero_exponents(const MonomialRep& rep, std::size_t offset, std::size_t count);

// ---------------------------------------------------------------------------
// Faithfulness on a split group A x| H

/// A x| H with A a direct sum of elementary abelian p-groups, each given by a
/// basis, and H given by generators and its order. Names refer to generators of
/// the representation under test.
struct SplitGroup {
  struct Block {
    std::uint32_t prime;
    std::vector<std::string> basis;
  };
  std::string name;
  std::vector<Block> blocks;
  std::vector<std::string> complement;
  BigCount complement_order;
};

/// Exact kernel test. The images of A must be diagonal; the kernel is trivial iff
/// each block's images are linearly independent over F_p and the permutation
/// parts of the H images generate a group of order |H|. Throws
/// std::invalid_argument when an image of a basis element is not diagonal or does
/// not have order dividing its prime.
bool faithful(const MonomialRep& rep, const SplitGroup& group);
bool faithful(const ConjMonomialRep& rep, const SplitGroup& group);

// ---------------------------------------------------------------------------
// Enumerated groups

/// Element (a, s) of Z_{k,0}^m x| S_m, with (a, s)(a', s') = (a + s.a', s s').
struct SemidirectElement {
  OrientationVector a;
  Permutation s;

  friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
  friend auto operator<=>(const SemidirectElement& x, const SemidirectElement& y) {
    if (auto c = x.a <=> y.a; c != 0) return c;
    return x.s <=> y.s;
  }
};

SemidirectElement operator*(const SemidirectElement& x, const SemidirectElement& y);

inline constexpr std::size_t kEnumerationBound = 100000;

class EnumeratedGroup {
 public:
  /// Every element of Z_{k,0}^m x| S_m, sorted, so the identity comes first.
  /// Generators: a1..a_{m-1} = e_i - e_{i+1}, s1 = (1 2), s2 = (1 2 ... m).
  /// Throws std::length_error above kEnumerationBound elements.
  static EnumeratedGroup sum_zero_semidirect(int k, int m);

  std::size_t size() const { return elements_.size(); }
  const SemidirectElement& element(std::size_t i) const { return elements_[i]; }
  const std::vector<SemidirectElement>& elements() const { return elements_; }
  const std::map<std::string, SemidirectElement>& generators() const { return generators_; }
  std::size_t index_of(const SemidirectElement& x) const;

 private:
  std::vector<SemidirectElement> elements_;
  std::map<std::string, SemidirectElement> generators_;
};

/// Images of every element, computed by walking the Cayley graph from the
/// identity. Throws std::invalid_argument if two paths to one element disagree,
/// i.e. the generator images do not define a homomorphism.
std::vector<MonomialElement> images_over(const MonomialRep& rep, const EnumeratedGroup& group);
std::vector<ConjMonomialElement> images_over(const ConjMonomialRep& rep, const EnumeratedGroup& group);

bool faithful(const MonomialRep& rep, const EnumeratedGroup& group);
bool faithful(const ConjMonomialRep& rep, const EnumeratedGroup& group);

/// (1/|G|) sum chi(g) conj(chi(g)), exactly. Throws std::logic_error if the sum is
/// not an integer multiple of |G|.
std::int64_t character_norm(const MonomialRep& rep, const EnumeratedGroup& group);
/// (1/|G|) sum chi(g^2): 1 real, 0 complex, -1 quaternionic.
int frobenius_schur(const MonomialRep& rep, const EnumeratedGroup& group);

}  // namespace cubegroup
