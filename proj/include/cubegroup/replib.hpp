#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cubegroup/abelian.hpp"
#include "cubegroup/monomial.hpp"
#include "cubegroup/structure.hpp"
#include "cubegroup/verification.hpp"

namespace cubegroup {

// ---------------------------------------------------------------------------
// Cube representations
//
// Besides the six face generators "U".."R", each representation carries named
// images of a basis of the abelian normal subgroup and of generators of the
// permutation complement, so faithfulness can be decided structurally.

/// (k, s) -> diag(w^k) P_s with r = 3.
MonomialElement g2_image(const G2Element& x);
/// Edges on coordinates 1..12 with flips as w^3, corners on 13..20 with twists as w^2k; r = 6.
MonomialElement g3_image(const G3Element& x);

/// Faces, a1..a7 (twist e_i - e_{i+1}), s1 = (12), s2 = (12345678).
MonomialRep build_rep_g2();
/// Faces, f1..f11 (flip e_i + e_{i+1}), a1..a7 (corner twists), p1..p5 generating P:
/// edge (123) and (2 3 ... 12), corner (123) and (2 3 ... 8), and the odd pair ((12), (12)).
MonomialRep build_rep_g3();

/// Z_{3,0}^8 x| S_8 in terms of the generator names of build_rep_g2.
SplitGroup g2_split_group();
/// (Z_{2,0}^12 + Z_{3,0}^8) x| P in terms of the generator names of build_rep_g3.
SplitGroup g3_split_group();

// ---------------------------------------------------------------------------
// Minimal permutation degree

/// Products of symmetric, alternating and trivial factors, plus the parity pair
/// P(a, b) = {(x, y) in S_a x S_b : sign x = sign y}.
/// Text: "1", "S8", "A12", "A8xA12" (or with a multiplication sign), "P" for
/// P(12,8), "P(12,8)".
struct PermGroupDescriptor {
  enum class Kind { Trivial, Symmetric, Alternating, ParityPair };
  struct Factor {
    Kind kind = Kind::Trivial;
    unsigned n = 1;
    unsigned n2 = 0;  // second degree of a parity pair
  };
  std::vector<Factor> factors;

  static PermGroupDescriptor parse(std::string_view text);
  std::string to_string() const;
};

/// mu(S_n) = n; mu(A_n) = n for n >= 5 and 1, 1, 3, 4 for n = 1..4; mu(P(a, b)) =
/// a + b for a, b >= 5; products of alternating groups of degree >= 5 add; the
/// trivial group gives 1. Throws std::invalid_argument for anything else.
unsigned mu(const PermGroupDescriptor& h);
unsigned mu(std::string_view descriptor);

/// mu(H), a lower bound for the degree of a faithful complex representation of
/// A x| H when H acts faithfully on A. The caller asserts faithfulness.
unsigned lower_bound_complex_split(const FiniteAbelianGroup& a, const PermGroupDescriptor& h);

struct G2RealCases {
  unsigned q_inject;  // S_8 embeds in S_q: 2q >= 16
  unsigned p_inject;  // S_8 embeds in S_p: p >= 8 and q >= b(Z_{3,0}^8) = 7
  unsigned minimum;
};
G2RealCases g2_real_case_analysis();

struct KernelCaseRow {
  std::string k_p, k_q;
  unsigned p, q, bound;  // bound = p + 2q
  unsigned refined;      // p + 2 max(q, b(J)) with b(J) the number of factors above 2 of J
  /// "(K_p, K_q, p, q, p+2q)".
  std::string to_string() const;
};

struct G3RealCaseTable {
  std::vector<KernelCaseRow> rows;        // the seven listed kernel pairs
  std::vector<KernelCaseRow> other_rows;  // remaining pairs of normal subgroups meeting trivially
  unsigned minimum;                       // over the refined bounds of every pair
};
G3RealCaseTable g3_real_case_table();

/// mdim_R(A): any group containing A needs at least this real dimension.
std::size_t subgroup_real_lower_bound(const FiniteAbelianGroup& a);

// ---------------------------------------------------------------------------
// Z_{3,0}^4 x| S_4

struct ExceptionalExample {
  EnumeratedGroup group;  // 648 elements
  MonomialRep rep4;       // (a, s) -> diag(w^a) P_s
  ConjMonomialRep rep6;   // three rotation blocks
};

/// rep6 uses the characters c_t = e_t + e_4 (t = 1, 2, 3): up to sign they are the
/// three pair partitions of {1, 2, 3, 4}, permuted by S_4 through S_4 -> S_3, with
/// the Klein four-group reversing the orientation of two blocks.
ExceptionalExample build_exceptional();

/// Image of (a, s) under rep6, computed directly from the characters.
ConjMonomialElement exceptional_rep6_image(const SemidirectElement& x);

// ---------------------------------------------------------------------------
// Suite

struct ReplibSuiteOptions {
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
};

VerificationReport verify_replib_suite(const ReplibSuiteOptions& options,
                                       const std::vector<std::string>& filters = {});
std::vector<std::string> replib_check_ids();

}  // namespace cubegroup
