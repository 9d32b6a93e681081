#include "doctest.h"
#include "cubegroup/errors.hpp"
#include "cubegroup/replib.hpp"

using namespace cubegroup;

namespace {

// (a, s) -> diag(w^a) P_s on the generators of Z_{k,0}^m x| S_m
MonomialRep diagonal_rep(const EnumeratedGroup& g, int k) {
  const std::size_t m = g.element(0).s.degree();
  MonomialRep rep(m, k);
  for (const auto& [name, x] : g.generators()) rep.set_generator(name, MonomialElement{k, x.s, x.a.entries()});
  return rep;
}

// (a, s) -> the same scalar c(s) for every a; c(s) = sign(s) when signed
MonomialRep scalar_rep(const EnumeratedGroup& g, std::size_t copies, bool signed_) {
  MonomialRep rep(copies, 2);
  for (const auto& [name, x] : g.generators()) {
    const int e = signed_ && sign(x.s) < 0 ? 1 : 0;
    rep.set_generator(name, MonomialElement{2, Permutation(copies), std::vector<int>(copies, e)});
  }
  return rep;
}

}  // namespace

TEST_CASE("cyclotomic integers") {
  const auto w = CyclotomicInt::root(3, 1);
  CHECK(w * w * w == CyclotomicInt(3, 1));
  CHECK(CyclotomicInt(3, 1) + w + w * w == CyclotomicInt(3, 0));
  CHECK((w + w.conj()).to_integer() == -1);
  CHECK_FALSE(w.is_integer());
  CHECK_THROWS_AS(w.to_integer(), std::domain_error);
  CHECK(CyclotomicInt::root(4, 2).to_integer() == -1);
  CHECK(CyclotomicInt::root(6, 3).to_integer() == -1);
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(CyclotomicInt(5, 0).to_string() == "0");
}

TEST_CASE("monomial products follow the semidirect rule") {
  const MonomialElement x{3, perm_from_cycles("(12)", 2), {1, 0}};
  const MonomialElement y{3, Permutation(2), {0, 2}};
  const auto xy = x * y;
  CHECK(xy.perm == x.perm);
  CHECK(xy.exps == std::vector<int>{0, 0});  // (1,0) + s.(0,2) = (1,0) + (2,0)
  CHECK((x * x.inverse()).is_identity());
  CHECK(x.trace() == CyclotomicInt(3, 0));
  CHECK(y.trace() == CyclotomicInt(3, 1) + CyclotomicInt::root(3, 2));
  CHECK(matrix_text(y) == "  1   0\n  0 w^2\n");
}

TEST_CASE("conjugating blocks") {
  ConjMonomialElement rot = ConjMonomialElement::identity(0, 1, 3);
  rot.exps = {1};
  CHECK(rot.real_dimension() == 2);
  // z -> w z generates Z_3; its real character is 2, -1, -1
  CHECK((rot * rot * rot).is_identity());
  CyclotomicInt sum(3, 0);
  ConjMonomialElement g = ConjMonomialElement::identity(0, 1, 3);
  for (int i = 0; i < 3; ++i) {
    sum += (g * g).trace();
    g = g * rot;
  }
  CHECK(sum.to_integer() == 0);  // Frobenius-Schur indicator 0

  ConjMonomialElement refl = ConjMonomialElement::identity(0, 1, 3);
  refl.flags = {1};
  CHECK((refl * refl).is_identity());
  CHECK(refl.trace() == CyclotomicInt(3, 0));
  CHECK((refl * rot * refl) == rot.inverse());
}

TEST_CASE("character norm and indicator on small groups") {
  const auto s3 = EnumeratedGroup::sum_zero_semidirect(3, 2);  // Z_3 x| S_2, the symmetric group on 3 letters
  CHECK(s3.size() == 6);
  CHECK(character_norm(scalar_rep(s3, 1, false), s3) == 1);
  CHECK(character_norm(scalar_rep(s3, 2, false), s3) == 4);
  CHECK(frobenius_schur(scalar_rep(s3, 1, false), s3) == 1);
  CHECK(frobenius_schur(scalar_rep(s3, 1, true), s3) == 1);
  const auto std2 = diagonal_rep(s3, 3);
  CHECK(character_norm(std2, s3) == 1);
  CHECK(frobenius_schur(std2, s3) == 1);
  CHECK(faithful(std2, s3));
  CHECK_FALSE(faithful(scalar_rep(s3, 1, true), s3));
}

TEST_CASE("images_over rejects non-homomorphisms") {
  const auto s3 = EnumeratedGroup::sum_zero_semidirect(3, 2);
  auto rep = diagonal_rep(s3, 3);
  rep.set_generator("a1", MonomialElement{3, Permutation(2), {1, 1}});
  CHECK_THROWS_AS(images_over(rep, s3), std::invalid_argument);
  CHECK_THROWS_AS(rep.set_generator("a1", MonomialElement{3, Permutation(3), {0, 0, 0}}), DegreeMismatch);
}

TEST_CASE("the 2x2 representation") {
  const auto rep = build_rep_g2();
  CHECK(rep.degree() == 8);
  const auto u = rep.image(MoveWord::parse("U"));
  CHECK(to_cycle_string(u.perm, LabelStyle::Digits) == "(1342)");
  CHECK(u.exps == std::vector<int>(8, 0));
  CHECK(rep.image(MoveWord()).is_identity());
  CHECK(faithful(rep, g2_split_group()));
  CHECK_FALSE(faithful(zero_exponents(rep, 0, 8), g2_split_group()));
  const auto real = realify(rep);
  CHECK(real.real_dimension() == 16);
  CHECK(faithful(real, g2_split_group()));
  const auto cases = g2_real_case_analysis();
  CHECK(cases.q_inject == 16);
  CHECK(cases.p_inject == 22);
  CHECK(cases.minimum == 16);
}

TEST_CASE("the 3x3 representation") {
  const auto rep = build_rep_g3();
  CHECK(rep.degree() == 20);
  const auto u = rep.image(MoveWord::parse("U"));
  CHECK(to_cycle_string(u.perm.restrict_to(0, 12), LabelStyle::Letters) == "(abcd)");
  CHECK(to_cycle_string(u.perm.restrict_to(12, 8), LabelStyle::Digits) == "(1342)");
  const auto m = rep.image(build_m());
  CHECK(m.is_diagonal());
  std::vector<int> expected(20, 0);
  expected[2] = expected[6] = 3;
  CHECK(m.exps == expected);
  CHECK(faithful(rep, g3_split_group()));
  CHECK_FALSE(faithful(zero_exponents(rep, 12, 8), g3_split_group()));
  const auto real = realify(rep);
  CHECK(real.p() == 12);
  CHECK(real.q() == 8);
  CHECK(real.real_dimension() == 28);
  CHECK(faithful(real, g3_split_group()));
  CHECK(rep.to_json()["degree"] == 20);
}

TEST_CASE("realify keeps real exponents") {
  MonomialRep rep(3, 2);
  rep.set_generator("x", MonomialElement{2, perm_from_cycles("(12)", 3), {1, 0, 1}});
  CHECK(realify(rep).real_dimension() == 3);
}

TEST_CASE("minimal permutation degrees") {
  CHECK(mu("S8") == 8);
  CHECK(mu("A8xA12") == 20);
  CHECK(mu("A8×A12") == 20);
  CHECK(mu("1") == 1);
  CHECK(mu("P") == 20);
  CHECK(mu("P(12,8)") == 20);
  CHECK(mu("A4") == 4);
  CHECK_THROWS(mu("Q8"));
  CHECK(PermGroupDescriptor::parse("A8xA12").to_string() == "A8xA12");
  CHECK(lower_bound_complex_split(zk0m(3, 8).group, PermGroupDescriptor::parse("S8")) == 8);
  CHECK(lower_bound_complex_split(zk0m(3, 4).group, PermGroupDescriptor::parse("S4")) == 4);
  CHECK(subgroup_real_lower_bound(zk0m(3, 4).group) == 6);
  CHECK(subgroup_real_lower_bound(FiniteAbelianGroup::parse("2")) == 1);
}

TEST_CASE("kernel case table") {
  const auto t = g3_real_case_table();
  REQUIRE(t.rows.size() == 7);
  const char* rows[] = {"(1, 1, 20, 20, 60)",          "(1×A₈, A₁₂×1, 12, 8, 28)", "(A₁₂×1, 1×A₈, 8, 12, 32)",
                        "(1, A₈×A₁₂, 20, 2, 24)",      "(A₈×A₁₂, 1, 2, 20, 42)",   "(1, P, 20, 0, 20)",
                        "(P, 1, 0, 20, 40)"};
  for (std::size_t i = 0; i < 7; ++i) CHECK(t.rows[i].to_string() == rows[i]);
  CHECK(t.rows[3].refined == 34);
  CHECK(t.rows[5].refined == 34);
  CHECK(t.minimum == 28);
}

TEST_CASE("the exceptional example") {
  const auto ex = build_exceptional();
  CHECK(ex.group.size() == 648);
  CHECK(faithful(ex.rep4, ex.group));
  CHECK(character_norm(ex.rep4, ex.group) == 1);
  CHECK(frobenius_schur(ex.rep4, ex.group) != 1);
  CHECK(faithful(ex.rep6, ex.group));
  CHECK(ex.rep6.real_dimension() == 6);
  CHECK(realify(ex.rep4).real_dimension() == 8);

  const auto tau = exceptional_rep6_image(SemidirectElement{OrientationVector::zero(3, 4, true), perm_from_cycles("(132)", 4)});
  const auto d = decorated_perm(tau);
  CHECK(d.flags == std::vector<int>{0, 0, 0});
  CHECK(to_cycle_string(d.sigma_q, LabelStyle::Digits) == "(132)");
  const auto klein = exceptional_rep6_image(SemidirectElement{OrientationVector::zero(3, 4, true), perm_from_cycles("(12)(34)", 4)});
  CHECK(decorated_perm(klein).sigma_q.is_identity());
  int flagged = 0;
  for (int f : decorated_perm(klein).flags) flagged += f;
  CHECK(flagged == 2);
}

TEST_CASE("the representation suite passes") {
  const auto report = verify_replib_suite(ReplibSuiteOptions{42, 100});
  CHECK(report.all_passed());
  CHECK(report.checks().size() == replib_check_ids().size());
}
