#include <random>

#include "doctest.h"
#include "cubegroup/errors.hpp"
#include "cubegroup/structure.hpp"

using namespace cubegroup;

namespace {

const MoveWord kWordK = MoveWord::parse("U2 R' U2 R U R' U R");

std::string digits(const Permutation& p) { return to_cycle_string(p, LabelStyle::Digits); }
std::string letters(const Permutation& p) { return to_cycle_string(p, LabelStyle::Letters); }

}  // namespace

TEST_CASE("phi and alpha on the generators") {
  const char* corner[] = {"(1342)", "(5687)", "(1265)", "(3784)", "(1573)", "(2486)"};
  const char* edge[] = {"(abcd)", "(ilkj)", "(cgkh)", "(aeif)", "(dhle)", "(bfjg)"};
  for (std::size_t i = 0; i < kFaces.size(); ++i) {
    const auto g = MoveWord::generator(kFaces[i]);
    CHECK(digits(phi(g)) == corner[i]);
    const auto [e, c] = alpha(g);
    CHECK(letters(e) == edge[i]);
    CHECK(digits(c) == corner[i]);
  }
  CHECK(phi(MoveWord()).is_identity());
}

TEST_CASE("phi is a homomorphism under the word product") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const auto x = random_word(rng, 20), y = random_word(rng, 20);
    CHECK(phi(word_product(x, y)) == compose(phi(x), phi(y)));
  }
}

TEST_CASE("psi renames tokens") {
  CHECK(psi(MoveWord::parse("U R'")).to_string() == "U R'");
  CHECK(psi(MoveWord()).empty());
  CHECK(phi(psi(kWordK)).is_identity());
  CHECK(alpha(kWordK).second.is_identity());
}

TEST_CASE("transpositions") {
  const auto t = build_transpositions();
  CHECK(digits(phi(t.t1)) == "(34)");
  const auto l = phi(MoveWord::generator(Face::L));
  CHECK(phi(t.t2) == conjugate(l, phi(t.t1)));
  for (const auto& w : {t.t1, t.t2, t.t3}) {
    const auto p = phi(w);
    CHECK(p.cycles().size() == 1);
    CHECK(p.cycles()[0].size() == 2);
    CHECK(phi(w.repeated(2)).is_identity());
  }
}

TEST_CASE("twists permute as k_{s^-1(i)}") {
  G2Element n{OrientationVector::zero(3, 8, true), perm_from_cycles("(123)", 8)};
  G2Element k{OrientationVector(3, {1, 2, 0, 0, 0, 0, 0, 0}, true), Permutation(8)};
  const auto nk = g2_mul(n, g2_mul(k, g2_inverse(n)));
  CHECK(nk.twist.entries() == std::vector<int>{0, 1, 2, 0, 0, 0, 0, 0});
  CHECK(nk.perm.is_identity());
  const auto comm = g2_mul(nk, g2_inverse(k));
  CHECK(comm.twist.entries() == std::vector<int>{2, 2, 2, 0, 0, 0, 0, 0});
  CHECK(g2_mul(G2Element::identity(), n) == n);
}

TEST_CASE("encoding is multiplicative and decodes back") {
  CHECK(encode_g2(CubeState::solved(2)) == G2Element::identity());
  const auto k = encode_g2(CubeState::solved(2).apply(kWordK));
  CHECK(k.perm.is_identity());
  CHECK_FALSE(k.twist.is_zero());
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const auto x = random_word(rng, 25), y = random_word(rng, 25);
    CHECK(word_to_g2(word_product(x, y)) == g2_mul(word_to_g2(x), word_to_g2(y)));
    CHECK(word_to_g3(word_product(x, y)) == g3_mul(word_to_g3(x), word_to_g3(y)));
    CHECK(decode_g3(word_to_g3(x)) == CubeState::solved(3).apply(x));
  }
  const auto twisted = twist_corners_in_place(CubeState::solved(2), {1, 0, 0, 0, 0, 0, 0, 0});
  CHECK_THROWS_AS(encode_g2(twisted), NotInGroup);
}

TEST_CASE("edge cycles and the word m") {
  const auto [h1, h2] = edge_cycles().seed_pair();
  CHECK(letters(beta(word_commutator(h1, h2))) == "(abf)");
  CHECK(letters(beta(seed_word())) == "(abc)");
  const auto w = edge_three_cycle(4, 9, 11);
  CHECK(letters(beta(w)) == "(ejl)");
  CHECK(alpha(w).second.is_identity());

  const auto m = build_m();
  const auto [e, c] = alpha(m);
  CHECK(e.is_identity());
  CHECK(c.is_identity());
  const auto state = CubeState::solved(3).apply(m);
  CHECK(edge_orientation(state, reference_basis()).entries() == std::vector<int>{0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0});
  CHECK(state.apply(m) == CubeState::solved(3));
}

TEST_CASE("the section of G2 in G3") {
  const auto r = section_g2_in_g3(word_to_g2(MoveWord::parse("R")));
  CHECK(letters(r.edge_perm) == "(bc)");
  CHECK(digits(r.corner_perm) == "(2486)");
  CHECK(psi(r) == word_to_g2(MoveWord::parse("R")));
  CHECK(section_g2_in_g3(word_to_g2(MoveWord::parse("R2"))).edge_perm.is_identity());
  CHECK(section_g2_in_g3(G2Element::identity()) == G3Element::identity());
  CHECK(membership(SubgroupTag::P, r));
  CHECK_FALSE(membership(SubgroupTag::S, r));  // R twists corners
  const auto bare = section_g2_in_g3(G2Element{OrientationVector::zero(3, 8, true), perm_from_cycles("(2486)", 8)});
  CHECK(membership(SubgroupTag::S, bare));
}

TEST_CASE("subgroup membership") {
  CHECK(membership(SubgroupTag::K, word_to_g2(kWordK)));
  CHECK_FALSE(membership(SubgroupTag::L, word_to_g2(MoveWord::parse("U"))));
  for (auto tag : {SubgroupTag::K, SubgroupTag::L, SubgroupTag::H, SubgroupTag::A8, SubgroupTag::Full, SubgroupTag::Trivial})
    CHECK(membership(tag, G2Element::identity()));
  for (auto tag : {SubgroupTag::N, SubgroupTag::M, SubgroupTag::L, SubgroupTag::J, SubgroupTag::S, SubgroupTag::P})
    CHECK(membership(tag, G3Element::identity()));
  CHECK(membership(SubgroupTag::M, word_to_g3(build_m())));
  CHECK_THROWS(membership(SubgroupTag::K, G3Element::identity()));
  CHECK_THROWS(membership(SubgroupTag::N, G2Element::identity()));
  CHECK(parse_subgroup_tag(to_string(SubgroupTag::A12)) == SubgroupTag::A12);
}

TEST_CASE("group orders by two methods") {
  CHECK(g2_sticker_chain().order().to_string() == "88179840");
  CHECK(g2_order_by_cosets() == g2_sticker_chain().order());
  CHECK(g3_sticker_chain().order().to_string() == "43252003274489856000");
  CHECK(pair_chain().order() == BigCount::factorial(12) * BigCount::factorial(8).exact_div(2));
  CHECK(corner_chain().order() == BigCount(40320));
}

TEST_CASE("the structure suite passes and is reproducible") {
  StructureSuiteOptions opt;
  opt.trials = 100;
  const auto a = verify_structure_suite(opt);
  CHECK(a.all_passed());
  CHECK(a.to_json() == verify_structure_suite(opt).to_json());
  CHECK(a.checks().size() == structure_check_ids().size());
}

TEST_CASE("a tampered generator table is caught") {
  StructureSuiteOptions opt;
  opt.trials = 50;
  std::swap(opt.tables2.generators[0], opt.tables2.generators[1]);
  const auto report = verify_structure_suite(opt, {"eq-2.1*"});
  CHECK_FALSE(report.all_passed());
}
