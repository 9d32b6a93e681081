#include <random>

#include "doctest.h"
#include "cubegroup/cube.hpp"
#include "cubegroup/errors.hpp"
#include "cubegroup/structure.hpp"

using namespace cubegroup;

namespace {

const char* const kWordK = "U2 R' U2 R U R' U R";
// t1 = u^-1 g2 with g2 = g1 u g1 u^-1, g1 = r d r^-1 f^-1, read as composition
const char* const kWordT1 = "U' F' R' D R U F' R' D R U'";

Permutation corners_after(const char* word) {
  return corner_permutation(CubeState::solved(2).apply(MoveWord::parse(word)));
}

std::vector<int> ints(std::initializer_list<int> v) { return v; }

}  // namespace

TEST_CASE("move words parse and print") {
  const auto w = MoveWord::parse("U R' F2 D");
  CHECK(w.size() == 4);
  CHECK(w.to_string() == "U R' F2 D");
  CHECK(MoveWord::parse("").empty());
  CHECK(MoveWord::parse("  U   R  ").to_string() == "U R");
  CHECK_THROWS_AS(MoveWord::parse("U X"), ParseError);
  CHECK_THROWS_AS(MoveWord::parse("U3'"), ParseError);
  CHECK_THROWS_AS(MoveWord::parse("d"), ParseError);
  CHECK(MoveWord::parse("U U' R2 R2").reduced().empty());
}

TEST_CASE("words act on stickers") {
  for (int size : {2, 3}) {
    const auto solved = CubeState::solved(size);
    CHECK(solved.apply(MoveWord::parse("U U U U")) == solved);
    CHECK_FALSE(solved.apply(MoveWord::parse("U")) == solved);
    std::mt19937_64 rng(size);
    for (int i = 0; i < 50; ++i) {
      const auto w = random_word(rng, 30);
      CHECK(solved.apply(w.then(w.inverse())) == solved);
    }
  }
}

TEST_CASE("corner and edge permutations of the generators") {
  CHECK(to_cycle_string(corners_after("U"), LabelStyle::Digits) == "(1342)");
  CHECK(to_cycle_string(corners_after("R"), LabelStyle::Digits) == "(2486)");
  CHECK(corners_after("").is_identity());
  CHECK(to_cycle_string(corners_after(kWordT1), LabelStyle::Digits) == "(34)");
  // the same letters applied in reading order do not give a transposition
  CHECK(to_cycle_string(corners_after("U' R D R' F' U R D R' F' U'"), LabelStyle::Digits) == "(26538)(47)");
  const auto s3 = CubeState::solved(3);
  CHECK(to_cycle_string(edge_permutation(s3.apply(MoveWord::parse("U"))), LabelStyle::Letters) == "(abcd)");
  CHECK(to_cycle_string(edge_permutation(s3.apply(MoveWord::parse("R"))), LabelStyle::Letters) == "(bfjg)");
  CHECK(edge_permutation(s3).is_identity());
}

TEST_CASE("word k fixes corner positions and twists corners") {
  const auto state = CubeState::solved(2).apply(MoveWord::parse(kWordK));
  CHECK(corner_permutation(state).is_identity());
  const auto o = corner_orientation(state, reference_basis());
  CHECK_FALSE(o.is_zero());
  CHECK(o.sum() == 0);

  const auto h = CubeState::solved(3).apply(MoveWord::parse(kWordK));
  CHECK(to_cycle_string(edge_permutation(h), LabelStyle::Letters) == "(abc)");
  CHECK(corner_permutation(h).is_identity());
}

TEST_CASE("orientation vectors under the reference basis") {
  const auto& basis = reference_basis();
  CHECK(corner_orientation(CubeState::solved(2), basis).is_zero());
  CHECK(edge_orientation(CubeState::solved(3), basis).is_zero());
  CHECK(corner_orientation(CubeState::solved(2).apply(MoveWord::parse("F")), basis).entries() ==
        ints({1, 2, 0, 0, 2, 1, 0, 0}));
  CHECK(edge_orientation(CubeState::solved(3).apply(MoveWord::parse("R F")), basis).entries() ==
        ints({0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0}));
}

TEST_CASE("sum invariants") {
  CHECK(invariant_s(CubeState::solved(2)) == 0);
  CHECK(invariant_t(CubeState::solved(3)) == 0);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto w = random_word(rng, 100);
    CHECK(invariant_s(CubeState::solved(2).apply(w)) == 0);
    const auto s3 = CubeState::solved(3).apply(w);
    CHECK(invariant_s(s3) == 0);
    CHECK(invariant_t(s3) == 0);
  }
  const auto twisted = twist_corners_in_place(CubeState::solved(2), {1, 0, 0, 0, 0, 0, 0, 0});
  CHECK(invariant_s(twisted) == 1);
  const auto flipped = flip_edges_in_place(CubeState::solved(3), {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  CHECK(invariant_t(flipped) == 1);
}

TEST_CASE("orientation sums do not depend on the basis") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto state = twist_corners_in_place(CubeState::solved(3).apply(random_word(rng, 40)), {2, 0, 0, 0, 0, 0, 0, 0});
    const auto b1 = random_basis(rng), b2 = random_basis(rng);
    CHECK(corner_orientation(state, b1).sum() == corner_orientation(state, b2).sum());
    CHECK(edge_orientation(state, b1).sum() == edge_orientation(state, b2).sum());
  }
}

TEST_CASE("corrupted sticker assignments are rejected") {
  // swapping two stickers of one corner gives its mirror image, which is no cubelet
  auto stickers = CubeState::solved(2).stickers();
  const auto& slots = geometry(2).corner_facelets[0];
  std::swap(stickers[slots[0]], stickers[slots[1]]);
  CHECK_THROWS_AS(corner_permutation(CubeState::from_stickers(2, stickers)), CorruptedState);
  CHECK_THROWS(CubeState::from_stickers(2, {0, 1, 2}));
}

TEST_CASE("state JSON round-trips") {
  const auto state = CubeState::solved(3).apply(MoveWord::parse("R U F'"));
  CHECK(CubeState::from_json(state.to_json()) == state);
}
