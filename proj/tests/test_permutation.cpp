#include <algorithm>
#include <random>

#include "doctest.h"
#include "cubegroup/bigcount.hpp"
#include "cubegroup/errors.hpp"
#include "cubegroup/permutation.hpp"
#include "cubegroup/stabilizer_chain.hpp"

using namespace cubegroup;

namespace {

Permutation random_perm(std::mt19937_64& rng, std::size_t n) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(i);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images);
}

}  // namespace

TEST_CASE("cycles map each entry to its successor") {
  const auto u = perm_from_cycles("(1342)", 8);
  CHECK(u.one_based_images() == std::vector<int>{3, 1, 4, 2, 5, 6, 7, 8});
  CHECK(perm_from_cycles("", 8).is_identity());
  const auto a = perm_from_cycles("(abcd)", 12);
  CHECK(a.one_based_images() == std::vector<int>{2, 3, 4, 1, 5, 6, 7, 8, 9, 10, 11, 12});
  CHECK(to_cycle_string(a, LabelStyle::Letters) == "(abcd)");
  CHECK(to_cycle_string(u, LabelStyle::Digits) == "(1342)");
  CHECK(to_cycle_string(Permutation(4)) == "()");
}

TEST_CASE("malformed cycles are rejected") {
  CHECK_THROWS_AS(perm_from_cycles("(12)(23)", 4), ParseError);
  CHECK_THROWS_AS(perm_from_cycles("(19)", 8), ParseError);
  CHECK_THROWS_AS(perm_from_cycles("(12", 8), ParseError);
}

TEST_CASE("composition applies the right factor first") {
  const auto u = perm_from_cycles("(1342)", 8);
  CHECK(compose(u, u) == perm_from_cycles("(14)(23)", 8));
  CHECK(compose(u, Permutation(8)) == u);
  CHECK(compose(u, u.inverse()).is_identity());
  CHECK(compose(perm_from_cycles("(12)", 3), perm_from_cycles("(23)", 3)) == perm_from_cycles("(123)", 3));
  CHECK_THROWS_AS(compose(u, Permutation(7)), DegreeMismatch);
}

TEST_CASE("sign and conjugation") {
  CHECK(sign(perm_from_cycles("(1342)", 8)) == -1);
  CHECK(sign(Permutation(5)) == 1);
  for (const char* c : {"(1342)", "(5687)", "(1265)", "(3784)", "(1573)", "(2486)"}) CHECK(sign(perm_from_cycles(c, 8)) == -1);
  const auto x = perm_from_cycles("(13)", 3);
  CHECK(conjugate(Permutation(3), x) == x);
  CHECK(conjugate(x, Permutation(3)).is_identity());
  CHECK(conjugate(perm_from_cycles("(12)", 3), x) == perm_from_cycles("(23)", 3));
  CHECK_THROWS_AS(conjugate(x, Permutation(4)), DegreeMismatch);
}

TEST_CASE("sign is multiplicative and cycles round-trip") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_perm(rng, 12), q = random_perm(rng, 12);
    CHECK(sign(compose(p, q)) == sign(p) * sign(q));
    CHECK(perm_from_cycles(to_cycle_string(p, LabelStyle::Numbers), 12) == p);
  }
}

TEST_CASE("stabilizer chain orders") {
  const std::vector<Permutation> sym{perm_from_cycles("(12)", 8), perm_from_cycles("(12345678)", 8)};
  CHECK(StabilizerChain::build(sym, 8).order() == BigCount(40320));
  std::vector<Permutation> phi_gens;
  for (const char* c : {"(1342)", "(5687)", "(1265)", "(3784)", "(1573)", "(2486)"}) phi_gens.push_back(perm_from_cycles(c, 8));
  CHECK(StabilizerChain::build(phi_gens, 8).order() == BigCount(40320));
  const std::vector<Permutation> trivial{Permutation(8)};
  CHECK(StabilizerChain::build(trivial, 8).order() == BigCount(1));

  for (std::size_t n = 4; n <= 12; ++n) {
    // 3-cycles (1 2 k) generate A_n
    std::vector<Permutation> gens;
    for (std::size_t k = 3; k <= n; ++k) gens.push_back(perm_from_cycles({{1, 2, static_cast<int>(k)}}, n));
    CHECK(StabilizerChain::build(gens, n).order() == BigCount::factorial(static_cast<unsigned>(n)).exact_div(2));
  }
}

TEST_CASE("chain membership") {
  const std::vector<Permutation> gens{perm_from_cycles("(123)", 6), perm_from_cycles("(456)", 6)};
  const auto chain = StabilizerChain::build(gens, 6);
  CHECK(chain.order() == BigCount(9));
  CHECK(chain.contains(perm_from_cycles("(132)(465)", 6)));
  CHECK_FALSE(chain.contains(perm_from_cycles("(12)", 6)));
  std::mt19937_64 rng(3);
  Permutation w = Permutation(6);
  for (int i = 0; i < 1000; ++i) {
    w = compose(gens[rng() % 2], w);
    CHECK(chain.contains(w));
  }
}

TEST_CASE("exact counts") {
  CHECK(BigCount::factorial(20).to_string() == "2432902008176640000");
  CHECK(BigCount::parse("43252003274489856000") ==
        BigCount::power(2, 11) * BigCount::power(3, 7) * BigCount::factorial(12) * BigCount::factorial(8).exact_div(2));
  CHECK_THROWS(BigCount::factorial(40));
  CHECK_THROWS(BigCount(7).exact_div(2));
}
