#include <numeric>

#include "doctest.h"
#include "cubegroup/abelian.hpp"
#include "cubegroup/errors.hpp"

using namespace cubegroup;

namespace {

using Orders = std::vector<std::uint64_t>;

Orders factors(const Orders& orders) { return invariant_factors(orders); }

}  // namespace

TEST_CASE("invariant factors") {
  CHECK(factors({2, 3}) == Orders{6});
  CHECK(factors({2, 2, 3, 3}) == Orders{6, 6});
  CHECK(factors({4, 6}) == Orders{2, 12});
  CHECK(factors({}).empty());
  const auto j = zk0m(2, 12).group + zk0m(3, 8).group;
  CHECK(j.invariant_factors() == Orders{2, 2, 2, 2, 6, 6, 6, 6, 6, 6, 6});
  CHECK(j.to_string() == "Z_2^4 + Z_6^7");
  CHECK(j.order() == (1ULL << 11) * 2187ULL);
  CHECK_THROWS(factors({1, 2}));
}

TEST_CASE("group specs") {
  CHECK(FiniteAbelianGroup::parse("2,2,3,3").invariant_factors() == Orders{6, 6});
  CHECK(FiniteAbelianGroup::parse("zk0m:3,8").invariant_factors() == Orders(7, 3));
  CHECK(FiniteAbelianGroup::parse("1").order() == 1);
  CHECK(FiniteAbelianGroup::parse("1").to_string() == "0");
  CHECK_THROWS_AS(FiniteAbelianGroup::parse("2,x"), ParseError);
  CHECK_THROWS_AS(FiniteAbelianGroup::parse("zk0m:3"), ParseError);
  CHECK_THROWS(zk0m(1, 4));
}

TEST_CASE("a and b count factors equal to and above two") {
  const auto g = FiniteAbelianGroup::parse("2,2,4,3");
  CHECK(g.invariant_factors() == (Orders{2, 2, 12}));
  CHECK(g.a() == 2);
  CHECK(g.b() == 1);
}

TEST_CASE("mdim formulas") {
  const auto z37 = zk0m(3, 8).group;
  CHECK(mdim_complex_abelian(z37) == 7);
  CHECK(mdim_real_abelian(z37) == 14);
  const auto j = FiniteAbelianGroup::parse("2,2,2,2,6,6,6,6,6,6,6");
  CHECK(mdim_complex_abelian(j) == 11);
  CHECK(mdim_real_abelian(j) == 18);
  CHECK(mdim_real_abelian(FiniteAbelianGroup::parse("2,2,2,2,2")) == 5);
  CHECK(mdim_complex_abelian(FiniteAbelianGroup()) == 0);
  CHECK(mdim_real_abelian(FiniteAbelianGroup()) == 0);
}

TEST_CASE("brute-force oracle") {
  CHECK(oracle_min_faithful(FiniteAbelianGroup::parse("2,2"), Field::Complex) == 2);
  CHECK(oracle_min_faithful(FiniteAbelianGroup::parse("4"), Field::Complex) == 1);
  CHECK(oracle_min_faithful(FiniteAbelianGroup::parse("3,3"), Field::Real) == 4);
  CHECK(oracle_min_faithful(FiniteAbelianGroup::parse("2"), Field::Real) == 1);
  CHECK_THROWS_AS(oracle_min_faithful(FiniteAbelianGroup::parse("2,2,2,2,2,2,2,2,2,2"), Field::Complex),
                  std::length_error);
}

TEST_CASE("formula matches the oracle on small groups") {
  std::size_t n = 0;
  for (const auto& g : abelian_groups_up_to(60)) {
    CHECK(mdim_complex_abelian(g) == oracle_min_faithful(g, Field::Complex));
    CHECK(mdim_real_abelian(g) == oracle_min_faithful(g, Field::Real));
    CHECK(mdim_real_abelian(g) >= mdim_complex_abelian(g));
    CHECK((mdim_real_abelian(g) == mdim_complex_abelian(g)) == (g.b() == 0));
    ++n;
  }
  CHECK(abelian_groups_up_to(200).size() == 389);
  CHECK(n > 0);
}

TEST_CASE("factors are recovered from element order counts") {
  for (const auto& g : abelian_groups_up_to(48)) {
    std::vector<std::uint64_t> census(g.order() + 1, 0);
    // count elements of each order by walking the product of cyclic groups
    const auto& orders = g.cyclic_orders();
    std::vector<std::uint64_t> digit(orders.size(), 0);
    for (std::uint64_t i = 0; i < g.order(); ++i) {
      std::uint64_t l = 1;
      for (std::size_t k = 0; k < orders.size(); ++k) l = std::lcm(l, orders[k] / std::gcd(orders[k], digit[k]));
      ++census[l];
      for (std::size_t k = 0; k < orders.size(); ++k) {
        if (++digit[k] < orders[k]) break;
        digit[k] = 0;
      }
    }
    CHECK(factors_from_order_census(census) == g.invariant_factors());
  }
}

TEST_CASE("subgroup invariant factors divide those of the group") {
  const auto report = subgroup_factor_check(FiniteAbelianGroup::parse("2,2,8"), 1000, 42);
  CHECK(report.all_passed());
  CHECK(report.checks().size() >= 1);
}
