// One line per acceptance criterion. Time limits are pinned here and count as
// part of the criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cubegroup/cli.hpp"
#include "cubegroup/replib.hpp"

using namespace cubegroup;

namespace {

constexpr double kGeneratorTableLimit = 1.0;
constexpr double kOrdersLimit = 30.0;
constexpr double kAbelianLimit = 60.0;
constexpr double kExceptionalLimit = 10.0;
constexpr double kNoLimit = 0.0;

constexpr std::size_t kInvariantWords = 10000;
constexpr std::size_t kBasisPairs = 100;
constexpr std::size_t kSplitPairs = 1000;
constexpr std::uint64_t kAbelianOrderBound = 200;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail = what;
      ok = false;
    }
  }
};

std::string digits(const Permutation& p) { return to_cycle_string(p, LabelStyle::Digits); }
std::string letters(const Permutation& p) { return to_cycle_string(p, LabelStyle::Letters); }

Outcome generator_tables() {
  Outcome o;
  const char* corner[] = {"(1342)", "(5687)", "(1265)", "(3784)", "(1573)", "(2486)"};
  const char* edge[] = {"(abcd)", "(ilkj)", "(cgkh)", "(aeif)", "(dhle)", "(bfjg)"};
  int equal = 0;
  for (std::size_t i = 0; i < kFaces.size(); ++i) {
    const auto g = MoveWord::generator(kFaces[i]);
    const auto c = digits(corner_permutation(CubeState::solved(2).apply(g)));
    const auto e = letters(edge_permutation(CubeState::solved(3).apply(g)));
    o.require(c == corner[i], "corner permutation " + c + " != " + corner[i]);
    o.require(e == edge[i], "edge permutation " + e + " != " + edge[i]);
    equal += (c == corner[i]) + (e == edge[i]);
  }
  if (o.ok) o.detail = std::to_string(equal) + "/12 equal";
  return o;
}

Outcome constructive_words() {
  Outcome o;
  const auto t1 = digits(phi(build_transpositions().t1));
  o.require(t1 == "(34)", "phi(t1) = " + t1);
  const auto [he, hc] = alpha(seed_word());
  o.require(letters(he) == "(abc)" && hc.is_identity(), "alpha(h) = (" + letters(he) + ", " + digits(hc) + ")");
  const auto [h1, h2] = edge_cycles().seed_pair();
  const auto b = letters(beta(word_commutator(h1, h2)));
  o.require(b == "(abf)", "beta([h1,h2]) = " + b);
  const auto m = build_m();
  const auto [me, mc] = alpha(m);
  o.require(me.is_identity() && mc.is_identity(), "alpha(m) is not trivial");
  const auto flips = edge_orientation(CubeState::solved(3).apply(m), reference_basis()).entries();
  o.require(flips == std::vector<int>{0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0}, "m does not flip exactly c and g");
  if (o.ok) o.detail = "t1 (34), h (abc), [h1,h2] (abf), m flips c g";
  return o;
}

Outcome orders() {
  Outcome o;
  const BigCount g2 = BigCount::power(3, 7) * BigCount::factorial(8);
  const BigCount g3 = BigCount::power(2, 11) * BigCount::power(3, 7) * BigCount::factorial(12) *
                      BigCount::factorial(8).exact_div(2);
  const BigCount p = BigCount::factorial(12) * BigCount::factorial(8).exact_div(2);
  o.require(g2.to_string() == "88179840", "3^7 8! miscomputed");
  o.require(g3.to_string() == "43252003274489856000", "|G3| formula miscomputed");
  const auto cosets = g2_order_by_cosets();
  o.require(cosets == g2, "twist cosets give " + cosets.to_string());
  const auto& c2 = g2_sticker_chain();
  o.require(c2.degree() == 24 && c2.order() == g2, "24-sticker chain gives " + c2.order().to_string());
  const auto& c3 = g3_sticker_chain();
  o.require(c3.degree() == 48 && c3.order() == g3, "48-sticker chain gives " + c3.order().to_string());
  const auto& cp = pair_chain();
  o.require(cp.degree() == 20 && cp.order() == p, "20-point chain gives " + cp.order().to_string());
  if (o.ok) o.detail = "|G2| = " + g2.to_string() + " twice, |G3| = " + g3.to_string() + ", |P| = " + p.to_string();
  return o;
}

Outcome invariants() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::size_t bad = 0;
  for (std::size_t i = 0; i < kInvariantWords; ++i) {
    const auto w = random_word(rng, 40);
    bad += invariant_s(CubeState::solved(2).apply(w)) != 0;
    const auto s3 = CubeState::solved(3).apply(w);
    bad += invariant_s(s3) != 0;
    bad += invariant_t(s3) != 0;
  }
  o.require(bad == 0, std::to_string(bad) + " nonzero invariants");
  std::size_t disagree = 0;
  for (std::size_t i = 0; i < kBasisPairs; ++i) {
    // some of these states are off the group so the sums are not all zero
    auto state = CubeState::solved(3).apply(random_word(rng, 40));
    state = twist_corners_in_place(state, {static_cast<int>(rng() % 3), 0, 0, 0, 0, 0, 0, 0});
    state = flip_edges_in_place(state, {static_cast<int>(rng() % 2), 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    const auto b1 = random_basis(rng), b2 = random_basis(rng);
    disagree += corner_orientation(state, b1).sum() != corner_orientation(state, b2).sum();
    disagree += edge_orientation(state, b1).sum() != edge_orientation(state, b2).sum();
  }
  o.require(disagree == 0, std::to_string(disagree) + " basis disagreements");
  if (o.ok)
    o.detail = std::to_string(kInvariantWords) + " words per size, " + std::to_string(kBasisPairs) +
               " basis pairs, 0 failures";
  return o;
}

Outcome splittings() {
  Outcome o;
  std::mt19937_64 rng(77);
  std::size_t bad_mul = 0, bad_hom = 0, bad_psi = 0, bad_p = 0;
  for (std::size_t i = 0; i < kSplitPairs; ++i) {
    const auto x = random_word(rng, 30), y = random_word(rng, 30);
    const auto ex = encode_g2(CubeState::solved(2).apply(x));
    const auto ey = encode_g2(CubeState::solved(2).apply(y));
    bad_mul += encode_g2(CubeState::solved(2).apply(word_product(x, y))) != g2_mul(ex, ey);
    const auto sx = section_g2_in_g3(ex), sy = section_g2_in_g3(ey);
    bad_hom += section_g2_in_g3(g2_mul(ex, ey)) != g3_mul(sx, sy);
    bad_psi += psi(sx) != ex;
    bad_p += !membership(SubgroupTag::P, section_g2_in_g3(G2Element{OrientationVector::zero(3, 8, true), ex.perm}));
  }
  o.require(bad_mul == 0, std::to_string(bad_mul) + " encode_g2 product failures");
  o.require(bad_hom == 0, std::to_string(bad_hom) + " section product failures");
  o.require(bad_psi == 0, std::to_string(bad_psi) + " psi(section(x)) != x");
  o.require(bad_p == 0, std::to_string(bad_p) + " sign map images outside P");
  if (o.ok) o.detail = std::to_string(kSplitPairs) + " word pairs, 0 failures";
  return o;
}

Outcome abelian() {
  Outcome o;
  std::size_t groups = 0, bad = 0;
  for (const auto& orders : cyclic_order_multisets_up_to(kAbelianOrderBound)) {
    const FiniteAbelianGroup g(orders);
    ++groups;
    bad += mdim_complex_abelian(g) != oracle_min_faithful(g, Field::Complex, kAbelianOrderBound);
    bad += mdim_real_abelian(g) != oracle_min_faithful(g, Field::Real, kAbelianOrderBound);
  }
  o.require(bad == 0, std::to_string(bad) + " formula/oracle mismatches");
  const auto z = zk0m(3, 8).group;
  o.require(mdim_complex_abelian(z) == 7 && mdim_real_abelian(z) == 14, "Z_{3,0}^8 mdim is not (7, 14)");
  const auto j = zk0m(2, 12).group + z;
  o.require(j.invariant_factors() == std::vector<std::uint64_t>{2, 2, 2, 2, 6, 6, 6, 6, 6, 6, 6},
            "J invariant factors are " + j.to_string());
  if (o.ok) o.detail = std::to_string(groups) + " order multisets up to 200 over C and R, (7, 14), " + j.to_string();
  return o;
}

Outcome headline() {
  Outcome o;
  const auto r2 = build_rep_g2();
  o.require(r2.degree() == 8 && faithful(r2, g2_split_group()), "g2 rep is not faithful at degree 8");
  o.require(lower_bound_complex_split(zk0m(3, 8).group, PermGroupDescriptor::parse("S8")) == 8, "g2 lower bound");
  const auto c2 = g2_real_case_analysis();
  o.require(realify(r2).real_dimension() == 16 && c2.q_inject == 16 && c2.p_inject == 22 && c2.minimum == 16,
            "g2 real cases");
  const auto r3 = build_rep_g3();
  o.require(r3.degree() == 20 && faithful(r3, g3_split_group()), "g3 rep is not faithful at degree 20");
  o.require(mu("A8xA12") == 20, "mu(A8 x A12)");
  const auto t = g3_real_case_table();
  const char* rows[] = {"(1, 1, 20, 20, 60)",     "(1×A₈, A₁₂×1, 12, 8, 28)", "(A₁₂×1, 1×A₈, 8, 12, 32)",
                        "(1, A₈×A₁₂, 20, 2, 24)", "(A₈×A₁₂, 1, 2, 20, 42)",   "(1, P, 20, 0, 20)",
                        "(P, 1, 0, 20, 40)"};
  o.require(t.rows.size() == 7, "table has " + std::to_string(t.rows.size()) + " rows");
  for (std::size_t i = 0; i < t.rows.size() && i < 7; ++i)
    o.require(t.rows[i].to_string() == rows[i], "row " + std::to_string(i + 1) + " is " + t.rows[i].to_string());
  o.require(t.minimum == 28, "table minimum " + std::to_string(t.minimum));
  const auto real3 = realify(r3);
  o.require(real3.real_dimension() == 28 && faithful(real3, g3_split_group()), "g3 realification");
  if (o.ok) o.detail = "G2 (8, 16), G3 (20, 28), 7 rows byte-exact";
  return o;
}

Outcome exceptional() {
  Outcome o;
  const auto ex = build_exceptional();
  o.require(ex.group.size() == 648, "group has " + std::to_string(ex.group.size()) + " elements");
  o.require(faithful(ex.rep4, ex.group), "rep4 not faithful");
  const auto norm = character_norm(ex.rep4, ex.group);
  o.require(norm == 1, "character norm " + std::to_string(norm));
  const auto fs = frobenius_schur(ex.rep4, ex.group);
  o.require(fs != 1, "rep4 is real");
  o.require(faithful(ex.rep6, ex.group), "rep6 not faithful");
  o.require(ex.rep6.real_dimension() == 6 && realify(ex.rep4).real_dimension() == 8, "real dimensions");
  if (o.ok) o.detail = "648 elements, norm 1, indicator " + std::to_string(fs) + ", real 6 < 8";
  return o;
}

Outcome negative_controls() {
  Outcome o;
  o.require(!faithful(zero_exponents(build_rep_g2(), 0, 8), g2_split_group()), "zeroed g2 rep reported faithful");
  o.require(!faithful(zero_exponents(build_rep_g3(), 12, 8), g3_split_group()), "zeroed g3 rep reported faithful");
  const auto twisted = twist_corners_in_place(CubeState::solved(2), {1, 0, 0, 0, 0, 0, 0, 0});
  o.require(invariant_s(twisted) == 1, "single twist gives s = " + std::to_string(invariant_s(twisted)));
  StructureSuiteOptions opt;
  opt.trials = 10;
  std::swap(opt.tables2.generators[0], opt.tables2.generators[1]);
  const auto report = verify_structure_suite(opt, {"eq-2.1*"});
  bool caught = false;
  for (const auto& c : report.checks()) caught |= c.id.starts_with("eq-2.1") && !c.passed;
  o.require(caught, "tampered table passes eq-2.1");
  if (o.ok) o.detail = "zeroed reps non-faithful, s = 1, eq-2.1 fails on tampered table";
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::string> args{"verify", "--json", "--seed", "42"};
  std::ostringstream a, b, err;
  const int ca = run_cli(args, a, err);
  const int cb = run_cli(args, b, err);
  o.require(ca == kExitPass && cb == kExitPass, "verify exit codes " + std::to_string(ca) + ", " + std::to_string(cb));
  o.require(a.str() == b.str(), "reports differ");
  if (o.ok) o.detail = std::to_string(a.str().size()) + " identical bytes";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "generator tables", kGeneratorTableLimit, generator_tables},
      {2, "constructive words", kNoLimit, constructive_words},
      {3, "group orders", kOrdersLimit, orders},
      {4, "sum invariants", kNoLimit, invariants},
      {5, "splittings", kNoLimit, splittings},
      {6, "abelian mdim", kAbelianLimit, abelian},
      {7, "headline dimensions", kNoLimit, headline},
      {8, "exceptional example", kExceptionalLimit, exceptional},
      {9, "negative controls", kNoLimit, negative_controls},
      {10, "determinism", kNoLimit, determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit > 0 && secs >= c.limit) out.require(false, "over the time limit");
    char timing[64];
    if (c.limit > 0)
      std::snprintf(timing, sizeof timing, "%.2fs < %.0fs", secs, c.limit);
    else
      std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << c.number << " (" << c.name << "): " << out.detail
              << " [" << timing << "]\n";
    failed += !out.ok;
  }
  std::cout << (10 - failed) << "/10 criteria passed\n";
  return failed == 0 ? 0 : 1;
}
