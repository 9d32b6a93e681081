#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "cubegroup/replib.hpp"

namespace cubegroup {

namespace {

std::string failures(std::size_t bad, std::size_t total) {
  return std::to_string(bad) + " failures in " + std::to_string(total);
}

std::string digits(const std::vector<int>& v) {
  std::string out;
  for (int x : v) out += std::to_string(x);
  return out;
}

std::string join(std::initializer_list<std::size_t> values) {
  std::string out;
  for (auto v : values) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

struct Context {
  const ReplibSuiteOptions& opt;
  VerificationReport& report;
  std::mt19937_64 rng;

  std::size_t pairs() const { return std::max<std::size_t>(opt.trials, 1); }
  std::size_t few() const { return std::max<std::size_t>(opt.trials / 10, 100); }
  MoveWord word() { return random_word(rng, 24); }

  void check(std::string id, std::string claim, std::string expected, std::string actual, std::string ref) {
    report.add(std::move(id), std::move(claim), std::move(expected), std::move(actual), std::move(ref));
  }
  std::size_t count_failures(std::size_t n, const std::function<bool()>& trial) {
    std::size_t bad = 0;
    for (std::size_t i = 0; i < n; ++i) {
      try {
        if (!trial()) ++bad;
      } catch (const std::exception&) {
        ++bad;
      }
    }
    return bad;
  }
};

Permutation random_perm(std::mt19937_64& rng, std::size_t n) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(i);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(std::move(images));
}

// ---------------------------------------------------------------------------
// Abelian groups

void invariant_factor_examples(Context& ctx) {
  auto show = [](std::vector<std::uint64_t> orders) {
    std::string out;
    for (auto d : invariant_factors(orders)) out += (out.empty() ? "" : ",") + std::to_string(d);
    return "[" + out + "]";
  };
  ctx.check("eq-4.1-invfactor-z2-z3", "Z_2 + Z_3 has invariant factors [6]", "[6]", show({2, 3}),
            "invariant factor decomposition");
  ctx.check("eq-4.1-invfactor-z2z2z3z3", "Z_2^2 + Z_3^2 has invariant factors [6,6]", "[6,6]", show({2, 2, 3, 3}),
            "invariant factor decomposition");
  const auto j = zk0m(2, 12).group + zk0m(3, 8).group;
  std::string actual;
  for (auto d : j.invariant_factors()) actual += (actual.empty() ? "" : ",") + std::to_string(d);
  ctx.check("eq-4.1-invfactor-j", "Z_{2,0}^12 + Z_{3,0}^8 has invariant factors 2^4 6^7", "[2,2,2,2,6,6,6,6,6,6,6]",
            "[" + actual + "]", "invariant factor decomposition");
}

void subgroup_factors(Context& ctx) {
  const auto r = subgroup_factor_check(FiniteAbelianGroup({2, 2, 8}), ctx.pairs(), ctx.rng());
  ctx.report.merge(r);
}

void min_abelian(Context& ctx) {
  std::size_t bad_c = 0, bad_r = 0, total = 0;
  for (const auto& orders : cyclic_order_multisets_up_to(200)) {
    const FiniteAbelianGroup g(orders);
    ++total;
    if (oracle_min_faithful(g, Field::Complex) != mdim_complex_abelian(g)) ++bad_c;
    if (oracle_min_faithful(g, Field::Real) != mdim_real_abelian(g)) ++bad_r;
  }
  ctx.check("thm-4.3-oracle-complex", "a + b equals the exhaustive complex minimum for every group of order <= 200",
            failures(0, total), failures(bad_c, total), "minimal faithful dimension of a finite abelian group");
  ctx.check("thm-4.3-oracle-real", "a + 2b equals the exhaustive real minimum for every group of order <= 200",
            failures(0, total), failures(bad_r, total), "minimal faithful dimension of a finite abelian group");

  std::size_t bad = 0, types = 0;
  for (const auto& g : abelian_groups_up_to(200)) {
    ++types;
    const auto c = mdim_complex_abelian(g), r = mdim_real_abelian(g);
    if (r < c || ((r == c) != (g.b() == 0))) ++bad;
  }
  ctx.check("thm-4.3-real-vs-complex", "mdim_R >= mdim_C, with equality exactly when b = 0", failures(0, types),
            failures(bad, types), "minimal faithful dimension of a finite abelian group");

  const auto z = zk0m(3, 8).group;
  ctx.check("thm-4.3-zk0m", "Z_{3,0}^8 = Z_3^7 has minimal dimensions (7, 14)", "(7,14)",
            "(" + join({mdim_complex_abelian(z), mdim_real_abelian(z)}) + ")",
            "minimal faithful dimension of a finite abelian group");
  ctx.check("thm-4.3-oracle-examples", "oracle: Z_2^2 over C, Z_4 over C, Z_3^2 over R", "2,1,4",
            join({oracle_min_faithful(FiniteAbelianGroup({2, 2}), Field::Complex),
                  oracle_min_faithful(FiniteAbelianGroup({4}), Field::Complex),
                  oracle_min_faithful(FiniteAbelianGroup({3, 3}), Field::Real)}),
            "minimal faithful dimension of a finite abelian group");
}

// ---------------------------------------------------------------------------
// Split groups

void pieces_permuted(Context& ctx) {
  const MonomialRep rep = build_rep_g2();
  const SplitGroup split = g2_split_group();
  std::size_t bad = ctx.count_failures(ctx.few(), [&] {
    const MonomialElement h = rep.image(ctx.word());
    for (const auto& name : split.blocks[0].basis) {
      const MonomialElement& a = rep.generator(name);
      const MonomialElement c = h * a * h.inverse();
      std::vector<int> moved(a.exps.size());
      for (std::size_t i = 0; i < moved.size(); ++i) moved[h.perm(static_cast<Point>(i))] = a.exps[i];
      if (!c.is_diagonal() || c.exps != moved) return false;
    }
    return true;
  });
  ctx.check("prop-4.4-permute-pieces",
            "conjugating the diagonal image of Z_{3,0}^8 by a cube element permutes its coordinate lines",
            failures(0, ctx.few()), failures(bad, ctx.few()), "the group permutes the irreducible pieces of a normal subgroup");
}

void complex_split(Context& ctx) {
  const auto j = zk0m(2, 12).group + zk0m(3, 8).group;
  ctx.check("thm-4.5-bounds", "mu(H) for (Z_{3,0}^8, S_8), (J, P) and (Z_{3,0}^4, S_4)", "8,20,4",
            join({lower_bound_complex_split(zk0m(3, 8).group, PermGroupDescriptor::parse("S8")),
                  lower_bound_complex_split(j, PermGroupDescriptor::parse("P")),
                  lower_bound_complex_split(zk0m(3, 4).group, PermGroupDescriptor::parse("S4"))}),
            "complex lower bound for split extensions");

  const MonomialRep rep = build_rep_g2();
  std::string actual;
  for (const char* name : {"s1", "s2"}) actual += to_cycle_string(rep.generator(name).perm, LabelStyle::Digits);
  ctx.check("thm-4.5-g2-pieces", "S_8 permutes the eight one-dimensional pieces by the identity embedding",
            "(12)(12345678)", actual, "complex lower bound for split extensions");
  ctx.check("cor-4.6-mu", "mu(S_8), mu(A_8 x A_12), mu(1)", "8,20,1",
            join({mu("S8"), mu("A8xA12"), mu("1")}), "minimal degree of symmetric groups");
}

void real_split(Context& ctx) {
  const ExceptionalExample ex = build_exceptional();
  const auto images = images_over(ex.rep6, ex.group);
  std::vector<std::size_t> s4;
  for (std::size_t i = 0; i < ex.group.size(); ++i) {
    if (ex.group.element(i).a.is_zero()) s4.push_back(i);
  }
  std::size_t bad = 0;
  for (auto x : s4) {
    for (auto y : s4) {
      const auto xy = ex.group.index_of(ex.group.element(x) * ex.group.element(y));
      if (!(decorated_perm(images[xy]) == decorated_perm(images[x]) * decorated_perm(images[y]))) ++bad;
    }
  }
  const std::size_t total = s4.size() * s4.size();

  const std::vector<bool> mask(kCorners, false);
  const auto zero = OrientationVector::zero(3, kCorners, true);
  auto decorated_g2 = [&](const Permutation& s) { return decorated_perm(realify(g2_image(G2Element{zero, s}), mask)); };
  const std::size_t bad8 = ctx.count_failures(ctx.pairs(), [&] {
    const Permutation x = random_perm(ctx.rng, kCorners), y = random_perm(ctx.rng, kCorners);
    return decorated_g2(compose(x, y)) == decorated_g2(x) * decorated_g2(y);
  });
  ctx.check("thm-4.7-decorated-hom", "decorated permutations multiply: all pairs in S_4, sampled pairs in S_8",
            failures(0, total + ctx.pairs()), failures(bad + bad8, total + ctx.pairs()),
            "decorated permutation homomorphism");

  std::set<std::string> distinct;
  std::size_t kernel = 0;
  for (auto x : s4) {
    const DecoratedPerm d = decorated_perm(images[x]);
    distinct.insert(digits(d.flags) + to_cycle_string(d.sigma_q));
    if (d.sigma_p.is_identity() && d.sigma_q.is_identity()) ++kernel;
  }
  ctx.check("thm-4.7-decorated-injective", "the decorated map of S_4 in the six-dimensional representation is injective",
            "24", std::to_string(distinct.size()), "decorated permutation homomorphism");
  ctx.check("cor-4.8-s4-klein", "for m = 4 the Klein four-group is the kernel of S_4 -> S_p x S_q", "4",
            std::to_string(kernel), "symmetric complements embed in S_p or S_q");

  const ConjMonomialRep real2 = realify(build_rep_g2());
  std::vector<Permutation> rot = {real2.generator("s1").rot_perm, real2.generator("s2").rot_perm};
  ctx.check("cor-4.8-s8-into-sq", "S_8 embeds into S_q for the realified eight-dimensional representation",
            BigCount::factorial(8).to_string(), StabilizerChain::build(rot, real2.q()).order().to_string(),
            "symmetric complements embed in S_p or S_q");
}

// ---------------------------------------------------------------------------
// The 2x2 cube

void g2_reps(Context& ctx) {
  const MonomialRep rep = build_rep_g2();
  const std::size_t bad = ctx.count_failures(ctx.pairs(), [&] {
    const MoveWord x = ctx.word(), y = ctx.word();
    return rep.image(word_product(x, y)) == rep.image(x) * rep.image(y) &&
           rep.image(x) == g2_image(word_to_g2(x));
  });
  ctx.check("thm-5.1-hom", "generator images multiply like the cube: pairs of random words", failures(0, ctx.pairs()),
            failures(bad, ctx.pairs()), "faithful complex representation of the 2x2 group");
  const MonomialElement u = rep.generator("U");
  ctx.check("thm-5.1-u-image", "u maps to the permutation matrix of (1342)", "(1342) exps 00000000",
            to_cycle_string(u.perm, LabelStyle::Digits) + " exps " + digits(u.exps),
            "faithful complex representation of the 2x2 group");
  const MonomialElement k = rep.image(seed_word());
  const auto twist = corner_orientation(CubeState::solved(2).apply(seed_word()), reference_basis());
  ctx.check("thm-5.1-k-image", "the word k maps to the diagonal matrix of its twist vector",
            "() exps " + digits(twist.entries()), to_cycle_string(k.perm) + " exps " + digits(k.exps),
            "faithful complex representation of the 2x2 group");
  ctx.check("thm-5.1-faithful", "the degree-8 representation has trivial kernel on Z_{3,0}^8 x| S_8", "true",
            faithful(rep, g2_split_group()) ? "true" : "false", "faithful complex representation of the 2x2 group");
  ctx.check("thm-5.1-zeroed-control", "with corner exponents forced to 0 the representation is not faithful", "false",
            faithful(zero_exponents(rep, 0, kCorners), g2_split_group()) ? "true" : "false",
            "faithful complex representation of the 2x2 group");
  ctx.check("thm-5.1-lower-bound", "no faithful complex representation below mu(S_8)", "8",
            std::to_string(lower_bound_complex_split(zk0m(3, 8).group, PermGroupDescriptor::parse("S8"))),
            "faithful complex representation of the 2x2 group");
  const ConjMonomialRep real = realify(rep);
  ctx.check("thm-5.1-realify", "realification: no real pieces, eight rotation blocks", "p=0 q=8 dim=16",
            "p=" + std::to_string(real.p()) + " q=" + std::to_string(real.q()) +
                " dim=" + std::to_string(real.real_dimension()),
            "minimal real representation of the 2x2 group");
  ctx.check("thm-5.1-realify-faithful", "the realified representation is faithful", "true",
            faithful(real, g2_split_group()) ? "true" : "false", "minimal real representation of the 2x2 group");
  const auto cases = g2_real_case_analysis();
  ctx.check("thm-5.1-real-cases", "S_8 into S_q gives 16, S_8 into S_p gives 8 + 2*7; minimum", "16,22,16",
            join({cases.q_inject, cases.p_inject, cases.minimum}), "minimal real representation of the 2x2 group");
}

// ---------------------------------------------------------------------------
// The 3x3 cube

void g3_reps(Context& ctx) {
  const MonomialRep rep = build_rep_g3();
  const std::size_t bad = ctx.count_failures(ctx.pairs(), [&] {
    const MoveWord x = ctx.word(), y = ctx.word();
    return rep.image(word_product(x, y)) == rep.image(x) * rep.image(y) &&
           rep.image(x) == g3_image(word_to_g3(x));
  });
  ctx.check("thm-5.2-hom", "generator images multiply like the cube: pairs of random words", failures(0, ctx.pairs()),
            failures(bad, ctx.pairs()), "faithful complex representation of the 3x3 group");

  const std::size_t bad_blocks = ctx.count_failures(ctx.pairs(), [&] {
    const MonomialElement x = rep.image(ctx.word());
    for (std::size_t i = 0; i < kEdges; ++i) {
      if (x.exps[i] % 3 != 0) return false;
    }
    for (std::size_t i = kEdges; i < kEdges + kCorners; ++i) {
      if (x.exps[i] % 2 != 0) return false;
    }
    return sign(x.perm.restrict_to(0, kEdges)) == sign(x.perm.restrict_to(kEdges, kCorners));
  });
  ctx.check("thm-5.2-blocks", "edge exponents lie in {0,3}, corner exponents in {0,2,4}, permutation in P",
            failures(0, ctx.pairs()), failures(bad_blocks, ctx.pairs()),
            "faithful complex representation of the 3x3 group");

  const MonomialElement u = rep.generator("U");
  ctx.check("thm-5.2-u-image", "u maps to the permutation matrix of ((abcd),(1342))", "((abcd),(1342)) exps 0",
            "(" + to_cycle_string(u.perm.restrict_to(0, kEdges), LabelStyle::Letters) + "," +
                to_cycle_string(u.perm.restrict_to(kEdges, kCorners), LabelStyle::Digits) + ") exps " +
                (std::all_of(u.exps.begin(), u.exps.end(), [](int e) { return e == 0; }) ? "0" : digits(u.exps)),
            "faithful complex representation of the 3x3 group");
  const MonomialElement m = rep.image(build_m());
  ctx.check("thm-5.2-m-image", "m maps to the diagonal matrix with -1 at edges c and g", "() exps 00300030000000000000",
            to_cycle_string(m.perm) + " exps " + digits(m.exps), "faithful complex representation of the 3x3 group");
  ctx.check("thm-5.2-faithful", "the degree-20 representation has trivial kernel on J x| P", "true",
            faithful(rep, g3_split_group()) ? "true" : "false", "faithful complex representation of the 3x3 group");
  ctx.check("thm-5.2-zeroed-control", "with corner exponents forced to 0 the representation is not faithful", "false",
            faithful(zero_exponents(rep, kEdges, kCorners), g3_split_group()) ? "true" : "false",
            "faithful complex representation of the 3x3 group");
  ctx.check("thm-5.2-lower-bound", "mu(A_8 x A_12) bounds the complex degree from below", "20",
            std::to_string(mu("A8xA12")), "faithful complex representation of the 3x3 group");
  const ConjMonomialRep real = realify(rep);
  ctx.check("thm-5.2-realify", "realification: twelve sign blocks and eight rotation blocks", "p=12 q=8 dim=28",
            "p=" + std::to_string(real.p()) + " q=" + std::to_string(real.q()) +
                " dim=" + std::to_string(real.real_dimension()),
            "minimal real representation of the 3x3 group");
  ctx.check("thm-5.2-realify-faithful", "the realified representation is faithful", "true",
            faithful(real, g3_split_group()) ? "true" : "false", "minimal real representation of the 3x3 group");
}

void g3_table(Context& ctx) {
  static const std::array<const char*, 7> listing = {
      "(1, 1, 20, 20, 60)",         "(1×A₈, A₁₂×1, 12, 8, 28)", "(A₁₂×1, 1×A₈, 8, 12, 32)", "(1, A₈×A₁₂, 20, 2, 24)",
      "(A₈×A₁₂, 1, 2, 20, 42)", "(1, P, 20, 0, 20)",         "(P, 1, 0, 20, 40)"};
  const auto table = g3_real_case_table();
  for (std::size_t i = 0; i < listing.size(); ++i) {
    ctx.check("thm-5.2-table-row-" + std::to_string(i + 1), "kernel pair table row " + std::to_string(i + 1),
              listing[i], i < table.rows.size() ? table.rows[i].to_string() : "missing",
              "kernel pairs for the real lower bound");
  }
  ctx.check("thm-5.2-table-refined",
            "rows (1, A8xA12) and (1, P) need q >= 7 rotation blocks for the seven factors Z_6 of J", "34,34",
            join({table.rows.at(3).refined, table.rows.at(5).refined}), "kernel pairs for the real lower bound");
  unsigned other_min = ~0u;
  for (const auto& r : table.other_rows) other_min = std::min(other_min, r.refined);
  ctx.check("thm-5.2-table-complete",
            "all pairs of normal subgroups of P meeting trivially: 7 listed, 4 more, each bound above 28", "11 pairs, min 36",
            std::to_string(table.rows.size() + table.other_rows.size()) + " pairs, min " + std::to_string(other_min),
            "kernel pairs for the real lower bound");
  ctx.check("thm-5.2-table-min", "the smallest refined bound", "28", std::to_string(table.minimum),
            "kernel pairs for the real lower bound");
}

// ---------------------------------------------------------------------------
// Z_{3,0}^4 x| S_4

void exceptional(Context& ctx) {
  const ExceptionalExample ex = build_exceptional();
  const char* ref = "exceptional example";
  ctx.check("thm-5.3-order", "Z_{3,0}^4 x| S_4 has 27 * 24 elements", "648", std::to_string(ex.group.size()), ref);
  ctx.check("thm-5.3-rep4-faithful", "the four-dimensional monomial representation is faithful", "true",
            faithful(ex.rep4, ex.group) ? "true" : "false", ref);
  ctx.check("thm-5.3-rep4-irreducible", "character norm of the four-dimensional representation", "1",
            std::to_string(character_norm(ex.rep4, ex.group)), ref);
  const int fs = frobenius_schur(ex.rep4, ex.group);
  ctx.report.add(Check{"thm-5.3-rep4-non-real", "Frobenius-Schur indicator of the four-dimensional representation",
                       fs != 1, "not 1", std::to_string(fs), ref});
  ctx.check("thm-5.3-rep6-faithful", "the six-dimensional real representation is faithful", "true",
            faithful(ex.rep6, ex.group) ? "true" : "false", ref);
  ctx.check("thm-5.3-rep6-dimension", "real dimension 6 against 8 from realifying the four-dimensional one", "6 < 8",
            std::to_string(ex.rep6.real_dimension()) + " < " + std::to_string(realify(ex.rep4).real_dimension()), ref);
  ctx.check("thm-5.3-subgroup-bound", "Z_3^3 alone needs real dimension 6", "6",
            std::to_string(subgroup_real_lower_bound(FiniteAbelianGroup({3, 3, 3}))), ref);

  ConjMonomialElement eps1 = ConjMonomialElement::identity(0, 3, 3);
  eps1.flags[0] = 1;
  const DecoratedPerm d_eps = decorated_perm(eps1);
  const auto tau = SemidirectElement{OrientationVector::zero(3, 4, true), perm_from_cycles("(132)", 4)};
  const DecoratedPerm d_tau = decorated_perm(images_over(ex.rep6, ex.group)[ex.group.index_of(tau)]);
  ctx.check("thm-5.3-decorated", "epsilon_1 reverses block 1 only; (132) permutes the blocks preserving orientation",
            "100 () | 000 (132)",
            digits(d_eps.flags) + " " + to_cycle_string(d_eps.sigma_q, LabelStyle::Digits) + " | " +
                digits(d_tau.flags) + " " + to_cycle_string(d_tau.sigma_q, LabelStyle::Digits),
            ref);
}

struct Group {
  std::vector<std::string> ids;
  std::function<void(Context&)> run;
};

const std::vector<Group>& groups() {
  static const std::vector<Group> g = {
      {{"eq-4.1-invfactor-z2-z3", "eq-4.1-invfactor-z2z2z3z3", "eq-4.1-invfactor-j"}, invariant_factor_examples},
      {{"prop-4.2-subgroups"}, subgroup_factors},
      {{"thm-4.3-oracle-complex", "thm-4.3-oracle-real", "thm-4.3-real-vs-complex", "thm-4.3-zk0m",
        "thm-4.3-oracle-examples"},
       min_abelian},
      {{"prop-4.4-permute-pieces"}, pieces_permuted},
      {{"thm-4.5-bounds", "thm-4.5-g2-pieces", "cor-4.6-mu"}, complex_split},
      {{"thm-4.7-decorated-hom", "thm-4.7-decorated-injective", "cor-4.8-s4-klein", "cor-4.8-s8-into-sq"}, real_split},
      {{"thm-5.1-hom", "thm-5.1-u-image", "thm-5.1-k-image", "thm-5.1-faithful", "thm-5.1-zeroed-control",
        "thm-5.1-lower-bound", "thm-5.1-realify", "thm-5.1-realify-faithful", "thm-5.1-real-cases"},
       g2_reps},
      {{"thm-5.2-hom", "thm-5.2-blocks", "thm-5.2-u-image", "thm-5.2-m-image", "thm-5.2-faithful",
        "thm-5.2-zeroed-control", "thm-5.2-lower-bound", "thm-5.2-realify", "thm-5.2-realify-faithful"},
       g3_reps},
      {{"thm-5.2-table-row-1", "thm-5.2-table-row-2", "thm-5.2-table-row-3", "thm-5.2-table-row-4",
        "thm-5.2-table-row-5", "thm-5.2-table-row-6", "thm-5.2-table-row-7", "thm-5.2-table-refined",
        "thm-5.2-table-complete", "thm-5.2-table-min"},
       g3_table},
      {{"thm-5.3-order", "thm-5.3-rep4-faithful", "thm-5.3-rep4-irreducible", "thm-5.3-rep4-non-real",
        "thm-5.3-rep6-faithful", "thm-5.3-rep6-dimension", "thm-5.3-subgroup-bound", "thm-5.3-decorated"},
       exceptional},
  };
  return g;
}

bool selected(const std::vector<std::string>& filters, const std::string& id) {
  if (filters.empty()) return true;
  return std::any_of(filters.begin(), filters.end(), [&](const std::string& f) { return id_matches(f, id); });
}

}  // namespace

std::vector<std::string> replib_check_ids() {
  std::vector<std::string> out;
  for (const auto& g : groups()) out.insert(out.end(), g.ids.begin(), g.ids.end());
  std::sort(out.begin(), out.end());
  return out;
}

VerificationReport verify_replib_suite(const ReplibSuiteOptions& options, const std::vector<std::string>& filters) {
  VerificationReport full;
  std::uint64_t index = 100;
  for (const auto& g : groups()) {
    ++index;
    if (std::none_of(g.ids.begin(), g.ids.end(), [&](const std::string& id) { return selected(filters, id); })) {
      continue;
    }
    VerificationReport part;
    Context ctx{options, part, std::mt19937_64(options.seed * 1000003ULL + index)};
    try {
      g.run(ctx);
    } catch (const std::exception& e) {
      for (const auto& id : g.ids) {
        if (part.find(id) == nullptr) part.add(Check{id, "check raised an exception", false, "no error", e.what(), ""});
      }
    }
    for (const auto& c : part.checks()) {
      if (selected(filters, c.id)) full.add(c);
    }
  }
  return full;
}

}  // namespace cubegroup
