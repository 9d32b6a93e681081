#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "cubegroup/errors.hpp"
#include "cubegroup/structure.hpp"

namespace cubegroup {

namespace {

constexpr std::array<const char*, 6> kPhiListing = {"(1342)", "(5687)", "(1265)", "(3784)", "(1573)", "(2486)"};
constexpr std::array<const char*, 6> kAlphaEdgeListing = {"(abcd)", "(ilkj)", "(cgkh)", "(aeif)", "(dhle)", "(bfjg)"};

std::string corners(const Permutation& p) { return to_cycle_string(p, LabelStyle::Digits); }
std::string edges(const Permutation& p) { return to_cycle_string(p, LabelStyle::Letters); }
std::string pair_string(const Permutation& e, const Permutation& c) { return "(" + edges(e) + "," + corners(c) + ")"; }

std::string failures(std::size_t bad, std::size_t total) {
  return std::to_string(bad) + " failures in " + std::to_string(total);
}

struct Context {
  const StructureSuiteOptions& opt;
  VerificationReport& report;
  std::mt19937_64 rng;

  CubeState run2(const MoveWord& w) const { return CubeState::solved(2).apply(w, opt.tables2); }
  CubeState run3(const MoveWord& w) const { return CubeState::solved(3).apply(w, opt.tables3); }
  MoveWord word(std::size_t length) { return random_word(rng, length); }
  std::size_t many() const { return std::max<std::size_t>(opt.trials * 10, 1); }
  std::size_t pairs() const { return std::max<std::size_t>(opt.trials, 1); }
  std::size_t few() const { return std::max<std::size_t>(opt.trials / 10, 100); }

  void check(std::string id, std::string claim, std::string expected, std::string actual, std::string ref) {
    report.add(std::move(id), std::move(claim), std::move(expected), std::move(actual), std::move(ref));
  }
  // Counts predicate failures over n trials; exceptions count as failures.
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

G2Element encode2(const Context& ctx, const MoveWord& w) { return encode_g2(ctx.run2(w)); }
G3Element encode3(const Context& ctx, const MoveWord& w) { return encode_g3(ctx.run3(w)); }

Permutation random_perm(std::mt19937_64& rng, std::size_t n) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(i);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(std::move(images));
}

OrientationVector random_sum_zero(std::mt19937_64& rng, int k, std::size_t m) {
  std::uniform_int_distribution<int> dist(0, k - 1);
  std::vector<int> v(m);
  int sum = 0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    v[i] = dist(rng);
    sum += v[i];
  }
  v[m - 1] = (k - sum % k) % k;
  return OrientationVector(k, std::move(v), true);
}

G2Element random_g2(std::mt19937_64& rng) { return G2Element{random_sum_zero(rng, 3, kCorners), random_perm(rng, kCorners)}; }

// Number of faces shared by two corner positions (2 adjacent, 1 face diagonal, 0 long diagonal).
int shared_faces(int i, int j) {
  const auto& geo = geometry(2);
  int shared = 0;
  for (auto a : geo.corner_facelets[i]) {
    for (auto b : geo.corner_facelets[j]) shared += geo.sticker_face[a] == geo.sticker_face[b];
  }
  return shared;
}

// ---------------------------------------------------------------------------
// 2x2

void generator_tables_2(Context& ctx) {
  std::string signs_expected, signs_actual;
  for (int f = 0; f < 6; ++f) {
    const Permutation p = phi(MoveWord::generator(kFaces[f]), ctx.opt.tables2);
    ctx.check(std::string("eq-2.1-phi-") + face_letter(kFaces[f]),
              std::string("corner permutation of ") + face_letter(kFaces[f]) + " on the 2x2 matches the listing",
              kPhiListing[f], corners(p), "corner quotient map on the generators");
    signs_expected += (f ? "," : "") + std::string("-1");
    signs_actual += (f ? "," : "") + std::to_string(sign(p));
  }
  ctx.check("eq-2.1-phi-odd", "every generator acts on the corners by an odd permutation", signs_expected,
            signs_actual, "corner quotient map on the generators");
}

void transpositions(Context& ctx) {
  const auto t = build_transpositions();
  const Permutation l = perm_from_cycles(kPhiListing[4], kCorners);
  const Permutation t1 = perm_from_cycles("(34)", kCorners);
  ctx.check("prop-2.2-t1", "t1 = u^-1 g2 transposes corners 3 and 4", "(34)", corners(phi(t.t1, ctx.opt.tables2)),
            "corner quotient map is surjective");
  ctx.check("prop-2.2-t2", "t2 = l t1 l^-1 acts as the conjugate of (34) by phi(l)", corners(conjugate(l, t1)),
            corners(phi(t.t2, ctx.opt.tables2)), "corner quotient map is surjective");
  ctx.check("prop-2.2-t3", "t3 = l^2 t1 l^-2 acts as the conjugate of (34) by phi(l)^2",
            corners(conjugate(compose(l, l), t1)), corners(phi(t.t3, ctx.opt.tables2)),
            "corner quotient map is surjective");
  std::vector<int> classes;
  for (const MoveWord* w : {&t.t1, &t.t2, &t.t3}) {
    const auto cyc = phi(*w, ctx.opt.tables2).cycles();
    classes.push_back(cyc.size() == 1 && cyc[0].size() == 2 ? shared_faces(cyc[0][0], cyc[0][1]) : -1);
  }
  std::sort(classes.begin(), classes.end());
  ctx.check("prop-2.2-transposition-classes",
            "t1, t2, t3 swap an adjacent pair, a face diagonal and a long diagonal (shared faces 2, 1, 0)", "0,1,2",
            std::to_string(classes[0]) + "," + std::to_string(classes[1]) + "," + std::to_string(classes[2]),
            "corner quotient map is surjective");
  std::vector<Permutation> gens;
  for (Face f : kFaces) gens.push_back(phi(MoveWord::generator(f), ctx.opt.tables2));
  ctx.check("prop-2.2-surjective", "the corner images of the generators generate S_8", "40320",
            StabilizerChain::build(gens, kCorners).order().to_string(), "corner quotient map is surjective");
}

void invariant_s(Context& ctx) {
  const std::size_t n = ctx.many();
  const std::size_t bad = ctx.count_failures(n, [&] { return invariant_s(ctx.run2(ctx.word(100))) == 0; });
  ctx.check("prop-2.4-invariant-s", "s = [0] after random 100-move words on the 2x2", failures(0, n),
            failures(bad, n), "corner orientation invariant s");

  const std::size_t m = ctx.few();
  const std::size_t bad_basis = ctx.count_failures(m, [&] {
    const CubeState s = ctx.run2(ctx.word(40));
    return corner_orientation(s, random_basis(ctx.rng)).sum() == corner_orientation(s, random_basis(ctx.rng)).sum();
  });
  ctx.check("prop-2.4-basis-independence", "the corner orientation sum agrees across random bases", failures(0, m),
            failures(bad_basis, m), "corner orientation invariant s");

  std::vector<int> twist(kCorners, 0);
  twist[std::uniform_int_distribution<int>(0, 7)(ctx.rng)] = 1;
  ctx.check("prop-2.4-single-twist", "a single corner twisted once in place has s = [1]", "1",
            std::to_string(invariant_s(twist_corners_in_place(CubeState::solved(2), twist))),
            "corner orientation invariant s");
}

void conjugation_law_2(Context& ctx) {
  const std::size_t n = ctx.pairs();
  const std::size_t bad = ctx.count_failures(n, [&] {
    const Face f = kFaces[std::uniform_int_distribution<int>(0, 5)(ctx.rng)];
    const MoveWord g = MoveWord::generator(f);
    const OrientationVector k = random_sum_zero(ctx.rng, 3, kCorners);
    // g k g^-1: g^-1 first, then the in-place twist k, then g.
    CubeState s = ctx.run2(g.inverse());
    s = twist_corners_in_place(s, k.entries()).apply(g, ctx.opt.tables2);
    return corner_permutation(s).is_identity() &&
           corner_orientation(s, reference_basis()) == k.permuted(phi(g, ctx.opt.tables2));
  });
  ctx.check("eq-2.5-conjugation", "g k g^-1 = (k_{s^-1(1)}, ..., k_{s^-1(8)}) for generators g and twists k",
            failures(0, n), failures(bad, n), "conjugation action on corner twists");

  const G2Element k{OrientationVector(3, {1, 2, 0, 0, 0, 0, 0, 0}, true), Permutation(kCorners)};
  const G2Element nn{OrientationVector::zero(3, kCorners, true), perm_from_cycles("(123)", kCorners)};
  const G2Element conj = g2_mul(g2_mul(nn, k), g2_inverse(nn));
  ctx.check("eq-2.5-example", "n k n^-1 for phi(n) = (123), k = ([1],[2],[0],...)",
            "([0], [1], [2], [0], [0], [0], [0], [0])", conj.twist.to_string(),
            "conjugation action on corner twists");
  const G2Element comm = g2_mul(conj, g2_inverse(k));
  ctx.check("prop-2.10-commutator", "n k n^-1 k^-1 = ([2],[2],[2],[0],...) lies in K",
            "([2], [2], [2], [0], [0], [0], [0], [0]) ()", comm.twist.to_string() + " " + corners(comm.perm),
            "a normal subgroup mapping onto S_8 is everything");
}

void k_maximal(Context& ctx) {
  try {
    const G2Element k = encode2(ctx, seed_word());
    ctx.check("prop-2.7-k-word", "the word k fixes every corner position and twists some corner",
              "perm (), twist nonzero, sum 0",
              "perm " + corners(k.perm) + ", twist " + (k.twist.is_zero() ? "zero" : "nonzero") + ", sum " +
                  std::to_string(k.twist.sum()),
              "K is the full sum-zero twist group");
    std::vector<Permutation> gens;
    for (Face f : kFaces) gens.push_back(phi(MoveWord::generator(f), ctx.opt.tables2));
    ctx.check("prop-2.7-k-maximal", "conjugates of k span a rank-7 subgroup of Z_3^8, so K = Z_{3,0}^8", "7",
              std::to_string(orbit_span_rank(k.twist, gens)), "K is the full sum-zero twist group");
  } catch (const std::exception& e) {
    ctx.check("prop-2.7-k-word", "the word k fixes every corner position and twists some corner",
              "perm (), twist nonzero, sum 0", std::string("error: ") + e.what(), "K is the full sum-zero twist group");
    ctx.check("prop-2.7-k-maximal", "conjugates of k span a rank-7 subgroup of Z_3^8, so K = Z_{3,0}^8", "7",
              std::string("error: ") + e.what(), "K is the full sum-zero twist group");
  }
}

void splitting_2(Context& ctx) {
  const std::size_t n = ctx.pairs();
  const std::size_t bad = ctx.count_failures(n, [&] {
    const MoveWord w1 = ctx.word(30), w2 = ctx.word(30);
    return encode2(ctx, word_product(w1, w2)) == g2_mul(encode2(ctx, w1), encode2(ctx, w2));
  });
  ctx.check("prop-2.8-split-hom", "encode(w1 w2) = encode(w1) encode(w2) in K x| S_8", failures(0, n),
            failures(bad, n), "K -> G2 -> S8 is split");

  const StabilizerChain chain = build_chain(ctx.opt.tables2);
  const std::size_t m = ctx.few();
  const std::size_t bad_section = ctx.count_failures(m, [&] {
    const G2Element h{OrientationVector::zero(3, kCorners, true), random_perm(ctx.rng, kCorners)};
    const CubeState s = decode_g2(h);
    return encode_g2(s) == h && chain.contains(sticker_permutation(s));
  });
  ctx.check("prop-2.8-section", "orientation-preserving elements (0, s) are reachable states for random s",
            failures(0, m), failures(bad_section, m), "K -> G2 -> S8 is split");

  ctx.check("prop-2.8-order-cosets", "|G2| = 3^dim(K) * |phi(G2)|", "88179840",
            g2_order_by_cosets(ctx.opt.tables2).to_string(), "K -> G2 -> S8 is split");
  ctx.check("prop-2.8-order-stickers", "|G2| from a stabilizer chain on the 24 stickers", "88179840",
            chain.order().to_string(), "K -> G2 -> S8 is split");
}

void normal_subgroups_2(Context& ctx) {
  const std::size_t n = ctx.few();
  const MoveWord k = seed_word();
  const std::size_t bad_k = ctx.count_failures(n, [&] {
    const MoveWord g = ctx.word(20);
    return membership(SubgroupTag::K, encode2(ctx, word_conjugate(g, k)));
  });
  ctx.check("prop-2.9-normal-K", "conjugates of k by random words stay in K", failures(0, n), failures(bad_k, n),
            "a normal subgroup with trivial corner image is K");

  const std::size_t bad_l = ctx.count_failures(n, [&] {
    const MoveWord x = ctx.word(2 * std::uniform_int_distribution<int>(1, 10)(ctx.rng));
    const MoveWord g = ctx.word(15);
    bool even = true;
    for (const Move& mv : x.moves()) even ^= (mv.turns % 2 == 1);
    return membership(SubgroupTag::L, encode2(ctx, word_conjugate(g, x))) == even;
  });
  ctx.check("prop-2.11-normal-L", "an element lies in L exactly when its word has an even number of quarter turns",
            failures(0, n), failures(bad_l, n), "a normal subgroup mapping onto A_8 is L");

  const auto& gens = ctx.opt.tables2.generators;
  ctx.check("prop-2.11-abelianization", "the commutator subgroup of G2 has index 2", "44089920",
            derived_subgroup_order(gens, gens[0].degree()).to_string(), "abelianization of G2 is Z_2");

  const auto center = g2_center_structural();
  const auto sticker_center = center_elements(gens, build_chain(ctx.opt.tables2));
  ctx.check("prop-2.11-centerless", "the center of K x| S_8 and of the sticker group are trivial", "1 1",
            std::to_string(center.size()) + " " + std::to_string(sticker_center.size()), "G2 is centerless");
}

// ---------------------------------------------------------------------------
// 3x3

void generator_tables_3(Context& ctx) {
  std::string signs_expected, signs_actual;
  for (int f = 0; f < 6; ++f) {
    const auto [e, c] = alpha(MoveWord::generator(kFaces[f]), ctx.opt.tables3);
    const std::string expected = std::string("(") + kAlphaEdgeListing[f] + "," + kPhiListing[f] + ")";
    ctx.check(std::string("eq-3.1-alpha-") + face_letter(kFaces[f]),
              std::string("edge and corner permutations of ") + face_letter(kFaces[f]) + " on the 3x3 match the listing",
              expected, pair_string(e, c), "edge and corner map on the generators");
    signs_expected += (f ? "," : "") + std::string("-1/-1");
    signs_actual += (f ? "," : "") + std::to_string(sign(e)) + "/" + std::to_string(sign(c));
  }
  ctx.check("eq-3.1-alpha-odd", "both factors of every generator image are odd", signs_expected, signs_actual,
            "edge and corner map on the generators");
}

void edge_seed(Context& ctx) {
  const auto [e, c] = alpha(seed_word(), ctx.opt.tables3);
  ctx.check("prop-3.2-h", "alpha(h) = ((abc), 1)", "((abc),())", pair_string(e, c), "edge 3-cycle seed move");
  const CubeState s3 = ctx.run3(seed_word());
  const CubeState s2 = ctx.run2(psi(seed_word()));
  ctx.check("prop-3.2-psi", "h and psi(h) act identically on the corners",
            corner_orientation(s2, reference_basis()).to_string() + " " + corners(corner_permutation(s2)),
            corner_orientation(s3, reference_basis()).to_string() + " " + corners(corner_permutation(s3)),
            "edge 3-cycle seed move");
  ctx.check("prop-3.2-h-twists", "h twists the corners in place, so h is not in N", "false",
            corner_orientation(s3, reference_basis()).is_zero() ? "true" : "false", "edge 3-cycle seed move");
}

void grows_a12(Context& ctx) {
  const auto& builder = edge_cycles();
  const auto [h1, h2] = builder.seed_pair();
  ctx.check("prop-3.3-seed", "beta(h1) = (abc), beta(h2) = (afe), beta([h1, h2]) = (abf)", "(abc) (afe) (abf)",
            edges(beta(h1, ctx.opt.tables3)) + " " + edges(beta(h2, ctx.opt.tables3)) + " " +
                edges(beta(word_commutator(h1, h2), ctx.opt.tables3)),
            "beta(N) contains A_12");

  std::size_t bad = 0;
  std::vector<Permutation> images;
  for (const auto& [key, w] : builder.words()) {
    try {
      const G3Element x = encode3(ctx, w);
      const Permutation target = perm_from_cycles({{key[0] + 1, key[1] + 1, key[2] + 1}}, kEdges);
      if (!(x.edge_perm == target && membership(SubgroupTag::N, x) && sign(x.edge_perm) == 1)) ++bad;
      images.push_back(x.edge_perm);
    } catch (const std::exception&) {
      ++bad;
    }
  }
  ctx.check("prop-3.3-three-cycles", "every word from the growing procedure is in N and realizes its 3-cycle",
            failures(0, 440), failures(bad, builder.size()), "beta(N) contains A_12");
  ctx.check("cor-3.5-a12", "the 3-cycles produced generate a group of order 12!/2", "239500800",
            images.empty() ? "0" : StabilizerChain::build(images, kEdges).order().to_string(), "beta(N) = A_12");

  const std::size_t n = ctx.few();
  const std::size_t bad_normal = ctx.count_failures(n, [&] {
    const auto& words = builder.words();
    auto it = words.begin();
    std::advance(it, std::uniform_int_distribution<std::size_t>(0, words.size() - 1)(ctx.rng));
    return membership(SubgroupTag::N, encode3(ctx, word_conjugate(ctx.word(20), it->second)));
  });
  ctx.check("prop-3.3-normal-N", "conjugates of elements of N by random words stay in N", failures(0, n),
            failures(bad_normal, n), "beta(N) contains A_12");
}

void match_sign(Context& ctx) {
  const std::size_t n = ctx.pairs();
  const std::size_t bad = ctx.count_failures(n, [&] {
    const auto [e, c] = alpha(ctx.word(60), ctx.opt.tables3);
    return sign(e) == sign(c);
  });
  ctx.check("prop-3.4-match-sign", "the two factors of alpha(g) have the same sign for random g", failures(0, n),
            failures(bad, n), "edge and corner permutations have matching signs");
}

void invariant_t(Context& ctx) {
  const std::size_t n = ctx.many();
  const std::size_t bad = ctx.count_failures(n, [&] {
    const CubeState s = ctx.run3(ctx.word(100));
    return invariant_t(s) == 0 && invariant_s(s) == 0;
  });
  ctx.check("prop-3.7-invariant-t", "s = [0] and t = [0] after random 100-move words on the 3x3", failures(0, n),
            failures(bad, n), "edge orientation invariant t");
  const std::size_t m = ctx.few();
  const std::size_t bad_basis = ctx.count_failures(m, [&] {
    const CubeState s = ctx.run3(ctx.word(40));
    const OrientationBasis b1 = random_basis(ctx.rng), b2 = random_basis(ctx.rng);
    return edge_orientation(s, b1).sum() == edge_orientation(s, b2).sum() &&
           corner_orientation(s, b1).sum() == corner_orientation(s, b2).sum();
  });
  ctx.check("prop-3.7-basis-independence", "edge and corner orientation sums agree across random bases",
            failures(0, m), failures(bad_basis, m), "edge orientation invariant t");
  std::vector<int> flips(kEdges, 0);
  flips[std::uniform_int_distribution<int>(0, 11)(ctx.rng)] = 1;
  ctx.check("prop-3.7-single-flip", "a single edge flipped in place has t = [1]", "1",
            std::to_string(invariant_t(flip_edges_in_place(CubeState::solved(3), flips))),
            "edge orientation invariant t");
}

void conjugation_law_3(Context& ctx) {
  const std::size_t n = ctx.pairs();
  const std::size_t bad = ctx.count_failures(n, [&] {
    const MoveWord g = MoveWord::generator(kFaces[std::uniform_int_distribution<int>(0, 5)(ctx.rng)]);
    const OrientationVector m = random_sum_zero(ctx.rng, 2, kEdges);
    CubeState s = ctx.run3(g.inverse());
    s = flip_edges_in_place(s, m.entries()).apply(g, ctx.opt.tables3);
    return edge_permutation(s).is_identity() &&
           edge_orientation(s, reference_basis()) == m.permuted(beta(g, ctx.opt.tables3));
  });
  ctx.check("eq-3.8-conjugation", "g m g^-1 = (m_{s^-1(a)}, ..., m_{s^-1(l)}) for generators g and flips m",
            failures(0, n), failures(bad, n), "conjugation action on edge flips");
}

void m_maximal(Context& ctx) {
  const MoveWord m = build_m();
  G3Element x;
  try {
    x = encode3(ctx, m);
  } catch (const std::exception& e) {
    ctx.check("prop-3.9-m", "alpha(m) = (1, 1) and m flips exactly edges c and g", "((),()) flips cg",
              std::string("error: ") + e.what(), "M is the full sum-zero flip group");
    return;
  }
  std::string flipped;
  for (std::size_t i = 0; i < kEdges; ++i) {
    if (x.flip[i] != 0) flipped.push_back(static_cast<char>('a' + i));
  }
  ctx.check("prop-3.9-m", "alpha(m) = (1, 1) and m flips exactly edges c and g", "((),()) flips cg",
            pair_string(x.edge_perm, x.corner_perm) + " flips " + flipped + (x.twist.is_zero() ? "" : " twisted"),
            "M is the full sum-zero flip group");

  // q_x = flips at {a, x}: conjugate m by a 3-cycle word moving {c, g} onto {a, x}.
  std::vector<std::vector<int>> basis;
  std::size_t bad = 0;
  for (int target = 1; target < 12; ++target) {
    std::optional<MoveWord> conj;
    for (const auto& [key, w] : edge_cycles().words()) {
      const Permutation p = perm_from_cycles({{key[0] + 1, key[1] + 1, key[2] + 1}}, kEdges);
      const std::set<int> image = {p(2), p(6)};
      if (image == std::set<int>{0, target}) {
        conj = word_conjugate(w, m);
        break;
      }
    }
    if (!conj) {
      for (const auto& [k1, w1] : edge_cycles().words()) {
        for (const auto& [k2, w2] : edge_cycles().words()) {
          const Permutation p = compose(perm_from_cycles({{k1[0] + 1, k1[1] + 1, k1[2] + 1}}, kEdges),
                                        perm_from_cycles({{k2[0] + 1, k2[1] + 1, k2[2] + 1}}, kEdges));
          if (std::set<int>{p(2), p(6)} == std::set<int>{0, target}) {
            conj = word_conjugate(word_product(w1, w2), m);
            break;
          }
        }
        if (conj) break;
      }
    }
    try {
      const G3Element q = encode3(ctx, *conj);
      std::vector<int> expected(kEdges, 0);
      expected[0] = expected[target] = 1;
      if (!membership(SubgroupTag::M, q) || q.flip.entries() != expected) ++bad;
      basis.push_back(q.flip.entries());
    } catch (const std::exception&) {
      ++bad;
    }
  }
  std::size_t rank = 0;
  {
    // Rank over Z_2 of the q_x vectors.
    std::vector<std::vector<int>> rows = basis;
    for (std::size_t c = 0; c < kEdges; ++c) {
      auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                             [c](const auto& r) { return r[c] % 2 != 0; });
      if (it == rows.end()) continue;
      std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), it);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r != rank && rows[r][c] % 2 != 0) {
          for (std::size_t k = 0; k < kEdges; ++k) rows[r][k] = (rows[r][k] + rows[rank][k]) % 2;
        }
      }
      ++rank;
    }
  }
  ctx.check("prop-3.9-m-maximal", "conjugates of m give all q_x (x != a), spanning Z_{2,0}^12",
            "11 of 11 q_x, rank 11",
            std::to_string(11 - bad) + " of 11 q_x, rank " + std::to_string(rank), "M is the full sum-zero flip group");

  const std::size_t n = ctx.few();
  const std::size_t bad_normal = ctx.count_failures(n, [&] {
    return membership(SubgroupTag::M, encode3(ctx, word_conjugate(ctx.word(20), m)));
  });
  ctx.check("prop-3.9-normal-M", "conjugates of m by random words stay in M", failures(0, n), failures(bad_normal, n),
            "M is the full sum-zero flip group");
}

// A word in L: h times a word in N undoing its edge cycle, (abc)(acb) = 1.
std::optional<MoveWord> corner_only_word(const Context& ctx) {
  const MoveWord w = word_product(seed_word(), edge_three_cycle(0, 2, 1));
  const G3Element x = encode3(ctx, w);
  if (membership(SubgroupTag::L, x) && !x.twist.is_zero()) return w;
  return std::nullopt;
}

void l_isom_k(Context& ctx) {
  const StabilizerChain chain = build_chain(ctx.opt.tables3);
  const std::size_t n = ctx.few();
  const std::size_t bad = ctx.count_failures(n, [&] {
    const OrientationVector k = random_sum_zero(ctx.rng, 3, kCorners);
    const G3Element l{OrientationVector::zero(2, kEdges, true), k, Permutation(kEdges), Permutation(kCorners)};
    const CubeState s = decode_g3(l);
    const Permutation p = sticker_permutation(s);
    return CubeState::solved(3).apply_permutation(p) == s && chain.contains(p) && membership(SubgroupTag::L, l) &&
           psi(l) == G2Element{k, Permutation(kCorners)} && membership(SubgroupTag::K, psi(l));
  });
  ctx.check("prop-3.10-l-isom-k", "every sum-zero corner twist is realized in G3 with edges untouched and maps onto K",
            failures(0, n), failures(bad, n), "L is isomorphic to K");
}

void splitting_3(Context& ctx) {
  const std::size_t n = ctx.pairs();
  const std::size_t bad = ctx.count_failures(n, [&] {
    const MoveWord w1 = ctx.word(30), w2 = ctx.word(30);
    return encode3(ctx, word_product(w1, w2)) == g3_mul(encode3(ctx, w1), encode3(ctx, w2));
  });
  ctx.check("prop-3.11-split-hom", "encode(w1 w2) = encode(w1) encode(w2) in J x| P", failures(0, n),
            failures(bad, n), "J -> G3 -> P is split");

  const auto l = corner_only_word(ctx);
  const MoveWord m = build_m();
  const std::size_t m_trials = ctx.few();
  const std::size_t bad_j = !l ? m_trials : ctx.count_failures(m_trials, [&] {
    const MoveWord g = ctx.word(20);
    return membership(SubgroupTag::J, encode3(ctx, word_conjugate(g, m))) &&
           membership(SubgroupTag::J, encode3(ctx, word_conjugate(g, *l))) &&
           membership(SubgroupTag::L, encode3(ctx, word_conjugate(g, *l)));
  });
  ctx.check("prop-3.11-normal-J", "conjugates of elements of J and L by random words stay in J and L",
            failures(0, m_trials), failures(bad_j, m_trials), "J -> G3 -> P is split");
}

void section(Context& ctx) {
  const StabilizerChain chain = build_chain(ctx.opt.tables3);
  const std::size_t n = ctx.pairs();
  const std::size_t bad_hom = ctx.count_failures(n, [&] {
    const G2Element x = random_g2(ctx.rng), y = random_g2(ctx.rng);
    const G3Element sx = section_g2_in_g3(x);
    return section_g2_in_g3(g2_mul(x, y)) == g3_mul(sx, section_g2_in_g3(y)) && psi(sx) == x;
  });
  ctx.check("thm-3.12-hom", "the section is a homomorphism and psi(section(x)) = x", failures(0, n),
            failures(bad_hom, n), "G2 embeds in G3");

  std::size_t bad_gen = 0;
  for (Face f : kFaces) {
    const G2Element g = encode2(ctx, MoveWord::generator(f));
    if (!(psi(section_g2_in_g3(g)) == g)) ++bad_gen;
  }
  ctx.check("thm-3.12-psi-section", "psi o section is the identity on the six generators", failures(0, 6),
            failures(bad_gen, 6), "G2 embeds in G3");

  // Decoded section elements must be reachable sticker states.
  const std::size_t m = ctx.few();
  const std::size_t bad_member = ctx.count_failures(m, [&] {
    const G3Element s = section_g2_in_g3(random_g2(ctx.rng));
    const CubeState state = decode_g3(s);
    return membership(SubgroupTag::S, G3Element{s.flip, OrientationVector::zero(3, kCorners, true), s.edge_perm,
                                                s.corner_perm}) &&
           pair_chain().contains(direct_sum(s.edge_perm, s.corner_perm)) && encode_g3(state) == s;
  });
  ctx.check("thm-3.12-in-p", "sign-map pairs (sign_map(s), s) lie in P and section elements decode to valid states",
            failures(0, m), failures(bad_member, m), "G2 embeds in G3");

  const G2Element r2 = encode2(ctx, MoveWord::generator(Face::R));
  const G3Element image = section_g2_in_g3(r2);
  ctx.check("thm-3.12-r2", "the section of r2 acts as r2 on the corners and swaps edges b and c",
            "(2486) (bc) " + r2.twist.to_string() + " flips 0",
            corners(image.corner_perm) + " " + edges(image.edge_perm) + " " + image.twist.to_string() + " flips " +
                (image.flip.is_zero() ? "0" : "nonzero"),
            "G2 embeds in G3");

  const std::size_t bad_even = ctx.count_failures(m, [&] {
    G2Element x = random_g2(ctx.rng);
    if (sign(x.perm) == -1) x.perm = compose(perm_from_cycles("(12)", kCorners), x.perm);
    const G3Element s = section_g2_in_g3(x);
    return s.edge_perm.is_identity() && s.flip.is_zero();
  });
  ctx.check("thm-3.12-even-fixes-edges", "for even corner permutations the section fixes the edges completely",
            failures(0, m), failures(bad_even, m), "G2 embeds in G3");

  const std::size_t bad_chain = ctx.count_failures(m, [&] {
    const CubeState state = decode_g3(section_g2_in_g3(random_g2(ctx.rng)));
    return chain.contains(sticker_permutation(state));
  });
  ctx.check("thm-3.12-in-g3", "sticker permutations of section elements are members of the 48-sticker group",
            failures(0, m), failures(bad_chain, m), "G2 embeds in G3");
}

void orders_3(Context& ctx) {
  std::vector<Permutation> gens;
  for (Face f : kFaces) {
    const auto [e, c] = alpha(MoveWord::generator(f), ctx.opt.tables3);
    gens.push_back(direct_sum(e, c));
  }
  const StabilizerChain pairs = StabilizerChain::build(gens, kEdges + kCorners);
  ctx.check("prop-3.13-order-P", "|P| = 12! 8! / 2 from a chain on 20 points", "9656672256000",
            pairs.order().to_string(), "P = (A_12 x A_8) x| Z_2");
  std::size_t bad = 0;
  std::mt19937_64& rng = ctx.rng;
  const std::size_t n = ctx.few();
  for (std::size_t i = 0; i < n; ++i) {
    const Permutation e = random_perm(rng, kEdges), c = random_perm(rng, kCorners);
    if (pairs.contains(direct_sum(e, c)) != (sign(e) == sign(c))) ++bad;
  }
  ctx.check("prop-3.13-membership", "a random pair lies in P exactly when its signs agree", failures(0, n),
            failures(bad, n), "P = (A_12 x A_8) x| Z_2");
  const BigCount expected = BigCount::power(2, 11) * BigCount::power(3, 7) * BigCount::factorial(12) *
                            BigCount::factorial(8).exact_div(2);
  ctx.check("prop-3.13-order-g3", "|G3| = 2^11 3^7 12! 8! / 2 from a chain on the 48 stickers", expected.to_string(),
            build_chain(ctx.opt.tables3).order().to_string(), "J -> G3 -> P is split");
}

void center_3(Context& ctx) {
  const auto& gens = ctx.opt.tables3.generators;
  const StabilizerChain chain = build_chain(ctx.opt.tables3);
  const auto center = center_elements(gens, chain);
  std::vector<int> all(kEdges, 1);
  const CubeState superflip = flip_edges_in_place(CubeState::solved(3), all);
  std::string actual = std::to_string(center.size()) + " elements";
  for (const auto& c : center) {
    if (c.is_identity()) {
      actual += ", identity";
    } else if (CubeState::solved(3).apply_permutation(c) == superflip) {
      actual += ", superflip";
    } else {
      actual += ", other";
    }
  }
  ctx.check("thm-5.2-center", "the center of G3 is {1, superflip}", "2 elements, identity, superflip", actual,
            "center of G3 is Z_2");
}

struct Group {
  std::vector<std::string> ids;
  void (*run)(Context&);
};

std::vector<std::string> face_ids(const std::string& prefix) {
  std::vector<std::string> out;
  for (Face f : kFaces) out.push_back(prefix + face_letter(f));
  return out;
}

const std::vector<Group>& groups() {
  static const std::vector<Group> g = [] {
    std::vector<Group> out;
    auto ids21 = face_ids("eq-2.1-phi-");
    ids21.push_back("eq-2.1-phi-odd");
    out.push_back({ids21, generator_tables_2});
    out.push_back({{"prop-2.2-t1", "prop-2.2-t2", "prop-2.2-t3", "prop-2.2-transposition-classes",
                    "prop-2.2-surjective"},
                   transpositions});
    out.push_back({{"prop-2.4-invariant-s", "prop-2.4-basis-independence", "prop-2.4-single-twist"}, invariant_s});
    out.push_back({{"eq-2.5-conjugation", "eq-2.5-example", "prop-2.10-commutator"}, conjugation_law_2});
    out.push_back({{"prop-2.7-k-word", "prop-2.7-k-maximal"}, k_maximal});
    out.push_back({{"prop-2.8-split-hom", "prop-2.8-section", "prop-2.8-order-cosets", "prop-2.8-order-stickers"},
                   splitting_2});
    out.push_back({{"prop-2.9-normal-K", "prop-2.11-normal-L", "prop-2.11-abelianization", "prop-2.11-centerless"},
                   normal_subgroups_2});
    auto ids31 = face_ids("eq-3.1-alpha-");
    ids31.push_back("eq-3.1-alpha-odd");
    out.push_back({ids31, generator_tables_3});
    out.push_back({{"prop-3.2-h", "prop-3.2-psi", "prop-3.2-h-twists"}, edge_seed});
    out.push_back({{"prop-3.3-seed", "prop-3.3-three-cycles", "cor-3.5-a12", "prop-3.3-normal-N"}, grows_a12});
    out.push_back({{"prop-3.4-match-sign"}, match_sign});
    out.push_back({{"prop-3.7-invariant-t", "prop-3.7-basis-independence", "prop-3.7-single-flip"}, invariant_t});
    out.push_back({{"eq-3.8-conjugation"}, conjugation_law_3});
    out.push_back({{"prop-3.9-m", "prop-3.9-m-maximal", "prop-3.9-normal-M"}, m_maximal});
    out.push_back({{"prop-3.10-l-isom-k"}, l_isom_k});
    out.push_back({{"prop-3.11-split-hom", "prop-3.11-normal-J"}, splitting_3});
    out.push_back({{"thm-3.12-hom", "thm-3.12-psi-section", "thm-3.12-in-p", "thm-3.12-r2",
                    "thm-3.12-even-fixes-edges", "thm-3.12-in-g3"},
                   section});
    out.push_back({{"prop-3.13-order-P", "prop-3.13-membership", "prop-3.13-order-g3"}, orders_3});
    out.push_back({{"thm-5.2-center"}, center_3});
    return out;
  }();
  return g;
}

bool selected(const std::vector<std::string>& filters, const std::string& id) {
  if (filters.empty()) return true;
  return std::any_of(filters.begin(), filters.end(), [&](const std::string& f) { return id_matches(f, id); });
}

}  // namespace

std::vector<std::string> structure_check_ids() {
  std::vector<std::string> out;
  for (const auto& g : groups()) out.insert(out.end(), g.ids.begin(), g.ids.end());
  std::sort(out.begin(), out.end());
  return out;
}

VerificationReport verify_structure_suite(const StructureSuiteOptions& options,
                                          const std::vector<std::string>& filters) {
  VerificationReport full;
  std::uint64_t index = 0;
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
