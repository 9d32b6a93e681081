#include "cubegroup/structure.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cubegroup/errors.hpp"

namespace cubegroup {

// ---------------------------------------------------------------------------
// Words as group elements

MoveWord word_product(const MoveWord& x, const MoveWord& y) { return y.then(x).reduced(); }

MoveWord word_product(std::initializer_list<MoveWord> factors) {
  MoveWord out;
  for (const auto& f : factors) out = word_product(out, f);
  return out;
}

MoveWord word_commutator(const MoveWord& x, const MoveWord& y) {
  return y.inverse().then(x.inverse()).then(y).then(x).reduced();
}

MoveWord word_conjugate(const MoveWord& x, const MoveWord& y) {
  return x.inverse().then(y).then(x).reduced();
}

// ---------------------------------------------------------------------------
// Homomorphisms

Permutation phi(const MoveWord& w, const MoveTables& tables2) {
  return corner_permutation(CubeState::solved(tables2.size).apply(w, tables2));
}

MoveWord psi(const MoveWord& w) { return w; }

std::pair<Permutation, Permutation> alpha(const MoveWord& w, const MoveTables& tables3) {
  const CubeState s = CubeState::solved(3).apply(w, tables3);
  return {edge_permutation(s), corner_permutation(s)};
}

Permutation beta(const MoveWord& w, const MoveTables& tables3) {
  return edge_permutation(CubeState::solved(3).apply(w, tables3));
}

// ---------------------------------------------------------------------------
// Semidirect models

G2Element G2Element::identity() {
  return G2Element{OrientationVector::zero(3, kCorners, true), Permutation(kCorners)};
}

G3Element G3Element::identity() {
  return G3Element{OrientationVector::zero(2, kEdges, true), OrientationVector::zero(3, kCorners, true),
                   Permutation(kEdges), Permutation(kCorners)};
}

bool G3Element::valid() const {
  return flip.sum() == 0 && twist.sum() == 0 && sign(edge_perm) == sign(corner_perm);
}

G2Element g2_mul(const G2Element& x, const G2Element& y) {
  return G2Element{x.twist + y.twist.permuted(x.perm), compose(x.perm, y.perm)};
}

G2Element g2_inverse(const G2Element& x) {
  const Permutation inv = x.perm.inverse();
  return G2Element{-x.twist.permuted(inv), inv};
}

G3Element g3_mul(const G3Element& x, const G3Element& y) {
  return G3Element{x.flip + y.flip.permuted(x.edge_perm), x.twist + y.twist.permuted(x.corner_perm),
                   compose(x.edge_perm, y.edge_perm), compose(x.corner_perm, y.corner_perm)};
}

G3Element g3_inverse(const G3Element& x) {
  const Permutation e = x.edge_perm.inverse();
  const Permutation c = x.corner_perm.inverse();
  return G3Element{-x.flip.permuted(e), -x.twist.permuted(c), e, c};
}

G2Element encode_g2(const CubeState& state, const OrientationBasis& basis) {
  const auto twist = corner_orientation(state, basis);
  if (twist.sum() != 0) throw NotInGroup("corner orientations do not sum to zero");
  return G2Element{twist.with_sum_zero_flag(true), corner_permutation(state)};
}

G3Element encode_g3(const CubeState& state, const OrientationBasis& basis) {
  if (state.size() != 3) throw std::invalid_argument("encode_g3 needs a 3x3 state");
  const auto twist = corner_orientation(state, basis);
  const auto flip = edge_orientation(state, basis);
  if (twist.sum() != 0) throw NotInGroup("corner orientations do not sum to zero");
  if (flip.sum() != 0) throw NotInGroup("edge orientations do not sum to zero");
  G3Element out{flip.with_sum_zero_flag(true), twist.with_sum_zero_flag(true), edge_permutation(state),
                corner_permutation(state)};
  if (sign(out.edge_perm) != sign(out.corner_perm)) throw NotInGroup("edge and corner permutations differ in sign");
  return out;
}

CubeState decode_g2(const G2Element& x, const OrientationBasis& basis) {
  return assemble_state(2, x.perm, x.twist, nullptr, nullptr, basis);
}

CubeState decode_g3(const G3Element& x, const OrientationBasis& basis) {
  return assemble_state(3, x.corner_perm, x.twist, &x.edge_perm, &x.flip, basis);
}

G2Element word_to_g2(const MoveWord& w) { return encode_g2(CubeState::solved(2).apply(w)); }

G3Element word_to_g3(const MoveWord& w) { return encode_g3(CubeState::solved(3).apply(w)); }

G2Element psi(const G3Element& x) { return G2Element{x.twist, x.corner_perm}; }

Permutation sign_map(const Permutation& corner_perm) {
  if (sign(corner_perm) == 1) return Permutation(kEdges);
  return perm_from_cycles("(bc)", kEdges);
}

G3Element section_g2_in_g3(const G2Element& x) {
  return G3Element{OrientationVector::zero(2, kEdges, true), x.twist, sign_map(x.perm), x.perm};
}

namespace {

const std::array<std::pair<SubgroupTag, const char*>, 12> kTagNames = {{
    {SubgroupTag::K, "K"},   {SubgroupTag::L, "L"},     {SubgroupTag::M, "M"},
    {SubgroupTag::N, "N"},   {SubgroupTag::J, "J"},     {SubgroupTag::H, "H"},
    {SubgroupTag::S, "S"},   {SubgroupTag::P, "P"},     {SubgroupTag::A8, "A8"},
    {SubgroupTag::A12, "A12"}, {SubgroupTag::Full, "full"}, {SubgroupTag::Trivial, "trivial"},
}};

}  // namespace

std::string to_string(SubgroupTag tag) {
  for (const auto& [t, name] : kTagNames) {
    if (t == tag) return name;
  }
  return "?";
}

SubgroupTag parse_subgroup_tag(const std::string& name) {
  for (const auto& [t, n] : kTagNames) {
    if (name == n) return t;
  }
  throw ParseError("unknown subgroup tag " + name);
}

bool membership(SubgroupTag tag, const G2Element& x) {
  const bool perm_trivial = x.perm.is_identity();
  const bool twist_trivial = x.twist.is_zero();
  switch (tag) {
    case SubgroupTag::K:
      return perm_trivial;
    case SubgroupTag::L:
      return sign(x.perm) == 1;
    case SubgroupTag::H:
      return twist_trivial;
    case SubgroupTag::A8:
      return twist_trivial && sign(x.perm) == 1;
    case SubgroupTag::Full:
      return x.twist.sum() == 0;
    case SubgroupTag::Trivial:
      return perm_trivial && twist_trivial;
    default:
      throw std::invalid_argument("subgroup " + to_string(tag) + " is not a subgroup of G2");
  }
}

bool membership(SubgroupTag tag, const G3Element& x) {
  const bool edges_fixed = x.edge_perm.is_identity();
  const bool corners_fixed = x.corner_perm.is_identity();
  const bool no_flip = x.flip.is_zero();
  const bool no_twist = x.twist.is_zero();
  switch (tag) {
    case SubgroupTag::N:
      return corners_fixed && no_twist;
    case SubgroupTag::M:
      return corners_fixed && no_twist && edges_fixed;
    case SubgroupTag::L:
      return edges_fixed && corners_fixed && no_flip;
    case SubgroupTag::J:
      return edges_fixed && corners_fixed;
    case SubgroupTag::S:
      return no_flip && no_twist && x.edge_perm == sign_map(x.corner_perm);
    case SubgroupTag::P:
      return sign(x.edge_perm) == sign(x.corner_perm);
    case SubgroupTag::A8:
      return no_flip && no_twist && edges_fixed && sign(x.corner_perm) == 1;
    case SubgroupTag::A12:
      return no_flip && no_twist && corners_fixed && sign(x.edge_perm) == 1;
    case SubgroupTag::Full:
      return x.valid();
    case SubgroupTag::Trivial:
      return edges_fixed && corners_fixed && no_flip && no_twist;
    default:
      throw std::invalid_argument("subgroup " + to_string(tag) + " is not a subgroup of G3");
  }
}

// ---------------------------------------------------------------------------
// Constructive words

Transpositions build_transpositions() {
  const MoveWord u = MoveWord::generator(Face::U);
  const MoveWord d = MoveWord::generator(Face::D);
  const MoveWord f = MoveWord::generator(Face::F);
  const MoveWord r = MoveWord::generator(Face::R);
  const MoveWord l = MoveWord::generator(Face::L);
  const MoveWord g1 = word_product({r, d, r.inverse(), f.inverse()});
  const MoveWord g2 = word_product({g1, u, g1, u.inverse()});
  Transpositions t;
  t.t1 = word_product(u.inverse(), g2);
  t.t2 = word_conjugate(l, t.t1);
  t.t3 = word_conjugate(l.repeated(2).reduced(), t.t1);
  return t;
}

const MoveWord& seed_word() {
  static const MoveWord w = MoveWord::parse("U2 R' U2 R U R' U R");
  return w;
}

const std::vector<MoveWord>& three_cycle_moves() {
  static const std::vector<MoveWord> moves = [] {
    std::vector<MoveWord> out;
    std::set<Permutation> seen;
    for (const auto& rot : cube_rotations()) {
      const MoveWord w = seed_word().relabeled(rot);
      for (const MoveWord& candidate : {w, w.inverse()}) {
        if (seen.insert(beta(candidate)).second) out.push_back(candidate);
      }
    }
    return out;
  }();
  return moves;
}

namespace {

const MoveWord& move_with_cycle(const Permutation& target) {
  for (const auto& w : three_cycle_moves()) {
    if (beta(w) == target) return w;
  }
  throw std::logic_error("no face 3-cycle move realizes " + to_cycle_string(target, LabelStyle::Letters));
}

Permutation edge_cycle(int a, int b, int c) {
  return perm_from_cycles({{a + 1, b + 1, c + 1}}, kEdges);
}

std::array<int, 3> normalized(int a, int b, int c) {
  std::array<int, 3> t = {a, b, c};
  std::rotate(t.begin(), std::min_element(t.begin(), t.end()), t.end());
  return t;
}

}  // namespace

std::array<MoveWord, 3> face_seeds() {
  return {move_with_cycle(perm_from_cycles("(abc)", kEdges)), move_with_cycle(perm_from_cycles("(cgh)", kEdges)),
          move_with_cycle(perm_from_cycles("(bjg)", kEdges))};
}

EdgeCycleBuilder::EdgeCycleBuilder() {
  constexpr int a = 0, b = 1, f = 5;
  const MoveWord& h1 = move_with_cycle(perm_from_cycles("(abc)", kEdges));
  const MoveWord& h2 = move_with_cycle(perm_from_cycles("(afe)", kEdges));
  seed_pair_ = {h1, h2};
  const MoveWord seed = word_commutator(h1, h2);
  const Permutation got = beta(seed);
  const auto cycles = got.cycles();
  if (cycles.size() != 1 || cycles[0].size() != 3) {
    throw std::logic_error("seed commutator is not an edge 3-cycle: " + to_cycle_string(got, LabelStyle::Letters));
  }
  const auto& c = cycles[0];
  store({c[0], c[1], c[2]}, seed);
  members_ = {a, b, f};
  for (int e1 : {2, 3, 6, 7, 4, 8, 9, 10, 11}) add_edge(e1);
}

void EdgeCycleBuilder::store(const std::array<int, 3>& cycle, MoveWord w) {
  for (int pass = 0; pass < 2; ++pass) {
    const auto key = pass == 0 ? normalized(cycle[0], cycle[1], cycle[2]) : normalized(cycle[0], cycle[2], cycle[1]);
    MoveWord word = pass == 0 ? w : w.inverse();
    auto it = words_.find(key);
    if (it == words_.end() || word.size() < it->second.size()) words_[key] = std::move(word);
  }
}

const MoveWord* EdgeCycleBuilder::lookup(int a, int b, int c) const {
  auto it = words_.find(normalized(a, b, c));
  return it == words_.end() ? nullptr : &it->second;
}

const MoveWord& EdgeCycleBuilder::three_cycle(int e1, int x, int y) const {
  const MoveWord* w = lookup(e1, x, y);
  if (w == nullptr) {
    throw std::invalid_argument("no word for the edge cycle (" + std::string(1, char('a' + e1)) +
                                char('a' + x) + char('a' + y) + ")");
  }
  return *w;
}

void EdgeCycleBuilder::add_edge(int e1) {
  auto in_s = [&](int e) { return std::find(members_.begin(), members_.end(), e) != members_.end(); };

  // A face 3-cycle through e1 and two edges already in S.
  int e2 = -1, e3 = -1;
  for (const auto& w : three_cycle_moves()) {
    const auto cyc = beta(w).cycles();
    std::array<int, 3> t = {cyc[0][0], cyc[0][1], cyc[0][2]};
    const auto pos = std::find(t.begin(), t.end(), e1);
    if (pos == t.end()) continue;
    std::rotate(t.begin(), pos, t.end());
    if (in_s(t[1]) && in_s(t[2])) {
      e2 = t[1];
      e3 = t[2];
      break;
    }
  }
  if (e2 < 0) throw std::logic_error("edge has no face partner pair in S");
  const MoveWord& h_fwd = move_with_cycle(edge_cycle(e1, e2, e3));

  // x = e2, y = e3: n = n1 [h, n1] with beta(h) = (e1 x y), beta(n1) = (x z y).
  const int z = *std::find_if(members_.begin(), members_.end(), [&](int e) { return e != e2 && e != e3; });
  {
    const MoveWord& n1 = *lookup(e2, z, e3);
    store({e1, e2, e3}, word_product(n1, word_commutator(h_fwd, n1)));
  }

  for (std::size_t i = 0; i < members_.size(); ++i) {
    for (std::size_t j = i + 1; j < members_.size(); ++j) {
      const int x = members_[i], y = members_[j];
      const bool x_out = x != e2 && x != e3;
      const bool y_out = y != e2 && y != e3;
      if (!x_out && !y_out) continue;
      if (x_out && y_out) {
        // n = [h, n1] n2 with beta(h) = (e1 e2 e3), beta(n1) = (e2 e3 x), beta(n2) = (e2 e3)(x y).
        const MoveWord& n1 = *lookup(e2, e3, x);
        const MoveWord n2 = word_product(n1, *lookup(e3, x, y));
        store({e1, x, y}, word_product(word_commutator(h_fwd, n1), n2));
        continue;
      }
      // One of x, y is in {e2, e3}: conjugate (e1 e2 e3)^{+-1} by a 3-cycle on S.
      std::optional<MoveWord> best;
      for (const auto& [key, g] : words_) {
        if (!in_s(key[0]) || !in_s(key[1]) || !in_s(key[2])) continue;
        const Permutation gp = edge_cycle(key[0], key[1], key[2]);
        for (int orient = 0; orient < 2; ++orient) {
          const int p = orient == 0 ? e2 : e3;
          const int q = orient == 0 ? e3 : e2;
          if (normalized(e1, gp(static_cast<Point>(p)), gp(static_cast<Point>(q))) != normalized(e1, x, y)) continue;
          const MoveWord base = orient == 0 ? *lookup(e1, e2, e3) : *lookup(e1, e3, e2);
          MoveWord n = word_conjugate(g, base);
          if (!best || n.size() < best->size()) best = std::move(n);
        }
      }
      if (!best) throw std::logic_error("no conjugating 3-cycle found");
      store({e1, x, y}, *best);
    }
  }
  members_.push_back(e1);
}

const EdgeCycleBuilder& edge_cycles() {
  static const EdgeCycleBuilder builder;
  return builder;
}

MoveWord edge_three_cycle(int e1, int x, int y) {
  if (e1 == x || e1 == y || x == y || std::min({e1, x, y}) < 0 || std::max({e1, x, y}) >= 12) {
    throw std::invalid_argument("edge 3-cycle needs three distinct labels a..l");
  }
  return edge_cycles().three_cycle(e1, x, y);
}

MoveWord build_m() {
  const auto [h1, h2, h3] = face_seeds();
  return word_product(word_commutator(h3.inverse(), h1), word_commutator(h2, h1.inverse()));
}

// ---------------------------------------------------------------------------
// Orders and chains

StabilizerChain build_chain(const MoveTables& tables) {
  return StabilizerChain::build(tables.generators, tables.generators[0].degree());
}

const StabilizerChain& g2_sticker_chain() {
  static const StabilizerChain chain = build_chain(standard_move_tables(2));
  return chain;
}

const StabilizerChain& g3_sticker_chain() {
  static const StabilizerChain chain = build_chain(standard_move_tables(3));
  return chain;
}

const StabilizerChain& corner_chain() {
  static const StabilizerChain chain = [] {
    std::vector<Permutation> gens;
    for (Face f : kFaces) gens.push_back(phi(MoveWord::generator(f)));
    return StabilizerChain::build(gens, kCorners);
  }();
  return chain;
}

const StabilizerChain& pair_chain() {
  static const StabilizerChain chain = [] {
    std::vector<Permutation> gens;
    for (Face f : kFaces) {
      const auto [e, c] = alpha(MoveWord::generator(f));
      gens.push_back(direct_sum(e, c));
    }
    return StabilizerChain::build(gens, kEdges + kCorners);
  }();
  return chain;
}

namespace {

// Rank over Z_p of a set of vectors.
std::size_t rank_mod(std::vector<std::vector<int>> rows, int p) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] % p == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    int inv = 1;
    while ((rows[rank][c] * inv) % p != 1) ++inv;
    for (auto& v : rows[rank]) v = (v * inv) % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] % p == 0) continue;
      const int factor = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = ((rows[r][k] - factor * rows[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t orbit_span_rank(const OrientationVector& v, std::span<const Permutation> perms) {
  std::set<std::vector<int>> seen = {v.entries()};
  std::vector<OrientationVector> queue = {v};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& p : perms) {
      OrientationVector next = queue[i].permuted(p);
      if (seen.insert(next.entries()).second) queue.push_back(std::move(next));
    }
  }
  return rank_mod({seen.begin(), seen.end()}, v.modulus());
}

BigCount g2_order_by_cosets(const MoveTables& tables) {
  std::vector<Permutation> gens;
  for (Face f : kFaces) gens.push_back(phi(MoveWord::generator(f), tables));
  const StabilizerChain image = StabilizerChain::build(gens, kCorners);
  const auto k = encode_g2(CubeState::solved(tables.size).apply(seed_word(), tables));
  const std::size_t dim = orbit_span_rank(k.twist, gens);
  return BigCount::power(3, static_cast<unsigned>(dim)) * image.order();
}

BigCount derived_subgroup_order(std::span<const Permutation> generators, std::size_t degree) {
  std::vector<Permutation> gens;
  for (const auto& a : generators) {
    for (const auto& b : generators) {
      const Permutation c = commutator(a, b);
      if (!c.is_identity()) gens.push_back(c);
    }
  }
  if (gens.empty()) return BigCount(1);
  StabilizerChain chain = StabilizerChain::build(gens, degree);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& g : generators) {
      const Permutation y = conjugate(g, gens[i]);
      if (!chain.contains(y)) {
        gens.push_back(y);
        chain = StabilizerChain::build(gens, degree);
      }
    }
  }
  return chain.order();
}

std::vector<Permutation> center_elements(std::span<const Permutation> generators, const StabilizerChain& chain) {
  const std::size_t n = chain.degree();
  // Orbits with a spanning tree: point = gen(parent).
  std::vector<int> orbit_of(n, -1);
  std::vector<std::vector<Point>> orbits;
  std::vector<std::pair<Point, std::size_t>> parent(n);
  for (std::size_t start = 0; start < n; ++start) {
    if (orbit_of[start] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    orbits.push_back({static_cast<Point>(start)});
    orbit_of[start] = id;
    for (std::size_t i = 0; i < orbits.back().size(); ++i) {
      const Point x = orbits.back()[i];
      for (std::size_t g = 0; g < generators.size(); ++g) {
        const Point y = generators[g](x);
        if (orbit_of[y] < 0) {
          orbit_of[y] = id;
          parent[y] = {x, g};
          orbits.back().push_back(y);
        }
      }
    }
  }

  // For each orbit, the maps commuting with the generators, fixed by the image of its first point.
  std::vector<std::vector<std::vector<Point>>> choices(orbits.size());
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    const auto& orbit = orbits[o];
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<Point> image(n, 0);
      image[orbit[0]] = static_cast<Point>(y);
      for (std::size_t i = 1; i < orbit.size(); ++i) {
        const auto [par, g] = parent[orbit[i]];
        image[orbit[i]] = generators[g](image[par]);
      }
      bool ok = true;
      for (std::size_t i = 0; i < orbit.size() && ok; ++i) {
        for (const auto& gen : generators) {
          if (image[gen(orbit[i])] != gen(image[orbit[i]])) {
            ok = false;
            break;
          }
        }
      }
      if (ok) choices[o].push_back(std::move(image));
    }
  }

  std::vector<Permutation> out;
  std::vector<std::size_t> index(orbits.size(), 0);
  while (true) {
    std::vector<Point> images(n);
    std::vector<bool> hit(n, false);
    bool bijective = true;
    for (std::size_t o = 0; o < orbits.size() && bijective; ++o) {
      if (choices[o].empty()) return out;
      for (Point x : orbits[o]) {
        const Point y = choices[o][index[o]][x];
        if (hit[y]) {
          bijective = false;
          break;
        }
        hit[y] = true;
        images[x] = y;
      }
    }
    if (bijective) {
      Permutation c = Permutation::from_images(std::move(images));
      if (chain.contains(c)) out.push_back(std::move(c));
    }
    std::size_t o = 0;
    while (o < orbits.size() && ++index[o] == choices[o].size()) index[o++] = 0;
    if (o == orbits.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<G2Element> g2_center_structural() {
  const Permutation swap12 = perm_from_cycles("(12)", kCorners);
  const Permutation cycle8 = perm_from_cycles("(12345678)", kCorners);
  std::vector<Permutation> central_perms;
  std::vector<Point> images(kCorners);
  std::iota(images.begin(), images.end(), Point{0});
  do {
    const Permutation s = Permutation::from_images(images);
    if (compose(s, swap12) == compose(swap12, s) && compose(s, cycle8) == compose(cycle8, s)) {
      central_perms.push_back(s);
    }
  } while (std::next_permutation(images.begin(), images.end()));

  // Generators of K x| S_8: the two S_8 generators and one elementary twist.
  const std::vector<G2Element> gens = {
      G2Element{OrientationVector::zero(3, kCorners, true), swap12},
      G2Element{OrientationVector::zero(3, kCorners, true), cycle8},
      G2Element{OrientationVector(3, {1, 2, 0, 0, 0, 0, 0, 0}, true), Permutation(kCorners)},
  };
  std::vector<G2Element> out;
  for (const auto& s : central_perms) {
    for (int code = 0; code < 6561; ++code) {
      std::vector<int> entries(kCorners);
      int c = code;
      for (auto& e : entries) {
        e = c % 3;
        c /= 3;
      }
      OrientationVector k(3, entries);
      if (k.sum() != 0) continue;
      const G2Element x{k.with_sum_zero_flag(true), s};
      const bool central = std::all_of(gens.begin(), gens.end(),
                                       [&](const G2Element& g) { return g2_mul(x, g) == g2_mul(g, x); });
      if (central) out.push_back(x);
    }
  }
  return out;
}

}  // namespace cubegroup
