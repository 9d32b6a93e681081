#include "cubegroup/cube.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "cubegroup/errors.hpp"

namespace cubegroup {

// ---------------------------------------------------------------------------
// Moves

char face_letter(Face f) { return "UDFBLR"[static_cast<int>(f)]; }

MoveWord MoveWord::parse(std::string_view text) {
  std::vector<Move> moves;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const char letter = text[pos];
    const auto found = std::string_view("UDFBLR").find(letter);
    if (found == std::string_view::npos) {
      throw ParseError(std::string("invalid move token starting with '") + letter + "'");
    }
    Move m{static_cast<Face>(found), 1};
    ++pos;
    if (pos < text.size() && text[pos] == '\'') {
      m.turns = 3;
      ++pos;
    } else if (pos < text.size() && text[pos] == '2') {
      m.turns = 2;
      ++pos;
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("move tokens must be separated by whitespace: " + std::string(text));
    }
    moves.push_back(m);
  }
  return MoveWord(std::move(moves));
}

MoveWord MoveWord::inverse() const {
  std::vector<Move> out(moves_.rbegin(), moves_.rend());
  for (auto& m : out) m.turns = static_cast<std::uint8_t>((4 - m.turns) % 4);
  return MoveWord(std::move(out));
}

MoveWord MoveWord::reduced() const {
  std::vector<Move> out;
  for (const Move& m : moves_) {
    if (!out.empty() && out.back().face == m.face) {
      const auto turns = static_cast<std::uint8_t>((out.back().turns + m.turns) % 4);
      if (turns == 0) {
        out.pop_back();
      } else {
        out.back().turns = turns;
      }
    } else if (m.turns % 4 != 0) {
      out.push_back(m);
    }
  }
  return MoveWord(std::move(out));
}

MoveWord MoveWord::relabeled(const std::array<Face, 6>& image) const {
  std::vector<Move> out = moves_;
  for (auto& m : out) m.face = image[static_cast<int>(m.face)];
  return MoveWord(std::move(out));
}

std::string MoveWord::to_string() const {
  std::string out;
  for (const Move& m : moves_) {
    if (!out.empty()) out.push_back(' ');
    out.push_back(face_letter(m.face));
    if (m.turns == 2) out.push_back('2');
    if (m.turns == 3) out.push_back('\'');
  }
  return out;
}

MoveWord MoveWord::then(const MoveWord& next) const {
  std::vector<Move> out = moves_;
  out.insert(out.end(), next.moves_.begin(), next.moves_.end());
  return MoveWord(std::move(out));
}

MoveWord MoveWord::repeated(std::size_t times) const {
  MoveWord out;
  for (std::size_t i = 0; i < times; ++i) out = out.then(*this);
  return out;
}

MoveWord random_word(std::mt19937_64& rng, std::size_t length) {
  std::uniform_int_distribution<int> face(0, 5);
  std::uniform_int_distribution<int> turns(1, 3);
  std::vector<Move> moves;
  moves.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    moves.push_back(Move{static_cast<Face>(face(rng)), static_cast<std::uint8_t>(turns(rng))});
  }
  return MoveWord(std::move(moves));
}

// ---------------------------------------------------------------------------
// Geometry

namespace {

struct Vec {
  int x = 0, y = 0, z = 0;
  friend bool operator==(const Vec&, const Vec&) = default;
  friend auto operator<=>(const Vec&, const Vec&) = default;
};

Vec operator+(Vec a, Vec b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec operator*(int k, Vec a) { return {k * a.x, k * a.y, k * a.z}; }
int dot(Vec a, Vec b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Vec cross(Vec a, Vec b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// x right, y up, z front.
constexpr std::array<Vec, 6> kNormal = {
    Vec{0, 1, 0}, Vec{0, -1, 0}, Vec{0, 0, 1}, Vec{0, 0, -1}, Vec{-1, 0, 0}, Vec{1, 0, 0}};
constexpr std::array<Vec, 6> kUp = {
    Vec{0, 0, -1}, Vec{0, 0, 1}, Vec{0, 1, 0}, Vec{0, 1, 0}, Vec{0, 1, 0}, Vec{0, 1, 0}};
constexpr std::array<Vec, 6> kRight = {
    Vec{1, 0, 0}, Vec{1, 0, 0}, Vec{1, 0, 0}, Vec{-1, 0, 0}, Vec{0, 0, 1}, Vec{0, 0, -1}};

// Clockwise quarter turn seen from outside along n: rotation by -90 degrees about n.
Vec rotate_clockwise(Vec v, Vec n) { return dot(n, v) * n + (-1) * cross(n, v); }

// Corner and edge cubelet centers in units of (size - 1).
constexpr std::array<Vec, kCorners> kCornerPos = {
    Vec{-1, 1, 1},  Vec{1, 1, 1},  Vec{-1, 1, -1},  Vec{1, 1, -1},
    Vec{-1, -1, 1}, Vec{1, -1, 1}, Vec{-1, -1, -1}, Vec{1, -1, -1}};
constexpr std::array<Vec, kEdges> kEdgePos = {
    Vec{0, 1, -1},  Vec{1, 1, 0},   Vec{0, 1, 1},  Vec{-1, 1, 0},  Vec{-1, 0, -1}, Vec{1, 0, -1},
    Vec{1, 0, 1},   Vec{-1, 0, 1},  Vec{0, -1, -1}, Vec{1, -1, 0}, Vec{0, -1, 1},  Vec{-1, -1, 0}};

CubeGeometry build_geometry(int size) {
  if (size != 2 && size != 3) throw std::invalid_argument("cube size must be 2 or 3");
  const int n1 = size - 1;
  CubeGeometry geo;
  geo.size = size;

  std::vector<std::pair<Vec, Vec>> facelets;  // (cubelet center, outward normal)
  for (int f = 0; f < 6; ++f) {
    for (int r = 0; r < size; ++r) {
      for (int c = 0; c < size; ++c) {
        if (size == 3 && r == 1 && c == 1) continue;
        const Vec pos = n1 * kNormal[f] + (2 * c - n1) * kRight[f] + (n1 - 2 * r) * kUp[f];
        facelets.emplace_back(pos, kNormal[f]);
        geo.sticker_face.push_back(static_cast<std::uint8_t>(f));
      }
    }
  }
  geo.sticker_count = facelets.size();

  std::map<std::pair<Vec, Vec>, std::size_t> index;
  for (std::size_t i = 0; i < facelets.size(); ++i) index[facelets[i]] = i;

  for (int f = 0; f < 6; ++f) {
    std::vector<Point> images(facelets.size());
    for (std::size_t i = 0; i < facelets.size(); ++i) {
      const auto& [pos, dir] = facelets[i];
      if (dot(pos, kNormal[f]) == n1) {
        images[i] = static_cast<Point>(
            index.at({rotate_clockwise(pos, kNormal[f]), rotate_clockwise(dir, kNormal[f])}));
      } else {
        images[i] = static_cast<Point>(i);
      }
    }
    geo.generators[f] = Permutation::from_images(std::move(images));
  }

  auto facelets_at = [&](Vec center) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < facelets.size(); ++i) {
      if (facelets[i].first == center) out.push_back(i);
    }
    return out;
  };
  auto is_ud = [&](std::size_t i) { return facelets[i].second.y != 0; };
  auto is_fb = [&](std::size_t i) { return facelets[i].second.z != 0; };

  for (std::size_t c = 0; c < kCorners; ++c) {
    auto fl = facelets_at(n1 * kCornerPos[c]);
    auto first = std::find_if(fl.begin(), fl.end(), is_ud);
    std::iter_swap(fl.begin(), first);
    // Counterclockwise from outside: n0 x n1 points along n2.
    if (dot(cross(facelets[fl[0]].second, facelets[fl[1]].second), facelets[fl[2]].second) < 0) {
      std::swap(fl[1], fl[2]);
    }
    geo.corner_facelets[c] = {fl[0], fl[1], fl[2]};
  }
  if (size == 3) {
    for (std::size_t e = 0; e < kEdges; ++e) {
      auto fl = facelets_at(n1 * kEdgePos[e]);
      const bool swap = is_ud(fl[1]) || (!is_ud(fl[0]) && is_fb(fl[1]));
      if (swap) std::swap(fl[0], fl[1]);
      geo.edge_facelets.push_back({fl[0], fl[1]});
    }
  }
  return geo;
}

}  // namespace

const CubeGeometry& geometry(int size) {
  static const CubeGeometry two = build_geometry(2);
  static const CubeGeometry three = build_geometry(3);
  if (size == 2) return two;
  if (size == 3) return three;
  throw std::invalid_argument("cube size must be 2 or 3");
}

const std::vector<std::array<Face, 6>>& cube_rotations() {
  static const std::vector<std::array<Face, 6>> rotations = [] {
    auto face_of = [](Vec v) {
      for (int f = 0; f < 6; ++f) {
        if (kNormal[f] == v) return static_cast<Face>(f);
      }
      throw std::logic_error("not a face normal");
    };
    std::vector<std::array<Vec, 6>> found = {kNormal};
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (int axis : {0, 5}) {  // quarter turns about the U and R axes
        std::array<Vec, 6> next{};
        for (int f = 0; f < 6; ++f) next[f] = rotate_clockwise(found[i][f], kNormal[axis]);
        if (std::find(found.begin(), found.end(), next) == found.end()) found.push_back(next);
      }
    }
    std::vector<std::array<Face, 6>> out;
    for (const auto& images : found) {
      std::array<Face, 6> map{};
      for (int f = 0; f < 6; ++f) map[f] = face_of(images[f]);
      out.push_back(map);
    }
    return out;
  }();
  return rotations;
}

MoveTables standard_move_tables(int size) {
  return MoveTables{size, geometry(size).generators};
}

Permutation word_permutation(const MoveTables& tables, const MoveWord& w) {
  Permutation out(tables.generators[0].degree());
  for (const Move& m : w.moves()) {
    const Permutation& g = tables.generators[static_cast<int>(m.face)];
    for (int t = 0; t < m.turns; ++t) out = compose(g, out);
  }
  return out;
}

// ---------------------------------------------------------------------------
// States

CubeState CubeState::solved(int size) {
  CubeState s;
  s.size_ = size;
  s.stickers_ = geometry(size).sticker_face;
  return s;
}

CubeState CubeState::from_stickers(int size, std::vector<std::uint8_t> stickers) {
  const auto& geo = geometry(size);
  if (stickers.size() != geo.sticker_count) {
    throw std::invalid_argument("expected " + std::to_string(geo.sticker_count) + " stickers");
  }
  for (auto c : stickers) {
    if (c > 5) throw std::invalid_argument("sticker colors are 0..5");
  }
  CubeState s;
  s.size_ = size;
  s.stickers_ = std::move(stickers);
  return s;
}

CubeState CubeState::apply(const MoveWord& w) const {
  CubeState out = *this;
  const auto& gens = geometry(size_).generators;
  std::vector<std::uint8_t> next(stickers_.size());
  for (const Move& m : w.moves()) {
    const Permutation& g = gens[static_cast<int>(m.face)];
    for (int t = 0; t < m.turns; ++t) {
      for (std::size_t i = 0; i < next.size(); ++i) next[g(static_cast<Point>(i))] = out.stickers_[i];
      out.stickers_.swap(next);
    }
  }
  return out;
}

CubeState CubeState::apply(const MoveWord& w, const MoveTables& tables) const {
  if (tables.size != size_) throw DegreeMismatch("move tables are for a different cube size");
  return apply_permutation(word_permutation(tables, w));
}

CubeState CubeState::apply_permutation(const Permutation& p) const {
  if (p.degree() != stickers_.size()) throw DegreeMismatch("sticker permutation has wrong degree");
  CubeState out = *this;
  for (std::size_t i = 0; i < stickers_.size(); ++i) out.stickers_[p(static_cast<Point>(i))] = stickers_[i];
  return out;
}

nlohmann::json CubeState::to_json() const {
  nlohmann::json stickers = nlohmann::json::array();
  for (auto c : stickers_) stickers.push_back(static_cast<int>(c));
  return nlohmann::json{{"size", size_}, {"stickers", stickers}};
}

CubeState CubeState::from_json(const nlohmann::json& j) {
  const int size = j.at("size").get<int>();
  std::vector<std::uint8_t> stickers;
  for (const auto& v : j.at("stickers")) {
    const int c = v.get<int>();
    if (c < 0 || c > 5) throw std::invalid_argument("sticker colors are 0..5");
    stickers.push_back(static_cast<std::uint8_t>(c));
  }
  return from_stickers(size, std::move(stickers));
}

// ---------------------------------------------------------------------------
// Orientation vectors

namespace {
int mod(int a, int k) { return ((a % k) + k) % k; }
}  // namespace

OrientationVector::OrientationVector(int modulus, std::vector<int> entries, bool sum_zero)
    : modulus_(modulus), entries_(std::move(entries)), sum_zero_(sum_zero) {
  if (modulus < 2) throw std::invalid_argument("orientation modulus must be at least 2");
  for (int& e : entries_) e = mod(e, modulus_);
  if (sum_zero_ && sum() != 0) {
    throw std::invalid_argument("entries of " + to_string() + " do not sum to zero");
  }
}

OrientationVector OrientationVector::zero(int modulus, std::size_t length, bool sum_zero) {
  return OrientationVector(modulus, std::vector<int>(length, 0), sum_zero);
}

int OrientationVector::sum() const {
  int s = 0;
  for (int e : entries_) s += e;
  return mod(s, modulus_);
}

bool OrientationVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

OrientationVector OrientationVector::operator+(const OrientationVector& rhs) const {
  if (rhs.modulus_ != modulus_ || rhs.size() != size()) throw DegreeMismatch("orientation shape mismatch");
  std::vector<int> out(entries_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = entries_[i] + rhs.entries_[i];
  return OrientationVector(modulus_, std::move(out), sum_zero_ && rhs.sum_zero_);
}

OrientationVector OrientationVector::operator-() const {
  std::vector<int> out(entries_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -entries_[i];
  return OrientationVector(modulus_, std::move(out), sum_zero_);
}

OrientationVector OrientationVector::permuted(const Permutation& sigma) const {
  if (sigma.degree() != size()) throw DegreeMismatch("permutation degree differs from vector length");
  std::vector<int> out(entries_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[sigma(static_cast<Point>(i))] = entries_[i];
  return OrientationVector(modulus_, std::move(out), sum_zero_);
}

OrientationVector OrientationVector::with_sum_zero_flag(bool flag) const {
  return OrientationVector(modulus_, entries_, flag);
}

std::string OrientationVector::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i != 0) out << ", ";
    out << '[' << entries_[i] << ']';
  }
  out << ')';
  return out.str();
}

// ---------------------------------------------------------------------------
// Cubelet identification

namespace {

struct Placement {
  std::size_t cubelet = 0;  // home position of the cubelet found here
  int shift = 0;            // counterclockwise turns of its facelets relative to home
};

template <std::size_t K>
std::vector<Placement> identify(const CubeState& state,
                                const std::vector<std::array<std::size_t, K>>& slots,
                                const char* kind) {
  const auto& home = geometry(state.size()).sticker_face;
  const auto& stickers = state.stickers();
  std::vector<Placement> out(slots.size());
  std::vector<bool> used(slots.size(), false);
  for (std::size_t pos = 0; pos < slots.size(); ++pos) {
    bool found = false;
    for (std::size_t cub = 0; cub < slots.size() && !found; ++cub) {
      for (std::size_t shift = 0; shift < K && !found; ++shift) {
        bool match = true;
        for (std::size_t q = 0; q < K && match; ++q) {
          match = stickers[slots[pos][(q + shift) % K]] == home[slots[cub][q]];
        }
        if (match) {
          if (used[cub]) {
            throw CorruptedState(std::string("duplicate ") + kind + " cubelet");
          }
          used[cub] = true;
          out[pos] = Placement{cub, static_cast<int>(shift)};
          found = true;
        }
      }
    }
    if (!found) {
      throw CorruptedState(std::string("sticker colors at ") + kind + " position " +
                           std::to_string(pos + 1) + " match no cubelet");
    }
  }
  return out;
}

std::vector<std::array<std::size_t, 3>> corner_slots(int size) {
  const auto& geo = geometry(size);
  return {geo.corner_facelets.begin(), geo.corner_facelets.end()};
}

std::vector<Placement> identify_corners(const CubeState& s) {
  return identify(s, corner_slots(s.size()), "corner");
}

std::vector<Placement> identify_edges(const CubeState& s) {
  if (s.size() != 3) throw std::invalid_argument("edge cubelets exist only on the 3x3 cube");
  return identify(s, geometry(3).edge_facelets, "edge");
}

Permutation placements_to_perm(const std::vector<Placement>& pl) {
  std::vector<Point> images(pl.size());
  for (std::size_t pos = 0; pos < pl.size(); ++pos) images[pl[pos].cubelet] = static_cast<Point>(pos);
  return Permutation::from_images(std::move(images));
}

}  // namespace

Permutation sticker_permutation(const CubeState& state) {
  const auto& geo = geometry(state.size());
  std::vector<Point> images(geo.sticker_count);
  auto place = [&](const auto& slots, const std::vector<Placement>& pl) {
    const std::size_t k = slots[0].size();
    for (std::size_t pos = 0; pos < slots.size(); ++pos) {
      const auto& home = slots[pl[pos].cubelet];
      for (std::size_t q = 0; q < k; ++q) {
        images[home[q]] = static_cast<Point>(slots[pos][(q + static_cast<std::size_t>(pl[pos].shift)) % k]);
      }
    }
  };
  place(geo.corner_facelets, identify_corners(state));
  if (state.size() == 3) place(geo.edge_facelets, identify_edges(state));
  return Permutation::from_images(std::move(images));
}

Permutation corner_permutation(const CubeState& state) { return placements_to_perm(identify_corners(state)); }

Permutation edge_permutation(const CubeState& state) { return placements_to_perm(identify_edges(state)); }

OrientationVector corner_orientation(const CubeState& state, const OrientationBasis& basis) {
  const auto pl = identify_corners(state);
  std::vector<int> s(kCorners);
  for (std::size_t i = 0; i < kCorners; ++i) {
    s[i] = basis.corner[pl[i].cubelet] + pl[i].shift - basis.corner[i];
  }
  return OrientationVector(3, std::move(s));
}

OrientationVector edge_orientation(const CubeState& state, const OrientationBasis& basis) {
  const auto pl = identify_edges(state);
  std::vector<int> t(kEdges);
  for (std::size_t x = 0; x < kEdges; ++x) {
    t[x] = basis.edge[pl[x].cubelet] + pl[x].shift - basis.edge[x];
  }
  return OrientationVector(2, std::move(t));
}

int invariant_s(const CubeState& state) { return corner_orientation(state, ud_axis_basis()).sum(); }

int invariant_t(const CubeState& state) { return edge_orientation(state, ud_axis_basis()).sum(); }

CubeState twist_corners_in_place(const CubeState& state, const std::vector<int>& twists) {
  if (twists.size() != kCorners) throw DegreeMismatch("expected 8 corner twists");
  const auto& geo = geometry(state.size());
  auto stickers = state.stickers();
  for (std::size_t i = 0; i < kCorners; ++i) {
    const auto& slot = geo.corner_facelets[i];
    const int t = mod(twists[i], 3);
    for (std::size_t q = 0; q < 3; ++q) stickers[slot[(q + t) % 3]] = state.stickers()[slot[q]];
  }
  return CubeState::from_stickers(state.size(), std::move(stickers));
}

CubeState flip_edges_in_place(const CubeState& state, const std::vector<int>& flips) {
  if (state.size() != 3) throw std::invalid_argument("edge cubelets exist only on the 3x3 cube");
  if (flips.size() != kEdges) throw DegreeMismatch("expected 12 edge flips");
  const auto& geo = geometry(3);
  auto stickers = state.stickers();
  for (std::size_t x = 0; x < kEdges; ++x) {
    if (mod(flips[x], 2) == 0) continue;
    const auto& slot = geo.edge_facelets[x];
    std::swap(stickers[slot[0]], stickers[slot[1]]);
  }
  return CubeState::from_stickers(3, std::move(stickers));
}

CubeState assemble_state(int size, const Permutation& corner_perm, const OrientationVector& twist,
                         const Permutation* edge_perm, const OrientationVector* flip,
                         const OrientationBasis& basis) {
  const auto& geo = geometry(size);
  if (corner_perm.degree() != kCorners || twist.size() != kCorners || twist.modulus() != 3) {
    throw DegreeMismatch("corner data must be a degree-8 permutation and a Z_3^8 vector");
  }
  std::vector<std::uint8_t> stickers(geo.sticker_count, 0);
  std::vector<bool> written(geo.sticker_count, false);
  for (std::size_t home = 0; home < kCorners; ++home) {
    const std::size_t pos = corner_perm(static_cast<Point>(home));
    const int shift = mod(twist[pos] + basis.corner[pos] - basis.corner[home], 3);
    for (std::size_t q = 0; q < 3; ++q) {
      const auto target = geo.corner_facelets[pos][(q + shift) % 3];
      stickers[target] = geo.sticker_face[geo.corner_facelets[home][q]];
      written[target] = true;
    }
  }
  if (size == 3) {
    if (edge_perm == nullptr || flip == nullptr) throw std::invalid_argument("3x3 states need edge data");
    if (edge_perm->degree() != kEdges || flip->size() != kEdges || flip->modulus() != 2) {
      throw DegreeMismatch("edge data must be a degree-12 permutation and a Z_2^12 vector");
    }
    for (std::size_t home = 0; home < kEdges; ++home) {
      const std::size_t pos = (*edge_perm)(static_cast<Point>(home));
      const int shift = mod((*flip)[pos] + basis.edge[pos] - basis.edge[home], 2);
      for (std::size_t q = 0; q < 2; ++q) {
        const auto target = geo.edge_facelets[pos][(q + shift) % 2];
        stickers[target] = geo.sticker_face[geo.edge_facelets[home][q]];
        written[target] = true;
      }
    }
  }
  if (!std::all_of(written.begin(), written.end(), [](bool b) { return b; })) {
    throw std::logic_error("cubelet layout does not cover every facelet");
  }
  return CubeState::from_stickers(size, std::move(stickers));
}

// ---------------------------------------------------------------------------
// Bases

OrientationBasis ud_axis_basis() { return OrientationBasis{}; }

OrientationBasis random_basis(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> three(0, 2);
  std::uniform_int_distribution<int> two(0, 1);
  OrientationBasis b;
  for (auto& c : b.corner) c = static_cast<std::uint8_t>(three(rng));
  for (auto& e : b.edge) e = static_cast<std::uint8_t>(two(rng));
  return b;
}

namespace {

// Target vectors: corner twists after F on the 2x2, edge flips after R F on the 3x3.
const std::vector<int> kCornerTargetF = {1, 2, 0, 0, 2, 1, 0, 0};
const std::vector<int> kEdgeTargetRF = {0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0};

std::size_t distance_from_ud(const std::uint8_t* choice, std::size_t n) {
  return static_cast<std::size_t>(std::count_if(choice, choice + n, [](std::uint8_t c) { return c != 0; }));
}

}  // namespace

BasisSearchResult select_reference_basis() {
  BasisSearchResult result;
  const CubeState after_f = CubeState::solved(2).apply(MoveWord::parse("F"));
  const CubeState after_rf = CubeState::solved(3).apply(MoveWord::parse("R F"));

  bool have_corner = false;
  std::array<std::uint8_t, kCorners> best_corner{};
  OrientationBasis candidate;
  for (int code = 0; code < 6561; ++code) {
    int c = code;
    for (std::size_t i = 0; i < kCorners; ++i) {
      candidate.corner[i] = static_cast<std::uint8_t>(c % 3);
      c /= 3;
    }
    if (corner_orientation(after_f, candidate).entries() != kCornerTargetF) continue;
    ++result.corner_matches;
    const bool better =
        !have_corner ||
        std::make_pair(distance_from_ud(candidate.corner.data(), kCorners), candidate.corner) <
            std::make_pair(distance_from_ud(best_corner.data(), kCorners), best_corner);
    if (better) {
      best_corner = candidate.corner;
      have_corner = true;
    }
  }

  bool have_edge = false;
  std::array<std::uint8_t, kEdges> best_edge{};
  for (int code = 0; code < 4096; ++code) {
    for (std::size_t x = 0; x < kEdges; ++x) candidate.edge[x] = static_cast<std::uint8_t>((code >> x) & 1);
    if (edge_orientation(after_rf, candidate).entries() != kEdgeTargetRF) continue;
    ++result.edge_matches;
    const bool better =
        !have_edge || std::make_pair(distance_from_ud(candidate.edge.data(), kEdges), candidate.edge) <
                          std::make_pair(distance_from_ud(best_edge.data(), kEdges), best_edge);
    if (better) {
      best_edge = candidate.edge;
      have_edge = true;
    }
  }
  if (!have_corner || !have_edge) throw std::logic_error("no orientation basis matches the targets");
  result.basis.corner = best_corner;
  result.basis.edge = best_edge;
  return result;
}

const OrientationBasis& reference_basis() {
  static const OrientationBasis basis = select_reference_basis().basis;
  return basis;
}

}  // namespace cubegroup
