#include "cubegroup/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "cubegroup/errors.hpp"
#include "cubegroup/stabilizer_chain.hpp"

namespace cubegroup {

namespace {

int mod(long long x, int r) { return static_cast<int>(((x % r) + r) % r); }

std::string root_entry(int e, int r) {
  if (e == 0) return "1";
  if (2 * e == r) return "-1";
  return "w^" + std::to_string(e);
}

std::string render_rows(const std::vector<std::vector<std::string>>& rows) {
  std::size_t width = 1;
  for (const auto& row : rows) {
    for (const auto& cell : row) width = std::max(width, cell.size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i != 0) out << ' ';
      out << std::string(width - row[i].size(), ' ') << row[i];
    }
    out << '\n';
  }
  return out.str();
}

template <class Element>
Element power(const Element& x, int times, const Element& identity) {
  Element out = identity;
  for (int i = 0; i < times; ++i) out = x * out;
  return out;
}

std::string face_name(Face f) { return std::string(1, face_letter(f)); }

}  // namespace

// ---------------------------------------------------------------------------

MonomialElement MonomialElement::identity(std::size_t degree, int root_order) {
  return MonomialElement{root_order, Permutation(degree), std::vector<int>(degree, 0)};
}

bool MonomialElement::is_identity() const {
  return perm.is_identity() && std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

MonomialElement MonomialElement::inverse() const {
  const Permutation inv = perm.inverse();
  std::vector<int> out(exps.size());
  // (e, s)^-1 = (-(s^-1 . e), s^-1)
  for (std::size_t j = 0; j < exps.size(); ++j) out[inv(static_cast<Point>(j))] = mod(-exps[j], root_order);
  return MonomialElement{root_order, inv, std::move(out)};
}

CyclotomicInt MonomialElement::trace() const {
  CyclotomicInt out(root_order);
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (perm(static_cast<Point>(i)) == i) out += CyclotomicInt::root(root_order, exps[i]);
  }
  return out;
}

MonomialElement operator*(const MonomialElement& x, const MonomialElement& y) {
  if (x.degree() != y.degree() || x.root_order != y.root_order) {
    throw DegreeMismatch("monomial elements of different shape");
  }
  std::vector<int> exps(x.exps);
  for (std::size_t j = 0; j < exps.size(); ++j) {
    const Point t = x.perm(static_cast<Point>(j));
    exps[t] = mod(exps[t] + y.exps[j], x.root_order);
  }
  return MonomialElement{x.root_order, compose(x.perm, y.perm), std::move(exps)};
}

std::string matrix_text(const MonomialElement& x) {
  const std::size_t n = x.degree();
  std::vector<std::vector<std::string>> rows(n, std::vector<std::string>(n, "0"));
  for (std::size_t i = 0; i < n; ++i) {
    const Point j = x.perm(static_cast<Point>(i));
    rows[j][i] = root_entry(x.exps[j], x.root_order);
  }
  return render_rows(rows);
}

// ---------------------------------------------------------------------------

ConjMonomialElement ConjMonomialElement::identity(std::size_t p, std::size_t q, int root_order) {
  return ConjMonomialElement{root_order,           Permutation(p), std::vector<int>(p, 0), Permutation(q),
                             std::vector<int>(q, 0), std::vector<int>(q, 0)};
}

bool ConjMonomialElement::is_identity() const {
  auto zero = [](const std::vector<int>& v) { return std::all_of(v.begin(), v.end(), [](int e) { return e == 0; }); };
  return sign_perm.is_identity() && rot_perm.is_identity() && zero(signs) && zero(exps) && zero(flags);
}

ConjMonomialElement ConjMonomialElement::inverse() const {
  ConjMonomialElement out = identity(p(), q(), root_order);
  out.sign_perm = sign_perm.inverse();
  out.rot_perm = rot_perm.inverse();
  for (std::size_t t = 0; t < p(); ++t) out.signs[out.sign_perm(static_cast<Point>(t))] = signs[t];
  // z -> w^e c^f(z) is undone by z -> c^f(w^-e z) = w^(f ? e : -e) c^f(z).
  for (std::size_t t = 0; t < q(); ++t) {
    const Point j = out.rot_perm(static_cast<Point>(t));
    out.exps[j] = flags[t] ? exps[t] : mod(-exps[t], root_order);
    out.flags[j] = flags[t];
  }
  return out;
}

CyclotomicInt ConjMonomialElement::trace() const {
  CyclotomicInt out(root_order);
  for (std::size_t i = 0; i < p(); ++i) {
    if (sign_perm(static_cast<Point>(i)) == i) out += CyclotomicInt(root_order, signs[i] ? -1 : 1);
  }
  for (std::size_t i = 0; i < q(); ++i) {
    if (rot_perm(static_cast<Point>(i)) == i && !flags[i]) {
      out += CyclotomicInt::root(root_order, exps[i]) + CyclotomicInt::root(root_order, -exps[i]);
    }
  }
  return out;
}

ConjMonomialElement operator*(const ConjMonomialElement& x, const ConjMonomialElement& y) {
  if (x.p() != y.p() || x.q() != y.q() || x.root_order != y.root_order) {
    throw DegreeMismatch("conjugate-monomial elements of different shape");
  }
  ConjMonomialElement out = ConjMonomialElement::identity(x.p(), x.q(), x.root_order);
  out.sign_perm = compose(x.sign_perm, y.sign_perm);
  out.rot_perm = compose(x.rot_perm, y.rot_perm);
  for (std::size_t j = 0; j < x.p(); ++j) {
    const Point t = x.sign_perm(static_cast<Point>(j));
    out.signs[t] = x.signs[t] ^ y.signs[j];
  }
  for (std::size_t j = 0; j < x.q(); ++j) {
    const Point t = x.rot_perm(static_cast<Point>(j));
    out.exps[t] = mod(x.exps[t] + (x.flags[t] ? -y.exps[j] : y.exps[j]), x.root_order);
    out.flags[t] = x.flags[t] ^ y.flags[j];
  }
  return out;
}

std::string matrix_text(const ConjMonomialElement& x) {
  const std::size_t n = x.p() + x.q();
  std::vector<std::vector<std::string>> rows(n, std::vector<std::string>(n, "0"));
  for (std::size_t i = 0; i < x.p(); ++i) {
    const Point j = x.sign_perm(static_cast<Point>(i));
    rows[j][i] = x.signs[j] ? "-1" : "1";
  }
  for (std::size_t i = 0; i < x.q(); ++i) {
    const Point j = x.rot_perm(static_cast<Point>(i));
    rows[x.p() + j][x.p() + i] =
        x.flags[j] ? "conj∘w^" + std::to_string(x.exps[j]) : root_entry(x.exps[j], x.root_order);
  }
  return render_rows(rows);
}

DecoratedPerm DecoratedPerm::identity(std::size_t p, std::size_t q) {
  return DecoratedPerm{std::vector<int>(q, 0), Permutation(p), Permutation(q)};
}

DecoratedPerm operator*(const DecoratedPerm& x, const DecoratedPerm& y) {
  DecoratedPerm out{x.flags, compose(x.sigma_p, y.sigma_p), compose(x.sigma_q, y.sigma_q)};
  for (std::size_t j = 0; j < y.flags.size(); ++j) out.flags[x.sigma_q(static_cast<Point>(j))] ^= y.flags[j];
  return out;
}

DecoratedPerm decorated_perm(const ConjMonomialElement& x) {
  return DecoratedPerm{x.flags, x.sign_perm, x.rot_perm};
}

// ---------------------------------------------------------------------------

MonomialRep::MonomialRep(std::size_t degree, int root_order) : degree_(degree), r_(root_order) {
  if (root_order < 1) throw std::invalid_argument("root order must be positive");
}

void MonomialRep::set_generator(const std::string& name, MonomialElement image) {
  if (image.degree() != degree_ || image.exps.size() != degree_ || image.root_order != r_) {
    throw DegreeMismatch("image of " + name + " does not match the representation");
  }
  for (int& e : image.exps) e = mod(e, r_);
  generators_[name] = std::move(image);
}

const MonomialElement& MonomialRep::generator(const std::string& name) const {
  auto it = generators_.find(name);
  if (it == generators_.end()) throw std::out_of_range("no generator named " + name);
  return it->second;
}

MonomialElement MonomialRep::image(const MoveWord& w) const {
  MonomialElement out = identity();
  for (const Move& m : w.moves()) out = power(generator(face_name(m.face)), m.turns, identity()) * out;
  return out;
}

nlohmann::json MonomialRep::to_json() const {
  nlohmann::json gens = nlohmann::json::object();
  for (const auto& [name, x] : generators_) {
    gens[name] = {{"perm", x.perm.one_based_images()}, {"exps", x.exps}, {"flags", std::vector<int>(degree_, 0)}};
  }
  return {{"degree", degree_}, {"root_order", r_}, {"generators", gens}};
}

ConjMonomialRep::ConjMonomialRep(std::size_t p, std::size_t q, int root_order) : p_(p), q_(q), r_(root_order) {
  if (root_order < 1) throw std::invalid_argument("root order must be positive");
}

void ConjMonomialRep::set_generator(const std::string& name, ConjMonomialElement image) {
  if (image.p() != p_ || image.q() != q_ || image.signs.size() != p_ || image.exps.size() != q_ ||
      image.flags.size() != q_ || image.root_order != r_) {
    throw DegreeMismatch("image of " + name + " does not match the representation");
  }
  for (int& e : image.exps) e = mod(e, r_);
  for (int& s : image.signs) s &= 1;
  for (int& f : image.flags) f &= 1;
  generators_[name] = std::move(image);
}

const ConjMonomialElement& ConjMonomialRep::generator(const std::string& name) const {
  auto it = generators_.find(name);
  if (it == generators_.end()) throw std::out_of_range("no generator named " + name);
  return it->second;
}

ConjMonomialElement ConjMonomialRep::image(const MoveWord& w) const {
  ConjMonomialElement out = identity();
  for (const Move& m : w.moves()) out = power(generator(face_name(m.face)), m.turns, identity()) * out;
  return out;
}

nlohmann::json ConjMonomialRep::to_json() const {
  nlohmann::json gens = nlohmann::json::object();
  for (const auto& [name, x] : generators_) {
    const Permutation blocks = direct_sum(x.sign_perm, x.rot_perm);
    std::vector<int> exps = x.signs;
    exps.insert(exps.end(), x.exps.begin(), x.exps.end());
    std::vector<int> flags(p_, 0);
    flags.insert(flags.end(), x.flags.begin(), x.flags.end());
    gens[name] = {{"perm", blocks.one_based_images()}, {"exps", exps}, {"flags", flags}};
  }
  return {{"degree", real_dimension()},
          {"root_order", r_},
          {"blocks", {{"sign", p_}, {"rotation", q_}}},
          {"generators", gens}};
}

// ---------------------------------------------------------------------------

std::vector<bool> real_coordinates(const MonomialRep& rep) {
  const std::size_t n = rep.degree();
  const int r = rep.root_order();
  std::vector<bool> candidate(n, true);
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [name, x] : rep.generators()) {
    for (std::size_t i = 0; i < n; ++i) {
      const int e = x.exps[i];
      if (e != 0 && 2 * e != r) candidate[i] = false;
      parent[find(i)] = find(x.perm(static_cast<Point>(i)));
    }
  }
  std::vector<bool> orbit_real(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    if (!candidate[i]) orbit_real[find(i)] = false;
  }
  std::vector<bool> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = orbit_real[find(i)];
  return out;
}

ConjMonomialElement realify(const MonomialElement& x, const std::vector<bool>& real) {
  const std::size_t n = x.degree();
  if (real.size() != n) throw DegreeMismatch("real-coordinate mask has the wrong length");
  std::vector<std::size_t> index(n);
  std::size_t p = 0, q = 0;
  for (std::size_t i = 0; i < n; ++i) index[i] = real[i] ? p++ : q++;
  ConjMonomialElement out = ConjMonomialElement::identity(p, q, x.root_order);
  std::vector<Point> sign_images(p), rot_images(q);
  for (std::size_t i = 0; i < n; ++i) {
    const Point j = x.perm(static_cast<Point>(i));
    if (real[i] != real[j]) throw std::invalid_argument("real coordinates are not a union of orbits");
    if (real[i]) {
      sign_images[index[i]] = static_cast<Point>(index[j]);
    } else {
      rot_images[index[i]] = static_cast<Point>(index[j]);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    const int e = x.exps[j];
    if (real[j]) {
      if (e != 0 && 2 * e != x.root_order) {
        throw std::invalid_argument("real coordinate " + std::to_string(j + 1) + " has a non-real entry");
      }
      out.signs[index[j]] = e != 0;
    } else {
      out.exps[index[j]] = e;
    }
  }
  out.sign_perm = Permutation::from_images(std::move(sign_images));
  out.rot_perm = Permutation::from_images(std::move(rot_images));
  return out;
}

ConjMonomialRep realify(const MonomialRep& rep, const std::vector<bool>& real) {
  const auto p = static_cast<std::size_t>(std::count(real.begin(), real.end(), true));
  ConjMonomialRep out(p, rep.degree() - p, rep.root_order());
  for (const auto& [name, x] : rep.generators()) out.set_generator(name, realify(x, real));
  return out;
}

ConjMonomialRep realify(const MonomialRep& rep) { return realify(rep, real_coordinates(rep)); }

DecoratedPerm decorated_perm(const ConjMonomialRep& rep, const MoveWord& h) {
  return decorated_perm(rep.image(h));
}

MonomialRep zero_exponents(const MonomialRep& rep, std::size_t offset, std::size_t count) {
  if (offset + count > rep.degree()) throw DegreeMismatch("coordinate block out of range");
  MonomialRep out(rep.degree(), rep.root_order());
  for (auto [name, x] : rep.generators()) {
    for (std::size_t i = offset; i < offset + count; ++i) {
      const Point j = x.perm(static_cast<Point>(i));
      if (j < offset || j >= offset + count) throw std::invalid_argument("coordinate block is not invariant");
      x.exps[i] = 0;
    }
    out.set_generator(name, std::move(x));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Coordinate of an element of order p in Z_r, as a value in F_p.
int torsion_coordinate(int value, int r, std::uint32_t prime, const std::string& name) {
  const auto p = static_cast<int>(prime);
  if ((static_cast<long long>(value) * p) % r != 0) {
    throw std::invalid_argument("image of " + name + " does not have order dividing " + std::to_string(p));
  }
  if (r % p != 0) return 0;
  return value / (r / p);
}

std::size_t rank_mod_p(std::vector<std::vector<int>> rows, int p) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] % p == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    int inv = 1;
    while ((rows[rank][c] * inv) % p != 1) ++inv;
    for (int& v : rows[rank]) v = (v * inv) % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] % p == 0) continue;
      const int factor = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] = mod(rows[i][k] - factor * rows[rank][k], p);
    }
    ++rank;
  }
  return rank;
}

struct Flattened {
  bool diagonal;
  std::vector<int> coordinates;  // F_p values
};

Flattened flatten(const MonomialElement& x, std::uint32_t prime, const std::string& name) {
  Flattened out{x.is_diagonal(), {}};
  if (out.diagonal) {
    for (int e : x.exps) out.coordinates.push_back(torsion_coordinate(e, x.root_order, prime, name));
  }
  return out;
}

Flattened flatten(const ConjMonomialElement& x, std::uint32_t prime, const std::string& name) {
  const bool diagonal = x.sign_perm.is_identity() && x.rot_perm.is_identity() &&
                        std::all_of(x.flags.begin(), x.flags.end(), [](int f) { return f == 0; });
  Flattened out{diagonal, {}};
  if (diagonal) {
    for (int s : x.signs) out.coordinates.push_back(torsion_coordinate(s, 2, prime, name));
    for (int e : x.exps) out.coordinates.push_back(torsion_coordinate(e, x.root_order, prime, name));
  }
  return out;
}

Permutation perm_part(const MonomialElement& x) { return x.perm; }
Permutation perm_part(const ConjMonomialElement& x) { return direct_sum(x.sign_perm, x.rot_perm); }

template <class Rep>
bool faithful_split(const Rep& rep, const SplitGroup& group) {
  for (const auto& block : group.blocks) {
    std::vector<std::vector<int>> rows;
    for (const auto& name : block.basis) {
      Flattened f = flatten(rep.generator(name), block.prime, name);
      if (!f.diagonal) throw std::invalid_argument("image of " + name + " is not diagonal");
      rows.push_back(std::move(f.coordinates));
    }
    if (rank_mod_p(std::move(rows), static_cast<int>(block.prime)) != block.basis.size()) return false;
  }
  std::vector<Permutation> perms;
  for (const auto& name : group.complement) perms.push_back(perm_part(rep.generator(name)));
  if (perms.empty()) return group.complement_order == BigCount(1);
  const auto chain = StabilizerChain::build(perms, perms.front().degree());
  return chain.order() == group.complement_order;
}

}  // namespace

bool faithful(const MonomialRep& rep, const SplitGroup& group) { return faithful_split(rep, group); }
bool faithful(const ConjMonomialRep& rep, const SplitGroup& group) { return faithful_split(rep, group); }

// ---------------------------------------------------------------------------

SemidirectElement operator*(const SemidirectElement& x, const SemidirectElement& y) {
  return SemidirectElement{x.a + y.a.permuted(x.s), compose(x.s, y.s)};
}

EnumeratedGroup EnumeratedGroup::sum_zero_semidirect(int k, int m) {
  if (k < 2 || m < 1) throw std::invalid_argument("need k >= 2 and m >= 1");
  std::size_t size = 1;
  for (int i = 1; i <= m; ++i) size *= static_cast<std::size_t>(i);
  for (int i = 1; i < m; ++i) {
    size *= static_cast<std::size_t>(k);
    if (size > kEnumerationBound) break;
  }
  if (size > kEnumerationBound) throw std::length_error("group too large to enumerate");

  std::vector<OrientationVector> vectors;
  std::vector<int> digits(static_cast<std::size_t>(m), 0);
  for (;;) {
    int sum = 0;
    for (int d : digits) sum += d;
    if (sum % k == 0) vectors.emplace_back(k, digits, true);
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == k) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  std::vector<Permutation> perms;
  std::vector<Point> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), Point{0});
  do perms.push_back(Permutation::from_images(images));
  while (std::next_permutation(images.begin(), images.end()));

  EnumeratedGroup out;
  for (const auto& v : vectors) {
    for (const auto& s : perms) out.elements_.push_back(SemidirectElement{v, s});
  }
  std::sort(out.elements_.begin(), out.elements_.end());

  const auto um = static_cast<std::size_t>(m);
  for (std::size_t i = 0; i + 1 < um; ++i) {
    std::vector<int> e(um, 0);
    e[i] = 1;
    e[i + 1] = k - 1;
    out.generators_["a" + std::to_string(i + 1)] = SemidirectElement{OrientationVector(k, e, true), Permutation(um)};
  }
  const auto zero = OrientationVector::zero(k, um, true);
  if (m >= 2) {
    out.generators_["s1"] = SemidirectElement{zero, perm_from_cycles(std::vector<std::vector<int>>{{1, 2}}, um)};
    std::vector<int> cycle(um);
    std::iota(cycle.begin(), cycle.end(), 1);
    out.generators_["s2"] = SemidirectElement{zero, perm_from_cycles(std::vector<std::vector<int>>{cycle}, um)};
  }
  return out;
}

std::size_t EnumeratedGroup::index_of(const SemidirectElement& x) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || !(*it == x)) throw std::out_of_range("element not in the group");
  return static_cast<std::size_t>(it - elements_.begin());
}

namespace {

template <class Rep>
auto walk_cayley_graph(const Rep& rep, const EnumeratedGroup& group) {
  using Image = decltype(rep.identity());
  std::vector<std::optional<Image>> images(group.size());
  std::vector<std::pair<SemidirectElement, Image>> gens;
  for (const auto& [name, x] : group.generators()) gens.emplace_back(x, rep.generator(name));
  if (!group.element(0).a.is_zero() || !group.element(0).s.is_identity()) {
    throw std::logic_error("first element is not the identity");
  }
  images[0] = rep.identity();
  std::vector<std::size_t> queue = {0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t i = queue[head];
    for (const auto& [x, image] : gens) {
      const std::size_t j = group.index_of(group.element(i) * x);
      Image value = *images[i] * image;
      if (!images[j]) {
        images[j] = std::move(value);
        queue.push_back(j);
      } else if (!(*images[j] == value)) {
        throw std::invalid_argument("generator images do not define a homomorphism");
      }
    }
  }
  if (queue.size() != group.size()) throw std::invalid_argument("generators do not generate the group");
  std::vector<Image> out;
  out.reserve(images.size());
  for (auto& x : images) out.push_back(std::move(*x));
  return out;
}

template <class Rep>
bool faithful_enumerated(const Rep& rep, const EnumeratedGroup& group) {
  const auto images = walk_cayley_graph(rep, group);
  for (std::size_t i = 1; i < images.size(); ++i) {
    if (images[i].is_identity()) return false;
  }
  return true;
}

std::int64_t divide_by_order(const CyclotomicInt& sum, std::size_t order) {
  if (!sum.is_integer()) throw std::logic_error("character sum " + sum.to_string() + " is not rational");
  const std::int64_t total = sum.to_integer();
  if (total % static_cast<std::int64_t>(order) != 0) {
    throw std::logic_error("character sum " + std::to_string(total) + " is not divisible by the group order");
  }
  return total / static_cast<std::int64_t>(order);
}

}  // namespace

std::vector<MonomialElement> images_over(const MonomialRep& rep, const EnumeratedGroup& group) {
  return walk_cayley_graph(rep, group);
}

std::vector<ConjMonomialElement> images_over(const ConjMonomialRep& rep, const EnumeratedGroup& group) {
  return walk_cayley_graph(rep, group);
}

bool faithful(const MonomialRep& rep, const EnumeratedGroup& group) { return faithful_enumerated(rep, group); }
bool faithful(const ConjMonomialRep& rep, const EnumeratedGroup& group) { return faithful_enumerated(rep, group); }

std::int64_t character_norm(const MonomialRep& rep, const EnumeratedGroup& group) {
  CyclotomicInt sum(rep.root_order());
  for (const auto& x : images_over(rep, group)) {
    const CyclotomicInt chi = x.trace();
    sum += chi * chi.conj();
  }
  return divide_by_order(sum, group.size());
}

int frobenius_schur(const MonomialRep& rep, const EnumeratedGroup& group) {
  CyclotomicInt sum(rep.root_order());
  for (const auto& x : images_over(rep, group)) sum += (x * x).trace();
  return static_cast<int>(divide_by_order(sum, group.size()));
}

}  // namespace cubegroup
