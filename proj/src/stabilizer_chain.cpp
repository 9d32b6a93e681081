#include "cubegroup/stabilizer_chain.hpp"

#include <algorithm>

#include "cubegroup/errors.hpp"

namespace cubegroup {

StabilizerChain StabilizerChain::build(std::span<const Permutation> generators, std::size_t degree) {
  StabilizerChain chain(degree);
  for (const auto& g : generators) {
    if (g.degree() != degree) throw DegreeMismatch("generator degree differs from chain degree");
    const Permutation residue = chain.sift_from(0, g);
    if (!residue.is_identity()) chain.add_generator(0, g);
  }
  return chain;
}

BigCount StabilizerChain::order() const {
  BigCount out(1);
  for (const auto& level : levels_) out *= BigCount(level.orbit.size());
  return out;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return sift_from(0, p).is_identity();
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  for (const auto& level : levels_) out.push_back(level.base_point);
  return out;
}

std::vector<std::size_t> StabilizerChain::orbit_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& level : levels_) out.push_back(level.orbit.size());
  return out;
}

std::vector<Permutation> StabilizerChain::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto& level : levels_) {
    for (const auto& g : level.generators) {
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
  }
  return out;
}

Permutation StabilizerChain::sift_from(std::size_t level, Permutation p) const {
  for (std::size_t k = level; k < levels_.size(); ++k) {
    const auto& lv = levels_[k];
    const Point x = p(lv.base_point);
    const auto& u = lv.transversal[x];
    if (!u) return p;
    p = compose(u->inverse(), p);
  }
  return p;
}

// Precondition: g fixes the base points of levels < level and is not yet a member
// of the group stored from `level` down.
void StabilizerChain::add_generator(std::size_t level, const Permutation& g) {
  if (level == levels_.size()) {
    Level fresh;
    fresh.base_point = static_cast<Point>(g.first_moved_point());
    fresh.transversal.assign(degree_, std::nullopt);
    fresh.transversal[fresh.base_point] = Permutation(degree_);
    fresh.orbit.push_back(fresh.base_point);
    levels_.push_back(std::move(fresh));
  }
  levels_[level].generators.push_back(g);

  const std::size_t old_orbit_size = levels_[level].orbit.size();

  // Extend the orbit with every generator; new points get u_y = s * u_x.
  for (std::size_t i = 0; i < levels_[level].orbit.size(); ++i) {
    const Point x = levels_[level].orbit[i];
    const std::size_t gen_count = levels_[level].generators.size();
    for (std::size_t s = 0; s < gen_count; ++s) {
      auto& lv = levels_[level];
      const Point y = lv.generators[s](x);
      if (!lv.transversal[y]) {
        lv.transversal[y] = compose(lv.generators[s], *lv.transversal[x]);
        lv.orbit.push_back(y);
      }
    }
  }

  // Schreier generators u_{s(x)}^-1 s u_x: new generator against old points,
  // then every generator against the points that just joined the orbit.
  for (std::size_t i = 0; i < old_orbit_size; ++i) {
    const auto& lv = levels_[level];
    const Point x = lv.orbit[i];
    const Permutation h =
        compose(lv.transversal[g(x)]->inverse(), compose(g, *lv.transversal[x]));
    process_schreier(level, h);
  }
  for (std::size_t i = old_orbit_size; i < levels_[level].orbit.size(); ++i) {
    const std::size_t gen_count = levels_[level].generators.size();
    for (std::size_t s = 0; s < gen_count; ++s) {
      const auto& lv = levels_[level];
      const Point x = lv.orbit[i];
      const Permutation& gen = lv.generators[s];
      const Permutation h =
          compose(lv.transversal[gen(x)]->inverse(), compose(gen, *lv.transversal[x]));
      process_schreier(level, h);
    }
  }
}

void StabilizerChain::process_schreier(std::size_t level, const Permutation& h) {
  if (h.is_identity()) return;
  const Permutation residue = sift_from(level + 1, h);
  if (!residue.is_identity()) add_generator(level + 1, residue);
}

}  // namespace cubegroup
