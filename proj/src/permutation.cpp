#include "cubegroup/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "cubegroup/errors.hpp"

namespace cubegroup {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point x : images) {
    if (x >= images.size() || seen[x]) {
      throw std::invalid_argument("image table is not a bijection");
    }
    seen[x] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_one_based(std::span<const int> images) {
  std::vector<Point> zero_based;
  zero_based.reserve(images.size());
  for (int x : images) {
    if (x < 1) throw std::invalid_argument("labels are 1-based");
    zero_based.push_back(static_cast<Point>(x - 1));
  }
  return from_images(std::move(zero_based));
}

std::vector<int> Permutation::one_based_images() const {
  std::vector<int> out;
  out.reserve(images_.size());
  for (Point x : images_) out.push_back(static_cast<int>(x) + 1);
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(degree());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

bool Permutation::is_identity() const { return first_moved_point() == degree(); }

std::size_t Permutation::first_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return i;
  }
  return images_.size();
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::size_t Permutation::order() const {
  std::size_t out = 1;
  for (const auto& c : cycles()) out = std::lcm(out, c.size());
  return out;
}

Permutation Permutation::restrict_to(std::size_t offset, std::size_t count) const {
  if (offset + count > degree()) throw DegreeMismatch("restriction out of range");
  std::vector<Point> images(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t y = images_[offset + i];
    if (y < offset || y >= offset + count) {
      throw std::invalid_argument("block is not invariant under the permutation");
    }
    images[i] = static_cast<Point>(y - offset);
  }
  return from_images(std::move(images));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DegreeMismatch("cannot compose permutations of degree " + std::to_string(p.degree()) +
                         " and " + std::to_string(q.degree()));
  }
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = p(q(static_cast<Point>(i)));
  return Permutation::from_images(std::move(images));
}

Permutation conjugate(const Permutation& g, const Permutation& x) {
  return compose(compose(g, x), g.inverse());
}

Permutation commutator(const Permutation& g, const Permutation& h) {
  return compose(compose(g, h), compose(g.inverse(), h.inverse()));
}

Permutation power(const Permutation& p, long long exponent) {
  Permutation base = exponent < 0 ? p.inverse() : p;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent)
                                      : static_cast<unsigned long long>(exponent);
  Permutation out(p.degree());
  while (e != 0) {
    if (e & 1U) out = compose(out, base);
    base = compose(base, base);
    e >>= 1U;
  }
  return out;
}

int sign(const Permutation& p) {
  std::size_t transpositions = 0;
  for (const auto& c : p.cycles()) transpositions += c.size() - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

Permutation direct_sum(const Permutation& p, const Permutation& q) {
  std::vector<Point> images;
  images.reserve(p.degree() + q.degree());
  for (Point x : p.images()) images.push_back(x);
  for (Point x : q.images()) images.push_back(static_cast<Point>(x + p.degree()));
  return Permutation::from_images(std::move(images));
}

namespace {

int char_label(char ch) {
  if (ch >= '1' && ch <= '9') return ch - '0';
  if (ch >= 'a' && ch <= 'l') return ch - 'a' + 1;
  throw ParseError(std::string("invalid cycle label '") + ch + "'");
}

std::vector<int> parse_cycle_body(std::string_view body) {
  std::vector<int> labels;
  const bool separated = body.find_first_of(", ") != std::string_view::npos;
  if (!separated) {
    for (char ch : body) labels.push_back(char_label(ch));
    return labels;
  }
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    bool numeric = true;
    for (char ch : token) numeric = numeric && std::isdigit(static_cast<unsigned char>(ch));
    if (numeric) {
      labels.push_back(std::stoi(token));
    } else if (token.size() == 1) {
      labels.push_back(char_label(token[0]));
    } else {
      throw ParseError("invalid cycle label '" + token + "'");
    }
    token.clear();
  };
  for (char ch : body) {
    if (ch == ',' || ch == ' ') {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  flush();
  return labels;
}

}  // namespace

Permutation perm_from_cycles(const std::vector<std::vector<int>>& cycles, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (int label : cycle) {
      if (label < 1 || static_cast<std::size_t>(label) > degree) {
        throw ParseError("label " + std::to_string(label) + " out of range 1.." +
                         std::to_string(degree));
      }
      if (used[label - 1]) throw ParseError("duplicate label " + std::to_string(label));
      used[label - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i] - 1] = static_cast<Point>(cycle[(i + 1) % cycle.size()] - 1);
    }
  }
  return Permutation::from_images(std::move(images));
}

Permutation perm_from_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
      continue;
    }
    if (ch != '(') throw ParseError("expected '(' in cycle notation: " + std::string(text));
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw ParseError("unterminated cycle: " + std::string(text));
    auto labels = parse_cycle_body(text.substr(pos + 1, close - pos - 1));
    if (!labels.empty()) cycles.push_back(std::move(labels));
    pos = close + 1;
  }
  return perm_from_cycles(cycles, degree);
}

std::string to_cycle_string(const Permutation& p, LabelStyle style) {
  const auto cycles = p.cycles();
  if (cycles.empty()) return "()";
  std::ostringstream out;
  for (const auto& cycle : cycles) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int label = cycle[i] + 1;
      switch (style) {
        case LabelStyle::Digits:
          out << label;
          break;
        case LabelStyle::Letters:
          out << static_cast<char>('a' + label - 1);
          break;
        case LabelStyle::Numbers:
          if (i != 0) out << ',';
          out << label;
          break;
      }
    }
    out << ')';
  }
  return out.str();
}

std::string to_cycle_string_auto(const Permutation& p) {
  return to_cycle_string(p, p.degree() <= 9 ? LabelStyle::Digits : LabelStyle::Numbers);
}

}  // namespace cubegroup
