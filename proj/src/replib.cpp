#include "cubegroup/replib.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cubegroup/errors.hpp"

namespace cubegroup {

namespace {

Permutation cycle_perm(std::vector<int> cycle, std::size_t degree) {
  return perm_from_cycles(std::vector<std::vector<int>>{std::move(cycle)}, degree);
}

std::vector<int> range(int from, int to) {
  std::vector<int> out(static_cast<std::size_t>(to - from + 1));
  std::iota(out.begin(), out.end(), from);
  return out;
}

void add_faces(MonomialRep& rep, MonomialElement (*image)(const MoveWord&)) {
  for (Face f : kFaces) rep.set_generator(std::string(1, face_letter(f)), image(MoveWord::generator(f)));
}

}  // namespace

MonomialElement g2_image(const G2Element& x) { return MonomialElement{3, x.perm, x.twist.entries()}; }

MonomialElement g3_image(const G3Element& x) {
  std::vector<int> exps;
  for (int f : x.flip.entries()) exps.push_back(3 * f);
  for (int t : x.twist.entries()) exps.push_back(2 * t);
  return MonomialElement{6, direct_sum(x.edge_perm, x.corner_perm), std::move(exps)};
}

MonomialRep build_rep_g2() {
  MonomialRep rep(kCorners, 3);
  add_faces(rep, [](const MoveWord& w) { return g2_image(word_to_g2(w)); });
  for (std::size_t i = 0; i + 1 < kCorners; ++i) {
    std::vector<int> k(kCorners, 0);
    k[i] = 1;
    k[i + 1] = 2;
    rep.set_generator("a" + std::to_string(i + 1),
                      g2_image(G2Element{OrientationVector(3, k, true), Permutation(kCorners)}));
  }
  const auto zero = OrientationVector::zero(3, kCorners, true);
  rep.set_generator("s1", g2_image(G2Element{zero, cycle_perm({1, 2}, kCorners)}));
  rep.set_generator("s2", g2_image(G2Element{zero, cycle_perm(range(1, 8), kCorners)}));
  return rep;
}

MonomialRep build_rep_g3() {
  MonomialRep rep(kEdges + kCorners, 6);
  add_faces(rep, [](const MoveWord& w) { return g3_image(word_to_g3(w)); });
  const auto flip0 = OrientationVector::zero(2, kEdges, true);
  const auto twist0 = OrientationVector::zero(3, kCorners, true);
  const Permutation e_id(kEdges), c_id(kCorners);
  for (std::size_t i = 0; i + 1 < kEdges; ++i) {
    std::vector<int> f(kEdges, 0);
    f[i] = f[i + 1] = 1;
    rep.set_generator("f" + std::to_string(i + 1),
                      g3_image(G3Element{OrientationVector(2, f, true), twist0, e_id, c_id}));
  }
  for (std::size_t i = 0; i + 1 < kCorners; ++i) {
    std::vector<int> k(kCorners, 0);
    k[i] = 1;
    k[i + 1] = 2;
    rep.set_generator("a" + std::to_string(i + 1),
                      g3_image(G3Element{flip0, OrientationVector(3, k, true), e_id, c_id}));
  }
  rep.set_generator("p1", g3_image(G3Element{flip0, twist0, cycle_perm({1, 2, 3}, kEdges), c_id}));
  rep.set_generator("p2", g3_image(G3Element{flip0, twist0, cycle_perm(range(2, 12), kEdges), c_id}));
  rep.set_generator("p3", g3_image(G3Element{flip0, twist0, e_id, cycle_perm({1, 2, 3}, kCorners)}));
  rep.set_generator("p4", g3_image(G3Element{flip0, twist0, e_id, cycle_perm(range(2, 8), kCorners)}));
  rep.set_generator("p5", g3_image(G3Element{flip0, twist0, cycle_perm({1, 2}, kEdges), cycle_perm({1, 2}, kCorners)}));
  return rep;
}

SplitGroup g2_split_group() {
  SplitGroup g{"Z_{3,0}^8 x| S_8", {{3, {}}}, {"s1", "s2"}, BigCount::factorial(8)};
  for (int i = 1; i <= 7; ++i) g.blocks[0].basis.push_back("a" + std::to_string(i));
  return g;
}

SplitGroup g3_split_group() {
  SplitGroup g{"(Z_{2,0}^12 + Z_{3,0}^8) x| P",
               {{2, {}}, {3, {}}},
               {"p1", "p2", "p3", "p4", "p5"},
               (BigCount::factorial(12) * BigCount::factorial(8)).exact_div(2)};
  for (int i = 1; i <= 11; ++i) g.blocks[0].basis.push_back("f" + std::to_string(i));
  for (int i = 1; i <= 7; ++i) g.blocks[1].basis.push_back("a" + std::to_string(i));
  return g;
}

// ---------------------------------------------------------------------------

PermGroupDescriptor PermGroupDescriptor::parse(std::string_view text) {
  std::string s(text);
  // Accept the multiplication sign as a separator.
  for (std::size_t pos; (pos = s.find("×")) != std::string::npos;) s.replace(pos, std::string("×").size(), "x");
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  if (s.empty()) throw ParseError("empty group descriptor");
  auto number = [&](const std::string& digits) {
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      throw ParseError("invalid degree in '" + std::string(text) + "'");
    }
    return static_cast<unsigned>(std::stoul(digits));
  };
  PermGroupDescriptor out;
  std::istringstream in(s);
  std::string token;
  while (std::getline(in, token, 'x')) {
    Factor f;
    if (token == "1") {
      f.kind = Kind::Trivial;
    } else if (token == "P") {
      f = Factor{Kind::ParityPair, 12, 8};
    } else if (token.size() > 3 && token.substr(0, 2) == "P(" && token.back() == ')') {
      const std::string inner = token.substr(2, token.size() - 3);
      const auto comma = inner.find(',');
      if (comma == std::string::npos) throw ParseError("P needs two degrees");
      f = Factor{Kind::ParityPair, number(inner.substr(0, comma)), number(inner.substr(comma + 1))};
    } else if (token.size() > 1 && (token[0] == 'S' || token[0] == 'A')) {
      f = Factor{token[0] == 'S' ? Kind::Symmetric : Kind::Alternating, number(token.substr(1)), 0};
      if (f.n == 0) throw ParseError("degree must be positive");
    } else {
      throw ParseError("unknown group factor '" + token + "'");
    }
    out.factors.push_back(f);
  }
  return out;
}

std::string PermGroupDescriptor::to_string() const {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += "x";
    switch (f.kind) {
      case Kind::Trivial: out += "1"; break;
      case Kind::Symmetric: out += "S" + std::to_string(f.n); break;
      case Kind::Alternating: out += "A" + std::to_string(f.n); break;
      case Kind::ParityPair: out += "P(" + std::to_string(f.n) + "," + std::to_string(f.n2) + ")"; break;
    }
  }
  return out.empty() ? "1" : out;
}

unsigned mu(const PermGroupDescriptor& h) {
  using Kind = PermGroupDescriptor::Kind;
  std::vector<PermGroupDescriptor::Factor> nontrivial;
  for (const auto& f : h.factors) {
    const bool trivial = f.kind == Kind::Trivial || (f.n <= 1 && f.kind == Kind::Symmetric) ||
                         (f.n <= 2 && f.kind == Kind::Alternating);
    if (!trivial) nontrivial.push_back(f);
  }
  if (nontrivial.empty()) return 1;
  if (nontrivial.size() == 1) {
    const auto& f = nontrivial[0];
    switch (f.kind) {
      case Kind::Symmetric:
      case Kind::Alternating: return f.n;  // A_3 and A_4 also need 3 and 4 points
      case Kind::ParityPair:
        if (f.n >= 5 && f.n2 >= 5) return f.n + f.n2;
        break;
      case Kind::Trivial: break;
    }
    throw std::invalid_argument("no minimal degree known for " + h.to_string());
  }
  unsigned sum = 0;
  for (const auto& f : nontrivial) {
    if (f.kind != Kind::Alternating || f.n < 5) {
      throw std::invalid_argument("no minimal degree known for " + h.to_string());
    }
    sum += f.n;
  }
  return sum;
}

unsigned mu(std::string_view descriptor) { return mu(PermGroupDescriptor::parse(descriptor)); }

unsigned lower_bound_complex_split(const FiniteAbelianGroup&, const PermGroupDescriptor& h) { return mu(h); }

G2RealCases g2_real_case_analysis() {
  const unsigned m = mu("S8");
  const auto b = static_cast<unsigned>(zk0m(3, 8).group.b());
  G2RealCases out{2 * m, m + 2 * b, 0};
  out.minimum = std::min(out.q_inject, out.p_inject);
  return out;
}

std::string KernelCaseRow::to_string() const {
  return "(" + k_p + ", " + k_q + ", " + std::to_string(p) + ", " + std::to_string(q) + ", " +
         std::to_string(bound) + ")";
}

G3RealCaseTable g3_real_case_table() {
  // The normal subgroups of P, as bit sets: bit 0 the A_8 factor, bit 1 the A_12
  // factor, bit 2 the odd part. Intersection is bitwise and.
  struct Normal {
    std::string name;
    unsigned bits;
    const char* quotient;  // P/N, or nullptr when N = P
  };
  const std::vector<Normal> normals = {{"1", 0, "P(12,8)"},
                                       {"1×A₈", 1, "S12"},
                                       {"A₁₂×1", 2, "S8"},
                                       {"A₈×A₁₂", 3, "S2"},
                                       {"P", 7, nullptr}};
  auto blocks = [](const Normal& n) { return n.quotient ? mu(n.quotient) : 0u; };
  const auto j = zk0m(2, 12).group + zk0m(3, 8).group;
  const auto b = static_cast<unsigned>(j.b());
  auto row = [&](const Normal& kp, const Normal& kq) {
    const unsigned p = blocks(kp), q = blocks(kq);
    return KernelCaseRow{kp.name, kq.name, p, q, p + 2 * q, p + 2 * std::max(q, b)};
  };

  G3RealCaseTable out;
  const std::vector<std::pair<std::size_t, std::size_t>> listed = {{0, 0}, {1, 2}, {2, 1}, {0, 3},
                                                                    {3, 0}, {0, 4}, {4, 0}};
  for (auto [x, y] : listed) out.rows.push_back(row(normals[x], normals[y]));
  for (std::size_t x = 0; x < normals.size(); ++x) {
    for (std::size_t y = 0; y < normals.size(); ++y) {
      if ((normals[x].bits & normals[y].bits) != 0) continue;
      if (std::find(listed.begin(), listed.end(), std::pair{x, y}) != listed.end()) continue;
      out.other_rows.push_back(row(normals[x], normals[y]));
    }
  }
  out.minimum = ~0u;
  for (const auto& r : out.rows) out.minimum = std::min(out.minimum, r.refined);
  for (const auto& r : out.other_rows) out.minimum = std::min(out.minimum, r.refined);
  return out;
}

std::size_t subgroup_real_lower_bound(const FiniteAbelianGroup& a) { return mdim_real_abelian(a); }

// ---------------------------------------------------------------------------

ConjMonomialElement exceptional_rep6_image(const SemidirectElement& x) {
  if (x.a.size() != 4 || x.s.degree() != 4 || x.a.modulus() != 3) {
    throw DegreeMismatch("expected an element of Z_{3,0}^4 x| S_4");
  }
  ConjMonomialElement out = ConjMonomialElement::identity(0, 3, 3);
  std::vector<Point> images(3);
  for (Point j = 0; j < 3; ++j) {
    // Block j carries the character of the pair {j, 4}; s sends it to the pair
    // {s(j), s(4)}, which is either {t, 4} or the complement of {t, 4}.
    const Point u = x.s(j), v = x.s(3);
    Point t;
    int flag = 0;
    if (v == 3) {
      t = u;
    } else if (u == 3) {
      t = v;
    } else {
      t = static_cast<Point>(3 - u - v);
      flag = 1;
    }
    images[j] = t;
    out.flags[t] = flag;
  }
  out.rot_perm = Permutation::from_images(std::move(images));
  for (std::size_t t = 0; t < 3; ++t) out.exps[t] = (x.a[t] + x.a[3]) % 3;
  return out;
}

ExceptionalExample build_exceptional() {
  ExceptionalExample out{EnumeratedGroup::sum_zero_semidirect(3, 4), MonomialRep(4, 3), ConjMonomialRep(0, 3, 3)};
  for (const auto& [name, x] : out.group.generators()) {
    out.rep4.set_generator(name, MonomialElement{3, x.s, x.a.entries()});
    out.rep6.set_generator(name, exceptional_rep6_image(x));
  }
  return out;
}

}  // namespace cubegroup
