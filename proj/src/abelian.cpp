#include "cubegroup/abelian.hpp"

#include <algorithm>
#include <bitset>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "cubegroup/errors.hpp"

namespace cubegroup {

namespace {

std::map<std::uint64_t, std::vector<int>> prime_exponents(std::span<const std::uint64_t> orders) {
  std::map<std::uint64_t, std::vector<int>> out;
  for (std::uint64_t n : orders) {
    for (std::uint64_t p = 2; p * p <= n; ++p) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      if (e > 0) out[p].push_back(e);
    }
    if (n > 1) out[n].push_back(1);
  }
  return out;
}

std::vector<std::uint64_t> assemble(std::map<std::uint64_t, std::vector<int>> parts) {
  std::size_t s = 0;
  for (auto& [p, exps] : parts) {
    std::sort(exps.rbegin(), exps.rend());
    s = std::max(s, exps.size());
  }
  std::vector<std::uint64_t> out(s, 1);
  for (const auto& [p, exps] : parts) {
    for (std::size_t j = 0; j < exps.size(); ++j) {
      for (int e = 0; e < exps[j]; ++e) out[s - 1 - j] *= p;
    }
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> invariant_factors(std::span<const std::uint64_t> orders) {
  for (auto n : orders) {
    if (n < 2) throw std::invalid_argument("cyclic orders must be at least 2");
  }
  return assemble(prime_exponents(orders));
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::uint64_t> cyclic_orders)
    : orders_(std::move(cyclic_orders)), factors_(cubegroup::invariant_factors(orders_)) {}

FiniteAbelianGroup FiniteAbelianGroup::parse(std::string_view text) {
  auto numbers = [](std::string_view text) {
    std::vector<std::uint64_t> out;
    std::string token;
    std::istringstream in{std::string(text)};
    while (std::getline(in, token, ',')) {
      token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
      if (token.empty() || !std::all_of(token.begin(), token.end(), ::isdigit)) {
        throw ParseError("invalid group order '" + token + "'");
      }
      out.push_back(std::stoull(token));
    }
    return out;
  };
  if (text.empty() || text == "1" || text == "0") return FiniteAbelianGroup();
  if (text.substr(0, 5) == "zk0m:") {
    const auto args = numbers(text.substr(5));
    if (args.size() != 2) throw ParseError("zk0m takes two arguments k,m");
    return zk0m(static_cast<int>(args[0]), static_cast<int>(args[1])).group;
  }
  auto orders = numbers(text);
  for (auto n : orders) {
    if (n < 2) throw ParseError("cyclic orders must be at least 2");
  }
  return FiniteAbelianGroup(std::move(orders));
}

std::uint64_t FiniteAbelianGroup::order() const {
  std::uint64_t out = 1;
  for (auto n : orders_) out *= n;
  return out;
}

std::size_t FiniteAbelianGroup::a() const {
  return static_cast<std::size_t>(std::count(factors_.begin(), factors_.end(), 2));
}

std::size_t FiniteAbelianGroup::b() const { return factors_.size() - a(); }

FiniteAbelianGroup FiniteAbelianGroup::operator+(const FiniteAbelianGroup& rhs) const {
  std::vector<std::uint64_t> orders = orders_;
  orders.insert(orders.end(), rhs.orders_.begin(), rhs.orders_.end());
  return FiniteAbelianGroup(std::move(orders));
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < factors_.size();) {
    std::size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    if (i != 0) out << " + ";
    out << "Z_" << factors_[i];
    if (j - i > 1) out << '^' << (j - i);
    i = j;
  }
  return out.str();
}

SumZeroGroup zk0m(int k, int m) {
  if (k < 2) throw std::invalid_argument("zk0m needs k >= 2");
  if (m < 1) throw std::invalid_argument("zk0m needs m >= 1");
  SumZeroGroup out;
  out.group = FiniteAbelianGroup(std::vector<std::uint64_t>(static_cast<std::size_t>(m - 1), static_cast<std::uint64_t>(k)));
  for (int i = 0; i + 1 < m; ++i) {
    std::vector<int> v(static_cast<std::size_t>(m), 0);
    v[static_cast<std::size_t>(i)] = 1;
    v[static_cast<std::size_t>(i + 1)] = k - 1;
    out.basis.push_back(std::move(v));
  }
  return out;
}

std::size_t mdim_complex_abelian(const FiniteAbelianGroup& g) { return g.a() + g.b(); }

std::size_t mdim_real_abelian(const FiniteAbelianGroup& g) { return g.a() + 2 * g.b(); }

namespace {

constexpr std::size_t kMaxOracleOrder = 512;
using Kernel = std::bitset<kMaxOracleOrder>;

std::vector<std::uint64_t> digits(std::uint64_t index, const std::vector<std::uint64_t>& radix) {
  std::vector<std::uint64_t> out(radix.size());
  for (std::size_t i = 0; i < radix.size(); ++i) {
    out[i] = index % radix[i];
    index /= radix[i];
  }
  return out;
}

}  // namespace

std::size_t oracle_min_faithful(const FiniteAbelianGroup& g, Field field, std::uint64_t bound) {
  const std::uint64_t order = g.order();
  if (order > bound || order > kMaxOracleOrder) {
    throw std::length_error("group of order " + std::to_string(order) + " exceeds the oracle bound");
  }
  if (order == 1) return 0;
  const auto& radix = g.cyclic_orders();
  std::uint64_t lcm = 1;
  for (auto n : radix) lcm = std::lcm(lcm, n);

  std::vector<std::vector<std::uint64_t>> elems(order);
  for (std::uint64_t x = 0; x < order; ++x) elems[x] = digits(x, radix);

  struct Character {
    Kernel kernel;
    std::size_t cost;
  };
  std::vector<Character> chars;
  for (std::uint64_t v = 1; v < order; ++v) {
    const auto& ve = elems[v];
    Character c{{}, 1};
    bool real = true;
    for (std::size_t i = 0; i < radix.size(); ++i) real = real && (2 * ve[i]) % radix[i] == 0;
    if (field == Field::Real && !real) c.cost = 2;
    for (std::uint64_t x = 0; x < order; ++x) {
      std::uint64_t phase = 0;
      for (std::size_t i = 0; i < radix.size(); ++i) phase += ve[i] * elems[x][i] * (lcm / radix[i]);
      if (phase % lcm == 0) c.kernel.set(x);
    }
    chars.push_back(c);
  }

  Kernel start;
  for (std::uint64_t x = 0; x < order; ++x) start.set(x);
  Kernel goal;
  goal.set(0);

  std::unordered_map<Kernel, std::size_t> best;
  using Item = std::pair<std::size_t, Kernel>;
  auto cmp = [](const Item& x, const Item& y) { return x.first > y.first; };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> queue(cmp);
  best[start] = 0;
  queue.push({0, start});
  while (!queue.empty()) {
    auto [cost, kernel] = queue.top();
    queue.pop();
    if (kernel == goal) return cost;
    if (best[kernel] < cost) continue;
    for (const auto& c : chars) {
      const Kernel next = kernel & c.kernel;
      if (next == kernel) continue;
      const std::size_t next_cost = cost + c.cost;
      auto it = best.find(next);
      if (it == best.end() || next_cost < it->second) {
        best[next] = next_cost;
        queue.push({next_cost, next});
      }
    }
  }
  throw std::logic_error("no faithful set of characters found");
}

std::vector<FiniteAbelianGroup> abelian_groups_up_to(std::uint64_t n) {
  std::vector<FiniteAbelianGroup> out = {FiniteAbelianGroup()};
  std::vector<std::uint64_t> chain;
  std::function<void(std::uint64_t, std::uint64_t)> grow = [&](std::uint64_t last, std::uint64_t product) {
    for (std::uint64_t d = last; product * d <= n; d += last) {
      chain.push_back(d);
      out.emplace_back(chain);
      grow(d, product * d);
      chain.pop_back();
    }
  };
  for (std::uint64_t d1 = 2; d1 <= n; ++d1) {
    chain = {d1};
    out.emplace_back(chain);
    grow(d1, d1);
  }
  return out;
}

std::vector<std::vector<std::uint64_t>> cyclic_order_multisets_up_to(std::uint64_t n) {
  std::vector<std::vector<std::uint64_t>> out = {{}};
  std::vector<std::uint64_t> current;
  std::function<void(std::uint64_t, std::uint64_t)> grow = [&](std::uint64_t min, std::uint64_t product) {
    for (std::uint64_t d = min; product * d <= n; ++d) {
      current.push_back(d);
      out.push_back(current);
      grow(d, product * d);
      current.pop_back();
    }
  };
  grow(2, 1);
  return out;
}

std::vector<std::uint64_t> factors_from_order_census(const std::vector<std::uint64_t>& census) {
  std::uint64_t total = 0;
  std::uint64_t exponent = 1;
  for (std::uint64_t d = 1; d < census.size(); ++d) {
    total += census[d];
    if (census[d] > 0) exponent = std::lcm(exponent, d);
  }
  std::map<std::uint64_t, std::vector<int>> parts;
  std::uint64_t rest = exponent;
  for (std::uint64_t p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    int top = 0;
    while (rest % p == 0) {
      rest /= p;
      ++top;
    }
    // c_j = log_p(#{x : x^{p^j} = 1} / #{x : x^{p^{j-1}} = 1}) = #{i : e_i >= j}.
    std::vector<int> at_least;
    std::uint64_t prev = 1, pj = 1;
    for (int j = 1; j <= top; ++j) {
      pj *= p;
      std::uint64_t count = 0;
      for (std::uint64_t d = 1; d < census.size(); ++d) {
        if (pj % d == 0) count += census[d];
      }
      std::uint64_t ratio = count / prev;
      int c = 0;
      while (ratio > 1) {
        ratio /= p;
        ++c;
      }
      at_least.push_back(c);
      prev = count;
    }
    std::vector<int> exps;
    for (int j = top; j >= 1; --j) {
      const int with_exactly = at_least[j - 1] - (j < top ? at_least[j] : 0);
      for (int r = 0; r < with_exactly; ++r) exps.push_back(j);
    }
    parts[p] = exps;
  }
  (void)total;
  return assemble(parts);
}

VerificationReport subgroup_factor_check(const FiniteAbelianGroup& g, std::size_t trials, std::uint64_t seed,
                                         std::uint64_t bound) {
  const std::uint64_t order = g.order();
  if (order > bound) throw std::length_error("group of order " + std::to_string(order) + " exceeds the bound");
  const auto& radix = g.cyclic_orders();
  const auto& d = g.invariant_factors();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, order - 1);
  std::uniform_int_distribution<int> how_many(0, 3);

  auto element_order = [&](std::uint64_t x) {
    const auto xs = digits(x, radix);
    std::uint64_t o = 1;
    for (std::size_t i = 0; i < radix.size(); ++i) o = std::lcm(o, radix[i] / std::gcd(xs[i], radix[i]));
    return o;
  };
  auto add = [&](std::uint64_t x, std::uint64_t y) {
    const auto xs = digits(x, radix), ys = digits(y, radix);
    std::uint64_t out = 0, scale = 1;
    for (std::size_t i = 0; i < radix.size(); ++i) {
      out += ((xs[i] + ys[i]) % radix[i]) * scale;
      scale *= radix[i];
    }
    return out;
  };

  std::size_t bad = 0, equal_cases = 0, trivial_cases = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<std::uint64_t> gens;
    if (t == 0) {
      std::uint64_t scale = 1;
      for (auto n : radix) {
        gens.push_back(scale);
        scale *= n;
      }
    } else if (t > 1) {
      const int k = how_many(rng);
      for (int i = 0; i < k; ++i) gens.push_back(pick(rng));
    }
    std::set<std::uint64_t> members = {0};
    std::vector<std::uint64_t> queue = {0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto s : gens) {
        const auto y = add(queue[i], s);
        if (members.insert(y).second) queue.push_back(y);
      }
    }
    std::vector<std::uint64_t> census(order + 1, 0);
    for (auto x : members) ++census[element_order(x)];
    const auto e = factors_from_order_census(census);
    bool ok = e.size() <= d.size();
    for (std::size_t i = 0; ok && i < e.size(); ++i) ok = d[d.size() - 1 - i] % e[e.size() - 1 - i] == 0;
    if (t == 0) {
      ok = ok && e == d;
      equal_cases += e == d;
    }
    if (t == 1) {
      ok = ok && e.empty();
      trivial_cases += e.empty();
    }
    if (!ok) ++bad;
  }
  VerificationReport report;
  report.add("prop-4.2-subgroups",
             "subgroups of " + g.to_string() + " have at most as many invariant factors, dividing from the top",
             std::to_string(0) + " failures in " + std::to_string(trials),
             std::to_string(bad) + " failures in " + std::to_string(trials), "invariant factors of a subgroup");
  return report;
}

}  // namespace cubegroup
