#include "cubegroup/verification.hpp"

#include <algorithm>
#include <sstream>

namespace cubegroup {

void VerificationReport::add(Check check) {
  auto pos = std::lower_bound(checks_.begin(), checks_.end(), check.id,
                              [](const Check& c, const std::string& id) { return c.id < id; });
  checks_.insert(pos, std::move(check));
}

void VerificationReport::add(std::string id, std::string claim, std::string expected,
                             std::string actual, std::string paper_ref) {
  const bool passed = expected == actual;
  add(Check{std::move(id), std::move(claim), passed, std::move(expected), std::move(actual),
            std::move(paper_ref)});
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& c : other.checks_) add(c);
}

std::size_t VerificationReport::passed_count() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; }));
}

std::size_t VerificationReport::failed_count() const { return checks_.size() - passed_count(); }

const Check* VerificationReport::find(std::string_view id) const {
  for (const auto& c : checks_) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : checks_) {
    out.push_back({{"id", c.id},
                   {"claim", c.claim},
                   {"status", c.passed ? "pass" : "fail"},
                   {"expected", c.expected},
                   {"actual", c.actual},
                   {"paper_ref", c.paper_ref}});
  }
  return out;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks_) {
    out << (c.passed ? "PASS " : "FAIL ") << c.id << "  " << c.claim << '\n';
    if (!c.passed) {
      out << "     expected: " << c.expected << '\n' << "     actual:   " << c.actual << '\n';
    }
  }
  out << passed_count() << " passed, " << failed_count() << " failed\n";
  return out.str();
}

namespace {

bool glob(std::string_view p, std::string_view s) {
  std::size_t pi = 0, si = 0, star = std::string_view::npos, mark = 0;
  while (si < s.size()) {
    if (pi < p.size() && (p[pi] == '?' || p[pi] == s[si])) {
      ++pi;
      ++si;
    } else if (pi < p.size() && p[pi] == '*') {
      star = pi++;
      mark = si;
    } else if (star != std::string_view::npos) {
      pi = star + 1;
      si = ++mark;
    } else {
      return false;
    }
  }
  while (pi < p.size() && p[pi] == '*') ++pi;
  return pi == p.size();
}

}  // namespace

bool id_matches(std::string_view pattern, std::string_view id) {
  if (pattern.find_first_of("*?") != std::string_view::npos) return glob(pattern, id);
  if (id == pattern) return true;
  return id.size() > pattern.size() && id.substr(0, pattern.size()) == pattern && id[pattern.size()] == '-';
}

}  // namespace cubegroup
