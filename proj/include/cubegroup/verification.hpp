#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace cubegroup {

struct Check {
  std::string id;
  std::string claim;
  bool passed = false;
  std::string expected;
  std::string actual;
  std::string paper_ref;
};

/// Outcome of a batch of checks. Checks are kept sorted by id so that the
/// output does not depend on the order in which they ran.
class VerificationReport {
 public:
  void add(Check check);
  void add(std::string id, std::string claim, std::string expected, std::string actual,
           std::string paper_ref);  // passes iff expected == actual
  void merge(const VerificationReport& other);

  const std::vector<Check>& checks() const { return checks_; }
  std::size_t passed_count() const;
  std::size_t failed_count() const;
  bool all_passed() const { return failed_count() == 0; }
  const Check* find(std::string_view id) const;

  nlohmann::json to_json() const;
  std::string to_text() const;

 private:
  std::vector<Check> checks_;
};

/// Shell-style match with * and ?. A pattern without wildcards also selects
/// every id that extends it with a '-' suffix ("thm-5.3" selects "thm-5.3-faithful").
bool id_matches(std::string_view pattern, std::string_view id);

}  // namespace cubegroup
