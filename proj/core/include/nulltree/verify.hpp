#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nulltree/tree.hpp"

namespace nulltree {

struct CheckResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string first_failure;  // tree and reason of the first failure

  bool ok() const { return failed == 0; }
};

class PropertySuite {
 public:
  PropertySuite();

  /// Runs every per-tree property on t. Brute-force checks run when t has
  /// at most `brute_force_limit` vertices.
  void check(const Tree& t);

  std::size_t trees() const { return trees_; }
  const std::vector<CheckResult>& results() const { return results_; }
  bool ok() const;
  void merge(const PropertySuite& other);

  std::size_t brute_force_limit = 10;

 private:
  void record(std::size_t check, bool passed, const Tree& t, const std::string& why);

  std::size_t trees_ = 0;
  std::vector<CheckResult> results_;
};

/// Worked example trees E1, E2 and E3 as edge lists.
Tree fixture_e1();
Tree fixture_e2();
Tree fixture_e3();

/// E1 and E2 reproduced number by number; one result per claim.
std::vector<CheckResult> verify_fixtures();

/// "name  passed  failed" rows, then the first failure of each failing check.
std::string format_results(const std::vector<CheckResult>& results);

}  // namespace nulltree
