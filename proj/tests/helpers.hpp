#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sctool/types.hpp"

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string fixture(const std::string& name) {
  return slurp(std::string(SCTOOL_FIXTURES_DIR) + "/" + name);
}

// Shorthand for flat profiles in tests: candidate names plus rankings given
// as candidate indices, best first.
inline sctool::Profile flat(std::vector<std::string> names,
                            std::vector<std::vector<int>> rankings,
                            std::vector<long long> mult = {}) {
  std::vector<sctool::LinearOrder> voters;
  voters.reserve(rankings.size());
  for (auto& r : rankings) voters.emplace_back(std::move(r));
  return sctool::Profile(std::move(names), std::move(voters), std::move(mult));
}

inline sctool::Profile smallstar() {
  return flat({"a", "b", "c", "d"},
              {{0, 1, 2, 3}, {0, 2, 1, 3}, {3, 0, 2, 1}, {2, 1, 0, 3}});
}

inline sctool::Tree star_tree() {
  return sctool::Tree(4, {{1, 2}, {2, 3}, {2, 4}});
}

inline sctool::Profile latin4() {
  return flat({"a", "b", "c", "d"},
              {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}});
}

inline sctool::Profile unanimous4() {
  return flat({"a", "b", "c", "d"},
              {{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}});
}
