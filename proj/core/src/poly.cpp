#include "qhecke/poly.hpp"

namespace qh {

std::vector<std::string> variable_names(int n, const std::vector<std::string>& params) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
  names.insert(names.end(), params.begin(), params.end());
  return names;
}

}  // namespace qh
