#include "dormant/budget.hpp"

#include <cstdlib>
#include <string>

namespace dormant {

uint64_t default_budget() {
  const char* env = std::getenv("DORMANT_OPER_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultBudget;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  return kDefaultBudget;
}

}  // namespace dormant
