#pragma once

#include <cstdint>

namespace dormant {

// Upper bound on enumerated labelings or summands. Overridden by the
// DORMANT_OPER_BUDGET environment variable.
constexpr uint64_t kDefaultBudget = 100'000'000;

uint64_t default_budget();

}  // namespace dormant
