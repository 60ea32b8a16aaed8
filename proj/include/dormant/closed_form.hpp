#pragma once

#include <cstdint>

#include "dormant/budget.hpp"

namespace dormant {

struct ClosedFormResult {
  int64_t value = 0;
  double residual = 0.0;  // distance of the raw sum from value
  uint64_t terms = 0;
};

// p^{g-1} / 2^{2g-1+r} * sum_{j=1}^{p-1} (1 - (-1)^j cos(j pi/p))^r / sin^{2(g-1+r)}(j pi/p)
ClosedFormResult verlinde_sl2(uint32_t p, int g, int r);

// p^{(n-1)(g-1)-1} / n! * sum over n-tuples of distinct p-th roots of unity of
// (prod z_i)^{(n-1)(g-1)} / prod_{i != j} (z_i - z_j)^{g-1}. With ordered
// set, every permutation is summed instead of one representative per set.
ClosedFormResult joshi_sln(uint32_t p, int n, int g, bool ordered = false,
                           uint64_t budget = default_budget());

}  // namespace dormant
