#pragma once

// Small random generators for property tests. Everything is driven by an
// explicit mt19937_64 so failures replay from the printed seed.

#include <cstdint>
#include <random>
#include <vector>

#include "dormant/field.hpp"
#include "dormant/matrix.hpp"
#include "dormant/polynomial.hpp"
#include "dormant/rational_function.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int64_t residue(Rng& rng, uint32_t p) {
  return static_cast<int64_t>(std::uniform_int_distribution<uint32_t>(0, p - 1)(rng));
}

inline dormant::Fp element(Rng& rng, uint32_t p) { return dormant::Fp(residue(rng, p), p); }

inline dormant::Fp nonzero(Rng& rng, uint32_t p) {
  return dormant::Fp(std::uniform_int_distribution<int64_t>(1, p - 1)(rng), p);
}

inline dormant::Polynomial polynomial(Rng& rng, uint32_t p, int max_degree) {
  const int deg = std::uniform_int_distribution<int>(-1, max_degree)(rng);
  std::vector<int64_t> c;
  for (int i = 0; i <= deg; ++i) c.push_back(residue(rng, p));
  return dormant::Polynomial(p, c);
}

inline dormant::Polynomial nonzero_polynomial(Rng& rng, uint32_t p, int max_degree) {
  while (true) {
    auto f = polynomial(rng, p, max_degree);
    if (!f.is_zero()) return f;
  }
}

// Entries with poles only at 0 and 1.
inline dormant::RationalFunction log_rational(Rng& rng, uint32_t p, int max_degree) {
  const auto num = polynomial(rng, p, max_degree);
  dormant::Polynomial den = dormant::Polynomial::constant(p, 1);
  const int a = std::uniform_int_distribution<int>(0, 1)(rng);
  const int b = std::uniform_int_distribution<int>(0, 1)(rng);
  for (int i = 0; i < a; ++i) den *= dormant::Polynomial{p, {0, 1}};
  for (int i = 0; i < b; ++i) den *= dormant::Polynomial{p, {-1, 1}};
  return dormant::RationalFunction(num, den);
}

inline dormant::Matrix<dormant::Fp> fp_matrix(Rng& rng, uint32_t p, std::size_t rows,
                                              std::size_t cols) {
  dormant::Matrix<dormant::Fp> m(rows, cols, dormant::Fp(0, p));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = element(rng, p);
  return m;
}

}  // namespace gen

#include "dormant/linalg.hpp"
#include "dormant/oper.hpp"

namespace gen {

// Uniform element of the space of self-dual companion opers of odd order n:
// the condition D* = -D is linear in the potentials, so sample its solution
// space.
inline dormant::CompanionOper random_self_dual(Rng& rng, uint32_t p, std::size_t n) {
  using namespace dormant;
  std::vector<std::pair<std::size_t, std::size_t>> slots;  // (j, power)
  for (std::size_t j = 2; j <= n; ++j)
    for (std::size_t k = 0; k <= j; ++k) slots.emplace_back(j, k);
  auto build = [&](const std::vector<Fp>& c) {
    std::vector<Polynomial> f(n - 1, Polynomial(p));
    for (std::size_t s = 0; s < slots.size(); ++s)
      f[slots[s].first - 2] += Polynomial::monomial(p, slots[s].second) * c[s];
    return CompanionOper(p, n, f);
  };
  // Columns: coefficient vectors of D* + D for each unit potential.
  std::vector<std::vector<Fp>> cols;
  std::size_t height = 0;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    std::vector<Fp> c(slots.size(), Fp(0, p));
    c[s] = Fp(1, p);
    const auto d = scalar_operator(build(c));
    const auto sum = d.adjoint() + d;
    std::vector<Fp> col;
    for (std::size_t i = 0; i <= n; ++i) {
      const auto& poly = i < sum.coefficients().size() ? sum.coefficient(i) : Polynomial(p);
      for (std::size_t e = 0; e <= n + 1; ++e) col.push_back(poly.coeff(e));
    }
    height = col.size();
    cols.push_back(std::move(col));
  }
  Matrix<Fp> m(height, slots.size(), Fp(0, p));
  for (std::size_t s = 0; s < slots.size(); ++s)
    for (std::size_t r = 0; r < height; ++r) m(r, s) = cols[s][r];
  const auto basis = nullspace(m);
  std::vector<Fp> c(slots.size(), Fp(0, p));
  for (const auto& v : basis) {
    const Fp w = element(rng, p);
    for (std::size_t s = 0; s < slots.size(); ++s) c[s] += w * v[s];
  }
  return build(c);
}

}  // namespace gen
