#include "dormant/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "dormant/errors.hpp"
#include "dormant/field.hpp"

namespace dormant {

namespace {

constexpr double kIntegerTolerance = 1e-6;

template <class T>
struct Kahan {
  T sum{}, carry{};
  void add(T x) {
    const T y = x - carry;
    const T t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

ClosedFormResult round_checked(std::complex<double> raw, uint64_t terms, const char* what) {
  const double rounded = std::round(raw.real());
  const double residual = std::max(std::abs(raw.real() - rounded), std::abs(raw.imag()));
  if (residual >= kIntegerTolerance)
    throw NotNearInteger(std::string(what) + ": sum " + std::to_string(raw.real()) +
                         " is not near an integer");
  return {static_cast<int64_t>(rounded), residual, terms};
}

}  // namespace

ClosedFormResult verlinde_sl2(uint32_t p, int g, int r) {
  require_odd_prime(p);
  if (g < 0 || r < 0 || 2 * g - 2 + r <= 0)
    throw PreconditionViolated("verlinde_sl2: need g, r >= 0 and 2g - 2 + r > 0");
  Kahan<double> acc;
  for (uint32_t j = 1; j < p; ++j) {
    const double angle = std::numbers::pi * j / p;
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    const double num = std::pow(1.0 - sign * std::cos(angle), r);
    const double den = std::pow(std::sin(angle), 2 * (g - 1 + r));
    acc.add(num / den);
  }
  const double prefactor = std::pow(static_cast<double>(p), g - 1) / std::pow(2.0, 2 * g - 1 + r);
  return round_checked(prefactor * acc.sum, p - 1, "verlinde_sl2");
}

ClosedFormResult joshi_sln(uint32_t p, int n, int g, bool ordered, uint64_t budget) {
  require_odd_prime(p);
  if (n < 2) throw PreconditionViolated("joshi_sln: n must be at least 2");
  if (g < 2) throw PreconditionViolated("joshi_sln: g must be at least 2");
  if (2 * static_cast<int64_t>(n) >= p)
    throw PreconditionViolated("joshi_sln: need 2n < p (n = " + std::to_string(n) +
                               ", p = " + std::to_string(p) + ")");
  double sets = 1.0, perms = 1.0;
  for (int i = 0; i < n; ++i) {
    sets = sets * (p - i) / (i + 1);
    perms *= i + 1;
  }
  if (sets * perms > static_cast<double>(budget))
    throw ComplexityRefusal("joshi_sln: " + std::to_string(sets * perms) +
                            " summands exceed budget " + std::to_string(budget));

  std::vector<std::complex<double>> zeta(p);
  for (uint32_t k = 0; k < p; ++k) zeta[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / p);
  const int e_prod = (n - 1) * (g - 1);

  auto summand = [&](const std::vector<uint32_t>& idx) {
    std::complex<double> prod = 1.0, vdm = 1.0;
    for (uint32_t i : idx) prod *= zeta[i];
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b)
        if (a != b) vdm *= zeta[idx[a]] - zeta[idx[b]];
    return std::pow(prod, e_prod) / std::pow(vdm, g - 1);
  };

  Kahan<std::complex<double>> acc;
  uint64_t terms = 0;
  std::vector<uint32_t> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = static_cast<uint32_t>(i);
  while (true) {
    if (ordered) {
      std::vector<uint32_t> perm = idx;
      do {
        acc.add(summand(perm));
        ++terms;
      } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
      acc.add(perms * summand(idx));
      ++terms;
    }
    // Next combination of n indices from [0, p).
    int i = n - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == p - static_cast<uint32_t>(n - i)) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  const double prefactor = std::pow(static_cast<double>(p), e_prod - 1) / perms;
  return round_checked(prefactor * acc.sum, terms, "joshi_sln");
}

}  // namespace dormant
