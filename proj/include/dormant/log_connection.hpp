#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dormant/field.hpp"
#include "dormant/matrix.hpp"
#include "dormant/polynomial.hpp"
#include "dormant/rational_function.hpp"

namespace dormant {

using RfVector = std::vector<RationalFunction>;
using PolyVector = std::vector<Polynomial>;

enum class MarkedPoint { Zero, One, Infinity };

std::string to_string(MarkedPoint q);

// The global log vector field x(x-1) d/dx on the 3-pointed line.
Polynomial theta_derivative(const Polynomial& f);
RationalFunction theta_derivative(const RationalFunction& f);

// h = p-fold iterate of the log vector field applied to x; always divisible
// by x(x-1). Returns h / (x(x-1)), the factor relating the p-th power of the
// vector field to the field itself. Throws NonLogPthPower otherwise.
Polynomial pth_power_factor(uint32_t p);

// Rank-n operator v -> x(x-1) v' + A v on the 3-pointed line. A may only have
// poles at x = 0 and x = 1.
class LogConnection {
 public:
  explicit LogConnection(Matrix<RationalFunction> a);

  static LogConnection trivial(uint32_t p, std::size_t rank);

  std::size_t rank() const { return a_.rows(); }
  uint32_t modulus() const { return p_; }
  const Matrix<RationalFunction>& matrix() const { return a_; }

  RfVector apply(const RfVector& v) const;

  friend bool operator==(const LogConnection& a, const LogConnection& b) {
    return a.a_ == b.a_;
  }

 private:
  Matrix<RationalFunction> a_;
  uint32_t p_;
};

struct PCurvature {
  Matrix<RationalFunction> psi;
  bool is_zero() const { return psi.is_zero(); }
};

// Normalized exponents at one marked point: representatives in [0, p),
// ascending, one per unit of rank.
struct ExponentProfile {
  MarkedPoint point;
  std::vector<Fp> exponents;
};

// psi(e_j) = nabla^p(e_j) - (h / x(x-1)) nabla(e_j), by literal iteration.
PCurvature p_curvature(const LogConnection& conn);

// psi applied to an arbitrary vector; used to spot-check O-linearity.
RfVector p_curvature_on(const LogConnection& conn, const RfVector& v);

bool is_dormant(const LogConnection& conn);

// Basis of horizontal vectors whose entries are polynomials of degree at most
// degree_bound.
std::vector<PolyVector> solution_space(const LogConnection& conn, int degree_bound);

LogConnection direct_sum(const LogConnection& a, const LogConnection& b);

// Convert a matrix with polynomial entries.
Matrix<RationalFunction> to_rational(const Matrix<Polynomial>& m);

}  // namespace dormant
