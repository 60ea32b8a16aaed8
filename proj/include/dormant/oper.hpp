#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dormant/field.hpp"
#include "dormant/log_connection.hpp"
#include "dormant/matrix.hpp"
#include "dormant/polynomial.hpp"

namespace dormant {

// Oper in companion normal form with respect to the log vector field
// x(x-1)d/dx. f_j (j = 2..n) is the coefficient of the j-differential
// f_j * (dx / x(x-1))^j, hence deg f_j <= j. Order 1 is the trivial rank-1
// operator and carries no potentials.
class CompanionOper {
 public:
  // potentials[i] is f_{i+2}; missing trailing potentials are zero.
  CompanionOper(uint32_t p, std::size_t order, std::vector<Polynomial> potentials);

  static CompanionOper from_coefficients(uint32_t p, std::size_t order,
                                         const std::vector<std::vector<int64_t>>& potentials);

  std::size_t order() const { return order_; }
  uint32_t modulus() const { return p_; }
  // j in [2, order].
  const Polynomial& potential(std::size_t j) const { return f_.at(j - 2); }
  const std::vector<Polynomial>& potentials() const { return f_; }

  friend bool operator==(const CompanionOper& a, const CompanionOper& b) {
    return a.p_ == b.p_ && a.order_ == b.order_ && a.f_ == b.f_;
  }

 private:
  uint32_t p_;
  std::size_t order_;
  std::vector<Polynomial> f_;
};

// Monic scalar operator sum_i c_i d^i (d = x(x-1)d/dx), acting on the
// coefficient y of y * (dx / x(x-1))^{(1-n)/2}.
class ScalarOperator {
 public:
  // coefficients[i] multiplies d^i.
  explicit ScalarOperator(std::vector<Polynomial> coefficients);

  std::size_t order() const { return c_.size() - 1; }
  uint32_t modulus() const { return c_.front().modulus(); }
  const Polynomial& coefficient(std::size_t i) const { return c_.at(i); }
  const std::vector<Polynomial>& coefficients() const { return c_; }

  Polynomial apply(const Polynomial& y) const;
  // D(x^k) = x^k * P(x) for any integer k; returns P (degree <= order for
  // companion-derived operators).
  Polynomial apply_monomial(int64_t k) const;
  // Formal adjoint with respect to the coframe dx / x(x-1), where d* = -d.
  ScalarOperator adjoint() const;
  // d o D.
  ScalarOperator compose_derivation() const;

  ScalarOperator operator+(const ScalarOperator& o) const;
  ScalarOperator operator*(const Polynomial& g) const;  // g * D

  friend bool operator==(const ScalarOperator& a, const ScalarOperator& b) {
    return a.c_ == b.c_;
  }

 private:
  std::vector<Polynomial> c_;
};

// First row (0, f_2, ..., f_n), subdiagonal -1, zero elsewhere.
LogConnection companion_connection(const CompanionOper& oper);

// D = d^n + f_2 d^{n-2} + ... + f_n.
ScalarOperator scalar_operator(const CompanionOper& oper);

// Indicial polynomial (in the exponent variable) at a marked point, in the
// local log coordinate and the (1-n)/2 twist at infinity.
Polynomial indicial_polynomial(const CompanionOper& oper, MarkedPoint q);

// Roots of the indicial polynomial; throws NotSplit.
ExponentProfile exponents(const CompanionOper& oper, MarkedPoint q);

struct OrthogonalForm {
  Matrix<Fp> gram;
};

// Antidiagonal Gram matrix with entries (-1)^i at (i, n-1-i).
OrthogonalForm canonical_form(uint32_t p, std::size_t n);

// Pairing on Sym^m of a rank-2 bundle induced by the standard symplectic
// form, in the monomial basis e1^{m-i} e2^i: entry (i, m-i) = (-1)^i i!(m-i)!.
// Symmetric exactly when m is even.
OrthogonalForm symmetric_power_form(uint32_t p, std::size_t m);

// transpose(A) J + J A == 0.
bool is_orthogonal_compatible(const LogConnection& conn, const OrthogonalForm& form);

// Companion opers of odd order admit a horizontal nondegenerate symmetric
// pairing iff the scalar operator is skew-adjoint: D* = -D. Throws
// PreconditionViolated for even order.
bool is_orthogonal_compatible(const CompanionOper& oper);

struct SymmetricPower {
  LogConnection connection;   // monomial basis e1^{m-i} e2^i
  CompanionOper companion;    // same local system in companion form
  std::optional<OrthogonalForm> form;  // set when m is even
};

SymmetricPower symmetric_power(const CompanionOper& base, std::size_t m);

struct EvenOper {
  CompanionOper odd;
  Polynomial nu;  // coefficient of nu * (dx / x(x-1))^ell, deg <= ell
  LogConnection connection;
  OrthogonalForm form;
};

// (nabla + d) plus nu in the upper-right block. The extra basis vector is
// last; nu lands in row 0 (the line subbundle generating the oper).
EvenOper extend_to_even(const CompanionOper& odd, const Polynomial& nu);

std::pair<CompanionOper, Polynomial> split_even(const EvenOper& even);
// Recover from a bare rank-2l block matrix; throws MalformedBlocks.
std::pair<CompanionOper, Polynomial> split_even(const LogConnection& conn);

// Birkhoff-Grothendieck data of a bundle on the Frobenius twist.
struct SheafProfile {
  int rank = 0;
  int degree = 0;
  std::vector<int> splitting;         // ascending
  std::vector<int64_t> section_counts;  // h^0(E(m)) for m = 0, 1, ...
};

struct ImageProfile {
  SheafProfile profile;
  int64_t h0 = 0;
};

// Profile of the horizontal sections, as a subsheaf of the (1-n)/2 power of
// the log cotangent bundle.
SheafProfile kernel_sheaf_profile(const CompanionOper& oper, bool require_dormant);

// Profile of the image of the scalar operator inside the (n+1)/2 power of the
// log cotangent bundle. Order must be odd and at least 3.
ImageProfile image_profile(const CompanionOper& oper, bool require_dormant);

// H^0 of the image sheaf vanishes.
bool unramifiedness_certificate(const CompanionOper& oper);

// deg F_*(Omega^{1-l}) = -l - p + 2 on the Frobenius twist.
int pushforward_degree(uint32_t p, int ell);

}  // namespace dormant
