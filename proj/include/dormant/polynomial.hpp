#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dormant/field.hpp"

namespace dormant {

// Dense univariate polynomial over F_p, coefficients in ascending order.
// Canonical form: no trailing zero coefficients; the zero polynomial has an
// empty coefficient vector and degree() == -1.
class Polynomial {
 public:
  explicit Polynomial(uint32_t p = 0) : p_(p) {}
  Polynomial(uint32_t p, std::vector<int64_t> coeffs);
  Polynomial(uint32_t p, std::initializer_list<int64_t> coeffs)
      : Polynomial(p, std::vector<int64_t>(coeffs)) {}

  static Polynomial constant(uint32_t p, int64_t c) { return {p, {c}}; }
  static Polynomial constant(Fp c);
  static Polynomial monomial(uint32_t p, std::size_t k, int64_t c = 1);
  static Polynomial x(uint32_t p) { return monomial(p, 1); }
  static Polynomial from_residues(uint32_t p, std::vector<uint32_t> residues);

  uint32_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  std::span<const uint32_t> residues() const { return c_; }

  // Coefficient of x^i; zero past the degree.
  Fp coeff(std::size_t i) const {
    return Fp::from_residue(i < c_.size() ? c_[i] : 0, p_);
  }
  Fp leading() const { return coeff(c_.empty() ? 0 : c_.size() - 1); }

  Fp operator()(Fp at) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(Fp s) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial derivative() const;
  Polynomial monic() const;
  // Multiply by x^k.
  Polynomial shifted(std::size_t k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }

  std::string to_string(char var = 'x') const;
  // Ascending coefficient list, residues in [0, p).
  std::vector<int64_t> to_coefficients() const;

 private:
  void trim();
  void check(const Polynomial& o) const;

  uint32_t p_;
  std::vector<uint32_t> c_;
};

// Euclidean division; throws std::domain_error on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                         const Polynomial& b);
// Monic gcd (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace dormant
