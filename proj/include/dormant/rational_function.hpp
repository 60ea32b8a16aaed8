#pragma once

#include <string>

#include "dormant/polynomial.hpp"

namespace dormant {

// Reduced fraction num/den over F_p: den is monic and gcd(num, den) = 1, so
// structural equality is mathematical equality.
class RationalFunction {
 public:
  explicit RationalFunction(uint32_t p = 0);
  RationalFunction(Polynomial num);  // NOLINT: polynomials embed implicitly
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction constant(uint32_t p, int64_t c) {
    return RationalFunction(Polynomial::constant(p, c));
  }

  uint32_t modulus() const { return num_.modulus(); }
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  // d/dx.
  RationalFunction derivative() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void reduce();

  Polynomial num_;
  Polynomial den_;
};

// Canonical form of an arbitrary fraction; idempotent.
RationalFunction reduce(const RationalFunction& r);

}  // namespace dormant
