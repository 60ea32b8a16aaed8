#include "dormant/rational_function.hpp"

#include <stdexcept>

namespace dormant {

RationalFunction::RationalFunction(uint32_t p)
    : num_(p), den_(p == 0 ? Polynomial(0) : Polynomial::constant(p, 1)) {}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.modulus(), 1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  if (num_.modulus() != den_.modulus())
    throw std::invalid_argument("RationalFunction: mixed moduli");
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.modulus(), 1);
    return;
  }
  if (den_.degree() == 0) {
    if (den_.leading().value() != 1) {
      num_ = num_ * den_.leading().inverse();
      den_ = Polynomial::constant(num_.modulus(), 1);
    }
    return;
  }
  Polynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  Fp lead = den_.leading();
  if (lead.value() != 1) {
    Fp inv = lead.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
  if (is_polynomial() && o.is_polynomial()) return RationalFunction(num_ + o.num_);
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r(*this);
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (is_polynomial() && o.is_polynomial()) return RationalFunction(num_ * o.num_);
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw std::domain_error("RationalFunction: division by zero");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::derivative() const {
  if (is_polynomial()) return RationalFunction(num_.derivative());
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(),
                          den_ * den_);
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction reduce(const RationalFunction& r) {
  return RationalFunction(r.numerator(), r.denominator());
}

}  // namespace dormant
