#include "dormant/field.hpp"

#include <stdexcept>
#include <string>

#include "dormant/errors.hpp"

namespace dormant {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

void require_odd_prime(uint64_t p) {
  if (p == 2 || !is_prime(p) || p > kMaxModulus)
    throw PreconditionViolated("p must be an odd prime (got " +
                               std::to_string(p) + ")");
}

Fp::Fp(int64_t value, uint32_t p) : p_(p) {
  if (p == 0) throw std::invalid_argument("Fp: zero modulus");
  int64_t r = value % static_cast<int64_t>(p);
  if (r < 0) r += p;
  v_ = static_cast<uint32_t>(r);
}

void Fp::check(Fp o) const {
  if (p_ != o.p_) throw std::invalid_argument("Fp: mixed moduli");
}

Fp Fp::operator+(Fp o) const {
  check(o);
  uint64_t s = uint64_t{v_} + o.v_;
  if (s >= p_) s -= p_;
  return from_residue(static_cast<uint32_t>(s), p_);
}

Fp Fp::operator-(Fp o) const {
  check(o);
  return from_residue(v_ >= o.v_ ? v_ - o.v_ : v_ + (p_ - o.v_), p_);
}

Fp Fp::operator*(Fp o) const {
  check(o);
  return from_residue(static_cast<uint32_t>(uint64_t{v_} * o.v_ % p_), p_);
}

Fp Fp::pow(uint64_t e) const {
  Fp base = *this;
  Fp acc = from_residue(1 % p_, p_);
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
  return pow(p_ - 2);
}

std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.value(); }

}  // namespace dormant
