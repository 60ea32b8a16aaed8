#pragma once

#include <cstdint>
#include <functional>
#include <ostream>

namespace dormant {

// Largest modulus accepted. Products of two residues fit in 64 bits.
inline constexpr uint32_t kMaxModulus = (1u << 31) - 1;

bool is_prime(uint64_t n);

// Throws PreconditionViolated unless p is an odd prime below kMaxModulus.
void require_odd_prime(uint64_t p);

// Element of the prime field F_p. The modulus travels with the value so that
// mixing elements of different fields is caught instead of silently wrong.
class Fp {
 public:
  Fp() = default;
  Fp(int64_t value, uint32_t p);

  static Fp from_residue(uint32_t residue, uint32_t p) {
    Fp r;
    r.v_ = residue;
    r.p_ = p;
    return r;
  }

  uint32_t value() const { return v_; }
  uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(Fp o) const;
  Fp operator-(Fp o) const;
  Fp operator*(Fp o) const;
  Fp operator/(Fp o) const { return *this * o.inverse(); }
  Fp operator-() const { return from_residue(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }

  Fp pow(uint64_t e) const;
  // Throws std::domain_error on zero.
  Fp inverse() const;

  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend bool operator<(Fp a, Fp b) { return a.v_ < b.v_; }

 private:
  void check(Fp o) const;

  uint32_t v_ = 0;
  uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, Fp a);

}  // namespace dormant
