#include "dormant/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace dormant {

Polynomial::Polynomial(uint32_t p, std::vector<int64_t> coeffs) : p_(p) {
  if (p == 0) throw std::invalid_argument("Polynomial: zero modulus");
  c_.reserve(coeffs.size());
  for (int64_t v : coeffs) c_.push_back(Fp(v, p).value());
  trim();
}

Polynomial Polynomial::constant(Fp c) {
  return from_residues(c.modulus(), {c.value()});
}

Polynomial Polynomial::monomial(uint32_t p, std::size_t k, int64_t c) {
  Polynomial r(p);
  r.c_.assign(k + 1, 0);
  r.c_[k] = Fp(c, p).value();
  r.trim();
  return r;
}

Polynomial Polynomial::from_residues(uint32_t p, std::vector<uint32_t> residues) {
  Polynomial r(p);
  r.c_ = std::move(residues);
  for (auto& v : r.c_) v %= p;
  r.trim();
  return r;
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Polynomial::check(const Polynomial& o) const {
  if (p_ != o.p_) throw std::invalid_argument("Polynomial: mixed moduli");
}

Fp Polynomial::operator()(Fp at) const {
  Fp acc = Fp::from_residue(0, p_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * at + Fp::from_residue(*it, p_);
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check(o);
  Polynomial r(p_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    uint64_t s = uint64_t{i < c_.size() ? c_[i] : 0u} +
                 (i < o.c_.size() ? o.c_[i] : 0u);
    r.c_[i] = static_cast<uint32_t>(s % p_);
  }
  r.trim();
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& v : r.c_) v = v == 0 ? 0 : p_ - v;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check(o);
  Polynomial r(p_);
  if (c_.empty() || o.c_.empty()) return r;
  std::vector<uint64_t> acc(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      acc[i + j] = (acc[i + j] + uint64_t{c_[i]} * o.c_[j]) % p_;
  }
  r.c_.assign(acc.begin(), acc.end());
  r.trim();
  return r;
}

Polynomial Polynomial::operator*(Fp s) const {
  if (s.modulus() != p_) throw std::invalid_argument("Polynomial: mixed moduli");
  Polynomial r(p_);
  if (s.is_zero()) return r;
  r.c_ = c_;
  for (auto& v : r.c_) v = static_cast<uint32_t>(uint64_t{v} * s.value() % p_);
  return r;
}

Polynomial Polynomial::derivative() const {
  Polynomial r(p_);
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r.c_[i - 1] = static_cast<uint32_t>(uint64_t{c_[i]} * (i % p_) % p_);
  r.trim();
  return r;
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return *this;
  return *this * leading().inverse();
}

Polynomial Polynomial::shifted(std::size_t k) const {
  if (c_.empty()) return *this;
  Polynomial r(p_);
  r.c_.assign(k, 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

std::string Polynomial::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::vector<int64_t> Polynomial::to_coefficients() const {
  return {c_.begin(), c_.end()};
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("Polynomial: division by zero");
  const uint32_t p = a.modulus();
  if (p != b.modulus()) throw std::invalid_argument("Polynomial: mixed moduli");
  if (a.degree() < b.degree()) return {Polynomial(p), a};
  std::vector<uint32_t> rem(a.residues().begin(), a.residues().end());
  std::vector<uint32_t> quo(a.degree() - b.degree() + 1, 0);
  const auto bc = b.residues();
  const uint64_t inv = b.leading().inverse().value();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    uint64_t q = rem[i] * inv % p;
    if (q == 0) continue;
    quo[i - db] = static_cast<uint32_t>(q);
    for (int j = 0; j <= db; ++j) {
      uint64_t sub = q * bc[j] % p;
      rem[i - db + j] = static_cast<uint32_t>((rem[i - db + j] + p - sub) % p);
    }
  }
  return {Polynomial::from_residues(p, std::move(quo)),
          Polynomial::from_residues(p, std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

}  // namespace dormant
