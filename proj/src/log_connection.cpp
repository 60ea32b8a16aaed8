#include "dormant/log_connection.hpp"

#include <map>
#include <stdexcept>

#include "dormant/errors.hpp"
#include "dormant/linalg.hpp"

namespace dormant {

std::string to_string(MarkedPoint q) {
  switch (q) {
    case MarkedPoint::Zero: return "0";
    case MarkedPoint::One: return "1";
    case MarkedPoint::Infinity: return "inf";
  }
  return "?";
}

namespace {

Polynomial log_locus(uint32_t p) { return Polynomial{p, {0, -1, 1}}; }  // x^2 - x

// True if den = x^a (x-1)^b.
bool poles_on_marked_points(const Polynomial& den) {
  const uint32_t p = den.modulus();
  Polynomial rest = den;
  for (const Polynomial& lin : {Polynomial{p, {0, 1}}, Polynomial{p, {-1, 1}}}) {
    while (rest.degree() > 0) {
      auto [q, r] = divmod(rest, lin);
      if (!r.is_zero()) break;
      rest = q;
    }
  }
  return rest.degree() == 0;
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  return divmod(a * b, gcd(a, b)).first.monic();
}

}  // namespace

Polynomial theta_derivative(const Polynomial& f) {
  return log_locus(f.modulus()) * f.derivative();
}

RationalFunction theta_derivative(const RationalFunction& f) {
  return RationalFunction(log_locus(f.modulus())) * f.derivative();
}

Polynomial pth_power_factor(uint32_t p) {
  Polynomial h = Polynomial::x(p);
  for (uint32_t i = 0; i < p; ++i) h = theta_derivative(h);
  auto [q, r] = divmod(h, log_locus(p));
  if (!r.is_zero())
    throw NonLogPthPower("p-th power of x(x-1)d/dx is not a multiple of it: h = " +
                         h.to_string());
  return q;
}

LogConnection::LogConnection(Matrix<RationalFunction> a) : a_(std::move(a)) {
  if (a_.rows() == 0 || !a_.is_square())
    throw std::invalid_argument("LogConnection: matrix must be square and nonempty");
  p_ = a_(0, 0).modulus();
  for (std::size_t i = 0; i < a_.rows(); ++i)
    for (std::size_t j = 0; j < a_.cols(); ++j) {
      const auto& e = a_(i, j);
      if (e.modulus() != p_) throw std::invalid_argument("LogConnection: mixed moduli");
      if (!poles_on_marked_points(e.denominator()))
        throw std::invalid_argument("LogConnection: pole outside {0, 1} in entry (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

LogConnection LogConnection::trivial(uint32_t p, std::size_t rank) {
  return LogConnection(Matrix<RationalFunction>(rank, rank, RationalFunction(p)));
}

RfVector LogConnection::apply(const RfVector& v) const {
  if (v.size() != rank()) throw std::invalid_argument("LogConnection::apply: length mismatch");
  RfVector out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    RationalFunction acc = theta_derivative(v[i]);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!a_(i, j).is_zero() && !v[j].is_zero()) acc += a_(i, j) * v[j];
    out.push_back(std::move(acc));
  }
  return out;
}

RfVector p_curvature_on(const LogConnection& conn, const RfVector& v) {
  const uint32_t p = conn.modulus();
  const RationalFunction factor(pth_power_factor(p));
  RfVector once = conn.apply(v);
  RfVector iter = once;
  for (uint32_t k = 1; k < p; ++k) iter = conn.apply(iter);
  for (std::size_t i = 0; i < iter.size(); ++i) iter[i] -= factor * once[i];
  return iter;
}

PCurvature p_curvature(const LogConnection& conn) {
  const std::size_t n = conn.rank();
  const uint32_t p = conn.modulus();
  Matrix<RationalFunction> psi(n, n, RationalFunction(p));
  for (std::size_t j = 0; j < n; ++j) {
    RfVector e(n, RationalFunction(p));
    e[j] = RationalFunction::constant(p, 1);
    const RfVector col = p_curvature_on(conn, e);
    for (std::size_t i = 0; i < n; ++i) psi(i, j) = col[i];
  }
  return {std::move(psi)};
}

bool is_dormant(const LogConnection& conn) { return p_curvature(conn).is_zero(); }

std::vector<PolyVector> solution_space(const LogConnection& conn, int degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("solution_space: negative degree bound");
  const std::size_t n = conn.rank();
  const uint32_t p = conn.modulus();
  Polynomial common = Polynomial::constant(p, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) common = lcm(common, conn.matrix()(i, j).denominator());

  const std::size_t per_entry = static_cast<std::size_t>(degree_bound) + 1;
  const std::size_t unknowns = n * per_entry;
  // Column u = image of x^k e_i, cleared of denominators.
  std::vector<PolyVector> images;
  std::size_t max_deg = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < per_entry; ++k) {
      RfVector e(n, RationalFunction(p));
      e[i] = RationalFunction(Polynomial::monomial(p, k));
      PolyVector img;
      for (const auto& r : conn.apply(e)) {
        RationalFunction cleared = r * RationalFunction(common);
        if (!cleared.is_polynomial())
          throw std::logic_error("solution_space: denominator not cleared");
        max_deg = std::max<std::size_t>(max_deg, std::max(0, cleared.numerator().degree()));
        img.push_back(cleared.numerator());
      }
      images.push_back(std::move(img));
    }
  std::vector<std::vector<uint32_t>> rows(n * (max_deg + 1), std::vector<uint32_t>(unknowns, 0));
  for (std::size_t u = 0; u < unknowns; ++u)
    for (std::size_t r = 0; r < n; ++r) {
      const auto res = images[u][r].residues();
      for (std::size_t d = 0; d < res.size(); ++d) rows[r * (max_deg + 1) + d][u] = res[d];
    }
  std::vector<PolyVector> basis;
  for (const auto& v : nullspace_mod_p(std::move(rows), unknowns, p)) {
    PolyVector sol;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<uint32_t> c(v.begin() + i * per_entry, v.begin() + (i + 1) * per_entry);
      sol.push_back(Polynomial::from_residues(p, std::move(c)));
    }
    basis.push_back(std::move(sol));
  }
  return basis;
}

LogConnection direct_sum(const LogConnection& a, const LogConnection& b) {
  const uint32_t p = a.modulus();
  if (b.modulus() != p) throw std::invalid_argument("direct_sum: mixed moduli");
  const std::size_t n = a.rank() + b.rank();
  Matrix<RationalFunction> m(n, n, RationalFunction(p));
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) m(i, j) = a.matrix()(i, j);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j)
      m(a.rank() + i, a.rank() + j) = b.matrix()(i, j);
  return LogConnection(std::move(m));
}

Matrix<RationalFunction> to_rational(const Matrix<Polynomial>& m) {
  Matrix<RationalFunction> r(m.rows(), m.cols(), RationalFunction(m(0, 0).modulus()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = RationalFunction(m(i, j));
  return r;
}

}  // namespace dormant
