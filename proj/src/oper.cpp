#include "dormant/oper.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "dormant/errors.hpp"
#include "dormant/linalg.hpp"

namespace dormant {

namespace {

Fp binomial(std::size_t n, std::size_t k, uint32_t p) {
  Fp r(1, p);
  for (std::size_t i = 0; i < k; ++i)
    r = r * Fp(static_cast<int64_t>(n - i), p) / Fp(static_cast<int64_t>(i + 1), p);
  return r;
}

Fp factorial(std::size_t n, uint32_t p) {
  Fp r(1, p);
  for (std::size_t i = 2; i <= n; ++i) r *= Fp(static_cast<int64_t>(i), p);
  return r;
}

// Offset between the twist m on the Frobenius twist and the degree bound of
// the coefficient polynomial: sections of Omega^{-off}(pm * inf) are
// polynomials of degree <= pm - off.
int twist_offset(std::size_t order) { return static_cast<int>((order - 1) / 2); }

}  // namespace

// ---------------------------------------------------------------- CompanionOper

CompanionOper::CompanionOper(uint32_t p, std::size_t order, std::vector<Polynomial> potentials)
    : p_(p), order_(order), f_(std::move(potentials)) {
  require_odd_prime(p);
  if (order == 0) throw PreconditionViolated("CompanionOper: order must be positive");
  const std::size_t slots = order >= 2 ? order - 1 : 0;
  if (f_.size() > slots)
    throw PreconditionViolated("CompanionOper: " + std::to_string(f_.size()) +
                               " potentials for order " + std::to_string(order));
  while (f_.size() < slots) f_.emplace_back(p);
  for (std::size_t i = 0; i < f_.size(); ++i) {
    if (f_[i].modulus() != p) throw PreconditionViolated("CompanionOper: mixed moduli");
    const std::size_t j = i + 2;
    if (f_[i].degree() > static_cast<int>(j))
      throw DegreeBoundViolated("potential f_" + std::to_string(j) + " has degree " +
                                std::to_string(f_[i].degree()) + " > " + std::to_string(j));
  }
}

CompanionOper CompanionOper::from_coefficients(uint32_t p, std::size_t order,
                                               const std::vector<std::vector<int64_t>>& potentials) {
  std::vector<Polynomial> f;
  for (const auto& c : potentials) f.emplace_back(p, c);
  return CompanionOper(p, order, std::move(f));
}

// --------------------------------------------------------------- ScalarOperator

ScalarOperator::ScalarOperator(std::vector<Polynomial> coefficients) : c_(std::move(coefficients)) {
  if (c_.empty()) throw std::invalid_argument("ScalarOperator: no coefficients");
  while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
}

Polynomial ScalarOperator::apply(const Polynomial& y) const {
  Polynomial acc(modulus());
  Polynomial dy = y;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i > 0) dy = theta_derivative(dy);
    if (!c_[i].is_zero()) acc += c_[i] * dy;
  }
  return acc;
}

Polynomial ScalarOperator::apply_monomial(int64_t k) const {
  const uint32_t p = modulus();
  // d(x^k g) = x^k (k (x - 1) g + d g)
  const Polynomial twist = Polynomial{p, {-1, 1}} * Fp(k, p);
  Polynomial acc(p);
  Polynomial g = Polynomial::constant(p, 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i > 0) g = twist * g + theta_derivative(g);
    if (!c_[i].is_zero()) acc += c_[i] * g;
  }
  return acc;
}

ScalarOperator ScalarOperator::adjoint() const {
  const uint32_t p = modulus();
  std::vector<Polynomial> out(c_.size(), Polynomial(p));
  // (-d)^i o c = (-1)^i sum_s C(i, s) d^s(c) d^{i-s}
  for (std::size_t i = 0; i < c_.size(); ++i) {
    Polynomial ds = c_[i];
    const Fp sign = (i % 2 == 0) ? Fp(1, p) : Fp(-1, p);
    for (std::size_t s = 0; s <= i; ++s) {
      if (s > 0) ds = theta_derivative(ds);
      out[i - s] += ds * (sign * binomial(i, s, p));
    }
  }
  return ScalarOperator(std::move(out));
}

ScalarOperator ScalarOperator::compose_derivation() const {
  const uint32_t p = modulus();
  std::vector<Polynomial> out(c_.size() + 1, Polynomial(p));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    out[i] += theta_derivative(c_[i]);
    out[i + 1] += c_[i];
  }
  return ScalarOperator(std::move(out));
}

ScalarOperator ScalarOperator::operator+(const ScalarOperator& o) const {
  const uint32_t p = modulus();
  std::vector<Polynomial> out(std::max(c_.size(), o.c_.size()), Polynomial(p));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return ScalarOperator(std::move(out));
}

ScalarOperator ScalarOperator::operator*(const Polynomial& g) const {
  std::vector<Polynomial> out = c_;
  for (auto& c : out) c = g * c;
  return ScalarOperator(std::move(out));
}

// -------------------------------------------------------------- constructions

LogConnection companion_connection(const CompanionOper& oper) {
  const std::size_t n = oper.order();
  const uint32_t p = oper.modulus();
  Matrix<RationalFunction> a(n, n, RationalFunction(p));
  for (std::size_t j = 2; j <= n; ++j) a(0, j - 1) = RationalFunction(oper.potential(j));
  for (std::size_t i = 1; i < n; ++i) a(i, i - 1) = RationalFunction::constant(p, -1);
  return LogConnection(std::move(a));
}

ScalarOperator scalar_operator(const CompanionOper& oper) {
  const std::size_t n = oper.order();
  const uint32_t p = oper.modulus();
  std::vector<Polynomial> c(n + 1, Polynomial(p));
  c[n] = Polynomial::constant(p, 1);
  for (std::size_t j = 2; j <= n; ++j) c[n - j] = oper.potential(j);
  return ScalarOperator(std::move(c));
}

Polynomial indicial_polynomial(const CompanionOper& oper, MarkedPoint q) {
  const std::size_t n = oper.order();
  const uint32_t p = oper.modulus();
  const Polynomial lambda = Polynomial::x(p);
  // Value of the coefficient of d^{n-j}: f_0 = 1, f_1 = 0.
  auto local_coeff = [&](std::size_t j) -> Fp {
    if (j == 0) return Fp(1, p);
    if (j == 1) return Fp(0, p);
    const Polynomial& f = oper.potential(j);
    switch (q) {
      case MarkedPoint::Zero: return f(Fp(0, p));
      case MarkedPoint::One: return f(Fp(1, p));
      case MarkedPoint::Infinity: return f.coeff(j);
    }
    return Fp(0, p);
  };
  // Leading action of d^i on the local monomial:
  //   at 0:   d x^a       = -a x^a + ...
  //   at 1:   d (x-1)^a   =  a (x-1)^a + ...
  //   at inf: d t^a       = -a t^{a-1} + ...   (t = 1/x), giving (-1)^i (a)_i
  Polynomial result(p);
  for (std::size_t j = 0; j <= n; ++j) {
    const Fp c = local_coeff(j);
    if (c.is_zero()) continue;
    const std::size_t i = n - j;
    Polynomial term = Polynomial::constant(c);
    for (std::size_t s = 0; s < i; ++s) {
      switch (q) {
        case MarkedPoint::Zero: term = term * (-lambda); break;
        case MarkedPoint::One: term = term * lambda; break;
        case MarkedPoint::Infinity:
          term = term * (Polynomial::constant(p, static_cast<int64_t>(s)) - lambda);
          break;
      }
    }
    result += term;
  }
  if (q == MarkedPoint::Infinity) {
    // Exponents of y at infinity are shifted by the (1-n)/2 twist of the
    // coframe, which vanishes to first order there: lambda = mu - (n-1)/2.
    // Substitute mu = lambda + (n-1)/2.
    const Fp shift = Fp(static_cast<int64_t>(n) - 1, p) / Fp(2, p);
    Polynomial composed(p);
    const Polynomial lin = lambda + Polynomial::constant(shift);
    Polynomial power = Polynomial::constant(p, 1);
    for (int d = 0; d <= result.degree(); ++d) {
      composed += power * result.coeff(static_cast<std::size_t>(d));
      power = power * lin;
    }
    result = composed;
  }
  return result;
}

ExponentProfile exponents(const CompanionOper& oper, MarkedPoint q) {
  return {q, split_roots(indicial_polynomial(oper, q))};
}

OrthogonalForm canonical_form(uint32_t p, std::size_t n) {
  Matrix<Fp> g(n, n, Fp(0, p));
  for (std::size_t i = 0; i < n; ++i) g(i, n - 1 - i) = Fp(i % 2 == 0 ? 1 : -1, p);
  return {std::move(g)};
}

OrthogonalForm symmetric_power_form(uint32_t p, std::size_t m) {
  Matrix<Fp> g(m + 1, m + 1, Fp(0, p));
  for (std::size_t i = 0; i <= m; ++i) {
    const Fp v = factorial(i, p) * factorial(m - i, p);
    g(i, m - i) = (i % 2 == 0) ? v : -v;
  }
  return {std::move(g)};
}

bool is_orthogonal_compatible(const LogConnection& conn, const OrthogonalForm& form) {
  const std::size_t n = conn.rank();
  if (form.gram.rows() != n || form.gram.cols() != n)
    throw std::invalid_argument("is_orthogonal_compatible: form has wrong size");
  const uint32_t p = conn.modulus();
  Matrix<RationalFunction> j(n, n, RationalFunction(p));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      j(r, c) = RationalFunction(Polynomial::constant(form.gram(r, c)));
  const auto& a = conn.matrix();
  return (a.transpose() * j + j * a).is_zero();
}

bool is_orthogonal_compatible(const CompanionOper& oper) {
  if (oper.order() % 2 == 0)
    throw PreconditionViolated("orthogonal compatibility needs odd order");
  const ScalarOperator d = scalar_operator(oper);
  const ScalarOperator sum = d.adjoint() + d;
  for (const auto& c : sum.coefficients())
    if (!c.is_zero()) return false;
  return true;
}

SymmetricPower symmetric_power(const CompanionOper& base, std::size_t m) {
  if (base.order() != 2) throw PreconditionViolated("symmetric_power: base must have order 2");
  if (m == 0) throw PreconditionViolated("symmetric_power: m must be positive");
  const uint32_t p = base.modulus();
  if (m + 1 >= p) throw PreconditionViolated("symmetric_power: m + 1 must be below p");
  const Polynomial& f = base.potential(2);

  // nabla(e1^{m-i} e2^i) = -(m-i) e1^{m-i-1} e2^{i+1} + i f e1^{m-i+1} e2^{i-1}
  Matrix<RationalFunction> a(m + 1, m + 1, RationalFunction(p));
  for (std::size_t i = 0; i <= m; ++i) {
    if (i < m) a(i + 1, i) = RationalFunction::constant(p, -static_cast<int64_t>(m - i));
    if (i > 0) a(i - 1, i) = RationalFunction(f * Fp(static_cast<int64_t>(i), p));
  }

  // L_{k+1} = d L_k + k (m - k + 1) f L_{k-1}, L_0 = 1; L_{m+1} annihilates
  // all degree-m monomials in solutions of d^2 + f.
  const Polynomial one = Polynomial::constant(p, 1);
  ScalarOperator prev({Polynomial(p)});
  ScalarOperator cur({one});
  for (std::size_t k = 0; k <= m; ++k) {
    ScalarOperator next = cur.compose_derivation();
    if (k > 0) {
      const Fp w = Fp(static_cast<int64_t>(k * (m - k + 1)), p);
      next = next + prev * (f * w);
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  const std::size_t n = m + 1;
  if (cur.order() != n || !cur.coefficient(n - 1).is_zero())
    throw std::logic_error("symmetric_power: recursion produced a non-normalized operator");
  std::vector<Polynomial> pots;
  for (std::size_t j = 2; j <= n; ++j) pots.push_back(cur.coefficient(n - j));

  std::optional<OrthogonalForm> form;
  if (m % 2 == 0) form = symmetric_power_form(p, m);
  return {LogConnection(std::move(a)), CompanionOper(p, n, std::move(pots)), std::move(form)};
}

EvenOper extend_to_even(const CompanionOper& odd, const Polynomial& nu) {
  const std::size_t n = odd.order();
  const uint32_t p = odd.modulus();
  if (n < 3 || n % 2 == 0)
    throw IncompatibleOddPart("odd part must have odd order >= 3");
  if (!is_orthogonal_compatible(odd))
    throw IncompatibleOddPart("odd part is not self-dual");
  if (nu.modulus() != p) throw PreconditionViolated("extend_to_even: mixed moduli");
  const int ell = static_cast<int>((n + 1) / 2);
  if (nu.degree() > ell)
    throw DegreeBoundViolated("nu has degree " + std::to_string(nu.degree()) + " > " +
                              std::to_string(ell));
  const LogConnection base = companion_connection(odd);
  Matrix<RationalFunction> a(n + 1, n + 1, RationalFunction(p));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = base.matrix()(i, j);
  a(0, n) = RationalFunction(nu);

  OrthogonalForm form{Matrix<Fp>(n + 1, n + 1, Fp(0, p))};
  const OrthogonalForm inner = canonical_form(p, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) form.gram(i, j) = inner.gram(i, j);
  form.gram(n, n) = Fp(1, p);
  return {odd, nu, LogConnection(std::move(a)), std::move(form)};
}

std::pair<CompanionOper, Polynomial> split_even(const EvenOper& even) {
  return split_even(even.connection);
}

std::pair<CompanionOper, Polynomial> split_even(const LogConnection& conn) {
  const std::size_t total = conn.rank();
  if (total < 4 || total % 2 != 0) throw MalformedBlocks("rank must be even and at least 4");
  const std::size_t n = total - 1;
  const uint32_t p = conn.modulus();
  const auto& a = conn.matrix();
  auto bad = [&](std::size_t i, std::size_t j, const char* why) {
    throw MalformedBlocks(std::string(why) + " at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
  };
  for (std::size_t j = 0; j <= n; ++j)
    if (!a(n, j).is_zero()) bad(n, j, "nonzero lower block");
  for (std::size_t i = 1; i < n; ++i)
    if (!a(i, n).is_zero()) bad(i, n, "upper-right block outside the line subbundle");
  const RationalFunction minus_one = RationalFunction::constant(p, -1);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool sub = (j + 1 == i);
      if (sub ? !(a(i, j) == minus_one) : !a(i, j).is_zero()) bad(i, j, "not in companion shape");
    }
  if (!a(0, 0).is_zero()) bad(0, 0, "not in companion shape");
  for (std::size_t j = 1; j <= n; ++j)
    if (!a(0, j).is_polynomial()) bad(0, j, "non-polynomial potential");
  std::vector<Polynomial> pots;
  for (std::size_t j = 1; j < n; ++j) pots.push_back(a(0, j).numerator());
  try {
    return {CompanionOper(p, n, std::move(pots)), a(0, n).numerator()};
  } catch (const DegreeBoundViolated& e) {
    throw MalformedBlocks(e.what());
  }
}

// ------------------------------------------------------------------- profiles

namespace {

// Dimension of {g : deg g <= bound, D g = 0}.
int64_t kernel_sections(const ScalarOperator& d, int64_t bound) {
  if (bound < 0) return 0;
  const uint32_t p = d.modulus();
  const std::size_t cols = static_cast<std::size_t>(bound) + 1;
  std::vector<Polynomial> images;
  std::size_t height = 0;
  for (std::size_t k = 0; k < cols; ++k) {
    images.push_back(d.apply_monomial(static_cast<int64_t>(k)));
    height = std::max<std::size_t>(height, k + images.back().residues().size());
  }
  std::vector<std::vector<uint32_t>> rows(std::max<std::size_t>(height, 1),
                                          std::vector<uint32_t>(cols, 0));
  for (std::size_t k = 0; k < cols; ++k) {
    const auto r = images[k].residues();
    for (std::size_t e = 0; e < r.size(); ++e) rows[k + e][k] = r[e];
  }
  return static_cast<int64_t>(cols - rank_mod_p(std::move(rows), p));
}

// Vectors (over exponents [0, hi]) spanning D(span{x^k : lo <= k <= top})
// intersected with polynomials of degree <= hi.
std::vector<std::vector<uint32_t>> bounded_images(const ScalarOperator& d, int64_t lo,
                                                  int64_t top, int64_t hi) {
  const uint32_t p = d.modulus();
  if (top < lo) return {};
  std::vector<Polynomial> cols;
  int64_t emax = hi;
  for (int64_t k = lo; k <= top; ++k) {
    cols.push_back(d.apply_monomial(k));
    emax = std::max<int64_t>(emax, k + static_cast<int64_t>(cols.back().residues().size()) - 1);
  }
  const int64_t emin = std::min<int64_t>(lo, 0);
  const std::size_t ncols = cols.size();
  // Constraint rows: exponents outside [0, hi].
  std::vector<std::vector<uint32_t>> outside;
  std::vector<std::vector<uint32_t>> inside(static_cast<std::size_t>(hi + 1),
                                            std::vector<uint32_t>(ncols, 0));
  std::vector<int64_t> out_index(static_cast<std::size_t>(emax - emin + 1), -1);
  for (int64_t e = emin; e <= emax; ++e)
    if (e < 0 || e > hi) {
      out_index[static_cast<std::size_t>(e - emin)] = static_cast<int64_t>(outside.size());
      outside.emplace_back(ncols, 0);
    }
  for (std::size_t c = 0; c < ncols; ++c) {
    const int64_t k = lo + static_cast<int64_t>(c);
    const auto r = cols[c].residues();
    for (std::size_t s = 0; s < r.size(); ++s) {
      if (r[s] == 0) continue;
      const int64_t e = k + static_cast<int64_t>(s);
      if (e >= 0 && e <= hi)
        inside[static_cast<std::size_t>(e)][c] = r[s];
      else
        outside[static_cast<std::size_t>(out_index[static_cast<std::size_t>(e - emin)])][c] = r[s];
    }
  }
  std::vector<std::vector<uint32_t>> combos;
  if (outside.empty()) {
    for (std::size_t c = 0; c < ncols; ++c) {
      std::vector<uint32_t> v(ncols, 0);
      v[c] = 1;
      combos.push_back(std::move(v));
    }
  } else {
    combos = nullspace_mod_p(std::move(outside), ncols, p);
  }
  std::vector<std::vector<uint32_t>> result;
  result.reserve(combos.size());
  for (const auto& v : combos) {
    std::vector<uint32_t> img(static_cast<std::size_t>(hi + 1), 0);
    for (std::size_t e = 0; e < img.size(); ++e) {
      uint64_t acc = 0;
      const auto& row = inside[e];
      for (std::size_t c = 0; c < ncols; ++c)
        if (row[c] && v[c]) acc = (acc + uint64_t{row[c]} * v[c]) % p;
      img[e] = static_cast<uint32_t>(acc);
    }
    result.push_back(std::move(img));
  }
  return result;
}

// h^0 of the image sheaf twisted by O(m): sections that are images of
// polynomials on the affine chart and of Laurent polynomials regular at
// infinity (with pole order pm) on the other chart. window bounds how far
// preimages may stray past the target degree range.
int64_t image_sections(const ScalarOperator& d, int64_t source_top, int64_t hi, int64_t window) {
  if (hi < 0) return 0;
  const uint32_t p = d.modulus();
  auto a = bounded_images(d, 0, hi + window, hi);
  auto b = bounded_images(d, std::min<int64_t>(0, source_top) - window, source_top, hi);
  if (a.empty() || b.empty()) return 0;
  const std::size_t ra = rank_mod_p(a, p);
  const std::size_t rb = rank_mod_p(b, p);
  a.insert(a.end(), b.begin(), b.end());
  const std::size_t rab = rank_mod_p(std::move(a), p);
  return static_cast<int64_t>(ra + rb) - static_cast<int64_t>(rab);
}

// Recover (rank, degree, splitting) from h(m) = sum_i max(0, w_i + m + 1),
// assuming every w_i <= 0. Sweeps m upward until the increment reaches
// expected_rank (or, if unknown, stays put for several steps).
SheafProfile sweep_profile(const std::function<int64_t(int)>& h, int expected_rank, int max_twist,
                           const char* what) {
  if (h(-1) != 0)
    throw ProfileInconsistent(std::string(what) + ": sections at twist -1 (positive summand)");
  SheafProfile prof;
  std::vector<int64_t> incr;
  const int plateau = expected_rank >= 0 ? 3 : 5;
  for (int m = 0; m <= max_twist; ++m) {
    prof.section_counts.push_back(h(m));
    const int64_t prev = m == 0 ? 0 : prof.section_counts[static_cast<std::size_t>(m - 1)];
    const int64_t delta = prof.section_counts.back() - prev;
    if (!incr.empty() && delta < incr.back())
      throw ProfileInconsistent(std::string(what) + ": section increments decreased at m = " +
                                std::to_string(m));
    if (expected_rank >= 0 && delta > expected_rank)
      throw ProfileInconsistent(std::string(what) + ": increment exceeds rank at m = " +
                                std::to_string(m));
    incr.push_back(delta);
    const std::size_t k = incr.size();
    const bool flat = k >= static_cast<std::size_t>(plateau) &&
                      std::all_of(incr.end() - plateau, incr.end(),
                                  [&](int64_t v) { return v == delta; });
    if (flat && (expected_rank < 0 || delta == expected_rank)) {
      prof.rank = static_cast<int>(delta);
      int64_t last_delta = 0;
      for (std::size_t t = 0; t < incr.size(); ++t) {
        const int64_t count = incr[t] - last_delta;
        for (int64_t c = 0; c < count; ++c) prof.splitting.push_back(-static_cast<int>(t));
        last_delta = incr[t];
      }
      std::sort(prof.splitting.begin(), prof.splitting.end());
      prof.degree = 0;
      for (int w : prof.splitting) prof.degree += w;
      const int64_t top = static_cast<int64_t>(m);
      if (prof.section_counts.back() != prof.rank * (top + 1) + prof.degree)
        throw ProfileInconsistent(std::string(what) + ": Riemann-Roch mismatch");
      return prof;
    }
  }
  throw ProfileInconsistent(std::string(what) + ": section counts did not stabilize by twist " +
                            std::to_string(max_twist));
}

}  // namespace

SheafProfile kernel_sheaf_profile(const CompanionOper& oper, bool require_dormant) {
  const bool dormant = is_dormant(companion_connection(oper));
  if (require_dormant && !dormant) throw NotDormant("kernel_sheaf_profile: oper is not dormant");
  const ScalarOperator d = scalar_operator(oper);
  const int64_t p = oper.modulus();
  const int off = twist_offset(oper.order());
  auto h = [&](int m) { return kernel_sections(d, p * m - off); };
  const int n = static_cast<int>(oper.order());
  return sweep_profile(h, dormant ? n : -1, 4 * n + 16, "kernel profile");
}

ImageProfile image_profile(const CompanionOper& oper, bool require_dormant) {
  const std::size_t n = oper.order();
  if (n < 3 || n % 2 == 0) throw PreconditionViolated("image_profile: order must be odd and >= 3");
  const bool dormant = is_dormant(companion_connection(oper));
  if (require_dormant && !dormant) throw NotDormant("image_profile: oper is not dormant");
  const ScalarOperator d = scalar_operator(oper);
  const int64_t p = oper.modulus();
  const int off = twist_offset(n);
  auto h = [&](int m) -> int64_t {
    const int64_t source_top = p * m - off;
    const int64_t hi = source_top + static_cast<int64_t>(n);
    // Grow the preimage window until three consecutive widths agree.
    int64_t window = 3 * p + static_cast<int64_t>(n);
    std::vector<int64_t> seen;
    for (int step = 0; step < 24; ++step, window += p) {
      seen.push_back(image_sections(d, source_top, hi, window));
      const std::size_t k = seen.size();
      if (k >= 3 && seen[k - 1] == seen[k - 2] && seen[k - 2] == seen[k - 3]) return seen.back();
    }
    throw ProfileInconsistent("image profile: preimage window did not stabilize at m = " +
                              std::to_string(m));
  };
  const int expected = dormant ? static_cast<int>(p) - static_cast<int>(n) : -1;
  ImageProfile out;
  out.profile = sweep_profile(h, expected, 2 * static_cast<int>(n) + 16, "image profile");
  out.h0 = out.profile.section_counts.front();
  return out;
}

bool unramifiedness_certificate(const CompanionOper& oper) {
  if (oper.order() < 3 || oper.order() % 2 == 0)
    throw PreconditionViolated("unramifiedness certificate needs odd order >= 3");
  return image_profile(oper, true).h0 == 0;
}

int pushforward_degree(uint32_t p, int ell) { return -ell - static_cast<int>(p) + 2; }

}  // namespace dormant
