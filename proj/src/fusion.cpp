#include "dormant/fusion.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "dormant/errors.hpp"

namespace dormant {

namespace {

constexpr int kReseeds = 8;
constexpr double kRelativeTolerance = 1e-9;
constexpr double kIntegerTolerance = 1e-6;

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

int witness_label(const FusionRing& ring, std::size_t i) {
  return i == 0 ? -1 : ring.labels()[i - 1];
}

}  // namespace

std::size_t FusionRing::index_of(RadiusLabel a) const {
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), a);
  if (it == labels_.end() || *it != a)
    throw PreconditionViolated("label " + std::to_string(a) + " is not in the ring");
  return static_cast<std::size_t>(it - labels_.begin()) + 1;
}

std::vector<int64_t> FusionRing::multiply(const std::vector<int64_t>& x,
                                          const std::vector<int64_t>& y) const {
  const std::size_t d = dimension();
  if (x.size() != d || y.size() != d) throw std::invalid_argument("multiply: wrong length");
  std::vector<int64_t> out(d, 0);
  for (std::size_t a = 0; a < d; ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < d; ++b) {
      if (y[b] == 0) continue;
      for (std::size_t c = 0; c < d; ++c) out[c] += x[a] * y[b] * structure(a, b, c);
    }
  }
  return out;
}

FusionRing build_ring(const std::vector<RadiusLabel>& labels,
                      const std::vector<std::vector<std::vector<int64_t>>>& dense) {
  const std::size_t k = labels.size();
  if (!std::is_sorted(labels.begin(), labels.end()) ||
      std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw PreconditionViolated("build_ring: labels must be strictly ascending");
  if (dense.size() != k) throw PreconditionViolated("build_ring: table is not total");
  for (const auto& plane : dense) {
    if (plane.size() != k) throw PreconditionViolated("build_ring: table is not total");
    for (const auto& row : plane) {
      if (row.size() != k) throw PreconditionViolated("build_ring: table is not total");
      for (int64_t v : row)
        if (v < 0) throw PreconditionViolated("build_ring: negative structure constant");
    }
  }
  FusionRing ring;
  ring.labels_ = labels;
  const std::size_t d = k + 1;
  ring.mult_.assign(d * d * d, 0);
  auto at = [&](std::size_t a, std::size_t b, std::size_t c) -> int64_t& {
    return ring.mult_[(a * d + b) * d + c];
  };
  for (std::size_t a = 0; a < d; ++a) {
    at(0, a, a) = 1;
    at(a, 0, a) = 1;
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) at(i + 1, j + 1, l + 1) = dense[i][j][l];

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < i; ++j)
      for (std::size_t l = 0; l < k; ++l)
        if (dense[i][j][l] != dense[j][i][l])
          throw NotCommutative("N(" + std::to_string(labels[i]) + "," + std::to_string(labels[j]) +
                               "," + std::to_string(labels[l]) + ") differs from its transpose");

  for (std::size_t a = 1; a < d; ++a)
    for (std::size_t b = 1; b < d; ++b)
      for (std::size_t c = 1; c < d; ++c) {
        std::vector<int64_t> ea(d, 0), eb(d, 0), ec(d, 0);
        ea[a] = eb[b] = ec[c] = 1;
        if (ring.multiply(ring.multiply(ea, eb), ec) != ring.multiply(ea, ring.multiply(eb, ec)))
          throw NotAssociative("product is not associative on (" +
                                   std::to_string(witness_label(ring, a)) + "," +
                                   std::to_string(witness_label(ring, b)) + "," +
                                   std::to_string(witness_label(ring, c)) + ")",
                               witness_label(ring, a), witness_label(ring, b),
                               witness_label(ring, c));
      }
  return ring;
}

FusionRing build_ring(const NTable& table) {
  const auto& labels = table.labels();
  const std::size_t k = labels.size();
  std::vector<std::vector<std::vector<int64_t>>> dense(
      k, std::vector<std::vector<int64_t>>(k, std::vector<int64_t>(k, 0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) dense[i][j][l] = table.count(labels[i], labels[j], labels[l]);
  return build_ring(labels, dense);
}

std::complex<double> evaluate(const Character& chi, const std::vector<int64_t>& element) {
  if (element.size() != chi.values.size()) throw std::invalid_argument("evaluate: wrong length");
  std::complex<double> s = 0.0;
  for (std::size_t i = 0; i < element.size(); ++i)
    s += static_cast<double>(element[i]) * chi.values[i];
  return s;
}

CharacterSet characters(const FusionRing& ring, uint64_t seed) {
  const auto d = static_cast<Eigen::Index>(ring.dimension());
  // Transposed left-multiplication operators: row vector phi with
  // phi L_a = chi(a) phi is exactly a character.
  std::vector<Eigen::MatrixXd> ops;
  for (Eigen::Index a = 0; a < d; ++a) {
    Eigen::MatrixXd m(d, d);
    for (Eigen::Index b = 0; b < d; ++b)
      for (Eigen::Index c = 0; c < d; ++c)
        m(b, c) = static_cast<double>(ring.structure(static_cast<std::size_t>(a),
                                                     static_cast<std::size_t>(b),
                                                     static_cast<std::size_t>(c)));
    ops.push_back(std::move(m));
  }

  for (int attempt = 0; attempt <= kReseeds; ++attempt) {
    std::mt19937_64 rng(seed + static_cast<uint64_t>(attempt));
    std::uniform_real_distribution<double> coeff(0.5, 1.5);
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(d, d);
    for (Eigen::Index a = 1; a < d; ++a) {
      const double r = coeff(rng) * ((rng() & 1) ? 1.0 : -1.0);
      x += r * ops[static_cast<std::size_t>(a)];
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(x, false);
    if (solver.info() != Eigen::Success) continue;
    const Eigen::VectorXcd eig = solver.eigenvalues();
    double scale = 1.0;
    for (Eigen::Index i = 0; i < d; ++i) scale = std::max(scale, std::abs(eig(i)));
    const double tol = kRelativeTolerance * scale;
    // Defective eigenvalues split by roughly sqrt(machine epsilon), so
    // cluster loosely and decide multiplicities from the eigenspace.
    const double cluster_tol = 1e-5 * scale;
    std::vector<bool> used(static_cast<std::size_t>(d), false);
    std::vector<Character> found;
    bool retry = false;
    for (Eigen::Index i = 0; i < d && !retry; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      std::complex<double> centre = 0.0;
      int members = 0;
      for (Eigen::Index j = i; j < d; ++j)
        if (!used[static_cast<std::size_t>(j)] && std::abs(eig(j) - eig(i)) <= cluster_tol) {
          used[static_cast<std::size_t>(j)] = true;
          centre += eig(j);
          ++members;
        }
      centre /= static_cast<double>(members);
      const CMatrix shifted = x.cast<std::complex<double>>() -
                              centre * CMatrix::Identity(d, d);
      Eigen::JacobiSVD<CMatrix> svd(shifted, Eigen::ComputeFullV);
      const auto& sv = svd.singularValues();
      int kernel = 0;
      for (Eigen::Index s = 0; s < sv.size(); ++s)
        if (sv(s) <= 1e-7 * scale) ++kernel;
      if (kernel != 1) {
        retry = true;
        break;
      }
      CVector v = svd.matrixV().col(d - 1);
      if (std::abs(v(0)) <= tol) {
        retry = true;
        break;
      }
      v /= v(0);
      Character chi;
      chi.values.assign(v.data(), v.data() + d);
      found.push_back(std::move(chi));
    }
    if (retry) continue;

    double value_scale = 1.0;
    for (const auto& chi : found)
      for (const auto& z : chi.values) value_scale = std::max(value_scale, std::abs(z));
    const double mult_tol = kRelativeTolerance * value_scale * value_scale *
                            static_cast<double>(d);
    bool ok = true;
    for (const auto& chi : found)
      for (Eigen::Index a = 1; a < d && ok; ++a)
        for (Eigen::Index b = 1; b < d && ok; ++b) {
          std::complex<double> rhs = 0.0;
          for (Eigen::Index c = 0; c < d; ++c)
            rhs += static_cast<double>(ring.structure(static_cast<std::size_t>(a),
                                                      static_cast<std::size_t>(b),
                                                      static_cast<std::size_t>(c))) *
                   chi.values[static_cast<std::size_t>(c)];
          const auto lhs = chi.values[static_cast<std::size_t>(a)] *
                           chi.values[static_cast<std::size_t>(b)];
          if (std::abs(lhs - rhs) > mult_tol) ok = false;
        }
    if (!ok) continue;

    for (auto& chi : found)
      for (auto& z : chi.values) {
        if (std::abs(z.imag()) <= tol) z.imag(0.0);
        if (std::abs(z.real()) <= tol) z.real(0.0);
      }
    auto key = [](const Character& chi) {
      std::vector<std::pair<long long, long long>> k;
      for (const auto& z : chi.values)
        k.emplace_back(std::llround(z.real() * 1e8), std::llround(z.imag() * 1e8));
      return k;
    };
    std::sort(found.begin(), found.end(),
              [&](const Character& a, const Character& b) { return key(a) > key(b); });
    CharacterSet out;
    out.semisimple = static_cast<Eigen::Index>(found.size()) == d;
    out.characters = std::move(found);
    out.tolerance = mult_tol;
    return out;
  }
  throw NonSemisimple("could not separate characters after " + std::to_string(kReseeds) +
                      " reseeds");
}

std::vector<int64_t> casimir(const FusionRing& ring) {
  const std::size_t d = ring.dimension();
  std::vector<int64_t> out(d, 0);
  for (std::size_t l = 1; l < d; ++l)
    for (std::size_t c = 0; c < d; ++c) out[c] += ring.structure(l, l, c);
  return out;
}

DegreeResult degree_detailed(const FusionRing& ring, const CharacterSet& chars, int g,
                             const std::vector<RadiusLabel>& rho) {
  const int r = static_cast<int>(rho.size());
  if (g < 0 || 2 * g - 2 + r <= 0)
    throw PreconditionViolated("degree: need 2g - 2 + r > 0 (g = " + std::to_string(g) +
                               ", r = " + std::to_string(r) + ")");
  if (!chars.semisimple)
    throw NonSemisimple("degree: the ring has fewer characters than its dimension");
  std::vector<std::size_t> idx;
  for (RadiusLabel a : rho) idx.push_back(ring.index_of(a));
  const auto cas = casimir(ring);
  const double tol = std::max(chars.tolerance, 1e-9);

  std::complex<double> sum = 0.0, carry = 0.0;
  for (const auto& chi : chars.characters) {
    const std::complex<double> c = evaluate(chi, cas);
    std::complex<double> prod = 1.0;
    for (std::size_t i : idx) prod *= chi.values[i];
    std::complex<double> term;
    if (g == 0) {
      if (std::abs(c) <= tol) {
        // A character killing every label contributes nothing once r > 0.
        if (std::abs(prod) <= tol) continue;
        throw CasimirSingular("degree: character with vanishing Casimir value at genus 0");
      }
      term = prod / c;
    } else {
      term = prod;
      for (int k = 1; k < g; ++k) term *= c;
    }
    // Kahan summation.
    const std::complex<double> y = term - carry;
    const std::complex<double> t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  const double rounded = std::round(sum.real());
  const double residual = std::max(std::abs(sum.real() - rounded), std::abs(sum.imag()));
  if (residual >= kIntegerTolerance)
    throw NotNearInteger("degree: character sum " + std::to_string(sum.real()) +
                         " is not near an integer");
  if (rounded < 0) throw NotNearInteger("degree: negative character sum");
  return {static_cast<int64_t>(rounded), residual};
}

int64_t degree(const FusionRing& ring, int g, int r, const std::vector<RadiusLabel>& rho,
               uint64_t seed) {
  if (static_cast<int>(rho.size()) != r)
    throw PreconditionViolated("degree: rho has " + std::to_string(rho.size()) +
                               " labels, expected " + std::to_string(r));
  return degree_detailed(ring, characters(ring, seed), g, rho).value;
}

}  // namespace dormant
