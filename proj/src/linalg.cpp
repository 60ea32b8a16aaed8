#include "dormant/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "dormant/errors.hpp"

namespace dormant {

namespace {

uint32_t inv_mod(uint32_t a, uint32_t p) { return Fp::from_residue(a, p).inverse().value(); }

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<uint32_t>>& rows, std::size_t ncols,
                              uint32_t p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const uint64_t inv = inv_mod(rows[r][col], p);
    for (auto& v : rows[r]) v = static_cast<uint32_t>(v * inv % p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const uint64_t f = rows[i][col];
      auto& dst = rows[i];
      const auto& src = rows[r];
      for (std::size_t c = col; c < ncols; ++c)
        if (src[c]) dst[c] = static_cast<uint32_t>((dst[c] + (p - f) * src[c]) % p);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<uint32_t>> to_rows(const Matrix<Fp>& m) {
  std::vector<std::vector<uint32_t>> rows(m.rows(), std::vector<uint32_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j).value();
  return rows;
}

uint32_t modulus_of(const Matrix<Fp>& m) {
  if (m.rows() == 0 || m.cols() == 0) throw std::invalid_argument("empty matrix");
  return m(0, 0).modulus();
}

}  // namespace

Matrix<Fp> fp_matrix(uint32_t p, const std::vector<std::vector<int64_t>>& rows) {
  if (rows.empty()) throw std::invalid_argument("fp_matrix: no rows");
  Matrix<Fp> m(rows.size(), rows[0].size(), Fp(0, p));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("fp_matrix: ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = Fp(rows[i][j], p);
  }
  return m;
}

Matrix<Fp> identity(uint32_t p, std::size_t n) {
  Matrix<Fp> m(n, n, Fp(0, p));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Fp(1, p);
  return m;
}

std::size_t rank_mod_p(std::vector<std::vector<uint32_t>> rows, uint32_t p) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  return rref(rows, ncols, p).size();
}

std::vector<std::vector<uint32_t>> nullspace_mod_p(std::vector<std::vector<uint32_t>> rows,
                                                   std::size_t ncols, uint32_t p) {
  const auto pivots = rref(rows, ncols, p);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<uint32_t>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<uint32_t> v(ncols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const uint32_t c = rows[i][free];
      v[pivots[i]] = c == 0 ? 0 : p - c;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const Matrix<Fp>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return rank_mod_p(to_rows(m), modulus_of(m));
}

std::vector<FpVector> nullspace(const Matrix<Fp>& m) {
  const uint32_t p = modulus_of(m);
  std::vector<FpVector> out;
  for (const auto& v : nullspace_mod_p(to_rows(m), m.cols(), p)) {
    FpVector w;
    w.reserve(v.size());
    for (auto x : v) w.push_back(Fp::from_residue(x, p));
    out.push_back(std::move(w));
  }
  return out;
}

Polynomial characteristic_polynomial(const Matrix<Fp>& m) {
  if (!m.is_square()) throw std::invalid_argument("characteristic_polynomial: not square");
  const uint32_t p = modulus_of(m);
  const std::size_t n = m.rows();
  Matrix<Fp> h = m;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    const Fp inv = h(j + 1, j).inverse();
    for (std::size_t r = j + 2; r < n; ++r) {
      const Fp u = h(r, j) * inv;
      if (u.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) h(r, c) -= u * h(j + 1, c);
      for (std::size_t rr = 0; rr < n; ++rr) h(rr, j + 1) += u * h(rr, r);
    }
  }
  // p_k = (t - h_kk) p_{k-1} - sum_i h_{ik} (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
  const Polynomial t = Polynomial::x(p);
  std::vector<Polynomial> chain{Polynomial::constant(p, 1)};
  for (std::size_t k = 0; k < n; ++k) {
    Polynomial next = (t - Polynomial::constant(h(k, k))) * chain[k];
    Fp prod = Fp(1, p);
    for (std::size_t i = k; i-- > 0;) {
      prod *= h(i + 1, i);
      if (prod.is_zero()) break;
      next -= chain[i] * (h(i, k) * prod);
    }
    chain.push_back(std::move(next));
  }
  return chain.back();
}

std::vector<Fp> split_roots(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("split_roots: zero polynomial");
  const uint32_t p = f.modulus();
  std::vector<Fp> roots;
  Polynomial rest = f;
  for (uint32_t a = 0; a < p && rest.degree() > 0; ++a) {
    const Polynomial lin{p, {-static_cast<int64_t>(a), 1}};
    while (rest.degree() > 0 && rest(Fp(a, p)).is_zero()) {
      rest = divmod(rest, lin).first;
      roots.push_back(Fp(a, p));
    }
  }
  if (rest.degree() > 0) throw NotSplit();
  return roots;
}

std::vector<Fp> eigenvalues_in_field(const Matrix<Fp>& m) {
  return split_roots(characteristic_polynomial(m));
}

}  // namespace dormant
