#pragma once

#include <cstdint>
#include <vector>

#include "dormant/field.hpp"
#include "dormant/matrix.hpp"
#include "dormant/polynomial.hpp"

namespace dormant {

using FpVector = std::vector<Fp>;

Matrix<Fp> fp_matrix(uint32_t p, const std::vector<std::vector<int64_t>>& rows);
Matrix<Fp> identity(uint32_t p, std::size_t n);

std::size_t rank(const Matrix<Fp>& m);

// Basis of {v : m v = 0}; its size is cols - rank.
std::vector<FpVector> nullspace(const Matrix<Fp>& m);

// det(t*I - m), monic of degree n (Hessenberg reduction, exact).
Polynomial characteristic_polynomial(const Matrix<Fp>& m);

// Roots of f in F_p listed with multiplicity, ascending. Throws NotSplit if
// the root count falls short of deg f.
std::vector<Fp> split_roots(const Polynomial& f);

// Eigenvalue multiset of a square matrix; throws NotSplit.
std::vector<Fp> eigenvalues_in_field(const Matrix<Fp>& m);

// Rank of a list of residue vectors mod p (all of the same length); the hot
// path used by the sheaf profilers.
std::size_t rank_mod_p(std::vector<std::vector<uint32_t>> rows, uint32_t p);

// Nullspace of a residue matrix given as rows (ncols columns).
std::vector<std::vector<uint32_t>> nullspace_mod_p(std::vector<std::vector<uint32_t>> rows,
                                                   std::size_t ncols, uint32_t p);

}  // namespace dormant
