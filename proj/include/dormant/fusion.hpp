#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "dormant/enumeration.hpp"

namespace dormant {

constexpr uint64_t kDefaultSeed = 0x5eed'0f'd0'7a'17ULL;

// Unitization of the free abelian group on the labels, with
// a * b = sum_c N(a, b, c) c. Basis index 0 is the adjoined unit; index
// i + 1 is labels()[i].
class FusionRing {
 public:
  const std::vector<RadiusLabel>& labels() const { return labels_; }
  std::size_t dimension() const { return labels_.size() + 1; }
  // Basis index of a label; throws PreconditionViolated if absent.
  std::size_t index_of(RadiusLabel a) const;
  // Coefficient of basis element c in (basis a) * (basis b).
  int64_t structure(std::size_t a, std::size_t b, std::size_t c) const {
    return mult_[(a * dimension() + b) * dimension() + c];
  }
  std::vector<int64_t> multiply(const std::vector<int64_t>& x, const std::vector<int64_t>& y) const;

 private:
  friend FusionRing build_ring(const std::vector<RadiusLabel>&,
                               const std::vector<std::vector<std::vector<int64_t>>>&);
  std::vector<RadiusLabel> labels_;
  std::vector<int64_t> mult_;
};

// Validates commutativity then associativity on every basis triple. Witness
// labels in NotAssociative use -1 for the unit.
FusionRing build_ring(const NTable& table);
// dense[i][j][k] = N(labels[i], labels[j], labels[k]).
FusionRing build_ring(const std::vector<RadiusLabel>& labels,
                      const std::vector<std::vector<std::vector<int64_t>>>& dense);

// One ring homomorphism to C: values[0] = 1 at the unit, values[i + 1] on
// labels()[i].
struct Character {
  std::vector<std::complex<double>> values;
};

struct CharacterSet {
  std::vector<Character> characters;
  double tolerance = 0.0;  // absolute, after scaling
  bool semisimple = false;  // one character per basis element
};

// Common left eigenvectors of the regular representation, found through a
// random combination of multiplication operators. Retries with fresh
// coefficients on eigenvalue collisions; throws NonSemisimple when none of
// the attempts separates the characters.
CharacterSet characters(const FusionRing& ring, uint64_t seed = kDefaultSeed);

// Coefficients of sum over labels of l * l (unit excluded from the sum).
std::vector<int64_t> casimir(const FusionRing& ring);

std::complex<double> evaluate(const Character& chi, const std::vector<int64_t>& element);

struct DegreeResult {
  int64_t value = 0;
  double residual = 0.0;
};

// sum over characters of chi(Cas)^(g-1) prod chi(rho_i), rounded.
DegreeResult degree_detailed(const FusionRing& ring, const CharacterSet& chars, int g,
                             const std::vector<RadiusLabel>& rho);
int64_t degree(const FusionRing& ring, int g, int r, const std::vector<RadiusLabel>& rho,
               uint64_t seed = kDefaultSeed);

}  // namespace dormant
