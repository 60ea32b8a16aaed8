#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "dormant/oper.hpp"

namespace dormant {

// Canonical representative min(e, p - e) of an exponent difference e.
using RadiusLabel = int;
using RadiiTriple = std::array<RadiusLabel, 3>;  // at 0, 1, inf

RadiusLabel canonical_radius(int64_t difference, uint32_t p);

// Throws NotSplit if some indicial polynomial has no F_p roots.
RadiiTriple radii_of(const CompanionOper& oper);

// Symmetric table N(a, b, c) of (0,3) counts. Entries are stored once, under
// the ascending triple; omitted triples are zero.
class NTable {
 public:
  using Key = std::array<RadiusLabel, 3>;

  explicit NTable(uint32_t p = 0) : p_(p) {}

  uint32_t modulus() const { return p_; }
  // Labels occurring in some nonzero entry, plus any registered explicitly.
  const std::vector<RadiusLabel>& labels() const { return labels_; }
  const std::map<Key, int64_t>& entries() const { return counts_; }

  int64_t count(RadiusLabel a, RadiusLabel b, RadiusLabel c) const;
  // Overwrites the entry for every permutation of (a, b, c). Zero erases.
  void set(RadiusLabel a, RadiusLabel b, RadiusLabel c, int64_t count);
  void add_label(RadiusLabel a);

  // Sum of N over ordered triples.
  int64_t total() const;

  friend bool operator==(const NTable& x, const NTable& y) {
    return x.p_ == y.p_ && x.labels_ == y.labels_ && x.counts_ == y.counts_;
  }

  static Key sorted(RadiusLabel a, RadiusLabel b, RadiusLabel c);

 private:
  uint32_t p_;
  std::vector<RadiusLabel> labels_;
  std::map<Key, int64_t> counts_;
};

struct DormantWitness {
  CompanionOper oper;
  RadiiTriple radii;
};

struct Enumeration {
  std::vector<DormantWitness> witnesses;  // ordered by (c2, c1, c0) of f_2
  NTable table;
};

// Every f_2 = c0 + c1 x + c2 x^2 over F_p, keeping the dormant ones. The
// sweep is sharded by c2 across `threads` workers (0 = hardware default).
Enumeration enumerate_dormant_sl2(uint32_t p, unsigned threads = 1);

// Dormancy test for the rank-2 companion oper d^2 + f, specialised to
// polynomial arithmetic.
bool is_dormant_sl2(const Polynomial& f);

}  // namespace dormant
