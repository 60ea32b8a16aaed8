#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dormant/budget.hpp"
#include "dormant/enumeration.hpp"

namespace dormant {

// Connected trivalent multigraph with legs, in half-edge form. Half-edge h
// sits at vertex vertex_of[h]; half-edges 3v, 3v+1, 3v+2 belong to v. A loop
// is an edge whose two half-edges share a vertex.
class DegenerationGraph {
 public:
  // Throws PreconditionViolated unless every half-edge lies in exactly one
  // edge or leg and the graph is connected.
  DegenerationGraph(std::string name, std::size_t vertices,
                    std::vector<std::pair<std::size_t, std::size_t>> edges,
                    std::vector<std::size_t> legs);

  const std::string& name() const { return name_; }
  std::size_t vertex_count() const { return vertices_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  const std::vector<std::size_t>& legs() const { return legs_; }
  static std::size_t vertex_of(std::size_t half_edge) { return half_edge / 3; }

  int genus() const { return static_cast<int>(edges_.size()) - static_cast<int>(vertices_) + 1; }
  int leg_count() const { return static_cast<int>(legs_.size()); }
  std::size_t loop_count() const;

 private:
  std::string name_;
  std::size_t vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::size_t> legs_;
};

// The caterpillar graph of type (g, r), plus the theta-style alternative
// (g >= 2) and a leg-swapped alternative (r >= 2, at least two vertices).
std::vector<DegenerationGraph> canonical_graphs(int g, int r);

// Sum over labelings of internal edges of the product over vertices of N on
// the three incident labels; leg i carries rho[i]. Throws TypeMismatch if
// the graph is not of type (g, rho.size()), ComplexityRefusal above budget.
int64_t graph_degree(const DegenerationGraph& graph, const NTable& table, int g,
                     const std::vector<RadiusLabel>& rho, uint64_t budget = default_budget());

}  // namespace dormant
