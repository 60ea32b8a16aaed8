#include "dormant/graph.hpp"

#include <algorithm>
#include <future>
#include <numeric>

#include "dormant/errors.hpp"

namespace dormant {

DegenerationGraph::DegenerationGraph(std::string name, std::size_t vertices,
                                     std::vector<std::pair<std::size_t, std::size_t>> edges,
                                     std::vector<std::size_t> legs)
    : name_(std::move(name)), vertices_(vertices), edges_(std::move(edges)), legs_(std::move(legs)) {
  if (vertices_ == 0) throw PreconditionViolated("graph: no vertices");
  const std::size_t halves = 3 * vertices_;
  std::vector<int> seen(halves, 0);
  auto mark = [&](std::size_t h) {
    if (h >= halves) throw PreconditionViolated("graph: half-edge " + std::to_string(h) + " out of range");
    ++seen[h];
  };
  for (const auto& [a, b] : edges_) {
    if (a == b) throw PreconditionViolated("graph: edge joins a half-edge to itself");
    mark(a);
    mark(b);
  }
  for (std::size_t h : legs_) mark(h);
  for (std::size_t h = 0; h < halves; ++h)
    if (seen[h] != 1)
      throw PreconditionViolated("graph: half-edge " + std::to_string(h) + " used " +
                                 std::to_string(seen[h]) + " times");
  // Connectivity via union-find.
  std::vector<std::size_t> parent(vertices_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [a, b] : edges_) parent[find(vertex_of(a))] = find(vertex_of(b));
  for (std::size_t v = 1; v < vertices_; ++v)
    if (find(v) != find(0)) throw PreconditionViolated("graph: not connected");
}

std::size_t DegenerationGraph::loop_count() const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [](const auto& e) {
    return vertex_of(e.first) == vertex_of(e.second);
  }));
}

namespace {

struct Skeleton {
  std::size_t vertices;
  std::vector<std::pair<std::size_t, std::size_t>> spine;
  std::vector<std::size_t> free_slots;
};

// Path v0 - v1 - ... - v_{V-1}; the remaining 2g + r half-edges in order.
Skeleton spine(int g, int r) {
  Skeleton s;
  s.vertices = static_cast<std::size_t>(2 * g - 2 + r);
  std::vector<bool> used(3 * s.vertices, false);
  for (std::size_t v = 0; v + 1 < s.vertices; ++v) {
    const std::size_t a = 3 * v + 2, b = 3 * (v + 1);
    s.spine.emplace_back(a, b);
    used[a] = used[b] = true;
  }
  for (std::size_t h = 0; h < used.size(); ++h)
    if (!used[h]) s.free_slots.push_back(h);
  return s;
}

DegenerationGraph assemble(std::string name, const Skeleton& s, std::vector<std::size_t> legs,
                           std::vector<std::size_t> rest, bool interleave) {
  auto edges = s.spine;
  const std::size_t half = rest.size() / 2;
  for (std::size_t i = 0; i < half; ++i) {
    if (interleave)
      edges.emplace_back(rest[i], rest[i + half]);
    else
      edges.emplace_back(rest[2 * i], rest[2 * i + 1]);
  }
  return DegenerationGraph(std::move(name), s.vertices, std::move(edges), std::move(legs));
}

}  // namespace

std::vector<DegenerationGraph> canonical_graphs(int g, int r) {
  if (g < 0 || r < 0 || 2 * g - 2 + r <= 0)
    throw PreconditionViolated("canonical_graphs: need 2g - 2 + r > 0");
  const Skeleton s = spine(g, r);
  const auto& slots = s.free_slots;
  const std::size_t nr = static_cast<std::size_t>(r);
  std::vector<DegenerationGraph> out;

  std::vector<std::size_t> legs(slots.begin(), slots.begin() + static_cast<std::ptrdiff_t>(nr));
  std::vector<std::size_t> rest(slots.begin() + static_cast<std::ptrdiff_t>(nr), slots.end());
  out.push_back(assemble("caterpillar", s, legs, rest, false));
  if (g >= 2) out.push_back(assemble("interleaved", s, legs, rest, true));
  if (r >= 2 && s.vertices >= 2) {
    // Move the second leg to the third free slot, which changes the channel.
    std::vector<std::size_t> order(slots.begin(), slots.end());
    std::swap(order[1], order[2]);
    std::vector<std::size_t> legs2(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(nr));
    std::vector<std::size_t> rest2(order.begin() + static_cast<std::ptrdiff_t>(nr), order.end());
    out.push_back(assemble("leg-swapped", s, legs2, rest2, false));
  }
  return out;
}

int64_t graph_degree(const DegenerationGraph& graph, const NTable& table, int g,
                     const std::vector<RadiusLabel>& rho, uint64_t budget) {
  if (graph.genus() != g || graph.leg_count() != static_cast<int>(rho.size()))
    throw TypeMismatch("graph " + graph.name() + " has type (" + std::to_string(graph.genus()) +
                       "," + std::to_string(graph.leg_count()) + "), requested (" +
                       std::to_string(g) + "," + std::to_string(rho.size()) + ")");
  const auto& labels = table.labels();
  for (RadiusLabel a : rho)
    if (!std::binary_search(labels.begin(), labels.end(), a))
      throw PreconditionViolated("graph_degree: label " + std::to_string(a) + " not in table");
  const std::size_t e = graph.edges().size();
  const std::size_t k = labels.size();
  double work = 1.0;
  for (std::size_t i = 0; i < e; ++i) work *= static_cast<double>(k);
  if (work > static_cast<double>(budget))
    throw ComplexityRefusal("graph_degree: " + std::to_string(work) +
                            " labelings exceed budget " + std::to_string(budget));
  if (k == 0) return 0;

  // Label of each half-edge, filled from legs and the current labeling.
  const std::size_t halves = 3 * graph.vertex_count();
  std::vector<RadiusLabel> fixed(halves, -1);
  for (std::size_t i = 0; i < rho.size(); ++i) fixed[graph.legs()[i]] = rho[i];

  auto sweep = [&](std::size_t first_label) -> int64_t {
    std::vector<RadiusLabel> at = fixed;
    std::vector<std::size_t> digits(e, 0);
    if (e > 0) digits[0] = first_label;
    int64_t sum = 0;
    while (true) {
      for (std::size_t i = 0; i < e; ++i) {
        at[graph.edges()[i].first] = labels[digits[i]];
        at[graph.edges()[i].second] = labels[digits[i]];
      }
      int64_t prod = 1;
      for (std::size_t v = 0; v < graph.vertex_count() && prod != 0; ++v)
        prod *= table.count(at[3 * v], at[3 * v + 1], at[3 * v + 2]);
      sum += prod;
      std::size_t i = 1;
      while (i < e && ++digits[i] == k) digits[i++] = 0;
      if (i >= e) break;
    }
    return sum;
  };

  if (e == 0) return sweep(0);
  std::vector<std::future<int64_t>> jobs;
  for (std::size_t l = 0; l < k; ++l) jobs.push_back(std::async(std::launch::async, sweep, l));
  int64_t total = 0;
  for (auto& j : jobs) total += j.get();
  return total;
}

}  // namespace dormant
